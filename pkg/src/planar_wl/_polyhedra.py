"""Hard-coded polyhedral graphs.

Edge lists are 0-indexed transcriptions of standard drawings.  Face lists are
oriented consistently: every arc (u, v) of an edge lies on exactly one face.
"""

from __future__ import annotations

CUBE_EDGES = (
    (0, 1), (0, 3), (0, 4), (1, 2), (1, 5), (2, 3), (2, 6), (3, 7),
    (4, 5), (4, 7), (5, 6), (6, 7),
)
CUBE_FACES = (
    (0, 1, 5, 4), (0, 3, 2, 1), (0, 4, 7, 3), (1, 2, 6, 5),
    (2, 3, 7, 6), (4, 5, 6, 7),
)

OCTAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (2, 4),
    (2, 5), (3, 4), (3, 5), (4, 5),
)
OCTAHEDRON_FACES = (
    (0, 1, 3), (0, 2, 1), (0, 3, 5), (0, 5, 2),
    (1, 2, 4), (1, 4, 3), (2, 5, 4), (3, 4, 5),
)

DODECAHEDRON_EDGES = (
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
    (3, 8), (4, 9), (5, 10), (5, 11), (6, 11), (6, 12), (7, 12), (7, 13),
    (8, 13), (8, 14), (9, 10), (9, 14), (10, 15), (11, 16), (12, 17), (13, 18),
    (14, 19), (15, 16), (15, 19), (16, 17), (17, 18), (18, 19),
)
DODECAHEDRON_FACES = (
    (0, 1, 6, 11, 5), (0, 4, 3, 2, 1), (0, 5, 10, 9, 4), (1, 2, 7, 12, 6),
    (2, 3, 8, 13, 7), (3, 4, 9, 14, 8), (5, 11, 16, 15, 10), (6, 12, 17, 16, 11),
    (7, 13, 18, 17, 12), (8, 14, 19, 18, 13), (9, 10, 15, 19, 14), (15, 16, 17, 18, 19),
)

ICOSAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4),
    (1, 7), (2, 4), (2, 5), (2, 8), (3, 6), (3, 7), (3, 9), (4, 7),
    (4, 8), (4, 10), (5, 6), (5, 8), (5, 11), (6, 9), (6, 11), (7, 9),
    (7, 10), (8, 10), (8, 11), (9, 10), (9, 11), (10, 11),
)
ICOSAHEDRON_FACES = (
    (0, 1, 3), (0, 2, 1), (0, 3, 6), (0, 5, 2),
    (0, 6, 5), (1, 2, 4), (1, 4, 7), (1, 7, 3),
    (2, 5, 8), (2, 8, 4), (3, 7, 9), (3, 9, 6),
    (4, 8, 10), (4, 10, 7), (5, 6, 11), (5, 11, 8),
    (6, 9, 11), (7, 10, 9), (8, 11, 10), (9, 10, 11),
)

CUBOCTAHEDRON_EDGES = (
    (0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3),
    (2, 6), (2, 7), (3, 4), (3, 7), (4, 8), (4, 11), (5, 8), (5, 9),
    (6, 9), (6, 10), (7, 10), (7, 11), (8, 9), (8, 11), (9, 10), (10, 11),
)
CUBOCTAHEDRON_FACES = (
    (0, 1, 5), (0, 3, 2, 1), (0, 4, 3), (0, 5, 8, 4),
    (1, 2, 6), (1, 6, 9, 5), (2, 3, 7), (2, 7, 10, 6),
    (3, 4, 11, 7), (4, 8, 11), (5, 9, 8), (6, 10, 9),
    (7, 11, 10), (8, 9, 10, 11),
)

ICOSIDODECAHEDRON_EDGES = (
    (0, 1), (0, 4), (0, 5), (0, 9), (1, 2), (1, 5), (1, 6), (2, 3),
    (2, 6), (2, 7), (3, 4), (3, 7), (3, 8), (4, 8), (4, 9), (5, 11),
    (5, 12), (6, 13), (6, 14), (7, 15), (7, 16), (8, 17), (8, 18), (9, 10),
    (9, 19), (10, 11), (10, 19), (10, 20), (11, 12), (11, 20), (12, 13), (12, 21),
    (13, 14), (13, 21), (14, 15), (14, 22), (15, 16), (15, 22), (16, 17), (16, 23),
    (17, 18), (17, 23), (18, 19), (18, 24), (19, 24), (20, 25), (20, 29), (21, 25),
    (21, 26), (22, 26), (22, 27), (23, 27), (23, 28), (24, 28), (24, 29), (25, 26),
    (25, 29), (26, 27), (27, 28), (28, 29),
)
ICOSIDODECAHEDRON_FACES = (
    (0, 1, 5), (0, 4, 3, 2, 1), (0, 5, 11, 10, 9), (0, 9, 4),
    (1, 2, 6), (1, 6, 13, 12, 5), (2, 3, 7), (2, 7, 15, 14, 6),
    (3, 4, 8), (3, 8, 17, 16, 7), (4, 9, 19, 18, 8), (5, 12, 11),
    (6, 14, 13), (7, 16, 15), (8, 18, 17), (9, 10, 19),
    (10, 11, 20), (10, 20, 29, 24, 19), (11, 12, 21, 25, 20), (12, 13, 21),
    (13, 14, 22, 26, 21), (14, 15, 22), (15, 16, 23, 27, 22), (16, 17, 23),
    (17, 18, 24, 28, 23), (18, 19, 24), (20, 25, 29), (21, 26, 25),
    (22, 27, 26), (23, 28, 27), (24, 29, 28), (25, 26, 27, 28, 29),
)

RHOMBIC_DODECAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 6), (1, 7), (2, 4), (2, 5),
    (2, 8), (3, 5), (3, 6), (3, 9), (4, 10), (5, 11), (6, 12), (7, 10),
    (7, 12), (8, 10), (8, 11), (9, 11), (9, 12), (10, 13), (11, 13), (12, 13),
)
RHOMBIC_DODECAHEDRON_FACES = (
    (0, 1, 6, 3), (0, 2, 4, 1), (0, 3, 5, 2), (1, 4, 10, 7),
    (1, 7, 12, 6), (2, 5, 11, 8), (2, 8, 10, 4), (3, 6, 12, 9),
    (3, 9, 11, 5), (7, 10, 13, 12), (8, 11, 13, 10), (9, 12, 13, 11),
)

RHOMBIC_TRIACONTAHEDRON_EDGES = (
    (0, 12), (0, 13), (0, 15), (0, 16), (0, 17), (1, 12), (1, 13), (1, 14),
    (1, 18), (1, 19), (2, 12), (2, 14), (2, 15), (2, 20), (2, 21), (3, 13),
    (3, 17), (3, 18), (3, 23), (3, 24), (4, 14), (4, 19), (4, 20), (4, 25),
    (4, 26), (5, 15), (5, 16), (5, 21), (5, 22), (5, 27), (6, 16), (6, 17),
    (6, 22), (6, 23), (6, 28), (7, 18), (7, 19), (7, 24), (7, 25), (7, 29),
    (8, 20), (8, 21), (8, 26), (8, 27), (8, 30), (9, 23), (9, 24), (9, 28),
    (9, 29), (9, 31), (10, 25), (10, 26), (10, 29), (10, 30), (10, 31), (11, 22),
    (11, 27), (11, 28), (11, 30), (11, 31),
)
RHOMBIC_TRIACONTAHEDRON_FACES = (
    (0, 12, 2, 15), (0, 13, 1, 12), (0, 15, 5, 16), (0, 16, 6, 17),
    (0, 17, 3, 13), (1, 13, 3, 18), (1, 14, 2, 12), (1, 18, 7, 19),
    (1, 19, 4, 14), (2, 14, 4, 20), (2, 20, 8, 21), (2, 21, 5, 15),
    (3, 17, 6, 23), (3, 23, 9, 24), (3, 24, 7, 18), (4, 19, 7, 25),
    (4, 25, 10, 26), (4, 26, 8, 20), (5, 21, 8, 27), (5, 22, 6, 16),
    (5, 27, 11, 22), (6, 22, 11, 28), (6, 28, 9, 23), (7, 24, 9, 29),
    (7, 29, 10, 25), (8, 26, 10, 30), (8, 30, 11, 27), (9, 28, 11, 31),
    (9, 31, 10, 29), (10, 31, 11, 30),
)

RHOMBICUBOCTAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 4), (0, 5), (1, 3), (1, 6), (1, 7), (2, 3),
    (2, 8), (2, 9), (3, 10), (3, 11), (4, 5), (4, 8), (4, 12), (5, 7),
    (5, 13), (6, 7), (6, 10), (6, 14), (7, 15), (8, 9), (8, 16), (9, 11),
    (9, 17), (10, 11), (10, 18), (11, 19), (12, 13), (12, 16), (12, 20), (13, 15),
    (13, 20), (14, 15), (14, 18), (14, 21), (15, 21), (16, 17), (16, 22), (17, 19),
    (17, 22), (18, 19), (18, 23), (19, 23), (20, 21), (20, 22), (21, 23), (22, 23),
)
RHOMBICUBOCTAHEDRON_FACES = (
    (0, 1, 7, 5), (0, 2, 3, 1), (0, 4, 8, 2), (0, 5, 4),
    (1, 3, 10, 6), (1, 6, 7), (2, 8, 9), (2, 9, 11, 3),
    (3, 11, 10), (4, 5, 13, 12), (4, 12, 16, 8), (5, 7, 15, 13),
    (6, 10, 18, 14), (6, 14, 15, 7), (8, 16, 17, 9), (9, 17, 19, 11),
    (10, 11, 19, 18), (12, 13, 20), (12, 20, 22, 16), (13, 15, 21, 20),
    (14, 18, 23, 21), (14, 21, 15), (16, 22, 17), (17, 22, 23, 19),
    (18, 19, 23), (20, 21, 23, 22),
)

RHOMBICOSIDODECAHEDRON_EDGES = (
    (0, 1), (0, 4), (0, 5), (0, 6), (1, 2), (1, 7), (1, 8), (2, 3),
    (2, 9), (2, 10), (3, 4), (3, 11), (3, 12), (4, 13), (4, 14), (5, 6),
    (5, 14), (5, 15), (6, 7), (6, 16), (7, 8), (7, 17), (8, 9), (8, 18),
    (9, 10), (9, 19), (10, 11), (10, 20), (11, 12), (11, 21), (12, 13), (12, 22),
    (13, 14), (13, 23), (14, 24), (15, 16), (15, 29), (15, 30), (16, 25), (16, 30),
    (17, 18), (17, 25), (17, 31), (18, 26), (18, 31), (19, 20), (19, 26), (19, 32),
    (20, 27), (20, 32), (21, 22), (21, 27), (21, 33), (22, 28), (22, 33), (23, 24),
    (23, 28), (23, 34), (24, 29), (24, 34), (25, 35), (25, 36), (26, 37), (26, 38),
    (27, 39), (27, 40), (28, 41), (28, 42), (29, 43), (29, 44), (30, 35), (30, 44),
    (31, 36), (31, 37), (32, 38), (32, 39), (33, 40), (33, 41), (34, 42), (34, 43),
    (35, 36), (35, 45), (36, 46), (37, 38), (37, 47), (38, 48), (39, 40), (39, 49),
    (40, 50), (41, 42), (41, 51), (42, 52), (43, 44), (43, 53), (44, 54), (45, 46),
    (45, 54), (45, 55), (46, 47), (46, 55), (47, 48), (47, 56), (48, 49), (48, 56),
    (49, 50), (49, 57), (50, 51), (50, 57), (51, 52), (51, 58), (52, 53), (52, 58),
    (53, 54), (53, 59), (54, 59), (55, 56), (55, 59), (56, 57), (57, 58), (58, 59),
)
RHOMBICOSIDODECAHEDRON_FACES = (
    (0, 1, 7, 6), (0, 4, 3, 2, 1), (0, 5, 14, 4), (0, 6, 5),
    (1, 2, 9, 8), (1, 8, 7), (2, 3, 11, 10), (2, 10, 9),
    (3, 4, 13, 12), (3, 12, 11), (4, 14, 13), (5, 6, 16, 15),
    (5, 15, 29, 24, 14), (6, 7, 17, 25, 16), (7, 8, 18, 17), (8, 9, 19, 26, 18),
    (9, 10, 20, 19), (10, 11, 21, 27, 20), (11, 12, 22, 21), (12, 13, 23, 28, 22),
    (13, 14, 24, 23), (15, 16, 30), (15, 30, 44, 29), (16, 25, 35, 30),
    (17, 18, 31), (17, 31, 36, 25), (18, 26, 37, 31), (19, 20, 32),
    (19, 32, 38, 26), (20, 27, 39, 32), (21, 22, 33), (21, 33, 40, 27),
    (22, 28, 41, 33), (23, 24, 34), (23, 34, 42, 28), (24, 29, 43, 34),
    (25, 36, 35), (26, 38, 37), (27, 40, 39), (28, 42, 41),
    (29, 44, 43), (30, 35, 45, 54, 44), (31, 37, 47, 46, 36), (32, 39, 49, 48, 38),
    (33, 41, 51, 50, 40), (34, 43, 53, 52, 42), (35, 36, 46, 45), (37, 38, 48, 47),
    (39, 40, 50, 49), (41, 42, 52, 51), (43, 44, 54, 53), (45, 46, 55),
    (45, 55, 59, 54), (46, 47, 56, 55), (47, 48, 56), (48, 49, 57, 56),
    (49, 50, 57), (50, 51, 58, 57), (51, 52, 58), (52, 53, 59, 58),
    (53, 54, 59), (55, 56, 57, 58, 59),
)
