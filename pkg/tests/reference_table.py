"""Frozen reference data for the Hermitian-over-GF(4) results table.

PUBLISHED_ROWS transcribes the published table verbatim: one
(n, nbar, nu, t, count) row per even length 10..286 where nontrivial
Hermitian self-dual cyclic codes over GF(4) were reported, 98 rows.

Three published entries contradict the existence theorem they were
derived from, so they are quarantined in PUBLISHED_ERRATA with the
corrected values:

  * nbar = 57 (rows n=114 and n=228): 2^9 = 512 = 8*57 + 56, so
    2^9 == -1 (mod 57) with 9 odd -- the existence condition fails and
    no nontrivial code exists (t = 0, count 1).  Confirmed by a direct
    coset-orbit count (all nine 4-cyclotomic cosets mod 57 are fixed by
    a -> -2a) and by exhaustively testing all 987 half-degree divisors
    of x^114 - 1 over GF(4): only the trivial generator is self-dual.
  * n = 270 (nbar = 135): mod 135 there are 21 4-cyclotomic cosets of
    which 7 are fixed by a -> -2a, so t = (21-7)/2 = 7 and the count is
    3^7 = 2187, not the published t=8 / 6561.

CORRECT_ROWS is PUBLISHED_ROWS with the errata applied: the two
nbar=57 rows removed and the n=270 row fixed -- 96 rows.

HMIND freezes the published best-minimum-distance column (n <= 100).
"""

# (n, nbar, nu, t, count) exactly as published, row by row
PUBLISHED_ROWS = [
    (10, 5, 1, 1, 3), (14, 7, 1, 1, 3), (20, 5, 2, 1, 5),
    (26, 13, 1, 1, 3), (28, 7, 2, 1, 5), (30, 15, 1, 3, 27),
    (34, 17, 1, 2, 9), (40, 5, 3, 1, 9), (42, 21, 1, 3, 27),
    (46, 23, 1, 1, 3), (50, 25, 1, 2, 9), (52, 13, 2, 1, 5),
    (56, 7, 3, 1, 9), (58, 29, 1, 1, 3), (60, 15, 2, 3, 125),
    (62, 31, 1, 3, 27), (68, 17, 2, 2, 25), (70, 35, 1, 4, 81),
    (74, 37, 1, 1, 3), (78, 39, 1, 3, 27), (80, 5, 4, 1, 17),
    (82, 41, 1, 2, 9), (84, 21, 2, 3, 125), (90, 45, 1, 5, 243),
    (92, 23, 2, 1, 5), (94, 47, 1, 1, 3), (98, 49, 1, 2, 9),
    (100, 25, 2, 2, 25), (102, 51, 1, 6, 729), (104, 13, 3, 1, 9),
    (106, 53, 1, 1, 3), (110, 55, 1, 3, 27), (112, 7, 4, 1, 17),
    (114, 57, 1, 2, 9), (116, 29, 2, 1, 5), (120, 15, 3, 3, 729),
    (122, 61, 1, 1, 3), (124, 31, 2, 3, 125), (126, 63, 1, 9, 19683),
    (130, 65, 1, 6, 729), (136, 17, 3, 2, 81), (138, 69, 1, 3, 27),
    (140, 35, 2, 4, 625), (142, 71, 1, 1, 3), (146, 73, 1, 4, 81),
    (148, 37, 2, 1, 5), (150, 75, 1, 6, 729), (154, 77, 1, 3, 27),
    (156, 39, 2, 3, 125),
    (158, 79, 1, 1, 3), (160, 5, 5, 1, 33), (164, 41, 2, 2, 25),
    (168, 21, 3, 3, 729), (170, 85, 1, 11, 177147), (174, 87, 1, 3, 27),
    (178, 89, 1, 4, 81), (180, 45, 2, 5, 3125), (182, 91, 1, 8, 6561),
    (184, 23, 3, 1, 9), (186, 93, 1, 9, 19683), (188, 47, 2, 1, 5),
    (190, 95, 1, 3, 27), (194, 97, 1, 2, 9), (196, 49, 2, 2, 25),
    (200, 25, 3, 2, 81), (202, 101, 1, 1, 3), (204, 51, 2, 6, 15625),
    (206, 103, 1, 1, 3), (208, 13, 4, 1, 17), (210, 105, 1, 12, 531441),
    (212, 53, 2, 1, 5), (218, 109, 1, 3, 27), (220, 55, 2, 3, 125),
    (222, 111, 1, 3, 27), (224, 7, 5, 1, 33), (226, 113, 1, 4, 81),
    (228, 57, 2, 2, 25), (230, 115, 1, 4, 81), (232, 29, 3, 1, 9),
    (234, 117, 1, 9, 19683), (238, 119, 1, 7, 2187), (240, 15, 4, 3, 4913),
    (244, 61, 2, 1, 5), (246, 123, 1, 6, 729), (248, 31, 3, 3, 729),
    (250, 125, 1, 3, 27), (252, 63, 2, 9, 1953125), (254, 127, 1, 9, 19683),
    (260, 65, 2, 6, 15625), (266, 133, 1, 7, 2187), (270, 135, 1, 8, 6561),
    (272, 17, 4, 2, 289), (274, 137, 1, 2, 9), (276, 69, 2, 3, 125),
    (280, 35, 3, 4, 6561), (282, 141, 1, 3, 27), (284, 71, 2, 1, 5),
    (286, 143, 1, 3, 27),
]

# published row -> theorem-derived correction ((nbar, nu, t, count) or None
# when no nontrivial codes exist, i.e. the row should be absent)
PUBLISHED_ERRATA = {
    114: None,
    228: None,
    270: (135, 1, 7, 2187),
}

CORRECT_ROWS = []
for _row in PUBLISHED_ROWS:
    _n = _row[0]
    if _n in PUBLISHED_ERRATA:
        _fix = PUBLISHED_ERRATA[_n]
        if _fix is not None:
            CORRECT_ROWS.append((_n, *_fix))
    else:
        CORRECT_ROWS.append(_row)

assert len(PUBLISHED_ROWS) == 98
assert len(CORRECT_ROWS) == 96

# published HMinD column: best minimum distance over the Hermitian
# self-dual cyclic codes of length n over GF(4), for n <= 100
HMIND = {
    10: 4, 14: 4, 20: 4, 26: 6, 28: 4, 30: 8, 34: 8, 40: 6, 42: 8,
    46: 8, 50: 4, 52: 6, 56: 6, 58: 12, 60: 8, 62: 10, 68: 12, 70: 14,
    74: 12, 78: 12, 80: 6, 82: 12, 84: 10, 90: 8, 92: 8, 94: 12,
    98: 4, 100: 8,
}
