"""Published counts and member lists, as printed, for ``table --verify``.

Entries are transcribed verbatim.  Values later shown to be misprints are
listed in ERRATA with the recomputed value; they are reported, never hidden.
"""

# (n, printed factorization, kind): C = Carmichael, P = odd prime power,
# W = any other weak Carmichael number.  All members below 25000.
TABLE1 = (
    (9, "3^2", "P"), (25, "5^2", "P"), (27, "3^3", "P"),
    (45, "3^2·5", "W"), (49, "7^2", "P"), (81, "3^4", "P"),
    (121, "11^2", "P"), (125, "5^3", "P"), (169, "13^2", "P"),
    (225, "3^2·5^2", "W"), (243, "3^5", "P"), (289, "17^2", "P"),
    (325, "5^2·13", "W"), (343, "7^3", "P"), (361, "19^2", "P"),
    (405, "3^4·5", "W"), (529, "23^2", "P"), (561, "3·11·17", "C"),
    (625, "5^4", "P"), (637, "7^2·13", "W"), (729, "3^6", "P"),
    (841, "29^2", "P"), (891, "3^4·11", "W"), (961, "31^2", "P"),
    (1105, "5·13·17", "C"), (1125, "3^2·5^3", "W"), (1225, "5^2·7^2", "W"),
    (1331, "11^3", "P"), (1369, "37^2", "P"), (1377, "3^4·17", "W"),
    (1681, "41^2", "P"), (1729, "7·13·19", "C"), (1849, "43^2", "P"),
    (2025, "3^4·5^2", "W"), (2187, "3^7", "P"), (2197, "13^3", "P"),
    (2209, "47^2", "P"), (2401, "7^4", "P"), (2465, "5·17·29", "C"),
    (2809, "53^2", "P"), (2821, "7·13·31", "C"), (3125, "5^5", "P"),
    (3321, "3^4·41", "W"), (3481, "59^2", "P"), (3645, "3^6·5", "W"),
    (3721, "61^2", "P"), (3751, "11^2·31", "W"), (3825, "3^2·5^2·17", "W"),
    (4225, "5^2·13^2", "W"), (4489, "67^2", "P"), (4913, "17^3", "P"),
    (4961, "11^2·41", "W"), (5041, "71^2", "P"), (5329, "73^2", "P"),
    (5589, "3^5·23", "W"), (5625, "3^2·5^4", "W"), (6241, "79^2", "P"),
    (6517, "7^3·19", "W"), (6525, "3^2·5^2·29", "W"), (6561, "3^8", "P"),
    (6601, "7·23·41", "C"), (6859, "19^3", "P"), (6889, "83^2", "P"),
    (7381, "11^2·61", "W"), (7921, "89^2", "P"), (8125, "5^4·13", "W"),
    (8281, "7^2·13^2", "W"), (8625, "3·5^3·23", "W"), (8911, "7·19·67", "C"),
    (9409, "97^2", "P"), (9801, "3^4·11^2", "W"), (10125, "3^4·5^3", "W"),
    (10201, "101^2", "P"), (10585, "5·29·73", "C"), (10609, "103^2", "P"),
    (10625, "5^4·17", "W"), (11449, "107^2", "P"), (11881, "109^2", "P"),
    (12025, "5^2·13·37", "W"), (12167, "23^3", "P"), (12769, "113^2", "P"),
    (13357, "19^2·37", "W"), (13833, "3^2·29·53", "W"), (14161, "7^2·17^2", "W"),
    (14641, "11^4", "P"), (15625, "5^6", "P"), (15841, "7·31·73", "C"),
    (15925, "5^2·7^2·13", "W"), (16129, "127^2", "P"), (16807, "7^5", "P"),
    (17161, "131^2", "P"), (18225, "3^6·5^2", "W"), (18769, "137^2", "P"),
    (19321, "139^2", "P"), (19683, "3^9", "P"), (21141, "3^6·29", "W"),
    (22201, "149^2", "P"), (22801, "151^2", "P"), (23409, "3^2·5·23^2", "W"),
    (23805, "3^2·5·23^2", "W"), (24389, "29^3", "P"), (24649, "157^2", "P"),
)
TABLE1_SUMMARY = {"total": 102, "C": 9, "P": 57, "other": 36}

# (N, k) -> (C_k, C, W_k', W'); None where the printed cell is empty.
# The row printed a second time as (10^5, 4) is the k = 5 row.
TABLE4 = {
    (10**3, 2): (None, 1, 6, 6),
    (10**4, 2): (None, 7, 22, 25),
    (10**5, 2): (None, 16, 51, 70),
    (10**6, 2): (None, 43, 107, 192),
    (2 * 10**6, 2): (None, 55, 132, 243),
    (10**3, 3): (1, None, 0, None),
    (10**4, 3): (7, None, 3, None),
    (10**5, 3): (12, None, 18, None),
    (10**6, 3): (23, None, 68, None),
    (2 * 10**6, 3): (30, None, 89, None),
    (10**4, 4): (0, None, 0, None),
    (10**5, 4): (4, None, 1, None),
    (10**6, 4): (19, None, 17, None),
    (2 * 10**6, 4): (23, None, 22, None),
    (10**5, 5): (0, None, 0, None),
    (10**6, 5): (1, None, 0, None),
    (2 * 10**6, 5): (2, None, 0, None),
}
TABLE4_TOTAL = {2 * 10**6: (55, 243)}

# (a, b, c, d) -> (W_2, p_2, w_2, P, C); None where the printed cell is empty.
TABLE3 = {
    (1, 10**6, 1, 10**6): (107, 463, 856087, 218, 43),
    (10**6, 2 * 10**6, 1, 2 * 10**6): (25, 733, 1610401, 65, 12),
    (2 * 10**6, 10**7, 1, 10**3): (69, 937, 2632033, 250, 50),
    (2 * 10**6, 10**7, 10**3, 10**4): (5, 1861, 6924781, None, None),
    (2 * 10**6, 10**7, 10**4, 10**7): (0, None, None, None, None),
    (10**7, 10**8, 1, 10**3): (120, 997, 27805333, 846, 150),
    (10**7, 10**8, 10**3, 10**4): (43, None, 81390625, None, None),
    (10**7, 10**8, 10**4, 10**8): (0, None, None, None, None),
}

# N -> (C_3, W_3', W_3' witness with maximal r, C_3 witness with maximal r)
TABLE5 = {
    10**3: (1, 0, None, 561),
    10**4: (7, 3, 6525, 8911),
    10**5: (12, 18, 25425, 52633),
    10**6: (23, 68, 750925, 530881),
    2 * 10**6: (30, 89, 1269621, 1193221),
    10**7: (47, 186, 8927425, 8134561),
    10**8: (84, 413, 52280425, 67902031),
}

# (table, key, field) -> (printed, recomputed, reason)
ERRATA = {
    ("table1", 23409, "factorization"): (
        "3^2·5·23^2", "3^4·17^2", "printed factorization multiplies to 23805, not 23409"),
    ("table5", 10**8, "W_3' witness"): (
        52280425, 78418081, "5^2·409·5113 is not weak Carmichael: 408 does not divide n-1"),
}

SCAN_COUNTS = {
    # (class, exclude prime powers, hi) -> count over [1, hi)
    ("weak", False, 25000): 102,
    ("weak", True, 10**6): 235,
    ("carmichael", False, 2 * 10**6): 55,
}

GIUGA_BELOW_1E5 = (30, 858, 1722, 66198)
TWIN_PAIRS = ((2465, 2821), (62745, 63973), (656601, 658801), (658801, 670033))
