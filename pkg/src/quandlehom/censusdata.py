"""Frozen expected values for the census and word-scan reproduction harness.

All counts refer to the published catalogue of the 790 connected quandles of
order < 48, distributed as 1-based operation matrices (left-distributive;
load with convention="left").  Quandles are identified as Q(n,i) by the first
two integers found in each matrix filename.
"""

from __future__ import annotations

# type census: (type, number of catalogue quandles of that type)
TYPE_CENSUS: tuple[tuple[int, int], ...] = (
    (2, 117), (3, 38), (4, 90), (5, 16), (6, 117), (7, 15), (8, 38), (9, 13),
    (10, 31), (11, 10), (12, 52), (13, 4), (14, 19), (15, 14), (16, 9),
    (18, 27), (20, 19), (21, 14), (22, 11), (23, 22), (24, 9), (26, 5),
    (28, 17), (30, 15), (31, 6), (36, 12), (40, 16), (42, 12), (46, 22),
)

# exponent census: (exponent of the translation group, count)
EXPONENT_CENSUS: tuple[tuple[int, int], ...] = (
    (6, 11), (10, 4), (12, 59), (14, 3), (15, 1), (18, 47), (20, 15), (21, 2),
    (22, 1), (24, 38), (26, 1), (30, 22), (34, 1), (36, 31), (38, 1), (39, 6),
    (40, 6), (42, 22), (46, 1), (48, 4), (50, 5), (52, 2), (54, 9), (55, 4),
    (57, 2), (58, 1), (60, 44), (62, 7), (66, 4), (68, 2), (70, 3), (72, 13),
    (74, 1), (78, 13), (82, 1), (84, 24), (86, 1), (90, 9), (93, 2), (94, 1),
    (100, 10), (110, 4), (111, 2), (114, 2), (116, 2), (120, 27), (129, 2),
    (136, 4), (140, 6), (148, 2), (155, 4), (156, 10), (164, 2), (168, 4),
    (171, 6), (180, 12), (186, 2), (203, 6), (205, 4), (210, 4), (222, 2),
    (240, 3), (253, 10), (258, 2), (272, 8), (301, 6), (310, 4), (328, 4),
    (330, 16), (333, 6), (342, 6), (360, 1), (406, 6), (410, 4), (420, 10),
    (444, 4), (465, 8), (506, 10), (602, 6), (666, 6), (812, 12), (820, 8),
    (840, 3), (903, 12), (930, 8), (1081, 22), (1332, 12), (1640, 16),
    (1806, 12), (2162, 22), (2520, 2),
)

CATALOGUE_SIZE = 790
KEI_COUNT = 117          # = the type-2 census entry

# the 20 catalogue quandles satisfying x abab = x (none of them keis)
ABAB_SATISFIERS: frozenset[tuple[int, int]] = frozenset({
    (5, 2), (5, 3), (9, 3), (13, 4), (13, 7), (17, 3), (17, 12),
    (25, 4), (25, 5), (25, 6), (25, 7), (25, 8), (29, 11), (29, 16),
    (37, 45), (37, 5), (41, 2), (41, 3), (45, 36), (45, 37),
})

# length-5 two-letter words surviving the single-occurrence and
# consecutive-run exclusions; satisfied by no catalogue quandle
LENGTH5_OPEN_WORDS = ("aabab", "abaab", "ababa", "ababb", "abbab")

# length-6: the triple satisfied by the same 202 quandles (all 117 keis among
# them), and the word satisfied by 55 quandles of which 4 are keis
LENGTH6_TRIPLE = ("aabaab", "abaaba", "abbabb")
LENGTH6_TRIPLE_COUNT = 202
LENGTH6_TRIPLE_KEI_COUNT = 117
LENGTH6_REPEAT_WORD = "ababab"
LENGTH6_REPEAT_COUNT = 55
LENGTH6_REPEAT_KEI_COUNT = 4
# length-6 two-letter words (past the exclusions) satisfied by no catalogue quandle
LENGTH6_OPEN_WORDS = (
    "aaabab", "aababa", "aabbab", "aababb", "abaaab", "abaabb",
    "ababbb", "abbaba", "abbaab", "ababaa", "ababba", "abbbab",
)

# length-7: each order-8 affine quandle over GF(8) satisfies exactly one
# 7-word family among the 42 two-letter candidates surviving the exclusions;
# attributions fixed by exhaustive scan over all 8^3 assignments per word.
# Transposing a table swaps the multiplier t with 1-t, whose minimal
# polynomials are exactly this reciprocal pair, so the convention matters.
LENGTH7_FAMILY_A = ("aababba", "abbbaba", "ababbaa", "aabbbab",
                    "aaababb", "abaabbb", "abbaaab")
LENGTH7_FAMILY_B = ("aabbaba", "abbabaa", "ababbba", "aababbb",
                    "aaabbab", "abaaabb", "abbbaab")
LENGTH7_BY_MODULUS = {
    (1, 0, 1, 1): LENGTH7_FAMILY_B,     # t^3 + t^2 + 1
    (1, 1, 0, 1): LENGTH7_FAMILY_A,     # t^3 + t + 1
}
LENGTH7_SURVIVOR_COUNT = 42
