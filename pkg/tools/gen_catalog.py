#!/usr/bin/env python3
"""Regenerate the reference catalog shipped with the package.

The catalog is the single audited transcription of all reference data:
classification tables of automorphism-group orders, the fixture tables of
optimal curve models, the exceptional-curve table, two special Gram forms,
and the rank-4/5 lattice entries with generators and relations.  Run from
the repository root:

    python3 tools/gen_catalog.py

writes src/optcurves/data/catalog.json and its .sha256.  The test suite
verifies every matrix entry computationally, so a transcription slip here
cannot survive CI.
"""

import hashlib
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "optcurves" / "data"


def F(*pairs):
    """Factored order: F((2,4),(3,1)) -> 2^4 * 3."""
    return [[p, e] for p, e in pairs]


# -- classification tables (orders of Aut of irreducible unimodular
#    hermitian modules, by discriminant and rank) --------------------------

TABLES = {
    "-3": {
        "2": [], "3": [], "4": [], "5": [],
        "6": [F((2, 9), (3, 7), (5, 1), (7, 1))],
        "7": [],
        "8": [F((2, 14), (3, 6), (5, 2), (7, 1))],
        "9": [F((2, 8), (3, 12), (5, 1), (7, 1))],
        "10": [F((2, 17), (3, 5), (5, 2), (7, 1))],
    },
    "-4": {
        "2": [], "3": [],
        "4": [F((2, 10), (3, 2), (5, 1))],
        "5": [],
        "6": [F((2, 15), (3, 2), (5, 1))],
        "7": [F((2, 11), (3, 4), (5, 1), (7, 1))],
        "8": [
            F((2, 15), (3, 5), (5, 2), (7, 1)),
            F((2, 22), (3, 2), (5, 1), (7, 1)),
            F((2, 21), (3, 4), (5, 2)),
            F((2, 21), (3, 2)),
        ],
        "9": [
            F((2, 16), (3, 3), (5, 1)),
            F((2, 10), (3, 4), (5, 2), (7, 1)),
            F((2, 10), (3, 4), (5, 2), (7, 1)),
        ],
        "10": [
            F((2, 27), (3, 4), (5, 2), (7, 1)),
            F((2, 25), (3, 4), (5, 2)),
            F((2, 17), (3, 5), (5, 1), (7, 1)),
            F((2, 25), (3, 2)),
            F((2, 19), (3, 2), (5, 1), (7, 1)),
            F((2, 17), (3, 3), (5, 1)),
            F((2, 11), (3, 4), (5, 2), (7, 1)),
            F((2, 23), (3, 1), (5, 1)),
            F((2, 19), (3, 2)),
            F((2, 11), (3, 4), (5, 2)),
            F((2, 10), (3, 4), (5, 2)),
        ],
    },
    "-7": {
        "2": [],
        "3": [F((2, 4), (3, 1), (7, 1))],
        "4": [F((2, 7), (3, 2))],
        "5": [F((2, 8), (3, 1), (5, 1))],
        "6": [
            F((2, 9), (3, 2), (7, 2)),
            F((2, 10), (3, 2), (5, 1)),
            F((2, 9), (3, 2), (5, 1)),
            F((2, 5), (3, 2), (5, 1), (7, 1)),
        ],
        "7": [
            F((2, 10), (3, 4), (5, 1), (7, 1)),
            F((2, 11), (3, 2), (5, 1), (7, 1)),
            F((2, 11), (3, 3), (7, 1)),
            F((2, 8), (3, 2), (5, 1), (7, 1)),
            F((2, 11), (3, 2)),
            F((2, 10), (3, 2)),
            F((2, 6), (3, 3), (5, 1)),
            F((2, 10), (3, 1)),
            F((2, 7), (3, 1), (5, 1)),
        ],
    },
    "-8": {
        "2": [F((2, 4), (3, 1))],
        "3": [],
        "4": [F((2, 7), (3, 1)), F((2, 8), (3, 2)), F((2, 9), (3, 2))],
        "5": [F((2, 5), (3, 2), (5, 1))],
        "6": [
            F((2, 10), (3, 2), (5, 1)),
            F((2, 12), (3, 3)),
            F((2, 8), (3, 4), (5, 1)),
            F((2, 13), (3, 4)),
            F((2, 10), (3, 2), (5, 1)),
            F((2, 11), (3, 2)),
            F((2, 10), (3, 1)),
            F((2, 6), (3, 2), (5, 1)),
            F((2, 7), (3, 2)),
            F((2, 11)),
            F((2, 12), (3, 1)),
        ],
        "7": [
            F((2, 10), (3, 4), (5, 1), (7, 1)),
            F((2, 10), (3, 2), (5, 1)),
            F((2, 9), (3, 3), (5, 1)),
            F((2, 9), (3, 3), (5, 1)),
            F((2, 5), (3, 2), (5, 1), (7, 1)),
            F((2, 8), (3, 2)),
            F((2, 10), (3, 2)),
            F((2, 10), (3, 1)),
            F((2, 5), (3, 2), (5, 1)),
            F((2, 8), (3, 1)),
            F((2, 5), (3, 3)),
            F((2, 15), (3, 4)),
        ],
    },
}

TABLE_NOTES = [
    "d=-4 rank 9: the source list prints 2^10*3^4*5^2*7 twice and ends "
    "with a trailing comma; stored verbatim (duplicate kept).",
    "d=-7 rank 7: missing separator between 2^11*3^3*7 and 2^8*3^2*5*7 in "
    "the source; stored as two orders.",
    "d=-8 rank 6 and rank 7 contain repeated orders in the source; stored "
    "verbatim.",
]

# orders quoted in prose for d=-11 (no full table in the source)
PROSE_ORDERS = {
    "-11": {
        "4": [F((2, 5), (3, 2)), F((2, 4), (3, 1), (5, 1)), F((2, 4), (3, 2))],
        "5": [
            F((2, 3), (3, 1), (5, 1), (11, 1)),
            F((2, 4), (3, 1), (5, 1)),
            F((2, 4), (3, 1)),
        ],
    }
}

# the rank-7 d=-8 order partition used in the genus-7 argument
T_SETS = {
    "T1": [
        F((2, 10), (3, 4), (5, 1), (7, 1)),
        F((2, 10), (3, 2), (5, 1)),
        F((2, 9), (3, 3), (5, 1)),
        F((2, 9), (3, 3), (5, 1)),
        F((2, 5), (3, 2), (5, 1), (7, 1)),
        F((2, 5), (3, 4)),
        F((2, 5), (3, 2), (5, 1)),
    ],
    "T2": [F((2, 8), (3, 3)), F((2, 10), (3, 2)), F((2, 10), (3, 1)), F((2, 8), (3, 1))],
    "T3": [F((2, 5), (3, 3))],
    "notes": [
        "T1: the source prints the run '2^5*3^4 2^5*3^2*5' with a missing "
        "comma; stored as two orders (ambiguous)."
    ],
}

# exceptional curves y^2 = x^p - x: genus (p-1)/2, |Aut| = 2p(p^2-1); the
# printed p=11 order disagrees with the formula and is kept verbatim.
EXCEPTIONAL = [
    {"p": 7, "g": 3, "printed_order": F((2, 5), (3, 1), (7, 1))},
    {"p": 11, "g": 5, "printed_order": F((2, 2), (3, 2), (5, 1), (11, 1))},
    {"p": 13, "g": 6, "printed_order": F((2, 4), (3, 1), (7, 1), (13, 1))},
    {"p": 17, "g": 8, "printed_order": F((2, 6), (3, 2), (17, 1))},
    {"p": 19, "g": 9, "printed_order": F((2, 4), (3, 2), (5, 1), (19, 1))},
]

# -- special Gram forms ----------------------------------------------------
# entries are [a, b] meaning a + b*omega, or plain ints

SPECIAL_FORMS = {
    "genus2_d-11": {
        "discriminant": -11,
        "gram_lower": [[2], [[0, -1], 2]],
    },
    "genus3_d-19": {
        "discriminant": -19,
        "gram_lower": [[2], [1, 3], [-1, [-1, -1], 3]],
    },
}

# -- fixture tables (d = -11 optimal curves below 10^4) --------------------
# maximal/minimal: y^2 = x^3 + a x + b as [a, b]
# glue: [a, b, c, d] meaning the pair y^2 = x^3+ax+b, y^2 = (x^3+ax+b)(cx+d)
# genus2: z^2 = A x^6 + B x^4 + C x^2 + D as [A, B, C, D]
# errata: fields whose source value fails its own count and the value we
# verified instead; "published" keeps the original.

FIXTURES_11 = [
    {"q": 23, "maximal": [1, 11], "minimal": [12, 8],
     "glue": [1, 11, 1, 19], "genus2": [1, 12, 3, 10]},
    {"q": 59, "maximal": [2, 22], "minimal": [30, 47],
     "glue": [2, 22, 1, 49], "genus2": [1, 30, 7, 39]},
    {"q": 113, "maximal": [5, 44], "minimal": [101, 10],
     "glue": [5, 44, 1, 24], "genus2": [1, 41, 38, 112]},
    {"q": 383, "maximal": [1, 91], "minimal": [46, 301],
     "glue": [1, 91, 1, 135], "genus2": [1, 361, 290, 356]},
    {"q": 509, "maximal": [1, 70], "minimal": [382, 136],
     "glue": [1, 70, 2, 208], "genus2": [191, 431, 191, 501]},
    {"q": 563, "maximal": [2, 363], "minimal": [282, 538],
     "glue": [2, 363, 1, 189], "genus2": [1, 559, 195, 212]},
    {"q": 1193, "maximal": [5, 11], "minimal": [1061, 619],
     "glue": [5, 11, 1, 1017], "genus2": [1, 528, 1072, 657],
     "errata": {"genus2": [528, 1074, 1072, 657]}},
    {"q": 1409, "maximal": [6, 221], "minimal": [940, 1365],
     "glue": [6, 221, 3, 1135], "genus2": [835, 187, 516, 278]},
    {"q": 3083, "maximal": [2, 1009], "minimal": [1542, 2053],
     "glue": [2, 1009, 1, 2569], "genus2": [1, 1542, 259, 1880]},
    {"q": 4973, "maximal": [1, 1748], "minimal": [3730, 2705],
     "glue": [1, 1748, 2, 2341], "genus2": [1865, 987, 4365, 4633]},
    {"q": 6323, "maximal": [2, 221], "minimal": [3162, 818],
     "glue": [2, 221, 1, 1274], "genus2": [1, 2501, 520, 3216],
     "errata": {"minimal": [3161, 818], "genus2": [1, 2501, 520, 3218]}},
]

# actual discriminant m^2 - 4q per row; the q=563 row is the odd one out
for _row in FIXTURES_11:
    _m = 0
    while (_m + 1) ** 2 <= 4 * _row["q"]:
        _m += 1
    _row["d"] = _m * _m - 4 * _row["q"]
    _row["m"] = _m

FIXTURE_NOTES = [
    "q=563 sits in the source table although floor(2*sqrt(563))^2 - 4*563 "
    "= -43, not -11; its models are optimal for m=47 and are kept, with "
    "the actual discriminant recorded per row.",
    "q=653 and q=8933 have discriminant -11 below 10^4 but no source "
    "table row; the scans cover them, the fixtures cannot.",
    "errata rows: published value fails its own optimal count; the stored "
    "value is verified exactly (6323 minimal lies in the twist class of "
    "the maximal model; 1193 and 6323 genus-2 corrections recount to "
    "q+1+2m and match the gluing construction).",
]

# -- rank-4/5 lattice entries over d = -19 ---------------------------------
# gram_lower rows as printed; generators as full matrices; relations as
# [lhs, rhs] pairs in postfix (generator names, integer scalars, '*', '^').

W = lambda a, b: [a, b]  # noqa: E731  (a + b*omega shorthand)

APPENDIX = [
    {
        "name": "dim4_H1", "dim": 4, "aut_order": F((2, 4), (3, 1)),
        "gram_lower": [[3], [-1, 3], [-1, W(1, 1), 3], [W(2, -1), 0, -1, 3]],
        "generators": {
            "a2": [[0, 0, 1, 0],
                   [0, W(1, 1), -3, -1],
                   [-1, W(-2, 1), W(-1, -1), 0],
                   [0, 1, 0, 0]],
            "a3": [[1, 0, 0, 0],
                   [-3, -1, 0, W(1, 1)],
                   [W(-1, -1), 0, -1, W(-2, 1)],
                   [0, 0, 0, 1]],
        },
        "relations": [["a2 4 ^", "-1"], ["a3 2 ^", "1"],
                      ["a2 2 ^ a3 *", "a3 a2 2 ^ * -1 *"]],
    },
    {
        "name": "dim4_H5", "dim": 4, "aut_order": F((2, 3), (3, 2)),
        "gram_lower": [[2], [0, 2], [0, -1, 2], [-1, W(-1, 1), W(1, -1), 4]],
        "generators": {
            "a3": [[-2, W(-1, 1), W(1, -1), -3],
                   [0, 1, 0, 0],
                   [0, -1, -1, 0],
                   [1, 0, W(-1, 1), 2]],
            "a5": [[-1, W(-1, 1), W(1, -1), -3],
                   [0, 1, 0, 0],
                   [0, 0, 1, 0],
                   [0, 0, 0, 1]],
        },
        "relations": [["a3 a5 * 6 ^", "1"], ["a5 2 ^", "1"],
                      ["a3 a5 * 3 ^ a5 *", "a5 a3 a5 * 3 ^ *"]],
    },
    {
        "name": "dim4_H6", "dim": 4, "aut_order": F((2, 3), (3, 1)),
        "gram_lower": [[2], [-1, 2], [0, -1, 3], [0, W(0, -1), W(-1, 1), 4]],
        "generators": {
            "a2": [[0, 1, 0, 0],
                   [-1, -1, 0, 0],
                   [W(2, -1), W(3, -2), -1, W(-2, -1)],
                   [W(0, 1), W(0, 1), 0, 1]],
            "a3": [[0, 1, 0, 0],
                   [1, 0, 0, 0],
                   [W(-2, 1), W(-3, 2), 1, W(2, 1)],
                   [W(0, -1), W(0, -1), 0, -1]],
        },
        "relations": [["a2 6 ^", "1"], ["a3 2 ^", "1"],
                      ["a3 a2 3 ^ *", "a2 3 ^ a3 *"]],
    },
    {
        "name": "dim4_H7", "dim": 4, "aut_order": F((2, 3), (3, 1)),
        "gram_lower": [[2], [1, 2], [-1, -1, 3], [W(-1, 1), W(-1, 1), W(0, -1), 4]],
        "generators": {
            "a3": [[1, 0, 0, 0],
                   [1, -1, 0, 0],
                   [-1, 0, -1, 0],
                   [W(-1, 1), 0, 0, -1]],
            "a4": [[1, 0, 0, 0],
                   [0, 1, 0, 0],
                   [W(0, 1), W(0, 1), -1, W(-3, 1)],
                   [0, 0, 0, 1]],
        },
        "relations": [["a3 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a3 a4 *", "a4 a3 *"]],
    },
    {
        "name": "dim4_H8", "dim": 4, "aut_order": F((2, 5)),
        "gram_lower": [[2], [0, 2], [W(0, -1), 0, 3], [0, W(0, -1), 0, 3]],
        "generators": {
            "a2": [[1, 0, 0, 0],
                   [0, -1, 0, 0],
                   [W(0, -1), 0, -1, 0],
                   [0, 0, 0, -1]],
            "a3": [[1, 0, 0, 0],
                   [0, -1, 0, 0],
                   [0, 0, 1, 0],
                   [0, 0, 0, -1]],
        },
        "relations": [["a2 2 ^", "1"], ["a3 2 ^", "1"],
                      ["a2 a3 *", "a3 a2 *"]],
        "notes": ["source prints the relation block as 'a2^2 = a2^2 = 1'; "
                  "stored as a2^2 = 1 and a3^2 = 1, both verified."],
    },
    {
        "name": "dim4_H9", "dim": 4, "aut_order": F((2, 4)),
        "gram_lower": [[2], [0, 2], [0, -1, 3], [-1, -1, W(1, -1), 3]],
        "generators": {
            "a3": [[-1, 0, 0, 0],
                   [0, 1, 0, 0],
                   [0, 0, 1, 0],
                   [1, 0, 0, 1]],
            "a4": [[1, 0, 0, 0],
                   [0, 1, 0, 0],
                   [0, -1, -1, 0],
                   [-1, -1, 0, -1]],
        },
        "relations": [["a3 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a3 a4 *", "a4 a3 *"]],
    },
    {
        "name": "dim5_H1", "dim": 5, "aut_order": F((2, 3)),
        "gram_lower": [[3], [-1, 3], [-1, 1, 3], [0, W(0, -1), 0, 3],
                       [1, W(-1, 1), W(-2, 1), -1, 4]],
        "generators": {
            "a2": [[W(-1, -1), W(0, -2), W(2, -1), -2, 4],
                   [0, 1, 0, 0, 0],
                   [W(0, 1), W(0, 2), W(-3, 1), 2, -4],
                   [0, 0, 0, 1, 0],
                   [W(0, -1), W(0, -1), W(2, -1), -1, 3]],
            "a3": [[0, 0, 1, 0, 0],
                   [W(0, -1), W(1, -2), W(2, -1), -2, 4],
                   [1, 0, 0, 0, 0],
                   [0, 0, 0, 1, 0],
                   [2, 5, W(2, 1), W(1, -1), W(-1, 2)]],
        },
        "relations": [["a2 2 ^", "1"], ["a3 2 ^", "1"],
                      ["a2 a3 *", "a3 a2 *"]],
    },
    {
        "name": "dim5_H6", "dim": 5, "aut_order": F((2, 4), (3, 1)),
        "gram_lower": [[2], [1, 2], [-1, -1, 3], [1, 1, 0, 3],
                       [0, 0, W(0, 1), -1, 3]],
        "generators": {
            "a1": [[1, -1, 0, 0, 0],
                   [1, 0, 0, 0, 0],
                   [-1, 0, -1, 0, 0],
                   [1, 0, 0, -1, 0],
                   [0, 0, 0, 0, -1]],
            "a2": [[W(0, 1), W(0, 1), W(-2, 2), W(-1, -1), W(-3, -1)],
                   [W(0, 1), W(-1, 1), W(-2, 2), W(-1, -1), W(-3, -1)],
                   [W(0, -1), W(0, -1), W(1, -2), W(1, 1), W(3, 1)],
                   [1, 0, 0, -1, 0],
                   [0, 0, 0, 0, -1]],
            "a3": [[W(0, 1), W(0, 1), W(-2, 2), W(-1, -1), W(-3, -1)],
                   [0, 1, 0, 0, 0],
                   [0, 0, 1, 0, 0],
                   [W(-1, 1), W(0, 1), W(-2, 2), W(0, -1), W(-3, -1)],
                   [0, 0, 0, 0, 1]],
        },
        "relations": [["a2 a3 * 2 ^", "1"], ["a1 a3 * 4 ^", "1"],
                      ["a2 a3 * a1 a3 * 2 ^ *", "a1 a3 * 2 ^ a2 a3 * *"]],
    },
    {
        "name": "dim5_H7", "dim": 5, "aut_order": F((2, 4), (3, 1)),
        "gram_lower": [[2], [1, 2], [-1, 0, 3], [1, 0, 0, 3],
                       [0, 0, W(1, -1), -1, 3]],
        "generators": {
            "a2": [[-1, 1, 0, 0, 0],
                   [W(-2, 2), W(1, -1), W(0, 2), W(2, -1), W(4, -1)],
                   [1, -1, 1, 0, 0],
                   [W(0, -2), W(0, 1), W(0, -2), W(-1, 1), W(-4, 1)],
                   [0, 0, 0, 0, 1]],
            "a3": [[W(-1, 2), W(0, -1), W(0, 2), W(2, -1), W(4, -1)],
                   [W(-2, 2), W(1, -1), W(0, 2), W(2, -1), W(4, -1)],
                   [-1, 1, -1, 0, 0],
                   [W(0, 2), W(0, -1), W(0, 2), W(1, -1), W(4, -1)],
                   [0, 0, 0, 0, -1]],
        },
        "relations": [["a2 4 ^", "1"], ["a3 2 ^", "1"],
                      ["a2 2 ^ a3 *", "a3 a2 2 ^ *"]],
    },
    {
        "name": "dim5_H8", "dim": 5, "aut_order": F((2, 4), (3, 1)),
        "gram_lower": [[2], [0, 2], [0, -1, 3], [0, 1, W(-1, -1), 3],
                       [W(1, -1), 0, 0, 0, 3]],
        "generators": {
            "a2": [[1, 0, 0, 0, 0],
                   [0, -2, W(-2, 1), W(1, 1), 0],
                   [0, 1, W(1, -1), W(-1, -1), 0],
                   [0, -1, W(-2, 1), W(0, 1), 0],
                   [W(1, -1), 0, 0, 0, -1]],
            "a3": [[1, 0, 0, 0, 0],
                   [0, -2, W(-2, 1), W(1, 1), 0],
                   [0, 1, W(1, -1), W(-1, -1), 0],
                   [0, -1, W(-2, 1), W(0, 1), 0],
                   [0, 0, 0, 0, 1]],
        },
        "relations": [["a2 2 ^", "1"], ["a3 2 ^", "1"],
                      ["a2 a3 *", "a3 a2 *"]],
        "notes": ["source prints a2^2 = -1, but the printed matrix squares "
                  "to +1 (checked entry by entry); stored as a2^2 = 1."],
    },
    {
        "name": "dim5_H9", "dim": 5, "aut_order": F((2, 3), (3, 1)),
        "gram_lower": [[2], [-1, 2], [0, -1, 3], [-1, 1, 0, 3],
                       [-1, 0, 1, W(1, -1), 3]],
        "generators": {
            "a3": [[-1, -1, 0, 0, 0],
                   [0, 1, 0, 0, 0],
                   [-3, W(-1, 1), 1, W(-1, -2), W(-5, 1)],
                   [0, 1, 0, -1, 0],
                   [0, 0, 0, 0, -1]],
            "a4": [[1, 0, 0, 0, 0],
                   [0, 1, 0, 0, 0],
                   [3, W(0, -1), -1, W(1, 2), W(5, -1)],
                   [0, 0, 0, 1, 0],
                   [0, 0, 0, 0, 1]],
        },
        "relations": [["a3 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a3 a4 *", "a4 a3 *"]],
    },
    {
        "name": "dim5_H10", "dim": 5, "aut_order": F((2, 3), (3, 1)),
        "gram_lower": [[2], [1, 2], [1, 0, 3], [0, 1, W(0, -1), 3],
                       [1, 0, 1, -1, 3]],
        "generators": {
            "a3": [[0, -1, 0, 0, 0],
                   [-1, 0, 0, 0, 0],
                   [1, -1, -1, 0, 0],
                   [-1, 1, 0, -1, 0],
                   [W(3, -1), -4, W(-3, 2), W(4, 1), 1]],
            "a4": [[1, 0, 0, 0, 0],
                   [0, 1, 0, 0, 0],
                   [0, 0, 1, 0, 0],
                   [0, 0, 0, 1, 0],
                   [W(-2, 1), 3, W(3, -2), W(-4, -1), -1]],
        },
        "relations": [["a3 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a3 a4 *", "a4 a3 *"]],
    },
    {
        "name": "dim5_H11", "dim": 5, "aut_order": F((2, 3), (3, 1)),
        "gram_lower": [[2], [0, 3], [0, 1, 3], [0, W(2, -1), 0, 3],
                       [-1, 0, 1, -1, 3]],
        "generators": {
            "a2": [[1, W(-3, 3), W(0, -1), W(7, -1), 3],
                   [0, 1, 0, 0, 0],
                   [0, 3, -1, W(-1, -1), 0],
                   [0, 0, 0, 1, 0],
                   [0, W(2, -1), 0, -3, -1]],
            "a3": [[1, 0, 0, 0, 0],
                   [0, -1, 0, 0, 0],
                   [0, -3, 1, W(1, 1), 0],
                   [0, 0, 0, -1, 0],
                   [0, W(-2, 1), 0, 3, 1]],
        },
        "relations": [["a2 2 ^", "1"], ["a3 2 ^", "1"],
                      ["a3 a2 *", "a2 a3 *"]],
    },
    {
        "name": "dim5_H12", "dim": 5, "aut_order": F((2, 3), (3, 1)),
        "gram_lower": [[2], [0, 3], [0, 1, 3], [0, -1, W(-1, -1), 3],
                       [1, W(0, -1), -1, 0, 3]],
        "generators": {
            "a2": [[1, 0, 0, 0, 0],
                   [0, -1, W(2, -1), W(-1, -1), 0],
                   [0, 0, 1, 0, 0],
                   [0, 0, 0, 1, 0],
                   [1, 0, -3, W(-2, 1), -1]],
            "a3": [[1, 0, 0, 0, 0],
                   [0, 1, W(-2, 1), W(1, 1), 0],
                   [0, 0, -1, 0, 0],
                   [0, 0, 0, -1, 0],
                   [0, 0, 3, W(2, -1), 1]],
        },
        "relations": [["a2 2 ^", "1"], ["a3 2 ^", "1"],
                      ["a3 a2 *", "a2 a3 *"]],
    },
    {
        "name": "dim5_H13", "dim": 5, "aut_order": F((2, 3)),
        "gram_lower": [[2], [0, 3], [-1, W(0, -1), 3], [-1, -1, 0, 3],
                       [W(1, -1), 1, W(-1, 1), 0, 4]],
        "generators": {
            "a2": [[1, 0, 0, 0, 0],
                   [W(-1, 2), W(-2, 1), W(1, 1), W(-1, 1), 2],
                   [0, 0, 1, 0, 0],
                   [W(1, -2), W(3, -1), W(-1, -1), W(2, -1), -2],
                   [0, 0, 0, 0, 1]],
            "a3": [[1, 0, 0, 0, 0],
                   [W(1, -2), W(2, -1), W(-1, -1), W(1, -1), -2],
                   [-1, 0, -1, 0, 0],
                   [W(-2, 2), W(-3, 1), W(1, 1), W(-2, 1), 2],
                   [W(1, -1), 0, 0, 0, -1]],
        },
        "relations": [["a2 2 ^", "1"], ["a3 2 ^", "1"],
                      ["a3 a2 *", "a2 a3 *"]],
    },
    {
        "name": "dim5_H14", "dim": 5, "aut_order": F((2, 4)),
        "gram_lower": [[2], [-1, 3], [0, -1, 3], [0, W(1, -1), -1, 3],
                       [0, -1, W(1, -1), 1, 3]],
        "generators": {
            "a2": [[-1, -2, 2, W(1, 1), W(-1, -1)],
                   [0, 0, -1, 0, 0],
                   [0, -1, 0, 0, 0],
                   [0, 0, 0, 0, -1],
                   [0, 0, 0, -1, 0]],
            "a4": [[1, 0, 0, 0, 0],
                   [-1, -1, 0, 0, 0],
                   [-1, -2, 1, W(1, 1), W(-1, -1)],
                   [0, 0, 0, -1, 0],
                   [0, 0, 0, 0, -1]],
        },
        "relations": [["a2 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a4 a2 *", "a2 a4 *"]],
    },
    {
        "name": "dim5_H15", "dim": 5, "aut_order": F((2, 4)),
        "gram_lower": [[2], [0, 2], [1, -1, 3], [0, 0, W(-1, 1), 3],
                       [W(0, 1), 0, W(0, 1), 1, 4]],
        "generators": {
            "a2": [[0, 1, 0, 0, 0],
                   [1, 0, 0, 0, 0],
                   [0, 0, -1, 0, 0],
                   [0, 0, 0, -1, 0],
                   [1, -1, W(-2, -1), W(1, -1), 1]],
            "a4": [[1, 0, 0, 0, 0],
                   [0, 1, 0, 0, 0],
                   [1, -1, -1, 0, 0],
                   [0, 0, 0, -1, 0],
                   [W(0, 1), 0, 0, 0, -1]],
        },
        "relations": [["a2 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a4 a2 *", "a2 a4 *"]],
    },
    {
        "name": "dim5_H16", "dim": 5, "aut_order": F((2, 4)),
        "gram_lower": [[2], [0, 2], [-1, 1, 3], [0, 0, W(0, -1), 3],
                       [0, W(-1, 1), W(-1, 1), -1, 4]],
        "generators": {
            "a2": [[0, 1, 0, 0, 0],
                   [1, 0, 0, 0, 0],
                   [1, -1, 1, 0, 0],
                   [0, 0, 0, 1, 0],
                   [W(-2, 1), 1, W(-3, 1), W(0, 1), -1]],
            "a4": [[1, 0, 0, 0, 0],
                   [0, 1, 0, 0, 0],
                   [-1, 1, -1, 0, 0],
                   [0, 0, 0, -1, 0],
                   [0, W(-1, 1), 0, 0, -1]],
        },
        "relations": [["a2 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a4 a2 *", "a2 a4 *"]],
    },
    {
        "name": "dim5_H17", "dim": 5, "aut_order": F((2, 4)),
        "gram_lower": [[2], [-1, 3], [0, -1, 3], [0, W(-1, 1), -1, 3],
                       [0, 0, -1, 0, 3]],
        "generators": {
            "a2": [[W(4, -1), W(8, -2), 5, W(5, 2), 2],
                   [W(-4, 1), W(-8, 2), -5, W(-5, -2), -1],
                   [0, 0, 1, 0, 0],
                   [W(0, -1), W(0, -2), W(1, -1), W(4, -1), 0],
                   [1, 1, 0, 0, 0]],
            "a4": [[1, 0, 0, 0, 0],
                   [-1, -1, 0, 0, 0],
                   [0, 0, -1, 0, 0],
                   [0, 0, 0, -1, 0],
                   [W(4, -1), W(8, -2), 5, W(5, 2), 1]],
        },
        "relations": [["a2 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a4 a2 *", "a2 a4 *"]],
    },
    {
        "name": "dim5_H18", "dim": 5, "aut_order": F((2, 4)),
        "gram_lower": [[2], [0, 3], [-1, -1, 3], [0, W(1, -1), W(0, 1), 3],
                       [0, 1, 1, 1, 3]],
        "generators": {
            "a3": [[-1, 0, 0, 0, 0],
                   [0, 1, 0, 0, 0],
                   [1, 0, 1, 0, 0],
                   [0, 0, 0, 1, 0],
                   [0, 0, 0, 0, 1]],
            "a4": [[1, 0, 0, 0, 0],
                   [0, -1, 0, 0, 0],
                   [-1, 0, -1, 0, 0],
                   [0, 0, 0, -1, 0],
                   [W(-1, 1), W(2, -1), W(-2, 2), W(-5, -1), 1]],
        },
        "relations": [["a3 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a4 a3 *", "a3 a4 *"]],
    },
    {
        "name": "dim5_H19", "dim": 5, "aut_order": F((2, 4)),
        "gram_lower": [[2], [0, 3], [0, 0, 3], [0, W(0, -1), -1, 3],
                       [1, W(-1, 1), 0, -1, 3]],
        "generators": {
            "a3": [[-1, 0, 0, 0, 0],
                   [0, 1, 0, 0, 0],
                   [0, 0, 1, 0, 0],
                   [0, 0, 0, 1, 0],
                   [-1, 0, 0, 0, 1]],
            "a4": [[1, 0, 0, 0, 0],
                   [0, -1, 0, 0, 0],
                   [W(2, -1), W(2, 3), 1, 5, W(-4, 2)],
                   [0, 0, 0, -1, 0],
                   [1, 0, 0, 0, -1]],
        },
        "relations": [["a3 2 ^", "1"], ["a4 2 ^", "1"],
                      ["a4 a3 *", "a3 a4 *"]],
    },
    {
        "name": "dim5_H20", "dim": 5, "aut_order": F((2, 3)),
        "gram_lower": [[3], [1, 3], [0, W(-2, 1), 3], [-1, 0, 0, 3],
                       [W(0, -1), -1, 1, -1, 3]],
        "generators": {
            "a2": [[-1, 3, W(1, 1), 0, 0],
                   [0, 1, 0, 0, 0],
                   [0, 0, 1, 0, 0],
                   [W(2, 1), W(1, -1), 1, 1, W(3, -1)],
                   [0, W(-1, -1), W(2, -1), 0, -1]],
            "a3": [[1, -3, W(-1, -1), 0, 0],
                   [0, -1, 0, 0, 0],
                   [0, 0, -1, 0, 0],
                   [0, 0, 0, 1, 0],
                   [0, W(1, 1), W(-2, 1), 0, 1]],
        },
        "relations": [["a2 2 ^", "1"], ["a3 2 ^", "1"],
                      ["a3 a2 *", "a2 a3 *"]],
    },
]


def build() -> dict:
    return {
        "version": 1,
        "tables": TABLES,
        "table_notes": TABLE_NOTES,
        "prose_orders": PROSE_ORDERS,
        "t_sets": T_SETS,
        "exceptional": EXCEPTIONAL,
        "special_forms": SPECIAL_FORMS,
        "fixtures": {"-11": FIXTURES_11},
        "fixture_notes": FIXTURE_NOTES,
        "appendix": [
            {**e, "discriminant": -19} for e in APPENDIX
        ],
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    data = build()
    text = json.dumps(data, indent=1, sort_keys=True) + "\n"
    (OUT / "catalog.json").write_text(text)
    digest = hashlib.sha256(text.encode()).hexdigest()
    (OUT / "catalog.sha256").write_text(digest + "\n")
    print(f"wrote catalog.json ({len(text)} bytes, sha256 {digest[:16]}...)")


if __name__ == "__main__":
    main()
