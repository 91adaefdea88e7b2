"""Frozen regression anchors: two reference subjects, their exact serialized
hashes, the per-slot counts behind them, and their distances.

The slot dicts were derived by hand from the layout rules (row = vowel index
+ 1 in "aiueoy", column = letter offset); the hash strings and distances are
the values the engine must keep reproducing byte-for-byte forever.
"""

SUBJECT_A = "donald: sprucing up for spring"
SUBJECT_B = "vulindlela: sprucing up for spring?"

# 189 chars each, written in rows of ten for checkability.
HASH_A = "".join((
    "0001002000",
    "0102030120",
    "0000000000",
    "0000000000",
    "1000000000",
    "0000001000",
    "0000000000",
    "0100000000",
    "0100000000",
    "0000000010",
    "0000000000",
    "0000000000",
    "0000000000",
    "0000000010",
    "1000000000",
    "0000000000",
    "0000000000",
    "0000000000",
    "000000000",
))
HASH_B = "".join((
    "0001002000",
    "0003030120",
    "0000000000",
    "0000000010",
    "0000000000",
    "0000001000",
    "0000010000",
    "0100000000",
    "0100000000",
    "0000000010",
    "0010000000",
    "0000000001",
    "0000000000",
    "0000000000",
    "1000000000",
    "0000000000",
    "0000000000",
    "0000000000",
    "000000000",
))

# slot -> count, one comment per syllable naming where it comes from.
SLOTS_A = {
    3: 1,    # d     (donald final)
    6: 2,    # g     (sprucing, spring finals)
    11: 1,   # l     (donald)
    13: 2,   # n     (sprucing, spring)
    15: 3,   # p     (sprucing, up, spring)
    17: 1,   # r     (for)
    18: 2,   # s     (sprucing, spring)
    40: 1,   # na    (donald)
    56: 1,   # ci    (sprucing)
    71: 1,   # ri    (spring)
    81: 1,   # u     (up)
    98: 1,   # ru    (sprucing)
    138: 1,  # do    (donald)
    140: 1,  # fo    (for)
}
SLOTS_B = {
    3: 1,    # d     (vulindlela)
    6: 2,    # g
    13: 3,   # n     (vulindlela, sprucing, spring)
    15: 3,   # p
    17: 1,   # r
    18: 2,   # s
    38: 1,   # la    (vulindlela final)
    56: 1,   # ci
    65: 1,   # li    (vulindlela)
    71: 1,   # ri
    81: 1,   # u
    98: 1,   # ru
    102: 1,  # vu    (vulindlela)
    119: 1,  # le    (vulindlela)
    140: 1,  # fo
}

# dot = 30, |A|^2 = 31, |B|^2 = 37, |A-B|^2 = 8
GOLDEN_COSINE = 0.885808
GOLDEN_EUCLIDEAN = 2.828427
TOLERANCE = 1e-6

# "tree" -> t alone, re pair, e alone
TREE_SLOTS = {19: 1, 108: 1, 125: 1}
