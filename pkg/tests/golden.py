"""Frozen expected values for the reference instances, kept test-side on
purpose so the suite does not trust the library's own embedded copies.

The published list of subquasimodules of N5 x [0,a] has 20 entries but is
incomplete: it misses {(0,0),(a,0),(a,a),(c,a)}, which satisfies the
definition (see notes in the repository). PUBLISHED_* constants carry the
published data verbatim; TRUE_* constants carry the corrected values that
independent brute force confirms.
"""

PUBLISHED_EX1_SUBS = (
    (("0", "0"),),
    (("0", "0"), ("0", "a")),
    (("0", "0"), ("a", "0")),
    (("0", "0"), ("a", "a")),
    (("0", "0"), ("b", "0")),
    (("0", "0"), ("0", "a"), ("a", "a")),
    (("0", "0"), ("a", "0"), ("a", "a")),
    (("0", "0"), ("a", "0"), ("c", "0")),
    (("0", "0"), ("a", "a"), ("c", "a")),
    (("0", "0"), ("0", "a"), ("a", "0"), ("a", "a")),
    (("0", "0"), ("0", "a"), ("a", "a"), ("c", "a")),
    (("0", "0"), ("0", "a"), ("b", "0"), ("b", "a")),
    (("0", "0"), ("0", "a"), ("a", "0"), ("a", "a"), ("c", "a")),
    (("0", "0"), ("a", "0"), ("a", "a"), ("c", "0"), ("c", "a")),
    (("0", "0"), ("a", "0"), ("b", "0"), ("c", "0"), ("1", "0")),
    (("0", "0"), ("a", "a"), ("b", "0"), ("c", "a"), ("1", "a")),
    (("0", "0"), ("0", "a"), ("a", "0"), ("a", "a"), ("c", "0"), ("c", "a")),
    (("0", "0"), ("0", "a"), ("a", "a"), ("b", "0"), ("b", "a"), ("c", "a"), ("1", "a")),
    (("0", "0"), ("a", "0"), ("a", "a"), ("b", "0"), ("c", "0"), ("c", "a"),
     ("1", "0"), ("1", "a")),
    (("0", "0"), ("0", "a"), ("a", "0"), ("a", "a"), ("b", "0"), ("b", "a"),
     ("c", "0"), ("c", "a"), ("1", "0"), ("1", "a")),
)

# the subquasimodule missing from the published list
EX1_MISSING_SUB = (("0", "0"), ("a", "0"), ("a", "a"), ("c", "a"))

TRUE_EX1_SUBS = tuple(sorted(
    PUBLISHED_EX1_SUBS + (EX1_MISSING_SUB,),
    key=lambda vs: (len(vs), vs)))

# published companion tables, by published P-number (1-based)
PUBLISHED_EX1_PERP = (20, 15, 12, 5, 17, 5, 5, 12, 5, 5, 5, 8, 5, 5, 2, 1, 5, 1, 1, 1)
PUBLISHED_EX1_PERP_PERP = (1, 2, 8, 17, 5, 17, 17, 8, 17, 17, 17, 12, 17, 17, 15, 20,
                           17, 20, 20, 20)

PUBLISHED_EX1_CLOSED = (1, 2, 5, 8, 12, 15, 17, 20)

N5_ELEMENT_PERPS = {
    "0": ("0", "a", "b", "c", "1"),
    "a": ("0", "b"),
    "b": ("0", "a", "c"),
    "c": ("0", "b"),
    "1": ("0",),
}
N5_CLOSED = (("0",), ("0", "b"), ("0", "a", "c"), ("0", "a", "b", "c", "1"))
N5_IDEALS = (("0",), ("0", "a"), ("0", "b"), ("0", "a", "c"), ("0", "a", "b", "c", "1"))

# canonical numbering (ascending size, then member positions) against the
# published numbering: identical through P12; computed P13 is the set the
# published list misses, after which everything shifts by one
PUBLISHED_TO_COMPUTED_P = {k: (k if k <= 12 else k + 1) for k in range(1, 21)}
