"""Helpers for int-encoded subsets.

Every set in this package (lattice element subsets, carrier subsets) is a
plain Python int used as a bitmask, so subset tests, meets of families and
membership are single machine operations.
"""


def iter_bits(mask):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    """Bitmask with exactly the given bit positions set."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bit_key(mask):
    """Canonical sort key for same-universe masks: size, then members."""
    return (mask.bit_count(), tuple(iter_bits(mask)))
