"""Subquasimodules: generated closures, the full subquasimodule lattice, bases.

A subquasimodule is a carrier subset containing the zero vector and closed
under addition and every scalar action. Subsets are carrier bitmasks
throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitset import bit_key, iter_bits
from .errors import EnumerationBudgetExceeded
from .quasimodule import CanonicalQM


@dataclass(frozen=True)
class SubQM:
    """A subquasimodule of a canonical quasimodule, stored as a member bitmask."""

    qm: CanonicalQM
    members: int

    def __contains__(self, pos):
        return bool(self.members >> pos & 1)

    def __len__(self):
        return self.members.bit_count()

    def positions(self):
        return list(iter_bits(self.members))

    def vectors(self):
        return self.qm.vectors(self.members)

    def label_sets(self):
        return self.qm.label_sets(self.members)

    def __repr__(self):
        return f"SubQM({{{', '.join(map(str, self.label_sets()))}}})"


def close_mask(qm, mask):
    """Least superset of mask containing zero and closed under + and scalars."""
    closed = mask | 1 << qm.zero
    if qm._add is not None:
        add_t, smul_t = qm._add, qm._smul
        add = lambda p, q: add_t[p][q]
        smul = lambda c, p: smul_t[c][p]
    else:
        add, smul = qm.add, qm.smul
    scalars = range(qm.lattice.n)
    queue = list(iter_bits(closed))
    processed = []
    while queue:
        p = queue.pop()
        # p + p = p (join is idempotent), so self-pairs need no visit
        for q in processed:
            s = add(p, q)
            if not closed >> s & 1:
                closed |= 1 << s
                queue.append(s)
        for c in scalars:
            s = smul(c, p)
            if not closed >> s & 1:
                closed |= 1 << s
                queue.append(s)
        processed.append(p)
    return closed


def generate(qm, vectors):
    """The subquasimodule generated by a carrier subset (empty set gives {zero})."""
    return SubQM(qm, close_mask(qm, qm.mask(vectors)))


def is_subquasimodule(qm, vectors):
    """(holds, witness) where the witness is the first violation found.

    Violations are checked in order: zero membership, then addition over
    member pairs in position order, then every scalar action. Witness forms:
    ("zero",), ("add", p, q, p+q), ("smul", c, p, c*p).
    """
    mask = qm.mask(vectors)
    if not mask >> qm.zero & 1:
        return False, ("zero",)
    members = list(iter_bits(mask))
    add, smul = qm.add, qm.smul
    if qm._add is not None:
        add_t, smul_t = qm._add, qm._smul
        add = lambda p, q: add_t[p][q]
        smul = lambda c, p: smul_t[c][p]
    for i, p in enumerate(members):
        for q in members[i:]:
            s = add(p, q)
            if not mask >> s & 1:
                return False, ("add", p, q, s)
    for c in range(qm.lattice.n):
        for p in members:
            s = smul(c, p)
            if not mask >> s & 1:
                return False, ("smul", c, p, s)
    return True, None


class SubQMLattice:
    """A finite bounded lattice of subquasimodules ordered by inclusion.

    Nodes are member bitmasks in canonical order (by size, then by member
    positions), so node k prints as P{k+1}. Meet is intersection; join is the
    supplied closure of the union (generated join for the full lattice,
    double-orthogonality join for the closed lattice).
    """

    def __init__(self, qm, node_masks, join_closure, kind="all"):
        self.qm = qm
        self.kind = kind
        self.nodes = tuple(sorted(node_masks, key=bit_key))
        self.index = {mask: i for i, mask in enumerate(self.nodes)}
        self._join_closure = join_closure
        zero_only = 1 << qm.zero
        assert self.nodes[0] == zero_only and self.nodes[-1] == qm.full_mask, \
            "subquasimodule lattice must run from {zero} to the full carrier"

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def node(self, i):
        return SubQM(self.qm, self.nodes[i])

    def name(self, i):
        return f"P{i + 1}"

    def names(self):
        return [self.name(i) for i in range(len(self.nodes))]

    def name_of_mask(self, mask):
        return self.name(self.index[mask])

    def leq(self, i, j):
        return self.nodes[i] & ~self.nodes[j] == 0

    def meet(self, i, j):
        m = self.nodes[i] & self.nodes[j]
        assert m in self.index, "meet escaped the node set"
        return self.index[m]

    def join(self, i, j):
        u = self.nodes[i] | self.nodes[j]
        j_mask = self.index.get(u)
        if j_mask is None:
            closed = self._join_closure(u)
            assert closed in self.index, "join escaped the node set"
            return self.index[closed]
        return j_mask

    @property
    def bottom_index(self):
        return 0

    @property
    def top_index(self):
        return len(self.nodes) - 1

    def covers(self):
        """Cover pairs (i, j) of the containment order, lexicographic."""
        n = len(self.nodes)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq(i, j):
                    continue
                if not any(k != i and k != j and self.leq(i, k) and self.leq(k, j)
                           for k in range(n)):
                    out.append((i, j))
        return out

    def __repr__(self):
        return f"SubQMLattice({self.kind}, {len(self.nodes)} nodes)"


def all_subquasimodules(qm, max_nodes=200_000):
    """The complete subquasimodule lattice of qm.

    Seeds with the closure of the empty set and of every singleton, then
    saturates under generated pairwise joins. Equivalent to filtering all
    carrier subsets, at far fewer closure calls.
    """
    seeds = {close_mask(qm, 0)}
    for p in range(qm.size):
        seeds.add(close_mask(qm, 1 << p))
    nodes = set(seeds)
    union_memo = {}
    frontier = sorted(seeds)
    while frontier:
        fresh = []
        snapshot = sorted(nodes)
        for a in frontier:
            for b in snapshot:
                u = a | b
                if u == a or u == b or u in nodes:
                    continue
                j = union_memo.get(u)
                if j is None:
                    j = close_mask(qm, u)
                    union_memo[u] = j
                if j not in nodes:
                    nodes.add(j)
                    fresh.append(j)
                    if len(nodes) > max_nodes:
                        raise EnumerationBudgetExceeded(
                            f"subquasimodule lattice exceeds {max_nodes} nodes")
        frontier = sorted(fresh)
    return SubQMLattice(qm, nodes, join_closure=lambda m: close_mask(qm, m), kind="all")


def is_generating(sub, vectors):
    """True iff the given subset of sub generates all of sub."""
    qm = sub.qm
    mask = qm.mask(vectors)
    if mask & ~sub.members:
        raise ValueError("generating candidates must lie inside the subquasimodule")
    return close_mask(qm, mask) == sub.members


def is_basis(sub, vectors):
    """True iff the subset generates sub and no proper subset does.

    One-element deletions decide minimality because generation is monotone.
    """
    qm = sub.qm
    mask = qm.mask(vectors)
    if not is_generating(sub, mask):
        return False
    for p in iter_bits(mask):
        if close_mask(qm, mask & ~(1 << p)) == sub.members:
            return False
    return True


def find_bases(sub, max_size, max_candidates=500_000):
    """All inclusion-minimal generating sets of sub with at most max_size elements.

    Returns (positions tuple, is_orthogonal) pairs ordered by size then by
    position tuple. Candidates are pruned against previously found bases:
    any strict superset of a basis cannot be minimal.
    """
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    qm = sub.qm
    target = sub.members
    zero_only = 1 << qm.zero
    out = []
    found_sets = []
    if target == zero_only:
        return [((), True)]
    pool = [p for p in iter_bits(target) if p != qm.zero]
    budget = max_candidates
    for size in range(1, max_size + 1):
        for combo in combinations(pool, size):
            budget -= 1
            if budget < 0:
                raise EnumerationBudgetExceeded(
                    f"basis search exceeds {max_candidates} candidates")
            cset = frozenset(combo)
            if any(f <= cset for f in found_sets):
                continue
            mask = 0
            for p in combo:
                mask |= 1 << p
            if close_mask(qm, mask) != target:
                continue
            assert is_basis(sub, mask)
            orth = all(qm.orthogonal(p, q) for p, q in combinations(combo, 2))
            out.append((combo, orth))
            found_sets.append(cset)
    return out
