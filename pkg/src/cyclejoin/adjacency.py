"""Conjugate pairs, the adjacency graph, and spanning-tree counts.

A conjugate pair is a state v together with v + S, where S is the
special state (1, 0, ..., 0); the two differ only in their first bit.
Cycles sharing such a pair are adjacent, and the adjacency graph G has
the cycles as vertices with one edge per shared pair.  Joining along a
spanning tree of G produces a de Bruijn sequence, so counting the
sequences constructible from the register is counting spanning trees
(the BEST theorem: any cofactor of the degree-minus-adjacency matrix).

The pair search is factored: S decomposes into per-factor blocks
T^{c_i} a_{d_i}, each factor gets a table of local shift pairs whose
component states sum to its block, and a tuple of local pairs lifts to
a real conjugate pair exactly when the per-factor shifts agree modulo
the pairwise gcds of the active periods (the generalized CRT
condition).  Primitive factors shortcut the local table through the
Zech logarithm via the shift-and-add property of m-sequences.
"""

import itertools
import math
from dataclasses import dataclass
from math import gcd, lcm
from typing import NamedTuple

from .cycles import CycleDescriptor, CycleSet, canonical_shifts
from .lfsr import StateBasis

__all__ = [
    "ConjugatePair",
    "SpecialStateRep",
    "represent_special_state",
    "LocalPairTable",
    "build_local_tables",
    "local_pairs",
    "conjugate_pairs",
    "first_conjugate_pair",
    "build_graph",
    "AdjacencyGraph",
    "best_count",
    "int_log2",
]

SPECIAL_STATE = 1  # (1, 0, ..., 0) at any width


class ConjugatePair(NamedTuple):
    """A state and its conjugate; they differ exactly in bit 0."""

    v: int
    v_hat: int


@dataclass(frozen=True)
class SpecialStateRep:
    """Per-factor representation of the special state S = (1, 0, ..., 0).

    blocks[i] = T^{shifts[i]} applied to states[cycle_ids[i]] of factor
    i, and composing the blocks through the basis gives back S.  Every
    block is nonzero because f(x) is the minimal polynomial of the
    sequence through S.
    """

    shifts: tuple[int, ...]
    cycle_ids: tuple[int, ...]
    blocks: tuple[int, ...]
    descriptor: CycleDescriptor


def represent_special_state(basis: StateBasis, factors) -> SpecialStateRep:
    """Locate each block of S P^{-1} on its factor's cycles.

    Scans T^k states[j] for each factor until the block appears; this
    needs at most 2^{n_i} - 1 comparisons per factor.
    """
    factors = list(factors)
    blocks = basis.decompose(SPECIAL_STATE)
    shifts, ids = [], []
    for f, blk in zip(factors, blocks):
        found = None
        for j, rep in enumerate(f.states):
            x = rep
            for k in range(f.order):
                if x == blk:
                    found = (k, j)
                    break
                x = f.lfsr.step(x)
            if found:
                break
        if found is None:
            raise AssertionError("special-state block not found on any cycle; basis is corrupt")
        shifts.append(found[0])
        ids.append(found[1])
    orders = [f.order for f in factors]
    flags = (1,) * len(factors)
    desc = CycleDescriptor(
        flags,
        tuple(ids),
        canonical_shifts(flags, shifts, orders),
        lcm(*orders),
    )
    return SpecialStateRep(tuple(shifts), tuple(ids), tuple(blocks), desc)


class LocalPairTable:
    """All local shift pairs of one factor against every cycle index pair.

    ``pairs(j, k)`` lists the (u, w) with T^u states[j] + T^w states[k]
    equal to this factor's block of S, exponents in [0, e).  Index t
    stands for the zero cycle: its side contributes the zero sequence,
    pinning the other side to the block itself.  Tables are built
    eagerly and kept; the footprint is t^2 * e entries at worst, cheap
    at the intended scale.
    """

    def __init__(self, factor, shift: int, cycle_id: int, block: int):
        self.factor = factor
        self.c = shift
        self.d = cycle_id
        self.block = block
        t, e = factor.t, factor.order
        table: dict[tuple[int, int], list[tuple[int, int]]] = {}
        if factor.is_primitive:
            # shift-and-add: T^y a + T^{c + zech(y - c)} a = T^c a
            zech = factor.field.zech
            table[(0, 0)] = [
                (y, (self.c + zech[(y - self.c) % e]) % e) for y in range(e) if y != self.c
            ]
        else:
            for j, rep in enumerate(factor.states):
                x = rep
                for u in range(e):
                    other = x ^ block
                    if other:
                        k, w = factor.locate(other)
                        table.setdefault((j, k), []).append((u, w))
                    x = factor.lfsr.step(x)
        # zero-cycle rows: the nonzero side must be the block's own cycle
        table[(t, self.d)] = [(0, self.c)]
        table[(self.d, t)] = [(self.c, 0)]
        self._table = {key: tuple(val) for key, val in table.items()}

    def pairs(self, j: int, k: int) -> tuple[tuple[int, int], ...]:
        return self._table.get((j, k), ())


def build_local_tables(factors, rep: SpecialStateRep) -> list[LocalPairTable]:
    return [
        LocalPairTable(f, rep.shifts[i], rep.cycle_ids[i], rep.blocks[i])
        for i, f in enumerate(factors)
    ]


def local_pairs(factor, j: int, k: int, rep: SpecialStateRep, index: int):
    """One-off table lookup; prefer build_local_tables when querying repeatedly."""
    return LocalPairTable(factor, rep.shifts[index], rep.cycle_ids[index], rep.blocks[index]).pairs(j, k)


def _iter_pairs(c1, c2, tables, factors, basis, rep, include_same=False):
    """Yield conjugate pairs between two cycles, v taken on c1's side."""
    if c1 == c2 and not include_same:
        raise ValueError("conjugate pairs are reported between distinct cycles only")
    # the zero cycle is adjacent exactly to the cycle through S, by one pair
    if not any(c1.flags):
        if c2 == rep.descriptor:
            yield ConjugatePair(0, SPECIAL_STATE)
        return
    if not any(c2.flags):
        if c1 == rep.descriptor:
            yield ConjugatePair(SPECIAL_STATE, 0)
        return
    s = len(factors)
    if any(not a and not b for a, b in zip(c1.flags, c2.flags)):
        return  # some factor missing on both sides: sums cannot reach S
    options = []
    for i, f in enumerate(factors):
        j = c1.indices[i] if c1.flags[i] else f.t
        k = c2.indices[i] if c2.flags[i] else f.t
        opts = tables[i].pairs(j, k)
        if not opts:
            return
        options.append(opts)
    p1 = [f.order if a else 1 for f, a in zip(factors, c1.flags)]
    p2 = [f.order if a else 1 for f, a in zip(factors, c2.flags)]
    checks = []
    for m in range(s):
        for i in range(m + 1, s):
            g1 = gcd(p1[i], p1[m])
            g2 = gcd(p2[i], p2[m])
            if g1 > 1 or g2 > 1:
                checks.append((i, m, g1, g2))
    # states for the v side, precomputed once per local option
    side_states = []
    for i, f in enumerate(factors):
        if c1.flags[i]:
            base = f.states[c1.indices[i]]
            side_states.append({u: f.lfsr.advance(base, u) for u, _ in options[i]})
        else:
            side_states.append(None)
    l1, l2 = c1.shifts, c2.shifts
    for combo in itertools.product(*options):
        ok = True
        for i, m, g1, g2 in checks:
            if g1 > 1 and (combo[i][0] - l1[i] - combo[m][0] + l1[m]) % g1:
                ok = False
                break
            if g2 > 1 and (combo[i][1] - l2[i] - combo[m][1] + l2[m]) % g2:
                ok = False
                break
        if ok:
            v = basis.compose(
                [side_states[i][combo[i][0]] if c1.flags[i] else 0 for i in range(s)]
            )
            yield ConjugatePair(v, v ^ SPECIAL_STATE)


def conjugate_pairs(c1, c2, tables, factors, basis, rep) -> tuple[ConjugatePair, ...]:
    """All conjugate pairs shared by two distinct cycles.

    Every tuple of per-factor local pairs whose shifts satisfy the
    pairwise congruences (modulo gcds of the active periods of each
    side) lifts to exactly one pair; the iteration order over the
    local tables is fixed, so the output order is reproducible.
    """
    return tuple(_iter_pairs(c1, c2, tables, factors, basis, rep))


def first_conjugate_pair(c1, c2, tables, factors, basis, rep):
    """First conjugate pair between two cycles, or None; stops at the first hit."""
    return next(_iter_pairs(c1, c2, tables, factors, basis, rep), None)


@dataclass
class AdjacencyGraph:
    """Multigraph over cycle indices with conjugate-pair edge labels.

    ``edges`` maps (i, j) with i < j to the tuple of shared pairs; the
    pair's v lies on the lower-indexed cycle.  The condensed view keeps
    one edge per adjacent pair of vertices (multiplicity folded to 1).
    """

    num_vertices: int
    edges: dict[tuple[int, int], tuple[ConjugatePair, ...]]

    def multiplicity(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return len(self.edges.get((i, j), ()))

    def neighbors(self, i: int) -> list[int]:
        out = [b if a == i else a for (a, b) in self.edges if i in (a, b)]
        return sorted(out)

    def adjacency_lists(self) -> list[list[int]]:
        adj = [[] for _ in range(self.num_vertices)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for l in adj:
            l.sort()
        return adj

    def degree(self, i: int) -> int:
        """Number of incident edges, parallel edges counted."""
        return sum(len(ps) for (a, b), ps in self.edges.items() if i in (a, b))

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        adj = self.adjacency_lists()
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.num_vertices

    def laplacian(self, condensed: bool = False) -> list[list[int]]:
        """Degree-minus-adjacency matrix of G, or of the condensed graph."""
        psi = self.num_vertices
        m = [[0] * psi for _ in range(psi)]
        for (a, b), ps in self.edges.items():
            w = 1 if condensed else len(ps)
            m[a][b] -= w
            m[b][a] -= w
            m[a][a] += w
            m[b][b] += w
        return m


def build_graph(cycles: CycleSet, tables, factors, basis, rep) -> AdjacencyGraph:
    """The full adjacency graph: all conjugate pairs between all cycle pairs.

    Self-pairs are never looked at (the graph has no loops by
    definition, and they are useless for joining).
    """
    edges = {}
    descs = cycles.cycles
    for i in range(len(descs)):
        for j in range(i + 1, len(descs)):
            ps = conjugate_pairs(descs[i], descs[j], tables, factors, basis, rep)
            if ps:
                edges[(i, j)] = ps
    return AdjacencyGraph(len(descs), edges)


def _bareiss_det(m: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[-1][-1]


def best_count(graph: AdjacencyGraph, condensed: bool = False) -> int:
    """Number of spanning trees: the (0, 0) cofactor of the Laplacian.

    Computed exactly on arbitrary-precision integers; counts routinely
    exceed 64 bits.  With condensed=True parallel edges collapse first,
    giving the spanning-tree count of the condensed graph.
    """
    m = graph.laplacian(condensed)
    minor = [row[1:] for row in m[1:]]
    return _bareiss_det(minor)


def int_log2(n: int) -> float:
    """log2 of a positive int, safe far beyond float range."""
    if n <= 0:
        raise ValueError("log2 of a nonpositive integer")
    bl = n.bit_length()
    if bl <= 53:
        return math.log2(n)
    shift = bl - 53
    return math.log2(n >> shift) + shift
