"""Spanning trees and the cycle-joining sequence generator.

Fixing a spanning tree of the adjacency graph and flipping the
feedback at the tree's conjugate pairs merges every cycle into one big
cycle of length 2^n: a de Bruijn sequence.  Distinct trees give
distinct sequences, so streaming trees streams sequences.

Trees of the condensed graph are enumerated by a recursive frontier
search: visit vertices in ascending order, and for the unvisited
neighbors of the current vertex branch over every subset (ascending
bitmask, empty set first).  Each branch attaches the chosen subset to
the tree, so leaves at psi - 1 edges are exactly the spanning trees,
each produced once.  The enumeration is lazy because the counts grow
far beyond anything enumerable; callers take what they need.

Uniform random G-trees come from a random walk (Broder's algorithm):
walk the multigraph picking uniform incident edges, keep each vertex's
first-entrance edge.  Run on the full multigraph, not the condensed
one, this is uniform over sequences of the class.
"""

import itertools
import random
from dataclasses import dataclass

from .adjacency import AdjacencyGraph, ConjugatePair, first_conjugate_pair
from .cycles import CycleSet
from .lfsr import Lfsr, state_to_str

__all__ = [
    "spanning_trees",
    "tree_multiplicity",
    "expand_tree",
    "tree_expansions",
    "g_trees",
    "random_spanning_tree",
    "greedy_connected_subgraph",
    "DeBruijnSequence",
    "join_cycles",
    "FeedbackFunction",
    "feedback_function",
    "verify_de_bruijn",
]


def spanning_trees(graph: AdjacencyGraph, limit: int | None = None):
    """Yield spanning trees of the condensed graph as edge tuples.

    Complete and duplicate-free, by recursive frontier search: visit
    the lowest-index unchecked listed vertex, branch over subsets of
    its unlisted neighbors (ascending bitmask, empty set first), and
    emit whenever psi - 1 edges accumulate.  Two prunes cut subtrees
    that provably contain no spanning tree, without touching the yield
    order: a neighbor whose last unchecked neighbor is the current
    vertex must be taken now, and every unlisted vertex must stay
    reachable from the unchecked frontier.  Stops after `limit` trees
    when given.
    """
    psi = graph.num_vertices
    if not graph.is_connected():
        raise ValueError("graph is disconnected: no spanning tree exists")
    adj = graph.adjacency_lists()
    in_list = bytearray(psi)
    in_list[0] = 1
    checked = bytearray(psi)
    unchecked_nbrs = [len(adj[u]) for u in range(psi)]
    vlist = [0]
    elist = []

    def frontier_reaches_all() -> bool:
        seen = bytearray(psi)
        stack = []
        for v in vlist:
            if not checked[v]:
                for u in adj[v]:
                    if not in_list[u] and not seen[u]:
                        seen[u] = 1
                        stack.append(u)
        while stack:
            for u in adj[stack.pop()]:
                if not in_list[u] and not seen[u]:
                    seen[u] = 1
                    stack.append(u)
        return all(in_list[u] or seen[u] for u in range(psi))

    def rec():
        if len(elist) == psi - 1:
            yield tuple(elist)
            return
        if not frontier_reaches_all():
            return
        vbar = min((v for v in vlist if not checked[v]), default=None)
        if vbar is None:
            return
        checked[vbar] = 1
        for u in adj[vbar]:
            unchecked_nbrs[u] -= 1
        frontier = [u for u in adj[vbar] if not in_list[u]]
        forced = 0
        free_bits = []
        for b, u in enumerate(frontier):
            if unchecked_nbrs[u] == 0:
                forced |= 1 << b  # last chance to attach u; masks without it are dead
            else:
                free_bits.append(b)
        for k in range(1 << len(free_bits)):
            mask = forced
            for pos, b in enumerate(free_bits):
                mask |= (k >> pos & 1) << b
            picked = [u for b, u in enumerate(frontier) if mask >> b & 1]
            for u in picked:
                in_list[u] = 1
                vlist.append(u)
                elist.append((vbar, u))
            yield from rec()
            for u in picked:
                in_list[u] = 0
                vlist.pop()
                elist.pop()
        for u in adj[vbar]:
            unchecked_nbrs[u] += 1
        checked[vbar] = 0

    trees = rec()
    if limit is not None:
        trees = itertools.islice(trees, limit)
    return trees


def _edge_key(e):
    a, b = e
    return (a, b) if a < b else (b, a)


def tree_multiplicity(graph: AdjacencyGraph, tree) -> int:
    """Number of multigraph trees condensing to this tree (product of multiplicities)."""
    m = 1
    for e in tree:
        m *= len(graph.edges[_edge_key(e)])
    return m


def expand_tree(tree, graph: AdjacencyGraph, selector) -> tuple[ConjugatePair, ...]:
    """Pick one conjugate pair per bundled edge; selector[i] indexes edge i's bundle."""
    out = []
    for e, pick in zip(tree, selector, strict=True):
        bundle = graph.edges[_edge_key(e)]
        if not 0 <= pick < len(bundle):
            raise IndexError(f"selector {pick} out of range for edge {e} with {len(bundle)} pairs")
        out.append(bundle[pick])
    return tuple(out)


def tree_expansions(graph: AdjacencyGraph, tree):
    """All multigraph trees condensing to `tree`, in selector-lexicographic order."""
    ranges = [range(len(graph.edges[_edge_key(e)])) for e in tree]
    for selector in itertools.product(*ranges):
        yield expand_tree(tree, graph, selector)


def g_trees(graph: AdjacencyGraph, limit: int | None = None):
    """Stream every multigraph spanning tree in deterministic order."""
    stream = (
        expanded
        for tree in spanning_trees(graph)
        for expanded in tree_expansions(graph, tree)
    )
    if limit is not None:
        stream = itertools.islice(stream, limit)
    return stream


def random_spanning_tree(graph: AdjacencyGraph, seed) -> tuple[ConjugatePair, ...]:
    """A uniformly random multigraph spanning tree via a random walk.

    First-entrance edges of a simple random walk form a uniform
    spanning tree; picking uniformly among incident parallel edges
    makes the result uniform over the multigraph's trees.  `seed` may
    be an int or a random.Random to draw from.
    """
    if not graph.is_connected():
        raise ValueError("graph is disconnected: no spanning tree exists")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    incident = [[] for _ in range(graph.num_vertices)]
    for (a, b), pairs in graph.edges.items():
        for p in pairs:
            incident[a].append((b, p))
            incident[b].append((a, p))
    cur = 0
    seen = 1
    entered = [None] * graph.num_vertices
    while seen < graph.num_vertices:
        nxt, pair = rng.choice(incident[cur])
        if entered[nxt] is None and nxt != 0:
            entered[nxt] = pair
            seen += 1
        cur = nxt
    return tuple(entered[v] for v in range(1, graph.num_vertices))


def greedy_connected_subgraph(cycles: CycleSet, tables, factors, basis, rep) -> AdjacencyGraph:
    """A spanning tree found by frontier expansion, skipping the full graph.

    Starting from the first cycle, each processed cycle is probed
    against every still-unreached cycle for a single conjugate pair;
    newly reached cycles join the frontier (processed in ascending
    index order).  Useful when the complete pair computation is too
    expensive and any one tree suffices.
    """
    descs = cycles.cycles
    psi = len(descs)
    reached = bytearray(psi)
    reached[0] = 1
    frontier = [0]
    edges = {}
    while frontier and sum(reached) < psi:
        cur = min(frontier)
        frontier.remove(cur)
        for j in range(psi):
            if reached[j]:
                continue
            a, b = (cur, j) if cur < j else (j, cur)
            pair = first_conjugate_pair(descs[a], descs[b], tables, factors, basis, rep)
            if pair is not None:
                edges[(a, b)] = (pair,)
                reached[j] = 1
                frontier.append(j)
    if sum(reached) < psi:
        missing = [i for i in range(psi) if not reached[i]]
        raise ValueError(f"could not connect all cycles; unreachable: {missing}")
    return AdjacencyGraph(psi, edges)


@dataclass(frozen=True)
class DeBruijnSequence:
    """One generated sequence with the tree and start state that produced it."""

    bits: str
    order: int
    pairs: tuple[ConjugatePair, ...]
    initial_state: int

    def __str__(self):
        return self.bits

    def packed_hex(self) -> str:
        """Hex packing with s_0 as the most significant bit."""
        return f"{int(self.bits, 2):0{len(self.bits) // 4}x}"


def join_cycles(pairs, spec: Lfsr, init: int = 0) -> DeBruijnSequence:
    """Run the joined register for one full period of 2^n bits.

    The feedback is the linear one except on windows whose last n - 1
    bits match the suffix of a tree pair, where it is complemented;
    that swaps the successors inside each conjugate pair and splices
    the cycles along the tree.  Distinct pairs always carry distinct
    suffixes, which the precondition check enforces.
    """
    n = spec.n
    suffixes = {p.v >> 1 for p in pairs}
    if len(suffixes) != len(pairs):
        raise AssertionError("conjugate pairs in a tree must have distinct suffixes")
    out = []
    state = init
    taps, top = spec.taps, n - 1
    for _ in range(1 << n):
        out.append(state & 1)
        b = ((state & taps).bit_count() & 1) ^ ((state >> 1) in suffixes)
        state = (state >> 1) | b << top
    return DeBruijnSequence("".join(map(str, out)), n, tuple(pairs), init)


@dataclass(frozen=True)
class FeedbackFunction:
    """LFSR taps plus one complementing product term per tree pair.

    Adding, for each suffix w, the product of (x_i + w_i + 1) over
    i = 1..n-1 flips the linear feedback exactly on states whose tail
    matches w.  Stepping with this function reproduces join_cycles
    bit for bit.
    """

    poly: int
    order: int
    suffixes: frozenset[int]

    def value(self, state: int) -> int:
        lin = (state & (self.poly ^ (1 << self.order))).bit_count() & 1
        return lin ^ ((state >> 1) in self.suffixes)

    def step(self, state: int) -> int:
        return (state >> 1) | self.value(state) << (self.order - 1)

    def __str__(self):
        taps = [f"x{i}" for i in range(self.order) if self.poly >> i & 1]
        terms = " + ".join(taps) if taps else "0"
        for w in sorted(self.suffixes):
            bits = state_to_str(w, self.order - 1)
            prods = "*".join(
                f"x{i + 1}" if bits[i] == "1" else f"(x{i + 1}+1)" for i in range(self.order - 1)
            )
            terms += f" + {prods}"
        return terms


def feedback_function(pairs, spec: Lfsr) -> FeedbackFunction:
    """The joined register's feedback in symbolic form."""
    pairs = tuple(pairs)
    suffixes = frozenset(p.v >> 1 for p in pairs)
    if len(suffixes) != len(pairs):
        raise AssertionError("conjugate pairs in a tree must have distinct suffixes")
    return FeedbackFunction(spec.poly, spec.n, suffixes)


def verify_de_bruijn(seq, n: int) -> bool:
    """True iff the cyclic sequence contains every n-bit window exactly once."""
    bits = [int(c) for c in seq] if isinstance(seq, str) else list(seq)
    if len(bits) != 1 << n:
        raise ValueError(f"sequence length {len(bits)} is not 2^{n}")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("sequence must be binary")
    ext = bits + bits[: n - 1]
    seen = set()
    w = 0
    mask = (1 << n) - 1
    for i, b in enumerate(ext):
        w = (w >> 1) | b << (n - 1)
        if i >= n - 1:
            seen.add(w)
    return len(seen) == 1 << n
