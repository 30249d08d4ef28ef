"""Cycle structure of the sequences produced by a factored LFSR.

For f(x) = p_1(x) ... p_s(x) with pairwise distinct irreducible
factors, the 2^n sequences the register can produce split into cycles
(shift-equivalence classes).  Each factor p_i contributes the zero
cycle plus t_i nonzero cycles of period e_i, where e_i is the order of
p_i and t_i = (2^{n_i} - 1) / e_i.  A cycle of the product register is
described by which components are active, which component cycle each
active factor uses, and relative shifts between components; the shift
for component k is only free modulo gcd(e_k, lcm of the earlier active
periods), which is exactly the range enumerated here.

Every cycle gets one representative state, assembled from shifted
per-factor states through the StateBasis.
"""

import itertools
from dataclasses import dataclass, field
from math import gcd, lcm

from .gf2 import (
    FieldContext,
    degree,
    find_associated_primitive,
    format_poly,
    is_irreducible,
    poly_order,
)
from .lfsr import Lfsr, StateBasis, bits_to_state, decimate, solve_initial_state

__all__ = [
    "FactorData",
    "states_per_factor",
    "CycleDescriptor",
    "CycleSet",
    "enumerate_cycles",
    "representative_state",
    "locate_state",
    "canonical_shifts",
    "merge_congruence",
]


@dataclass
class FactorData:
    """One irreducible factor with a state on each of its nonzero cycles.

    ``states[j]`` is the representative of the j-th nonzero cycle; the
    zero cycle is implicit and is addressed by index ``t`` where pair
    sets need it.  The representatives are anchored by decimation of
    the associated primitive's m-sequence, which ties cycle j to the
    j-th cyclotomic class.
    """

    poly: int
    degree: int
    order: int
    t: int
    states: tuple[int, ...]
    assoc_primitive: int
    field: FieldContext
    lfsr: Lfsr
    _orbit: dict | None = field(default=None, repr=False, compare=False)

    @property
    def is_primitive(self) -> bool:
        return self.t == 1

    def locate(self, state: int) -> tuple[int, int]:
        """Return (j, k) with state = T^k states[j].

        Builds a lookup over all 2^deg - 1 nonzero states on first use.
        """
        if state == 0:
            raise ValueError("the zero state lies on the zero cycle")
        if self._orbit is None:
            orbit = {}
            for j, rep in enumerate(self.states):
                x = rep
                for k in range(self.order):
                    orbit[x] = (j, k)
                    x = self.lfsr.step(x)
                if x != rep:
                    raise AssertionError(f"cycle {j} of {format_poly(self.poly)} did not close")
            if len(orbit) != (1 << self.degree) - 1:
                raise AssertionError(
                    f"representatives of {format_poly(self.poly)} do not cover distinct cycles"
                )
            self._orbit = orbit
        return self._orbit[state]


def states_per_factor(p: int) -> FactorData:
    """A representative state for every nonzero cycle of one factor.

    For a primitive factor the single nonzero cycle holds all nonzero
    states and (1, 0, ..., 0) will do.  Otherwise take n*t consecutive
    bits of the associated primitive's m-sequence, started so that its
    t-decimation begins with (1, 0, ..., 0); the t decimations at
    offsets 0..t-1 then start on pairwise distinct cycles, and their
    length-n prefixes are the representatives.
    """
    if not is_irreducible(p):
        raise ValueError(f"factor {format_poly(p)} is reducible")
    if not p & 1:
        raise ValueError("factor x is not allowed: the register would be singular")
    n = degree(p)
    e = poly_order(p)
    t = ((1 << n) - 1) // e
    if t == 1:
        q = p
        states = (1,)
    else:
        q = find_associated_primitive(p)
        init = solve_initial_state(q, t)
        window = Lfsr(q).generate(init, n * t)
        states = tuple(
            bits_to_state(decimate(window, t, offset=j, count=n)) for j in range(t)
        )
    return FactorData(
        poly=p,
        degree=n,
        order=e,
        t=t,
        states=states,
        assoc_primitive=q,
        field=FieldContext(q),
        lfsr=Lfsr(p),
    )


@dataclass(frozen=True)
class CycleDescriptor:
    """One cycle: active-component flags, component cycle indices, shifts.

    ``indices[i]`` and ``shifts[i]`` are 0 whenever ``flags[i]`` is 0.
    Shifts are canonical: the first active component has shift 0 and
    component k is reduced modulo gcd(e_k, lcm of earlier periods).
    The period is the lcm of the active orders (1 when nothing is
    active, and also 1 for a lone x+1 component).
    """

    flags: tuple[int, ...]
    indices: tuple[int, ...]
    shifts: tuple[int, ...]
    period: int

    @property
    def active(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.flags) if a)

    def describe(self) -> str:
        """Symbolic form like "u1[0] + L2.u3[1]" (uI[j] = cycle j of factor I)."""
        if not any(self.flags):
            return "[0]"
        terms = []
        for i, a in enumerate(self.flags):
            if not a:
                continue
            shift = f"L{self.shifts[i]}." if self.shifts[i] else ""
            terms.append(f"{shift}u{i + 1}[{self.indices[i]}]")
        return "[" + " + ".join(terms) + "]"


@dataclass
class CycleSet:
    """All cycles of the factored register, in a fixed reproducible order."""

    cycles: tuple[CycleDescriptor, ...]
    zero_index: int
    special_index: int | None = None
    _lookup: dict = field(default=None, repr=False)

    def __post_init__(self):
        if self._lookup is None:
            self._lookup = {c: i for i, c in enumerate(self.cycles)}

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __getitem__(self, i):
        return self.cycles[i]

    def index_of(self, c: CycleDescriptor) -> int:
        return self._lookup[c]


def merge_congruence(a1: int, m1: int, a2: int, m2: int):
    """Combine r = a1 (mod m1) and r = a2 (mod m2); None if incompatible.

    Returns (a, lcm(m1, m2)) via Garner-style reconstruction, valid for
    arbitrary (not necessarily coprime) moduli.
    """
    g = gcd(m1, m2)
    if (a2 - a1) % g:
        return None
    m = m1 // g * m2
    k = (a2 - a1) // g * pow(m1 // g, -1, m2 // g) % (m2 // g)
    return (a1 + m1 * k) % m, m


def canonical_shifts(flags, shifts, orders) -> tuple[int, ...]:
    """Reduce raw per-component shifts to the canonical descriptor form.

    Two shift tuples name the same cycle iff they differ by one global
    shift r, taken modulo each active period.  Greedily pinning each
    component to the smallest reachable residue, while accumulating the
    constraint on r by CRT, lands exactly in the ranges enumerated by
    the cycle structure.
    """
    rho, mod = 0, 1
    out = []
    for a, sh, e in zip(flags, shifts, orders, strict=True):
        if not a:
            out.append(0)
            continue
        l = (sh + rho) % gcd(e, mod)
        out.append(l)
        merged = merge_congruence(rho, mod, (l - sh) % e, e)
        assert merged is not None  # compatible by construction
        rho, mod = merged
    return tuple(out)


def _flag_patterns(s: int):
    """Active-component patterns in the fixed report order.

    Counts with the first component as the top bit and the remaining
    components below it in reverse, so for s = 3 the patterns run
    000, 010, 001, 011, 100, 110, 101, 111.
    """
    for c in range(1 << s):
        flags = [c >> (s - 1) & 1]
        flags += [c >> (i - 2) & 1 for i in range(2, s + 1)]
        yield tuple(flags)


def enumerate_cycles(factors) -> CycleSet:
    """Every cycle of the product register, one descriptor each.

    Nesting order: active-component patterns outermost (all-zero
    first), then component cycle indices (first factor slowest), then
    shifts.  The order fixes the vertex numbering used by reports and
    by all spanning-tree indexing downstream.
    """
    factors = list(factors)
    s = len(factors)
    n = sum(f.degree for f in factors)
    descs = []
    zero_index = None
    for flags in _flag_patterns(s):
        fvals = [f.order if a else 1 for f, a in zip(factors, flags)]
        bounds = []
        prefix = 1
        for fv in fvals:
            bounds.append(gcd(fv, prefix))
            prefix = lcm(prefix, fv)
        period = lcm(*fvals)
        idx_ranges = [range(f.t) if a else range(1) for f, a in zip(factors, flags)]
        shift_ranges = [range(b) for b in bounds]
        for combo in itertools.product(*idx_ranges, *shift_ranges):
            desc = CycleDescriptor(flags, combo[:s], combo[s:], period)
            if not any(flags):
                zero_index = len(descs)
            descs.append(desc)
    total = sum(c.period for c in descs)
    if total != 1 << n:
        raise AssertionError(f"cycle periods sum to {total}, expected 2^{n}")
    return CycleSet(tuple(descs), zero_index)


def representative_state(c: CycleDescriptor, basis: StateBasis, factors) -> int:
    """A state on the described cycle: shifted component states through the basis."""
    blocks = [
        f.lfsr.advance(f.states[j], l) if a else 0
        for a, j, l, f in zip(c.flags, c.indices, c.shifts, factors, strict=True)
    ]
    return basis.compose(blocks)


def locate_state(v: int, basis: StateBasis, factors, cycles: CycleSet) -> int:
    """Index of the cycle containing the joint state v."""
    if v == 0:
        return cycles.zero_index
    flags, indices, shifts = [], [], []
    for blk, f in zip(basis.decompose(v), factors):
        if blk == 0:
            flags.append(0)
            indices.append(0)
            shifts.append(0)
        else:
            j, k = f.locate(blk)
            flags.append(1)
            indices.append(j)
            shifts.append(k)
    orders = [f.order for f in factors]
    canon = canonical_shifts(flags, shifts, orders)
    period = lcm(*(e for a, e in zip(flags, orders) if a))
    return cycles.index_of(
        CycleDescriptor(tuple(flags), tuple(indices), canon, period)
    )
