import random

import pytest

from cyclejoin.cycles import (
    canonical_shifts,
    enumerate_cycles,
    locate_state,
    merge_congruence,
    states_per_factor,
)
from cyclejoin.gf2 import is_irreducible
from cyclejoin.lfsr import state_to_str
from cyclejoin.pipeline import FactoredLfsr

N7 = "11,111,11111"

# golden cycle table for the 7-stage instance: state bits (s_0 first) and period
N7_CYCLE_TABLE = [
    ("0000000", 1),
    ("1011011", 3),
    ("1000110", 5),
    ("0111101", 5),
    ("0010100", 5),
    ("0011101", 15),
    ("1100110", 15),
    ("1001111", 15),
    ("1111111", 1),
    ("0100100", 3),
    ("0111001", 5),
    ("1000010", 5),
    ("1101011", 5),
    ("1100010", 15),
    ("0011001", 15),
    ("0110000", 15),
]


def test_states_per_factor_n7_reference():
    fd = states_per_factor(0b11111)
    assert fd.order == 5 and fd.t == 3
    assert fd.assoc_primitive == 0b10011
    assert [state_to_str(s, 4) for s in fd.states] == ["1000", "0111", "0010"]


def test_states_per_factor_primitive_cases():
    assert states_per_factor(0b111).states == (1,)
    assert states_per_factor(0b11).states == (1,)
    fd = states_per_factor(0b10011)
    assert fd.states == (1,) and fd.t == 1 and fd.order == 15


def test_states_per_factor_rejects_bad_input():
    with pytest.raises(ValueError):
        states_per_factor(0b1001)  # reducible
    with pytest.raises(ValueError):
        states_per_factor(0b10)  # x


def test_factor_locate():
    fd = states_per_factor(0b11111)
    for j, rep in enumerate(fd.states):
        assert fd.locate(rep) == (j, 0)
        assert fd.locate(fd.lfsr.advance(rep, 3)) == (j, 3)
    with pytest.raises(ValueError):
        fd.locate(0)


def test_enumerate_cycles_n7_reference():
    inst = FactoredLfsr.from_strings(N7)
    assert inst.psi == 16
    assert [c.period for c in inst.cycles] == [p for _, p in N7_CYCLE_TABLE]
    assert inst.cycles.zero_index == 0


def test_representative_states_n7_reference():
    inst = FactoredLfsr.from_strings(N7)
    got = [(state_to_str(inst.representative(i), 7), c.period) for i, c in enumerate(inst.cycles)]
    assert got == N7_CYCLE_TABLE


def test_enumerate_cycles_single_primitive():
    factors = [states_per_factor(0b1011)]
    cs = enumerate_cycles(factors)
    assert len(cs) == 2
    assert [c.period for c in cs] == [1, 7]


@pytest.mark.parametrize(
    "facs,psi",
    [
        ("1011,1101", 10),
        ("11,111,11111", 16),
        ("11,1101,11001", 8),
        ("10011,11111", 20),
        ("111,1011,11111", 16),
        ("11,100111001", 32),
        ("11,111,1011,11111", 32),
        ("11111111111", 94),
        ("111,1011,1001001", 60),
        ("101011100011", 90),
        ("1001001,1010111", 74),
    ],
)
def test_cycle_counts_and_period_sum(facs, psi):
    inst = FactoredLfsr.from_strings(facs)
    assert inst.psi == psi
    assert sum(c.period for c in inst.cycles) == 1 << inst.n


def _random_factor_sets(seed, count, max_n=12):
    pool = [p for d in range(1, 9) for p in range(1 << d, 1 << (d + 1)) if p & 1 and is_irreducible(p)]
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        rng.shuffle(pool)
        picked, total = [], 0
        for p in pool:
            d = p.bit_length() - 1
            if total + d <= max_n:
                picked.append(p)
                total += d
            if total >= max_n - 2:
                break
        if total >= 2:
            out.append(sorted(picked))
    return out


def test_period_sum_random_factor_sets():
    for polys in _random_factor_sets(seed=1, count=8):
        inst = FactoredLfsr(polys)
        assert sum(c.period for c in inst.cycles) == 1 << inst.n


@pytest.mark.parametrize("facs", ["11,111,11111", "1011,1101", "10011,11111", "11,100111001"])
def test_cycles_partition_the_state_space(facs):
    inst = FactoredLfsr.from_strings(facs)
    seen = set()
    for i, c in enumerate(inst.cycles):
        v = inst.representative(i)
        for _ in range(c.period):
            assert v not in seen
            seen.add(v)
            v = inst.lfsr.step(v)
        assert v == inst.representative(i)  # closes after exactly `period` steps
    assert len(seen) == 1 << inst.n


def test_zero_descriptor_maps_to_zero_state():
    inst = FactoredLfsr.from_strings(N7)
    assert inst.representative(inst.cycles.zero_index) == 0


def test_locate_state_roundtrip():
    inst = FactoredLfsr.from_strings("10011,11111")
    for i, c in enumerate(inst.cycles):
        v = inst.representative(i)
        assert locate_state(v, inst.basis, inst.factors, inst.cycles) == i
        w = inst.lfsr.advance(v, 5 % c.period if c.period > 1 else 0)
        assert locate_state(w, inst.basis, inst.factors, inst.cycles) == i
    assert locate_state(0, inst.basis, inst.factors, inst.cycles) == inst.cycles.zero_index


def test_special_cycle_is_v16_in_n7_reference():
    inst = FactoredLfsr.from_strings(N7)
    assert inst.cycles.special_index == 15
    # S itself lies on that cycle
    assert locate_state(1, inst.basis, inst.factors, inst.cycles) == 15


def test_merge_congruence():
    assert merge_congruence(1, 3, 4, 6) == (4, 6)
    assert merge_congruence(1, 4, 0, 6) is None
    assert merge_congruence(2, 4, 0, 6) == (6, 12)
    a, m = merge_congruence(3, 5, 4, 7)
    assert m == 35 and a % 5 == 3 and a % 7 == 4


def test_canonical_shifts_invariance_under_global_shift():
    rng = random.Random(9)
    orders = [1, 7, 15]
    flags = (1, 1, 1)
    for _ in range(50):
        shifts = [rng.randrange(e) for e in orders]
        base = canonical_shifts(flags, shifts, orders)
        r = rng.randrange(1, 105)
        moved = [(sh + r) % e for sh, e in zip(shifts, orders)]
        assert canonical_shifts(flags, moved, orders) == base
        assert base[0] == 0 or flags[0] == 0


def test_describe():
    inst = FactoredLfsr.from_strings(N7)
    assert inst.cycles[0].describe() == "[0]"
    assert inst.cycles[1].describe() == "[u2[0]]"
    assert "u1[0]" in inst.cycles[15].describe()
