"""LFSR state machinery: stepping, sequences, decimation, state bases.

A state of an n-stage register is an int whose bit i holds s_i, i.e.
the next output bit sits in bit 0.  All bit I/O follows this
least-index-first convention, matching the way states are written as
(s_i, ..., s_{i+n-1}).

The companion matrix A of the characteristic polynomial acts on states
by right multiplication, so advancing a state k steps is one vector
times A^k.  Matrices over GF(2) are stored as lists of row masks.
"""

from .gf2 import degree, format_poly, is_primitive

__all__ = [
    "Lfsr",
    "decimate",
    "solve_initial_state",
    "StateBasis",
    "bits_to_state",
    "state_to_bits",
    "state_to_str",
    "parse_state",
]


def bits_to_state(bits) -> int:
    """Pack an iterable of bits (s_0 first) into a state int."""
    v = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("state bits must be 0 or 1")
        v |= b << i
    return v


def state_to_bits(v: int, n: int) -> tuple[int, ...]:
    return tuple(v >> i & 1 for i in range(n))


def state_to_str(v: int, n: int) -> str:
    """Render a state as its bit string, s_0 first."""
    return "".join(str(v >> i & 1) for i in range(n))


def parse_state(text: str) -> int:
    """Parse a bit string written s_0 first (inverse of state_to_str)."""
    s = "".join(text.split())
    if not s or s.strip("01"):
        raise ValueError(f"cannot parse state {text!r}: expected a string of 0s and 1s")
    return bits_to_state(int(c) for c in s)


def _vec_mat(v: int, rows: list[int]) -> int:
    """Row vector times matrix over GF(2); both sides are bit masks."""
    r = 0
    while v:
        low = v & -v
        r ^= rows[low.bit_length() - 1]
        v ^= low
    return r


def _mat_mul(a: list[int], b: list[int]) -> list[int]:
    return [_vec_mat(row, b) for row in a]


def _mat_pow(a: list[int], k: int) -> list[int]:
    n = len(a)
    r = [1 << i for i in range(n)]
    while k:
        if k & 1:
            r = _mat_mul(r, a)
        a = _mat_mul(a, a)
        k >>= 1
    return r


def _gf2_invert(rows: list[int], n: int) -> list[int]:
    """Invert an n x n bit matrix by Gauss-Jordan elimination."""
    aug = [rows[i] | 1 << (n + i) for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i] >> col & 1), None)
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(n):
            if i != col and aug[i] >> col & 1:
                aug[i] ^= aug[col]
    return [aug[i] >> n for i in range(n)]


def _gf2_solve_left(rows: list[int], n: int, rhs: int) -> int:
    """Solve x * M = rhs over GF(2), with M given as row masks."""
    cols = [0] * n
    for i in range(n):
        r = rows[i]
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= 1 << i
            r ^= low
    # now solve M^T y = rhs
    aug = [cols[j] | (rhs >> j & 1) << n for j in range(n)]
    x = 0
    solved = []
    for col in range(n):
        piv = next((i for i in range(len(aug)) if aug[i] >> col & 1), None)
        if piv is None:
            continue
        row = aug.pop(piv)
        solved.append((col, row))
        aug = [r ^ row if r >> col & 1 else r for r in aug]
    for r in aug:
        if r >> n:
            raise ValueError("inconsistent linear system")
    for col, row in reversed(solved):
        # back-substitute unknowns fixed in later columns
        acc = row >> n & 1
        rr = row & (((1 << n) - 1) ^ (1 << col))
        while rr:
            low = rr & -rr
            acc ^= x >> (low.bit_length() - 1) & 1
            rr ^= low
        x |= acc << col
    return x


class Lfsr:
    """An n-stage linear feedback shift register.

    Defined by its characteristic polynomial f(x) = x^n + sum c_i x^i;
    the feedback computes the new bit as the parity of the tapped state
    bits c_i.  The constant term must be 1 (a nonsingular register), so
    every state lies on a cycle.
    """

    def __init__(self, poly: int):
        n = degree(poly)
        if n < 1:
            raise ValueError("characteristic polynomial must have degree >= 1")
        if not poly & 1:
            raise ValueError(
                f"{format_poly(poly)} has constant term 0: the register would be singular"
            )
        self.poly = poly
        self.n = n
        self.taps = poly ^ (1 << n)
        self._companion = None

    def __repr__(self):
        return f"Lfsr({format_poly(self.poly)})"

    def step(self, state: int) -> int:
        b = (state & self.taps).bit_count() & 1
        return (state >> 1) | b << (self.n - 1)

    def generate(self, init, length: int) -> list[int]:
        """First `length` output bits from the given initial state."""
        state = init if isinstance(init, int) else bits_to_state(init)
        if state >> self.n:
            raise ValueError(f"initial state does not fit in {self.n} stages")
        out = []
        taps, n1 = self.taps, self.n - 1
        for _ in range(length):
            out.append(state & 1)
            state = (state >> 1) | ((state & taps).bit_count() & 1) << n1
        return out

    def companion(self) -> list[int]:
        """Companion matrix of the characteristic polynomial (row masks)."""
        if self._companion is None:
            n = self.n
            rows = [0] * n
            for i in range(n):
                rows[i] = (self.poly >> i & 1) << (n - 1)
                if i:
                    rows[i] |= 1 << (i - 1)
            self._companion = rows
        return self._companion

    def advance(self, state: int, k: int) -> int:
        """The k-th successor of a state (k >= 0).

        Small k just iterates; past 4n steps it is cheaper to raise the
        companion matrix to the k-th power.
        """
        if k < 0:
            raise ValueError("k must be nonnegative; reduce shifts modulo the period first")
        if k <= 4 * self.n:
            for _ in range(k):
                state = self.step(state)
            return state
        return _vec_mat(state, _mat_pow(self.companion(), k))


def decimate(seq, d: int, offset: int = 0, count: int | None = None) -> list[int]:
    """The d-decimation v_j = seq[offset + d*j].

    Yields every full sample available, or exactly `count` samples when
    requested (raising if the input is too short for that).
    """
    if d < 1 or offset < 0:
        raise ValueError("need d >= 1 and offset >= 0")
    n = len(seq)
    avail = 0 if offset >= n else (n - offset - 1) // d + 1
    if count is None:
        count = avail
    elif count > avail:
        raise ValueError(f"sequence too short: {count} samples requested, {avail} available")
    return [seq[offset + d * j] for j in range(count)]


def solve_initial_state(q: int, t: int) -> int:
    """Initial state making the t-decimation of q's m-sequence start (1, 0, ..., 0).

    q must be primitive of degree n, t a divisor of 2^n - 1.  With A
    the companion matrix of q, the state s solves the n linear
    conditions "first bit of s A^(jt) equals [j == 0]".
    """
    if not is_primitive(q):
        raise ValueError(f"{format_poly(q)} is not primitive")
    n = degree(q)
    if t < 1 or ((1 << n) - 1) % t:
        raise ValueError("t must divide 2^n - 1")
    step_t = _mat_pow(Lfsr(q).companion(), t)
    cond = [0] * n  # cond[i] bit j = entry (i, 0) of A^(jt)
    acc = [1 << i for i in range(n)]
    for j in range(n):
        for i in range(n):
            cond[i] |= (acc[i] & 1) << j
        acc = _mat_mul(acc, step_t)
    return _gf2_solve_left(cond, n, 1)


class StateBasis:
    """The change of basis between joint states and per-factor states.

    Row j of the block for factor p_i is the length-n prefix of the
    p_i-register's output from the impulse state e_j.  Stacking the
    blocks gives an n x n matrix P of full rank, so
    v = (a_1, ..., a_s) P is a bijection between concatenated component
    states and states of the product register.  P commutes with the
    state operator, which is what makes per-factor bookkeeping valid.
    Immutable once built; safe to share across threads.
    """

    def __init__(self, polys):
        polys = list(polys)
        self.polys = polys
        self.degrees = [degree(p) for p in polys]
        self.n = sum(self.degrees)
        self.offsets = []
        off = 0
        for d in self.degrees:
            self.offsets.append(off)
            off += d
        rows = []
        for p in polys:
            reg = Lfsr(p)
            for j in range(reg.n):
                rows.append(bits_to_state(reg.generate(1 << j, self.n)))
        self.rows = rows
        try:
            self.inv_rows = _gf2_invert(rows, self.n)
        except ValueError:
            raise ValueError(
                "state basis is rank deficient: factors must be pairwise distinct irreducibles"
            ) from None

    def compose(self, blocks) -> int:
        """Map per-factor states (one int per factor) to a joint state."""
        a = 0
        for blk, off, d in zip(blocks, self.offsets, self.degrees, strict=True):
            if blk >> d:
                raise ValueError(f"component state {blk:#x} does not fit in {d} stages")
            a |= blk << off
        return _vec_mat(a, self.rows)

    def decompose(self, v: int) -> list[int]:
        """Inverse of compose."""
        if v >> self.n:
            raise ValueError(f"state does not fit in {self.n} stages")
        a = _vec_mat(v, self.inv_rows)
        return [a >> off & ((1 << d) - 1) for off, d in zip(self.offsets, self.degrees)]
