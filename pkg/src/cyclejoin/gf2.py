"""Polynomial and finite-field arithmetic over GF(2).

Polynomials live in F_2[x] and are represented as plain Python ints:
bit i holds the coefficient of x^i, so 0b1011 is x^3 + x + 1.  The text
form used at every interface lists coefficients from the highest degree
down to the constant term ("1011" is x^3 + x + 1, "11111" is
x^4 + x^3 + x^2 + x + 1); embedded whitespace is ignored.  Because the
constant term ends up in bit 0, parsing a coefficient string is just
``int(s, 2)``.

Beyond plain arithmetic the module provides irreducibility and
primitivity tests, multiplicative orders, the search for an associated
primitive polynomial (a primitive q whose root alpha satisfies
alpha^t = beta for the root beta of a non-primitive irreducible g), and
log/exp/Zech tables for GF(2^n) together with cyclotomic numbers.
All computations are exact; nothing here is probabilistic.
"""

from dataclasses import dataclass

__all__ = [
    "degree",
    "parse_poly",
    "format_poly",
    "poly_mul",
    "poly_divmod",
    "poly_mod",
    "poly_gcd",
    "poly_mulmod",
    "poly_powmod",
    "is_irreducible",
    "poly_order",
    "is_primitive",
    "find_associated_primitive",
    "prime_factors",
    "CyclotomicParams",
    "FieldContext",
    "cyclotomic_number",
]

X = 0b10  # the polynomial x


def degree(p: int) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return p.bit_length() - 1


def parse_poly(text: str) -> int:
    """Parse a coefficient string (highest degree first) into a polynomial.

    Whitespace is stripped, so "100 111 111" is accepted.
    """
    s = "".join(text.split())
    if not s or s.strip("01"):
        raise ValueError(f"cannot parse polynomial {text!r}: expected a string of 0s and 1s")
    p = int(s, 2)
    if p == 0:
        raise ValueError(f"cannot parse polynomial {text!r}: zero polynomial")
    return p


def format_poly(p: int) -> str:
    """Inverse of parse_poly."""
    if p < 0:
        raise ValueError("negative value is not a polynomial")
    return bin(p)[2:]


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two polynomials."""
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a divided by b, for b nonzero."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    m, n = degree(a), degree(b)
    if m < n:
        return 0, a
    q = 0
    b <<= m - n
    for i in range(m - n, -1, -1):
        if a >> (i + n) & 1:
            a ^= b
            q |= 1 << i
        b >>= 1
    return q, a


def poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b, for b nonzero."""
    return poly_divmod(a, b)[1]


def poly_gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) is 0."""
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(poly_mul(a, b), m)


def poly_powmod(a: int, k: int, m: int) -> int:
    """a^k modulo m by square and multiply, k >= 0."""
    if k < 0:
        raise ValueError("negative exponent")
    r = poly_mod(1, m)
    a = poly_mod(a, m)
    while k:
        if k & 1:
            r = poly_mulmod(r, a, m)
        a = poly_mulmod(a, a, m)
        k >>= 1
    return r


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m by trial division, ascending."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def is_irreducible(p: int) -> bool:
    """Exact irreducibility test for a polynomial of degree >= 1.

    Uses the x^(2^d) == x criterion together with gcd checks against the
    maximal proper subfields.
    """
    d = degree(p)
    if d < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    if d == 1:
        return True
    if not p & 1:
        return False  # divisible by x
    # h_j = x^(2^j) mod p, advanced by repeated squaring
    h = X
    targets = {d // r for r in prime_factors(d)}
    for j in range(1, d + 1):
        h = poly_mulmod(h, h, p)
        if j in targets and poly_gcd(h ^ X, p) != 1:
            return False
    return h == X


def poly_order(p: int) -> int:
    """Multiplicative order of a root of the irreducible polynomial p.

    This is the least e with x^e == 1 (mod p); it divides 2^deg(p) - 1.
    Found by stripping prime factors of 2^n - 1 (trial division is fine
    at the intended scale of n <= 24 per factor).
    """
    if not is_irreducible(p):
        raise ValueError(f"{format_poly(p)} is reducible; order is defined for irreducible polynomials")
    if not p & 1:
        raise ValueError("x has no multiplicative order")
    n = degree(p)
    e = (1 << n) - 1
    for q in prime_factors(e):
        while e % q == 0 and poly_powmod(X, e // q, p) == 1:
            e //= q
    return e


def is_primitive(p: int) -> bool:
    """True iff p is irreducible with a root of maximal order 2^deg - 1."""
    return is_irreducible(p) and p & 1 and poly_order(p) == (1 << degree(p)) - 1


def _eval_poly(g: int, beta: int, m: int) -> int:
    """g(beta) in F_2[x]/(m), by Horner's rule."""
    acc = 0
    for i in range(degree(g), -1, -1):
        acc = poly_mulmod(acc, beta, m) ^ (g >> i & 1)
    return poly_mod(acc, m)


def find_associated_primitive(g: int) -> int:
    """Primitive q of the same degree whose root alpha has alpha^t a root of g.

    Here t = (2^n - 1) / order(g).  A primitive polynomial is its own
    associate.  Candidates are scanned in ascending order of the
    coefficient bit pattern (constant term in bit 0), so the result is
    deterministic.
    """
    n = degree(g)
    e = poly_order(g)
    t = ((1 << n) - 1) // e
    if t == 1:
        return g
    for q in range((1 << n) | 1, 1 << (n + 1), 2):
        if not is_irreducible(q) or poly_order(q) != (1 << n) - 1:
            continue
        beta = poly_powmod(X, t, q)
        if _eval_poly(g, beta, q) == 0:
            # g is irreducible, so g(beta) == 0 makes g the minimal polynomial of beta
            return q
    raise ArithmeticError(f"no associated primitive polynomial found for {format_poly(g)}")


@dataclass(frozen=True)
class CyclotomicParams:
    """Order e of an irreducible polynomial and the index t = (2^n - 1) / e."""

    e: int
    t: int

    def __post_init__(self):
        m = self.e * self.t
        if self.e < 1 or self.t < 1 or m & (m + 1):
            raise ValueError("e * t must equal 2^n - 1")

    @classmethod
    def for_factor(cls, deg: int, order: int) -> "CyclotomicParams":
        return cls(order, ((1 << deg) - 1) // order)


class FieldContext:
    """Exp/log/Zech tables for GF(2^n) over a primitive modulus.

    Elements are bit vectors of length n read as polynomials modulo the
    modulus.  With alpha the class of x, ``exp[l]`` is alpha^l,
    ``log[v]`` its inverse, and ``zech[l]`` the Zech logarithm: the
    exponent with alpha^zech[l] = alpha^l + 1.  Since alpha^0 + 1 = 0
    has no logarithm, zech[0] is None (the "infinity" sentinel).

    Construction costs O(2^n) time and memory and is done once; after
    that the object is immutable and safe to share between threads.
    """

    def __init__(self, modulus: int):
        n = degree(modulus)
        if n < 1 or not modulus & 1:
            raise ValueError("modulus must have degree >= 1 and constant term 1")
        e = (1 << n) - 1
        exp = []
        log: dict[int, int] = {}
        cur = 1
        for k in range(e):
            if cur in log:
                raise ValueError(f"{format_poly(modulus)} is not primitive")
            exp.append(cur)
            log[cur] = k
            cur <<= 1
            if cur >> n & 1:
                cur ^= modulus
        if cur != 1:
            raise ValueError(f"{format_poly(modulus)} is not primitive")
        self.modulus = modulus
        self.n = n
        self.e = e
        self.exp = exp
        self.log = log
        self.zech = [None] + [log[exp[l] ^ 1] for l in range(1, e)]

    def zech_log(self, l: int):
        """Zech logarithm of l taken modulo 2^n - 1; None for l == 0."""
        return self.zech[l % self.e]

    def __repr__(self):
        return f"FieldContext(GF(2^{self.n}) mod {format_poly(self.modulus)})"


def cyclotomic_number(i: int, j: int, params: CyclotomicParams, ctx: FieldContext) -> int:
    """The cyclotomic number (i, j)_t over ctx's field.

    Counts elements xi of the coset C_i = alpha^i <alpha^t> whose
    successor xi + 1 lies in C_j.  Membership of xi + 1 is read off the
    Zech table: xi = alpha^l puts xi + 1 in class zech(l) mod t.
    """
    e, t = params.e, params.t
    if e * t != ctx.e:
        raise ValueError("params do not match the field size")
    i %= t
    j %= t
    count = 0
    for s in range(e):
        tau = ctx.zech[(i + s * t) % ctx.e]
        if tau is not None and tau % t == j:
            count += 1
    return count
