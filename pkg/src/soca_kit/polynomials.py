"""Univariate polynomial arithmetic over a finite field.

Coefficients are stored in ascending degree order (``coeffs[i]`` multiplies
X^i) and normalized so the last coefficient is nonzero; the zero polynomial
has an empty coefficient tuple and degree -inf.  A bitmask fast path over
GF(2) backs the large gcd counts.
"""

from __future__ import annotations

import itertools
import re

from .fields import Field

NEG_INF = float("-inf")

ENUMERATION_CAP = 1 << 20  # largest q^m the exhaustive irreducibility oracle will scan


class Poly:
    """Immutable univariate polynomial over a :class:`~soca_kit.fields.Field`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [field.check(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def x_pow(cls, field: Field, n: int) -> "Poly":
        return cls(field, (0,) * n + (1,))

    @classmethod
    def from_mask(cls, field: Field, mask: int) -> "Poly":
        """GF(2) polynomial from its ascending-coefficient bitmask."""
        if field.q != 2:
            raise ValueError("bitmask form is defined over GF(2) only")
        return cls(field, tuple((mask >> i) & 1 for i in range(mask.bit_length())))

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (of the zero polynomial: 0)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def to_mask(self) -> int:
        if self.field.q != 2:
            raise ValueError("bitmask form is defined over GF(2) only")
        return sum(c << i for i, c in enumerate(self.coeffs))

    def code(self) -> int:
        """Coefficients read as a radix-q integer; a total order on polynomials."""
        q = self.field.q
        n = 0
        for c in reversed(self.coeffs):
            n = n * q + c
        return n

    # -- ring operations -----------------------------------------------------

    def _same_field(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or other.field != self.field:
            raise ValueError("operands live in different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, (f.add(self[i], other[i]) for i in range(n)))

    def __sub__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(f, (f.sub(self[i], other[i]) for i in range(n)))

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, (f.neg(c) for c in self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, (f.mul(c, a) for a in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = f.inv(other.lc)
        quo = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            c = f.mul(rem[-1], inv_lc)
            quo[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        r, b = Poly.one(self.field), self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __call__(self, x: int) -> int:
        """Horner evaluation at a field element."""
        f = self.field
        f.check(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    # -- text form ------------------------------------------------------------

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                base = "x" if i == 1 else f"x^{i}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly({self.field.descriptor()}, {self})"


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(a, 0) = monic(a)."""
    if a.field != b.field:
        raise ValueError("operands live in different fields")
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base**e reduced modulo mod."""
    r = Poly.one(base.field)
    b = base % mod
    while e:
        if e & 1:
            r = (r * b) % mod
        b = (b * b) % mod
        e >>= 1
    return r


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(a: Poly) -> bool:
    """Deterministic Rabin criterion for irreducibility over GF(q)."""
    m = a.degree
    if m is NEG_INF or m < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if m == 1:
        return True
    f = a.field
    q = f.q
    x = Poly.x(f)
    for r in _prime_factors(m):
        # X^(q^(m/r)) - X must be coprime with a
        h = x
        for _ in range(m // r):
            h = pow_mod(h, q, a)
        if gcd(h - x, a).degree != 0:
            return False
    h = x
    for _ in range(m):
        h = pow_mod(h, q, a)
    return h == x % a


def _all_polys_of_degree(field: Field, m: int, monic: bool):
    """Yield every (monic) polynomial of exact degree m, ascending by code."""
    q = field.q
    leads = (1,) if monic else tuple(range(1, q))
    for lead in leads:
        for lower in itertools.product(range(q), repeat=m):
            # itertools.product varies the last position fastest; we want the
            # low-degree coefficients to vary fastest for ascending codes.
            yield Poly(field, lower[::-1] + (lead,))


def irreducibles_of_degree(field: Field, m: int) -> list[Poly]:
    """All monic irreducible polynomials of degree m, by exhaustive trial division.

    This is deliberately independent of :func:`is_irreducible` and serves as
    its oracle in the test suite.
    """
    if not 1 <= m <= 10:
        raise ValueError(f"degree {m} outside the supported range 1..10")
    if field.q**m > ENUMERATION_CAP:
        raise ValueError(f"{field.q}^{m} candidates exceed the enumeration cap")
    divisors = []
    for k in range(1, m // 2 + 1):
        divisors.extend(_all_polys_of_degree(field, k, monic=True))
    out = []
    for cand in _all_polys_of_degree(field, m, monic=True):
        if not any((cand % d).is_zero for d in divisors):
            out.append(cand)
    # product order above is not the code order; sort canonically
    out.sort(key=Poly.code)
    return out


def _sorted_codes(polys):
    return sorted(polys, key=Poly.code)


# -- GF(2) bitmask fast path ---------------------------------------------------
# Polynomials over GF(2) as plain ints, bit i = coefficient of X^i.  Used by the
# large linear-rule counts; cross-validated against Poly in the tests.


def mask_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def mask_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mask_gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, mask_divmod(a, b)[1]
    return a


# -- parsing and formatting ----------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*?)?x(?:\^(\d+))?$|^(\d+)$")


def parse_poly(field: Field, text: str) -> Poly:
    """Parse "1+x^2+x^3" style text, or a GF(2) compact bit string like "1101".

    Monomials are '+'-separated, case-insensitive, in any order; coefficients
    are written "c*x^i" (the '*' may be omitted).  The compact form lists
    ascending-degree coefficients.
    """
    s = text.strip().lower().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if field.q == 2 and re.fullmatch(r"[01]+", s):
        return Poly(field, (int(c) for c in s))
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        if m.group(3) is not None:
            c, e = int(m.group(3)), 0
        else:
            c = int(m.group(1)) if m.group(1) else 1
            e = int(m.group(2)) if m.group(2) else 1
        field.check(c)
        coeffs[e] = field.add(coeffs.get(e, 0), c)
    n = max(coeffs) + 1
    return Poly(field, (coeffs.get(i, 0) for i in range(n)))
