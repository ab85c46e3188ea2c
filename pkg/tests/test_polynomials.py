"""Polynomial arithmetic, gcd, irreducibility, and the GF(2) mask fast path."""

import itertools
import random

import pytest

from soca_kit.fields import Field, GF2, GF3
from soca_kit.polynomials import (
    Poly,
    gcd,
    irreducibles_of_degree,
    is_irreducible,
    mask_divmod,
    mask_gcd,
    mask_mul,
    parse_poly,
)

GF4 = Field(2, 2)


def P(field, *coeffs):
    return Poly(field, coeffs)


def random_poly(rng, field, max_deg):
    return Poly(field, [rng.randrange(field.q) for _ in range(rng.randint(0, max_deg + 1))])


def test_normalization_and_degree():
    assert P(GF2, 1, 1, 0, 0).coeffs == (1, 1)
    z = Poly.zero(GF2)
    assert z.coeffs == () and z.degree == float("-inf") and z.is_zero
    assert P(GF3, 0, 0, 2).degree == 2


def test_divmod_hand_oracles():
    # long division by hand: x^4 + 1 = (x + 1)(x^3 + x^2 + x + 1) + 0 over GF(2)
    q, r = divmod(P(GF2, 1, 0, 0, 0, 1), P(GF2, 1, 1))
    assert (q, r) == (P(GF2, 1, 1, 1, 1), Poly.zero(GF2))
    # 1 + x + x^2 = (x + 1) * x + 1
    q, r = divmod(P(GF2, 1, 1, 1), P(GF2, 1, 1))
    assert (q, r) == (P(GF2, 0, 1), Poly.one(GF2))
    for a in (P(GF2, 1, 1, 1), P(GF3, 2, 1), P(GF4, 3, 0, 2)):
        assert divmod(a, a) == (Poly.one(a.field), Poly.zero(a.field))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(P(GF2, 1, 1), Poly.zero(GF2))


def test_divmod_property_randomized():
    rng = random.Random(7)
    for field in (GF2, GF3, GF4):
        for _ in range(200):
            a = random_poly(rng, field, 8)
            b = random_poly(rng, field, 5)
            if b.is_zero:
                continue
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero or r.degree < b.degree


def test_gcd_examples():
    assert gcd(P(GF2, 1, 1, 1), P(GF2, 1, 0, 0, 0, 1)) == Poly.one(GF2)
    # x^4 + 1 = (x + 1)^4 in characteristic 2, so the gcd with (x + 1)^2 is (x + 1)^2
    assert gcd(P(GF2, 1, 0, 1), P(GF2, 1, 0, 0, 0, 1)) == P(GF2, 1, 0, 1)
    assert gcd(P(GF2, 1, 0, 1), P(GF2, 1, 1, 1)) == Poly.one(GF2)


def test_gcd_properties_randomized():
    rng = random.Random(11)
    for field in (GF2, GF3, GF4):
        for _ in range(150):
            a = random_poly(rng, field, 7)
            b = random_poly(rng, field, 7)
            if a.is_zero and b.is_zero:
                continue
            g = gcd(a, b)
            assert g == gcd(b, a)
            assert g.lc == 1
            assert (a % g).is_zero and (b % g).is_zero
        a = random_poly(rng, field, 7)
        if not a.is_zero:
            assert gcd(a, Poly.zero(field)) == a.monic()
    with pytest.raises(ValueError):
        gcd(Poly.zero(GF2), Poly.zero(GF2))


def test_eval():
    assert P(GF2, 1, 1, 1)(1) == 1
    assert P(GF2, 1, 0, 1)(1) == 0  # XOR of the coefficients
    assert Poly.zero(GF3)(2) == 0
    assert P(GF3, 1, 2, 1)(2) == (1 + 4 + 4) % 3


def test_irreducibility_examples():
    assert is_irreducible(P(GF2, 1, 1, 0, 1))  # 1 + x + x^3
    assert not is_irreducible(P(GF2, 1, 1, 0, 0, 0, 1))  # 1 + x + x^5
    assert is_irreducible(P(GF2, 1, 1))  # degree 1
    with pytest.raises(ValueError):
        is_irreducible(Poly.one(GF2))


def test_factorization_of_1_x_x5():
    # (1 + x + x^2)(1 + x^2 + x^3) = 1 + x + x^5
    assert P(GF2, 1, 1, 1) * P(GF2, 1, 0, 1, 1) == P(GF2, 1, 1, 0, 0, 0, 1)


def test_irreducibles_of_degree_examples():
    assert irreducibles_of_degree(GF2, 1) == [P(GF2, 0, 1), P(GF2, 1, 1)]
    assert irreducibles_of_degree(GF2, 2) == [P(GF2, 1, 1, 1)]
    deg4 = irreducibles_of_degree(GF2, 4)
    assert len(deg4) == 3
    assert deg4 == [P(GF2, 1, 1, 0, 0, 1), P(GF2, 1, 0, 0, 1, 1), P(GF2, 1, 1, 1, 1, 1)]
    # 1 + x^2 + x^4 = (1 + x + x^2)^2 is excluded
    assert P(GF2, 1, 0, 1, 0, 1) not in deg4
    assert P(GF2, 1, 1, 1) * P(GF2, 1, 1, 1) == P(GF2, 1, 0, 1, 0, 1)


def test_rabin_agrees_with_trial_division_oracle():
    for field, max_deg in ((GF2, 8), (GF3, 4)):
        for m in range(1, max_deg + 1):
            table = set(p.coeffs for p in irreducibles_of_degree(field, m))
            for lower in itertools.product(range(field.q), repeat=m):
                p = Poly(field, lower + (1,))
                assert is_irreducible(p) == (p.coeffs in table), str(p)


def test_char2_square_identity():
    for m in range(1, 17):
        xm1 = Poly(GF2, (1,) + (0,) * (m - 1) + (1,))
        x2m1 = Poly(GF2, (1,) + (0,) * (2 * m - 1) + (1,))
        assert xm1 * xm1 == x2m1


def test_pow():
    assert P(GF2, 1, 1) ** 4 == P(GF2, 1, 0, 0, 0, 1)
    assert P(GF3, 1, 1) ** 3 == P(GF3, 1, 0, 0, 1)  # Frobenius in char 3
    assert P(GF2, 1, 1) ** 0 == Poly.one(GF2)


def test_mask_ops_agree_with_poly():
    rng = random.Random(5)
    for _ in range(300):
        a = rng.randrange(1 << 10)
        b = rng.randrange(1 << 10)
        pa, pb = Poly.from_mask(GF2, a), Poly.from_mask(GF2, b)
        assert mask_mul(a, b) == (pa * pb).to_mask()
        if b:
            q, r = mask_divmod(a, b)
            assert (q, r) == ((pa // pb).to_mask(), (pa % pb).to_mask())
        if a or b:
            assert mask_gcd(a, b) == gcd(pa, pb).to_mask()


def test_text_roundtrip():
    assert str(P(GF2, 1, 1, 1)) == "1+x+x^2"
    assert str(Poly.zero(GF2)) == "0"
    assert str(P(GF3, 2, 1, 2)) == "2+x+2*x^2"
    assert parse_poly(GF2, "1+x+x^2") == P(GF2, 1, 1, 1)
    assert parse_poly(GF2, "X^2 + 1 + X") == P(GF2, 1, 1, 1)
    assert parse_poly(GF2, "1101") == P(GF2, 1, 1, 0, 1)
    assert parse_poly(GF2, "0") == Poly.zero(GF2)
    assert parse_poly(GF3, "2+x+2*x^2") == P(GF3, 2, 1, 2)
    assert parse_poly(GF3, "2*x^2+2+x") == P(GF3, 2, 1, 2)
    assert parse_poly(GF4, "3*x+2") == P(GF4, 2, 3)
    for field in (GF2, GF3, GF4):
        rng = random.Random(field.q)
        for _ in range(50):
            p = random_poly(rng, field, 6)
            assert parse_poly(field, str(p)) == p


def test_parse_errors():
    for bad in ("", "x^", "1+*x", "y+1", "4*x"):
        with pytest.raises(ValueError):
            parse_poly(GF3, bad)


def test_code_order():
    polys = [P(GF2, 1, 1, 0, 0, 1), P(GF2, 1, 0, 0, 1, 1), P(GF2, 1, 1, 1, 1, 1)]
    assert sorted(polys, key=Poly.code) == polys
