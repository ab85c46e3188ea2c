"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines on success;
pytest shows them for failing tests regardless.  Every tolerance is exact.
"""

import itertools
import random

from soca_kit.checkers import (
    oca_pair_check,
    pbca_invertible,
    soca_binary_fast,
    soca_bruteforce,
    soca_linear_fast,
    soca_parity,
    soca_stacked_matrix,
)
from soca_kit.fields import Field, GF2, GF3
from soca_kit.matrices import Circulant, mat_mul
from soca_kit.polynomials import irreducibles_of_degree, parse_poly
from soca_kit.rules import LinearRule, LocalRule
from soca_kit.search import count_linear_soca, find_nonlinear_soca, scan_soca
from soca_kit.squares import cayley_table, check_orthogonal, is_self_orthogonal

GF4 = Field(2, 2)


def check(number, name, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    line = f"ACCEPTANCE {number} {name}: {'PASS' if ok else 'FAIL'}{suffix}"
    print(line)
    assert ok, line


def binary_linear_rules(d):
    for central in range(1 << (d - 2)):
        yield LinearRule(GF2, (1,) + tuple((central >> i) & 1 for i in range(d - 2)) + (1,))


def gf3_linear_bipermutive(d):
    for a1 in (1, 2):
        for ad in (1, 2):
            for central in itertools.product(range(3), repeat=d - 2):
                yield LinearRule(GF3, (a1,) + central + (ad,))


PAPER_TABLE1_POLYNOMIALS = {
    3: {"1+x+x^2"},
    4: {"1+x+x^3", "1+x^2+x^3"},
    5: {"1+x+x^4", "1+x^2+x^4", "1+x^3+x^4", "1+x+x^2+x^3+x^4"},
    6: {
        "1+x+x^5",
        "1+x^2+x^5",
        "1+x^3+x^5",
        "1+x^4+x^5",
        "1+x+x^2+x^3+x^5",
        "1+x+x^2+x^4+x^5",
        "1+x+x^3+x^4+x^5",
        "1+x^2+x^3+x^4+x^5",
    },
}


def test_criterion_1_table1_reproduction():
    reports = {d: scan_soca(d) for d in (3, 4, 5, 6)}
    ok = tuple(reports[d].n_bipermutive for d in (3, 4, 5, 6)) == (4, 16, 256, 65536)
    ok &= tuple(reports[d].n_soca for d in (3, 4, 5, 6)) == (2, 4, 8, 16)
    for d in (3, 4, 5, 6):
        ok &= reports[d].n_soca == reports[d].n_affine_soca
        ok &= {str(p) for p in reports[d].polynomials} == PAPER_TABLE1_POLYNOMIALS[d]
    elapsed = reports[6].elapsed
    ok &= elapsed < 120
    check(1, "table-1 reproduction d=3..6", bool(ok), f"d=6 scan {elapsed:.1f}s")


def test_criterion_2_table2_reproduction():
    expected = (1, 2, 4, 8, 12, 24, 64, 94, 240, 512, 768, 2048, 3136, 5062)
    rep = count_linear_soca(3, 16)
    check(2, "table-2 reproduction d=3..16", rep.counts == expected, f"counts={rep.counts}")


def test_criterion_3_gcd_oracle_equivalence():
    disagreements = 0
    total = 0
    for d in range(2, 7):
        for lr in binary_linear_rules(d):
            total += 1
            verdicts = {
                soca_bruteforce(lr.to_rule()).verdict,
                soca_linear_fast(lr).verdict,
                soca_binary_fast(lr).verdict,
                soca_stacked_matrix(lr).verdict,
            }
            if len(verdicts) != 1:
                disagreements += 1
    check(3, "gcd characterization equals brute force d<=6", disagreements == 0, f"{total} rules")


def test_criterion_4_parity_and_counts():
    ok = True
    for d in (3, 5, 9):
        for lr in binary_linear_rules(d):
            ok &= soca_parity(lr).verdict == soca_binary_fast(lr).verdict
    for d in (3, 5, 9, 17):
        ok &= count_linear_soca(d, d).counts[0] == 1 << (d - 3)
    check(4, "parity test and 2^(d-3) counts at d=3,5,9,17", bool(ok))


def test_criterion_5_irreducible_sufficiency():
    ok = True
    for d in range(3, 11):
        for p in irreducibles_of_degree(GF2, d - 1):
            ok &= soca_binary_fast(LinearRule(GF2, p.coeffs)).verdict
    witness = parse_poly(GF2, "1+x+x^5")
    ok &= witness not in irreducibles_of_degree(GF2, 5)
    ok &= soca_binary_fast(LinearRule(GF2, witness.coeffs)).verdict
    check(5, "irreducible polynomials are self-orthogonal d<=10", bool(ok))


def test_criterion_6_pbca_equivalence():
    disagreements = 0
    for d in range(2, 13):
        for lr in binary_linear_rules(d):
            if soca_linear_fast(lr).verdict != pbca_invertible(lr, 2 * (d - 1)):
                disagreements += 1
    for d in range(2, 6):
        for lr in gf3_linear_bipermutive(d):
            if soca_linear_fast(lr).verdict != pbca_invertible(lr, 2 * (d - 1)):
                disagreements += 1
    check(6, "self-orthogonality equals periodic invertibility", disagreements == 0)


def test_criterion_7_circulant_ring_isomorphism():
    rng = random.Random(2024)
    bad = 0
    for field in (GF2, GF3, GF4):
        for n in range(1, 17):
            for _ in range(200):
                a = Circulant(field, tuple(rng.randrange(field.q) for _ in range(n)))
                b = Circulant(field, tuple(rng.randrange(field.q) for _ in range(n)))
                dense = mat_mul(a.to_matrix(), b.to_matrix())
                if (a * b).to_matrix() != dense:
                    bad += 1
                if a.is_invertible() != a.to_matrix().is_invertible():
                    bad += 1
                if b.is_invertible() != b.to_matrix().is_invertible():
                    bad += 1
    check(7, "circulant product and invertibility match dense algebra", bad == 0, "9600 pairs")


def test_criterion_8_pairwise_orthogonality_d4():
    rules = list(binary_linear_rules(4))
    ok = all(
        oca_pair_check(a, b, "fast") == oca_pair_check(a, b, "bruteforce")
        for a in rules
        for b in rules
    )
    check(8, "pairwise gcd equals brute-force orthogonality d=4", ok, "16 ordered pairs")


def test_criterion_9_figure_fidelity():
    sq150 = cayley_table(LocalRule.from_wolfram(150, 3))
    ok = sq150.grid.tolist() == [[1, 4, 3, 2], [2, 3, 4, 1], [4, 1, 2, 3], [3, 2, 1, 4]]
    sq90 = cayley_table(LocalRule.from_wolfram(90, 3))
    ok &= sq90 == sq90.transpose()
    orth, _ = check_orthogonal(sq150, sq150.transpose())
    ok &= orth
    pairs = {
        (int(sq150.grid[i, j]), int(sq150.transpose().grid[i, j]))
        for i in range(4)
        for j in range(4)
    }
    ok &= len(pairs) == 16
    ok &= is_self_orthogonal(sq150)
    check(9, "figure grids reproduce exactly", bool(ok))


def test_criterion_10_no_nonlinear_soca():
    ok = all(find_nonlinear_soca(d) == [] for d in (3, 4, 5, 6))
    check(10, "no nonlinear self-orthogonal rules d<=6", ok)
