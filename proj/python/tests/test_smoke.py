import math
from fractions import Fraction
from math import comb

import pytest

import supercong as sc


def test_arith():
    assert sc.padic_valuation(Fraction(50, 3), 5) == 2
    assert sc.padic_valuation(0, 7) == math.inf
    assert sc.reduce_mod(Fraction(1, 2), 5, 2) == 13
    assert sc.legendre_symbol(-1, 5) == 1
    assert sc.is_prime(199) and not sc.is_prime(561)
    with pytest.raises(sc.NonIntegralAtP):
        sc.reduce_mod(Fraction(1, 5), 5, 1)


def test_combinatorics():
    assert sc.binomial(40, 20) == comb(40, 20)
    assert sc.pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert sc.harmonic(4, 2) == sum(Fraction(1, j * j) for j in range(1, 5))
    assert sc.euler_number(10) == -50521
    assert sc.fermat_quotient2(7) == Fraction(2**6 - 1, 7)


def test_main_sum_matches_python():
    for p in (5, 7, 11, 13):
        s = sum(Fraction(comb(4 * k, 2 * k) * comb(2 * k, k), (2 * k + 1) * 64**k) for k in range((p - 1) // 2 + 1))
        assert sc.main_sum(p) == s
        a = 2 ** (p - 1)
        rhs = (-1) ** ((p - 1) // 2) * (a - (a - 1) ** 2)
        assert sc.reduce_mod(s, p, 3) == rhs % p**3


def test_pfq():
    assert sc.eval_terminating_pfq([-2, 1], [Fraction(1, 2)]) == Fraction(-1, 3)
    assert sc.eval_terminating_pfq(["-3", "1/2"], ["2/3"], z=0) == 1


def test_run():
    report = sc.run(checks=["b11"], prime_max=7, verbose=True)
    assert report["summary"] == {"pass": 2, "fail": 0, "skipped": 0}
    assert [r["params"]["p"] for r in report["results"]] == ["5", "7"]
    names = [c["name"] for c in sc.list_checks()]
    assert "a3" in names and len(names) == len(set(names))
    with pytest.raises(sc.ConfigError):
        sc.run(prime_min=20, prime_max=10)
