from __future__ import annotations

import pytest
from sympy import primerange

from coxblock.arithmetic import Params, cuspidal_kernel_count, validate_coxeter
from oracles import character_orbits, kernel_count_formula, order_mod


def coxeter_triples(max_q=32, max_ell=40, max_d=6, max_size=200_000):
    for q in range(2, max_q):
        try:
            Params(q, 2 if q % 2 else 3, 1)
        except ValueError:
            continue
        for ell in primerange(2, max_ell):
            if q % ell == 0:
                continue
            for d in range(1, max_d + 1):
                if q**d - 1 <= max_size and validate_coxeter(q, ell, d):
                    yield q, ell, d


@pytest.mark.parametrize("q, ell, d, expected", [(2, 3, 2, True), (4, 3, 2, False), (2, 7, 3, True), (3, 2, 1, True)])
def test_validate_coxeter_examples(q, ell, d, expected):
    assert validate_coxeter(q, ell, d) is expected


@pytest.mark.parametrize("q, ell, d", [(6, 5, 1), (1, 3, 1), (4, 4, 1), (4, 2, 1), (9, 3, 2), (2, 3, 0)])
def test_validate_coxeter_rejects_bad_parameters(q, ell, d):
    with pytest.raises(ValueError):
        validate_coxeter(q, ell, d)


@pytest.mark.parametrize("q, ell, d, expected", [(2, 3, 2, 1), (2, 7, 3, 2), (3, 2, 1, 1)])
def test_kernel_count_examples(q, ell, d, expected):
    assert cuspidal_kernel_count(q, ell, d) == expected


def test_kernel_count_requires_congruence():
    with pytest.raises(ValueError):
        cuspidal_kernel_count(4, 3, 2)


def test_kernel_count_agrees_with_formula():
    triples = list(coxeter_triples())
    assert len(triples) > 30
    for q, ell, d in triples:
        assert cuspidal_kernel_count(q, ell, d) == kernel_count_formula(q, ell, d), (q, ell, d)


def test_orbit_size_times_count_is_number_of_regular_characters():
    for q, ell, d in coxeter_triples(max_q=12, max_size=20_000):
        N = q**d - 1
        regular = [
            o
            for o in character_orbits(q, d)
            if len(o) == d and all(order_mod(m, N) > 1 and _is_ell_power(order_mod(m, N), ell) for m in o)
        ]
        chars = sum(len(o) for o in regular)
        assert chars == d * cuspidal_kernel_count(q, ell, d)


def _is_ell_power(n, ell):
    while n % ell == 0:
        n //= ell
    return n == 1


def test_params_dataclass():
    p = Params(8, 7, 1)
    assert p.p == 2
    assert p.coxeter
    assert not Params(2, 7, 2).coxeter
