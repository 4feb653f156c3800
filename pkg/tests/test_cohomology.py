from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxblock.cohomology import (
    NON_ELLIPTIC_R_STAR_DIM,
    BiGradedR,
    SSPair,
    ladic_cohomology,
    lefschetz,
    lefschetz_from_degrees,
    r_star,
    rhs,
    semisimplify_lhs,
    twist_equivariance_check,
    verify_all,
    verify_main_theorem,
)
from coxblock.combinatorics import RootSubset, coxeter_shift, levi_partition, partial, strict_subsets
from coxblock.weil_deligne import WDObject, WDString, from_operator, jordan_type, wd_elliptic


def R(d, *members):
    return RootSubset.of(d, members)


def strict_subset_strategy(max_d=8):
    return st.integers(1, max_d).flatmap(lambda d: st.integers(0, 2**d - 2).map(lambda m: RootSubset.from_mask(d, m)))


# r_star ----------------------------------------------------------------------


def test_r_star_examples():
    assert r_star(R(2, 1)).degree == {(0, 0): 1, (1, 0): -1}
    assert r_star(R(2)).degree == {(i, j): 0 for i in range(2) for j in range(2)}
    R4 = r_star(R(4, 1, 3))
    assert R4.columns() == [0, 2]
    assert [R4.column(0)[i] for i in range(4)] == [2, 0, 0, -2]


@pytest.mark.parametrize("d", range(1, 9))
def test_r_star_for_full_simple_set(d):
    # I = S: one column, degrees i -> d-1-2i
    x = r_star(RootSubset.simple(d))
    assert x.columns() == [0]
    assert x.column(0) == {i: d - 1 - 2 * i for i in range(d)}


@pytest.mark.parametrize("d", range(1, 9))
def test_r_star_support_and_dimension(d):
    for I in strict_subsets(d):
        x = r_star(I)
        assert x.total_dim == d * (d - len(I))
        assert set(x.columns()) == set(range(d)) - I.members
        assert all(1 - d <= n <= d - 1 for n in x.degree.values())
        assert set(x.dims.values()) == {1}


@pytest.mark.parametrize("d", range(1, 9))
def test_lefschetz_degree_compatibility(d):
    for I in strict_subsets(d):
        x = r_star(I)
        for (i, j), n in x.degree.items():
            target = x.degree[((i - 1) % d, j)]
            base = coxeter_shift(I, -j)
            jump = partial(base, i - j) == partial(base, i - j - 1) + 2
            assert jump == (i in I)
            if (i, j) in x.lefschetz:
                assert target == n + 2
        assert lefschetz_from_degrees(x) == x.lefschetz


def test_lefschetz_examples():
    assert lefschetz(R(2, 1)) == {(1, 0)}
    assert lefschetz(R(5)) == frozenset()
    assert lefschetz(R(4, 1, 3)) == {(i, j) for i in (1, 3) for j in (0, 2)}


# semisimplification ----------------------------------------------------------


def test_semisimplify_examples():
    assert semisimplify_lhs(R(2, 1)).entries == ((0, WDObject(2, "L", (WDString(1, 2),))),)
    zero2 = WDObject.semisimple(2, [0, 1])
    assert semisimplify_lhs(R(2)).entries == ((0, zero2), (1, zero2))
    x = WDObject(3, "L", (WDString(1, 2), WDString(2, 1)))
    assert semisimplify_lhs(R(3, 1)).entries == ((0, x), (2, x))
    assert jordan_type(x).parts == (2, 1)


def test_rhs_examples():
    assert rhs(R(2, 1)).entries == ((0, WDObject(2, "L", (WDString(1, 2),))),)
    assert rhs(R(3, 1, 2)).entries == ((0, WDObject(3, "L", (WDString(2, 3),))),)
    zero2 = WDObject.semisimple(2, [0, 1])
    assert rhs(R(2)) == SSPair(2, ((1, zero2), (0, zero2)))


@pytest.mark.parametrize("d", range(1, 9))
def test_columns_have_levi_jordan_type(d):
    for I in strict_subsets(d):
        for j, x in semisimplify_lhs(I).entries:
            assert jordan_type(x) == levi_partition(I)


# main theorem ----------------------------------------------------------------


def test_main_theorem_small_cases():
    assert verify_main_theorem(R(1)).holds
    assert all(r.holds for r in verify_all(2))
    assert len(verify_all(2)) == 3


@pytest.mark.parametrize("d", range(1, 9))
def test_main_theorem_exhaustive(d):
    reports = verify_all(d)
    assert len(reports) == 2**d - 1
    assert [r.subset for r in reports] == strict_subsets(d)
    assert all(r.holds for r in reports)


def test_parallel_verify_matches_serial():
    serial = [(r.subset, r.holds) for r in verify_all(5)]
    parallel = [(r.subset, r.holds) for r in verify_all(5, jobs=2)]
    assert serial == parallel


def test_report_json_lists_sides_only_on_failure():
    rep = verify_main_theorem(R(3, 1))
    data = rep.to_json()
    assert data["status"] == "ok" and "lhs" not in data
    broken = type(rep)(rep.subset, False, rep.lhs, rhs(R(3, 2)), 0.0)
    data = broken.to_json()
    assert data["status"] == "MISMATCH"
    assert data["lhs"] != data["rhs"]


def test_a_wrong_lefschetz_pattern_is_detected():
    # dropping one isomorphism changes the column's Jordan type
    I = R(4, 1, 3)
    x = r_star(I)
    damaged = BiGradedR(4, x.degree, x.lefschetz - {(1, 0)})
    labels = sorted(damaged.column(0))
    M = [[0] * 4 for _ in labels]
    for i in labels:
        if (i, 0) in damaged.lefschetz:
            M[(i - 1) % 4][i] = 1
    assert jordan_type(from_operator(4, labels, M, "L")).parts == (2, 1, 1)
    assert lefschetz_from_degrees(damaged) == x.lefschetz


# twisting --------------------------------------------------------------------


def test_twist_examples():
    assert r_star(R(3, 2)) == r_star(R(3, 1)).shifted(1)
    assert twist_equivariance_check(R(3, 1), 1)
    assert twist_equivariance_check(R(3, 1), 0)
    assert twist_equivariance_check(R(3, 1), 3)


@given(strict_subset_strategy(), st.integers(-16, 16))
def test_twist_equivariance(I, k):
    assert twist_equivariance_check(I, k)
    lhs_k = {(j, x) for j, x in semisimplify_lhs(coxeter_shift(I, k)).entries}
    assert lhs_k == {((j + k) % I.d, wd_elliptic(coxeter_shift(I, k))) for j, _ in semisimplify_lhs(I).entries}


# serialization ---------------------------------------------------------------


def test_bigraded_serializations_agree():
    x = r_star(R(4, 1, 3))
    data = x.to_json()
    lines = x.to_tsv().splitlines()
    assert lines[0] == "i\tj\tdegree\tlefschetz"
    assert len(lines) - 1 == len(data["cells"]) == 8
    for line, (i, j, n) in zip(lines[1:], data["cells"]):
        cols = line.split("\t")
        assert [int(c) for c in cols[:3]] == [i, j, n]
        assert (cols[3] == "iso") == ([i, j] in data["lefschetz"])


def test_full_set_rejected():
    for fn in (r_star, lefschetz, verify_main_theorem):
        with pytest.raises(ValueError):
            fn(RootSubset.full(3))


# l-adic table ----------------------------------------------------------------


def test_ladic_cohomology():
    assert [e["degree"] for e in ladic_cohomology(1)] == [0]
    d2 = ladic_cohomology(2)
    assert d2[0]["degree"] == 1 and d2[0]["class"] == "v_{}" and d2[0]["kernel"] == "K"
    assert d2[1] == {"degree": 2, "class": "v_{1}", "twist": -1, "factor": "I_varpi"}
    d3 = ladic_cohomology(3)
    assert [(e["degree"], e["class"], e["twist"]) for e in d3[1:]] == [(3, "v_{1}", -1), (4, "v_{1,2}", -2)]


def test_non_elliptic_constant():
    assert NON_ELLIPTIC_R_STAR_DIM == 0
