"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (lines appear in the terminal) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import random
import sys
import time
from collections import Counter
from typing import Callable

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from coxblock.arithmetic import cuspidal_kernel_count, validate_coxeter  # noqa: E402
from coxblock.cohomology import verify_main_theorem  # noqa: E402
from coxblock.combinatorics import (  # noqa: E402
    RootSubset,
    all_permutations,
    classical_subsets,
    descents,
    jacquet_module,
    levi_partition,
    partial,
    strict_subsets,
    whittaker_partition,
)
from coxblock.ext import e1_page, euler_check  # noqa: E402
from coxblock.grothendieck import (  # noqa: E402
    VirtualClass,
    class_i,
    class_pi_in_i,
    class_v,
    class_v_via_complex,
    expand_i_basis,
)
from coxblock.weil_deligne import (  # noqa: E402
    deligne_primitive_parts,
    elliptic_operator,
    from_operator,
    jordan_type,
    jordan_type_by_rank,
    primitive_parts_by_rank,
    wd_elliptic,
)
from oracles import random_twist_compatible  # noqa: E402

Result = tuple[bool, str]


def criterion_1() -> Result:
    t0 = time.perf_counter()
    cases = failures = 0
    for d in range(1, 9):
        for I in strict_subsets(d):
            cases += 1
            failures += not verify_main_theorem(I).holds
    elapsed = time.perf_counter() - t0
    ok = cases == 502 and failures == 0 and elapsed < 10.0
    return ok, f"main theorem: {cases - failures}/{cases} strict subsets, d=1..8, {elapsed:.2f}s (limit 10s)"


def criterion_2() -> Result:
    cases = bad = 0
    for d in range(1, 9):
        for I in strict_subsets(d):
            cases += 1
            bad += expand_i_basis(class_pi_in_i(I)) != VirtualClass.unit(I)
            # and the other way round: the i-class re-expanded from pi-classes
            back = VirtualClass.zero(d, "i")
            for J, c in class_i(I).coeffs.items():
                back = back + c * class_pi_in_i(J)
            bad += back != VirtualClass.unit(I, "i")
    return bad == 0, f"Moebius round trip: {cases} strict subsets, d<=8, {bad} failures"


def criterion_3() -> Result:
    n_v = bad_v = 0
    for d in range(1, 9):
        for I in classical_subsets(d):
            n_v += 1
            bad_v += class_v(I) != class_v_via_complex(I)
    n_j = bad_j = 0
    for d in range(1, 8):
        S0 = RootSubset.of(d, [0])
        for I in classical_subsets(d):
            if I == RootSubset.simple(d):
                continue
            n_j += 1
            bad_j += jacquet_module("v", I) != jacquet_module("pi", I) + jacquet_module("pi", I | S0)
    ok = bad_v == 0 and bad_j == 0
    return ok, f"decomposition: class_v vs complex {n_v - bad_v}/{n_v} (d<=8), Jacquet union {n_j - bad_j}/{n_j} (d<=7)"


def criterion_4() -> Result:
    details = []
    ok = True
    t7 = 0.0
    for d in range(2, 8):
        t0 = time.perf_counter()
        classes = Counter(descents(w)[1] for w in all_permutations(d))
        elapsed = time.perf_counter() - t0
        if d == 7:
            t7 = elapsed
        expected = {I for I in strict_subsets(d) if len(I) > 0}
        good = set(classes) == expected and len(classes) == 2**d - 2 and all(classes.values())
        ok &= good
        details.append(f"{d}:{len(classes)}")
    ok &= t7 < 1.0
    return ok, f"affine descent classes {' '.join(details)} (=2^d-2), d=7 in {t7:.3f}s (limit 1s)"


def criterion_5() -> Result:
    n_ell = bad_ell = 0
    for d in range(1, 9):
        for I in strict_subsets(d):
            n_ell += 1
            x = wd_elliptic(I)
            labels, M = elliptic_operator(I)
            bad_ell += jordan_type_by_rank(M) != jordan_type(x)
            bad_ell += primitive_parts_by_rank(d, labels, M, "L") != deligne_primitive_parts(x)
    rng = random.Random(20240611)
    n_rand = bad_rand = 0
    for _ in range(250):
        d, labels, M, direction = random_twist_compatible(rng, max_dim=12)
        x = from_operator(d, labels, M, direction)
        n_rand += 1
        bad_rand += jordan_type_by_rank(M) != jordan_type(x)
        bad_rand += primitive_parts_by_rank(d, labels, M, direction) != deligne_primitive_parts(x)
    ok = bad_ell == 0 and bad_rand == 0 and n_rand >= 200
    return ok, f"rank oracle: elliptic {n_ell} objects (d<=8), random {n_rand} matrices (dim<=12), {bad_ell + bad_rand} failures"


def criterion_6() -> Result:
    cases = bad = 0
    for d in range(1, 9):
        for I in strict_subsets(d):
            cases += 1
            mu = levi_partition(I)
            bad += not (jordan_type(wd_elliptic(I)) == mu == whittaker_partition(I).transpose())
    return bad == 0, f"jordan type = levi = transpose(whittaker): {cases - bad}/{cases}, d<=8"


def criterion_7() -> Result:
    cases = bad = 0
    for d in range(1, 9):
        for I in classical_subsets(d):
            for i in range(d):
                cases += 1
                bad += not (euler_check(I, i) and e1_page(I, i).within_corners())
    return bad == 0, f"E1 Euler check and corner support: {cases - bad}/{cases}, d<=8"


def criterion_8() -> Result:
    cases = bad = 0
    for d in range(1, 11):
        for I in classical_subsets(d):
            cases += 1
            vals = [partial(I, k) for k in range(d)]
            image_ok = set(vals) == set(range(-len(I), len(I) + 1, 2))
            pts = [0] + sorted(I.members) + [d]
            fibers_ok = all(
                vals[k] == -len(I) + 2 * j for j in range(len(I) + 1) for k in range(pts[j], pts[j + 1])
            )
            periodic = all(partial(I, k + d) == partial(I, k) == partial(I, k - d) for k in range(d))
            bad += not (image_ok and fibers_ok and periodic)
    return bad == 0, f"partial_I image and fibers: {cases - bad}/{cases}, d<=10"


def criterion_9() -> Result:
    coxeter = {(2, 3, 2): True, (4, 3, 2): False, (2, 7, 3): True}
    counts = {(2, 3, 2): 1, (2, 7, 3): 2}
    got_c = {k: validate_coxeter(*k) for k in coxeter}
    got_n = {k: cuspidal_kernel_count(*k) for k in counts}
    ok = got_c == coxeter and got_n == counts
    return ok, f"arithmetic: validate_coxeter {got_c}, kernel counts {got_n}"


CRITERIA: dict[int, Callable[[], Result]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def line(k: int, result: Result) -> str:
    ok, detail = result
    return f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    result = CRITERIA[k]()
    with capsys.disabled():
        print("\n" + line(k, result))
    assert result[0], line(k, result)


if __name__ == "__main__":
    failed = 0
    for k, fn in CRITERIA.items():
        result = fn()
        failed += not result[0]
        print(line(k, result), flush=True)
    sys.exit(1 if failed else 0)
