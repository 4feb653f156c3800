"""Bigraded model of ``R_pi^*`` for the elliptic principal series.

``(R_{pi_I}^*)_{i,j}`` is the part of the cohomology where Frobenius acts by
``q^{-i}`` and the uniformizer of ``D`` by ``q^{-j}``.  For ``j`` outside ``I``
it is a line sitting in degree ``-partial_{c^{-j} I}(i - j)``; for ``j`` in ``I``
it vanishes.  The Lefschetz operator maps cell ``(i, j)`` to ``(i-1, j)`` and
raises the degree by 2.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .combinatorics import RootSubset, check_rank, coxeter_shift, partial, strict_subsets
from .jacquet_langlands import lj_effective
from .weil_deligne import WDObject, from_operator, wd_elliptic

__all__ = [
    "BiGradedR",
    "SSPair",
    "MainTheoremReport",
    "NON_ELLIPTIC_R_STAR_DIM",
    "r_star",
    "lefschetz",
    "lefschetz_from_degrees",
    "semisimplify_lhs",
    "rhs",
    "verify_main_theorem",
    "verify_all",
    "twist_equivariance_check",
    "ladic_cohomology",
]

# R_pi^* vanishes for unipotent pi that are not elliptic; not computed here.
NON_ELLIPTIC_R_STAR_DIM = 0


@dataclass(frozen=True)
class BiGradedR:
    """One-dimensional cells ``(i, j) -> degree`` plus the Lefschetz isomorphisms.

    Cells absent from ``degree`` are zero.  ``lefschetz`` lists the sources
    ``(i, j)`` whose component to ``(i-1, j)`` is an isomorphism.
    """

    d: int
    degree: dict[tuple[int, int], int]
    lefschetz: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def dims(self) -> dict[tuple[int, int, int], int]:
        return {(n, i, j): 1 for (i, j), n in self.degree.items()}

    @property
    def total_dim(self) -> int:
        return len(self.degree)

    def columns(self) -> list[int]:
        return sorted({j for _, j in self.degree})

    def column(self, j: int) -> dict[int, int]:
        return {i: n for (i, jj), n in sorted(self.degree.items()) if jj == j}

    def shifted(self, k: int) -> BiGradedR:
        """Relabel ``(i, j) -> (i+k, j+k)``."""
        d = self.d
        move = lambda ij: ((ij[0] + k) % d, (ij[1] + k) % d)  # noqa: E731
        return BiGradedR(
            d,
            {move(ij): n for ij, n in self.degree.items()},
            frozenset(move(ij) for ij in self.lefschetz),
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "cells": [[i, j, n] for (i, j), n in sorted(self.degree.items())],
            "lefschetz": [[i, j] for i, j in sorted(self.lefschetz)],
        }

    def to_tsv(self) -> str:
        rows = ["i\tj\tdegree\tlefschetz"]
        for (i, j), n in sorted(self.degree.items()):
            rows.append(f"{i}\t{j}\t{n}\t{'iso' if (i, j) in self.lefschetz else '0'}")
        return "\n".join(rows) + "\n"


def _require_strict(I: RootSubset) -> None:
    if not I.is_strict:
        raise ValueError(f"{I!r} is the full affine set; a strict subset is required")


def lefschetz(I: RootSubset) -> frozenset[tuple[int, int]]:
    """Cells ``(i, j)`` where the Lefschetz component is an isomorphism: ``i in I``, ``j not in I``."""
    _require_strict(I)
    return frozenset((i, j) for i in sorted(I.members) for j in range(I.d) if j not in I)


def r_star(I: RootSubset) -> BiGradedR:
    _require_strict(I)
    d = I.d
    degree = {}
    for j in range(d):
        if j in I:
            continue
        base = coxeter_shift(I, -j)
        for i in range(d):
            degree[(i, j)] = -partial(base, i - j)
    return BiGradedR(d, degree, lefschetz(I))


def lefschetz_from_degrees(R: BiGradedR) -> frozenset[tuple[int, int]]:
    """Cells whose degrees allow a nonzero Lefschetz component.

    A component between lines can only be nonzero when the target sits exactly
    two degrees above the source.
    """
    out = set()
    for (i, j), n in R.degree.items():
        target = R.degree.get(((i - 1) % R.d, j))
        if target is not None and target == n + 2:
            out.add((i, j))
    return frozenset(out)


@dataclass(frozen=True)
class SSPair:
    """Multiset of ``(j, WD object)``: ``nu_D^j`` tensor a Weil-Deligne representation."""

    d: int
    entries: tuple[tuple[int, WDObject], ...]

    def __post_init__(self) -> None:
        key = lambda e: (e[0], json.dumps(e[1].to_json(), sort_keys=True))  # noqa: E731
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=key)))

    def to_json(self) -> list:
        return [{"j": j, "wd": x.to_json()} for j, x in self.entries]


def semisimplify_lhs(I: RootSubset) -> SSPair:
    """Forget degrees in ``(R_{pi_I}^*, L)`` and read off one WD object per ``D``-character.

    Built from the cell table and its Lefschetz isomorphisms only.
    """
    R = r_star(I)
    d = R.d
    entries = []
    for j in R.columns():
        labels = sorted(R.column(j))
        pos = {i: k for k, i in enumerate(labels)}
        M = [[0] * len(labels) for _ in labels]
        for i in labels:
            if (i, j) in R.lefschetz:
                M[pos[(i - 1) % d]][pos[i]] = 1
        entries.append((j, from_operator(d, labels, M, "L")))
    return SSPair(d, tuple(entries))


def rhs(I: RootSubset) -> SSPair:
    """``|LJ(pi_I)| (x) (sigma^ss(pi_I), L(pi_I))``."""
    _, chars = lj_effective(I)
    x = wd_elliptic(I)
    return SSPair(I.d, tuple((j, x) for j in sorted(chars)))


@dataclass(frozen=True)
class MainTheoremReport:
    subset: RootSubset
    holds: bool
    lhs: SSPair
    rhs: SSPair
    seconds: float

    def to_json(self) -> dict:
        out = {
            "I": self.subset.to_json(),
            "mask": self.subset.mask,
            "status": "ok" if self.holds else "MISMATCH",
            "seconds": round(self.seconds, 6),
        }
        if not self.holds:
            out["lhs"] = self.lhs.to_json()
            out["rhs"] = self.rhs.to_json()
        return out


def verify_main_theorem(I: RootSubset) -> MainTheoremReport:
    """Compare both sides of ``(R^*, L^*)^ss = |LJ| (x) (sigma^ss, L)`` for ``pi_I``."""
    _require_strict(I)
    t0 = time.perf_counter()
    left, right = semisimplify_lhs(I), rhs(I)
    return MainTheoremReport(I, left == right, left, right, time.perf_counter() - t0)


def verify_all(d: int, jobs: int = 1) -> list[MainTheoremReport]:
    """Run :func:`verify_main_theorem` over every strict subset, in basis order."""
    subsets = strict_subsets(d)
    if jobs <= 1:
        return [verify_main_theorem(I) for I in subsets]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_main_theorem, subsets))


def twist_equivariance_check(I: RootSubset, k: int) -> bool:
    """``R_{pi_{c^k I}}`` and its Lefschetz pattern equal those of ``R_{pi_I}`` moved by ``(k, k)``."""
    return r_star(coxeter_shift(I, k)) == r_star(I).shifted(k)


def ladic_cohomology(d: int) -> list[dict]:
    """Degrees of the unipotent part of the l-adic cohomology, as labels.

    Degree ``d-1`` is an extension of ``v_{}`` by the cuspidal kernel; degree
    ``d-1+i`` is ``v_{1..i}(-i)``.  Each term carries the induction factor
    ``I_varpi``, kept symbolic.
    """
    check_rank(d)
    out = [
        {
            "degree": d - 1,
            "class": "v_{}",
            "twist": 0,
            "kernel": "K",
            "factor": "I_varpi",
        }
    ]
    for i in range(1, d):
        out.append(
            {
                "degree": d - 1 + i,
                "class": "v_{" + ",".join(map(str, range(1, i + 1))) + "}",
                "twist": -i,
                "factor": "I_varpi",
            }
        )
    return out
