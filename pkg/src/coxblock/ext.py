"""Ext dimensions as exterior-algebra Poincare polynomials, and the E_1 page
whose Euler characteristic pins the degree of ``(R_{pi_I}^*)_{i,0}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

from .combinatorics import RootSubset, classical_subsets, j_corner, partial

__all__ = [
    "PoincarePolynomial",
    "E1Page",
    "dim_Y",
    "ext_poincare",
    "e1_page",
    "euler_check",
    "abutment_degree",
    "complex_euler_identity",
]


@dataclass(frozen=True)
class PoincarePolynomial:
    """Graded dimensions ``{degree: dim}``; degrees may be negative."""

    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for k, c in self.coeffs.items():
            if c < 0:
                raise ValueError(f"negative dimension {c} in degree {k}")
            if c:
                clean[int(k)] = int(c)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def exterior(cls, rank: int, shift: int = 0) -> PoincarePolynomial:
        """``t^shift (1 + t)^rank``."""
        return cls({k + shift: comb(rank, k) for k in range(rank + 1)})

    def __call__(self, t: int | Fraction) -> Fraction:
        t = Fraction(t)
        return sum((c * t**k for k, c in self.coeffs.items()), Fraction(0))

    def __getitem__(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def shift(self, s: int) -> PoincarePolynomial:
        return PoincarePolynomial({k + s: c for k, c in self.coeffs.items()})

    def euler(self) -> int:
        return sum((-1) ** (k % 2) * c for k, c in self.coeffs.items())

    def to_json(self) -> list[list[int]]:
        return [[k, c] for k, c in self.coeffs.items()]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in self.coeffs.items():
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(mono if c == 1 else (f"{c}" if k == 0 else f"{c}{mono}"))
        return " + ".join(terms)


ZERO = PoincarePolynomial()


def dim_Y(I: RootSubset) -> int:
    """``dim Y_I = d - 1 - |I|``, the number of Levi blocks minus one."""
    if not I.is_classical:
        raise ValueError(f"{I!r} contains the affine node 0")
    return I.d - 1 - len(I)


def ext_poincare(kind: str, J: RootSubset, I: RootSubset) -> PoincarePolynomial:
    """Graded dimension of ``Ext^*(X_J, i_I)`` for ``X`` in ``{i, v, pi}``.

    ``kind="ii"``: ``i_J`` against ``i_I``; ``"vi"``: ``v_J`` against ``i_I``;
    ``"pi_i"``: ``pi_J`` against ``i_I``.
    """
    if J.d != I.d:
        raise ValueError(f"rank mismatch: d={J.d} vs d={I.d}")
    S = RootSubset.simple(I.d)
    if not (I.is_classical and I < S):
        raise ValueError(f"{I!r} must be a strict subset of S")
    if kind == "ii":
        if not J.is_classical:
            raise ValueError(f"{J!r} contains the affine node 0")
        return PoincarePolynomial.exterior(dim_Y(I)) if J >= I else ZERO
    if kind == "vi":
        if not J.is_classical:
            raise ValueError(f"{J!r} contains the affine node 0")
        if (I | J) != S:
            return ZERO
        return PoincarePolynomial.exterior(dim_Y(I), shift=len(S - J))
    if kind == "pi_i":
        if not J.is_strict:
            raise ValueError(f"{J!r} is the full affine set")
        if 0 in J:
            return ZERO
        return ext_poincare("vi", J, I)
    raise ValueError(f"kind must be 'ii', 'vi' or 'pi_i', got {kind!r}")


def complex_euler_identity(J: RootSubset, I: RootSubset) -> tuple[int, int]:
    """Euler characteristics of the two ends of the spectral sequence for ``Ext(v_J, i_I)``.

    ``E_1^{pq} = sum_{K >= J, |K - J| = p} Ext^q(i_K, i_I)``, abutting to
    ``Ext^{p+q}(v_J, i_I)``.  Returns ``(chi(E_1), chi(abutment))``.
    """
    e1 = 0
    for K in classical_subsets(J.d):
        if K >= J:
            p = len(K - J)
            e1 += (-1) ** p * ext_poincare("ii", K, I).euler()
    return e1, ext_poincare("vi", J, I).euler()


@dataclass(frozen=True)
class E1Page:
    d: int
    I: RootSubset
    i: int
    cells: dict[tuple[int, int], int]

    def corners(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        """Left corner, lower right corner, upper right corner."""
        d, i = self.d, self.i
        S = RootSubset.simple(d)
        J = j_corner(i, self.I)
        p_right = -len(J - self.I)
        return (
            (-len(S - self.I), d - 1 - 2 * i),
            (p_right, d - 1 - 2 * i),
            (p_right, 2 * d - 2 - 2 * i - len(J)),
        )

    def within_corners(self) -> bool:
        """Every nonzero cell lies in the triangle spanned by :meth:`corners`."""
        (pl, ql), (pr, qb), (pt, qt) = self.corners()
        for p, q in self.cells:
            if not (pl <= p <= pr and qb <= q <= qt):
                return False
            # stay on the lower side of the hypotenuse from left corner to top corner
            if (pt - pl) * (q - ql) - (qt - ql) * (p - pl) > 0:
                return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** ((p + q) % 2) * n for (p, q), n in self.cells.items())

    def to_tsv(self) -> str:
        if not self.cells:
            return "q\\p\n"
        ps = range(min(p for p, _ in self.cells), max(p for p, _ in self.cells) + 1)
        qs = range(max(q for _, q in self.cells), min(q for _, q in self.cells) - 1, -1)
        rows = ["q\\p\t" + "\t".join(map(str, ps))]
        for q in qs:
            rows.append(f"{q}\t" + "\t".join(str(self.cells.get((p, q), 0)) for p in ps))
        return "\n".join(rows) + "\n"

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "I": self.I.to_json(),
            "i": self.i,
            "cells": [[p, q, n] for (p, q), n in sorted(self.cells.items())],
            "corners": [list(c) for c in self.corners()],
        }


def e1_page(I: RootSubset, i: int) -> E1Page:
    """First page of the spectral sequence computing ``(R_{v_I}^*)_{i,0}``.

    Column ``p = -|J - I|`` collects ``J`` with ``I <= J <= S``; for ``J != S``
    the term is ``Lambda^{q+2i+1-d} Y_J`` when ``{i+1..d-1} <= J``, and for
    ``J = S`` it is one line in degree ``q = d-1-2i``.
    """
    if not I.is_classical:
        raise ValueError(f"{I!r} contains the affine node 0")
    d = I.d
    if not 0 <= i < d:
        raise ValueError(f"i={i} out of range [0, {d - 1}]")
    S = RootSubset.simple(d)
    tail = RootSubset.of(d, range(i + 1, d))
    cells: dict[tuple[int, int], int] = {}
    for J in classical_subsets(d):
        if not J >= I:
            continue
        p = -len(J - I)
        if J == S:
            terms = {d - 1 - 2 * i: 1}
        elif tail <= J:
            y = dim_Y(J)
            terms = {k - 2 * i - 1 + d: comb(y, k) for k in range(y + 1)}
        else:
            continue
        for q, n in terms.items():
            cells[(p, q)] = cells.get((p, q), 0) + n
    return E1Page(d, I, i, cells)


def abutment_degree(I: RootSubset, i: int) -> int:
    """Total degree ``p + q`` of the upper right corner, where the page collapses to a line."""
    _, _, (p, q) = e1_page(I, i).corners()
    return p + q


def euler_check(I: RootSubset, i: int) -> bool:
    """``chi(E_1) = (-1)^{partial_I(i)}``: the page is consistent with a line in degree ``-partial_I(i)``."""
    page = e1_page(I, i)
    return page.euler_characteristic() == (-1) ** (partial(I, i) % 2)
