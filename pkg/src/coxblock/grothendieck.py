"""Integer bookkeeping in the Grothendieck group of the unipotent block.

Classes are finitely supported integer combinations of basis vectors indexed
by strict subsets of the affine cycle.  Two bases are used: the irreducibles
``[pi_J]`` and the induced classes ``[i_J]``; they are related by Moebius
inversion on the subset lattice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .combinatorics import (
    RootSubset,
    check_rank,
    classical_subsets,
    coxeter_shift,
    strict_subsets,
)

__all__ = [
    "VirtualClass",
    "DecompositionMatrix",
    "class_i",
    "class_pi_in_i",
    "class_v",
    "class_v_via_complex",
    "class_hbar",
    "expand_i_basis",
    "twist_class",
    "decomposition_matrix",
]

BASES = ("pi", "i")


@dataclass(frozen=True)
class VirtualClass:
    """Integer combination of ``[pi_J]`` (basis ``"pi"``) or ``[i_J]`` (basis ``"i"``)."""

    d: int
    coeffs: Mapping[RootSubset, int] = field(default_factory=dict)
    basis: str = "pi"

    def __post_init__(self) -> None:
        check_rank(self.d)
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for J, c in self.coeffs.items():
            if J.d != self.d:
                raise ValueError(f"basis index {J!r} has the wrong rank for d={self.d}")
            if not J.is_strict:
                raise ValueError(f"basis index {J!r} is not a strict subset")
            if c:
                clean[J] = int(c)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, d: int, basis: str = "pi") -> VirtualClass:
        return cls(d, {}, basis)

    @classmethod
    def unit(cls, J: RootSubset, basis: str = "pi") -> VirtualClass:
        return cls(J.d, {J: 1}, basis)

    def __getitem__(self, J: RootSubset) -> int:
        return self.coeffs.get(J, 0)

    def _check(self, other: VirtualClass) -> None:
        if (self.d, self.basis) != (other.d, other.basis):
            raise ValueError(
                f"incompatible classes: (d={self.d}, {self.basis}) vs (d={other.d}, {other.basis})"
            )

    def __add__(self, other: VirtualClass) -> VirtualClass:
        self._check(other)
        out = dict(self.coeffs)
        for J, c in other.coeffs.items():
            out[J] = out.get(J, 0) + c
        return VirtualClass(self.d, out, self.basis)

    def __neg__(self) -> VirtualClass:
        return VirtualClass(self.d, {J: -c for J, c in self.coeffs.items()}, self.basis)

    def __sub__(self, other: VirtualClass) -> VirtualClass:
        return self + (-other)

    def __rmul__(self, k: int) -> VirtualClass:
        return VirtualClass(self.d, {J: k * c for J, c in self.coeffs.items()}, self.basis)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def support(self) -> list[RootSubset]:
        return sorted(self.coeffs, key=RootSubset.sort_key)

    def vector(self) -> list[int]:
        """Coefficients over the full basis, in basis order."""
        return [self[J] for J in strict_subsets(self.d)]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "basis": self.basis,
            "terms": [[J.to_json(), self.coeffs[J]] for J in self.support()],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for J in self.support():
            c = self.coeffs[J]
            sym = f"[{self.basis}_{J.label()}]"
            terms.append(f"{'+' if c > 0 else '-'}{'' if abs(c) == 1 else abs(c)}{sym}")
        return " ".join(terms).lstrip("+")


def _strict_supersets(I: RootSubset) -> Iterable[RootSubset]:
    rest = sorted(set(range(I.d)) - I.members)
    for mask in range(1 << len(rest)):
        extra = frozenset(a for b, a in enumerate(rest) if mask >> b & 1)
        J = RootSubset(I.d, I.members | extra)
        if J.is_strict:
            yield J


def _require_strict(I: RootSubset) -> None:
    if not I.is_strict:
        raise ValueError(f"{I!r} is the full affine set; a strict subset is required")


def class_i(I: RootSubset) -> VirtualClass:
    """``[i_I]`` in the irreducible basis: every strict superset once."""
    _require_strict(I)
    return VirtualClass(I.d, {J: 1 for J in _strict_supersets(I)})


def class_pi_in_i(I: RootSubset) -> VirtualClass:
    """``[pi_I]`` as the alternating sum of ``[i_J]`` over strict ``J >= I``."""
    _require_strict(I)
    return VirtualClass(I.d, {J: (-1) ** len(J - I) for J in _strict_supersets(I)}, basis="i")


def expand_i_basis(x: VirtualClass) -> VirtualClass:
    """Rewrite a class given over ``[i_J]`` in the irreducible basis."""
    if x.basis != "i":
        raise ValueError("expected a class over the induced basis")
    out = VirtualClass.zero(x.d)
    for J, c in x.coeffs.items():
        out = out + c * class_i(J)
    return out


def class_v(I: RootSubset) -> VirtualClass:
    """Reduction mod l of ``v_I``: ``[pi_I] + [pi_{I u {0}}]``, or ``[pi_S]`` for ``I = S``."""
    if not I.is_classical:
        raise ValueError(f"{I!r} contains the affine node 0")
    J = I | RootSubset.of(I.d, [0])
    if not J.is_strict:
        return VirtualClass.unit(I)
    return VirtualClass(I.d, {I: 1, J: 1})


def class_v_via_complex(I: RootSubset) -> VirtualClass:
    """``[v_I]`` from the exact complex of induced representations.

    ``sum_{I <= J <= S} (-1)^{|J - I|} [i_J]``, expanded in the irreducible basis.
    """
    if not I.is_classical:
        raise ValueError(f"{I!r} contains the affine node 0")
    x = VirtualClass(
        I.d,
        {J: (-1) ** len(J - I) for J in classical_subsets(I.d) if I <= J},
        basis="i",
    )
    return expand_i_basis(x)


def class_hbar(i: int, d: int) -> VirtualClass:
    """``[h_i mod l] = [v_{1..i}]``.

    For ``i = d-1`` the second summand would be indexed by the full affine set,
    which is not a basis vector; the class is then ``[pi_S]`` alone.
    """
    check_rank(d)
    if not 0 <= i < d:
        raise ValueError(f"i={i} out of range [0, {d - 1}]")
    return class_v(RootSubset.of(d, range(1, i + 1)))


def twist_class(x: VirtualClass, k: int) -> VirtualClass:
    """Tensor by ``nu_G^k``: relabel every basis index by ``c^k``."""
    return VirtualClass(x.d, {coxeter_shift(J, k): c for J, c in x.coeffs.items()}, x.basis)


@dataclass(frozen=True)
class DecompositionMatrix:
    d: int
    rows: tuple[RootSubset, ...]
    cols: tuple[RootSubset, ...]
    entries: tuple[tuple[int, ...], ...]

    def entry(self, I: RootSubset, J: RootSubset) -> int:
        return self.entries[self.rows.index(I)][self.cols.index(J)]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "rows": [I.to_json() for I in self.rows],
            "cols": [J.to_json() for J in self.cols],
            "entries": [list(r) for r in self.entries],
        }

    def to_tsv(self) -> str:
        header = ["mask", "v_I"] + [J.label() for J in self.cols]
        lines = ["\t".join(header)]
        for I, row in zip(self.rows, self.entries):
            lines.append("\t".join([str(I.mask), I.label()] + [str(e) for e in row]))
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def decomposition_matrix(d: int) -> DecompositionMatrix:
    """Rows ``v_I`` for ``I <= S``, columns ``pi_J`` for strict ``J``."""
    rows = tuple(classical_subsets(d))
    cols = tuple(strict_subsets(d))
    entries = tuple(tuple(class_v(I)[J] for J in cols) for I in rows)
    return DecompositionMatrix(d, rows, cols, entries)
