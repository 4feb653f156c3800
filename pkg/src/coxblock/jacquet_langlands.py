"""Langlands-Jacquet transfer of the unipotent block to ``D^x``.

Virtual ``D^x``-classes here are integer vectors over the unramified
characters ``nu_D^j``, ``j in Z/dZ``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import RootSubset, check_rank
from .grothendieck import VirtualClass

__all__ = ["DVirtualClass", "lj", "lj_effective", "lj_linear"]


@dataclass(frozen=True)
class DVirtualClass:
    d: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        check_rank(self.d)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.d:
            raise ValueError(f"expected {self.d} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, d: int) -> DVirtualClass:
        return cls(d, (0,) * d)

    def __add__(self, other: DVirtualClass) -> DVirtualClass:
        if self.d != other.d:
            raise ValueError(f"rank mismatch: d={self.d} vs d={other.d}")
        return DVirtualClass(self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int) -> DVirtualClass:
        return DVirtualClass(self.d, tuple(k * c for c in self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def rotate(self, k: int) -> DVirtualClass:
        """Tensor by ``nu_D^k``."""
        return DVirtualClass(self.d, tuple(self.coeffs[(j - k) % self.d] for j in range(self.d)))

    def support(self) -> frozenset[int]:
        return frozenset(j for j, c in enumerate(self.coeffs) if c)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def lj(I: RootSubset) -> DVirtualClass:
    """``LJ(pi_I) = (-1)^{|I|} sum_{j not in I} [nu_D^j]``."""
    if not I.is_strict:
        raise ValueError(f"{I!r} is the full affine set; a strict subset is required")
    sign = (-1) ** len(I)
    return DVirtualClass(I.d, tuple(0 if j in I else sign for j in range(I.d)))


def lj_effective(I: RootSubset) -> tuple[int, frozenset[int]]:
    """Split ``LJ(pi_I) = sign * |LJ(pi_I)|``; returns the sign and the characters of ``|LJ|``."""
    x = lj(I)
    chars = x.support()
    return x.coeffs[min(chars)], chars


def lj_linear(x: VirtualClass) -> DVirtualClass:
    """Linear extension of :func:`lj` to a class over the irreducible basis."""
    if x.basis != "pi":
        raise ValueError("lj_linear expects a class over the irreducible basis")
    out = DVirtualClass.zero(x.d)
    for J, c in x.coeffs.items():
        out = out + c * lj(J)
    return out
