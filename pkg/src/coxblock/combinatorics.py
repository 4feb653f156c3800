"""Root and Weyl group combinatorics of GL_d on the affine Dynkin cycle.

The simple roots are ``alpha_1, ..., alpha_{d-1}`` and the affine node
``alpha_0`` closes them into a cycle indexed by ``Z/dZ``.  A subset of
that cycle is a :class:`RootSubset`; the Coxeter element rotates it.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "RootSubset",
    "Permutation",
    "Partition",
    "TorusCharacter",
    "check_rank",
    "coxeter_shift",
    "levi_partition",
    "whittaker_partition",
    "descents",
    "partial",
    "delta_character",
    "act_on_character",
    "jacquet_module",
    "j_corner",
    "all_subsets",
    "strict_subsets",
    "classical_subsets",
    "all_permutations",
]

# exponent of eps_k at position k, entries in Z/dZ
TorusCharacter = tuple[int, ...]


def check_rank(d: int) -> int:
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError(f"rank d must be a positive integer, got {d!r}")
    return d


@dataclass(frozen=True)
class RootSubset:
    """A subset of ``{alpha_0, ..., alpha_{d-1}}``, stored by index."""

    d: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        check_rank(self.d)
        members = frozenset(self.members)
        bad = [a for a in members if not isinstance(a, int) or not 0 <= a < self.d]
        if bad:
            raise ValueError(f"indices {sorted(bad)} out of range for d={self.d}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, d: int, indices: Iterable[int] = ()) -> RootSubset:
        return cls(d, frozenset(indices))

    @classmethod
    def from_mask(cls, d: int, mask: int) -> RootSubset:
        check_rank(d)
        if mask < 0 or mask >> d:
            raise ValueError(f"bitmask {mask} does not fit rank d={d}")
        return cls(d, frozenset(k for k in range(d) if mask >> k & 1))

    @classmethod
    def full(cls, d: int) -> RootSubset:
        """The whole affine cycle ``S~``."""
        return cls(d, frozenset(range(d)))

    @classmethod
    def simple(cls, d: int) -> RootSubset:
        """The classical simple roots ``S = {1, ..., d-1}``."""
        return cls(d, frozenset(range(1, d)))

    @classmethod
    def parse(cls, d: int, text: str | int) -> RootSubset:
        """Read a bitmask integer, a comma list ``"1,3"`` or a JSON array.

        A bare integer is always a bitmask; use ``"[3]"`` or ``"3,"`` for the
        singleton ``{3}``.
        """
        if isinstance(text, int):
            return cls.from_mask(d, text)
        s = text.strip()
        if s in ("", "{}", "[]", "-", "empty"):
            return cls(d, frozenset())
        if s.startswith("["):
            values = json.loads(s)
            if not isinstance(values, list):
                raise ValueError(f"expected a JSON array, got {text!r}")
            return cls.of(d, (int(v) for v in values))
        if s.startswith("{") and s.endswith("}"):
            s = s[1:-1]
        elif "," not in s:
            return cls.from_mask(d, int(s, 0))
        return cls.of(d, (int(tok) for tok in s.split(",") if tok.strip()))

    @property
    def mask(self) -> int:
        return sum(1 << a for a in self.members)

    @property
    def is_classical(self) -> bool:
        return 0 not in self.members

    @property
    def is_strict(self) -> bool:
        return len(self.members) < self.d

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def sort_key(self) -> tuple[int, int]:
        return (len(self.members), self.mask)

    def to_json(self) -> list[int]:
        return self.sorted()

    def label(self) -> str:
        return "{" + ",".join(map(str, self.sorted())) + "}"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def _same(self, other: RootSubset) -> None:
        if self.d != other.d:
            raise ValueError(f"rank mismatch: d={self.d} vs d={other.d}")

    def __or__(self, other: RootSubset) -> RootSubset:
        self._same(other)
        return RootSubset(self.d, self.members | other.members)

    def __and__(self, other: RootSubset) -> RootSubset:
        self._same(other)
        return RootSubset(self.d, self.members & other.members)

    def __sub__(self, other: RootSubset) -> RootSubset:
        self._same(other)
        return RootSubset(self.d, self.members - other.members)

    def __le__(self, other: RootSubset) -> bool:
        self._same(other)
        return self.members <= other.members

    def __lt__(self, other: RootSubset) -> bool:
        self._same(other)
        return self.members < other.members

    def __ge__(self, other: RootSubset) -> bool:
        return other <= self

    def __gt__(self, other: RootSubset) -> bool:
        return other < self

    def complement(self) -> RootSubset:
        return RootSubset(self.d, frozenset(range(self.d)) - self.members)

    def __repr__(self) -> str:
        return f"RootSubset(d={self.d}, {self.label()})"


def all_subsets(d: int) -> list[RootSubset]:
    """Every subset of ``S~`` in basis order (cardinality, then bitmask)."""
    check_rank(d)
    subsets = [RootSubset.from_mask(d, m) for m in range(1 << d)]
    return sorted(subsets, key=RootSubset.sort_key)


def strict_subsets(d: int) -> list[RootSubset]:
    return [I for I in all_subsets(d) if I.is_strict]


def classical_subsets(d: int) -> list[RootSubset]:
    return [I for I in all_subsets(d) if I.is_classical]


def _require_strict(I: RootSubset) -> None:
    if not I.is_strict:
        raise ValueError(f"{I!r} is the full affine set; a strict subset is required")


def _require_classical(I: RootSubset) -> None:
    if not I.is_classical:
        raise ValueError(f"{I!r} contains the affine node 0; a subset of S is required")


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., d-1}`` in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))) or not images:
            raise ValueError(f"{images!r} is not a permutation of range(d)")
        object.__setattr__(self, "images", images)

    @property
    def d(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(check_rank(d))))

    @classmethod
    def coxeter(cls, d: int) -> Permutation:
        """The cycle ``i -> i+1 mod d``."""
        return cls(tuple((i + 1) % check_rank(d) for i in range(d)))

    def __call__(self, x: int) -> int:
        return self.images[x % self.d]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition as functions: ``(w * v)(x) = w(v(x))``."""
        if self.d != other.d:
            raise ValueError(f"rank mismatch: d={self.d} vs d={other.d}")
        return Permutation(tuple(self.images[v] for v in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.d
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))


def all_permutations(d: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(check_rank(d))):
        yield Permutation(images)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Sort and drop zeros."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def transpose(self) -> Partition:
        width = self.parts[0] if self.parts else 0
        return Partition(tuple(sum(1 for p in self.parts if p > k) for k in range(width)))

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def coxeter_shift(I: RootSubset, k: int) -> RootSubset:
    """Apply ``c^k``, i.e. ``alpha_a -> alpha_{a+k}``."""
    return RootSubset(I.d, frozenset((a + k) % I.d for a in I.members))


def cyclic_runs(I: RootSubset) -> list[tuple[int, int]]:
    """Maximal runs of consecutive members of a strict ``I`` as ``(start, length)``.

    Runs are read cyclically in ``Z/dZ`` and listed by start index.
    """
    _require_strict(I)
    d = I.d
    runs = []
    for a in sorted(I.members):
        if (a - 1) % d in I.members:
            continue
        length = 1
        while (a + length) % d in I.members:
            length += 1
        runs.append((a, length))
    return runs


def levi_partition(I: RootSubset) -> Partition:
    """Block sizes ``mu_I`` of the Levi subgroup attached to ``I``.

    Each run ``alpha_a, ..., alpha_{a+r-1}`` glues positions ``a-1, ..., a+r-1``
    into one block of size ``r+1``; untouched positions are blocks of size 1.
    """
    runs = cyclic_runs(I)
    blocks = [r + 1 for _, r in runs]
    blocks += [1] * (I.d - sum(blocks))
    return Partition.from_parts(blocks)


def _depth(I: RootSubset, a: int) -> int:
    m = 0
    while m < I.d and (a - m) % I.d in I.members:
        m += 1
    return m


def whittaker_partition(I: RootSubset) -> Partition:
    """The partition ``lambda_I`` of the degenerate Whittaker model of ``pi_I``.

    ``A_k`` collects the ``a`` whose descending run ``alpha_a, alpha_{a-1}, ...``
    inside ``I`` has length exactly ``k-1``; the parts are ``|A_1|, |A_2|, ...``.
    """
    _require_strict(I)
    counts = Counter(_depth(I, a) for a in range(I.d))
    return Partition.from_parts(counts[m] for m in range(max(counts) + 1))


def whittaker_sets(I: RootSubset) -> list[frozenset[int]]:
    """The sets ``A_1, A_2, ...`` themselves (disjoint, covering ``Z/dZ``)."""
    _require_strict(I)
    depths = {a: _depth(I, a) for a in range(I.d)}
    return [frozenset(a for a, m in depths.items() if m == k) for k in range(max(depths.values()) + 1)]


def descents(w: Permutation) -> tuple[RootSubset, RootSubset]:
    """Return ``(classical, affine)`` ascent sets of ``w``.

    classical: ``{i in 1..d-1 : w(i-1) < w(i)}``;
    affine: ``{j in Z/dZ : w(j-1 mod d) < w(j)}``.
    """
    d = w.d
    affine = frozenset(j for j in range(d) if w((j - 1) % d) < w(j))
    classical = frozenset(i for i in range(1, d) if w(i - 1) < w(i))
    return RootSubset(d, classical), RootSubset(d, affine)


def partial(I: RootSubset, k: int) -> int:
    """The d-periodic degree function ``k - (|I u [1,k]| - |I n [1,k]|)``."""
    _require_classical(I)
    k %= I.d
    head = set(range(1, k + 1))
    return k - (len(I.members | head) - len(I.members & head))


def delta_character(d: int) -> TorusCharacter:
    """Exponent vector ``(0, 1, ..., d-1)`` of ``delta`` without its central factor."""
    return tuple(range(check_rank(d)))


def act_on_character(w: Permutation, chi: TorusCharacter) -> TorusCharacter:
    """``w(chi)``: the exponent of ``eps_k`` moves to position ``w(k)``."""
    if len(chi) != w.d:
        raise ValueError(f"character of length {len(chi)} vs permutation of rank {w.d}")
    winv = w.inverse()
    return tuple(chi[winv(m)] % w.d for m in range(w.d))


def jacquet_module(kind: str, I: RootSubset) -> Counter[TorusCharacter]:
    """Exponents of ``r_B(pi_I)`` (``kind="pi"``) or ``r_B(v_I)`` (``kind="v"``).

    Brute force over the symmetric group: ``w^{-1}(delta)`` is kept when the
    affine (resp. classical) ascent set of ``w`` equals ``I``.
    """
    if kind == "pi":
        _require_strict(I)
        pick = 1
    elif kind == "v":
        _require_classical(I)
        pick = 0
    else:
        raise ValueError(f"kind must be 'pi' or 'v', got {kind!r}")
    delta = delta_character(I.d)
    out: Counter[TorusCharacter] = Counter()
    for w in all_permutations(I.d):
        if descents(w)[pick] == I:
            out[act_on_character(w.inverse(), delta)] += 1
    return out


def j_corner(i: int, I: RootSubset) -> RootSubset:
    """``I u {i+1, ..., d-1}``."""
    _require_classical(I)
    if not 0 <= i < I.d:
        raise ValueError(f"i={i} out of range [0, {I.d - 1}]")
    return RootSubset(I.d, I.members | frozenset(range(i + 1, I.d)))
