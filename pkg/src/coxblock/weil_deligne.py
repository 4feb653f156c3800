"""Weil-Deligne objects with unramified semisimple part.

An object is a multiset of lines ``nu_W^a`` (``a in Z/dZ``) together with a
nilpotent operator of direction ``L`` (line ``a`` to line ``a-1``) or ``N``
(line ``a`` to line ``a+1``).  Up to isomorphism it is a multiset of strings;
a string ``(top, length)`` occupies the lines ``top, top-1, ..., top-length+1``
in either direction, so transposition only flips the arrow.

The string description is checked against an independent rank oracle on
explicit 0/1 operator matrices (:func:`jordan_type_by_rank`,
:func:`primitive_parts_by_rank`).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .combinatorics import Partition, RootSubset, check_rank, cyclic_runs

__all__ = [
    "WDString",
    "WDObject",
    "wd_elliptic",
    "elliptic_operator",
    "from_operator",
    "from_primitive_parts",
    "jordan_type",
    "jordan_type_by_rank",
    "deligne_primitive_parts",
    "primitive_parts_by_rank",
    "transpose_wd",
    "twist_wd",
]

DIRECTIONS = {"L": -1, "N": +1}


@dataclass(frozen=True, order=True)
class WDString:
    top: int
    length: int


def _canonical(strings) -> tuple[WDString, ...]:
    return tuple(sorted(strings, key=lambda s: (-s.length, s.top)))


@dataclass(frozen=True)
class WDObject:
    d: int
    direction: str
    strings: tuple[WDString, ...]

    def __post_init__(self) -> None:
        check_rank(self.d)
        if self.direction not in DIRECTIONS:
            raise ValueError(f"direction must be 'L' or 'N', got {self.direction!r}")
        for s in self.strings:
            if not 0 <= s.top < self.d:
                raise ValueError(f"string top {s.top} out of range for d={self.d}")
            if not 1 <= s.length <= self.d:
                raise ValueError(f"string length {s.length} outside [1, {self.d}]")
        object.__setattr__(self, "strings", _canonical(self.strings))

    @classmethod
    def semisimple(cls, d: int, lines: Sequence[int], direction: str = "L") -> WDObject:
        """Zero operator on the given lines."""
        return cls(d, direction, tuple(WDString(a % d, 1) for a in lines))

    def occupied(self, s: WDString) -> list[int]:
        return [(s.top - p) % self.d for p in range(s.length)]

    def lines(self) -> Counter[int]:
        out: Counter[int] = Counter()
        for s in self.strings:
            out.update(self.occupied(s))
        return out

    @property
    def dim(self) -> int:
        return sum(s.length for s in self.strings)

    def operator(self) -> tuple[list[int], list[list[int]]]:
        """Explicit 0/1 matrix: basis line labels and ``M[target][source]``."""
        labels: list[int] = []
        edges: list[tuple[int, int]] = []
        for s in self.strings:
            base = len(labels)
            labels.extend(self.occupied(s))
            for p in range(s.length - 1):
                # positions run top-down; L descends the string, N climbs it
                src, dst = (p, p + 1) if self.direction == "L" else (p + 1, p)
                edges.append((base + src, base + dst))
        n = len(labels)
        M = [[0] * n for _ in range(n)]
        for src, dst in edges:
            M[dst][src] = 1
        return labels, M

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "direction": self.direction,
            "strings": [{"top": s.top, "len": s.length} for s in self.strings],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> WDObject:
        if isinstance(data, str):
            data = json.loads(data)
        strings = tuple(WDString(int(s["top"]), int(s["len"])) for s in data["strings"])
        return cls(int(data["d"]), data["direction"], strings)


def wd_elliptic(I: RootSubset) -> WDObject:
    """``(sigma^ss(pi_I), L(pi_I))``: lines ``0..d-1``, ``L`` nonzero on line ``a`` iff ``a in I``.

    A run ``a, ..., a+r-1`` of ``I`` gives the string with top ``a+r-1`` and
    length ``r+1``; every other line is its own string.
    """
    d = I.d
    strings = []
    covered: set[int] = set()
    for start, r in cyclic_runs(I):
        top = (start + r - 1) % d
        strings.append(WDString(top, r + 1))
        covered.update((top - p) % d for p in range(r + 1))
    strings += [WDString(a, 1) for a in range(d) if a not in covered]
    return WDObject(d, "L", tuple(strings))


def elliptic_operator(I: RootSubset) -> tuple[list[int], list[list[int]]]:
    """The matrix ``sum_{a in I} E_{a-1,a}`` on the eigenbasis ``e_0, ..., e_{d-1}``."""
    if not I.is_strict:
        raise ValueError(f"{I!r} is the full affine set; a strict subset is required")
    d = I.d
    M = [[0] * d for _ in range(d)]
    for a in I.members:
        M[(a - 1) % d][a] = 1
    return list(range(d)), M


def from_operator(d: int, labels: Sequence[int], M: Sequence[Sequence[int]], direction: str = "L") -> WDObject:
    """Read off the strings of an explicit operator by following its chains.

    ``M`` must be a 0/1 matrix with at most one nonzero entry per row and
    column, sending line ``a`` to line ``a -+ 1`` according to ``direction``,
    and nilpotent.
    """
    check_rank(d)
    step = DIRECTIONS[direction]
    n = len(labels)
    if len(M) != n or any(len(row) != n for row in M):
        raise ValueError("operator matrix shape does not match the line labels")
    succ: dict[int, int] = {}
    pred: dict[int, int] = {}
    for dst in range(n):
        for src in range(n):
            v = M[dst][src]
            if v == 0:
                continue
            if v != 1:
                raise ValueError(f"entry {v} at ({dst},{src}) is not 0/1")
            if (labels[src] + step) % d != labels[dst] % d:
                raise ValueError(f"entry ({dst},{src}) is not compatible with the twist")
            if src in succ or dst in pred:
                raise ValueError("more than one nonzero entry in a row or column")
            succ[src] = dst
            pred[dst] = src
    strings = []
    seen: set[int] = set()
    for start in range(n):
        if start in pred:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        seen.update(chain)
        if len(chain) > d:
            raise ValueError(f"string of length {len(chain)} exceeds d={d}")
        top = labels[chain[0]] if direction == "L" else labels[chain[-1]]
        strings.append(WDString(top % d, len(chain)))
    if len(seen) != n:
        raise ValueError("operator is not nilpotent")
    return WDObject(d, direction, tuple(strings))


def jordan_type(x: WDObject) -> Partition:
    return Partition.from_parts(s.length for s in x.strings)


def deligne_primitive_parts(x: WDObject) -> list[Counter[int]]:
    """``[P_0, P_{-1}, ...]``: entry ``n`` counts strings of length ``n+1`` by top line.

    The list stops at the longest string; all later parts are zero.
    """
    longest = max((s.length for s in x.strings), default=0)
    parts: list[Counter[int]] = [Counter() for _ in range(longest)]
    for s in x.strings:
        parts[s.length - 1][s.top] += 1
    return parts


def from_primitive_parts(d: int, parts: Sequence[Counter[int]], direction: str = "L") -> WDObject:
    """Inverse of :func:`deligne_primitive_parts` on canonical forms."""
    strings = []
    for n, part in enumerate(parts):
        for top, mult in part.items():
            strings += [WDString(top, n + 1)] * mult
    return WDObject(d, direction, tuple(strings))


def transpose_wd(x: WDObject) -> WDObject:
    """Swap the ``N`` and ``L`` descriptions; lines and primitive parts are kept."""
    return WDObject(x.d, "N" if x.direction == "L" else "L", x.strings)


def twist_wd(x: WDObject, k: int) -> WDObject:
    """Tensor by ``nu_W^k``."""
    return WDObject(x.d, x.direction, tuple(WDString((s.top + k) % x.d, s.length) for s in x.strings))


# rank oracle -----------------------------------------------------------------


def _domain(M: Sequence[Sequence[int]]) -> DomainMatrix:
    n = len(M)
    return DomainMatrix([[QQ(v) for v in row] for row in M], (n, n), QQ)


def _powers(M: Sequence[Sequence[int]], upto: int) -> list[DomainMatrix]:
    A = _domain(M)
    out = [DomainMatrix.eye(len(M), QQ)]
    for _ in range(upto):
        out.append(out[-1] * A)
    return out


def _rank(A: DomainMatrix) -> int:
    rows, cols = A.shape
    if rows == 0 or cols == 0:
        return 0
    return A.rank()


def jordan_type_by_rank(M: Sequence[Sequence[int]]) -> Partition:
    """Jordan type of a nilpotent matrix from ``rank(M^k)`` alone.

    Blocks of size at least ``k`` number ``rank(M^{k-1}) - rank(M^k)``.
    """
    n = len(M)
    ranks = [_rank(P) for P in _powers(M, n + 1)]
    if ranks[n] != 0:
        raise ValueError("matrix is not nilpotent")
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, n + 2)]
    blocks = []
    for k in range(1, n + 1):
        blocks += [k] * (at_least[k - 1] - at_least[k])
    return Partition.from_parts(blocks)


def primitive_parts_by_rank(
    d: int, labels: Sequence[int], M: Sequence[Sequence[int]], direction: str = "L"
) -> list[Counter[int]]:
    """Primitive parts of a twist-compatible nilpotent operator, by graded ranks.

    With ``r(a, k)`` the rank of ``M^k`` from line ``a`` to line ``a + k*step``,
    chains that start on line ``a`` and have length at least ``k+1`` number
    ``r(a, k) - r(a - step, k + 1)``.
    """
    step = DIRECTIONS[direction]
    n = len(labels)
    powers = _powers(M, n + 1)
    by_line: dict[int, list[int]] = {a: [] for a in range(d)}
    for idx, a in enumerate(labels):
        by_line[a % d].append(idx)

    def r(a: int, k: int) -> int:
        src = by_line[a % d]
        dst = by_line[(a + k * step) % d]
        if not src or not dst:
            return 0
        return _rank(powers[k].extract(dst, src))

    parts: list[Counter[int]] = [Counter() for _ in range(n)]
    for a in range(d):
        longer = [r(a, k) - r(a - step, k + 1) for k in range(n + 1)]
        for length in range(1, n + 1):
            count = longer[length - 1] - longer[length]
            if count:
                top = a if direction == "L" else (a + length - 1) % d
                parts[length - 1][top] += count
    while parts and not parts[-1]:
        parts.pop()
    return parts
