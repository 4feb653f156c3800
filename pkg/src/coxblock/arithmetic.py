"""Concrete ``(q, l, d)`` checks for the Coxeter congruence."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from sympy import factorint, isprime, n_order

from .combinatorics import check_rank

__all__ = ["Params", "validate_coxeter", "cuspidal_kernel_count"]


def _check_inputs(q: int, ell: int, d: int) -> int:
    """Validate and return the prime ``p`` below ``q``."""
    check_rank(d)
    if q < 2:
        raise ValueError(f"q={q} must be a prime power >= 2")
    primes = factorint(q)
    if len(primes) != 1:
        raise ValueError(f"q={q} is not a prime power")
    if not isprime(ell):
        raise ValueError(f"ell={ell} is not prime")
    (p,) = primes
    if p == ell:
        raise ValueError(f"ell={ell} divides q={q}")
    return p


def validate_coxeter(q: int, ell: int, d: int) -> bool:
    """True iff ``q`` has multiplicative order exactly ``d`` modulo ``ell``."""
    _check_inputs(q, ell, d)
    return n_order(q, ell) == d


@dataclass(frozen=True)
class Params:
    q: int
    ell: int
    d: int

    def __post_init__(self) -> None:
        _check_inputs(self.q, self.ell, self.d)

    @property
    def p(self) -> int:
        return next(iter(factorint(self.q)))

    @property
    def coxeter(self) -> bool:
        return n_order(self.q, self.ell) == self.d


def _is_power_of(n: int, ell: int) -> bool:
    while n % ell == 0:
        n //= ell
    return n == 1


def cuspidal_kernel_count(q: int, ell: int, d: int) -> int:
    """Number of Frobenius orbits of regular, nontrivial, l-power order characters of ``F_{q^d}^x``.

    Brute force over the character group ``Z/(q^d - 1)``: the character ``m``
    has order ``N / gcd(m, N)`` and Frobenius sends it to ``q*m mod N``.
    """
    if not validate_coxeter(q, ell, d):
        raise ValueError(f"(q={q}, ell={ell}, d={d}) does not satisfy the Coxeter congruence")
    N = q**d - 1
    seen = set()
    orbits = 0
    for m in range(1, N):
        if m in seen or not _is_power_of(N // gcd(m, N), ell):
            continue
        orbit = {m}
        x = q * m % N
        while x != m:
            orbit.add(x)
            x = q * x % N
        seen |= orbit
        if len(orbit) == d:
            orbits += 1
    return orbits
