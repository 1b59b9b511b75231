"""Fibonacci numbers, Fibonacci residues, Pisano periods, modular inverses.

Convention: F_0 = 0, F_1 = F_2 = 1.  Including index 0 keeps residues
r = n mod pi(a) well defined for r = 0 (gcd(a, F_0) = a, so such residues
are classified as inadmissible for a >= 2 rather than erroring out).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NotCoprime

__all__ = [
    "PisanoPeriod",
    "fib",
    "fib_pair",
    "fib_mod",
    "fib_pair_mod",
    "pisano",
    "mod_inverse",
]


@dataclass(frozen=True)
class PisanoPeriod:
    """The minimal period ``pi`` of the Fibonacci sequence modulo ``m``."""

    m: int
    pi: int


def fib_pair(n: int) -> tuple[int, int]:
    """Return (F_n, F_{n+1}) exactly, by fast doubling."""
    if n < 0:
        raise DomainError(f"fib index must be >= 0, got {n}")
    a, b = 0, 1  # (F_0, F_1)
    for bit in bin(n)[2:]:
        # (F_k, F_{k+1}) -> (F_2k, F_2k+1)
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(n: int) -> int:
    """Return F_n exactly (F_0 = 0, F_1 = F_2 = 1)."""
    return fib_pair(n)[0]


def fib_pair_mod(n: int, m: int) -> tuple[int, int]:
    """Return (F_n mod m, F_{n+1} mod m) without materializing F_n."""
    if n < 0:
        raise DomainError(f"fib index must be >= 0, got {n}")
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    a, b = 0, 1 % m
    for bit in bin(n)[2:]:
        c = a * (2 * b - a) % m
        d = (a * a + b * b) % m
        if bit == "1":
            a, b = d, (c + d) % m
        else:
            a, b = c, d
    return a, b


def fib_mod(n: int, m: int) -> int:
    """Return F_n mod m via fast doubling in modular arithmetic."""
    return fib_pair_mod(n, m)[0]


def pisano(m: int) -> PisanoPeriod:
    """Return the Pisano period of modulus m.

    Found by direct iteration of the pair (F_k, F_{k+1}) mod m until it
    returns to (0, 1); terminates because there are at most m^2 pairs.
    """
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return PisanoPeriod(1, 1)
    a, b = 0, 1
    k = 0
    while True:
        a, b = b, (a + b) % m
        k += 1
        if a == 0 and b == 1:
            return PisanoPeriod(m, k)


def mod_inverse(a: int, m: int) -> int:
    """Return the unique b in [1, m] with a*b == 1 (mod m).

    For m = 1 the answer is 1 (the closed interval convention).  Raises
    NotCoprime, carrying the gcd witness, when gcd(a, m) != 1.
    """
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    g = math.gcd(a, m)
    if g != 1:
        raise NotCoprime(g, f"{a} has no inverse modulo {m} (gcd = {g})")
    inv = pow(a, -1, m)
    return inv if inv != 0 else m
