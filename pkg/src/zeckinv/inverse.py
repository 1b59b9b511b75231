"""The modular inverse of a modulo F_n: closed form and brute-force oracle.

The closed form rests on two facts: F_n mod a depends only on
r = n mod pi(a), and with b = (-F_r^-1 mod a) the number b*F_n + 1 is
divisible by a, with quotient exactly (a^-1 mod F_n).  The oracle computes
F_n outright and inverts by extended Euclid; the two share nothing but fib
and so check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bigfib import fib, fib_mod, mod_inverse, pisano
from .errors import DomainError, InternalInvariantViolation, NotCoprime

__all__ = ["InverseResult", "inverse_closed", "inverse_oracle"]


@dataclass(frozen=True)
class InverseResult:
    """Closed-form inverse together with its certificate (b, r)."""

    a: int
    n: int
    value: int
    b: int
    r: int


def _check_args(a: int, n: int) -> None:
    if a < 1:
        raise DomainError(f"need a >= 1, got {a}")
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")


def inverse_closed(a: int, n: int) -> InverseResult:
    """(a^-1 mod F_n) as (b*F_n + 1)/a, without ever inverting modulo F_n.

    b = (-F_r^-1 mod a) with r = n mod pi(a); b = 0 only for a = 1.
    """
    _check_args(a, n)
    g = math.gcd(a, fib_mod(n, a))
    if g != 1:
        raise NotCoprime(g, f"gcd({a}, F_{n}) = {g}; no inverse exists")
    if a == 1:
        return InverseResult(a=1, n=n, value=1, b=0, r=0)
    r = n % pisano(a).pi
    b = (-mod_inverse(fib_mod(r, a), a)) % a
    numerator = b * fib(n) + 1
    if numerator % a:
        raise InternalInvariantViolation(
            f"b*F_n + 1 not divisible by a for a={a}, n={n}"
        )
    return InverseResult(a=a, n=n, value=numerator // a, b=b, r=r)


def inverse_oracle(a: int, n: int) -> int:
    """Independent check path: materialize F_n and invert by extended Euclid.

    Returns the unique value in [1, F_n] with a*value == 1 (mod F_n).
    """
    _check_args(a, n)
    modulus = fib(n)
    g = math.gcd(a, modulus)
    if g != 1:
        raise NotCoprime(g, f"gcd({a}, F_{n}) = {g}; no inverse exists")
    inv = pow(a, -1, modulus)
    return inv if inv != 0 else modulus
