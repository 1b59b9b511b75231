"""Exact arithmetic in the real quadratic field Q(phi), phi = (1+sqrt5)/2.

Elements are stored as u + v*phi with rational u, v.  This basis is the
right one for the golden-ratio digit map: multiplying by phi sends the
coordinate pair (u, v) to (v, u+v), so denominators never grow and orbit
state spaces stay finite.  All comparisons are exact; no floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

from .bigfib import fib_pair
from .errors import DomainError, InternalInvariantViolation

__all__ = ["QPhi", "phi_pow", "sqrt5", "PHI", "parse_qphi"]

_RationalLike = int | Fraction


def _as_fraction(x: _RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise DomainError(f"not a rational coefficient: {x!r}")


@total_ordering
class QPhi:
    """An element u + v*phi of Q(phi) with exact rational coordinates."""

    __slots__ = ("u", "v")

    def __init__(self, u: _RationalLike = 0, v: _RationalLike = 0):
        object.__setattr__(self, "u", _as_fraction(u))
        object.__setattr__(self, "v", _as_fraction(v))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QPhi is immutable")

    # -- ring structure -------------------------------------------------

    @staticmethod
    def _coerce(x: object) -> "QPhi | None":
        if isinstance(x, QPhi):
            return x
        if isinstance(x, (int, Fraction)):
            return QPhi(x)
        return None

    def __add__(self, other: object) -> "QPhi":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPhi(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QPhi":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPhi(self.u - o.u, self.v - o.v)

    def __rsub__(self, other: object) -> "QPhi":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "QPhi":
        return QPhi(-self.u, -self.v)

    def __mul__(self, other: object) -> "QPhi":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (u1 + v1 phi)(u2 + v2 phi) with phi^2 = phi + 1
        return QPhi(
            self.u * o.u + self.v * o.v,
            self.u * o.v + self.v * o.u + self.v * o.v,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm x * conj(x) = u^2 + uv - v^2 (a rational)."""
        return self.u * self.u + self.u * self.v - self.v * self.v

    def inverse(self) -> "QPhi":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(phi)")
        # 1/(u + v phi) = ((u+v) - v phi) / norm
        return QPhi((self.u + self.v) / n, -self.v / n)

    def __truediv__(self, other: object) -> "QPhi":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QPhi":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "QPhi":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = QPhi(1)
        for bit in bin(abs(k))[2:]:
            result = result * result
            if bit == "1":
                result = result * base
        return result

    # -- conjugation, sign, order ---------------------------------------

    def conj(self) -> "QPhi":
        """Galois conjugate: phi -> 1 - phi, so u + v phi -> (u+v) - v phi."""
        return QPhi(self.u + self.v, -self.v)

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}.

        Writes x = (s + t*sqrt5)/2 with s = 2u + v, t = v.  If s and t do
        not disagree in sign the answer is immediate; otherwise it comes
        from comparing s^2 against 5 t^2 (sqrt5 is irrational, so the two
        are never equal with s, t not both zero).
        """
        s = 2 * self.u + self.v
        t = self.v
        s_neg, s_pos = s < 0, s > 0
        t_neg, t_pos = t < 0, t > 0
        if not s_neg and not t_neg:
            return 1 if (s_pos or t_pos) else 0
        if not s_pos and not t_pos:
            return -1
        d = s * s - 5 * t * t
        if d == 0:
            raise InternalInvariantViolation("s^2 = 5 t^2 with rational s, t != 0")
        if s_pos:
            return 1 if d > 0 else -1
        return -1 if d > 0 else 1

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.u == o.u and self.v == o.v

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __bool__(self) -> bool:
        return bool(self.u) or bool(self.v)

    # -- floor -----------------------------------------------------------

    def floor(self) -> int:
        """Exact floor, by sign bisection inside |x| <= |u| + 2|v|."""
        bound = int(abs(self.u) + 2 * abs(self.v)) + 1
        lo, hi = -bound, bound  # invariant: lo <= x < hi
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if (self - mid).sign() >= 0:
                lo = mid
            else:
                hi = mid
        return lo

    __floor__ = floor

    # -- rendering --------------------------------------------------------

    def is_rational(self) -> bool:
        return self.v == 0

    def as_fraction(self) -> Fraction:
        if self.v != 0:
            raise DomainError(f"{self} is irrational")
        return self.u

    def __str__(self) -> str:
        if self.v < 0:
            return f"{self.u} - {-self.v}·phi"
        return f"{self.u} + {self.v}·phi"

    def __repr__(self) -> str:
        return f"QPhi({self.u}, {self.v})"


PHI = QPhi(0, 1)


def sqrt5() -> QPhi:
    """sqrt(5) = 2*phi - 1."""
    return QPhi(-1, 2)


def phi_pow(k: int) -> QPhi:
    """phi**k for any integer k, via phi^k = F_{k-1} + F_k * phi.

    Negative powers use phi^-n = (-1)^n (F_{n+1} - F_n * phi), which is the
    same identity continued through the signed Fibonacci numbers.
    """
    if k >= 1:
        f_km1, f_k = fib_pair(k - 1)
        return QPhi(f_km1, f_k)
    if k == 0:
        return QPhi(1)
    n = -k
    f_n, f_n1 = fib_pair(n)
    if n % 2 == 0:
        return QPhi(f_n1, -f_n)
    return QPhi(-f_n1, f_n)


_TERM_RE = re.compile(
    r"""^\s*
        (?P<sign>[+-]?)\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:[·*]\s*)?(?P<phi1>phi)?
          | (?P<phi2>phi)
        )\s*
    """,
    re.VERBOSE,
)


def parse_qphi(text: str) -> QPhi:
    """Parse "u + v·phi" (also "v*phi", bare "phi", or a lone rational)."""
    s = text.strip()
    if not s:
        raise DomainError("empty Q(phi) literal")
    u = Fraction(0)
    v = Fraction(0)
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s[pos:])
        if not m or (not first and not m.group("sign")):
            raise DomainError(f"cannot parse Q(phi) literal: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("phi1") or m.group("phi2"):
            v += sign * coef
        else:
            u += sign * coef
        pos += m.end()
        first = False
    return QPhi(u, v)
