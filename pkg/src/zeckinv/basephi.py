"""Base-phi digit expansions of elements of Q(phi) in [0, 1).

Every such x has a unique digit sequence (d_i) with x = sum d_i phi^-i,
no two consecutive 1s, and a tail that is not ultimately 0,1,0,1,...
The sequence is produced by iterating T(x) = (phi*x mod 1) and reading
the floor at each step; for field elements it is eventually periodic,
and the expansion is computed exactly by cycle detection on the orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _core
from .errors import (
    DomainError,
    InternalInvariantViolation,
    InvalidRep,
    PreconditionError,
)
from .qphi import QPhi, phi_pow, sqrt5
from .zeckendorf import ZeckendorfRep, normalize_index_one

__all__ = [
    "EventuallyPeriodicBits",
    "DigitState",
    "t_step",
    "expand",
    "eval_closed_form",
    "digit_at",
    "zeckendorf_from_phi",
    "splice_check",
]


@dataclass(frozen=True)
class EventuallyPeriodicBits:
    """A digit sequence: finite preperiod followed by a repeating period.

    Canonical form: the preperiod is as short as possible and the period
    is primitive.  The sequence must stay inside the valid digit class —
    no "11" anywhere (including the junction and the cyclic wrap) and a
    tail that is not the alternating 0,1,0,1,...
    """

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        if not self.period:
            raise DomainError("period must be nonempty")
        for word in (self.preperiod, self.period):
            if any(c not in "01" for c in word):
                raise DomainError(f"not a bit word: {word!r}")
        # Junction and wrap-around are covered by scanning pre + per + per.
        if "11" in self.preperiod + self.period + self.period:
            raise DomainError("consecutive 1s in digit sequence")
        if _primitive_root(self.period) != self.period:
            raise DomainError(f"period {self.period!r} is not primitive")
        if self.preperiod and self.preperiod[-1] == self.period[-1]:
            raise DomainError("preperiod is not minimal")
        if self.period in ("01", "10"):
            raise DomainError("tail is ultimately alternating 0,1,0,1,...")

    def digit_at(self, i: int) -> int:
        return digit_at(self, i)

    def render(self) -> str:
        """Text form "pre|period", e.g. "|010" or "1|0"."""
        return f"{self.preperiod}|{self.period}"

    def __str__(self) -> str:
        return self.render()


def _primitive_root(word: str) -> str:
    """Shortest word whose repetition gives ``word``."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def _canonical_bits(pre: str, per: str) -> EventuallyPeriodicBits:
    """Build canonical EventuallyPeriodicBits from any (pre, per) pair.

    Rolls the preperiod back while its last digit coincides with the
    period's last digit (rotating the period correspondingly), then
    reduces the period to its primitive root.
    """
    while pre and pre[-1] == per[-1]:
        per = per[-1] + per[:-1]
        pre = pre[:-1]
    per = _primitive_root(per)
    return EventuallyPeriodicBits(pre, per)


@dataclass(frozen=True)
class DigitState:
    """A T-orbit point; carries the invariant 0 <= x < 1."""

    x: QPhi

    def __post_init__(self) -> None:
        if self.x.sign() < 0 or (self.x - 1).sign() >= 0:
            raise DomainError(f"digit state {self.x} outside [0, 1)")


def t_step(state: DigitState) -> tuple[int, DigitState]:
    """One application of T: emit digit floor(phi*x), keep the fraction.

    In coordinates, (u, v) -> (v - digit, u + v); for x in [0,1) we have
    phi*x < 2, so the digit test reduces to one sign evaluation.
    """
    u, v = state.x.u, state.x.v
    # digit = 1  iff  phi*x - 1 = (v - 1) + (u + v)*phi >= 0
    digit = 1 if QPhi(v - 1, u + v).sign() >= 0 else 0
    return digit, DigitState(QPhi(v - digit, u + v))


def _unit_interval_pair(x: QPhi | Fraction | int) -> tuple[int, int, int]:
    """Coerce x to integer coordinates (p, q, den) with x = (p + q*phi)/den,
    gcd-reduced; raises DomainError unless x lies in [0, 1)."""
    if isinstance(x, (int, Fraction)):
        x = QPhi(x)
    if not isinstance(x, QPhi):
        raise DomainError(f"cannot expand {x!r}")
    if x.sign() < 0 or (x - 1).sign() >= 0:
        raise DomainError(f"{x} is outside [0, 1)")
    den = math.lcm(x.u.denominator, x.v.denominator)
    p = int(x.u * den)
    q = int(x.v * den)
    g = math.gcd(p, q, den)
    return p // g, q // g, den // g


def expand(x: QPhi | Fraction | int) -> EventuallyPeriodicBits:
    """The digit expansion of x in [0, 1), computed exactly.

    The orbit is tracked in integer coordinates with a fixed denominator;
    the first revisited state splits the digit stream into the minimal
    preperiod and the primitive period.
    """
    p, q, den = _unit_interval_pair(x)
    digits, pre_len = _core.expand_pair(p, q, den)
    word = "".join("1" if d else "0" for d in digits)
    try:
        return _canonical_bits(word[:pre_len], word[pre_len:])
    except DomainError as exc:
        raise InternalInvariantViolation(
            f"digit stream of {x} left the valid class: {exc}"
        ) from exc


def eval_closed_form(bits: EventuallyPeriodicBits) -> QPhi:
    """Exact value sum d_i phi^-i of an eventually periodic digit sequence.

    Geometric series: value = A + phi^-L * B / (1 - phi^-rho) where A and B
    are the finite digit polynomials of the preperiod (length L) and the
    period (length rho).
    """
    def horner(word: str) -> QPhi:
        # Digits are integers and 1/phi = -1 + phi, so the whole loop stays
        # in integer coordinates: (u + v*phi)(-1 + phi) = (v - u) + u*phi.
        u = v = 0
        for ch in reversed(word):
            if ch == "1":
                u += 1
            u, v = v - u, u
        return QPhi(u, v)

    a_part = horner(bits.preperiod)
    b_part = horner(bits.period)
    rho = len(bits.period)
    length = len(bits.preperiod)
    return a_part + phi_pow(-length) * b_part / (QPhi(1) - phi_pow(-rho))


def digit_at(bits: EventuallyPeriodicBits, i: int) -> int:
    """The i-th digit (i >= 1), resolved through preperiod then period."""
    if i < 1:
        raise DomainError(f"digit index must be >= 1, got {i}")
    pre = bits.preperiod
    if i <= len(pre):
        return 1 if pre[i - 1] == "1" else 0
    j = (i - len(pre) - 1) % len(bits.period)
    return 1 if bits.period[j] == "1" else 0


def zeckendorf_from_phi(n: int) -> ZeckendorfRep:
    """Zeckendorf representation obtained through the digit expansion.

    Chooses the smallest m >= 2 with x = sqrt5 * n * phi^-m in [0, 1);
    the first m digits of x then spell the representation from the top:
    index i carries digit d_{m-i}.  The m-th digit is always 0 and the
    stream never contains "11"; both facts are asserted, and a failure
    means an arithmetic bug rather than a bad input.
    """
    if n < 1:
        raise DomainError(f"need a positive integer, got {n}")
    # Smallest m >= 2 with phi^m > sqrt5 * n, tracked via (F_{m-1}, F_m):
    # phi^m - sqrt5*n = (F_{m-1} + n) + (F_m - 2n) * phi.
    m, f_m1, f_m = 2, 1, 1
    while QPhi(f_m1 + n, f_m - 2 * n).sign() <= 0:
        m, f_m1, f_m = m + 1, f_m, f_m1 + f_m
    x = sqrt5() * n * phi_pow(-m)  # integer coordinates, denominator 1
    digits = _core.digits_prefix(int(x.u), int(x.v), 1, m)
    if digits[m - 1] != 0:
        raise InternalInvariantViolation(
            f"digit m={m} of sqrt5*{n}*phi^-{m} is not 0"
        )
    if any(digits[k] and digits[k + 1] for k in range(m - 1)):
        raise InternalInvariantViolation(f"consecutive 1s in digit prefix for {n}")
    indices = [i for i in range(1, m) if digits[m - i - 1]]
    try:
        return normalize_index_one(indices)
    except InvalidRep as exc:
        raise InternalInvariantViolation(str(exc)) from exc


def splice_check(
    x: QPhi | Fraction | int,
    y: QPhi | Fraction | int,
    m: int,
    lam: int,
) -> bool:
    """Digit-splicing test for v = x + y*phi^-m.

    Requires lam + 2 <= m and digits lam, lam+1 of x to vanish.  Builds
    w = (x stripped of its first lam+1 digits) + y*phi^-m and checks that
    v's digits agree with x's up to lam and with w's beyond lam, compared
    over each side's preperiod plus three periods.  A property-test
    oracle, not a production path.
    """
    if lam < 1 or m < 1 or lam + 2 > m:
        raise PreconditionError(f"need 1 <= lam and lam + 2 <= m, got lam={lam}, m={m}")
    if isinstance(x, (int, Fraction)):
        x = QPhi(x)
    if isinstance(y, (int, Fraction)):
        y = QPhi(y)
    ex = expand(x)
    if digit_at(ex, lam) != 0 or digit_at(ex, lam + 1) != 0:
        raise PreconditionError(f"digits {lam}, {lam + 1} of {x} must both be 0")
    expand(y)  # domain check: y in [0, 1)

    shift = y * phi_pow(-m)
    v = x + shift
    head = QPhi(0)
    for i in range(1, lam + 2):
        if digit_at(ex, i):
            head = head + phi_pow(-i)
    w = (x - head) + shift

    ev = expand(v)
    ew = expand(w)
    horizon = max(
        len(e.preperiod) + 3 * len(e.period) for e in (ex, ev, ew)
    ) + m + lam
    for i in range(1, horizon + 1):
        want = digit_at(ex, i) if i <= lam else digit_at(ew, i)
        if digit_at(ev, i) != want:
            return False
    return True
