"""Pure-Python digit kernels.

The golden-ratio digit map acts on x = (p + q*phi)/den as
phi*x = (q + (p+q)*phi)/den; the emitted digit is 1 exactly when
phi*x >= 1, i.e. when (q - den) + (p+q)*phi >= 0, and the next state is
(q - d*den, p + q).  The denominator never changes, and conjugate
coordinates contract toward a fixed window, so orbits are finite.

These functions mirror zeckinv._kernel exactly; zeckinv._core picks one
implementation at import time (and falls back per call on overflow).
"""

from __future__ import annotations

__all__ = ["sign_pair", "expand_pair", "digits_prefix"]


def sign_pair(a: int, b: int) -> int:
    """Exact sign of a + b*phi for integers a, b.

    Writes a + b*phi = (s + t*sqrt5)/2 with s = 2a + b, t = b; when s and
    t disagree in sign the comparison s^2 vs 5 t^2 settles it (they are
    never equal: 5 is not a perfect square).
    """
    if a == 0 and b == 0:
        return 0
    s = 2 * a + b
    if s >= 0 and b >= 0:
        return 1
    if s <= 0 and b <= 0:
        return -1
    d = s * s - 5 * b * b
    if s > 0:
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


def expand_pair(p: int, q: int, den: int) -> tuple[list[int], int]:
    """Full digit orbit of x = (p + q*phi)/den in [0, 1).

    Returns (digits, pre_len): digits covers the preperiod plus exactly one
    period, so digits[:pre_len] is the preperiod and digits[pre_len:] the
    period.  States are keyed exactly, so the first revisited state gives
    the minimal preperiod and the primitive period directly (two positions
    carry equal digit tails if and only if they carry equal states, since
    the state is determined by the remaining value).
    """
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    state = (p, q)
    while state not in seen:
        seen[state] = len(digits)
        sp, sq = state
        d = 1 if sign_pair(sq - den, sp + sq) >= 0 else 0
        digits.append(d)
        state = (sq - den * d, sp + sq)
    return digits, seen[state]


def digits_prefix(p: int, q: int, den: int, count: int) -> list[int]:
    """First ``count`` digits of x = (p + q*phi)/den, no cycle detection."""
    digits = []
    for _ in range(count):
        d = 1 if sign_pair(q - den, p + q) >= 0 else 0
        digits.append(d)
        p, q = q - den * d, p + q
    return digits
