"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ZECKINV_PURE=1 in the environment to force the pure implementation
(useful for benchmarking and for exercising the fallback in tests).  Even
with the extension active, any call whose operands exceed the compiled
kernel's int64 guard range transparently reruns on the pure path.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _kernel  # type: ignore[attr-defined]
except ImportError:  # extension not built; that is fine
    _kernel = None  # type: ignore[assignment]

_FORCE_PURE = os.environ.get("ZECKINV_PURE", "") not in ("", "0")

USING_COMPILED_KERNEL: bool = _kernel is not None and not _FORCE_PURE

__all__ = ["USING_COMPILED_KERNEL", "sign_pair", "expand_pair", "digits_prefix"]


def sign_pair(a: int, b: int) -> int:
    if USING_COMPILED_KERNEL:
        try:
            return _kernel.sign_pair(a, b)
        except OverflowError:
            pass
    return _pure.sign_pair(a, b)


def expand_pair(p: int, q: int, den: int) -> tuple[list[int], int]:
    if USING_COMPILED_KERNEL:
        try:
            return _kernel.expand_pair(p, q, den)
        except OverflowError:
            pass
    return _pure.expand_pair(p, q, den)


def digits_prefix(p: int, q: int, den: int, count: int) -> list[int]:
    if USING_COMPILED_KERNEL:
        try:
            return _kernel.digits_prefix(p, q, den, count)
        except OverflowError:
            pass
    return _pure.digits_prefix(p, q, den, count)
