"""Canonical Zeckendorf codec.

A positive integer has a unique representation as a sum of distinct,
non-consecutive Fibonacci numbers with indices >= 2 (index 1 is banned:
F_1 = F_2 would make representations ambiguous).  The golden-ratio digit
pathway can legitimately emit index 1, so normalization to canonical form
is a first-class operation here.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .bigfib import fib_pair
from .errors import DomainError, InvalidRep

__all__ = [
    "ZeckendorfRep",
    "encode",
    "decode",
    "normalize_index_one",
    "to_bit_string",
    "from_bit_string",
]


def _check_indices(indices: tuple[int, ...], lowest: int) -> None:
    """Raise InvalidRep unless indices are strictly decreasing, >= lowest,
    and pairwise non-consecutive."""
    if not indices:
        raise InvalidRep("empty index set does not represent a positive integer")
    prev = None
    for i in indices:
        if i < lowest:
            raise InvalidRep(f"index {i} below minimum {lowest}")
        if prev is not None and prev - i < 2:
            raise InvalidRep(f"indices {prev}, {i} are consecutive or repeated")
        prev = i


class ZeckendorfRep:
    """Strictly decreasing, non-consecutive Fibonacci indices >= 2."""

    __slots__ = ("_indices",)

    def __init__(self, indices: Iterable[int], *, _validate: bool = True):
        idx = tuple(indices)
        if _validate:
            _check_indices(idx, 2)
        self._indices = idx

    @property
    def indices(self) -> tuple[int, ...]:
        return self._indices

    @property
    def value(self) -> int:
        return decode(self)

    def __iter__(self) -> Iterator[int]:
        return iter(self._indices)

    def __len__(self) -> int:
        return len(self._indices)

    def __contains__(self, i: int) -> bool:
        return i in self._indices

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZeckendorfRep):
            return self._indices == other._indices
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._indices)

    def __repr__(self) -> str:
        return f"ZeckendorfRep({{{', '.join(map(str, self._indices))}}})"


def encode(n: int) -> ZeckendorfRep:
    """Greedy Zeckendorf encoding of a positive integer.

    Repeatedly subtracts the largest Fibonacci number not exceeding the
    remainder; greediness is what forces the non-consecutive property.
    """
    if n < 1:
        raise DomainError(f"can only encode positive integers, got {n}")
    # Climb to the largest k with F_k <= n, keeping the pair (F_k, F_{k+1}).
    k, fk, fk1 = 2, 1, 2
    while fk1 <= n:
        k, fk, fk1 = k + 1, fk1, fk + fk1
    indices = []
    rem = n
    # Walk k back down maintaining (F_{k-1}, F_k); no table needed.
    fk_prev = fk1 - fk
    while rem > 0:
        if fk <= rem:
            indices.append(k)
            rem -= fk
        k, fk, fk_prev = k - 1, fk_prev, fk - fk_prev
    return ZeckendorfRep(indices, _validate=False)


def decode(rep: ZeckendorfRep) -> int:
    """Sum of F_i over the representation's indices (validates first)."""
    _check_indices(rep.indices, 2)
    top = rep.indices[0]
    fk, fk1 = fib_pair(top)
    total = 0
    k = top
    remaining = set(rep.indices)
    while remaining:
        if k in remaining:
            total += fk
            remaining.discard(k)
        k, fk, fk1 = k - 1, fk1 - fk, fk
    return total


def normalize_index_one(indices: Iterable[int]) -> ZeckendorfRep:
    """Canonicalize a non-consecutive index set that may use index 1.

    Replaces index 1 by index 2 (F_1 = F_2); if that creates an adjacent
    pair, carries upward via F_k + F_{k+1} = F_{k+2} until canonical.  The
    cascade genuinely occurs: {3, 1} -> {3, 2} -> {4}.
    """
    desc = tuple(sorted(indices, reverse=True))
    _check_indices(desc, 1)
    asc = list(reversed(desc))
    if asc[0] == 1:
        asc[0] = 2
    # Only the bottom swap can break canonicity, and each merge moves the
    # conflict strictly upward, so a single linear pass suffices.
    i = 0
    while i + 1 < len(asc):
        if asc[i + 1] == asc[i] + 1:
            asc[i : i + 2] = [asc[i] + 2]
        else:
            i += 1
    return ZeckendorfRep(reversed(asc))


def to_bit_string(rep: ZeckendorfRep) -> str:
    """MSB-first digit word over positions max(indices) down to 2."""
    idx = set(rep.indices)
    top = rep.indices[0]
    return "".join("1" if i in idx else "0" for i in range(top, 1, -1))


def from_bit_string(bits: str) -> ZeckendorfRep:
    """Inverse of to_bit_string; leading zeros are tolerated."""
    if not bits or any(c not in "01" for c in bits):
        raise InvalidRep(f"not a bit word: {bits!r}")
    top = len(bits) + 1  # position of the first character
    indices = [top - j for j, c in enumerate(bits) if c == "1"]
    return ZeckendorfRep(indices)
