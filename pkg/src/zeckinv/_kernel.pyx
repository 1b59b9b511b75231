# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled digit kernels (int64 state, int128 comparisons).

Same contract as zeckinv._pure.  Inputs outside the guarded coordinate
range raise OverflowError, which zeckinv._core treats as "use the pure
big-integer path for this call".

Bound analysis: with |p|, |q| < 2^56 and 0 < den < 2^40, every state on
the orbit keeps |coordinate| < 2^59 (the value stays in [0,1) and the
conjugate contracts by 1/phi per step toward a fixed window), the digit
test operands stay below 2^61, and their squares fit comfortably in
int128.
"""

cdef extern from *:
    ctypedef long long int128 "__int128"

DEF COORD_LIMIT = 72057594037927936      # 2**56
DEF DEN_LIMIT = 1099511627776            # 2**40
DEF RUNTIME_LIMIT = 1152921504606846976  # 2**60


cdef inline int _sign_pair_ll(long long a, long long b) noexcept:
    cdef long long s = 2 * a + b
    cdef int128 d
    if a == 0 and b == 0:
        return 0
    if s >= 0 and b >= 0:
        return 1
    if s <= 0 and b <= 0:
        return -1
    d = (<int128> s) * s - 5 * (<int128> b) * b
    if s > 0:
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


cdef inline void _check_entry(long long p, long long q, long long den) except *:
    if den <= 0 or den >= DEN_LIMIT:
        raise OverflowError("denominator outside kernel range")
    if p <= -COORD_LIMIT or p >= COORD_LIMIT or q <= -COORD_LIMIT or q >= COORD_LIMIT:
        raise OverflowError("coordinates outside kernel range")


def sign_pair(long long a, long long b):
    """Exact sign of a + b*phi (int64 arguments)."""
    if (a <= -COORD_LIMIT or a >= COORD_LIMIT
            or b <= -COORD_LIMIT or b >= COORD_LIMIT):
        raise OverflowError("arguments outside kernel range")
    return _sign_pair_ll(a, b)


def expand_pair(long long p, long long q, long long den):
    """Full digit orbit of (p + q*phi)/den; returns (digits, pre_len)."""
    _check_entry(p, q, den)
    cdef dict seen = {}
    cdef list digits = []
    cdef long long sp = p, sq = q, np_, nq
    cdef int d
    cdef object key = (sp, sq)
    while key not in seen:
        seen[key] = len(digits)
        d = 1 if _sign_pair_ll(sq - den, sp + sq) >= 0 else 0
        digits.append(d)
        np_ = sq - den * d
        nq = sp + sq
        if (np_ <= -RUNTIME_LIMIT or np_ >= RUNTIME_LIMIT
                or nq <= -RUNTIME_LIMIT or nq >= RUNTIME_LIMIT):
            raise OverflowError("orbit left the guarded coordinate range")
        sp, sq = np_, nq
        key = (sp, sq)
    return digits, seen[key]


def digits_prefix(long long p, long long q, long long den, Py_ssize_t count):
    """First ``count`` digits of (p + q*phi)/den."""
    _check_entry(p, q, den)
    cdef list digits = []
    cdef long long np_, nq
    cdef int d
    cdef Py_ssize_t i
    for i in range(count):
        d = 1 if _sign_pair_ll(q - den, p + q) >= 0 else 0
        digits.append(d)
        np_ = q - den * d
        nq = p + q
        if (np_ <= -RUNTIME_LIMIT or np_ >= RUNTIME_LIMIT
                or nq <= -RUNTIME_LIMIT or nq >= RUNTIME_LIMIT):
            raise OverflowError("orbit left the guarded coordinate range")
        p, q = np_, nq
    return digits
