"""Tests for base-phi digit expansions."""

import random
from fractions import Fraction

import pytest

from zeckinv import (
    DigitState,
    DomainError,
    EventuallyPeriodicBits,
    PHI,
    PreconditionError,
    QPhi,
    digit_at,
    encode,
    eval_closed_form,
    expand,
    phi_pow,
    splice_check,
    t_step,
    zeckendorf_from_phi,
)

HALF = QPhi(Fraction(1, 2), 0)


# --- digit sequence type ----------------------------------------------------


def test_bits_type_validation():
    EventuallyPeriodicBits("", "010")  # fine
    EventuallyPeriodicBits("1", "0")  # fine
    with pytest.raises(DomainError):
        EventuallyPeriodicBits("", "")  # empty period
    with pytest.raises(DomainError):
        EventuallyPeriodicBits("11", "0")  # consecutive ones
    with pytest.raises(DomainError):
        EventuallyPeriodicBits("1", "10")  # ones across the junction
    EventuallyPeriodicBits("", "0100")  # primitive, junction-safe: fine
    with pytest.raises(DomainError):
        EventuallyPeriodicBits("", "010010")  # non-primitive period
    with pytest.raises(DomainError):
        EventuallyPeriodicBits("0", "010")  # preperiod not minimal (0|010 = |001 rolls)
    with pytest.raises(DomainError):
        EventuallyPeriodicBits("", "01")  # ultimately alternating
    with pytest.raises(DomainError):
        EventuallyPeriodicBits("", "10")
    assert EventuallyPeriodicBits("", "010").render() == "|010"
    assert EventuallyPeriodicBits("1", "0").render() == "1|0"


# --- t_step ------------------------------------------------------------------


def test_t_step_examples():
    d, s = t_step(DigitState(HALF))
    assert d == 0 and s.x == QPhi(0, Fraction(1, 2))
    d, s = t_step(s)
    assert d == 1 and s.x == QPhi(Fraction(-1, 2), Fraction(1, 2))
    d, s = t_step(s)
    assert d == 0 and s.x == HALF  # closes the 3-cycle of 1/2
    d, s = t_step(DigitState(QPhi(0, 0)))
    assert d == 0 and s.x == QPhi(0, 0)


def test_digit_state_validates():
    with pytest.raises(DomainError):
        DigitState(QPhi(1, 0))
    with pytest.raises(DomainError):
        DigitState(QPhi(Fraction(-1, 10), 0))


# --- expand ------------------------------------------------------------------


def test_expand_examples():
    assert expand(Fraction(1, 2)).render() == "|010"
    assert expand(0).render() == "|0"
    assert expand(QPhi(-1, 1)).render() == "1|0"  # phi - 1


def test_expand_domain():
    with pytest.raises(DomainError):
        expand(QPhi(1, 0))
    with pytest.raises(DomainError):
        expand(Fraction(-1, 7))
    with pytest.raises(DomainError):
        expand(PHI)


def test_expand_round_trip_random():
    rng = random.Random(101)
    seen = 0
    while seen < 500:
        den = rng.randint(1, 100)
        p = rng.randint(-3 * den, 3 * den)
        q = rng.randint(-2 * den, 2 * den)
        x = QPhi(Fraction(p, den), Fraction(q, den))
        if x.sign() < 0 or (x - 1).sign() >= 0:
            continue
        seen += 1
        bits = expand(x)
        assert eval_closed_form(bits) == x


def test_expand_rationals_purely_periodic_sample():
    # The full a <= 150 sweep lives in the acceptance suite.
    for a in range(2, 61):
        for b in range(1, a):
            bits = expand(Fraction(b, a))
            assert bits.preperiod == ""
            assert eval_closed_form(bits) == QPhi(Fraction(b, a))


def test_expansions_stay_in_valid_class():
    # Validation happens in the EventuallyPeriodicBits constructor; here we
    # double-check the raw words for a sample of harder inputs.
    rng = random.Random(103)
    for _ in range(200):
        den = rng.randint(1, 60)
        p = rng.randint(-2 * den, 2 * den)
        q = rng.randint(-den, den)
        x = QPhi(Fraction(p, den), Fraction(q, den))
        if x.sign() < 0 or (x - 1).sign() >= 0:
            continue
        bits = expand(x)
        stream = bits.preperiod + bits.period * 3
        assert "11" not in stream
        assert bits.period not in ("01", "10")


def test_eval_closed_form_examples():
    assert eval_closed_form(EventuallyPeriodicBits("", "010")) == HALF
    assert eval_closed_form(EventuallyPeriodicBits("", "0")) == QPhi(0, 0)
    assert eval_closed_form(EventuallyPeriodicBits("1", "0")) == QPhi(-1, 1)


def test_digit_at():
    bits = EventuallyPeriodicBits("", "010")
    assert [digit_at(bits, i) for i in range(1, 8)] == [0, 1, 0, 0, 1, 0, 0]
    assert digit_at(EventuallyPeriodicBits("1", "0"), 1) == 1
    assert digit_at(EventuallyPeriodicBits("1", "0"), 99) == 0
    with pytest.raises(DomainError):
        digit_at(bits, 0)


# --- zeckendorf_from_phi ------------------------------------------------------


def test_zeckendorf_from_phi_examples():
    assert zeckendorf_from_phi(1).indices == (2,)
    assert zeckendorf_from_phi(11).indices == (6, 4)
    assert zeckendorf_from_phi(54).indices == (9, 7, 5, 3)
    with pytest.raises(DomainError):
        zeckendorf_from_phi(0)


def test_zeckendorf_from_phi_matches_greedy_sample():
    # Full [1, 10^4] sweep is acceptance criterion 6.
    rng = random.Random(107)
    for n in [rng.randint(1, 10**6) for _ in range(300)]:
        assert zeckendorf_from_phi(n) == encode(n)


# --- splice_check -------------------------------------------------------------


def test_splice_examples():
    # digits of 1/2 are 0,1,0,0,1,0,...: positions 3,4 are both 0.
    assert splice_check(HALF, HALF, 9, 3) is True
    assert splice_check(HALF, QPhi(0), 9, 3) is True  # y = 0: v = x
    assert splice_check(QPhi(0), HALF, 5, 1) is True  # x = 0: pure shift


def test_splice_precondition_errors():
    with pytest.raises(PreconditionError):
        splice_check(HALF, HALF, 4, 3)  # lam + 2 > m
    with pytest.raises(PreconditionError):
        splice_check(HALF, HALF, 9, 2)  # digit 2 of 1/2 is 1


def test_splice_randomized():
    rng = random.Random(109)
    done = 0
    while done < 60:
        den = rng.randint(2, 40)
        x = QPhi(Fraction(rng.randint(0, den - 1), den))
        ex = expand(x)
        lam = None
        for i in range(1, 40):
            if digit_at(ex, i) == 0 and digit_at(ex, i + 1) == 0:
                lam = i
                break
        if lam is None:
            continue
        m = lam + 2 + rng.randint(0, 6)
        y = QPhi(Fraction(rng.randint(0, den - 1), den))
        assert splice_check(x, y, m, lam) is True
        done += 1
