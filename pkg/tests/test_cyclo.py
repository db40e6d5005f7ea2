import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinrep.cyclo import (
    CycloElem,
    RootChoice,
    conj_q,
    cyclotomic_poly,
    euler_phi,
    primitive_roots,
    qint,
    qpow,
    sign_real,
    x_pow,
)


def test_cyclotomic_poly_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert euler_phi(40) == 16


def test_root_choice_validation():
    RootChoice(5, 1)
    with pytest.raises(ValueError):
        RootChoice(2, 1)
    with pytest.raises(ValueError):
        RootChoice(5, 2)
    with pytest.raises(ValueError):
        RootChoice(5, 20)
    assert RootChoice(10, 3).N == 40
    assert RootChoice(10, 3).theta == pytest.approx(3 * math.pi / 5)


@pytest.mark.parametrize("r", range(3, 25))
def test_orders_of_zeta_and_q(r):
    for root in primitive_roots(r):
        z = x_pow(root, 1)
        q = qpow(root, 1)
        one = CycloElem.one(root.N)
        zpows = [z**k for k in range(1, 4 * r + 1)]
        assert zpows.index(one) == 4 * r - 1
        qpows = [q**k for k in range(1, r + 1)]
        assert qpows.index(one) == r - 1


def test_qpow_examples():
    assert qpow(RootChoice(5, 3), 0) == 1
    assert qpow(RootChoice(5, 3), 5) == 1
    assert qpow(RootChoice(10, 3), 5) == -1
    root = RootChoice(7, 3)
    for a, b in [(1, 3), (-2, 5), (7, -1)]:
        for d in (1, 2, 4):
            assert qpow(root, a, d) * qpow(root, b, d) == qpow(root, a + b, d)
    with pytest.raises(ValueError):
        qpow(root, 1, 3)


def test_qint_examples():
    root = RootChoice(5)
    assert qint(root, 1) == 1
    assert qint(root, 0) == 0
    assert qint(root, 2) == qpow(root, 1, 2) + qpow(root, -1, 2)
    assert qint(root, 5).is_zero()
    assert qint(root, -3) == -qint(root, 3)


def test_qint_matches_quotient_formula():
    root = RootChoice(11, 5)
    h = qpow(root, 1, 2)
    for n in range(-6, 12):
        expect = (qpow(root, n, 2) - qpow(root, -n, 2)) / (h - h.inverse())
        assert qint(root, n) == expect


@pytest.mark.parametrize("r", range(3, 13))
def test_qint_recurrence_and_reality(r):
    root = RootChoice(r)
    for n in range(0, 21):
        assert qint(root, n + 1) == qint(root, 2) * qint(root, n) - qint(root, n - 1)
    for n in range(0, 11):
        assert conj_q(qint(root, n)) == qint(root, n)


def _random_elem(rng, N):
    d = euler_phi(N)
    return CycloElem(N, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d)])


@pytest.mark.parametrize("r", range(3, 13))
def test_conj_is_involutive_ring_hom(r):
    rng = random.Random(r)
    N = 4 * r
    for _ in range(100):
        a, b = _random_elem(rng, N), _random_elem(rng, N)
        assert conj_q(conj_q(a)) == a
        assert conj_q(a * b) == conj_q(a) * conj_q(b)
        assert conj_q(a + b) == conj_q(a) + conj_q(b)
    root = RootChoice(r)
    assert conj_q(qpow(root, 1)) == qpow(root, -1)
    assert conj_q(CycloElem.rational(N, Fraction(2, 3))) == Fraction(2, 3)


def test_inverse_and_field_ops():
    rng = random.Random(0)
    for r in (5, 7, 12, 30):
        N = 4 * r
        for _ in range(10):
            a = _random_elem(rng, N)
            if a.is_zero():
                continue
            assert a * a.inverse() == 1
            assert (a / a) == 1
            assert a ** -2 * a**2 == 1
    with pytest.raises(ZeroDivisionError):
        CycloElem.zero(20).inverse()


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        CycloElem.one(20) + CycloElem.one(24)


def test_json_roundtrip():
    root = RootChoice(10, 3)
    x = qint(root, 3) / qint(root, 2) + Fraction(1, 7)
    data = x.to_json(root)
    assert CycloElem.from_json(data) == x
    assert data["float"][0] == pytest.approx(x.to_complex(root).real)


def test_sign_real_examples():
    root = RootChoice(10, 3)
    assert sign_real(CycloElem.zero(root.N), root) == 0
    assert sign_real(qint(root, 2) ** 2, root) == 1
    e = (qpow(root, 1) - qpow(root, -1)) * (qpow(root, 2) - qpow(root, -2))
    assert sign_real(e, root) == 1
    assert e.to_complex(root).real == pytest.approx(-4 * math.sin(3 * math.pi / 5) * math.sin(6 * math.pi / 5))
    assert e.to_complex(root).real == pytest.approx(math.sqrt(5))
    with pytest.raises(ValueError):
        sign_real(qpow(root, 1), root)


def test_sign_real_rejects_wrong_modulus():
    with pytest.raises(ValueError):
        sign_real(CycloElem.one(20), RootChoice(7))


@settings(max_examples=60, deadline=None)
@given(
    r=st.integers(3, 12),
    data=st.data(),
)
def test_sign_real_agrees_with_high_precision(r, data):
    roots = primitive_roots(r)
    root = data.draw(st.sampled_from(roots))
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=1, max_size=6))
    x = CycloElem(root.N, coeffs)
    y = x + x.conj()
    s = sign_real(y, root)
    with mpmath.workprec(128):
        v = y.embed(root, prec=128).real
    if y.is_zero():
        assert s == 0
    else:
        assert s != 0
        assert (v > 0) == (s > 0)
