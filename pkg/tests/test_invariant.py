import json
import random

import pytest
import sympy
from hypothesis import given

from extremal_hhh.braid import BraidWord, closure_components, cyclic_shift, mirror, parse_braid
from extremal_hhh.homology import extreme_hhh
from extremal_hhh.invariant import (
    Superpolynomial,
    homfly_specialize,
    invert,
    invert_q,
    mirror_check,
    positive_form_check,
    prefactor_exponents,
    superpolynomial,
    table_for,
)
from extremal_hhh.series import HilbertSeries
from extremal_hhh.suites import mirror_knots

from .strategies import braid_words, full_positive_words

TREFOIL_PARTS = {
    (1, 1): HilbertSeries({-4: 1}),
    (1, -1): HilbertSeries({0: 1}),
    (2, -1): HilbertSeries({-4: 1}),
}


def P(word, n):
    b = parse_braid(word, n)
    return superpolynomial(b, table_for(b))


@pytest.mark.parametrize("word,n", [("1 1 1", 2), ("1 2 1 2", 3), ("2 1 2 1", 3)])
def test_trefoil(word, n):
    assert P(word, n).parts == TREFOIL_PARTS


def test_unknot_and_hopf():
    assert P("1", 2).parts == {(0, 0): HilbertSeries({0: 1})}
    assert P("1 2", 3).parts == {(0, 0): HilbertSeries({0: 1})}
    hopf = P("1 1", 2).parts
    assert hopf == {
        (1, 1): HilbertSeries({-4: 1}),
        (1, -1): HilbertSeries({0: 1}, 1),
        (2, -1): HilbertSeries({-4: 1}, 1),
    }


def test_format():
    assert P("1 1 1", 2).format() == "A*T*Q^-4 + A*T^-1 + A^2*T^-1*Q^-4"
    assert "A*T^-1/(1-Q^2)" in P("1 1", 2).format()
    assert Superpolynomial({}).format() == "0"


@given(braid_words(max_len=12))
def test_prefactor_parity(b):
    # e + c - n is always even, so the exponents are integral
    e = sum(s for _, s in b.letters)
    h, t, qq = prefactor_exponents(b)
    assert 2 * h == e + closure_components(b) - b.n
    assert (t, qq) == (h - e, -4 * h + e)


# HOMFLY oracle: the skein relation for T(2, m), computed with sympy
a, q = sympy.symbols("a q")
z = q - 1 / q


def skein(m: int):
    vals = {1: sympy.Integer(1), 0: (1 / a - a) / z}
    for k in range(2, m + 1):
        vals[k] = sympy.expand(a**2 * vals[k - 2] + a * z * vals[k - 1])
    for k in range(-1, m - 1, -1):
        vals[k] = sympy.expand((vals[k + 2] - a * z * vals[k + 1]) / a**2)
    return vals[m]


def as_sympy(by_power: dict[int, HilbertSeries]):
    total = 0
    for e, s in by_power.items():
        num = sum(c * q**k for k, c in s.num.items())
        total += a**e * num / (1 - q**2) ** s.den
    return total


def unit_ratio(x, y) -> bool:
    r = sympy.factor(sympy.cancel(x / y))
    num, den = sympy.fraction(r)
    return all(len(sympy.Poly(f, a, q).terms()) == 1 for f in (num, den))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, -2, -3, -4, -5])
def test_homfly_two_strand_against_skein(m):
    b = BraidWord(2, tuple((1, 1 if m > 0 else -1) for _ in range(abs(m))))
    ours = as_sympy(homfly_specialize(superpolynomial(b, table_for(b))))
    std = skein(m)
    assert unit_ratio(ours, std)
    if m % 2:
        # knots: the unknot normalization fixes the unit completely
        assert sympy.simplify(ours - std) == 0


def test_invert_q_is_involution():
    for s in (HilbertSeries({0: 1, 4: -2}, 0), HilbertSeries({-4: 1}, 1), HilbertSeries({2: 3}, 2)):
        assert invert_q(invert_q(s)) == s
    # 1/(1-Q^2) at 1/Q is -Q^2/(1-Q^2)
    assert invert_q(HilbertSeries({0: 1}, 1)) == HilbertSeries({2: -1}, 1)


@pytest.mark.parametrize("b", [BraidWord.positive(2, [1] * 3), BraidWord.negative(2, [1] * 5)]
                         + mirror_knots(3, 3), ids=lambda b: b.tokens())
def test_mirror_relation(b):
    rep = mirror_check(b)
    assert rep.ok, rep.mismatches
    assert rep.overlap


def test_mirror_needs_a_knot():
    with pytest.raises(ValueError, match="knot"):
        mirror_check(BraidWord.positive(2, [1, 1]))


def test_mirror_detects_a_changed_coefficient():
    p = P("1 1 1", 2)
    pm = invert(P("-1 -1 -1", 2))
    assert p.t_part(1) == pm.t_part(1)
    pm.parts[(1, 1)] = HilbertSeries({-4: 2})
    assert p.t_part(1) != pm.t_part(1)


def test_positive_form():
    rep = positive_form_check(P("1 2 1 2 1 2", 3), prime=True)
    assert rep.top_shape is True and rep.prime_factor is True and rep.passed
    rep = positive_form_check(P("1 1 2 2", 3), prime=True)
    assert rep.top_shape is True and rep.prime_factor is None
    rep = positive_form_check(P("-1 -2 -1 -2", 3), prime=True)
    assert rep.top_shape is None and "suppressed" in rep.notes[0]


def test_positive_form_catches_injected_term():
    p = P("1 2 1 2 1 2", 3)
    M = p.top_t()
    p.parts[(M, M - 1)] = HilbertSeries({-4 * M + 2: 1})
    rep = positive_form_check(p, prime=True)
    assert rep.top_shape is False and not rep.passed


def test_json_roundtrip():
    for word, n in [("1 1", 2), ("1 2 1 2 1", 3), ("-1 -1 -1", 2)]:
        p = P(word, n)
        data = json.loads(json.dumps(p.to_json()))
        assert Superpolynomial.from_json(data) == p


@given(full_positive_words(n_values=(3, 4), max_len=8))
def test_cyclic_invariance(b):
    ref = superpolynomial(b, extreme_hhh(b))
    for k in (1, len(b) - 1):
        s = cyclic_shift(b, k)
        assert superpolynomial(s, extreme_hhh(s)) == ref


@pytest.mark.parametrize("word,n", [("1 1 1", 2), ("1 2 1 2", 3), ("1 1 2 1 1 2", 3)])
def test_stabilization_invariance(word, n):
    b = parse_braid(word, n)
    s = BraidWord(n + 1, b.letters + ((n, 1),))
    p, ps = P(word, n), superpolynomial(s, table_for(s))
    for t in set(p.t_range) & set(ps.t_range):
        assert p.t_part(t) == ps.t_part(t)


def test_mixed_sign_is_rejected():
    with pytest.raises(ValueError, match="mixed"):
        table_for(parse_braid("1 -2 1", 3))
