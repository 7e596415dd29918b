"""Acceptance criteria 1-7, each at its stated runtime budget.

Every test prints one PASS/FAIL line; run with ``pytest -s`` to see them
inline (they are also shown through the capture-disabled channel).
"""

import time
import warnings

import pytest

from extremal_hhh.braid import BraidWord, mirror, parse_braid, primeness_criterion
from extremal_hhh.complex import build_truncated, build_two_strand_full, dualize
from extremal_hhh.homology import extreme_hhh
from extremal_hhh.invariant import superpolynomial, table_for
from extremal_hhh.series import HilbertSeries
from extremal_hhh.suites import (
    field_suite,
    fixtures_suite,
    koszul_suite,
    markov_suite,
    mirror_suite,
    positive_form_suite,
    theorem_braids,
    theorems_negative_suite,
    theorems_positive_suite,
    two_strand_suite,
)

SEED = 1


def report(capsys, number: int, title: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")


def failures(res) -> str:
    return "; ".join(f"{label} {d}" for label, _, d in res.failures()[:5])


def test_criterion_1_fixtures(capsys):
    res = fixtures_suite()
    ok = res.passed and res.elapsed < 1.0
    report(capsys, 1, "fixture equality", ok, f"{res.summary()}")
    assert res.passed, failures(res)
    assert res.elapsed < 1.0


def test_criterion_2_two_strand(capsys):
    res = two_strand_suite(count=8)
    ok = res.passed and len(res.checks) == 16 and res.elapsed < 5.0
    report(capsys, 2, "two-strand regression", ok, res.summary())
    assert res.passed, failures(res)
    assert len(res.checks) == 16 and res.elapsed < 5.0


def test_criterion_3_positive_theorems(capsys):
    res = theorems_positive_suite(seed=SEED, count=50)
    ok = res.passed and len(res.checks) == 150 and res.elapsed < 60.0
    report(capsys, 3, "positive extreme theorems", ok, res.summary())
    assert res.passed, failures(res)
    assert len(res.checks) == 150 and res.elapsed < 60.0


def test_criterion_4_negative_theorems(capsys):
    res = theorems_negative_suite(seed=SEED, count=50)
    ok = res.passed and len(res.checks) == 150 and res.elapsed < 60.0
    report(capsys, 4, "negative extreme theorems", ok, res.summary())
    assert res.passed, failures(res)
    assert len(res.checks) == 150 and res.elapsed < 60.0


def test_criterion_5_koszul(capsys):
    res = koszul_suite(seed=SEED, count=50)
    report(capsys, 5, "Koszul oracle", res.passed, res.summary())
    assert res.passed, failures(res)


def test_criterion_6_superpolynomial(capsys):
    start = time.perf_counter()
    b = BraidWord.positive(2, [1, 1, 1])
    p = superpolynomial(b, table_for(b))
    # A T Q^-4 (1 + T^-2 Q^4 + T^-2 A)
    trefoil = {(1, 1): HilbertSeries({-4: 1}), (1, -1): HilbertSeries({0: 1}), (2, -1): HilbertSeries({-4: 1})}
    trefoil_ok = p.parts == trefoil
    form = positive_form_suite(seed=SEED, count=50)
    mir = mirror_suite(seed=SEED, count=5)
    ok = trefoil_ok and form.passed and mir.passed
    detail = (
        f"trefoil {'exact' if trefoil_ok else p.format()}; {form.summary()}; {mir.summary()}"
        f" ({time.perf_counter() - start:.2f}s)"
    )
    report(capsys, 6, "superpolynomial identities", ok, detail)
    assert trefoil_ok, p.format()
    assert form.passed, failures(form)
    assert mir.passed, failures(mir)
    assert len(mir.checks) == 9


def _d_squared_all() -> int:
    built = 0
    for b in theorem_braids(SEED, 50):
        c = build_truncated(b)
        for cx in (c, dualize(c)):
            for k in range(b.n):
                cx.hh(k).check_d_squared()
                built += 1
    for m in range(1, 9):
        for sign in (1, -1):
            c = build_two_strand_full(m, sign)
            for k in range(2):
                c.hh(k).check_d_squared()
                built += 1
    return built


def test_criterion_7_structural(capsys):
    start = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        built = _d_squared_all()
    markov = markov_suite(seed=SEED, count=10)
    fields = field_suite(seed=SEED, count=50)
    ok = markov.passed and fields.passed and len(markov.checks) == 10
    detail = (
        f"d^2 = 0 on {built} complexes; {markov.summary()}; {fields.summary()}"
        f" ({time.perf_counter() - start:.2f}s)"
    )
    report(capsys, 7, "structural invariants", ok, detail)
    assert markov.passed, failures(markov)
    assert fields.passed, failures(fields)
