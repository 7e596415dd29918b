import json
import warnings

import pytest
from hypothesis import given, settings

from extremal_hhh.braid import BraidWord, cyclic_shift, mirror, parse_braid
from extremal_hhh.complex import build_truncated, build_two_strand_full, dualize
from extremal_hhh.grading_ring import QQ, Field, Poly
from extremal_hhh.homology import (
    HHComplex,
    QuotientCertificate,
    SliceCertificate,
    TriGradedTable,
    cohomology_dims,
    detect_free_tail,
    eliminate_units,
    extreme_hhh,
    negative_extreme_hhh,
    reduced,
    slice_dims,
    slice_matrix,
    two_strand_hhh,
)
from extremal_hhh.diff_rules import HHMatrix, hh_component_matrix
from extremal_hhh.hh_basis import hh_basis
from extremal_hhh.linalg import rank
from extremal_hhh.series import HilbertSeries

from .strategies import full_positive_words

TREFOIL = BraidWord.positive(3, [1, 2, 1, 2])


def test_cohomology_dims_at_top_degrees():
    c = build_truncated(TREFOIL)
    assert cohomology_dims(c, 4, 0, 18) == {-4: 1}
    assert all(cohomology_dims(c, 4, k, 18) == {} for k in (1, 2))
    assert all(cohomology_dims(c, 3, k, 18) == {} for k in range(3))
    assert cohomology_dims(c, 2, 0, 18) == {0: 1}
    assert cohomology_dims(c, 2, 1, 18) == {-4: 1}
    assert cohomology_dims(c, 2, 2, 18) == {}


def test_truncated_end_is_rejected():
    c = build_truncated(BraidWord.positive(3, [1, 2, 1, 2, 1]))
    with pytest.raises(ValueError, match="truncated"):
        cohomology_dims(c, 2, 0, 10)
    with pytest.raises(ValueError, match="not in complex"):
        cohomology_dims(c, 9, 0, 10)


def test_groebner_and_slices_agree():
    b = BraidWord.positive(3, [1, 2, 2, 1, 2, 1])
    c, d = build_truncated(b), dualize(build_truncated(b))
    for k in range(3):
        for p in (4, 5, 6):
            assert cohomology_dims(c, p, k, 14) == cohomology_dims(c, p, k, 14, method="slices")
        for p in (-6, -5, -4):
            g = cohomology_dims(d, p, k, 14, qmin=-20)
            assert g == cohomology_dims(d, p, k, 14, method="slices", qmin=-20)


@settings(max_examples=15)
@given(full_positive_words(n_values=(3, 4), max_len=7))
def test_elimination_preserves_cohomology(b):
    c = build_truncated(b)
    top = len(b)
    for k in range(b.n):
        cx = c.hh(k).convert(QQ)
        red = eliminate_units(cx)
        red.check_d_squared()
        for p in (top, top - 1, top - 2):
            if p < 0 or p - 1 not in cx.gens and p != min(cx.gens):
                continue
            lo = min((g.q for g in cx.gens.get(p, [])), default=0)
            assert slice_dims(cx, p, lo, lo + 8) == slice_dims(red, p, lo, lo + 8)


def test_slice_matrix_zero_and_multiplication():
    m = hh_component_matrix((1,), (), 0, 2)
    # a single multiplication by a1 from Q = 1 down to the class at Q = -1
    for q in (1, 3, 5):
        assert slice_matrix(m, q, 2) == [[1]]
    assert slice_matrix(m, 2, 2) == []
    zero = HHMatrix(m.rows, m.cols, {}, m.row_offset, m.col_offset)
    assert slice_matrix(zero, 3, 2) == [[0]]


def test_slice_matrix_rank_against_dense_oracle():
    m = hh_component_matrix((1, 2, 1), (1, 2), 1, 3)
    mat = slice_matrix(m, -2, 3)
    assert rank(mat) == rank([list(r) for r in mat])


def test_extreme_tables():
    t = extreme_hhh(TREFOIL)
    assert t.dims(0, 4) == {-4: 1}
    assert t.dims(1, 2) == {-4: 1} and t.dims(0, 2) == {0: 1}
    assert all(v for v in t.theorem.values())
    n = negative_extreme_hhh(mirror(TREFOIL))
    assert n.dims(2, -2) == {-4: 1}
    assert all(not n.dims(a, t) for a in range(3) for t in (-4, -3))
    with pytest.raises(ValueError):
        extreme_hhh(mirror(TREFOIL))
    with pytest.raises(ValueError):
        negative_extreme_hhh(TREFOIL)


def test_four_strand_claim():
    b = parse_braid("1 2 1 2 3 2 3 2 1", 4)
    t = extreme_hhh(b)
    L = len(b)
    assert t.dims(0, L - 2) == {4 - L: 1} and t.dims(1, L - 2) == {-L: 1}
    assert not t.dims(2, L - 2) and not t.dims(3, L - 2)
    n = negative_extreme_hhh(mirror(b))
    assert all(not n.dims(a, tt) for a in range(4) for tt in (-L, -L + 1, -L + 2))


def test_hypothesis_failure_warns_and_suppresses():
    b = parse_braid("1 1 2 2", 3)
    with pytest.warns(UserWarning, match="suppressed"):
        t = extreme_hhh(b)
    assert t.theorem["T=|b|-2"] is None
    assert t.theorem["T=|b|"] is True


def test_two_strand_examples():
    t = two_strand_hhh(3, 1)
    assert t.entries == {(0, 3, -3): 1, (0, 1, 1): 1, (1, 1, -3): 1}
    t = two_strand_hhh(2, 1)
    assert t.dims(0, 2) == {-2: 1}
    tail = t.tail(0, 0)
    assert tail is not None and tail.qstart == 2 and tail.period == 2
    u = two_strand_hhh(1, 1)
    assert u.entries == {(0, 1, -1): 1}


def test_detect_free_tail():
    assert detect_free_tail(HilbertSeries({}, 0), 10) is None
    assert detect_free_tail(HilbertSeries({4: 1}, 0), 10) is None
    tail = detect_free_tail(HilbertSeries({2: 1}, 1), 10)
    assert tail.qstart == 2 and tail.period == 2
    assert detect_free_tail(HilbertSeries({2: 2}, 1), 10) is None
    assert detect_free_tail(HilbertSeries({20: 1}, 1), 10) is None


@pytest.mark.parametrize("m", [2, 4, 6])
def test_tail_certificates_agree(m):
    # the algebraic certificate against slice-by-slice multiplication maps
    for sign in (1, -1):
        c = build_two_strand_full(m, sign)
        t = two_strand_hhh(m, sign)
        for tail in t.tails:
            cx = reduced(c, tail.a, QQ)
            assert QuotientCertificate(cx, tail.t)(1, tail.qstart)
            assert SliceCertificate(cx, tail.t, QQ, 2 * m + 10)(1, tail.qstart)


def test_table_json_roundtrip():
    for t in (two_strand_hhh(4, 1), extreme_hhh(TREFOIL)):
        data = json.loads(t.dumps())
        assert set(data) >= {"braid", "n", "writhe", "components", "qmax", "entries", "tails", "hypotheses"}
        back = TriGradedTable.from_json(data)
        assert back.to_json() == t.to_json()
        assert all(e["dim"] > 0 for e in data["entries"])


def test_prime_field_agrees():
    b = parse_braid("1 2 1 1 2 2 1 2", 3)
    a = extreme_hhh(b)
    f = extreme_hhh(b, fld=Field(10007))
    assert a.entries == f.entries


@settings(max_examples=10)
@given(full_positive_words(n_values=(3, 4), max_len=8))
def test_tables_invariant_under_cyclic_shift(b):
    ref = extreme_hhh(b).entries
    for k in range(1, len(b)):
        assert extreme_hhh(cyclic_shift(b, k)).entries == ref


@settings(max_examples=10)
@given(full_positive_words(n_values=(3, 4), max_len=8))
def test_duality_relabeling(b):
    # positions, A and Q of the dual are reflected copies of the source complex
    c = build_truncated(b)
    d = dualize(c)
    n, L = b.n, len(b)
    for k in range(n):
        src = c.hh(n - 1 - k).convert(QQ)
        dual = d.hh(k).convert(QQ)
        for p in (L - 3, L - 2, L - 1, L):
            if p not in src.gens:
                continue
            rs = {g.q for g in src.gens[p]}
            rd = {g.q for g in dual.gens[-p]}
            assert rd == {-q - 2 * (n - 1) for q in rs}
