import pytest

from extremal_hhh import reference_data
from extremal_hhh.diff_rules import (
    ENDDOT,
    RUN_EVEN,
    RUN_ODD,
    TRIVALENT,
    classify_component,
    hh_component_matrix,
)
from extremal_hhh.grading_ring import Poly
from extremal_hhh.hh_basis import hh_basis


@pytest.mark.parametrize("ref", reference_data.ALL, ids=lambda r: r.name)
def test_reference_matrices(ref):
    assert reference_data.mismatches(ref) == []


def test_classification():
    assert classify_component((1, 2), (2,)).kind == ENDDOT
    assert classify_component((1, 2, 1), (1, 1)).kind == TRIVALENT
    assert classify_component((1, 1), (1,)).kind == RUN_ODD
    assert classify_component((1, 1, 1), (1, 1)).kind == RUN_EVEN
    assert classify_component((1, 2), (1, 2)) is None
    assert classify_component((1, 2, 3), (1,)) is None


def test_component_sign_alternates_with_run_start():
    assert classify_component((1, 2), (2,)).sign == 1
    assert classify_component((1, 2), (1,)).sign == -1


def test_two_strand_unit_map():
    # the top map of s^1 on two strands is multiplication by a_1 at A = 0
    m = hh_component_matrix((1,), (), 0, 2)
    assert m.entry(0, 0, 1) == Poly.var(1, 1)


def test_run_maps():
    odd = hh_component_matrix((1, 1), (1,), 0, 2)
    even = hh_component_matrix((1, 1, 1), (1, 1), 0, 2)
    assert all(not f for f in odd.entries.values())
    assert any(f == Poly.var(1, 1) or f == -Poly.var(1, 1) for f in even.entries.values())


def test_matrix_shape_and_homogeneity():
    for k in range(3):
        m = hh_component_matrix((1, 2, 1), (1, 2), k, 3)
        assert len(m.cols) == len(hh_basis((1, 2, 1), k, 3))
        assert len(m.rows) == len(hh_basis((1, 2), k, 3))
        assert m.is_homogeneous()
