import pytest
from hypothesis import given
from hypothesis import strategies as st

from extremal_hhh.braid import SubwordTerm
from extremal_hhh.hh_basis import HHClass, core_basis, hh_basis, term_q_offset, word_shape


def test_word_shapes():
    assert word_shape(()) == "e"
    assert word_shape((1,)) == "s"
    assert word_shape((1, 2)) == "st"
    assert word_shape((1, 2, 1)) == "sts"
    assert word_shape((1, 2, 3)) == "stu"
    with pytest.raises(ValueError):
        word_shape((1, 1))
    with pytest.raises(ValueError):
        word_shape((1, 2, 1, 2))


def test_unit_and_single_strand_bases():
    assert [c.label for c in hh_basis((), 0, 3)] == ["1"]
    assert [c.label for c in hh_basis((), 2, 3)] == ["1|1,2"]
    assert [c.label for c in hh_basis((1,), 1, 3)] == ["H1", "D1|2"]
    c = hh_basis((1,), 0, 2)[0]
    assert (c.a_degree, c.q_degree) == (0, 1)


def test_sts_core_order():
    labels = {j: [c.label for c in core_basis((1, 2, 1), j)] for j in range(3)}
    assert labels[0] == ["D1.D2.D1", "Cup(1,2)"]
    assert labels[1] == ["H1.D2.D1", "CupOut(1,2)", "CupIn(1,2)", "D1.H2.D1"]
    assert labels[2] == ["CupDbl(1,2)", "H1.H2.D1"]


def test_term_offset():
    term = SubwordTerm.of((1, 1, 2), 5)
    cls = hh_basis((1, 2), 0, 3)[0]
    assert term_q_offset(term) == 1 - 2
    assert term_q_offset(term, cls) == cls.q_degree - 1


words = st.sampled_from([(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1), (2, 1, 2), (1, 2, 3), (3, 2, 1), (2, 3, 2)])


@given(words, st.integers(0, 4))
def test_bases_are_homogeneous_in_A_and_unique(word, k):
    basis = hh_basis(word, k, 5)
    assert all(c.a_degree == k for c in basis)
    assert len({c.label for c in basis}) == len(basis)


@given(words, st.integers(0, 4))
def test_q_parity_follows_word_length(word, k):
    for c in hh_basis(word, k, 5):
        assert c.q_degree % 2 == len(word) % 2


@given(words)
def test_total_rank(word):
    # every letter contributes a dot or a Hochschild dot, every unused root
    # an optional exterior factor; sts trades its four-dimensional middle for cups
    n = 5
    total = sum(len(hh_basis(word, k, n)) for k in range(n + 3))
    unused = n - 1 - len(set(word))
    assert total == 2 ** len(word) * 2 ** unused
