import copy
import itertools

import pytest

from extremal_hhh.braid import BraidWord, parse_braid
from extremal_hhh.complex import block_decompose, build_truncated
from extremal_hhh.grading_ring import Field, Poly
from extremal_hhh.koszul import (
    build_koszul,
    koszul_cohomology,
    koszul_sequence,
    match_to_koszul,
)


def alpha(nv, i):
    return Poly.var(nv, i)


def test_ranks_are_binomial():
    K = build_koszul([alpha(2, 1), alpha(2, 2)])
    assert [K.complex.rank(p) for p in (0, 1, 2)] == [1, 2, 1]
    K = build_koszul([alpha(3, i) for i in (1, 2, 3)])
    assert [K.complex.rank(p) for p in range(4)] == [1, 3, 3, 1]
    assert K.position(()) == 3 and K.position((0, 1, 2)) == 0


def test_differentials_are_homogeneous_and_square_to_zero():
    for seq in ([alpha(3, 1), alpha(3, 2), alpha(3, 3)], koszul_sequence({1, 2}, 3)):
        K = build_koszul(seq)
        K.complex.check_d_squared()
        K.complex.check_homogeneous()


def test_residue_field_at_top():
    K = build_koszul([alpha(3, i) for i in (1, 2, 3)])
    assert koszul_cohomology(K, 3, 12) == {0: 1}
    for p in (0, 1, 2):
        assert koszul_cohomology(K, p, 12) == {}


def test_partial_unit_sequence():
    # (1, 1, alpha3) is exact because a unit kills everything
    K = build_koszul(koszul_sequence({1, 2}, 3))
    for p in range(4):
        assert koszul_cohomology(K, p, 12) == {}
        assert koszul_cohomology(K, p, 12, method="groebner") == {}


def test_groebner_and_slices_agree():
    K = build_koszul([alpha(2, 1), alpha(2, 1), alpha(2, 2)])
    for p in range(4):
        assert koszul_cohomology(K, p, 14) == koszul_cohomology(K, p, 14, method="groebner")


def test_prime_field():
    K = build_koszul([alpha(3, i) for i in (1, 2, 3)])
    assert koszul_cohomology(K, 3, 10, fld=Field(10007)) == {0: 1}


def test_cone_recursion():
    # the subsets avoiding the last index span a copy of the shorter complex
    seq = [alpha(3, i) for i in (1, 2, 3)]
    big, small = build_koszul(seq), build_koszul(seq[:2])
    r = big.r
    for p, m in small.complex.maps.items():
        src, dst = small.subsets[p], small.subsets[p + 1]
        bsrc, bdst = big.subsets[p + 1], big.subsets[p + 2]
        for j, col in m.items():
            bj = bsrc.index(src[j])
            for i, f in col.items():
                assert big.complex.maps[p + 1][bj][bdst.index(dst[i])] == f
    # the remaining part maps to it by multiplication with the last entry
    last = r - 1
    for S in big.subsets[0]:
        assert last in S
    for j, S in enumerate(big.subsets[r - 1]):
        if S == (last,):
            assert big.complex.maps[r - 1][j] == {0: seq[last]}


def test_self_duality_by_transpose():
    seq = [alpha(3, i) for i in (1, 2, 3)]
    K = build_koszul(seq)
    full = set(range(K.r))
    for p, m in K.complex.maps.items():
        for j, col in m.items():
            S = K.subsets[p][j]
            for i, f in col.items():
                T = K.subsets[p + 1][i]
                Sc, Tc = tuple(sorted(full - set(S))), tuple(sorted(full - set(T)))
                q = K.r - len(Tc)
                g = K.complex.maps[q][K.subsets[q].index(Tc)][K.subsets[q + 1].index(Sc)]
                assert g == f or g == -f


def test_non_homogeneous_entry_is_rejected():
    with pytest.raises(ValueError, match="homogeneous"):
        build_koszul([alpha(2, 1) + Poly.const(2, 1)])


BRAIDS = [
    parse_braid("1 2 1 2", 3),
    parse_braid("1 2 2 1 2 1 1", 3),
    parse_braid("1 2 1 2 3 2 3 2 1", 4),
    BraidWord.positive(2, [1, 1, 1]),
]


@pytest.mark.parametrize("b", BRAIDS, ids=lambda b: b.tokens())
def test_blocks_match_koszul(b):
    c = build_truncated(b)
    for k in range(b.n):
        for J, block in block_decompose(c, k):
            m = match_to_koszul(block, J)
            assert m, m.reason
            r = b.n - 1
            assert len(m.witness[1]) == r
            assert len(m.witness[2]) == r * (r - 1) // 2


def test_corrupted_block_does_not_match():
    b = parse_braid("1 2 1 2", 3)
    c = build_truncated(b)
    J, block = block_decompose(c, 1)[0]
    assert match_to_koszul(block, J)
    bad = copy.deepcopy(block)
    top = max(bad.positions)
    col = bad.maps[top - 1][0]
    i = next(iter(col))
    col[i] = col[i] + col[i] if col[i].is_constant() else col[i] * 2
    assert not match_to_koszul(bad, J)
