"""Koszul complexes over R, used as an independent oracle for the J-blocks.

K(s_1..s_r) has the exterior power Lambda^j E in position r - j, so R sits
at the top position r.  The basis vector e_S carries Q-degree equal to the
sum of deg s_i over i in S, which makes every differential degree 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .complex import Generator, HHComplex, SparseMap
from .grading_ring import QQ, Field, Poly
from .homology import eliminate_units, position_series, slice_dims


@dataclass
class KoszulComplex:
    """K(s_1..s_r) as an HHComplex on the subsets of {0..r-1}."""

    seq: tuple[Poly, ...]
    nvars: int
    subsets: dict[int, list[tuple[int, ...]]]
    complex: HHComplex

    @property
    def r(self) -> int:
        return len(self.seq)

    def position(self, subset) -> int:
        return self.r - len(subset)


def build_koszul(seq, nvars: int | None = None, top_degree: int = 0) -> KoszulComplex:
    """The Koszul complex of a sequence of homogeneous polynomials.

    ``top_degree`` is the Q-degree of the generator of the top term R.
    """
    seq = tuple(seq)
    if nvars is None:
        if not seq:
            raise ValueError("nvars is required for an empty sequence")
        nvars = seq[0].nvars
    for s in seq:
        if s.nvars != nvars:
            raise ValueError("sequence entries live in different rings")
        if not s.is_zero() and not s.is_homogeneous():
            raise ValueError(f"Koszul entry {s!r} is not homogeneous")
    r = len(seq)
    degs = [s.degree() or 0 for s in seq]
    subsets = {r - j: list(itertools.combinations(range(r), j)) for j in range(r + 1)}
    gens = {
        p: [
            Generator("e" + "".join(str(i + 1) for i in S), top_degree + sum(degs[i] for i in S))
            for S in subs
        ]
        for p, subs in subsets.items()
    }
    maps: dict[int, SparseMap] = {}
    for p in range(r):
        where = {S: i for i, S in enumerate(subsets[p + 1])}
        m: SparseMap = {}
        for j, S in enumerate(subsets[p]):
            col = {}
            for pos, i in enumerate(S):
                f = seq[i] if pos % 2 == 0 else -seq[i]
                if f:
                    col[where[S[:pos] + S[pos + 1:]]] = f
            if col:
                m[j] = col
        maps[p] = m
    cx = HHComplex(nvars + 1, 0, gens, maps)
    return KoszulComplex(seq, nvars, subsets, cx)


def koszul_cohomology(
    K: KoszulComplex, position: int, qmax: int, fld: Field = QQ, method: str = "slices"
) -> dict[int, int]:
    """Graded dimensions of H at ``position`` up to ``qmax``.

    Slice ranks are the default so that this stays independent of the
    elimination and Groebner route used for the main complexes.
    """
    if position not in K.complex.gens:
        raise ValueError(f"position {position} not in Koszul complex of length {K.r}")
    cx = K.complex.convert(fld)
    qmin = min(g.q for g in cx.gens[position])
    if method == "slices":
        return slice_dims(cx, position, qmin, qmax, fld)
    if method == "groebner":
        return position_series(eliminate_units(cx), position).dims(qmin, qmax)
    raise ValueError(f"unknown method {method!r}")


def koszul_sequence(J, nvars: int) -> list[Poly]:
    """The sequence c_i = 1 for i in J and alpha_i otherwise, in index order."""
    return [Poly.const(nvars, 1) if i in J else Poly.var(nvars, i) for i in range(1, nvars + 1)]


@dataclass
class KoszulMatch:
    """Outcome of matching a block tail against a Koszul tail.

    ``witness[p]`` maps Koszul basis indices at position p (counted from the
    top, 0 = R) to (block generator index, sign).  ``dropped`` lists block
    generators at the third position that are not part of the identification.
    """

    ok: bool
    witness: dict[int, dict[int, tuple[int, int]]] = field(default_factory=dict)
    dropped: list[int] = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.ok


def match_to_koszul(block: HHComplex, J, seq=None) -> KoszulMatch:
    """Identify the last three terms of ``block`` with those of a Koszul complex.

    The sequence defaults to ``koszul_sequence(J)``.  The search runs over
    signed permutations of the middle term; the third term is matched column
    by column against Lambda^2, and block columns left over are reported as
    dropped (they are the C_ii terms and the duplicate of each ij/ji pair).
    """
    nv = block.nvars
    seq = koszul_sequence(J, nv) if seq is None else list(seq)
    K = build_koszul(seq, nv)
    top = max(block.positions)
    p1, p2 = top - 1, top - 2
    r = len(seq)
    if block.rank(top) != 1:
        return KoszulMatch(False, reason=f"top term has rank {block.rank(top)}")
    if block.rank(p1) != r:
        return KoszulMatch(False, reason=f"middle term has rank {block.rank(p1)}, expected {r}")
    shift = block.gens[top][0].q - K.complex.gens[r][0].q
    d1 = block.maps.get(p1, {})
    d2 = block.maps.get(p2, {})
    kd2 = K.complex.maps.get(r - 2, {})
    pairs = K.subsets.get(r - 2, [])
    ncols = block.rank(p2)

    def entry(m, j, i):
        return m.get(j, {}).get(i, Poly(nv))

    for perm in itertools.permutations(range(r)):
        # perm[g] = Koszul index of block generator g at the middle position
        if any(block.gens[p1][g].q - shift != K.complex.gens[r - 1][perm[g]].q for g in range(r)):
            continue
        for eps0 in (1, -1):
            eps = []
            for g in range(r):
                f = entry(d1, g, 0) * eps0
                c = seq[perm[g]]
                if f == c:
                    eps.append(1)
                elif f == -c:
                    eps.append(-1)
                else:
                    break
            if len(eps) < r:
                continue
            chosen = _match_pairs(pairs, kd2, d2, perm, eps, ncols, block, p2, shift, K, r)
            if chosen is None:
                continue
            witness = {
                0: {0: (0, eps0)},
                1: {perm[g]: (g, eps[g]) for g in range(r)},
                2: chosen,
            }
            used = {h for h, _ in chosen.values()}
            return KoszulMatch(True, witness, [h for h in range(ncols) if h not in used])
    return KoszulMatch(False, reason="no signed permutation identifies the blocks")


def _match_pairs(pairs, kd2, d2, perm, eps, ncols, block, p2, shift, K, r):
    """Assign a distinct signed block column to every Koszul pair, or None."""
    kq = K.complex.gens.get(r - 2, [])

    def image(h, sign):
        # block column h expressed in Koszul middle coordinates
        out = {}
        for g, f in d2.get(h, {}).items():
            out[perm[g]] = f * (eps[g] * sign)
        return {k: v for k, v in out.items() if v}

    def fits(idx, h):
        if block.gens[p2][h].q - shift != kq[idx].q:
            return None
        want = {k: v for k, v in kd2.get(idx, {}).items() if v}
        for sign in (1, -1):
            got = image(h, sign)
            if set(got) == set(want) and all(got[k] == want[k] for k in want):
                return sign
        return None

    chosen: dict[int, tuple[int, int]] = {}

    def search(idx: int, used: set[int]) -> bool:
        if idx == len(pairs):
            return True
        for h in range(ncols):
            if h in used:
                continue
            sign = fits(idx, h)
            if sign is None:
                continue
            chosen[idx] = (h, sign)
            if search(idx + 1, used | {h}):
                return True
            del chosen[idx]
        return False

    return dict(chosen) if search(0, set()) else None

