"""Graded cohomology of HH complexes and the (A, T, Q) tables built from it.

Two independent routes compute the cohomology of a complex of free graded
R-modules at one position:

* ``groebner``: cancel every unit entry of the differential (Gaussian
  elimination, which preserves cohomology), then read exact Hilbert series
  off Groebner bases of the incoming and outgoing images;
* ``slices``: for each Q separately, expand the maps into matrices between
  monomial bases and take ranks.

The first is exact for every Q at once and is the default; the second is
a brute-force check used for small Q.
"""

from __future__ import annotations

import functools
import json
import warnings
from dataclasses import dataclass, field

from .braid import (
    BraidWord,
    closure_components,
    connect_sum_window,
    distinct_subwords,
    has_adjacent_squares,
    mirror,
    uses_all_generators,
    writhe,
)
from .complex import (
    DualComplex,
    HHComplex,
    SparseMap,
    TruncatedComplex,
    build_from_subwords,
    build_two_strand_full,
    dualize,
)
from .diff_rules import HHMatrix
from .grading_ring import QQ, Field, Poly, graded_slice_basis
from .groebner import submodule_series
from .linalg import in_span, nullspace, rank, sparse_rank
from .predictions import theorem_verdicts
from .series import HilbertSeries

# largest slice (rows or columns) used when certifying a tail by slice maps
TAIL_SLICE_LIMIT = 400


# ---------------------------------------------------------------- elimination


def eliminate_units(cx: HHComplex) -> HHComplex:
    """Cancel constant entries of the differential until none are left.

    Each cancelled pivot u from generator b to generator c removes both and
    replaces the remaining block e by e - g u^-1 h, as in the Gaussian
    elimination lemma for complexes.  Pivots are chosen greedily by
    Markowitz cost.
    """
    nv = cx.nvars
    cols: dict[int, dict[int, dict[int, Poly]]] = {
        p: {j: dict(col) for j, col in m.items() if col} for p, m in cx.maps.items()
    }
    rows: dict[int, dict[int, set[int]]] = {p: {} for p in cols}
    for p, m in cols.items():
        for j, col in m.items():
            for i in col:
                rows[p].setdefault(i, set()).add(j)
    alive = {p: set(range(len(g))) for p, g in cx.gens.items()}

    def pivot(p: int, j: int, i: int) -> None:
        colj = cols[p].pop(j)
        for i2 in colj:
            rows[p][i2].discard(j)
        uinv = 1 / colj.pop(i).constant()
        rowi = rows[p].pop(i)
        for j2 in rowi:
            col2 = cols[p][j2]
            factor = col2.pop(i) * uinv
            for i2, g in colj.items():
                new = col2.get(i2, Poly(nv)) - g * factor
                if new:
                    col2[i2] = new
                    rows[p].setdefault(i2, set()).add(j2)
                else:
                    col2.pop(i2, None)
                    rows[p][i2].discard(j2)
        if p - 1 in cols:
            for j3 in rows[p - 1].pop(j, ()):
                cols[p - 1][j3].pop(j, None)
        if p + 1 in cols:
            for i3 in cols[p + 1].pop(i, {}):
                rows[p + 1][i3].discard(i)
        alive[p].discard(j)
        alive[p + 1].discard(i)

    while True:
        cands = []
        for p, m in cols.items():
            for j, col in m.items():
                for i, f in col.items():
                    if f.is_constant():
                        cands.append(((len(col) - 1) * (len(rows[p][i]) - 1), p, j, i))
        if not cands:
            break
        cands.sort()
        for _, p, j, i in cands:
            f = cols[p].get(j, {}).get(i)
            if f is not None and f.is_constant():
                pivot(p, j, i)

    keep = {p: sorted(a) for p, a in alive.items()}
    idx = {p: {old: new for new, old in enumerate(k)} for p, k in keep.items()}
    gens = {p: [cx.gens[p][o] for o in k] for p, k in keep.items()}
    maps: dict[int, SparseMap] = {}
    for p, m in cols.items():
        maps[p] = {
            idx[p][j]: {idx[p + 1][i]: f for i, f in col.items()} for j, col in m.items() if col
        }
    return HHComplex(cx.n, cx.a_degree, gens, maps)


# ---------------------------------------------------------------- slices


def slice_basis(degrees: list[int], q: int, n: int) -> list[tuple[int, tuple[int, ...]]]:
    """(generator, monomial) pairs of total Q-degree ``q``."""
    out = []
    for g, d in enumerate(degrees):
        for mono in graded_slice_basis(q - d, n):
            out.append((g, mono))
    return out


def sparse_slice(
    sparse: SparseMap, src: list[int], dst: list[int], q: int, n: int, fld: Field = QQ
) -> tuple[list[list], int, int]:
    """Dense matrix of a sparse map restricted to the Q-slice ``q``.

    Returns (rows, number of rows, number of columns).
    """
    cb = slice_basis(src, q, n)
    rb = slice_basis(dst, q, n)
    where = {key: r for r, key in enumerate(rb)}
    mat = [[fld.zero] * len(cb) for _ in rb]
    for c, (j, mono) in enumerate(cb):
        for i, f in sparse.get(j, {}).items():
            for e, coef in f.terms.items():
                key = (i, tuple(a + b for a, b in zip(mono, e)))
                r = where[key]
                mat[r][c] = mat[r][c] + fld(coef)
    return mat, len(rb), len(cb)


def slice_matrix(m: HHMatrix, q: int, n: int, fld: Field = QQ) -> list[list]:
    """The map of an HH matrix between the Q-slices of degree ``q``."""
    sparse: SparseMap = {}
    for (r, c), f in m.entries.items():
        sparse.setdefault(c, {})[r] = f
    src = [cls.q_degree + m.col_offset for cls in m.cols]
    dst = [cls.q_degree + m.row_offset for cls in m.rows]
    return sparse_slice(sparse, src, dst, q, n, fld)[0]


def _sparse_slice_columns(sparse: SparseMap, src: list[int], dst: list[int], q: int, n: int, fld: Field):
    rows = {key: r for r, key in enumerate(slice_basis(dst, q, n))}
    cols = []
    for j, mono in slice_basis(src, q, n):
        col: dict[int, object] = {}
        for i, f in sparse.get(j, {}).items():
            for e, coef in f.terms.items():
                r = rows[(i, tuple(a + b for a, b in zip(mono, e)))]
                col[r] = col.get(r, fld.zero) + fld(coef)
        cols.append(col)
    return cols


def _slice_dims(cx: HHComplex, p: int, q: int, fld: Field) -> int:
    degs = [g.q for g in cx.gens.get(p, [])]
    total = len(slice_basis(degs, q, cx.n))
    if not total:
        return 0
    out_rank = in_rank = 0
    if cx.maps.get(p) and p + 1 in cx.gens:
        nxt = [g.q for g in cx.gens[p + 1]]
        out_rank = sparse_rank(_sparse_slice_columns(cx.maps[p], degs, nxt, q, cx.n, fld))
    if cx.maps.get(p - 1) and p - 1 in cx.gens:
        prv = [g.q for g in cx.gens[p - 1]]
        in_rank = sparse_rank(_sparse_slice_columns(cx.maps[p - 1], prv, degs, q, cx.n, fld))
    return total - out_rank - in_rank


def slice_dims(cx: HHComplex, p: int, qmin: int, qmax: int, fld: Field = QQ) -> dict[int, int]:
    """Nonzero cohomology dimensions at ``p`` by slice ranks, for qmin <= Q <= qmax."""
    out = {}
    for q in range(qmin, qmax + 1):
        d = _slice_dims(cx, p, q, fld)
        if d:
            out[q] = d
    return out


# ---------------------------------------------------------------- series


def _vectors(sparse: SparseMap) -> list[dict]:
    out = []
    for col in sparse.values():
        v = {}
        for i, f in col.items():
            for e, c in f.terms.items():
                v[(i, e)] = c
        if v:
            out.append(v)
    return out


def position_series(cx: HHComplex, p: int) -> HilbertSeries:
    """Hilbert series of the cohomology of ``cx`` at position ``p``."""
    nv = cx.nvars
    degs = [g.q for g in cx.gens.get(p, [])]
    hs = HilbertSeries.free(degs, nv)
    if cx.maps.get(p) and p + 1 in cx.gens:
        hs = hs - submodule_series(_vectors(cx.maps[p]), [g.q for g in cx.gens[p + 1]], nv)
    if cx.maps.get(p - 1):
        hs = hs - submodule_series(_vectors(cx.maps[p - 1]), degs, nv)
    return hs.simplified()


def _check_position(c, position: int) -> None:
    pos = c.positions
    if position not in pos:
        raise ValueError(f"position {position} not in complex (positions {pos[0]}..{pos[-1]})")
    start_genuine = c.full or isinstance(c, DualComplex)
    end_genuine = c.full or isinstance(c, TruncatedComplex)
    if position == pos[0] and not start_genuine:
        raise ValueError(f"position {position} is the truncated end of the complex")
    if position == pos[-1] and not end_genuine:
        raise ValueError(f"position {position} is the truncated end of the complex")


def reduced(c, k: int, fld: Field) -> HHComplex:
    """HH^k of ``c`` over ``fld`` with all unit entries cancelled (cached on ``c``)."""
    key = ("reduced", k, fld.p)
    if key not in c._cache:
        c._cache[key] = eliminate_units(c.hh(k).convert(fld))
    return c._cache[key]


def cohomology_series(c, position: int, k: int, fld: Field = QQ) -> HilbertSeries:
    _check_position(c, position)
    return position_series(reduced(c, k, fld), position)


def cohomology_dims(
    c, position: int, k: int, qmax: int, fld: Field = QQ, method: str = "groebner", qmin: int | None = None
) -> dict[int, int]:
    """Nonzero graded dimensions of the cohomology at ``position`` for Q <= qmax."""
    _check_position(c, position)
    cx = c.hh(k)
    if qmin is None:
        qmin = min((g.q for g in cx.gens.get(position, [])), default=qmax + 1)
    if method == "groebner":
        return cohomology_series(c, position, k, fld).dims(qmin, qmax)
    if method == "slices":
        return slice_dims(cx.convert(fld), position, qmin, qmax, fld)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------- tails


@dataclass(frozen=True)
class Tail:
    """A free rank-one summand k[a_i] starting in Q-degree ``qstart``."""

    a: int
    t: int
    qstart: int
    period: int = 2
    multiplier: int | None = None


def multiplication_bijective(cx: HHComplex, p: int, q: int, i: int, fld: Field) -> bool | None:
    """Whether a_i maps the (one-dimensional) cohomology at Q = q onto Q = q + 2.

    ``cx`` should be a reduced complex.  Returns ``None`` when either slice
    is not one-dimensional or too large to examine.
    """
    n = cx.n
    degs = [g.q for g in cx.gens.get(p, [])]
    nxt = [g.q for g in cx.gens.get(p + 1, [])]
    prv = [g.q for g in cx.gens.get(p - 1, [])]

    def cycles_and_boundaries(qq):
        basis = slice_basis(degs, qq, n)
        if len(basis) > TAIL_SLICE_LIMIT:
            return None
        if cx.maps.get(p) and nxt:
            mat, nr, nc = sparse_slice(cx.maps[p], degs, nxt, qq, n, fld)
            z = nullspace(mat, nc, fld.zero, fld.one) if nr else [
                [fld.one if a == b else fld.zero for a in range(nc)] for b in range(nc)
            ]
        else:
            z = [[fld.one if a == b else fld.zero for a in range(len(basis))] for b in range(len(basis))]
        if cx.maps.get(p - 1) and prv:
            mat, nr, nc = sparse_slice(cx.maps[p - 1], prv, degs, qq, n, fld)
            bnd = [[mat[r][c] for r in range(nr)] for c in range(nc)]
        else:
            bnd = []
        return basis, z, bnd

    lo, hi = cycles_and_boundaries(q), cycles_and_boundaries(q + 2)
    if lo is None or hi is None:
        return None
    basis, z, bnd = lo
    basis2, _, bnd2 = hi
    if len(z) - rank(bnd) != 1:
        return None
    rep = next((v for v in z if not in_span(bnd, v)), None)
    if rep is None:
        return None
    where = {key: r for r, key in enumerate(basis2)}
    img = [fld.zero] * len(basis2)
    for coef, (g, mono) in zip(rep, basis):
        if coef:
            e = list(mono)
            e[i - 1] += 1
            img[where[(g, tuple(e))]] += coef
    return not in_span(bnd2, img)


def detect_free_tail(series: HilbertSeries, qmax: int, certify=None, a: int = 0, t: int = 0) -> Tail | None:
    """Flag an eventually one-dimensional, period-2 tail starting at or below ``qmax``.

    The start is the lowest Q of the final run of one-dimensional slices.
    ``certify(i, start)`` must confirm that a_i acts bijectively along the
    tail; the first index that works is recorded.  Without a certificate the
    tail is flagged from dimensions alone.
    """
    s = series.simplified()
    if s.den != 1 or len(s.num) == 0 or s.eventual_value() != 1:
        return None
    if len({k % 2 for k in s.num}) != 1:
        return None
    start = max(s.num)
    while s.coefficient(start - 2) == 1:
        start -= 2
    if start > qmax:
        return None
    if certify is None:
        return Tail(a, t, start)
    for i in range(1, certify.nvars + 1):
        if certify(i, start):
            return Tail(a, t, start, 2, i)
    return None


def tail_from_dims(dims: dict[int, int], qmax: int) -> Tail | None:
    """Dimension-only tail test: dims equal 1 on a period-2 run ending at ``qmax``."""
    if dims.get(qmax) != 1 and dims.get(qmax - 1) != 1:
        return None
    top = qmax if dims.get(qmax) == 1 else qmax - 1
    start = top
    while dims.get(start - 2) == 1:
        start -= 2
    if start == top or any(dims.get(q) for q in range(start + 1, top, 2)):
        return None
    return Tail(0, 0, start)


def set_variable_zero(cx: HHComplex, i: int) -> HHComplex:
    """The complex with a_i = 0 substituted in every entry (still over R)."""
    maps: dict[int, SparseMap] = {}
    for p, m in cx.maps.items():
        out: SparseMap = {}
        for j, col in m.items():
            c = {}
            for r, f in col.items():
                g = Poly(f.nvars, {e: v for e, v in f.terms.items() if e[i - 1] == 0})
                if g:
                    c[r] = g
            if c:
                out[j] = c
        maps[p] = out
    return HHComplex(cx.n, cx.a_degree, cx.gens, maps)


class QuotientCertificate:
    """Certifies a tail through the cohomology of C / a_i C.

    Multiplication by a_i on C gives a long exact sequence in which the
    cokernel of a_i on H_p injects into H_p(C / a_i C).  If the latter
    vanishes from Q = start + 2 on, a_i is onto, hence bijective, between
    every pair of consecutive one-dimensional tail slices, with no cutoff.
    Setting a_i = 0 keeps a complex over R whose cohomology is
    H(C / a_i C) tensored with k[a_i], so one factor (1 - Q^2) is removed.
    """

    def __init__(self, cx: HHComplex, p: int, qshift: int = 0):
        self.cx, self.p, self.qshift, self.nvars = cx, p, qshift, cx.nvars

    def quotient_series(self, i: int) -> HilbertSeries:
        s = position_series(eliminate_units(set_variable_zero(self.cx, i)), self.p)
        if s.den:
            return HilbertSeries(s.num, s.den - 1).shift(self.qshift)
        return HilbertSeries({k: v for k, v in s.num.items()}, 0).shift(self.qshift) - HilbertSeries(
            {k + 2: v for k, v in s.num.items()}, 0
        ).shift(self.qshift)

    def __call__(self, i: int, start: int) -> bool:
        s = self.quotient_series(i).simplified()
        if s.den:
            return False
        return all(s.coefficient(q) == 0 for q in s.num if q >= start + 2 and (q - start) % 2 == 0)


class SliceCertificate:
    """Checks bijectivity slice by slice from the tail start up to ``qmax``."""

    def __init__(self, cx: HHComplex, p: int, fld: Field, qmax: int, qshift: int = 0):
        self.cx, self.p, self.fld, self.qmax, self.qshift = cx, p, fld, qmax, qshift
        self.nvars = cx.nvars

    def __call__(self, i: int, start: int) -> bool:
        for q in range(start, self.qmax - 1, 2):
            if not multiplication_bijective(self.cx, self.p, q - self.qshift, i, self.fld):
                return False
        return True


# ---------------------------------------------------------------- tables


@dataclass
class TriGradedTable:
    """Graded dimensions per (A, T, Q) with exact series and flagged tails."""

    braid: str
    n: int
    writhe: int
    components: int
    qmax: int
    field: str
    t_degrees: list[int]
    a_degrees: list[int]
    series: dict[tuple[int, int], HilbertSeries]
    tails: list[Tail] = field(default_factory=list)
    hypotheses: dict = field(default_factory=dict)
    theorem: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def entries(self) -> dict[tuple[int, int, int], int]:
        out = {}
        for (a, t), s in sorted(self.series.items()):
            lo = s.min_degree()
            if lo is None:
                continue
            for q, d in s.dims(lo, self.qmax).items():
                out[(a, t, q)] = d
        return out

    def dims(self, a: int, t: int) -> dict[int, int]:
        s = self.series.get((a, t))
        if s is None or s.min_degree() is None:
            return {}
        return s.dims(s.min_degree(), self.qmax)

    def tail(self, a: int, t: int) -> Tail | None:
        return next((x for x in self.tails if x.a == a and x.t == t), None)

    def to_json(self) -> dict:
        return {
            "braid": self.braid,
            "n": self.n,
            "writhe": self.writhe,
            "components": self.components,
            "qmax": self.qmax,
            "field": self.field,
            "t_degrees": list(self.t_degrees),
            "a_degrees": list(self.a_degrees),
            "entries": [
                {"A": a, "T": t, "Q": q, "dim": d} for (a, t, q), d in sorted(self.entries.items())
            ],
            "tails": [
                {"A": x.a, "T": x.t, "qstart": x.qstart, "period": x.period, "multiplier": x.multiplier}
                for x in self.tails
            ],
            "series": [
                {"A": a, "T": t, "num": sorted(s.num.items()), "den": s.den}
                for (a, t), s in sorted(self.series.items())
            ],
            "hypotheses": dict(self.hypotheses),
            "theorem": {k: v for k, v in self.theorem.items()},
            "warnings": list(self.warnings),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, d: dict) -> "TriGradedTable":
        series = {
            (s["A"], s["T"]): HilbertSeries({int(k): int(v) for k, v in s["num"]}, s["den"])
            for s in d["series"]
        }
        tails = [Tail(x["A"], x["T"], x["qstart"], x["period"], x["multiplier"]) for x in d["tails"]]
        return cls(
            d["braid"], d["n"], d["writhe"], d["components"], d["qmax"], d["field"],
            list(d["t_degrees"]), list(d["a_degrees"]), series, tails,
            dict(d["hypotheses"]), dict(d["theorem"]), list(d["warnings"]),
        )

    def format(self) -> str:
        lines = [
            f"braid {self.braid}  (n={self.n}, writhe={self.writhe}, components={self.components})",
            f"field {self.field}, qmax {self.qmax}",
        ]
        for t in sorted(self.t_degrees, reverse=True):
            for a in self.a_degrees:
                dims = self.dims(a, t)
                tail = self.tail(a, t)
                body = ", ".join(f"Q={q}:{d}" for q, d in dims.items()) or "0"
                if tail:
                    body += f"  [free tail k[a{tail.multiplier}] from Q={tail.qstart}]"
                lines.append(f"  T={t:>3} A={a}: {body}")
        for k, v in self.hypotheses.items():
            lines.append(f"  hypothesis {k}: {v}")
        for k, v in self.theorem.items():
            verdict = "suppressed" if v is None else ("agrees" if v else "DISAGREES")
            lines.append(f"  claim {k}: {verdict}")
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        return "\n".join(lines)


def default_qmax(length: int) -> int:
    return 2 * length + 10


# ---------------------------------------------------------------- extreme degrees


@functools.lru_cache(maxsize=512)
def _relative_series(n: int, words: tuple, p: int, sign: int) -> tuple:
    """Series at the top (sign +1) or bottom (sign -1) three positions.

    The complex is built as if the braid had length 0, so positions are
    -|x| (or |x| after dualizing) and Q-degrees are relative; callers shift
    both by the braid length.  Returns ((A, position), series) pairs and the
    cached complex for tail checks.
    """
    fld = Field(p)
    base = build_from_subwords(words, n, 0)
    c = base if sign == 1 else dualize(base, n)
    out = []
    positions = [0, -1, -2] if sign == 1 else [0, 1, 2]
    for a in range(n):
        for pos in positions:
            if pos not in c.positions:
                continue
            out.append(((a, pos), position_series(reduced(c, a, fld), pos)))
    return tuple(out), c


def _hypotheses(b: BraidWord) -> dict:
    pos = b if b.is_positive() else mirror(b)
    return {
        "positive": b.is_positive(),
        "negative": b.is_negative(),
        "all_generators": uses_all_generators(b),
        "stst_per_pair": has_adjacent_squares(pos),
        "connect_sum_window": connect_sum_window(b),
    }


def extreme_hhh(b: BraidWord, qmax: int | None = None, fld: Field = QQ) -> TriGradedTable:
    """Cohomology in T-degrees |b|, |b|-1, |b|-2 for a positive braid, all A."""
    if not b.is_positive():
        raise ValueError("extreme_hhh needs a positive braid")
    return _extreme(b, b, 1, qmax, fld)


def negative_extreme_hhh(a: BraidWord, qmax: int | None = None, fld: Field = QQ) -> TriGradedTable:
    """Cohomology in T-degrees -|a|, -|a|+1, -|a|+2 of a negative braid via duality."""
    if not a.is_negative():
        raise ValueError("negative_extreme_hhh needs a negative braid")
    return _extreme(a, mirror(a), -1, qmax, fld)


def _extreme(b: BraidWord, pos: BraidWord, sign: int, qmax, fld: Field) -> TriGradedTable:
    L = len(b)
    qmax = default_qmax(L) if qmax is None else qmax
    words = tuple(sorted(distinct_subwords(pos.indices(), 3)))
    rel, c = _relative_series(b.n, words, fld.p, sign)
    series = {}
    for (a, p), s in rel:
        t = p + L if sign == 1 else p - L
        if (sign == 1 and t < 0) or (sign == -1 and t > 0):
            continue
        series[(a, t)] = s.shift(-L if sign == 1 else L)
    t_degrees = sorted({t for _, t in series})
    table = TriGradedTable(
        b.tokens(), b.n, writhe(b), closure_components(b), qmax, fld.name,
        t_degrees, list(range(b.n)), series,
    )
    table.hypotheses = _hypotheses(b)
    _tails_for_shifted(table, c, fld, sign, L)
    table.theorem = theorem_verdicts(b, table)
    if not table.hypotheses["all_generators"]:
        table.warnings.append("braid does not use every generator; theorem comparison suppressed")
    elif not table.hypotheses["stst_per_pair"] and b.n >= 3:
        table.warnings.append(
            "some adjacent pair lacks the s t s t subexpression; T-degree-2 comparison suppressed"
        )
    for w in table.warnings:
        warnings.warn(w, stacklevel=3)
    return table


def _tails_for_shifted(table: TriGradedTable, c, fld: Field, sign: int, L: int) -> None:
    """Tail detection on a relative complex, translating (T, Q) by the braid length."""
    for (a, t), s in sorted(table.series.items()):
        g = s.growth()
        if g == 0:
            continue
        p = t - L if sign == 1 else t + L
        qshift = -L if sign == 1 else L
        if g == 1 and s.eventual_value() == 1:
            cert = QuotientCertificate(reduced(c, a, fld), p, qshift)
            tail = detect_free_tail(s, table.qmax, cert, a, t)
            if tail is not None:
                table.tails.append(tail)
                continue
        table.warnings.append(
            f"cohomology at A={a}, T={t} is infinite-dimensional (growth order {g}); "
            f"dimensions listed up to Q={table.qmax}"
        )


def two_strand_hhh(m: int, sign: int = 1, qmax: int | None = None, fld: Field = QQ) -> TriGradedTable:
    """Full table of the two-strand torus link T(2, sign*m)."""
    qmax = default_qmax(m) if qmax is None else qmax
    c = build_two_strand_full(m, sign)
    b = BraidWord(2, tuple((1, sign) for _ in range(m)))
    series = {}
    for a in (0, 1):
        for p in c.positions:
            series[(a, p)] = position_series(reduced(c, a, fld), p)
    table = TriGradedTable(
        b.tokens(), 2, writhe(b), closure_components(b), qmax, fld.name,
        sorted(c.positions), [0, 1], series,
    )
    table.hypotheses = _hypotheses(b)
    _tails_for_shifted(table, c, fld, 1, 0)
    return table
