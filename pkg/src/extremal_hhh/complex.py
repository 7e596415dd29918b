"""Reduced Rouquier complexes and their Hochschild cohomology complexes.

A positive braid complex is truncated to subwords of length at most three,
which determines cohomology in the top three T-degrees.  Applying HH^k turns
each term into a free graded R-module; ``HHComplex`` stores those modules and
the maps between them as sparse polynomial matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidWord, SubwordTerm, distinct_subwords, subwords_up_to_length
from .diff_rules import classify_component, hh_component_matrix
from .grading_ring import Field, Poly
from .hh_basis import HOCH, HHClass, hh_basis, term_q_offset

SparseMap = dict[int, dict[int, Poly]]  # column -> {row: entry}


class ComplexError(RuntimeError):
    """A built complex fails d^2 = 0 or a block decomposition check."""


@dataclass(frozen=True)
class Generator:
    """A free generator of a term of an HH complex."""

    label: str
    q: int
    support: frozenset[int] | None = None
    term: SubwordTerm | None = None
    cls: HHClass | None = None


def class_support(cls: HHClass) -> frozenset[int] | None:
    """Colors carrying a Hochschild dot together with the exterior indices."""
    if cls.cup is not None:
        return None
    hoch = {c for c, x in zip(cls.word, cls.strands) if x == HOCH}
    return frozenset(hoch) | frozenset(cls.ext)


@dataclass
class HHComplex:
    """A cochain complex of free graded R-modules.

    ``maps[p]`` is the differential from position ``p`` to ``p + 1``, stored
    column-wise: ``maps[p][j][i]`` is the entry from generator j of ``gens[p]``
    to generator i of ``gens[p + 1]``.
    """

    n: int
    a_degree: int
    gens: dict[int, list[Generator]]
    maps: dict[int, SparseMap] = field(default_factory=dict)

    @property
    def nvars(self) -> int:
        return self.n - 1

    @property
    def positions(self) -> list[int]:
        return sorted(self.gens)

    def rank(self, p: int) -> int:
        return len(self.gens.get(p, ()))

    def convert(self, fld: Field) -> "HHComplex":
        maps = {
            p: {j: {i: f.convert(fld) for i, f in col.items()} for j, col in m.items()}
            for p, m in self.maps.items()
        }
        return HHComplex(self.n, self.a_degree, dict(self.gens), maps)

    def check_d_squared(self) -> None:
        for p in self.positions:
            first, second = self.maps.get(p), self.maps.get(p + 1)
            if not first or not second:
                continue
            for j, col in first.items():
                acc: dict[int, Poly] = {}
                for i, f in col.items():
                    for l, g in second.get(i, {}).items():
                        acc[l] = acc.get(l, Poly(self.nvars)) + g * f
                bad = [l for l, v in acc.items() if v]
                if bad:
                    raise ComplexError(
                        f"d^2 != 0 at A={self.a_degree}, position {p}, "
                        f"generator {self.gens[p][j].label}"
                    )

    def check_homogeneous(self) -> None:
        for p, m in self.maps.items():
            for j, col in m.items():
                for i, f in col.items():
                    want = self.gens[p][j].q - self.gens[p + 1][i].q
                    if not f.is_homogeneous() or f.degree() != want:
                        raise ComplexError(f"inhomogeneous entry at position {p}")

    def dual(self) -> "HHComplex":
        """Hom into R with the shift (2(n-1)): positions and Q-degrees reflected."""
        shift = 2 * (self.n - 1)
        gens = {
            -p: [Generator(g.label + "^v", -g.q - shift, g.support, g.term, g.cls) for g in gl]
            for p, gl in self.gens.items()
        }
        maps: dict[int, SparseMap] = {}
        for p, m in self.maps.items():
            t: SparseMap = {}
            for j, col in m.items():
                for i, f in col.items():
                    t.setdefault(i, {})[j] = f
            maps[-p - 1] = t
        return HHComplex(self.n, self.n - 1 - self.a_degree, gens, maps)

    def restrict(self, keep: dict[int, list[int]]) -> "HHComplex":
        """Sub-complex on the given generator indices per position."""
        gens, maps = {}, {}
        reindex = {}
        for p, idx in keep.items():
            gens[p] = [self.gens[p][i] for i in idx]
            reindex[p] = {old: new for new, old in enumerate(idx)}
        for p, m in self.maps.items():
            if p not in keep or p + 1 not in keep:
                continue
            src, dst = reindex[p], reindex[p + 1]
            maps[p] = {
                src[j]: {dst[i]: f for i, f in col.items() if i in dst}
                for j, col in m.items()
                if j in src
            }
        return HHComplex(self.n, self.a_degree, gens, maps)

    def to_json(self) -> dict:
        def poly_json(f: Poly):
            return [[str(c), list(e)] for e, c in sorted(f.terms.items())]

        return {
            "n": self.n,
            "A": self.a_degree,
            "terms": {
                str(p): [{"label": g.label, "Q": g.q} for g in gl] for p, gl in self.gens.items()
            },
            "maps": {
                str(p): [
                    [j, i, poly_json(f)] for j, col in sorted(m.items()) for i, f in sorted(col.items())
                ]
                for p, m in self.maps.items()
            },
        }


@dataclass
class TruncatedComplex:
    """The (reduced, possibly truncated) Rouquier complex of a positive braid.

    ``terms[p]`` lists the distinct subwords placed in cohomological degree
    ``p``, lexicographically sorted.
    """

    n: int
    length: int
    terms: dict[int, list[SubwordTerm]]
    full: bool = False
    braid: BraidWord | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def positions(self) -> list[int]:
        return sorted(self.terms)

    def hh(self, k: int) -> HHComplex:
        """The complex HH^k of the terms, with d^2 = 0 verified."""
        if k not in self._cache:
            cx = _assemble(self, k)
            cx.check_d_squared()
            self._cache[k] = cx
        return self._cache[k]

    def differential(self, p: int, k: int) -> SparseMap:
        return self.hh(k).maps.get(p, {})


@dataclass
class DualComplex:
    """The transpose of a positive complex, representing the mirror braid."""

    source: TruncatedComplex
    n: int
    provenance: str = "transposed"
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def length(self) -> int:
        return self.source.length

    @property
    def full(self) -> bool:
        return self.source.full

    @property
    def positions(self) -> list[int]:
        return sorted(-p for p in self.source.positions)

    def hh(self, k: int) -> HHComplex:
        if k not in self._cache:
            self._cache[k] = self.source.hh(self.n - 1 - k).dual()
        return self._cache[k]


def _assemble(c: TruncatedComplex, k: int) -> HHComplex:
    gens: dict[int, list[Generator]] = {}
    offsets: dict[tuple[int, tuple[int, ...]], int] = {}
    for p in c.positions:
        gl = []
        for term in c.terms[p]:
            offsets[(p, term.letters)] = len(gl)
            for cls in hh_basis(term.contracted, k, c.n):
                gl.append(
                    Generator(f"{term}:{cls.label}", term_q_offset(term, cls), class_support(cls), term, cls)
                )
        gens[p] = gl
    maps: dict[int, SparseMap] = {}
    for p in c.positions:
        if p + 1 not in c.terms:
            continue
        m: SparseMap = {}
        for x in c.terms[p]:
            for z in c.terms[p + 1]:
                if classify_component(x, z) is None:
                    continue
                hm = hh_component_matrix(x, z, k, c.n)
                cx, rz = offsets[(p, x.letters)], offsets[(p + 1, z.letters)]
                for (r, col), f in hm.entries.items():
                    m.setdefault(cx + col, {})[rz + r] = f
        maps[p] = m
    return HHComplex(c.n, k, gens, maps)


def _place(words, length: int) -> dict[int, list[SubwordTerm]]:
    terms: dict[int, list[SubwordTerm]] = {}
    for w in sorted(words):
        t = SubwordTerm.of(w, length)
        terms.setdefault(t.cohom_degree, []).append(t)
    return terms


def build_truncated(b: BraidWord, depth: int = 3) -> TruncatedComplex:
    """Top ``depth + 1`` cohomological degrees of the reduced complex of ``b``."""
    if not b.is_positive():
        raise ValueError("build_truncated needs a positive braid; dualize the mirror instead")
    words = {t.letters for t in subwords_up_to_length(b, depth)}
    full = depth >= len(b)
    return TruncatedComplex(b.n, len(b), _place(words, len(b)), full, b)


def build_from_subwords(words, n: int, length: int) -> TruncatedComplex:
    """Complex on a given set of subwords of a braid of the given length."""
    return TruncatedComplex(n, length, _place({tuple(w) for w in words}, length))


def build_two_strand_full(m: int, sign: int = 1) -> TruncatedComplex | DualComplex:
    """The whole reduced complex of s^m on two strands (its dual when ``sign`` is -1)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    b = BraidWord.positive(2, [1] * m)
    words = distinct_subwords(b.indices(), m)
    c = TruncatedComplex(2, m, _place(words, m), True, b)
    if sign == -1:
        return dualize(c, 2)
    if sign != 1:
        raise ValueError("sign must be +1 or -1")
    return c


def dualize(c: TruncatedComplex, n: int | None = None) -> DualComplex:
    return DualComplex(c, n if n is not None else c.n)


def block_decompose(c: TruncatedComplex, k: int) -> list[tuple[frozenset[int], HHComplex]]:
    """Split the last three terms of HH^k by support J (|J| = k).

    Raises ``ComplexError`` if a map entry joins two different blocks.
    """
    cx = c.hh(k)
    top = max(c.positions)
    window = [p for p in cx.positions if p >= top - 2]
    for p in window:
        for j, col in cx.maps.get(p, {}).items():
            if p + 1 not in window:
                continue
            sj = cx.gens[p][j].support
            for i in col:
                if cx.gens[p + 1][i].support != sj:
                    raise ComplexError(
                        f"entry joins blocks {sorted(sj)} and {sorted(cx.gens[p + 1][i].support)}"
                    )
    supports = sorted(
        {g.support for p in window for g in cx.gens[p]}, key=lambda s: (len(s), sorted(s))
    )
    blocks = []
    for J in supports:
        keep = {p: [i for i, g in enumerate(cx.gens[p]) if g.support == J] for p in window}
        blocks.append((J, cx.restrict(keep)))
    return blocks
