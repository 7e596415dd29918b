"""Graded submodules of free R-modules: Groebner bases and Hilbert series.

A module element is a dict mapping (component, exponent) to a field scalar.
Components carry Q-degrees; every input vector must be homogeneous.  The
monomial order compares weighted degree, then reverse lexicographic
exponents, then the component index.
"""

from __future__ import annotations

import functools
from typing import Iterable

from .series import HilbertSeries

Mono = tuple[int, tuple[int, ...]]  # (component, exponent)
Vector = dict[Mono, object]


def _key(m: Mono):
    comp, e = m
    return (sum(e), tuple(-x for x in reversed(e)), -comp)


def leading(v: Vector) -> Mono:
    return max(v, key=_key)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(f: Vector, g: Vector, mono: tuple[int, ...], c) -> Vector:
    """f - c * mono * g."""
    out = dict(f)
    for (comp, e), v in g.items():
        key = (comp, tuple(x + y for x, y in zip(e, mono)))
        w = out.get(key)
        w = -c * v if w is None else w - c * v
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return out


class _Basis:
    """Growing Groebner basis with a per-component index of leading terms."""

    def __init__(self):
        self.elems: list[Vector] = []
        self.lead: list[Mono] = []
        self.by_comp: dict[int, list[int]] = {}

    def add(self, v: Vector) -> int:
        lm = leading(v)
        c = v[lm]
        v = {k: x / c for k, x in v.items()}
        self.elems.append(v)
        self.lead.append(lm)
        self.by_comp.setdefault(lm[0], []).append(len(self.elems) - 1)
        return len(self.elems) - 1

    def reducer(self, m: Mono, alive: set[int]) -> int | None:
        comp, e = m
        for idx in self.by_comp.get(comp, ()):
            if idx in alive and _divides(self.lead[idx][1], e):
                return idx
        return None

    def top_reduce(self, f: Vector, alive: set[int]) -> Vector:
        while f:
            lm = leading(f)
            idx = self.reducer(lm, alive)
            if idx is None:
                return f
            mono = tuple(x - y for x, y in zip(lm[1], self.lead[idx][1]))
            f = _sub_scaled(f, self.elems[idx], mono, f[lm])
        return f


def groebner_basis(vectors: Iterable[Vector]) -> list[Vector]:
    """A Groebner basis (not reduced) of the submodule spanned by ``vectors``."""
    B = _Basis()
    alive: set[int] = set()
    pairs: list[tuple[tuple, int, int]] = []

    def insert(v: Vector):
        idx = B.add(v)
        comp, e = B.lead[idx]
        for j in list(alive):
            if B.lead[j][0] != comp:
                continue
            lcm = _lcm(e, B.lead[j][1])
            pairs.append((_key((comp, lcm)), j, idx))
        alive.add(idx)

    for v in sorted((v for v in vectors if v), key=lambda v: _key(leading(v))):
        r = B.top_reduce(v, alive)
        if r:
            insert(r)

    done: set[tuple[int, int]] = set()
    while pairs:
        pairs.sort(key=lambda t: t[0], reverse=True)
        _, i, j = pairs.pop()
        done.add((i, j))
        comp, ei = B.lead[i]
        ej = B.lead[j][1]
        lcm = _lcm(ei, ej)
        if _chain_skip(B, i, j, comp, lcm, done):
            continue
        mi = tuple(x - y for x, y in zip(lcm, ei))
        mj = tuple(x - y for x, y in zip(lcm, ej))
        s = _sub_scaled({(c, tuple(a + b for a, b in zip(e, mi))): v for (c, e), v in B.elems[i].items()},
                        B.elems[j], mj, 1)
        r = B.top_reduce(s, alive)
        if r:
            insert(r)
    return [B.elems[i] for i in sorted(alive)]


def _chain_skip(B: _Basis, i: int, j: int, comp: int, lcm, done) -> bool:
    """Buchberger's chain criterion: some k with lead dividing lcm, both pairs treated."""
    for k in B.by_comp.get(comp, ()):
        if k in (i, j):
            continue
        if _divides(B.lead[k][1], lcm):
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                return True
    return False


def leading_ideals(basis: Iterable[Vector]) -> dict[int, list[tuple[int, ...]]]:
    out: dict[int, list[tuple[int, ...]]] = {}
    for v in basis:
        comp, e = leading(v)
        out.setdefault(comp, []).append(e)
    return {c: minimal_generators(g) for c, g in out.items()}


def minimal_generators(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


@functools.lru_cache(maxsize=None)
def quotient_numerator(gens: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, int], ...]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^r of R / (monomial ideal).

    Returned as sorted (degree, coefficient) pairs; uses
    N(I + (m)) = N(I) - t^deg(m) N(I : m).
    """
    gens = tuple(minimal_generators(gens))
    if not gens:
        return ((0, 1),)
    if any(sum(g) == 0 for g in gens):
        return ()
    if all(sum(1 for x in g if x) == 1 for g in gens):
        # pure powers of distinct variables: product of (1 - t^d)
        poly = {0: 1}
        for g in gens:
            d = sum(g)
            nxt: dict[int, int] = {}
            for k, v in poly.items():
                nxt[k] = nxt.get(k, 0) + v
                nxt[k + d] = nxt.get(k + d, 0) - v
            poly = nxt
        return tuple(sorted((k, v) for k, v in poly.items() if v))
    m, rest = gens[-1], gens[:-1]
    colon = tuple(sorted({tuple(max(x - y, 0) for x, y in zip(g, m)) for g in rest}))
    a = dict(quotient_numerator(tuple(sorted(rest))))
    b = quotient_numerator(colon)
    dm = sum(m)
    for k, v in b:
        a[k + dm] = a.get(k + dm, 0) - v
    return tuple(sorted((k, v) for k, v in a.items() if v))


def submodule_series(vectors: Iterable[Vector], gen_degrees: list[int], nvars: int) -> HilbertSeries:
    """Hilbert series (in Q) of the submodule spanned by ``vectors``.

    ``gen_degrees[c]`` is the Q-degree of component c; each a_i has degree 2.
    """
    basis = groebner_basis(vectors)
    num: dict[int, int] = {}
    for comp, gens in leading_ideals(basis).items():
        g = gen_degrees[comp]
        # series of the ideal = t^0 (1 - N(t)) over (1-t)^r, t = Q^2
        num[g] = num.get(g, 0) + 1
        for k, v in quotient_numerator(tuple(sorted(gens))):
            num[g + 2 * k] = num.get(g + 2 * k, 0) - v
    return HilbertSeries(num, nvars).simplified()
