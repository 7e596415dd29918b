"""Closed-form predictions for extreme T-degrees and for two-strand torus links.

Dimensions are given as maps Q -> dim; k(m) lives in Q-degree -m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .series import HilbertSeries


@dataclass(frozen=True)
class Expected:
    """Predicted cohomology at one (A, T): a finite part, or a free tail start."""

    a: int
    t: int
    dims: dict[int, int]
    tail_start: int | None = None


def _k(m: int) -> dict[int, int]:
    return {-m: 1}


def positive_extreme(n: int, length: int, stst: bool) -> list[Expected]:
    """Predictions at T = |b|, |b|-1 and (when ``stst`` holds, n >= 3) |b|-2."""
    out = [Expected(0, length, _k(length))]
    out += [Expected(a, length, {}) for a in range(1, n)]
    if length >= 1:
        out += [Expected(a, length - 1, {}) for a in range(n)]
    if stst and n >= 3 and length >= 2:
        t = length - 2
        out += [Expected(0, t, _k(length - 4)), Expected(1, t, _k(length))]
        out += [Expected(a, t, {}) for a in range(2, n)]
    return out


def negative_extreme(n: int, length: int, stst: bool) -> list[Expected]:
    """Predictions at T = -|a|, -|a|+1 and (with ``stst``) -|a|+2, for n >= 3."""
    if n < 3:
        return []
    out = [Expected(a, t, {}) for t in (-length, -length + 1) for a in range(n)]
    if stst and length >= 2:
        t = -length + 2
        for a in range(n):
            dims = _k(8 - length) if (n == 3 and a == 2) else {}
            out.append(Expected(a, t, dims))
    return out


def two_strand(m: int, sign: int) -> list[Expected]:
    """Two-strand predictions, skipping the finite clauses that collide with a tail.

    For i < m (and i = m when m is odd) the finite value is exact.  For
    i = m with m even only the tail start is predicted.
    """
    out = []
    for i in range(m + 1):
        overlap = i == m and m % 2 == 0
        if sign == 1:
            t = m - i
            if overlap:
                out.append(Expected(0, t, {}, tail_start=m))
                out.append(Expected(1, t, {}, tail_start=m - 4))
                continue
            a0 = _k(m) if i == 0 else (_k(m - 2 * i) if i % 2 == 0 else {})
            a1 = _k(m - 2 * i + 4) if (i >= 2 and i % 2 == 0) else {}
        else:
            t = -m + i
            if overlap:
                out.append(Expected(0, t, {}, tail_start=2 - m))
                out.append(Expected(1, t, {}, tail_start=-m - 2))
                continue
            a0 = _k(-m + 2 * i - 2) if (i >= 3 and i % 2 == 1) else {}
            a1 = _k(-m + 2 * i + 2) if i % 2 == 1 else {}
        out.append(Expected(0, t, a0))
        out.append(Expected(1, t, a1))
    return out


def compare(table, expected: list[Expected]) -> list[str]:
    """Mismatches between a table and predictions (empty when all agree)."""
    bad = []
    for e in expected:
        s = table.series.get((e.a, e.t))
        if s is None:
            bad.append(f"A={e.a} T={e.t}: not computed")
            continue
        if e.tail_start is not None:
            tail = table.tail(e.a, e.t)
            if tail is None or tail.qstart != e.tail_start:
                got = None if tail is None else tail.qstart
                bad.append(f"A={e.a} T={e.t}: tail start {got}, expected {e.tail_start}")
            continue
        if s != HilbertSeries(e.dims, 0):
            bad.append(f"A={e.a} T={e.t}: got {s!r}, expected {e.dims}")
    return bad


def theorem_verdicts(b: BraidWord, table) -> dict[str, bool | None]:
    """Per-degree agreement with the extreme-degree predictions; None when a hypothesis fails."""
    h = table.hypotheses
    L = len(b)
    stst = bool(h.get("stst_per_pair"))
    if b.is_positive():
        preds = positive_extreme(b.n, L, True) if h.get("all_generators") else []
        labels = {L: "T=|b|", L - 1: "T=|b|-1", L - 2: "T=|b|-2"}
        gated = {L - 2: stst and b.n >= 3}
    else:
        ok = h.get("all_generators") and b.n >= 3
        preds = negative_extreme(b.n, L, True) if ok else []
        labels = {-L: "T=-|a|", -L + 1: "T=-|a|+1", -L + 2: "T=-|a|+2"}
        gated = {-L + 2: stst}
    verdicts: dict[str, bool | None] = {name: None for name in labels.values()}
    for t, name in labels.items():
        if not gated.get(t, True):
            continue
        here = [e for e in preds if e.t == t]
        if here:
            verdicts[name] = not compare(table, here)
    return verdicts
