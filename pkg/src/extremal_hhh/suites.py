"""Verification suites shared by the command line and the acceptance tests.

Every suite is deterministic given its seed and returns a ``SuiteResult``
holding one line per check.
"""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass, field

from . import reference_data
from .braid import (
    BraidWord,
    closure_components,
    cyclic_shift,
    has_adjacent_squares,
    mirror,
    primeness_criterion,
    uses_all_generators,
)
from .complex import block_decompose, build_truncated
from .grading_ring import QQ, Field, Poly
from .homology import extreme_hhh, negative_extreme_hhh, two_strand_hhh
from .invariant import mirror_check, positive_form_check, superpolynomial
from .koszul import build_koszul, koszul_cohomology, match_to_koszul
from .predictions import compare, two_strand

SUITES = ("fixtures", "theorems-positive", "theorems-negative", "koszul", "two-strand", "markov", "mirror")
MAX_LENGTH = 14


@dataclass
class SuiteResult:
    name: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append((label, bool(ok), detail))

    def failures(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]

    def summary(self) -> str:
        bad = len(self.failures())
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name}: {len(self.checks) - bad}/{len(self.checks)} checks ({self.elapsed:.2f}s)"


def random_positive_braid(
    rng: random.Random, n: int, max_length: int = MAX_LENGTH, stst: bool = False, knot: bool = False
) -> BraidWord:
    """A uniformly drawn positive word using every generator, by rejection."""
    lo = max(n - 1, 4 * (n - 2) if stst else 0)
    while True:
        length = rng.randint(lo, max_length)
        b = BraidWord.positive(n, [rng.randint(1, n - 1) for _ in range(length)])
        if not uses_all_generators(b):
            continue
        if stst and not has_adjacent_squares(b):
            continue
        if knot and closure_components(b) != 1:
            continue
        return b


def theorem_braids(seed: int, count: int, ns=(3, 4, 5)) -> list[BraidWord]:
    """The random positive braids of the theorem suites.

    Every second braid is drawn with the s t s t condition for each adjacent
    pair, so that the T = |b| - 2 claims are exercised as well.
    """
    rng = random.Random(seed)
    return [random_positive_braid(rng, n, stst=(i % 2 == 0)) for n in ns for i in range(count)]


def _timed(fn):
    def run(*args, **kwargs) -> SuiteResult:
        start = time.perf_counter()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - start
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def fixtures_suite(seed: int = 0, count: int = 0) -> SuiteResult:
    """Entrywise comparison of the built HH matrices with the reference tables."""
    res = SuiteResult("fixtures")
    for ref in reference_data.ALL:
        bad = reference_data.mismatches(ref)
        res.add(ref.name, not bad, f"{len(bad)} mismatching entries" if bad else "")
    return res


def _required(b: BraidWord) -> list[str]:
    names = ["T=|b|", "T=|b|-1"] if b.is_positive() else ["T=-|a|", "T=-|a|+1"]
    if has_adjacent_squares(b if b.is_positive() else mirror(b)):
        names.append("T=|b|-2" if b.is_positive() else "T=-|a|+2")
    return names


def _theorem_check(res: SuiteResult, b: BraidWord, table) -> None:
    needed = _required(b)
    missing = [k for k in needed if table.theorem.get(k) is None]
    wrong = [k for k, v in table.theorem.items() if v is False]
    res.add(
        f"n={b.n} [{b.tokens()}]",
        not missing and not wrong,
        f"disagrees at {wrong}" if wrong else (f"unchecked {missing}" if missing else ""),
    )


@_timed
def theorems_positive_suite(seed: int = 1, count: int = 50, fld: Field = QQ) -> SuiteResult:
    """Extreme-degree values of random positive braids against the closed forms."""
    res = SuiteResult("theorems-positive")
    for b in theorem_braids(seed, count):
        _theorem_check(res, b, extreme_hhh(b, fld=fld))
    return res


@_timed
def theorems_negative_suite(seed: int = 1, count: int = 50, fld: Field = QQ) -> SuiteResult:
    """The same braids, mirrored, through the dual complex."""
    res = SuiteResult("theorems-negative")
    for b in theorem_braids(seed, count):
        _theorem_check(res, mirror(b), negative_extreme_hhh(mirror(b), fld=fld))
    return res


@_timed
def koszul_suite(seed: int = 1, count: int = 50) -> SuiteResult:
    """J-blocks against Koszul tails, and exactness of unit Koszul complexes."""
    res = SuiteResult("koszul")
    for b in theorem_braids(seed, count):
        c = build_truncated(b)
        failed = []
        for k in range(b.n):
            for J, block in block_decompose(c, k):
                if not match_to_koszul(block, J):
                    failed.append(sorted(J))
        res.add(f"blocks n={b.n} [{b.tokens()}]", not failed, f"unmatched J {failed}" if failed else "")
    for n in (2, 3, 4, 5):
        nv = n - 1
        for J in _nonempty_subsets(nv):
            seq = [Poly.const(nv, 1) if i in J else Poly.var(nv, i) for i in range(1, nv + 1)]
            K = build_koszul(seq)
            qmax = 2 * nv + 10
            nonzero = {p: d for p in K.complex.positions if (d := koszul_cohomology(K, p, qmax))}
            res.add(f"unit Koszul n={n} J={sorted(J)}", not nonzero, f"nonzero at {nonzero}" if nonzero else "")
    return res


def _nonempty_subsets(r: int):
    for mask in range(1, 1 << r):
        yield {i + 1 for i in range(r) if mask >> i & 1}


@_timed
def two_strand_suite(seed: int = 0, count: int = 8) -> SuiteResult:
    """Two-strand torus links T(2, +-m), m = 1..count, against the closed forms."""
    res = SuiteResult("two-strand")
    for m in range(1, max(count, 1) + 1):
        for sign in (1, -1):
            table = two_strand_hhh(m, sign, qmax=2 * m + 10)
            bad = compare(table, two_strand(m, sign))
            res.add(f"m={m} sign={sign:+d}", not bad, "; ".join(bad))
    return res


def _table_key(table):
    return sorted((k, s.simplified().num, s.simplified().den) for k, s in table.series.items() if not s.is_zero())


@_timed
def markov_suite(seed: int = 1, count: int = 10) -> SuiteResult:
    """Tables unchanged along the full cyclic orbit of random positive words."""
    res = SuiteResult("markov")
    rng = random.Random(seed)
    for i in range(count):
        n = 3 + i % 3
        b = random_positive_braid(rng, n, max_length=10)
        ref = _table_key(extreme_hhh(b))
        ref_neg = _table_key(negative_extreme_hhh(mirror(b)))
        bad = []
        for k in range(1, len(b)):
            s = cyclic_shift(b, k)
            if _table_key(extreme_hhh(s)) != ref or _table_key(negative_extreme_hhh(mirror(s))) != ref_neg:
                bad.append(k)
        res.add(f"orbit n={n} [{b.tokens()}]", not bad, f"differs at shifts {bad}" if bad else "")
    return res


def mirror_knots(seed: int, count: int = 5) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_positive_braid(rng, 3, stst=True, knot=True) for _ in range(count)]


@_timed
def mirror_suite(seed: int = 1, count: int = 5) -> SuiteResult:
    """The mirror relation on two-strand knots and random prime 3-strand knots."""
    res = SuiteResult("mirror")
    cases = [BraidWord.positive(2, [1] * m) for m in (3, 5)]
    cases += [BraidWord.negative(2, [1] * m) for m in (3, 5)]
    cases += mirror_knots(seed, count)
    for b in cases:
        rep = mirror_check(b)
        res.add(f"n={b.n} [{b.tokens()}] overlap T^{list(rep.overlap)}", rep.ok, "; ".join(rep.mismatches))
    return res


@_timed
def positive_form_suite(seed: int = 1, count: int = 50) -> SuiteResult:
    """Leading shape of the superpolynomial on the braids meeting the primeness criterion."""
    res = SuiteResult("positive-form")
    for b in theorem_braids(seed, count):
        if not primeness_criterion(b):
            continue
        rep = positive_form_check(superpolynomial(b, extreme_hhh(b)), prime=True)
        ok = rep.top_shape is True and rep.prime_factor is True
        res.add(f"n={b.n} [{b.tokens()}]", ok, "; ".join(rep.notes))
    return res


@_timed
def field_suite(seed: int = 1, count: int = 50, p: int = 10007) -> SuiteResult:
    """Rational and characteristic-p tables agree on the theorem braids."""
    res = SuiteResult("fields")
    fp = Field(p)
    for b in theorem_braids(seed, count):
        same = _table_key(extreme_hhh(b)) == _table_key(extreme_hhh(b, fld=fp))
        same = same and _table_key(negative_extreme_hhh(mirror(b))) == _table_key(
            negative_extreme_hhh(mirror(b), fld=fp)
        )
        res.add(f"n={b.n} [{b.tokens()}]", same)
    return res


RUNNERS = {
    "fixtures": fixtures_suite,
    "theorems-positive": theorems_positive_suite,
    "theorems-negative": theorems_negative_suite,
    "koszul": koszul_suite,
    "two-strand": two_strand_suite,
    "markov": markov_suite,
    "mirror": mirror_suite,
}

DEFAULT_COUNTS = {
    "fixtures": 0,
    "theorems-positive": 50,
    "theorems-negative": 50,
    "koszul": 50,
    "two-strand": 8,
    "markov": 10,
    "mirror": 5,
}


def run_suite(name: str, seed: int = 1, count: int | None = None) -> SuiteResult:
    if name not in RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return RUNNERS[name](seed=seed, count=DEFAULT_COUNTS[name] if count is None else count)
