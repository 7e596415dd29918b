"""The reduced superpolynomial, its HOMFLY specialization and the mirror relation.

A superpolynomial is stored as a map (A-exponent, T-exponent) -> series in Q,
where each series is an exact rational function num(Q) / (1 - Q^2)^d.  Free
tails of a table therefore appear as 1/(1 - Q^2) factors rather than as
truncated sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidWord, closure_components, mirror, writhe
from .homology import TriGradedTable, extreme_hhh, negative_extreme_hhh, two_strand_hhh
from .series import HilbertSeries


def prefactor_exponents(b: BraidWord) -> tuple[int, int, int]:
    """(A, T, Q) exponents of the normalizing monomial of ``b``."""
    e, c, n = writhe(b), closure_components(b), b.n
    if (e + c - n) % 2:
        raise ValueError(f"e + c - n = {e + c - n} is odd; component count is inconsistent")
    h = (e + c - n) // 2
    return h, h - e, -4 * h + e


@dataclass
class Superpolynomial:
    """Exact superpolynomial terms in the T-range covered by a table."""

    parts: dict[tuple[int, int], HilbertSeries]
    t_range: tuple[int, ...] = ()
    hypotheses: dict = field(default_factory=dict)

    def __post_init__(self):
        self.parts = {k: s.simplified() for k, s in self.parts.items() if not s.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, Superpolynomial):
            return NotImplemented
        return self.parts == other.parts

    def t_part(self, t: int) -> dict[int, HilbertSeries]:
        return {a: s for (a, tt), s in self.parts.items() if tt == t}

    def top_t(self) -> int | None:
        return max((t for _, t in self.parts), default=None)

    def monomials(self) -> list[tuple[int, int, int, int]]:
        """Finite monomials (coefficient, a, t, q) of the parts without tails."""
        out = []
        for (a, t), s in sorted(self.parts.items()):
            if s.den == 0:
                out.extend((c, a, t, q) for q, c in sorted(s.num.items()))
        return out

    def tails(self) -> list[tuple[int, int, int, int, int]]:
        """Tail parts (coefficient, a, t, q, power): c A^a T^t Q^q / (1-Q^2)^power."""
        out = []
        for (a, t), s in sorted(self.parts.items()):
            if s.den:
                out.extend((c, a, t, q, s.den) for q, c in sorted(s.num.items()))
        return out

    def to_json(self) -> dict:
        return {
            "monomials": [list(m) for m in self.monomials()],
            "tails": [list(x) for x in self.tails()],
            "t_range": list(self.t_range),
            "hypotheses": dict(self.hypotheses),
        }

    @classmethod
    def from_json(cls, d: dict) -> "Superpolynomial":
        parts: dict[tuple[int, int], HilbertSeries] = {}
        for c, a, t, q in d["monomials"]:
            parts[(a, t)] = parts.get((a, t), HilbertSeries()) + HilbertSeries({q: c}, 0)
        for c, a, t, q, power in d["tails"]:
            parts[(a, t)] = parts.get((a, t), HilbertSeries()) + HilbertSeries({q: c}, power)
        return cls(parts, tuple(d["t_range"]), dict(d["hypotheses"]))

    def format(self) -> str:
        if not self.parts:
            return "0"
        terms = []
        for (a, t), s in sorted(self.parts.items(), key=lambda kv: (-kv[0][1], kv[0][0])):
            mono = _mono(a, t)
            num = " + ".join(_qterm(c, q) for q, c in sorted(s.num.items()))
            body = f"({num})" if len(s.num) > 1 else num
            if s.den:
                body += "/(1-Q^2)" + (f"^{s.den}" if s.den > 1 else "")
            if mono and body.startswith("1/"):
                terms.append(mono + body[1:])
            elif mono and body == "1":
                terms.append(mono)
            else:
                terms.append(f"{mono}*{body}" if mono else body)
        return " + ".join(terms)


def _mono(a: int, t: int) -> str:
    parts = []
    if a:
        parts.append("A" if a == 1 else f"A^{a}")
    if t:
        parts.append("T" if t == 1 else f"T^{t}")
    return "*".join(parts)


def _qterm(c: int, q: int) -> str:
    if q == 0:
        return str(c)
    coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
    return f"{coef}Q^{q}"


def superpolynomial(b: BraidWord, table: TriGradedTable) -> Superpolynomial:
    """Normalize a table of ``b`` into superpolynomial terms."""
    pa, pt, pq = prefactor_exponents(b)
    parts = {(a + pa, t + pt): s.shift(pq) for (a, t), s in table.series.items()}
    t_range = tuple(sorted(t + pt for t in table.t_degrees))
    return Superpolynomial(parts, t_range, dict(table.hypotheses))


def table_for(b: BraidWord, qmax: int | None = None, fld=None) -> TriGradedTable:
    """The widest table available for ``b``: full at two strands, extreme degrees otherwise."""
    kw = {} if fld is None else {"fld": fld}
    if b.n == 2 and (b.is_positive() or b.is_negative()) and len(b):
        return two_strand_hhh(len(b), 1 if b.is_positive() else -1, qmax, **kw)
    if b.is_positive():
        return extreme_hhh(b, qmax, **kw)
    if b.is_negative():
        return negative_extreme_hhh(b, qmax, **kw)
    raise ValueError("mixed-sign braid: no extreme-degree computation is available")


@dataclass
class FormReport:
    """Result of the positive-braid shape check; None marks a suppressed check."""

    top_shape: bool | None
    prime_factor: bool | None
    top_t: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.top_shape is not False and self.prime_factor is not False


def positive_form_check(p: Superpolynomial, prime: bool) -> FormReport:
    """Check T^M A^M Q^-4M + O(T^(M-2)) and, for prime links, the T(2,3) factor."""
    h = p.hypotheses
    if not h.get("positive") or not h.get("all_generators"):
        return FormReport(None, None, notes=["hypotheses not met; check suppressed"])
    M = p.top_t()
    if M is None:
        return FormReport(False, None, notes=["no terms"])
    lead = {M: HilbertSeries({-4 * M: 1}, 0)}
    shape = p.t_part(M) == lead and not p.t_part(M - 1)
    notes = [] if shape else [f"top T-part is {p.t_part(M)}, T^{M - 1} part is {p.t_part(M - 1)}"]
    if not prime:
        return FormReport(shape, None, M, notes)
    if M - 2 not in p.t_range or not h.get("stst_per_pair"):
        return FormReport(shape, None, M, notes + ["T^(M-2) part not available; prime factor suppressed"])
    want = {M: HilbertSeries({-4 * M + 4: 1}, 0), M + 1: HilbertSeries({-4 * M: 1}, 0)}
    factor = p.t_part(M - 2) == want
    if not factor:
        notes.append(f"T^{M - 2} part is {p.t_part(M - 2)}")
    return FormReport(shape, factor, M, notes)


def homfly_specialize(p: Superpolynomial) -> dict[int, HilbertSeries]:
    """Substitute T = -1, A = -a^2 q^2, Q = q.

    Returns a map from the exponent of a to a rational function in q.  The
    overall unit is fixed by the unknot normalization (the unknot gives 1).
    """
    out: dict[int, HilbertSeries] = {}
    for (a, t), s in p.parts.items():
        sign = -1 if (a + t) % 2 else 1
        term = HilbertSeries({q + 2 * a: sign * c for q, c in s.num.items()}, s.den)
        out[2 * a] = out.get(2 * a, HilbertSeries()) + term
    return {k: v.simplified() for k, v in out.items() if not v.is_zero()}


def invert_q(s: HilbertSeries) -> HilbertSeries:
    """The rational function s(1/Q), again written over (1 - Q^2)^d."""
    d = s.den
    sign = -1 if d % 2 else 1
    return HilbertSeries({2 * d - q: sign * c for q, c in s.num.items()}, d)


def invert(p: Superpolynomial) -> Superpolynomial:
    """Substitute A, T, Q -> A^-1, T^-1, Q^-1."""
    parts = {(-a, -t): invert_q(s) for (a, t), s in p.parts.items()}
    return Superpolynomial(parts, tuple(sorted(-t for t in p.t_range)), dict(p.hypotheses))


@dataclass
class MirrorReport:
    ok: bool
    overlap: tuple[int, ...]
    mismatches: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def mirror_check(b: BraidWord, qmax: int | None = None) -> MirrorReport:
    """Compare P_K with the inverted P of the mirror on their common T-exponents."""
    if closure_components(b) != 1:
        raise ValueError("mirror_check needs a braid whose closure is a knot")
    p = superpolynomial(b, table_for(b, qmax))
    m = mirror(b)
    pm = invert(superpolynomial(m, table_for(m, qmax)))
    overlap = tuple(sorted(set(p.t_range) & set(pm.t_range)))
    bad = []
    for t in overlap:
        x, y = p.t_part(t), pm.t_part(t)
        if x != y:
            bad.append(f"T^{t}: {x} vs {y}")
    return MirrorReport(bool(overlap) and not bad, overlap, bad)
