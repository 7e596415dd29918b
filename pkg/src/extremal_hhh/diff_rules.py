"""Hochschild cohomology of the components of the reduced Rouquier differential.

A component deletes one letter from a subword x.  Writing x = w1 s^(k+1) w2
with the deleted letter inside the displayed run, its sign is (-1)^|w1| and
its kind depends on k: an end dot when k = 0 (composed with a trivalent
vertex when the neighbours of the deleted letter agree), and a run map
otherwise.  On HH the run maps act by 0 (k odd) or by a_s (k even); end dots
act through the barbell relations, and the cup classes of sts-words use
fixed image tables.

Exterior factors are tracked as plain index sets: the only exterior operation
needed here adds a new dual root, and the reference matrices carry no sign
for its position.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import SubwordTerm, contract_word
from .grading_ring import Poly
from .hh_basis import DOT, HOCH, HHClass, hh_basis, term_q_offset

ENDDOT = "enddot"
TRIVALENT = "trivalent"
RUN_ODD = "run_odd"
RUN_EVEN = "run_even"

LinComb = list[tuple[Poly, HHClass]]


class RuleError(ValueError):
    """A class or component the rule engine cannot evaluate."""


@dataclass(frozen=True)
class DiffComponent:
    """The summand of the differential from C_x to C_z.

    ``run_start`` is the 0-based index in x where the run containing the
    deleted letter begins (so the sign is (-1)^run_start) and ``strand`` is
    the index of that run in the contracted word x*.
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    kind: str
    run_start: int
    strand: int
    letter: int

    @property
    def sign(self) -> int:
        return -1 if self.run_start % 2 else 1

    @property
    def position(self) -> int:
        """1-based position of the run inside the source word."""
        return self.run_start + 1


def _letters(x) -> tuple[int, ...]:
    return x.letters if isinstance(x, SubwordTerm) else tuple(x)


def classify_component(x, z) -> DiffComponent | None:
    """Identify the differential component C_x -> C_z, or ``None`` if there is none."""
    x, z = _letters(x), _letters(z)
    if len(z) != len(x) - 1:
        return None
    p = next((i for i in range(len(z)) if x[i] != z[i]), len(z))
    if x[:p] + x[p + 1:] != z:
        return None
    s = x[p]
    a = p
    while a > 0 and x[a - 1] == s:
        a -= 1
    b = p
    while b + 1 < len(x) and x[b + 1] == s:
        b += 1
    k = b - a
    strand = len(contract_word(x[:a])[0])
    if k == 0:
        flanked = 0 < a < len(x) - 1 and x[a - 1] == x[a + 1]
        kind = TRIVALENT if flanked else ENDDOT
    else:
        kind = RUN_ODD if k % 2 else RUN_EVEN
    return DiffComponent(x, z, kind, a, strand, s)


# ---------------------------------------------------------------- local rules


def _root(nvars: int, i: int) -> Poly:
    return Poly.var(nvars, i)


def _one(nvars: int) -> Poly:
    return Poly.const(nvars, 1)


def _add_dual_root(nvars: int, coeff: Poly, cls: HHClass, u: int) -> LinComb:
    """Multiply by a_u^v, resolving against a dotted u-strand if there is one."""
    if u in cls.ext:
        return []
    if u in cls.word:
        at = cls.word.index(u)
        if cls.strands[at] == HOCH:
            return []
        strands = cls.strands[:at] + (HOCH,) + cls.strands[at + 1:]
        return [(coeff * _root(nvars, u), HHClass(cls.word, strands, cls.ext))]
    return [(coeff, cls.with_ext(cls.ext + (u,)))]


def apply_enddot(c: HHClass, position: int, n: int) -> LinComb:
    """End the strand at ``position`` (0-based) of a dot-decorated class."""
    if c.cup is not None:
        raise RuleError("cup classes are evaluated with apply_cup_table")
    if not 0 <= position < len(c.word):
        raise RuleError(f"no strand {position} in {c.label}")
    nv = n - 1
    u = c.word[position]
    rest = HHClass(
        c.word[:position] + c.word[position + 1:],
        c.strands[:position] + c.strands[position + 1:],
        c.ext,
    )
    if any(a == b for a, b in zip(rest.word, rest.word[1:])):
        raise RuleError("ending this strand needs the trivalent rule")
    if c.strands[position] == DOT:
        return [(_root(nv, u), rest)]
    return _add_dual_root(nv, _one(nv), rest, u)


def apply_trivalent(c: HHClass, position: int, n: int) -> LinComb:
    """End the middle strand of s t s and merge the two s-strands."""
    if c.cup is not None:
        raise RuleError("cup classes are evaluated with apply_cup_table")
    if not (0 < position < len(c.word) - 1 and c.word[position - 1] == c.word[position + 1]):
        raise RuleError(f"strand {position} of {c.label} is not flanked by equal colors")
    nv = n - 1
    t = c.word[position]
    left, right = c.strands[position - 1], c.strands[position + 1]
    if left == HOCH and right == HOCH:
        return []
    merged = HOCH if HOCH in (left, right) else DOT
    rest = HHClass(
        c.word[: position - 1] + (c.word[position - 1],) + c.word[position + 2:],
        c.strands[: position - 1] + (merged,) + c.strands[position + 2:],
        c.ext,
    )
    if c.strands[position] == DOT:
        return [(_root(nv, t), rest)]
    return _add_dual_root(nv, _one(nv), rest, t)


def apply_run_map(c: HHClass, position: int, parity: int, n: int) -> LinComb:
    """Run maps s^(k+1) -> s^k: zero for odd k, multiplication by a_s for even k."""
    if parity % 2:
        return []
    return [(_root(n - 1, c.word[position]), c)]


_CUP_IMAGES = {
    # flavor: (image on deleting the first letter, on deleting the last letter)
    # as strand decorations of the target (inner outer) and (outer inner).
    "plain": ((DOT, DOT), (DOT, DOT)),
    "out": ((DOT, HOCH), (HOCH, DOT)),
    "in": ((HOCH, DOT), (DOT, HOCH)),
    "double": ((HOCH, HOCH), (HOCH, HOCH)),
}
_CUP_TAIL = {"plain": DOT, "out": HOCH, "in": HOCH, "double": None}


def apply_cup_table(c: HHClass, component: DiffComponent, n: int) -> LinComb:
    """Images of the cup classes of an sts-word, before the component sign.

    Deleting an outer letter gives a single product of two decorated strands.
    Deleting the middle letter gives a single strand (the tail) only when the
    two colors are adjacent; for distant colors it vanishes.
    """
    if c.cup not in _CUP_IMAGES:
        raise RuleError(f"unknown cup flavor {c.cup!r}")
    nv = n - 1
    outer, inner = c.word[0], c.word[1]
    first, last = _CUP_IMAGES[c.cup]
    if component.strand == 0:
        return [(_one(nv), HHClass((inner, outer), first, c.ext))]
    if component.strand == 2:
        return [(_one(nv), HHClass((outer, inner), last, c.ext))]
    if component.strand != 1:
        raise RuleError("cup components delete one of three letters")
    tail = _CUP_TAIL[c.cup]
    if tail is None or abs(outer - inner) != 1:
        return []
    return [(-_one(nv), HHClass((outer,), (tail,), c.ext))]


def apply_component(c: HHClass, component: DiffComponent, n: int) -> LinComb:
    """Local value of a component on one class (sign not included)."""
    if component.kind in (RUN_ODD, RUN_EVEN):
        return apply_run_map(c, component.strand, 1 if component.kind == RUN_ODD else 0, n)
    if c.cup is not None:
        return apply_cup_table(c, component, n)
    if component.kind == TRIVALENT:
        return apply_trivalent(c, component.strand, n)
    return apply_enddot(c, component.strand, n)


# ---------------------------------------------------------------- matrices


@dataclass
class HHMatrix:
    """Matrix of HH^k of one component between two labeled bases.

    ``entries`` maps (row, column) to a nonzero polynomial.  Offsets are the
    Q-shifts of the source and target terms inside the complex.
    """

    rows: list[HHClass]
    cols: list[HHClass]
    entries: dict[tuple[int, int], Poly] = field(default_factory=dict)
    row_offset: int = 0
    col_offset: int = 0

    def entry(self, r: int, c: int, nvars: int) -> Poly:
        return self.entries.get((r, c), Poly(nvars))

    def is_homogeneous(self) -> bool:
        """Every entry has the degree making the map Q-degree preserving."""
        for (r, c), p in self.entries.items():
            expected = (self.cols[c].q_degree + self.col_offset) - (
                self.rows[r].q_degree + self.row_offset
            )
            if not p.is_homogeneous() or p.degree() != expected:
                return False
        return True

    def dense(self, nvars: int) -> list[list[Poly]]:
        return [
            [self.entry(r, c, nvars) for c in range(len(self.cols))]
            for r in range(len(self.rows))
        ]


def _as_term(x, braid_length: int) -> SubwordTerm:
    if isinstance(x, SubwordTerm):
        return x
    return SubwordTerm.of(tuple(x), braid_length)


def hh_component_matrix(x, z, k: int, n: int, braid_length: int | None = None) -> HHMatrix:
    """HH^k of the signed component C_x -> C_z in canonical bases.

    Plain words are placed in a braid of length ``braid_length`` (default |x|).
    """
    if braid_length is None:
        braid_length = len(x) + x.cohom_degree if isinstance(x, SubwordTerm) else len(x)
    xt, zt = _as_term(x, braid_length), _as_term(z, braid_length)
    comp = classify_component(xt, zt)
    if comp is None:
        raise RuleError(f"{zt} is not obtained from {xt} by deleting one letter")
    cols = hh_basis(xt.contracted, k, n)
    rows = hh_basis(zt.contracted, k, n)
    index = {cls: i for i, cls in enumerate(rows)}
    m = HHMatrix(rows, cols, {}, term_q_offset(zt), term_q_offset(xt))
    nv = n - 1
    for j, cls in enumerate(cols):
        for coeff, out in apply_component(cls, comp, n):
            if out not in index:
                raise RuleError(f"image class {out.label} missing from HH^{k} of {zt}")
            key = (index[out], j)
            val = m.entries.get(key, Poly(nv)) + coeff * comp.sign
            if val:
                m.entries[key] = val
            else:
                m.entries.pop(key, None)
    return m
