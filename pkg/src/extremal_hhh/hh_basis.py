"""Free R-bases of Hochschild cohomology HH^k of short Bott-Samelson words.

Each basis is a core (dot, Hochschild dot and cup classes of the word itself)
tensored with exterior monomials in the dual roots whose indices do not occur
in the word.  Q-degrees follow the convention that a summand k(m) lives in
Q-degree -m.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .braid import SubwordTerm

DOT = "D"
HOCH = "H"

CUP_FLAVORS = ("plain", "out", "in", "double")
_CUP_NAMES = {"plain": "Cup", "out": "CupOut", "in": "CupIn", "double": "CupDbl"}
_CUP_A = {"plain": 0, "out": 1, "in": 1, "double": 2}
_CUP_Q = {"plain": 1, "out": -3, "in": -3, "double": -7}
_STRAND_Q = {DOT: 1, HOCH: -3}


@dataclass(frozen=True)
class HHClass:
    """One free generator of HH^k of a Bott-Samelson word.

    ``strands`` holds one symbol per letter (``"D"`` for a dot, ``"H"`` for
    a Hochschild dot) and is empty for cup classes, which instead carry a
    ``cup`` flavor.  ``ext`` lists the exterior dual roots, increasing.
    """

    word: tuple[int, ...]
    strands: tuple[str, ...] = ()
    ext: tuple[int, ...] = ()
    cup: str | None = None

    @property
    def a_degree(self) -> int:
        if self.cup is not None:
            core = _CUP_A[self.cup]
        else:
            core = self.strands.count(HOCH)
        return core + len(self.ext)

    @property
    def q_degree(self) -> int:
        if self.cup is not None:
            core = _CUP_Q[self.cup]
        else:
            core = sum(_STRAND_Q[x] for x in self.strands)
        return core - 2 * len(self.ext)

    @property
    def label(self) -> str:
        if self.cup is not None:
            core = f"{_CUP_NAMES[self.cup]}({self.word[0]},{self.word[1]})"
        elif self.word:
            core = ".".join(f"{x}{c}" for x, c in zip(self.strands, self.word))
        else:
            core = "1"
        if self.ext:
            return core + "|" + ",".join(str(i) for i in self.ext)
        return core

    def __str__(self):
        return self.label

    def with_ext(self, ext) -> "HHClass":
        return HHClass(self.word, self.strands, tuple(sorted(ext)), self.cup)


def word_shape(word: tuple[int, ...]) -> str:
    """Classify a contracted word as ``e``, ``s``, ``st``, ``sts`` or ``stu``."""
    if any(a == b for a, b in zip(word, word[1:])):
        raise ValueError(f"word {word} is not contracted")
    if len(word) > 3:
        raise ValueError(f"no HH basis for words of length {len(word)}")
    if len(word) < 3:
        return ("e", "s", "st")[len(word)]
    return "sts" if word[0] == word[2] else "stu"


def _hoch_patterns(length: int, j: int) -> list[tuple[str, ...]]:
    """Strand decorations with exactly ``j`` Hochschild dots, leftmost first."""
    out = []
    for pos in itertools.combinations(range(length), j):
        out.append(tuple(HOCH if p in pos else DOT for p in range(length)))
    return out


def core_basis(word: tuple[int, ...], j: int) -> list[HHClass]:
    """Classes of core Hochschild degree ``j`` carrying no exterior factor."""
    shape = word_shape(word)
    if shape == "sts":
        table = {
            0: [HHClass(word, (DOT, DOT, DOT)), HHClass(word, cup="plain")],
            1: [
                HHClass(word, (HOCH, DOT, DOT)),
                HHClass(word, cup="out"),
                HHClass(word, cup="in"),
                HHClass(word, (DOT, HOCH, DOT)),
            ],
            2: [HHClass(word, cup="double"), HHClass(word, (HOCH, HOCH, DOT))],
        }
        return list(table.get(j, []))
    if j > len(word):
        return []
    return [HHClass(word, pat) for pat in _hoch_patterns(len(word), j)]


@functools.lru_cache(maxsize=None)
def _basis(word: tuple[int, ...], k: int, n: int) -> tuple[HHClass, ...]:
    unused = [i for i in range(1, n) if i not in word]
    out = []
    for j in range(min(k, len(word)), -1, -1):
        if k - j > len(unused):
            continue
        cores = core_basis(word, j)
        for ext in itertools.combinations(unused, k - j):
            out.extend(c.with_ext(ext) for c in cores)
    return tuple(out)


def hh_basis(word, k: int, n: int) -> list[HHClass]:
    """Ordered free R-basis of HH^k of the Bott-Samelson object of ``word``.

    Order: core Hochschild degree descending, then exterior monomials
    lexicographically, then the core order of the word's table.
    """
    word = tuple(word)
    word_shape(word)
    if any(not 1 <= i <= n - 1 for i in word):
        raise ValueError(f"word {word} uses generators outside 1..{n - 1}")
    if k < 0:
        return []
    return list(_basis(word, k, n))


def term_q_offset(term: SubwordTerm, cls: HHClass | None = None) -> int:
    """Q-degree shift of a class placed in ``term`` of the complex.

    Without ``cls`` this is the offset added to intrinsic degrees; with it,
    the class's total Q-degree inside the complex.
    """
    base = -term.shift - term.cohom_degree
    return base + (cls.q_degree if cls is not None else 0)
