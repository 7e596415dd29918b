"""Braid words, Markov moves and the combinatorial predicates used by the engine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]  # (generator index, sign)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``n`` strands."""

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"strand count must be at least 2, got {self.n}")
        object.__setattr__(self, "letters", tuple((int(i), int(s)) for i, s in self.letters))
        for i, s in self.letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"generator index {i} out of range for {self.n} strands")
            if s not in (1, -1):
                raise ValueError(f"crossing sign must be +1 or -1, got {s}")

    @classmethod
    def positive(cls, n: int, indices: Iterable[int]) -> "BraidWord":
        return cls(n, tuple((i, 1) for i in indices))

    @classmethod
    def negative(cls, n: int, indices: Iterable[int]) -> "BraidWord":
        return cls(n, tuple((i, -1) for i in indices))

    def __len__(self) -> int:
        return len(self.letters)

    def length(self) -> int:
        return len(self.letters)

    def is_positive(self) -> bool:
        return all(s == 1 for _, s in self.letters)

    def is_negative(self) -> bool:
        return all(s == -1 for _, s in self.letters)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.letters)

    def tokens(self) -> str:
        return " ".join(str(i * s) for i, s in self.letters)

    def __str__(self):
        if not self.letters:
            return f"e (n={self.n})"
        parts = [f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters]
        return " ".join(parts) + f" (n={self.n})"


@dataclass(frozen=True)
class SubwordTerm:
    """A distinct subexpression x of a positive braid, with its contraction data.

    The corresponding term of the complex is the Bott-Samelson object of
    ``contracted`` shifted by ``shift`` in Q, placed in cohomological degree
    ``cohom_degree`` = |beta| - |x|.
    """

    letters: tuple[int, ...]
    contracted: tuple[int, ...]
    shift: int
    cohom_degree: int

    @classmethod
    def of(cls, letters: Sequence[int], braid_length: int) -> "SubwordTerm":
        letters = tuple(letters)
        contracted, shift = contract_word(letters)
        return cls(letters, contracted, shift, braid_length - len(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self):
        return "".join(str(i) for i in self.letters) or "e"


def parse_braid(text: str, n: int | None) -> BraidWord:
    """Parse whitespace separated signed generator indices (``"1 -2 1"``)."""
    if n is None:
        raise ValueError("the strand count n must be given")
    n = int(n)
    if n < 2:
        raise ValueError(f"strand count must be at least 2, got {n}")
    letters = []
    for pos, tok in enumerate(text.replace(",", " ").split(), start=1):
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"token {pos} ({tok!r}) is not an integer") from None
        if v == 0:
            raise ValueError(f"token {pos} is zero; generators are numbered from 1")
        if abs(v) >= n:
            raise ValueError(f"token {pos} ({v}) needs |i| < n = {n}")
        letters.append((abs(v), 1 if v > 0 else -1))
    return BraidWord(n, tuple(letters))


def writhe(b: BraidWord) -> int:
    return sum(s for _, s in b.letters)


def closure_components(b: BraidWord) -> int:
    """Number of cycles of the permutation underlying ``b``."""
    perm = list(range(b.n))
    for i, _ in b.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    seen = [False] * b.n
    cycles = 0
    for start in range(b.n):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def mirror(b: BraidWord) -> BraidWord:
    return BraidWord(b.n, tuple((i, -s) for i, s in b.letters))


def cyclic_shift(b: BraidWord, k: int) -> BraidWord:
    """Rotate the letters left by ``k`` (conjugation, so the closure is unchanged)."""
    if not b.letters:
        return b
    k %= len(b.letters)
    return BraidWord(b.n, b.letters[k:] + b.letters[:k])


def destabilize(b: BraidWord) -> BraidWord | None:
    """Remove a lone s_{n-1}^{+-1} and drop a strand, if the move applies.

    Returns ``None`` when s_{n-1} does not occur exactly once, or when the
    result would have a single strand.
    """
    if b.n <= 2:
        return None
    where = [k for k, (i, _) in enumerate(b.letters) if i == b.n - 1]
    if len(where) != 1:
        return None
    k = where[0]
    return BraidWord(b.n - 1, b.letters[:k] + b.letters[k + 1:])


def _embeds(pattern: Sequence[int], word: Sequence[int]) -> bool:
    it = iter(word)
    return all(any(x == y for y in it) for x in pattern)


def contains_subexpression(b: BraidWord | Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff ``pattern`` embeds in the letters of ``b`` preserving order."""
    word = b.indices() if isinstance(b, BraidWord) else tuple(b)
    return _embeds(tuple(pattern), word)


def uses_all_generators(b: BraidWord) -> bool:
    return set(b.indices()) == set(range(1, b.n))


def has_adjacent_squares(b: BraidWord) -> bool:
    """Every adjacent pair i, i+1 appears as s_i s_{i+1} s_i s_{i+1} or the reverse."""
    word = b.indices()
    for i in range(1, b.n - 1):
        j = i + 1
        if not (_embeds((i, j, i, j), word) or _embeds((j, i, j, i), word)):
            return False
    return True


def primeness_criterion(b: BraidWord) -> bool:
    """The subexpression condition of the primeness criterion for positive braids.

    Whether ``n`` is the positive braid index of the closure is left to the caller.
    """
    if not b.is_positive():
        raise ValueError("primeness criterion applies to positive braids")
    return has_adjacent_squares(b)


def connect_sum_window(b: BraidWord) -> int | None:
    """Smallest k in [2, n-1] with every letter of index < k before every letter of index >= k."""
    word = b.indices()
    for k in range(2, b.n):
        last_low = max((p for p, i in enumerate(word) if i < k), default=-1)
        first_high = min((p for p, i in enumerate(word) if i >= k), default=len(word))
        if last_low < first_high:
            return k
    return None


def contract_word(w: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Collapse runs of equal letters; returns the contracted word and |w*| - |w|."""
    out: list[int] = []
    for x in w:
        if not out or out[-1] != x:
            out.append(x)
    return tuple(out), len(out) - len(w)


def distinct_subwords(word: Sequence[int], max_len: int) -> set[tuple[int, ...]]:
    """All distinct subexpressions of ``word`` of length at most ``max_len``.

    Sweeps the word once, extending the reachable set; the set size is bounded
    independently of the word length.
    """
    reach: set[tuple[int, ...]] = {()}
    for x in word:
        reach |= {w + (x,) for w in reach if len(w) < max_len}
    return reach


def subwords_up_to_length(b: BraidWord, L: int) -> set[SubwordTerm]:
    if not b.is_positive():
        raise ValueError("subword enumeration needs a positive braid")
    return {SubwordTerm.of(w, len(b)) for w in distinct_subwords(b.indices(), L)}
