"""Reference HH matrices for three-letter subwords, used as regression fixtures.

Each matrix lists its columns and rows as (subword, class label) pairs in the
two colors ``s`` and ``t``, which are then replaced by generator indices.
The adjacent set uses s=1, t=2 in B_3.  The distant set uses s=1, t=3 in
B_4, where only the listed sub-block is compared.  The last three matrices are
J = {1, 2} blocks in B_4 with k = 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diff_rules import classify_component, hh_component_matrix
from .grading_ring import Poly


@dataclass(frozen=True)
class ReferenceMatrix:
    name: str
    n: int
    k: int
    cols: tuple[tuple[str, str], ...]
    rows: tuple[tuple[str, str], ...]
    entries: tuple[tuple[str, ...], ...]

    def word(self, text: str) -> tuple[int, ...]:
        return tuple(int(ch) for ch in text)

    def poly(self, r: int, c: int) -> Poly:
        return parse_entry(self.entries[r][c], self.n - 1)


def parse_entry(text: str, nvars: int) -> Poly:
    """Parse ``0``, ``1``, ``-1``, ``a3`` or ``-a3``."""
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if text.startswith("a"):
        return Poly.var(nvars, int(text[1:]), sign)
    return Poly.const(nvars, sign * int(text))


def _pairs(layout: list[tuple[str, str]], s: int, t: int) -> tuple[tuple[str, str], ...]:
    out = []
    for w, lab in layout:
        word = "".join(str({"s": s, "t": t}[ch]) for ch in w)
        out.append((word, lab.format(s=s, t=t)))
    return tuple(out)


def _grid(rows: list[str], s: int, t: int) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(x.format(s=s, t=t) for x in row.split()) for row in rows)


# Columns and rows of the three penultimate maps, per Hochschild degree.

_COLS3 = {
    0: [
        ("sss", "D{s}"), ("sst", "D{s}.D{t}"), ("sts", "D{s}.D{t}.D{s}"), ("sts", "Cup({s},{t})"),
        ("tss", "D{t}.D{s}"), ("stt", "D{s}.D{t}"), ("tst", "D{t}.D{s}.D{t}"), ("tst", "Cup({t},{s})"),
        ("tts", "D{t}.D{s}"), ("ttt", "D{t}"),
    ],
    1: [
        ("sss", "H{s}"), ("sss", "D{s}|{t}"), ("sst", "H{s}.D{t}"), ("sst", "D{s}.H{t}"),
        ("sts", "H{s}.D{t}.D{s}"), ("sts", "CupOut({s},{t})"), ("sts", "CupIn({s},{t})"),
        ("sts", "D{s}.H{t}.D{s}"), ("tss", "H{t}.D{s}"), ("tss", "D{t}.H{s}"),
        ("stt", "H{s}.D{t}"), ("stt", "D{s}.H{t}"), ("tst", "H{t}.D{s}.D{t}"),
        ("tst", "CupOut({t},{s})"), ("tst", "CupIn({t},{s})"), ("tst", "D{t}.H{s}.D{t}"),
        ("tts", "H{t}.D{s}"), ("tts", "D{t}.H{s}"), ("ttt", "H{t}"), ("ttt", "D{t}|{s}"),
    ],
    2: [
        ("sss", "H{s}|{t}"), ("sst", "H{s}.H{t}"), ("sts", "CupDbl({s},{t})"),
        ("sts", "H{s}.H{t}.D{s}"), ("tss", "H{t}.H{s}"), ("stt", "H{s}.H{t}"),
        ("tst", "CupDbl({t},{s})"), ("tst", "H{t}.H{s}.D{t}"), ("tts", "H{t}.H{s}"),
        ("ttt", "H{t}|{s}"),
    ],
}

_COLS2 = {
    0: [("ss", "D{s}"), ("st", "D{s}.D{t}"), ("ts", "D{t}.D{s}"), ("tt", "D{t}")],
    1: [
        ("ss", "H{s}"), ("ss", "D{s}|{t}"), ("st", "H{s}.D{t}"), ("st", "D{s}.H{t}"),
        ("ts", "H{t}.D{s}"), ("ts", "D{t}.H{s}"), ("tt", "H{t}"), ("tt", "D{t}|{s}"),
    ],
    2: [("ss", "H{s}|{t}"), ("st", "H{s}.H{t}"), ("ts", "H{t}.H{s}"), ("tt", "H{t}|{s}")],
}

_ROWS1 = {
    0: [("s", "D{s}"), ("t", "D{t}")],
    1: [("s", "H{s}"), ("s", "D{s}|{t}"), ("t", "H{t}"), ("t", "D{t}|{s}")],
    2: [("s", "H{s}|{t}"), ("t", "H{t}|{s}")],
}

_ADJ3 = {
    0: [
        "a{s} a{t} -a{t} 1 a{t} 0 0 0 0 0",
        "0 0 a{s} 1 0 0 a{t} 1 0 0",
        "0 0 a{s} 1 0 0 a{t} 1 0 0",
        "0 0 0 0 0 a{s} -a{s} 1 a{s} a{t}",
    ],
    1: [
        "a{s} 0 a{t} 0 -a{t} 1 1 0 0 a{t} 0 0 0 0 0 0 0 0 0 0",
        "0 a{s} 0 1 0 0 0 -1 1 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 a{s} 1 0 0 0 0 0 0 0 0 1 a{t} 0 0 0 0",
        "0 0 0 0 0 0 1 a{s} 0 0 0 0 a{t} 1 0 0 0 0 0 0",
        "0 0 0 0 0 0 1 a{s} 0 0 0 0 a{t} 1 0 0 0 0 0 0",
        "0 0 0 0 a{s} 1 0 0 0 0 0 0 0 0 1 a{t} 0 0 0 0",
        "0 0 0 0 0 0 0 0 0 0 0 a{s} -a{s} 1 1 0 a{s} 0 a{t} 0",
        "0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 -1 0 1 0 a{t}",
    ],
    2: [
        "a{s} 1 0 -1 1 0 0 0 0 0",
        "0 0 1 a{s} 0 0 1 a{t} 0 0",
        "0 0 1 a{s} 0 0 1 a{t} 0 0",
        "0 0 0 0 0 1 0 -1 1 a{t}",
    ],
}

_DIST3 = {
    0: [
        "a{s} a{t} -a{t} 0 a{t} 0 0 0 0 0",
        "0 0 a{s} 1 0 0 a{t} 1 0 0",
        "0 0 a{s} 1 0 0 a{t} 1 0 0",
        "0 0 0 0 0 a{s} -a{s} 0 a{s} a{t}",
    ],
    1: [
        "a{s} 0 a{t} 0 -a{t} 0 0 0 0 a{t} 0 0 0 0 0 0 0 0 0 0",
        "0 a{s} 0 1 0 0 0 -1 1 0 0 0 0 0 0 0 0 0 0 0",
        "0 0 0 0 a{s} 1 0 0 0 0 0 0 0 0 1 a{t} 0 0 0 0",
        "0 0 0 0 0 0 1 a{s} 0 0 0 0 a{t} 1 0 0 0 0 0 0",
        "0 0 0 0 0 0 1 a{s} 0 0 0 0 a{t} 1 0 0 0 0 0 0",
        "0 0 0 0 a{s} 1 0 0 0 0 0 0 0 0 1 a{t} 0 0 0 0",
        "0 0 0 0 0 0 0 0 0 0 0 a{s} -a{s} 0 0 0 a{s} 0 a{t} 0",
        "0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 -1 0 1 0 a{t}",
    ],
    2: _ADJ3[2],
}

_ADJ2 = {
    0: ["0 -a{t} a{t} 0", "0 a{s} -a{s} 0"],
    1: [
        "0 0 -a{t} 0 0 a{t} 0 0",
        "0 0 0 -1 1 0 0 0",
        "0 0 0 a{s} -a{s} 0 0 0",
        "0 0 1 0 0 -1 0 0",
    ],
    2: ["0 -1 1 0", "0 1 -1 0"],
}


def _three_strand_set(prefix: str, n: int, s: int, t: int, third: dict, second: bool):
    out = []
    for k in (0, 1, 2):
        out.append(
            ReferenceMatrix(
                f"{prefix}-A{k}-d3", n, k,
                _pairs(_COLS3[k], s, t), _pairs(_COLS2[k], s, t), _grid(third[k], s, t),
            )
        )
        if second:
            out.append(
                ReferenceMatrix(
                    f"{prefix}-A{k}-d2", n, k,
                    _pairs(_COLS2[k], s, t), _pairs(_ROWS1[k], s, t), _grid(_ADJ2[k], s, t),
                )
            )
    return out


ADJACENT = _three_strand_set("adjacent", 3, 1, 2, _ADJ3, True)
DISTANT = _three_strand_set("distant", 4, 1, 3, _DIST3, False)

KOSZUL_BLOCKS = [
    ReferenceMatrix(
        "koszul-J12-d2", 4, 2,
        (("12", "H1.H2"), ("13", "H1.D3|2"), ("23", "H2.D3|1")),
        (("1", "H1|2"), ("2", "H2|1"), ("3", "D3|1,2")),
        (("-1", "-a3", "0"), ("1", "0", "-a3"), ("0", "1", "1")),
    ),
    ReferenceMatrix(
        "koszul-J12-d1", 4, 2,
        (("1", "H1|2"), ("2", "H2|1"), ("3", "D3|1,2")),
        (("", "1|1,2"),),
        (("1", "1", "a3"),),
    ),
    ReferenceMatrix(
        "kernel-J12-d2", 4, 2,
        (
            ("21", "H2.H1"), ("12", "H1.H2"), ("31", "D3.H1|2"),
            ("13", "H1.D3|2"), ("32", "D3.H2|1"), ("23", "H2.D3|1"),
        ),
        (("1", "H1|2"), ("2", "H2|1"), ("3", "D3|1,2")),
        (
            ("1", "-1", "a3", "-a3", "0", "0"),
            ("-1", "1", "0", "0", "a3", "-a3"),
            ("0", "0", "-1", "1", "-1", "1"),
        ),
    ),
]

ALL = ADJACENT + DISTANT + KOSZUL_BLOCKS


def computed_entry(ref: ReferenceMatrix, r: int, c: int) -> Poly:
    """The rule engine's value for one entry of a reference matrix."""
    nv = ref.n - 1
    (xw, xlab), (zw, zlab) = ref.cols[c], ref.rows[r]
    x, z = ref.word(xw), ref.word(zw)
    if classify_component(x, z) is None:
        return Poly(nv)
    m = hh_component_matrix(x, z, ref.k, ref.n)
    ci = [cls.label for cls in m.cols].index(xlab)
    ri = [cls.label for cls in m.rows].index(zlab)
    return m.entry(ri, ci, nv)


def mismatches(ref: ReferenceMatrix) -> list[tuple[int, int, Poly, Poly]]:
    """Entries (1-based row, column, expected, computed) that disagree."""
    bad = []
    for r in range(len(ref.rows)):
        for c in range(len(ref.cols)):
            want, got = ref.poly(r, c), computed_entry(ref, r, c)
            if want != got:
                bad.append((r + 1, c + 1, want, got))
    return bad
