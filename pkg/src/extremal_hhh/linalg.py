"""Dense exact linear algebra over a field, for graded slices.

Matrices are lists of rows of field scalars.  Elimination always takes the
leftmost available pivot, so intermediate results are reproducible.
"""

from __future__ import annotations


def row_echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns (input is not modified)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: list[list], ncols: int, zero, one) -> list[list]:
    """Basis of {v : M v = 0} for an r x ncols matrix M."""
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, piv = row_echelon(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(red, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def transpose(rows: list[list], ncols: int) -> list[list]:
    return [[r[c] for r in rows] for c in range(ncols)]


def in_span(vectors: list[list], v: list) -> bool:
    """Whether ``v`` is a linear combination of ``vectors``."""
    if not any(v):
        return True
    return rank(vectors + [v]) == rank(vectors)


def sparse_rank(columns: list[dict[int, object]]) -> int:
    """Rank of a matrix given as sparse columns {row: value}.

    Gaussian elimination on a row-indexed pivot table; each new column is
    reduced against the pivots found so far, lowest pivot row first.
    """
    pivots: dict[int, dict[int, object]] = {}
    for col in columns:
        v = {r: x for r, x in col.items() if x}
        while v:
            r = min(v)
            piv = pivots.get(r)
            if piv is None:
                inv = 1 / v[r]
                pivots[r] = {k: x * inv for k, x in v.items()}
                break
            f = v[r]
            for k, x in piv.items():
                y = v.get(k)
                y = -f * x if y is None else y - f * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(pivots)
