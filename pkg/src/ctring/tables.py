"""Nonnegative integer matrices: margins, contingency tables, zigzags, I/O.

A matrix is a tuple of row tuples over nonnegative ints, indexed internally
from 0.  Cell coordinates exposed to callers (zigzag witnesses, ball
positions) are 1-based, matching the usual display convention.
"""

import json

from .partitions import kostka, partitions


def dimensions(matrix) -> tuple:
    k = len(matrix)
    p = len(matrix[0]) if k else 0
    return k, p


def as_matrix(rows) -> tuple:
    mat = tuple(tuple(int(v) for v in row) for row in rows)
    if not mat or not mat[0]:
        raise ValueError("matrix must have positive dimensions")
    if any(len(row) != len(mat[0]) for row in mat):
        raise ValueError("ragged rows")
    if any(v < 0 for row in mat for v in row):
        raise ValueError("entries must be nonnegative")
    return mat


def row_sums(matrix) -> tuple:
    return tuple(sum(row) for row in matrix)


def col_sums(matrix) -> tuple:
    return tuple(sum(col) for col in zip(*matrix))


def total(matrix) -> int:
    return sum(sum(row) for row in matrix)


def zero_matrix(k: int, p: int) -> tuple:
    return tuple((0,) * p for _ in range(k))


def ones_matrix(k: int, p: int) -> tuple:
    return tuple((1,) * p for _ in range(k))


def matrix_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matrix_sub(a, b) -> tuple:
    out = tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
    if any(v < 0 for row in out for v in row):
        raise ValueError("difference has negative entries")
    return out


def transpose(matrix) -> tuple:
    return tuple(zip(*matrix))


def zigzag_number(matrix) -> int:
    """Maximum entry weight over zigzags (cell sets weakly increasing in both
    coordinates).  Max-weight monotone lattice path DP."""
    k, p = dimensions(matrix)
    best = [0] * (p + 1)
    for i in range(k):
        row = matrix[i]
        nxt = [0] * (p + 1)
        for j in range(p):
            nxt[j + 1] = row[j] + max(nxt[j], best[j + 1])
        best = nxt
    return best[p]


def is_zigzag_cells(cells) -> bool:
    """Whether a sequence of 1-based (row, col) pairs is a valid zigzag set."""
    cells = tuple(cells)
    if len(set(cells)) != len(cells):
        return False
    return all(
        a[0] <= b[0] and a[1] <= b[1] for a, b in zip(cells, cells[1:])
    )


def zigzag_weight(matrix, cells) -> int:
    return sum(matrix[i - 1][j - 1] for i, j in cells)


def support(matrix) -> tuple:
    """1-based positions of nonzero entries, row-major."""
    return tuple(
        (i + 1, j + 1)
        for i, row in enumerate(matrix)
        for j, v in enumerate(row)
        if v
    )


def is_zigzag_matrix(matrix) -> bool:
    return is_zigzag_cells(support(matrix))


def contingency_tables(alpha, beta) -> list:
    """All matrices with the given row and column sums, by row-major backtracking."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    if sum(alpha) != sum(beta):
        raise ValueError("row and column sums must agree")
    k, p = len(alpha), len(beta)
    if k == 0 or p == 0:
        raise ValueError("compositions must be nonempty")
    out = []
    rows = []

    def fill_row(i, cols_left):
        if i == k:
            out.append(tuple(rows))
            return
        rest = sum(alpha[i + 1:])
        row = [0] * p

        def fill_cell(j, need):
            if j == p:
                if need == 0:
                    rows.append(tuple(row))
                    fill_row(i + 1, tuple(c - r for c, r in zip(cols_left, row)))
                    rows.pop()
                return
            # later rows contribute at most `rest` to any column
            lo = max(0, cols_left[j] - rest)
            hi = min(need, cols_left[j])
            for v in range(hi, lo - 1, -1):
                row[j] = v
                fill_cell(j + 1, need - v)
            row[j] = 0

        fill_cell(0, alpha[i])

    fill_row(0, beta)
    return out


def count_contingency_tables(alpha, beta) -> int:
    """Table count via the RSK identity: sum of products of Kostka numbers."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    n = sum(alpha)
    if n != sum(beta):
        raise ValueError("row and column sums must agree")
    return sum(kostka(lam, alpha) * kostka(lam, beta) for lam in partitions(n))


def is_subtingency(matrix, alpha, beta) -> bool:
    """Whether row and column sums are componentwise bounded by alpha, beta."""
    k, p = dimensions(matrix)
    if (k, p) != (len(alpha), len(beta)):
        return False
    return all(r <= a for r, a in zip(row_sums(matrix), alpha)) and all(
        c <= b for c, b in zip(col_sums(matrix), beta)
    )


def matrix_from_text(text: str) -> tuple:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty matrix text")
    return as_matrix(rows)


def matrix_to_text(matrix) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in matrix)


def matrix_from_json(data) -> tuple:
    if isinstance(data, str):
        data = json.loads(data)
    mat = as_matrix(data["entries"])
    k, p = dimensions(mat)
    if (k, p) != (data["rows"], data["cols"]):
        raise ValueError("declared dimensions do not match entries")
    return mat


def matrix_to_json(matrix) -> dict:
    k, p = dimensions(matrix)
    return {"rows": k, "cols": p, "entries": [list(row) for row in matrix]}
