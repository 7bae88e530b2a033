"""Partitions, weak compositions, tableaux, and Kostka numbers.

Conventions used throughout the package:

* a partition is a tuple of weakly decreasing positive ints,
* a weak composition is a tuple of nonnegative ints,
* a tableau is a tuple of rows, each row a tuple of positive ints.

All enumeration functions return deterministic orders so that results can be
frozen in golden tests.
"""

from functools import reduce
from math import factorial
from operator import mul


def is_partition(seq) -> bool:
    parts = tuple(seq)
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(a > 0 for a in parts)


def is_weak_composition(seq) -> bool:
    return all(isinstance(a, int) and a >= 0 for a in seq)


def check_partition(seq) -> tuple:
    parts = tuple(seq)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def partitions(n: int, max_part: int | None = None) -> list:
    """All partitions of n, in reverse-lexicographic (descending) order.

    Optionally restrict to parts <= max_part.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        return [()]
    out = []
    for first in range(cap, 0, -1):
        for rest in partitions(n - first, max_part=first):
            out.append((first,) + rest)
    return out


def weak_compositions(n: int, length: int) -> list:
    """All weak compositions of n with exactly `length` parts, lexicographic."""
    if length == 0:
        return [()] if n == 0 else []
    if length == 1:
        return [(n,)]
    out = []
    for first in range(n + 1):
        for rest in weak_compositions(n - first, length - 1):
            out.append((first,) + rest)
    return out


def weak_compositions_upto(n: int, max_length: int) -> list:
    """Weak compositions of n of every length from 1 to max_length."""
    out = []
    for length in range(1, max_length + 1):
        out.extend(weak_compositions(n, length))
    return out


def conjugate(shape) -> tuple:
    shape = tuple(shape)
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > j) for j in range(shape[0]))


def standard_tableau_count(shape) -> int:
    """Number of standard Young tableaux of the given shape (hook lengths)."""
    shape = check_partition(shape)
    if not shape:
        return 1
    conj = conjugate(shape)
    hooks = (
        shape[i] - j + conj[j] - i - 1
        for i in range(len(shape))
        for j in range(shape[i])
    )
    return factorial(sum(shape)) // reduce(mul, hooks, 1)


def _horizontal_strip_predecessors(shape, size):
    """Partitions mu contained in `shape` with shape/mu a horizontal strip of `size` cells."""
    shape = tuple(shape)
    rows = len(shape)

    def rec(i, remaining, prefix):
        if i == rows:
            if remaining == 0:
                yield tuple(p for p in prefix if p > 0)
            return
        lo = shape[i + 1] if i + 1 < rows else 0
        # mu_i ranges so that shape_i - mu_i cells are removed from row i
        for mu_i in range(max(lo, shape[i] - remaining), shape[i] + 1):
            yield from rec(i + 1, remaining - (shape[i] - mu_i), prefix + (mu_i,))

    yield from rec(0, size, ())


_KOSTKA_CACHE: dict = {}


def kostka(shape, content) -> int:
    """Number of semistandard tableaux of the given shape and content.

    Computed by a horizontal-strip DP on the content entries, with a hook
    length fast path when the content is all ones.  The memo cache is shared
    process-wide (see kostka_cache_snapshot / kostka_cache_restore); cache
    writes are idempotent single dict stores, so concurrent use cannot change
    results.
    """
    shape = check_partition(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        raise ValueError("shape size and content sum differ")
    if content and all(c == 1 for c in content):
        return standard_tableau_count(shape)
    return _kostka(shape, content)


def _kostka(shape, content):
    while content and content[-1] == 0:
        content = content[:-1]
    if not content:
        return 1 if not shape else 0
    key = (shape, content)
    cached = _KOSTKA_CACHE.get(key)
    if cached is not None:
        return cached
    total = 0
    for smaller in _horizontal_strip_predecessors(shape, content[-1]):
        total += _kostka(smaller, content[:-1])
    _KOSTKA_CACHE[key] = total
    return total


def kostka_cache_snapshot() -> list:
    return [(shape, content, value) for (shape, content), value in _KOSTKA_CACHE.items()]


def kostka_cache_restore(entries) -> None:
    for shape, content, value in entries:
        _KOSTKA_CACHE[(tuple(shape), tuple(content))] = int(value)


def tableau_shape(tableau) -> tuple:
    return tuple(len(row) for row in tableau)


def tableau_content(tableau, length: int | None = None) -> tuple:
    top = max((v for row in tableau for v in row), default=0)
    size = max(top, length or 0)
    counts = [0] * size
    for row in tableau:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def is_semistandard(tableau) -> bool:
    rows = tuple(tuple(r) for r in tableau)
    if not is_partition(tableau_shape(rows)) and rows:
        return False
    for row in rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if any(v < 1 for v in row):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def semistandard_tableaux(shape, content) -> list:
    """All SSYT of given shape and content, filled cell by cell in row-major order.

    Deliberately independent of the strip DP behind kostka(), so the two can
    cross-check each other.
    """
    shape = check_partition(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        raise ValueError("shape size and content sum differ")
    n_letters = len(content)
    remaining = list(content)
    rows = [[] for _ in shape]
    out = []

    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]

    def fill(idx):
        if idx == len(cells):
            out.append(tuple(tuple(r) for r in rows))
            return
        i, j = cells[idx]
        lo = rows[i][j - 1] if j > 0 else 1
        for v in range(lo, n_letters + 1):
            if remaining[v - 1] == 0:
                continue
            if i > 0 and rows[i - 1][j] >= v:
                continue
            rows[i].append(v)
            remaining[v - 1] -= 1
            fill(idx + 1)
            remaining[v - 1] += 1
            rows[i].pop()

    fill(0)
    return out
