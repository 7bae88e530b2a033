"""Exact multivariate polynomials, diagonal term orders, and the operator kit.

A Poly stores a map from exponent tuples (one slot per variable, row-major
for grid variables) to Fraction coefficients.  Row and column indices in the
grid API are 1-based.
"""

from fractions import Fraction

from .tables import dimensions, is_zigzag_matrix, row_sums


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                if len(exps) != nvars:
                    raise ValueError("exponent length mismatch")
                clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars, index, power=1, coeff=1):
        exps = [0] * nvars
        exps[index] = power
        return cls(nvars, {tuple(exps): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            val = out.get(exps, 0) + coeff
            if val:
                out[exps] = val
            else:
                out.pop(exps, None)
        return Poly(self.nvars, out)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                val = out.get(key, 0) + c1 * c2
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self):
        parts = {}
        for exps, coeff in self.terms.items():
            parts.setdefault(sum(exps), {})[exps] = coeff
        return {d: Poly(self.nvars, t) for d, t in sorted(parts.items())}

    def power(self, exponent):
        result = Poly(self.nvars, {(0,) * self.nvars: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps) if e
            )
            bits.append(f"{c}" if not mono else f"{c}*{mono}")
        return "Poly(" + " + ".join(bits) + ")"


class Grid:
    """A k x p matrix of variables, flattened row-major."""

    def __init__(self, k, p):
        if k <= 0 or p <= 0:
            raise ValueError("grid dimensions must be positive")
        self.k = k
        self.p = p
        self.nvars = k * p

    def index(self, i, j):
        if not (1 <= i <= self.k and 1 <= j <= self.p):
            raise ValueError(f"cell ({i},{j}) outside {self.k}x{self.p} grid")
        return (i - 1) * self.p + (j - 1)

    def variable(self, i, j, power=1):
        return Poly.variable(self.nvars, self.index(i, j), power)

    def exponents(self, matrix):
        k, p = dimensions(matrix)
        if (k, p) != (self.k, self.p):
            raise ValueError("matrix dimensions do not match grid")
        return tuple(v for row in matrix for v in row)

    def matrix(self, exps):
        p = self.p
        return tuple(tuple(exps[i * p : (i + 1) * p]) for i in range(self.k))

    def monomial(self, matrix, coeff=1):
        return Poly(self.nvars, {self.exponents(matrix): coeff})

    def rdeg(self, exps):
        p = self.p
        return tuple(sum(exps[i * p : (i + 1) * p]) for i in range(self.k))

    def cdeg(self, exps):
        p = self.p
        return tuple(sum(exps[j::p]) for j in range(p))

    def ddeg(self, exps):
        """Antidiagonal degree vector: slot q-1 sums cells with i+j-1 = q."""
        out = [0] * (self.k + self.p - 1)
        p = self.p
        for i in range(self.k):
            for j in range(p):
                out[i + j] += exps[i * p + j]
        return tuple(out)

    def diagonal_order(self):
        return DiagonalOrder(self)


class TermOrder:
    """Total order on exponent tuples via a key map; larger key = larger term."""

    def key(self, exps):
        raise NotImplementedError

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max_term(self, poly):
        if not poly.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(poly.terms, key=self.key)

    def min_term(self, poly):
        if not poly.terms:
            raise ValueError("zero polynomial has no trailing term")
        return min(poly.terms, key=self.key)

    def sorted(self, monomials, reverse=False):
        return sorted(monomials, key=self.key, reverse=reverse)


class LexOrder(TermOrder):
    """Plain lexicographic order with x_1 > x_2 > ... (exponents compared as given)."""

    def __init__(self, nvars):
        self.nvars = nvars

    def key(self, exps):
        return exps


class DiagonalOrder(TermOrder):
    """Antidiagonal-degree order: compare ddeg vectors lexicographically, then
    break ties lexicographically on variables ranked by (i+j, i) ascending
    (tiebreak="row"; tiebreak="column" ranks by (i+j, j) instead).

    Comparing ddeg first, rather than ranking variables alone, is what makes
    the order respect every strict ddeg comparison regardless of total degree.
    Restricted to the variables of a single row or column it reduces to plain
    lexicographic order, whichever tiebreak is chosen.
    """

    def __init__(self, grid, tiebreak="row"):
        if tiebreak not in ("row", "column"):
            raise ValueError("tiebreak must be 'row' or 'column'")
        self.grid = grid
        self.tiebreak = tiebreak
        second = (lambda v: v // grid.p) if tiebreak == "row" else (lambda v: v % grid.p)
        cells = sorted(
            range(grid.nvars),
            key=lambda v: (v // grid.p + v % grid.p, second(v)),
        )
        self.priority = tuple(cells)

    def key(self, exps):
        return self.grid.ddeg(exps) + tuple(exps[v] for v in self.priority)


def diff_pairing(f: Poly, g: Poly) -> Poly:
    """Apply f as a constant-coefficient differential operator to g."""
    if f.nvars != g.nvars:
        raise ValueError("variable count mismatch")
    out = {}
    for fe, fc in f.terms.items():
        for ge, gc in g.terms.items():
            coeff = fc * gc
            key = []
            for a, b in zip(fe, ge):
                if b < a:
                    coeff = 0
                    break
                for t in range(a):
                    coeff *= b - t
                key.append(b - a)
            if coeff:
                key = tuple(key)
                val = out.get(key, 0) + coeff
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return Poly(f.nvars, out)


def polarize_row(f: Poly, grid: Grid, source: int, dest: int) -> Poly:
    """Row polarization: sum over columns of x_{dest,j} d/dx_{source,j}."""
    out = Poly.zero(grid.nvars)
    for j in range(1, grid.p + 1):
        src = grid.index(source, j)
        dst = grid.index(dest, j)
        terms = {}
        for exps, coeff in f.terms.items():
            if exps[src]:
                new = list(exps)
                new[src] -= 1
                new[dst] += 1
                key = tuple(new)
                val = terms.get(key, 0) + coeff * exps[src]
                if val:
                    terms[key] = val
                else:
                    terms.pop(key, None)
        out = out + Poly(grid.nvars, terms)
    return out


def polarize_col(f: Poly, grid: Grid, source: int, dest: int) -> Poly:
    """Column polarization: sum over rows of x_{i,dest} d/dx_{i,source}."""
    out = Poly.zero(grid.nvars)
    for i in range(1, grid.k + 1):
        src = grid.index(i, source)
        dst = grid.index(i, dest)
        terms = {}
        for exps, coeff in f.terms.items():
            if exps[src]:
                new = list(exps)
                new[src] -= 1
                new[dst] += 1
                key = tuple(new)
                val = terms.get(key, 0) + coeff * exps[src]
                if val:
                    terms[key] = val
                else:
                    terms.pop(key, None)
        out = out + Poly(grid.nvars, terms)
    return out


def shift_row(matrix, source: int, dest: int, amount: int) -> tuple:
    """Move `amount` units from row `source` to row `dest` within columns,
    taking the lexicographically maximal column distribution."""
    k, p = dimensions(matrix)
    if not (1 <= source <= k and 1 <= dest <= k):
        raise ValueError("row index out of range")
    cap = row_sums(matrix)[source - 1]
    if not (0 <= amount <= cap):
        raise ValueError(f"amount must lie in [0, {cap}]")
    rows = [list(row) for row in matrix]
    left = amount
    for j in range(p):
        move = min(left, rows[source - 1][j])
        rows[source - 1][j] -= move
        rows[dest - 1][j] += move
        left -= move
    return tuple(tuple(row) for row in rows)


def split_left(vector, step: int, amount: int) -> tuple:
    """Shift `amount` units of a vector `step` slots leftward, greedily from
    the left.  Requires the first `step` entries (at least) to be zero."""
    vector = tuple(vector)
    lead = 0
    while lead < len(vector) and vector[lead] == 0:
        lead += 1
    if step < 1 or step > lead:
        raise ValueError("step exceeds the run of leading zeros")
    if not (0 <= amount <= sum(vector)):
        raise ValueError("amount out of range")
    out = list(vector)
    left = amount
    for j in range(len(vector)):
        move = min(left, out[j])
        if move and j - step < 0:
            raise ValueError("shift would fall off the left edge")
        out[j] -= move
        out[j - step] += move
        left -= move
    return tuple(out)


def merge_row(matrix) -> tuple:
    """Add the first nonzero row of a zigzag matrix to the next nonzero row."""
    if not is_zigzag_matrix(matrix):
        raise ValueError("matrix support is not a zigzag")
    nonzero = [i for i, row in enumerate(matrix) if any(row)]
    if len(nonzero) < 2:
        raise ValueError("need at least two nonzero rows")
    first, second = nonzero[0], nonzero[1]
    rows = [list(row) for row in matrix]
    rows[second] = [a + b for a, b in zip(rows[first], rows[second])]
    rows[first] = [0] * len(rows[first])
    return tuple(tuple(row) for row in rows)
