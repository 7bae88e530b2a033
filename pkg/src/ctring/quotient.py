"""Quotients of a grid polynomial ring cut out by margin constraints.

For weak compositions alpha (rows) and beta (columns) of n, the defining
ideal is generated by all row sums, all column sums, the monomials supported
on row i of degree alpha_i + 1, and the monomials supported on column j of
degree beta_j + 1.  Its standard monomial basis under the diagonal order is
computed by degree slices; the exponent matrices are compared against the
derived matrices of the contingency tables with margins (alpha, beta).
"""

from .linalg import HomogeneousIdeal, bounded_exponents, echelon
from .matrixball import derived_matrix
from .polys import Grid, Poly
from .tables import contingency_tables, count_contingency_tables, zigzag_number


def row_sum_poly(grid: Grid, i: int) -> Poly:
    out = Poly.zero(grid.nvars)
    for j in range(1, grid.p + 1):
        out = out + grid.variable(i, j)
    return out


def col_sum_poly(grid: Grid, j: int) -> Poly:
    out = Poly.zero(grid.nvars)
    for i in range(1, grid.k + 1):
        out = out + grid.variable(i, j)
    return out


def _line_monomials(grid, indices, degree):
    """Monomials of the given degree supported on a fixed list of variables."""
    out = []
    for exps in bounded_exponents(len(indices), degree):
        full = [0] * grid.nvars
        for idx, e in zip(indices, exps):
            full[idx] = e
        out.append(Poly.monomial(tuple(full)))
    return out


def row_monomials(grid: Grid, i: int, degree: int) -> list:
    return _line_monomials(grid, [grid.index(i, j) for j in range(1, grid.p + 1)], degree)


def col_monomials(grid: Grid, j: int, degree: int) -> list:
    return _line_monomials(grid, [grid.index(i, j) for i in range(1, grid.k + 1)], degree)


def contingency_generators(alpha, beta, grid: Grid | None = None):
    """Generators of the margin ideal: row/column sums and the minimal
    violating monomials (degree alpha_i + 1 per row, beta_j + 1 per column)."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    if sum(alpha) != sum(beta):
        raise ValueError("row and column sums must agree")
    grid = grid or Grid(len(alpha), len(beta))
    gens = [row_sum_poly(grid, i) for i in range(1, grid.k + 1)]
    gens += [col_sum_poly(grid, j) for j in range(1, grid.p + 1)]
    for i in range(1, grid.k + 1):
        gens += row_monomials(grid, i, alpha[i - 1] + 1)
    for j in range(1, grid.p + 1):
        gens += col_monomials(grid, j, beta[j - 1] + 1)
    return grid, gens


def rowsum_ideal_generators(beta, k: int, grid: Grid | None = None):
    """Row sums plus column monomials of degree beta_j + 1."""
    beta = tuple(beta)
    grid = grid or Grid(k, len(beta))
    gens = [row_sum_poly(grid, i) for i in range(1, grid.k + 1)]
    for j in range(1, grid.p + 1):
        gens += col_monomials(grid, j, beta[j - 1] + 1)
    return grid, gens


def colsum_ideal_generators(alpha, p: int, grid: Grid | None = None):
    """Column sums plus row monomials of degree alpha_i + 1."""
    alpha = tuple(alpha)
    grid = grid or Grid(len(alpha), p)
    gens = [col_sum_poly(grid, j) for j in range(1, grid.p + 1)]
    for i in range(1, grid.k + 1):
        gens += row_monomials(grid, i, alpha[i - 1] + 1)
    return grid, gens


class QuotientModel:
    """Standard monomial data of one margin quotient.

    Slices are computed until the accumulated standard monomial count reaches
    the contingency table count (the quotient dimension), with a hard degree
    cap of n.  Failing to converge would mean the quotient dimension differs
    from the table count, which never happens; it raises rather than guessing.
    """

    def __init__(self, alpha, beta):
        self.alpha = tuple(alpha)
        self.beta = tuple(beta)
        if sum(self.alpha) != sum(self.beta):
            raise ValueError("row and column sums must agree")
        self.n = sum(self.alpha)
        self.grid, gens = contingency_generators(self.alpha, self.beta)
        self.order = self.grid.diagonal_order()
        self.ideal = HomogeneousIdeal(gens, self.grid.nvars, self.order)
        self.size = count_contingency_tables(self.alpha, self.beta)
        hilbert = []
        standard = []
        seen = 0
        degree = 0
        while seen < self.size:
            if degree > self.n:
                raise RuntimeError(
                    "standard monomials did not converge by degree n; "
                    "the quotient dimension cannot exceed the table count"
                )
            std = self.ideal.standard_monomials(degree)
            hilbert.append(len(std))
            standard.extend(std)
            seen += len(std)
            degree += 1
        if seen != self.size:
            raise RuntimeError("standard monomial count overshot the table count")
        while hilbert and hilbert[-1] == 0:
            hilbert.pop()
        self.hilbert = tuple(hilbert)
        self.standard = tuple(standard)

    @property
    def top_degree(self) -> int:
        return len(self.hilbert) - 1

    @property
    def min_zigzag(self) -> int:
        return self.n - self.top_degree

    def standard_exponent_matrices(self) -> frozenset:
        return frozenset(self.grid.matrix(m) for m in self.standard)

    def normal_form(self, poly: Poly) -> Poly:
        return self.ideal.normal_form(poly)


def hilbert_series_linear(alpha, beta) -> list:
    return list(QuotientModel(alpha, beta).hilbert)


def hilbert_series_zigzag(alpha, beta) -> list:
    """Hilbert series read off the zigzag statistic over contingency tables."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    n = sum(alpha)
    counts: dict = {}
    for table in contingency_tables(alpha, beta):
        d = n - zigzag_number(table)
        counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=0)
    return [counts.get(d, 0) for d in range(top + 1)]


def standard_monomial_matrices(alpha, beta) -> frozenset:
    return QuotientModel(alpha, beta).standard_exponent_matrices()


def derived_matrix_set(alpha, beta) -> frozenset:
    return frozenset(derived_matrix(t) for t in contingency_tables(alpha, beta))


def lefschetz_element(alpha, beta, grid: Grid | None = None) -> Poly:
    """Sum of the variables whose block meets the main diagonal.

    Partition the n x n square into row blocks of sizes alpha and column
    blocks of sizes beta; variable (i, j) contributes when the (i, j) block
    contains a diagonal cell.
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    grid = grid or Grid(len(alpha), len(beta))
    out = Poly.zero(grid.nvars)
    rstart = 0
    for i, a in enumerate(alpha, start=1):
        cstart = 0
        for j, b in enumerate(beta, start=1):
            lo = max(rstart + 1, cstart + 1)
            hi = min(rstart + a, cstart + b)
            if lo <= hi:
                out = out + grid.variable(i, j)
            cstart += b
        rstart += a
    return out


def lefschetz_report(model: QuotientModel) -> list:
    """Rank data of multiplication by powers of the diagonal-block linear form.

    With m the minimum zigzag number and top = n - m, the map multiplies
    degree k into degree top - k by the (top - 2k)-th power; k runs while the
    exponent stays nonnegative.  Rank deficiencies are reported, not raised.
    """
    lef = lefschetz_element(model.alpha, model.beta, model.grid)
    top = model.top_degree
    powers = {0: Poly(model.grid.nvars, {(0,) * model.grid.nvars: 1})}
    for e in range(1, top + 1):
        powers[e] = powers[e - 1] * lef
    out = []
    for k in range(0, top // 2 + 1):
        e = top - 2 * k
        source = model.ideal.standard_monomials(k)
        target_degree = top - k
        rows = []
        for mono in source:
            image = model.normal_form(powers[e] * Poly.monomial(mono))
            if image:
                rows.append(image.terms)
        rank = len(echelon(rows, model.order.key))
        out.append(
            {
                "k": k,
                "power": e,
                "dim_source": len(source),
                "dim_target": len(model.ideal.standard_monomials(target_degree)),
                "rank": rank,
                "injective": rank == len(source),
            }
        )
    return out


def _falling(value: int, times: int) -> int:
    out = 1
    for t in range(times):
        out *= value - t
    return out


def verify_associated_graded(alpha, beta, model: QuotientModel | None = None) -> dict:
    """Check the witnesses placing each generator in the graded vanishing ideal
    of the contingency-table locus, and the dimension count.

    Row and column sums lift to (sum - margin); a violating monomial lifts to
    the product of falling factorials of its exponents, which vanishes on
    every table because the row (or column) cannot supply enough weight.
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    tables = contingency_tables(alpha, beta)
    k, p = len(alpha), len(beta)
    lifts_vanish = True
    for table in tables:
        for i in range(k):
            if sum(table[i]) - alpha[i] != 0:
                lifts_vanish = False
        for j in range(p):
            if sum(row[j] for row in table) - beta[j] != 0:
                lifts_vanish = False
        for i in range(k):
            for exps in bounded_exponents(p, alpha[i] + 1):
                value = 1
                for j, e in enumerate(exps):
                    value *= _falling(table[i][j], e)
                    if value == 0:
                        break
                if value != 0:
                    lifts_vanish = False
        for j in range(p):
            for exps in bounded_exponents(k, beta[j] + 1):
                value = 1
                for i, e in enumerate(exps):
                    value *= _falling(table[i][j], e)
                    if value == 0:
                        break
                if value != 0:
                    lifts_vanish = False
    if model is None:
        model = QuotientModel(alpha, beta)
    dim = sum(model.hilbert)
    return {
        "lifts_vanish": lifts_vanish,
        "dimension_match": dim == len(tables),
        "dimension": dim,
        "tables": len(tables),
    }
