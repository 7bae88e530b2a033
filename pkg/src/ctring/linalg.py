"""Degree-by-degree exact linear algebra for homogeneous ideals.

The degree-d slice of an ideal generated by homogeneous polynomials is
spanned by monomial multiples of the generators.  Reducing that span to
echelon form with columns sorted descending in a term order yields the
degree-d part of the initial ideal (the pivots) and the degree-d standard
monomials (the complement).

Monomial generators are handled separately: any multiple of one is itself a
monomial of the ideal, so the elimination only ever sees monomials that are
"clean" (not divisible by a monomial generator), which keeps the systems
small.  Inside a slice the clean monomials are sorted once and rows are
sparse dicts keyed by column position, so finding a pivot is a plain min();
coefficients are Fraction, which stays cheap at these sizes.
"""

from .polys import Poly


def bounded_exponents(nvars, degree, caps=None):
    """All exponent tuples with the given total degree, honoring per-variable caps."""
    caps = caps or (degree,) * nvars
    out = []

    def rec(i, left, prefix):
        if i == nvars - 1:
            if left <= caps[i]:
                out.append(prefix + (left,))
            return
        for v in range(min(left, caps[i]), -1, -1):
            rec(i + 1, left - v, prefix + (v,))

    if nvars:
        rec(0, degree, ())
    elif degree == 0:
        out.append(())
    return out


def _divides(small, big):
    return all(a <= b for a, b in zip(small, big))


def position_echelon(rows, reduce_fully=True):
    """Row echelon form of sparse rows keyed by integer column positions,
    position 0 being the leading column.  Returns {pivot position: row} with
    pivot coefficients scaled to one; with reduce_fully, every other pivot is
    eliminated from every row."""
    pivot_rows = {}
    for vec in rows:
        vec = dict(vec)
        while vec:
            lead = min(vec)
            prow = pivot_rows.get(lead)
            if prow is None:
                c = vec[lead]
                if c != 1:
                    vec = {p: v / c for p, v in vec.items()}
                pivot_rows[lead] = vec
                break
            c = vec.pop(lead)
            for p, pc in prow.items():
                if p == lead:
                    continue
                val = vec.get(p, 0) - c * pc
                if val:
                    vec[p] = val
                else:
                    vec.pop(p, None)
    if reduce_fully:
        # substitute smallest-order pivots first: each step only introduces
        # non-pivot columns, so one pass suffices
        for lead in sorted(pivot_rows, reverse=True):
            row = pivot_rows[lead]
            inner = [p for p in row if p != lead and p in pivot_rows]
            for p in inner:
                c = row.pop(p)
                for q, pc in pivot_rows[p].items():
                    if q == p:
                        continue
                    val = row.get(q, 0) - c * pc
                    if val:
                        row[q] = val
                    else:
                        row.pop(q, None)
    return pivot_rows


def echelon(rows, keyf):
    """Reduced row echelon form of sparse rows (dicts monomial -> coefficient),
    keyf mapping monomials to sortable keys, larger key = leading column."""
    rows = list(rows)
    monomials = sorted({m for row in rows for m in row}, key=keyf, reverse=True)
    index = {m: i for i, m in enumerate(monomials)}
    translated = [{index[m]: c for m, c in row.items()} for row in rows]
    reduced = position_echelon(translated)
    return {
        monomials[lead]: {monomials[p]: c for p, c in row.items()}
        for lead, row in reduced.items()
    }


def extreme_monomials(polys, order, smallest=False):
    """The set { leading (or trailing) monomial of f : f in span(polys) - 0 }.

    Gaussian elimination with columns sorted by the order (reversed when
    `smallest`) makes these exactly the pivot monomials.
    """
    keyf = order.key
    if smallest:
        rows = echelon((p.terms for p in polys), lambda m: _Neg(keyf(m)))
    else:
        rows = echelon((p.terms for p in polys), keyf)
    return set(rows)


class _Neg:
    """Reverses comparisons of a wrapped key."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other):
        return other.key < self.key

    def __gt__(self, other):
        return other.key > self.key


class DegreeBasis:
    """Reduced echelon basis of one degree slice of a homogeneous ideal.

    `columns` lists the clean monomials of the degree in order-descending
    sequence; `rows` maps pivot positions to sparse rows keyed by position.
    """

    __slots__ = ("degree", "columns", "index", "rows", "pivots", "standard")

    def __init__(self, degree, columns, rows):
        self.degree = degree
        self.columns = columns
        self.index = {m: i for i, m in enumerate(columns)}
        self.rows = rows
        self.pivots = tuple(columns[p] for p in sorted(rows))
        self.standard = tuple(
            m for i, m in enumerate(columns) if i not in rows
        )

    @property
    def pivot_rows(self):
        """Rows re-keyed by monomial, pivot monomial -> {monomial: coeff}."""
        return {
            self.columns[lead]: {self.columns[p]: c for p, c in row.items()}
            for lead, row in self.rows.items()
        }


class HomogeneousIdeal:
    """An ideal presented by homogeneous generators, sliced degree by degree."""

    def __init__(self, generators, nvars, order):
        self.nvars = nvars
        self.order = order
        self.monomial_gens = []
        self.other_gens = []
        for g in generators:
            if not g:
                continue
            if not g.is_homogeneous():
                raise ValueError("generators must be homogeneous")
            if len(g.terms) == 1:
                exps = next(iter(g.terms))
                if exps not in self.monomial_gens:
                    self.monomial_gens.append(exps)
            else:
                if g not in self.other_gens:
                    self.other_gens.append(g)
        # keep only divisibility-minimal monomial generators
        self.monomial_gens = [
            m
            for m in self.monomial_gens
            if not any(_divides(o, m) for o in self.monomial_gens if o != m)
        ]
        self._caps = self._variable_caps()
        self._slices = {}
        self._clean = {}

    def _variable_caps(self):
        caps = [None] * self.nvars
        for exps in self.monomial_gens:
            nz = [i for i, e in enumerate(exps) if e]
            if len(nz) == 1:
                i = nz[0]
                bound = exps[i] - 1
                caps[i] = bound if caps[i] is None else min(caps[i], bound)
        return caps

    def is_clean(self, exps) -> bool:
        """Monomial not divisible by any monomial generator."""
        return not any(_divides(g, exps) for g in self.monomial_gens)

    def clean_monomials(self, degree):
        cached = self._clean.get(degree)
        if cached is None:
            caps = tuple(degree if c is None else min(c, degree) for c in self._caps)
            cached = [
                m
                for m in bounded_exponents(self.nvars, degree, caps)
                if self.is_clean(m)
            ]
            self._clean[degree] = cached
        return cached

    def slice(self, degree) -> DegreeBasis:
        cached = self._slices.get(degree)
        if cached is not None:
            return cached
        columns = tuple(
            sorted(self.clean_monomials(degree), key=self.order.key, reverse=True)
        )
        index = {m: i for i, m in enumerate(columns)}
        rows = []
        for g in self.other_gens:
            gdeg = g.degree()
            if gdeg > degree:
                continue
            for factor in self.clean_monomials(degree - gdeg):
                row = {}
                for exps, coeff in g.terms.items():
                    pos = index.get(tuple(a + b for a, b in zip(factor, exps)))
                    if pos is not None:
                        row[pos] = row.get(pos, 0) + coeff
                row = {p: c for p, c in row.items() if c}
                if row:
                    rows.append(row)
        basis = DegreeBasis(degree, columns, position_echelon(rows))
        self._slices[degree] = basis
        return basis

    def standard_monomials(self, degree):
        return self.slice(degree).standard

    def in_initial_ideal(self, exps) -> bool:
        if not self.is_clean(exps):
            return True
        basis = self.slice(sum(exps))
        return basis.index[exps] in basis.rows

    def initial_count(self, degree) -> int:
        """Number of degree-d monomials in the initial ideal."""
        all_count = len(bounded_exponents(self.nvars, degree))
        return all_count - len(self.slice(degree).standard)

    def hilbert(self, cap=None):
        """Standard monomial counts by degree, stopping at the first empty slice.

        For a quotient by a homogeneous ideal a zero graded piece forces all
        higher pieces to vanish, so this truncation is exact for Artinian
        quotients; `cap` guards against accidentally non-Artinian input.
        """
        out = []
        degree = 0
        while True:
            count = len(self.slice(degree).standard)
            if count == 0:
                if degree == 0:
                    out.append(0)
                break
            out.append(count)
            degree += 1
            if cap is not None and degree > cap:
                raise RuntimeError(f"quotient not finite through degree {cap}")
        return out

    def reduce_positions(self, degree, vec):
        """Reduce a position-keyed vector against the reduced slice rows."""
        basis = self.slice(degree)
        for p in list(vec):
            row = basis.rows.get(p)
            if row is None:
                continue
            c = vec.pop(p)
            for q, pc in row.items():
                if q == p:
                    continue
                val = vec.get(q, 0) - c * pc
                if val:
                    vec[q] = val
                else:
                    vec.pop(q, None)
        return vec

    def normal_form(self, poly: Poly) -> Poly:
        """Reduce modulo the ideal onto the span of standard monomials.

        The result is the unique representative of poly supported on standard
        monomials; the map is linear and fixes standard monomials.
        """
        out = {}
        for degree, part in poly.homogeneous_parts().items():
            basis = self.slice(degree)
            vec = {
                basis.index[m]: c
                for m, c in part.terms.items()
                if self.is_clean(m)
            }
            vec = self.reduce_positions(degree, vec)
            for p, c in vec.items():
                m = basis.columns[p]
                out[m] = out.get(m, 0) + c
        return Poly(poly.nvars, out)

    def contains(self, poly: Poly) -> bool:
        return not self.normal_form(poly)
