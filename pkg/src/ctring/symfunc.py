"""Symmetric functions in the h and s bases, symmetric group characters, and
character arithmetic for products of symmetric groups.

Irreducible characters are evaluated by border-strip removal on beta sets
(first-column hook lengths); all arithmetic is exact.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import (
    check_partition,
    kostka,
    partitions,
    standard_tableau_count,
)


@lru_cache(maxsize=None)
def _beta_set(shape):
    length = len(shape)
    return tuple(shape[i] + length - 1 - i for i in range(length))


def _shape_from_beta(beta):
    # beta strictly decreasing; drop the staircase and trailing zeros
    length = len(beta)
    shape = tuple(beta[i] - (length - 1 - i) for i in range(length))
    return tuple(p for p in shape if p > 0)


@lru_cache(maxsize=None)
def irreducible_character(shape, cycle_type) -> int:
    """Character of the irreducible labeled by `shape` at class `cycle_type`.

    Recursive border-strip removal: subtracting a part t from one first-column
    hook length, when the result is fresh and nonnegative, removes a border
    strip whose height is the number of hook lengths jumped over.
    """
    shape = check_partition(shape)
    cycle_type = check_partition(cycle_type)
    if sum(shape) != sum(cycle_type):
        raise ValueError("shape and cycle type must have equal size")
    if not shape:
        return 1
    t = cycle_type[0]
    rest = cycle_type[1:]
    beta = list(_beta_set(shape))
    beta_set = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        jumped = sum(1 for c in beta if nb < c < b)
        new_beta = sorted(beta[:idx] + [nb] + beta[idx + 1 :], reverse=True)
        total += (-1) ** jumped * irreducible_character(
            _shape_from_beta(tuple(new_beta)), rest
        )
    return total


def cycle_type_size(cycle_type, n: int) -> int:
    """Number of permutations in the conjugacy class of the given cycle type."""
    mult: dict = {}
    for part in cycle_type:
        mult[part] = mult.get(part, 0) + 1
    centralizer = 1
    for part, m in mult.items():
        centralizer *= part**m * factorial(m)
    return factorial(n) // centralizer


class SymFunc:
    """A homogeneous symmetric function: coefficients on h or s basis elements."""

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n, basis, coeffs=None):
        if basis not in ("h", "s"):
            raise ValueError("basis must be 'h' or 's'")
        self.n = n
        self.basis = basis
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = check_partition(lam)
            if sum(lam) != n:
                raise ValueError("index partition of wrong size")
            c = Fraction(c)
            if c:
                clean[lam] = c
        self.coeffs = clean

    def __eq__(self, other):
        return (
            isinstance(other, SymFunc)
            and (self.n, self.basis, self.coeffs) == (other.n, other.basis, other.coeffs)
        )

    def __repr__(self):
        terms = ", ".join(f"{self.basis}{list(l)}: {c}" for l, c in sorted(self.coeffs.items(), reverse=True))
        return f"SymFunc({terms})"

    def to_s(self):
        if self.basis == "s":
            return self
        out: dict = {}
        for mu, c in self.coeffs.items():
            for lam, k in h_to_s_expansion(mu).items():
                out[lam] = out.get(lam, 0) + c * k
        return SymFunc(self.n, "s", out)

    def to_h(self):
        if self.basis == "h":
            return self
        out: dict = {}
        for lam, c in self.coeffs.items():
            for mu, k in s_to_h_expansion(lam).items():
                out[mu] = out.get(mu, 0) + c * k
        return SymFunc(self.n, "h", out)

    def dimension(self):
        """Dimension of a module with this Frobenius image."""
        if self.basis == "s":
            total = sum(c * standard_tableau_count(l) for l, c in self.coeffs.items())
        else:
            total = sum(
                c * permutation_module_dimension(l) for l, c in self.coeffs.items()
            )
        return int(total) if getattr(total, "denominator", 1) == 1 else total


def permutation_module_dimension(shape) -> int:
    out = factorial(sum(shape))
    for part in shape:
        out //= factorial(part)
    return out


@lru_cache(maxsize=None)
def h_to_s_expansion(mu) -> dict:
    """Schur expansion of a complete homogeneous basis element: the coefficient
    of s_lam is the Kostka number with shape lam and content mu."""
    mu = check_partition(mu)
    out = {}
    for lam in partitions(sum(mu)):
        value = kostka(lam, mu)
        if value:
            out[lam] = value
    return out


@lru_cache(maxsize=None)
def _s_to_h_table(n) -> dict:
    """Rows of the inverse Kostka transform for all partitions of n.

    The h-to-s matrix is unitriangular against lexicographic order, so back
    substitution inverts it exactly over the integers.
    """
    order = partitions(n)  # lexicographically descending
    table: dict = {}
    for lam in order:
        row = {lam: 1}
        expansion = h_to_s_expansion(lam)
        for nu, c in expansion.items():
            if nu == lam:
                continue
            # nu dominates lam, hence precedes it lexicographically: row known
            for mu, d in table[nu].items():
                row[mu] = row.get(mu, 0) - c * d
        table[lam] = {mu: c for mu, c in row.items() if c}
    return table


def s_to_h_expansion(lam) -> dict:
    lam = check_partition(lam)
    return _s_to_h_table(sum(lam))[lam]


def kostka_matrix(n) -> dict:
    """All nonzero (shape, content-partition) Kostka numbers for size n."""
    out = {}
    for mu in partitions(n):
        for lam, value in h_to_s_expansion(mu).items():
            out[(lam, mu)] = value
    return out


def inverse_kostka_matrix(n) -> dict:
    out = {}
    for lam, row in _s_to_h_table(n).items():
        for mu, value in row.items():
            out[(mu, lam)] = value
    return out


class TensorSymFunc:
    """A sum of tensor products of symmetric functions across fixed factor degrees.

    Keys are tuples of partitions, one per factor; used as Frobenius images of
    modules over a product of symmetric groups.
    """

    __slots__ = ("degrees", "basis", "coeffs")

    def __init__(self, degrees, basis, coeffs=None):
        if basis not in ("h", "s"):
            raise ValueError("basis must be 'h' or 's'")
        self.degrees = tuple(degrees)
        self.basis = basis
        clean = {}
        for key, c in (coeffs or {}).items():
            key = tuple(check_partition(lam) for lam in key)
            if tuple(sum(lam) for lam in key) != self.degrees:
                raise ValueError("factor degrees do not match")
            c = Fraction(c)
            if c:
                clean[key] = c
        self.coeffs = clean

    def __eq__(self, other):
        return (
            isinstance(other, TensorSymFunc)
            and (self.degrees, self.basis, self.coeffs)
            == (other.degrees, other.basis, other.coeffs)
        )

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if (self.degrees, self.basis) != (other.degrees, other.basis):
            raise ValueError("mismatched tensor spaces")
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            val = out.get(key, 0) + c
            if val:
                out[key] = val
            else:
                out.pop(key, None)
        return TensorSymFunc(self.degrees, self.basis, out)

    def scale(self, c):
        return TensorSymFunc(
            self.degrees, self.basis, {k: v * c for k, v in self.coeffs.items()}
        )

    def tensor(self, other):
        if self.basis != other.basis:
            raise ValueError("mismatched bases")
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                key = k1 + k2
                out[key] = out.get(key, 0) + c1 * c2
        return TensorSymFunc(self.degrees + other.degrees, self.basis, out)

    def to_s(self):
        if self.basis == "s":
            return self
        out: dict = {}
        for key, c in self.coeffs.items():
            expansions = [h_to_s_expansion(lam) for lam in key]
            for combo, value in _expand(expansions):
                out[combo] = out.get(combo, 0) + c * value
        return TensorSymFunc(self.degrees, "s", out)

    def to_h(self):
        if self.basis == "h":
            return self
        out: dict = {}
        for key, c in self.coeffs.items():
            expansions = [s_to_h_expansion(lam) for lam in key]
            for combo, value in _expand(expansions):
                out[combo] = out.get(combo, 0) + c * value
        return TensorSymFunc(self.degrees, "h", out)

    def dimension(self):
        total = 0
        for key, c in self.coeffs.items():
            block = 1
            for lam in key:
                block *= (
                    standard_tableau_count(lam)
                    if self.basis == "s"
                    else permutation_module_dimension(lam)
                )
            total += c * block
        return int(total) if getattr(total, "denominator", 1) == 1 else total

    def character(self, class_tuple):
        """Character of the underlying module at a class of the product group,
        given as one cycle type per factor.  Requires the s basis."""
        current = self.to_s()
        total = 0
        for key, c in current.coeffs.items():
            value = 1
            for lam, rho in zip(key, class_tuple):
                value *= irreducible_character(lam, rho)
                if value == 0:
                    break
            total += c * value
        return total


def _expand(expansions):
    """Cartesian expansion of per-factor dictionaries into (key tuple, product)."""
    combos = [((), 1)]
    for expansion in expansions:
        combos = [
            (key + (lam,), value * c)
            for key, value in combos
            for lam, c in expansion.items()
        ]
    return combos


class SymmetricProductGroup:
    """A product of symmetric groups S_{m_1} x ... x S_{m_r}.

    Conjugacy classes and irreducibles are tuples of partitions, one per
    factor; characters multiply across factors.
    """

    def __init__(self, sizes):
        self.sizes = tuple(sizes)
        self.order = 1
        for m in self.sizes:
            self.order *= factorial(m)

    def classes(self):
        """(class tuple, class size) pairs."""
        out = [((), 1)]
        for m in self.sizes:
            out = [
                (key + (rho,), size * cycle_type_size(rho, m))
                for key, size in out
                for rho in partitions(m)
            ]
        return out

    def irreducibles(self):
        out = [()]
        for m in self.sizes:
            out = [key + (lam,) for key in out for lam in partitions(m)]
        return out

    def character(self, irrep, class_tuple) -> int:
        value = 1
        for lam, rho in zip(irrep, class_tuple):
            value *= irreducible_character(lam, rho)
            if value == 0:
                return 0
        return value

    def irreducible_multiplicities(self, character_values) -> dict:
        """Decompose a class function (dict class tuple -> value) into
        irreducible multiplicities; raises unless they are nonnegative ints."""
        out = {}
        classes = self.classes()
        for irrep in self.irreducibles():
            total = 0
            for class_tuple, size in classes:
                total += size * character_values[class_tuple] * self.character(
                    irrep, class_tuple
                )
            mult = Fraction(total, self.order)
            if mult.denominator != 1 or mult < 0:
                raise ArithmeticError("class function is not a character")
            if mult:
                out[irrep] = int(mult)
        return out

    def tensor_multiplicities(self, mod_a: dict, mod_b: dict) -> dict:
        """Irreducible multiplicities of the tensor product of two modules
        given by their own irreducible multiplicities."""
        classes = self.classes()
        values = {}
        for class_tuple, _ in classes:
            va = sum(
                c * self.character(irrep, class_tuple) for irrep, c in mod_a.items()
            )
            vb = sum(
                c * self.character(irrep, class_tuple) for irrep, c in mod_b.items()
            )
            values[class_tuple] = va * vb
        return self.irreducible_multiplicities(values)
