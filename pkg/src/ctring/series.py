"""Hilbert series from Kostka numbers, log-concavity checks, and the graded
lattice-point series of transportation polytopes."""

from .partitions import kostka, partitions


def _truncated_partitions(n, max_degree):
    """Partitions of n with first part >= n - max_degree: the only shapes that
    can contribute to coefficients of degree <= max_degree."""
    out = []
    for d in range(min(max_degree, n) + 1):
        first = n - d
        for rest in partitions(d, max_part=first):
            out.append((first,) + rest if first else rest)
    return out


def hilbert_kostka(alpha, beta, max_degree=None) -> list:
    """Coefficients of the quotient Hilbert series: the degree-d coefficient
    sums K(lam, alpha) * K(lam, beta) over partitions lam of n with
    lam_1 = n - d.  Truncating to max_degree only enumerates the shapes with
    a long enough first row."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    n = sum(alpha)
    if n != sum(beta):
        raise ValueError("row and column sums must agree")
    if max_degree is None:
        shapes = partitions(n)
        size = n + 1
    else:
        shapes = _truncated_partitions(n, max_degree)
        size = min(max_degree, n) + 1
    coeffs = [0] * size
    for lam in shapes:
        d = n - lam[0] if lam else 0
        value = kostka(lam, alpha)
        if value:
            coeffs[d] += value * kostka(lam, beta)
    if max_degree is None:
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
    return coeffs


def log_concavity_violations(coeffs) -> list:
    """Indices k with a_k^2 < a_{k-1} * a_{k+1}, over the positive support."""
    return [
        k
        for k in range(1, len(coeffs) - 1)
        if coeffs[k] ** 2 < coeffs[k - 1] * coeffs[k + 1]
    ]


def _scale(gamma, m):
    return tuple(m * g for g in gamma)


def q_ehrhart(alpha, beta, upto: int, interior: bool = False) -> list:
    """Graded lattice-point series of the transportation polytope with margins
    (alpha, beta): entry m is the Hilbert coefficient list of the m-th dilate.

    The interior variant shifts margins by the complementary dimension
    (rows lose the column count and vice versa) and is zero whenever a
    shifted part goes negative; its m = 0 entry is the empty polynomial [0].
    """
    alpha = tuple(alpha)
    beta = tuple(beta)
    if sum(alpha) != sum(beta):
        raise ValueError("row and column sums must agree")
    k, p = len(alpha), len(beta)
    out = []
    for m in range(upto + 1):
        if not interior:
            out.append(hilbert_kostka(_scale(alpha, m), _scale(beta, m)))
            continue
        shifted_alpha = tuple(m * a - p for a in alpha)
        shifted_beta = tuple(m * b - k for b in beta)
        if m == 0 or min(shifted_alpha) < 0 or min(shifted_beta) < 0:
            out.append([0])
        else:
            out.append(hilbert_kostka(shifted_alpha, shifted_beta))
    return out


def uniform_family(part: int, n: int = 60) -> tuple:
    """The composition (part, part, ..., part) summing to n."""
    if n % part:
        raise ValueError("part must divide n")
    return (part,) * (n // part)
