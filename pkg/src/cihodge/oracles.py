"""Classical Hodge-number formulas used to cross-check the recursion.

These are deliberately independent of the degeneration engine:

* Griffiths residues: primitive Hodge numbers of a smooth degree-``d``
  hypersurface in ``P^{n+1}`` are graded pieces of the Jacobian ring of a
  Fermat polynomial, i.e. counts of bounded monomials.
* Hirzebruch chi_y genus: exact Riemann-Roch with rational power series.
* Adjunction: genus of a complete-intersection curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, OracleError
from .hodge import BigradedDims


@dataclass(frozen=True)
class OracleResult:
    source: str  # griffiths | chi_y | adjunction
    values: BigradedDims | int
    note: str = ""


def bounded_monomials(total: int, nvars: int, cap: int) -> int:
    """Monomials of degree ``total`` in ``nvars`` variables with every exponent <= ``cap``."""
    if total < 0 or cap < 0:
        return 0
    count = 0
    for j in range(nvars + 1):
        rest = total - j * (cap + 1)
        if rest < 0:
            break
        count += (-1) ** j * math.comb(nvars, j) * math.comb(rest + nvars - 1, nvars - 1)
    return count


def griffiths_prim_dims(d: int, n: int) -> BigradedDims:
    """``h^{n-q,q}_prim`` of a smooth degree-``d`` hypersurface in ``P^{n+1}``.

    >>> griffiths_prim_dims(5, 3)[(2, 1)]
    101
    """
    if d < 1 or n < 1:
        raise DimensionError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    return BigradedDims(
        {(n - q, q): bounded_monomials((q + 1) * d - (n + 2), n + 2, d - 2) for q in range(n + 1)}
    )


# truncated power series in h, coefficient list indexed by exponent


def _mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def _inv(a: list[Fraction], order: int) -> list[Fraction]:
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term")
    out = [Fraction(0)] * (order + 1)
    out[0] = 1 / a[0]
    for k in range(1, order + 1):
        acc = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out[k] = -acc / a[0]
    return out


def _exp_neg(c: int, order: int) -> list[Fraction]:
    """``exp(-c h)``."""
    return [Fraction((-c) ** k, math.factorial(k)) for k in range(order + 1)]


def _one_minus_exp_neg_over_h(c: int, order: int) -> list[Fraction]:
    """``(1 - exp(-c h)) / h``."""
    return [Fraction(-((-c) ** (k + 1)), math.factorial(k + 1)) for k in range(order + 1)]


def _chi_y_at(degrees: tuple[int, ...], N: int, y: int) -> Fraction:
    order = N - len(degrees)

    def factor(c: int) -> list[Fraction]:
        # 1 + y exp(-c h)
        s = [y * t for t in _exp_neg(c, order)]
        s[0] += 1
        return s

    # Q_y(h) = (1 + y e^{-h}) h / (1 - e^{-h}): the chi_y class of O(1)
    q = _mul(factor(1), _inv(_one_minus_exp_neg_over_h(1, order), order), order)
    series = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(N + 1):
        series = _mul(series, q, order)
    # Euler sequence T + O = O(1)^{N+1}: remove the trivial root's factor 1 + y
    series = [c / (1 + y) for c in series]
    for d in degrees:
        # normal bundle O(d) divided out, times the fundamental class d h
        series = _mul(series, _one_minus_exp_neg_over_h(d, order), order)
        series = _mul(series, _inv(factor(d), order), order)
    return series[order]


def _interpolate(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    """Coefficients (low to high) of the polynomial through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    return coeffs


def chi_y_ci(degrees, N: int) -> list[int]:
    """``[chi_0, ..., chi_n]`` with ``chi_p = sum_q (-1)^q h^{p,q}`` for CI(P^N, degrees)."""
    degrees = tuple(degrees)
    if len(degrees) > N:
        raise DimensionError(f"{len(degrees)} hypersurfaces in P^{N}")
    n = N - len(degrees)
    ys = list(range(n + 1))
    values = [_chi_y_at(degrees, N, y) for y in ys]
    coeffs = _interpolate(ys, values)
    out = []
    for p, c in enumerate(coeffs):
        if c.denominator != 1:
            raise OracleError(f"chi_{p} of CI(P^{N}, {list(degrees)}) is {c}, not an integer")
        out.append(int(c))
    return out


def forced_projective_term(n: int, p: int) -> int:
    """``sum_{q: p+q != n} (-1)^q h^{p,q}`` for a CI of dimension ``n`` in projective space."""
    return (-1) ** p if 2 * p != n else 0


def reconstruct_middle(chi: list[int], n: int) -> BigradedDims:
    """Middle Hodge numbers ``h^{p,n-p}`` from chi_y, assuming projective-space Lefschetz data."""
    if len(chi) != n + 1:
        raise DimensionError(f"expected {n + 1} values of chi_p, got {len(chi)}")
    out = {}
    for p in range(n + 1):
        value = (-1) ** (n - p) * (chi[p] - forced_projective_term(n, p))
        if value < 0:
            raise OracleError(f"negative reconstructed h^{{{p},{n - p}}} = {value}")
        out[(p, n - p)] = value
    return BigradedDims(out)


def genus_adjunction(degrees, N: int) -> int:
    """Genus of a complete-intersection curve in ``P^N``."""
    degrees = tuple(degrees)
    if N - len(degrees) != 1:
        raise DimensionError(f"CI(P^{N}, {list(degrees)}) is not a curve")
    deg = math.prod(degrees)
    twice = 2 + deg * (sum(degrees) - N - 1)
    if twice % 2:
        raise OracleError(f"non-integral genus for {list(degrees)}")
    return twice // 2


def self_check(max_dim: int = 6) -> list[str]:
    """Validate the chi_y oracle on projective spaces and quadrics; returns failures."""
    failures = []
    for N in range(max_dim + 1):
        if chi_y_ci((), N) != [(-1) ** p for p in range(N + 1)]:
            failures.append(f"chi_y(P^{N})")
    for N in range(2, max_dim + 1):
        n = N - 1
        # smooth quadric: h^{p,p} = 1, plus one extra middle class for even n
        expect = [(-1) ** p * (2 if 2 * p == n else 1) for p in range(n + 1)]
        if chi_y_ci((2,), N) != expect:
            failures.append(f"chi_y(Q^{n})")
    return failures


def oracle_results(degrees, N: int) -> list[OracleResult]:
    """Every applicable oracle for CI(P^N, degrees)."""
    degrees = tuple(degrees)
    n = N - len(degrees)
    out = [OracleResult("chi_y", reconstruct_middle(chi_y_ci(degrees, N), n), "Hirzebruch-Riemann-Roch")]
    nontrivial = [d for d in degrees if d > 1]
    if len(nontrivial) == 1 and n >= 1:
        d = nontrivial[0]
        dims = griffiths_prim_dims(d, n)
        if n % 2 == 0:
            dims = dims + BigradedDims({(n // 2, n // 2): 1})
        out.append(OracleResult("griffiths", dims, "Jacobian ring monomials plus hyperplane class"))
    if n == 1:
        out.append(OracleResult("adjunction", genus_adjunction(degrees, N), "genus"))
    return out
