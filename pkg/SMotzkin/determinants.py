"""
Band matrices of the generating-function systems and their determinants.

Determinants are exact polynomials in z. The limits of Cramer quotients
are checked by watching the first coefficients of the quotient series stop
changing as the matrix grows.
"""

import enum
import math
import logging
import functools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .algebra import Poly, TruncSeries
from .series import Z_CUBED, f_series, psi_series, ternary_tree_series

log = logging.getLogger(__name__)

# Typing
Size = int
Order = int
Matrix = list[list[Poly]]


class Orientation(enum.Enum):
    """Band matrix layouts."""

    FIRST_SYSTEM = 'first_system'  # Rows -z^2, 1, -2z, z^2
    FIRST_SYSTEM_STAR = 'first_system_star'  # Same with first row (1, -z)
    TRANSPOSED = 'transposed'  # Transpose of the first system


# Entry at column ``row + offset``
_STENCILS = {
    Orientation.FIRST_SYSTEM: {-1: Poly((0, 0, -1)), 0: Poly((1,)), 1: Poly((0, -2)), 2: Poly((0, 0, 1))},
    Orientation.FIRST_SYSTEM_STAR: {-1: Poly((0, 0, -1)), 0: Poly((1,)), 1: Poly((0, -2)), 2: Poly((0, 0, 1))},
    Orientation.TRANSPOSED: {-2: Poly((0, 0, 1)), -1: Poly((0, -2)), 0: Poly((1,)), 1: Poly((0, 0, -1))},
}
_STAR_FIRST_ROW = {0: Poly((1,)), 1: Poly((0, -1))}


@dataclass(frozen=True)
class BandMatrixSpec:
    """Size and layout of a band matrix; ``size`` is the number of rows."""

    size: Size
    orientation: Orientation

    def __post_init__(self):
        """Validate the fields."""
        if self.size < 1:
            raise ValueError(f'Matrix size must be positive: {self.size}')


def band_matrix(spec: BandMatrixSpec) -> Matrix:
    """
    Materialize a band matrix.

    :param spec: Size and layout.
    :return: Rows of polynomial entries.
    """
    h = spec.size
    rows = []
    for r in range(h):
        stencil = _STENCILS[spec.orientation]
        if r == 0 and spec.orientation is Orientation.FIRST_SYSTEM_STAR:
            stencil = _STAR_FIRST_ROW
        rows.append([stencil.get(c - r, Poly()) for c in range(h)])
    return rows


def det_poly_matrix(matrix: Matrix) -> Poly:
    """
    Determinant by fraction-free (Bareiss) elimination over Z[z].

    Each step divides exactly by the previous pivot; a zero pivot is replaced
    by swapping in a lower row.

    :param matrix: Square matrix of polynomials.
    :return: Determinant.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    assert all(len(row) == n for row in m)
    if n == 0:
        return Poly((1,))
    var = m[0][0].var
    sign = 1
    prev = Poly((1,), var)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly((), var)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exquo(prev)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_exact(spec: BandMatrixSpec) -> Poly:
    """Exact determinant of a band matrix."""
    return det_poly_matrix(band_matrix(spec))


def det_reference(spec: BandMatrixSpec) -> Poly:
    """
    The same determinant computed by sympy, for cross-checking.

    :param spec: Size and layout.
    """
    z = sympy.Symbol('z')
    matrix = sympy.Matrix([[entry.evaluate(z) for entry in row] for row in band_matrix(spec)])
    det = sympy.Poly(sympy.expand(matrix.det(method='bareiss')), z)
    return Poly([int(c) for c in reversed(det.all_coeffs())])


@functools.lru_cache(maxsize=None)
def _d_cached(h_max: Size) -> tuple[Poly, ...]:
    seq = [Poly((1,)), Poly((1,)), Poly((1, 0, 0, -2))]
    z3, z6 = Poly.monomial(3), Poly.monomial(6)
    for _ in range(3, h_max + 1):
        seq.append(seq[-1] - 2 * z3 * seq[-2] + z6 * seq[-3])
    return tuple(seq[:h_max + 1])


def D_sequence(h_max: Size) -> list[Poly]:
    """
    D_0, ..., D_(h_max) from D_h = D_(h-1) - 2z^3 D_(h-2) + z^6 D_(h-3).

    :param h_max: Largest index.
    """
    if h_max < 0:
        raise ValueError(f'Negative index: {h_max}')
    return list(_d_cached(h_max))


def D(h: Size) -> Poly:
    """D_h, with D_h = 0 for negative h."""
    if h < 0:
        return Poly()
    return _d_cached(max(h, 2))[h]


def D_star(h: Size) -> Poly:
    """
    D*_h = D_(h-1) - z^3 D_(h-2), the determinant of the star layout.

    :param h: Size h >= 2.
    """
    if h < 2:
        raise ValueError(f'D* needs h >= 2: {h}')
    return D(h - 1) - Poly.monomial(3) * D(h - 2)


def tau_sequence(i_max: int) -> list[Poly]:
    """
    tau_0, ..., tau_(i_max) from tau_i = 2 tau_(i-1) - tau_(i-2) + z^3 tau_(i-3).

    :param i_max: Largest index.
    """
    if i_max < 0:
        raise ValueError(f'Negative index: {i_max}')
    seq = [Poly(), Poly((1,)), Poly((2,))]
    z3 = Poly.monomial(3)
    for _ in range(3, i_max + 1):
        seq.append(2 * seq[-1] - seq[-2] + z3 * seq[-3])
    return seq[:i_max + 1]


def tau(i: int) -> Poly:
    """tau_i, with tau_i = 0 for negative i."""
    return tau_sequence(i)[i] if i >= 0 else Poly()


def tau_explicit(i: int) -> Poly:
    """Sum over 0 <= j <= (i-1)/3 of C(i-j, 2j+1) z^(3j)."""
    if i < 0:
        raise ValueError(f'Negative index: {i}')
    res = Poly()
    for j in range((i - 1) // 3 + 1):
        res = res + Poly.monomial(3 * j, math.comb(i - j, 2 * j + 1))
    return res


def tau_minus_t_tau(i: int) -> Poly:
    """
    tau_i - t tau_(i-1) with z^3 replaced by t (1 - t)^2, a polynomial in t.

    :param i: Index i >= 0.
    """
    if i < 0:
        raise ValueError(f'Negative index: {i}')
    in_t = [p.in_cube('x').compose(Z_CUBED) for p in (tau(i), tau(i - 1))]
    return in_t[0] - Poly((0, 1), 't') * in_t[1]


def _check_border(n: Size, i: int):
    if n < 1 or not 1 <= i <= n:
        raise ValueError(f'Bordered determinant needs 1 <= i <= n: n={n}, i={i}')


def bordered_det(n: Size, i: int) -> Poly:
    """
    D_(n,i): the transposed matrix of size n with row 1 and column i cleared except a 1 where they cross.

    Indices are 1-based. Computed directly by elimination.
    """
    _check_border(n, i)
    matrix = band_matrix(BandMatrixSpec(n, Orientation.TRANSPOSED))
    matrix[0] = [Poly()] * n
    for row in matrix:
        row[i - 1] = Poly()
    matrix[0][i - 1] = Poly((1,))
    return det_poly_matrix(matrix)


def bordered_det_tau(n: Size, i: int) -> Poly:
    """D_(n,i) = z^(i-1) tau_i D_(n-i) - z^(i+2) tau_(i-1) D_(n-i-1)."""
    _check_border(n, i)
    return (tau(i) * D(n - i)).shift(i - 1) - (tau(i - 1) * D(n - i - 1)).shift(i + 2)


def cramer_f(i: int, h: Size, order: Order) -> TruncSeries:
    """
    The truncated series z^(2i) D_(h-i-1) / D*_h.

    Tends to f_i as h grows.

    :param i: Height, 0 <= i <= h - 2.
    :param h: Matrix size.
    :param order: z-order N.
    """
    if not 0 <= i <= h - 2:
        raise ValueError(f'Need 0 <= i <= h - 2: i={i}, h={h}')
    num = TruncSeries.from_poly(D(h - i - 1).shift(2 * i), order)
    return num / TruncSeries.from_poly(D_star(h), order)


def cramer_psi(i: int, n: Size, order: Order, direct: bool = False) -> TruncSeries:
    """
    The truncated series z^2 phi_0 D_(n,i+1) / D_n.

    Tends to psi_i as n grows.

    :param i: Height, 0 <= i <= n - 1.
    :param n: Matrix size.
    :param order: z-order N.
    :param direct: Evaluate the bordered determinant by elimination
        instead of through the tau sequence.
    """
    if not 0 <= i <= n - 1:
        raise ValueError(f'Need 0 <= i <= n - 1: i={i}, n={n}')
    bordered = bordered_det(n, i + 1) if direct else bordered_det_tau(n, i + 1)
    quotient = TruncSeries.from_poly(bordered, order) / TruncSeries.from_poly(D(n), order)
    return f_series(0, order).shift(2) * quotient


def ratio_series(n: Size, i: int, order: Order) -> TruncSeries:
    """
    The truncated series D_(n-i) / D_n.

    :param n: Matrix size.
    :param i: Offset, 0 <= i <= n.
    :param order: z-order N.
    """
    if not 0 <= i <= n:
        raise ValueError(f'Need 0 <= i <= n: i={i}, n={n}')
    return TruncSeries.from_poly(D(n - i), order) / TruncSeries.from_poly(D(n), order)


def ratio_limit(i: int, order: Order) -> TruncSeries:
    """(t - 1)^(-2i) as a z-series, the limit of D_(n-i) / D_n."""
    t = ternary_tree_series(max(order // 3, 1))
    return (1 / (1 - t) ** (2 * i)).to_z(0, order)


def stabilization_threshold(quotient, target: TruncSeries, sizes: range, workers: int = 1) -> Size | None:
    """
    Smallest size from which a family of quotient series agrees with its limit.

    :param quotient: Callable mapping a size to a truncated series.
    :param target: Limit series; compared on its order.
    :param sizes: Sizes to scan, increasing.
    :param workers: Thread count for evaluating the sizes. The scan holds the GIL,
        so more threads change only the scheduling, never the result.
    :return: The smallest ``h`` such that every scanned size from ``h`` on
        matches, or None if the last one does not.
    """
    def matches(h):
        return quotient(h).truncate(target.order) == target

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(matches, sizes))
    else:
        flags = [matches(h) for h in sizes]

    threshold = None
    for h, ok in reversed(list(zip(sizes, flags))):
        if not ok:
            break
        threshold = h
    log.debug('stabilization over %s: %s', sizes, threshold)
    return threshold


def cramer_f_threshold(i: int, order: Order, h_max: Size, workers: int = 1) -> Size | None:
    """Stabilization size h0 of cramer_f towards f_series(i, order)."""
    return stabilization_threshold(lambda h: cramer_f(i, h, order), f_series(i, order),
                                   range(i + 2, h_max + 1), workers)


def cramer_psi_threshold(i: int, order: Order, n_max: Size, workers: int = 1) -> Size | None:
    """Stabilization size n0 of cramer_psi towards the given psi series."""
    return stabilization_threshold(lambda n: cramer_psi(i, n, order), psi_series(i, order),
                                   range(i + 1, n_max + 1), workers)


@dataclass(frozen=True)
class RootData:
    """Roots and Binet constants of the determinant recursion at a real t."""

    t: float
    z: float
    W: float
    r1: float
    r2: float
    r3: float
    mu2: float
    mu3: float
    A: float
    B: float
    C: float

    def binet(self, h: Size) -> float:
        """A r1^h + B r2^h + C r3^h."""
        return self.A * self.r1 ** h + self.B * self.r2 ** h + self.C * self.r3 ** h


def _check_t(t: float):
    if not 0 < t < 1 / 3:
        raise ValueError(f't must lie in (0, 1/3): {t}')


def root_data(t: float) -> RootData:
    """
    Evaluate the roots of X^3 - X^2 + 2z^3 X - z^6 and the constants A, B, C.

    The branch W >= 0 is used, so r2 >= r3 and mu3 >= mu2.

    :param t: Parameter in (0, 1/3).
    """
    _check_t(t)
    w = math.sqrt(4 * t - 3 * t * t)
    denom = (3 * t - 1) * (3 * t - 4)
    return RootData(
        t=t,
        z=(t * (1 - t) ** 2) ** (1 / 3),
        W=w,
        r1=(t - 1) ** 2,
        r2=t / 2 * (2 - t + w),
        r3=t / 2 * (2 - t - w),
        mu2=(2 - t - w) / 2,
        mu3=(2 - t + w) / 2,
        A=(t - 1) / (3 * t - 1),
        B=(3 * t * t - 4 * t - w) / denom,
        C=(3 * t * t - 4 * t + w) / denom,
    )


def vieta_residuals(rd: RootData) -> dict[str, float]:
    """Absolute errors of the symmetric-function identities."""
    z3 = rd.t * (1 - rd.t) ** 2
    return {
        'sum': abs(rd.r1 + rd.r2 + rd.r3 - 1),
        'pairs': abs(rd.r1 * rd.r2 + rd.r1 * rd.r3 + rd.r2 * rd.r3 - 2 * z3),
        'product': abs(rd.r1 * rd.r2 * rd.r3 - z3 * z3),
        'mu_sum': abs(rd.mu2 + rd.mu3 - (2 - rd.t)),
        'mu_product': abs(rd.mu2 * rd.mu3 - (1 - rd.t) ** 2),
        'constants': abs(rd.A + rd.B + rd.C - 1),
    }


def numpy_roots_residual(rd: RootData) -> float:
    """Largest distance between the closed-form roots and numpy's roots of the cubic."""
    z3 = rd.t * (1 - rd.t) ** 2
    roots = np.roots([1.0, -1.0, 2 * z3, -z3 * z3])
    found = np.sort(roots.real)
    expected = np.sort(np.array([rd.r1, rd.r2, rd.r3]))
    return float(max(np.max(np.abs(found - expected)), np.max(np.abs(roots.imag))))


def binet_numeric(t_value: float, h: Size) -> float:
    """
    Relative error of the Binet form of D_h at a real point.

    D_h(z) is evaluated exactly at z^3 = t (1 - t)^2 and then rounded.

    :param t_value: Parameter in (0, 1/3).
    :param h: Index h >= 0.
    :return: |D_h - (A r1^h + B r2^h + C r3^h)| / max(1, |D_h|).
    """
    rd = root_data(t_value)
    if h < 0:
        raise ValueError(f'Negative index: {h}')
    t = Fraction(t_value)
    exact = float(D(h).in_cube('x').evaluate(t * (1 - t) ** 2))
    return abs(exact - rd.binet(h)) / max(1.0, abs(exact))
