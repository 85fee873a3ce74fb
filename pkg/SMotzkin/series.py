"""
Generating functions of the four families as exact truncated series.

Everything is expressed through the series t(x) solving ``x = t (1 - t)^2``
with ``x = z^3``. A z-series ``X(t) / z^s`` is built as an x-series ``X`` and
converted with the shift ``s``, so no Laurent series are needed. The square
root ``W = sqrt(4t - 3t^2)`` never appears: every Binet quotient is replaced
by the polynomial S_k(t) from its two-term recurrence.
"""

import math
import functools
from fractions import Fraction

from .algebra import Poly, TruncSeries

# Typing
Order = int

# t(1 - t)^2, the substitution for z^3
Z_CUBED = Poly((0, 1, -2, 1), 't')


def _x_order(order: Order, shift: int) -> Order:
    """x-order needed to fill a z-series of ``order`` with the given shift."""
    return max((order + shift) // 3, 1)


@functools.lru_cache(maxsize=None)
def ternary_tree_series(order: Order) -> TruncSeries:
    """
    The series t in x with [x^n] t = C(3n - 2, n - 1) / n.

    :param order: Truncation order N >= 0.
    """
    if order < 0:
        raise ValueError(f'Negative order: {order}')
    coeffs = [0] + [Fraction(math.comb(3 * n - 2, n - 1), n) for n in range(1, order + 1)]
    return TruncSeries(coeffs, order, 'x')


def ternary_tree_series_iterated(order: Order) -> TruncSeries:
    """
    The same series by the fixed-point iteration ``t <- x / (1 - t)^2``.

    Every round fixes one more coefficient.

    :param order: Truncation order N >= 0.
    """
    if order < 0:
        raise ValueError(f'Negative order: {order}')
    x = TruncSeries.variable(order, 'x')
    t = TruncSeries.constant(0, order, 'x')
    for _ in range(order):
        t = x / ((1 - t) * (1 - t))
    return t


def inversion_residual(order: Order) -> TruncSeries:
    """The series ``t (1 - t)^2 - x``; zero when t is right."""
    t = ternary_tree_series(order)
    return t * (1 - t) * (1 - t) - TruncSeries.variable(order, 'x')


def coeff_t_pow(n: int, k: int) -> Fraction:
    """
    [x^n] t^k = (k / n) C(3n - k - 1, n - k).

    :param n: Exponent of x.
    :param k: Power of t.
    """
    if n < 0 or k < 0:
        raise ValueError(f'Negative index: n={n}, k={k}')
    if n == 0:
        return Fraction(int(k == 0))
    if k == 0 or k > n:
        return Fraction(0)
    return Fraction(k * math.comb(3 * n - k - 1, n - k), n)


def coeff_t_pow_contour(n: int, k: int) -> Fraction:
    """
    [x^n] t^k = C(3n - k, n - k) - 3 C(3n - k - 1, n - k - 1), the form before simplification.

    :param n: Exponent of x, n >= 1.
    :param k: Power of t, k >= 1.
    """
    if n < 1 or k < 1:
        raise ValueError(f'Need n >= 1 and k >= 1: n={n}, k={k}')
    if k > n:
        return Fraction(0)
    second = math.comb(3 * n - k - 1, n - k - 1) if n > k else 0
    return Fraction(math.comb(3 * n - k, n - k) - 3 * second)


def t_power_series(k: int, order: Order) -> TruncSeries:
    """The x-series of t^k."""
    return ternary_tree_series(order) ** k


def binet_poly(k: int) -> Poly:
    """
    S_k(t) = (mu3^k - mu2^k) / (mu3 - mu2) as a polynomial in t.

    Uses mu2 + mu3 = 2 - t and mu2 mu3 = (1 - t)^2:
    S_k = (2 - t) S_(k-1) - (1 - t)^2 S_(k-2), S_0 = 0, S_1 = 1.

    :param k: Index k >= 0.
    """
    if k < 0:
        raise ValueError(f'Negative index: {k}')
    trace = Poly((2, -1), 't')
    norm = Poly((1, -2, 1), 't')
    prev, cur = Poly((), 't'), Poly((1,), 't')
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, trace * cur - norm * prev
    return cur


def girard_waring_poly(k: int) -> Poly:
    """
    Sum over i <= k/2 of (-1)^(i+k) C(k-i, i) (t-2)^(k-2i) (t-1)^(2i), expanded.

    Equals S_(k+1)(t).

    :param k: Index k >= 0.
    """
    if k < 0:
        raise ValueError(f'Negative index: {k}')
    t_minus_2 = Poly((-2, 1), 't')
    t_minus_1 = Poly((-1, 1), 't')
    res = Poly((), 't')
    for i in range(k // 2 + 1):
        sign = -1 if (i + k) % 2 else 1
        res = res + sign * math.comb(k - i, i) * t_minus_2 ** (k - 2 * i) * t_minus_1 ** (2 * i)
    return res


def f_series(k: int, order: Order) -> TruncSeries:
    """
    f_k = t^k / (z^k (1 - t)), the generating function of a(n, k).

    :param k: Height k >= 0.
    :param order: z-order N.
    """
    if k < 0:
        raise ValueError(f'Negative height: {k}')
    t = ternary_tree_series(_x_order(order, k))
    return (t ** k / (1 - t)).to_z(k, order)


def g_series(k: int, order: Order) -> TruncSeries:
    """
    g_k = t^(k+1) / z^(k+2), the generating function of b(n, k).

    :param k: Height k >= 0.
    :param order: z-order N.
    """
    if k < 0:
        raise ValueError(f'Negative height: {k}')
    t = ternary_tree_series(_x_order(order, k + 2))
    return (t ** (k + 1)).to_z(k + 2, order)


def psi_series(k: int, order: Order) -> TruncSeries:
    """
    psi_k = t^(k+1) S_(k+1)(t) / (z^(2k+1) (1 - t)), the generating function of d(n, k).

    :param k: Height k >= 0.
    :param order: z-order N.
    """
    if k < 0:
        raise ValueError(f'Negative height: {k}')
    shift = 2 * k + 1
    t = ternary_tree_series(_x_order(order, shift))
    return (t ** (k + 1) * binet_poly(k + 1).evaluate(t) / (1 - t)).to_z(shift, order)


def phi_series(k: int, order: Order) -> TruncSeries:
    """
    phi_k, the generating function of c(n, k).

    phi_0 = 1 / (1 - t), phi_1 = psi_0 / z and phi_k = psi_(k-1) / z - psi_(k-2).

    :param k: Height k >= 0.
    :param order: z-order N.
    """
    if k < 0:
        raise ValueError(f'Negative height: {k}')
    if k == 0:
        t = ternary_tree_series(_x_order(order, 0))
        return (1 / (1 - t)).to_z(0, order)
    res = psi_series(k - 1, order + 1).unshift(1)
    if k >= 2:
        res = res - psi_series(k - 2, order)
    return res


def series_for(which: str, k: int, order: Order) -> TruncSeries:
    """
    Dispatch by name.

    :param which: One of ``f``, ``g``, ``phi``, ``psi``, ``t``.
    :param k: Height (ignored for ``t``).
    :param order: Truncation order.
    """
    match which:
        case 'f':
            return f_series(k, order)
        case 'g':
            return g_series(k, order)
        case 'phi':
            return phi_series(k, order)
        case 'psi':
            return psi_series(k, order)
        case 't':
            return ternary_tree_series(order)
        case _:
            raise ValueError(f'Unknown series: {which}')


def _z(order: Order) -> TruncSeries:
    return TruncSeries.variable(order, 'z')


def _one_if(cond: bool, order: Order) -> TruncSeries:
    return TruncSeries.constant(int(cond), order, 'z')


def functional_equation_residual(k: int, order: Order) -> TruncSeries:
    """
    Residual of the equation for f_k with the g_k eliminated.

    For k >= 1: f_k - z^2 f_(k-1) - 2z f_(k+1) + z^2 f_(k+2).
    For k = 0 it is the first row of the system: f_0 - z f_1 - 1.

    :param k: Height k >= 0.
    :param order: z-order N.
    """
    z = _z(order)
    if k == 0:
        return f_series(0, order) - z * f_series(1, order) - 1
    return f_series(k, order) - z * z * f_series(k - 1, order) \
        - 2 * z * f_series(k + 1, order) + z * z * f_series(k + 2, order)


def system_residuals(k: int, order: Order) -> dict[str, TruncSeries]:
    """
    Residuals of both coupled systems of generating functions at height k.

    f_k = z g_(k-1) + z f_(k+1) + [k=0], g_k = z f_k + z g_(k+1),
    phi_k = z phi_(k-1) + z psi_k + [k=0], psi_k = z psi_(k-1) + z phi_(k+1),
    with everything at index -1 equal to 0.
    """
    z = _z(order)
    zero = TruncSeries.constant(0, order, 'z')

    def below(series, j):
        return series(j, order) if j >= 0 else zero

    return {
        'f': f_series(k, order) - z * below(g_series, k - 1) - z * f_series(k + 1, order) - _one_if(k == 0, order),
        'g': g_series(k, order) - z * f_series(k, order) - z * g_series(k + 1, order),
        'phi': phi_series(k, order) - z * below(phi_series, k - 1) - z * psi_series(k, order)
        - _one_if(k == 0, order),
        'psi': psi_series(k, order) - z * below(psi_series, k - 1) - z * phi_series(k + 1, order),
    }


def consistency_residuals(k: int, order: Order) -> dict[str, TruncSeries]:
    """
    Residuals of z g_k = f_(k+1) - z f_(k+2) and phi_0 = 1 + z psi_0.

    :param k: Height used in the first identity.
    :param order: z-order N.
    """
    z = _z(order)
    return {
        'zg': z * g_series(k, order) - f_series(k + 1, order) + z * f_series(k + 2, order),
        'phi0': phi_series(0, order) - 1 - z * psi_series(0, order),
    }
