"""
Binomial closed forms for the counts of the four families.

Each count is a coefficient of a power of t, read off with Lagrange
inversion. Residue tests come first, so every division by 3 is exact.
"""

import math
import functools

from .paths import FamilyTag

# Typing
Count = int


def binom_safe(m: int, r: int) -> int:
    """
    C(m, r), extended by 0 for r < 0 and r > m.

    :param m: Upper index, m >= 0.
    :param r: Lower index.
    :raise ValueError: If ``m`` is negative.
    """
    if m < 0:
        raise ValueError(f'Negative upper index: C({m}, {r})')
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)


def residue_domain(family: FamilyTag, n: int, k: int) -> bool:
    """
    Whether ``(n, k)`` can carry a nonzero count of ``family``.

    A: n = 2k, B: n = 2k + 1, C: n = k, D: n = k - 1, all mod 3,
    plus the length bounds n >= k (n >= 2k + 1 for B).
    """
    if n < 0 or k < 0 or n < k:
        return False
    match family:
        case FamilyTag.A:
            return (n - 2 * k) % 3 == 0
        case FamilyTag.B:
            return n >= 2 * k + 1 and (n - 2 * k - 1) % 3 == 0
        case FamilyTag.C:
            return (n - k) % 3 == 0
        case FamilyTag.D:
            return (n - k + 1) % 3 == 0


def _extract(top: int, m: int) -> Count:
    """C(top + 1, m) - 3 C(top, m - 1), the shape every extraction takes."""
    return binom_safe(top + 1, m) - 3 * binom_safe(top, m - 1)


def a_closed(n: int, k: int) -> Count:
    """
    a(n, k) = C(n+1, m) - 3 C(n, m-1) with m = (n - 2k) / 3.

    :param n: Length.
    :param k: Final height.
    """
    if not residue_domain(FamilyTag.A, n, k):
        return 0
    return _extract(n, (n - 2 * k) // 3)


def a_printed(n: int, k: int) -> Count:
    """
    a(n, k) as C(n+1, m-1) - 3 C(n, m-2), shifted by one.

    Disagrees with the counts, e.g. 0 at (0, 0) and 4 at (6, 0).
    """
    if not residue_domain(FamilyTag.A, n, k):
        return 0
    m = (n - 2 * k) // 3
    return binom_safe(n + 1, m - 1) - 3 * binom_safe(n, m - 2)


def b_closed(n: int, k: int) -> Count:
    """
    b(n, k) = C(n+1, m) - 3 C(n, m-1) with m = (n - 2k - 1) / 3.

    :param n: Length.
    :param k: Final height.
    """
    if not residue_domain(FamilyTag.B, n, k):
        return 0
    return _extract(n, (n - 2 * k - 1) // 3)


def _d_sum(n: int, k: int, second_top) -> Count:
    q = (n - k + 1) // 3 - 1
    # extraction[M + 1] for M = -1 .. k - 1
    extraction = [binom_safe(n + k - big_m, q) - 3 * binom_safe(second_top(big_m), q - 1)
                  for big_m in range(-1, k)]
    res = 0
    for i in range(k // 2 + 1):
        # (-1)^(i+j+1) (-1)^M with M = 2i + j - 1 is (-1)^i
        inner = sum(math.comb(k - 2 * i, j) * extraction[2 * i + j] for j in range(k - 2 * i + 1))
        res += (-1) ** i * math.comb(k - i, i) * inner
    return res


@functools.lru_cache(maxsize=None)
def d_closed(n: int, k: int) -> Count:
    """
    d(n, k) as a double sum over the expansion of S_(k+1)(t) around t = 1.

    Each term is [z^(n+2k+1)] t^(k+1) (t - 1)^M with M = 2i + j - 1, i.e.
    (-1)^M (C(n+k-M, q) - 3 C(n+k-M-1, q-1)) with q = (n - k + 1) / 3 - 1.

    :param n: Length.
    :param k: Final height.
    """
    if not residue_domain(FamilyTag.D, n, k):
        return 0
    return _d_sum(n, k, lambda big_m: n + k - big_m - 1)


def d_printed(n: int, k: int) -> Count:
    """
    d(n, k) with n - k - M - 1 as the upper index of the second binomial.

    Disagrees with the counts, e.g. 55 instead of 43 at (9, 1).

    :raise ValueError: When that upper index turns negative.
    """
    if not residue_domain(FamilyTag.D, n, k):
        return 0
    return _d_sum(n, k, lambda big_m: n - k - big_m - 1)


def c_closed(n: int, k: int) -> Count:
    """
    c(n, k) through phi_k = psi_(k-1) / z - psi_(k-2).

    :param n: Length.
    :param k: Final height.
    """
    if not residue_domain(FamilyTag.C, n, k):
        return 0
    if k == 0:
        return a_closed(n, 0)
    if k == 1:
        return d_closed(n + 1, 0)
    return d_closed(n + 1, k - 1) - d_closed(n, k - 2)


CLOSED_FORMS = {
    FamilyTag.A: a_closed,
    FamilyTag.B: b_closed,
    FamilyTag.C: c_closed,
    FamilyTag.D: d_closed,
}
