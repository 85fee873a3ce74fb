"""Exact polynomials and truncated power series."""

import operator
from fractions import Fraction

# Typing
Exponent = int
Order = int
Variable = str

SERIES_OPS = {
    'add': operator.add,
    'mul': operator.mul,
    'div_unit': lambda a, b: a.div_unit(b),
}


def _check_var(lhs: Variable, rhs: Variable):
    if lhs != rhs:
        raise ValueError(f'Variable mismatch: {lhs} and {rhs}')


class Poly:
    """
    Dense univariate polynomial with exact integer coefficients.

    Coefficients are stored from the constant term upwards, trailing zeros
    are stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ('coeffs', 'var')

    def __init__(self, coeffs=(), var: Variable = 'z'):
        """
        Construct a polynomial.

        :param coeffs: Coefficients, constant term first.
        :param var: Name of the variable.
        """
        coeffs = list(coeffs)
        assert all(isinstance(c, int) for c in coeffs), coeffs
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def monomial(cls, power: Exponent, coeff: int = 1, var: Variable = 'z') -> 'Poly':
        """Return ``coeff * var**power``."""
        if power < 0:
            raise ValueError(f'Negative power: {power}')
        return cls([0] * power + [coeff], var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        """Whether the polynomial is zero."""
        return not self.coeffs

    def coefficient(self, power: Exponent) -> int:
        """Coefficient of ``var**power`` (0 outside the stored range)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def _coerce(self, other) -> 'Poly':
        if isinstance(other, Poly):
            _check_var(self.var, other.var)
            return other
        if isinstance(other, int):
            return Poly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        """Return the sum."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coefficient(i) + other.coefficient(i) for i in range(size)], self.var)

    __radd__ = __add__

    def __neg__(self):
        """Return the negation."""
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        """Return the difference."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        """Return the difference with a scalar on the left."""
        return (-self) + other

    def __mul__(self, other):
        """Return the product."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Poly((), self.var)
        res = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    res[i + j] += a * b
        return Poly(res, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        """Return a non-negative power by repeated squaring."""
        if exponent < 0:
            raise ValueError(f'Negative exponent: {exponent}')
        res = Poly((1,), self.var)
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            base = base * base
            exponent >>= 1
        return res

    def shift(self, power: Exponent) -> 'Poly':
        """Multiply by ``var**power``."""
        if power < 0:
            raise ValueError(f'Negative shift: {power}')
        if self.is_zero():
            return self
        return Poly([0] * power + list(self.coeffs), self.var)

    def exquo(self, divisor: 'Poly') -> 'Poly':
        """
        Exact quotient in Z[var].

        :param divisor: Nonzero polynomial that divides ``self``.
        :return: Quotient polynomial.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError('Polynomial division by zero')
        if self.is_zero():
            return self
        if self.degree < divisor.degree:
            raise ArithmeticError(f'{divisor} does not divide {self}')
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        quot = [0] * (self.degree - divisor.degree + 1)
        for i in range(len(quot) - 1, -1, -1):
            q, r = divmod(rem[i + divisor.degree], lead)
            if r:
                raise ArithmeticError(f'{divisor} does not divide {self}')
            quot[i] = q
            if q:
                for j, b in enumerate(divisor.coeffs):
                    rem[i + j] -= q * b
        if any(rem):
            raise ArithmeticError(f'{divisor} does not divide {self}')
        return Poly(quot, self.var)

    def evaluate(self, value):
        """
        Evaluate by Horner's rule.

        Works for anything supporting ``*`` and ``+`` with integers: ints,
        fractions, floats, polynomials and truncated series.
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: 'Poly') -> 'Poly':
        """Return ``self(inner)``, a polynomial in the variable of ``inner``."""
        res = Poly((), inner.var)
        for c in reversed(self.coeffs):
            res = res * inner + c
        return res

    def in_cube(self, var: Variable = 'x') -> 'Poly':
        """
        Rewrite a polynomial in ``var**3`` as a polynomial in a new variable.

        :param var: Name of the new variable standing for the cube.
        :return: Polynomial ``q`` with ``self(z) == q(z**3)``.
        """
        stray = [i for i, c in enumerate(self.coeffs) if c and i % 3]
        if stray:
            raise ValueError(f'{self} is not a polynomial in {self.var}^3')
        return Poly(self.coeffs[::3], var)

    def __eq__(self, other):
        """Compare by value."""
        if isinstance(other, int):
            other = Poly((other,), self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        """Return hash consistent with equality."""
        return hash((self.var, self.coeffs))

    def __str__(self) -> str:
        """Return user-friendly string representation."""
        if self.is_zero():
            return '0'
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                mono = ''
            elif power == 1:
                mono = self.var
            else:
                mono = f'{self.var}^{power}'
            size = abs(c)
            body = mono if size == 1 and mono else f'{size}{mono}'
            sign = '-' if c < 0 else '+'
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text

    def __repr__(self) -> str:
        """Return technical string representation."""
        return f'Poly({self.coeffs}, {self.var!r})'


class TruncSeries:
    """
    Power series with exact rational coefficients known up to ``order``.

    Results of arithmetic are known only up to the smaller order of the
    operands; coefficients beyond ``order`` are never read.
    """

    __slots__ = ('coeffs', 'order', 'var')

    def __init__(self, coeffs, order: Order, var: Variable = 'z'):
        """
        Construct a truncated series.

        :param coeffs: Coefficients, constant term first; padded with zeros
            or cut to ``order + 1`` entries.
        :param order: Truncation bound N, the highest known exponent.
        :param var: Name of the variable (``z`` or ``x`` where x = z^3).
        """
        if order < 0:
            raise ValueError(f'Negative order: {order}')
        coeffs = [Fraction(c) for c in list(coeffs)[:order + 1]]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.var = var

    @classmethod
    def from_poly(cls, poly: Poly, order: Order) -> 'TruncSeries':
        """Truncate a polynomial to a series."""
        return cls(poly.coeffs, order, poly.var)

    @classmethod
    def constant(cls, value, order: Order, var: Variable = 'z') -> 'TruncSeries':
        """Constant series."""
        return cls((value,), order, var)

    @classmethod
    def variable(cls, order: Order, var: Variable = 'z') -> 'TruncSeries':
        """The series consisting of the variable itself."""
        return cls((0, 1), order, var)

    def coefficient(self, power: Exponent) -> Fraction:
        """
        Coefficient of ``var**power``.

        :raise IndexError: If ``power`` exceeds the truncation order.
        """
        if power > self.order:
            raise IndexError(f'Coefficient {power} is beyond order {self.order}')
        if power < 0:
            return Fraction(0)
        return self.coeffs[power]

    __getitem__ = coefficient

    def _coerce(self, other) -> 'TruncSeries':
        if isinstance(other, TruncSeries):
            _check_var(self.var, other.var)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries.constant(other, self.order, self.var)
        return NotImplemented

    def __add__(self, other):
        """Return the sum."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], order, self.var)

    __radd__ = __add__

    def __neg__(self):
        """Return the negation."""
        return TruncSeries([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        """Return the difference."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        """Return the difference with a scalar on the left."""
        return (-self) + other

    def __mul__(self, other):
        """Return the product."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        res = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    res[i + j] += a * b
        return TruncSeries(res, order, self.var)

    __rmul__ = __mul__

    def div_unit(self, other) -> 'TruncSeries':
        """
        Divide by a series with nonzero constant term.

        :raise ZeroDivisionError: If the divisor is not a unit.
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f'Cannot divide a series by {other!r}')
        if other.coeffs[0] == 0:
            raise ZeroDivisionError('Divisor has zero constant term')
        order = min(self.order, other.order)
        res = []
        for n in range(order + 1):
            acc = self.coeffs[n] - sum(other.coeffs[j] * res[n - j] for j in range(1, n + 1))
            res.append(acc / other.coeffs[0])
        return TruncSeries(res, order, self.var)

    __truediv__ = div_unit

    def __rtruediv__(self, other):
        """Divide a scalar by the series."""
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return TruncSeries.constant(other, self.order, self.var).div_unit(self)

    def __pow__(self, exponent: int):
        """Return a non-negative power by repeated squaring."""
        if exponent < 0:
            raise ValueError(f'Negative exponent: {exponent}')
        res = TruncSeries.constant(1, self.order, self.var)
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            base = base * base
            exponent >>= 1
        return res

    def shift(self, power: Exponent) -> 'TruncSeries':
        """Multiply by ``var**power``, keeping the order."""
        if power < 0:
            raise ValueError(f'Negative shift: {power}')
        return TruncSeries([0] * power + list(self.coeffs), self.order, self.var)

    def unshift(self, power: Exponent) -> 'TruncSeries':
        """
        Divide by ``var**power``; the order drops by ``power``.

        :raise ValueError: If a coefficient below ``power`` is nonzero.
        """
        if power > self.order:
            raise ValueError(f'Cannot unshift {power} from a series of order {self.order}')
        if any(self.coeffs[:power]):
            raise ValueError(f'Series is not divisible by {self.var}^{power}')
        return TruncSeries(self.coeffs[power:], self.order - power, self.var)

    def truncate(self, order: Order) -> 'TruncSeries':
        """Forget coefficients above ``order``."""
        if order > self.order:
            raise ValueError(f'Cannot extend order {self.order} to {order}')
        return TruncSeries(self.coeffs, order, self.var)

    def to_z(self, shift: int, order: Order) -> 'TruncSeries':
        """
        Convert ``X(x) / z**shift`` with ``x = z**3`` to a z-series.

        The coefficient of ``z**n`` is the coefficient of ``x**((n + shift) / 3)``
        when the exponent is integral and zero otherwise, so the support sits on
        a single residue class mod 3.

        :param shift: Power of z to divide by (may be negative).
        :param order: Order of the resulting z-series.
        """
        if self.var != 'x':
            raise ValueError(f'Expected a series in x, got one in {self.var}')
        top = (order + shift) // 3
        if top > self.order:
            raise ValueError(f'x-series of order {self.order} is too short for z-order {order}')
        # No negative powers of z may survive the shift
        for m in range(0, self.order + 1):
            if 3 * m >= shift:
                break
            if self.coeffs[m]:
                raise ValueError(f'Term x^{m} would become z^{3 * m - shift}')
        res = []
        for n in range(order + 1):
            e = n + shift
            res.append(self.coeffs[e // 3] if e >= 0 and e % 3 == 0 else 0)
        return TruncSeries(res, order, 'z')

    def is_zero(self) -> bool:
        """Whether all known coefficients vanish."""
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        """Whether all known coefficients are non-negative integers."""
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs)

    def nonzero_terms(self) -> list[tuple[Exponent, Fraction]]:
        """List of ``(exponent, coefficient)`` with nonzero coefficient."""
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        """Compare by value."""
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.var, self.order, self.coeffs) == (other.var, other.order, other.coeffs)

    def __hash__(self):
        """Return hash consistent with equality."""
        return hash((self.var, self.order, self.coeffs))

    def __str__(self) -> str:
        """Return user-friendly string representation."""
        terms = [f'{c}*{self.var}^{i}' for i, c in self.nonzero_terms()]
        return ' + '.join(terms + [f'O({self.var}^{self.order + 1})'])

    def __repr__(self) -> str:
        """Return technical string representation."""
        return f'TruncSeries({[str(c) for c in self.coeffs]}, {self.order}, {self.var!r})'


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    """
    Apply a ring operation to two truncated series.

    :param a: Left operand.
    :param b: Right operand, same variable as ``a``.
    :param op: One of ``add``, ``mul``, ``div_unit``.
    :return: Result truncated to the smaller order.
    """
    if op not in SERIES_OPS:
        raise ValueError(f'Unknown series operation: {op}')
    _check_var(a.var, b.var)
    return SERIES_OPS[op](a, b)
