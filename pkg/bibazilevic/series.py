"""
Truncated power series with complex coefficients.

A series is known up to its truncation order; coefficients beyond the order are unknown
(not zero). Binary operations therefore return the smaller order of their operands and
never pad with zeros.

Two coefficient modes exist:

- exact: coefficients are `GaussianRational` (real and imaginary part are fractions),
  every operation is closed over the rationals
- floating: coefficients are python `complex`

The only conversion between them is `TruncSeries.to_floating()`.
"""

import enum
import fractions
import numbers
import typing as t


class Mode(enum.Enum):
    """Coefficient arithmetic of a series"""
    EXACT = 'exact'
    FLOATING = 'floating'


class SeriesError(ValueError):
    """Base class for violated series preconditions"""


class ModeMismatch(SeriesError):
    """Operands use different coefficient modes"""


class ConstantTermError(SeriesError):
    """A constant term precondition (c0 = 0, c0 = 1 or c0 != 0) is violated"""


class OrderError(SeriesError):
    """The truncation order is too small for the operation"""


Rational = t.Union[int, fractions.Fraction]


class GaussianRational:
    """
    A complex number with rational real and imaginary part

    Args:
        real: The real part
        imag: The imaginary part
    """
    __slots__ = ('real', 'imag')

    def __init__(self, real: Rational = 0, imag: Rational = 0) -> None:
        if not isinstance(real, numbers.Rational) or not isinstance(imag, numbers.Rational):
            raise TypeError(f'Gaussian rationals need rational parts, got {real!r} and {imag!r}')
        self.real = fractions.Fraction(real)
        self.imag = fractions.Fraction(imag)

    @classmethod
    def coerce(cls, value) -> 'GaussianRational':
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, numbers.Rational):
            return cls(value)
        raise TypeError(f'Can not use {value!r} as an exact coefficient')

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational(self.real, -self.imag)

    def abs_squared(self) -> fractions.Fraction:
        return self.real * self.real + self.imag * self.imag

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.real * other.real - self.imag * other.imag,
                                self.real * other.imag + self.imag * other.real)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        norm = other.abs_squared()
        if norm == 0:
            raise ZeroDivisionError('division by the Gaussian rational 0')
        numerator = self * other.conjugate()
        return GaussianRational(numerator.real / norm, numerator.imag / norm)

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self ** -exponent)
        result = GaussianRational(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __pos__(self):
        return self

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    def __hash__(self):
        return hash(self.real) if self.imag == 0 else hash((self.real, self.imag))

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    def __repr__(self):
        return f'GaussianRational({self.real}, {self.imag})'

    def __str__(self):
        if self.imag == 0:
            return str(self.real)
        sign = '+' if self.imag >= 0 else '-'
        return f'{self.real}{sign}{abs(self.imag)}i'


def _is_floating_value(value) -> bool:
    return isinstance(value, (float, complex)) and not isinstance(value, numbers.Rational)


def coerce_coefficient(value, mode: Mode):
    """Converts a scalar into the coefficient type of `mode`"""
    if mode is Mode.EXACT:
        if _is_floating_value(value):
            raise ModeMismatch(f'Floating value {value!r} in an exact series')
        return GaussianRational.coerce(value)
    return complex(value)


def infer_mode(values: t.Iterable) -> Mode:
    """Floating as soon as one value is a float or complex, exact otherwise"""
    return Mode.FLOATING if any(_is_floating_value(value) for value in values) else Mode.EXACT


class TruncSeries:
    """
    A power series c_0 + c_1 z + ... + c_N z^N known up to the order N

    Args:
        coeffs: The coefficients c_0..c_N
        mode: The coefficient mode, inferred from the coefficients when not given
        order: When given, coefficients are truncated or padded with zeros to this order
    """
    __slots__ = ('coeffs', 'mode')

    def __init__(self, coeffs: t.Sequence, mode: t.Optional[Mode] = None, order: t.Optional[int] = None) -> None:
        coeffs = list(coeffs)
        if order is not None:
            if order < 0:
                raise OrderError(f'Invalid order {order}')
            coeffs = (coeffs + [0] * (order + 1 - len(coeffs)))[:order + 1]
        if not coeffs:
            raise OrderError('A series needs at least a constant term')
        self.mode: Mode = mode or infer_mode(coeffs)
        self.coeffs: t.Tuple = tuple(coerce_coefficient(c, self.mode) for c in coeffs)

    @classmethod
    def constant(cls, value, order: int, mode: Mode = Mode.EXACT) -> 'TruncSeries':
        return cls([value], mode=mode, order=order)

    @classmethod
    def identity(cls, order: int, mode: Mode = Mode.EXACT) -> 'TruncSeries':
        """The series z"""
        return cls([0, 1], mode=mode, order=order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_exact(self) -> bool:
        return self.mode is Mode.EXACT

    def to_floating(self) -> 'TruncSeries':
        return TruncSeries([complex(c) for c in self.coeffs], mode=Mode.FLOATING)

    def truncate(self, order: int) -> 'TruncSeries':
        if order > self.order:
            raise OrderError(f'Can not truncate a series of order {self.order} to order {order}')
        return self._new(self.coeffs[:order + 1])

    def _new(self, coeffs) -> 'TruncSeries':
        return TruncSeries(coeffs, mode=self.mode)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.mode is other.mode and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.mode, self.coeffs))

    def __repr__(self):
        return f'<{self.__class__.__name__} {self.mode.value} order={self.order} [{", ".join(map(str, self.coeffs))}]>'

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            return add(self, other)
        return add(self, TruncSeries.constant(other, self.order, self.mode))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            return sub(self, other)
        return sub(self, TruncSeries.constant(other, self.order, self.mode))

    def __rsub__(self, other):
        return sub(TruncSeries.constant(other, self.order, self.mode), self)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return divide(self, other)
        return scale(self, 1 / coerce_coefficient(other, self.mode))

    def __call__(self, inner: 'TruncSeries') -> 'TruncSeries':
        return compose(self, inner)


class NormalizedSeries(TruncSeries):
    """A series z + a_2 z^2 + a_3 z^3 + ... with c_0 = 0 and c_1 = 1"""
    __slots__ = ()

    def __init__(self, coeffs: t.Sequence, mode: t.Optional[Mode] = None, order: t.Optional[int] = None) -> None:
        super().__init__(coeffs, mode=mode, order=order)
        if self.order < 1 or self.coeffs[0] != 0 or self.coeffs[1] != 1:
            raise ConstantTermError(f'Not normalized (c0 = 0, c1 = 1): {self!r}')

    @classmethod
    def from_coefficients(cls, tail: t.Sequence, mode: t.Optional[Mode] = None) -> 'NormalizedSeries':
        """z + tail[0] z^2 + tail[1] z^3 + ..."""
        return cls([0, 1] + list(tail), mode=mode)

    @classmethod
    def of(cls, series: TruncSeries) -> 'NormalizedSeries':
        return cls(series.coeffs, mode=series.mode)

    def _new(self, coeffs) -> TruncSeries:
        return TruncSeries(coeffs, mode=self.mode)


def _check_modes(*series: TruncSeries) -> Mode:
    modes = {s.mode for s in series}
    if len(modes) > 1:
        raise ModeMismatch(f'Mixed coefficient modes: {", ".join(sorted(m.value for m in modes))}')
    return series[0].mode


def _zero(mode: Mode):
    return coerce_coefficient(0, mode)


def add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    mode = _check_modes(a, b)
    order = min(a.order, b.order)
    return TruncSeries([a[n] + b[n] for n in range(order + 1)], mode=mode)


def sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    mode = _check_modes(a, b)
    order = min(a.order, b.order)
    return TruncSeries([a[n] - b[n] for n in range(order + 1)], mode=mode)


def scale(a: TruncSeries, factor) -> TruncSeries:
    factor = coerce_coefficient(factor, a.mode)
    return TruncSeries([factor * c for c in a], mode=a.mode)


def mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product, c_n = sum_j a_j b_(n-j)"""
    mode = _check_modes(a, b)
    order = min(a.order, b.order)
    coeffs = []
    for n in range(order + 1):
        total = _zero(mode)
        for j in range(n + 1):
            total = total + a[j] * b[n - j]
        coeffs.append(total)
    return TruncSeries(coeffs, mode=mode)


def hadamard(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Coefficient-wise (Hadamard) product, the convolution of analytic functions"""
    mode = _check_modes(a, b)
    order = min(a.order, b.order)
    return TruncSeries([a[n] * b[n] for n in range(order + 1)], mode=mode)


def derivative(s: TruncSeries) -> TruncSeries:
    if s.order < 1:
        raise OrderError('The derivative of an order 0 series is unknown')
    return TruncSeries([(n + 1) * s[n + 1] for n in range(s.order)], mode=s.mode)


def shift_down(s: TruncSeries) -> TruncSeries:
    """s(z) / z for a series without constant term, the order decreases by 1"""
    if s[0] != 0:
        raise ConstantTermError(f'Can not divide by z, constant term is {s[0]}')
    if s.order < 1:
        raise OrderError('Can not divide an order 0 series by z')
    return TruncSeries(s.coeffs[1:], mode=s.mode)


def divide(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """The quotient q with q * b = a up to the common order"""
    mode = _check_modes(a, b)
    if b[0] == 0:
        raise ConstantTermError('Division by a series with zero constant term')
    order = min(a.order, b.order)
    quotient = []
    for n in range(order + 1):
        value = a[n]
        for j in range(1, n + 1):
            value = value - b[j] * quotient[n - j]
        quotient.append(value / b[0])
    return TruncSeries(quotient, mode=mode)


def pow_real(s: TruncSeries, exponent) -> TruncSeries:
    """
    (1 + u)^e for a series s = 1 + u

    Uses the recurrence n t_n = sum_(k=1..n) (e k - (n - k)) s_k t_(n-k) that follows from
    s t' = e s' t. In exact mode the exponent has to be rational.
    """
    if s[0] != 1:
        raise ConstantTermError(f'pow_real needs constant term 1, got {s[0]}')
    if s.is_exact:
        if not isinstance(exponent, numbers.Rational):
            raise ModeMismatch(f'Exact powers need a rational exponent, got {exponent!r}')
        exponent = fractions.Fraction(exponent)
    else:
        exponent = float(exponent)

    result = [coerce_coefficient(1, s.mode)]
    for n in range(1, s.order + 1):
        total = _zero(s.mode)
        for k in range(1, n + 1):
            total = total + coerce_coefficient(exponent * k - (n - k), s.mode) * s[k] * result[n - k]
        result.append(total / n if s.is_exact else total / float(n))
    return TruncSeries(result, mode=s.mode)


def compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(z)) by Horner's scheme, inner must vanish at 0"""
    mode = _check_modes(outer, inner)
    if inner[0] != 0:
        raise ConstantTermError(f'The inner series of a composition needs constant term 0, got {inner[0]}')
    order = min(outer.order, inner.order)
    inner = inner.truncate(order)
    result = TruncSeries.constant(outer[order], order, mode)
    for j in range(order - 1, -1, -1):
        result = mul(result, inner) + TruncSeries.constant(outer[j], order, mode)
    return result


def invert(f: NormalizedSeries) -> NormalizedSeries:
    """
    Compositional inverse g with f(g(w)) = w by Lagrange inversion:
    g_n = 1/n [z^(n-1)] (z / f(z))^n
    """
    if f.order < 2:
        raise OrderError(f'Series reversion needs order >= 2, got {f.order}')
    quotient = shift_down(f)  # f(z)/z = 1 + a_2 z + ...
    coeffs = [_zero(f.mode), coerce_coefficient(1, f.mode)]
    for n in range(2, f.order + 1):
        power = pow_real(quotient.truncate(n - 1), -n)
        coeffs.append(power[n - 1] / n if f.is_exact else power[n - 1] / float(n))
    return NormalizedSeries(coeffs, mode=f.mode)


def residual(a: TruncSeries, b: TruncSeries):
    """
    The largest coefficient difference up to the common order.

    Exact series yield the rational max(|Re d|, |Im d|), which is 0 exactly when the
    series agree; floating series yield the largest modulus.
    """
    return max(magnitude(c) for c in sub(a, b))


def magnitude(value):
    """max(|Re|, |Im|) of a Gaussian rational, which is 0 exactly for 0, and |value| otherwise"""
    if isinstance(value, GaussianRational):
        return max(abs(value.real), abs(value.imag))
    return abs(value)
