"""
Exact Gaussian-rational arithmetic.

Every coordinate, coefficient and approximation in the toolkit is a
GaussianRational: a complex number a + b*i with arbitrary-precision rational
parts. Nothing is ever rounded except through truncate_decimal.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.utils.errors import ParseError, PreconditionError

Number = Union[int, Fraction, "GaussianRational"]

_TERM_PATTERN = re.compile(r"[+-]?[^+-]+")


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """Immutable exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: Number) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    # Arithmetic

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re + other, self.im)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re - other, self.im)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GaussianRational(other - self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self.re * other, self.im * other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            if other == 0:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return GaussianRational(self.re / other, self.im / other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # Comparison

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def sort_key(self):
        """Lexicographic (re, im) key used for ordering points and strings."""
        return (self.re, self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)})"

    def __str__(self):
        return format_gaussian(self)


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def gauss_norm(z: GaussianRational) -> Fraction:
    """Squared modulus re(z)^2 + im(z)^2, the exact surrogate for |z|^2."""
    return z.re * z.re + z.im * z.im


def max_component(z: GaussianRational) -> Fraction:
    """max(|re z|, |im z|), a modulus surrogate within a factor sqrt(2) of |z|."""
    return max(abs(z.re), abs(z.im))


def _round_half_away(value: Fraction) -> int:
    magnitude = (abs(value.numerator) * 2 + value.denominator) // (2 * value.denominator)
    return magnitude if value >= 0 else -magnitude


def truncate_decimal(z: GaussianRational, k: int) -> GaussianRational:
    """
    Round both parts of z to the nearest integer multiple of 10^k.

    Ties are rounded away from zero.

    Args:
        z: Value to truncate
        k: Decimal exponent of the quantum (negative for fractional digits)

    Returns:
        GaussianRational whose parts are multiples of 10^k
    """
    quantum = Fraction(10) ** k
    return GaussianRational(
        _round_half_away(z.re / quantum) * quantum,
        _round_half_away(z.im / quantum) * quantum,
    )


def floor_log10(q: Fraction) -> int:
    """
    Exact floor(log10(q)) for a positive rational.

    Estimated from bit lengths, then corrected with integer comparisons.

    Raises:
        PreconditionError: If q is not positive
    """
    q = Fraction(q)
    if q <= 0:
        raise PreconditionError(f"floor_log10 requires a positive rational, got {q}")
    num, den = q.numerator, q.denominator
    # log10(2) ~ 30103/100000
    e = (num.bit_length() - den.bit_length()) * 30103 // 100000

    def at_least(k: int) -> bool:
        """q >= 10^k"""
        return num >= den * 10 ** k if k >= 0 else num * 10 ** -k >= den

    while not at_least(e):
        e -= 1
    while at_least(e + 1):
        e += 1
    return e


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text form: `a/b`, `c/d*I` or `a/b + c/d*I`."""
    if z.im == 0:
        return str(z.re)
    if z.im == 1:
        imag = "I"
    elif z.im == -1:
        imag = "-I"
    else:
        imag = f"{z.im}*I"
    if z.re == 0:
        return imag
    if imag.startswith("-"):
        return f"{z.re} - {imag[1:]}"
    return f"{z.re} + {imag}"


def parse_gaussian(text: str) -> GaussianRational:
    """
    Parse the `a/b + c/d*I` syntax (signs optional, `3` for `3/1`, `I` alone allowed).

    Raises:
        ParseError: If the text is not a Gaussian rational
    """
    compact = text.replace(" ", "")
    while compact.startswith("(") and compact.endswith(")"):
        compact = compact[1:-1]
    if not compact:
        raise ParseError(f"empty Gaussian rational: {text!r}")
    re_part = Fraction(0)
    im_part = Fraction(0)
    terms = _TERM_PATTERN.findall(compact)
    if "".join(terms) != compact:
        raise ParseError(f"malformed Gaussian rational: {text!r}")
    for term in terms:
        try:
            if term.endswith("I"):
                coefficient = term[:-1].rstrip("*")
                if coefficient in ("", "+"):
                    im_part += 1
                elif coefficient == "-":
                    im_part -= 1
                else:
                    im_part += Fraction(coefficient)
            else:
                re_part += Fraction(term)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed Gaussian rational {text!r}: {exc}") from exc
    return GaussianRational(re_part, im_part)
