"""
Sparse Multivariate Polynomials over Q(i)

MultiPoly stores a map from exponent tuples (aligned with an ordered variable
list) to nonzero GaussianRational coefficients. Terms are ordered graded
lexicographically; printing lists the largest monomial first.
"""
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.numerics.gaussian import (
    ONE,
    ZERO,
    GaussianRational,
    format_gaussian,
)
from src.utils.errors import ParseError, PreconditionError

Exponent = Tuple[int, ...]

_TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<number>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))"
)


def grlex_key(exponent: Exponent) -> Tuple[int, Exponent]:
    return (sum(exponent), exponent)


class MultiPoly:
    """Polynomial in an ordered list of variables with Gaussian-rational coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponent, object]] = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        self.terms: Dict[Exponent, GaussianRational] = {}
        width = len(self.variables)
        if terms:
            for exponent, coefficient in terms.items():
                if len(exponent) != width:
                    raise PreconditionError(
                        f"exponent {exponent} does not match variables {self.variables}"
                    )
                value = GaussianRational.coerce(coefficient)
                if value:
                    self.terms[tuple(exponent)] = value

    # Constructors

    @classmethod
    def constant(cls, value, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise PreconditionError(f"unknown variable {name!r}; expected one of {variables}")
        exponent = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exponent: ONE})

    @classmethod
    def from_dense(cls, coefficients: Sequence, var: str, variables: Sequence[str] = None) -> "MultiPoly":
        """Build a univariate polynomial from coefficients listed lowest degree first."""
        variables = tuple(variables or (var,))
        position = variables.index(var)
        terms = {}
        for k, c in enumerate(coefficients):
            exponent = [0] * len(variables)
            exponent[position] = k
            terms[tuple(exponent)] = c
        return cls(variables, terms)

    def _raw(self, terms: Dict[Exponent, GaussianRational]) -> "MultiPoly":
        result = MultiPoly.__new__(MultiPoly)
        result.variables = self.variables
        result.terms = terms
        return result

    # Basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        zero = (0,) * len(self.variables)
        return all(e == zero for e in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * len(self.variables), ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        """Degree in var; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        position = self._index(var)
        return max(e[position] for e in self.terms)

    def used_variables(self) -> List[str]:
        return [v for i, v in enumerate(self.variables) if any(e[i] for e in self.terms)]

    def sorted_terms(self) -> List[Tuple[Exponent, GaussianRational]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, GaussianRational]:
        exponent = max(self.terms, key=grlex_key)
        return exponent, self.terms[exponent]

    def _index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise PreconditionError(f"variable {var!r} not in {self.variables}") from None

    # Arithmetic

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.variables != other.variables:
            raise PreconditionError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )

    def _lift(self, other) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return MultiPoly.constant(other, self.variables)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            value = terms.get(exponent, ZERO) + coefficient
            if value:
                terms[exponent] = value
            else:
                terms.pop(exponent, None)
        return self._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        terms: Dict[Exponent, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                value = terms.get(exponent)
                terms[exponent] = c1 * c2 if value is None else value + c1 * c2
        return self._raw({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = MultiPoly.constant(1, self.variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor) -> "MultiPoly":
        factor = GaussianRational.coerce(factor)
        if not factor:
            return self._raw({})
        return self._raw({e: c * factor for e, c in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(GaussianRational.coerce(other).inverse())
        if isinstance(other, MultiPoly):
            return self.divide_exact(other)
        return NotImplemented

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """
        Exact division; the divisor must divide self.

        Raises:
            ZeroDivisionError: If divisor is zero
            PreconditionError: If the division leaves a remainder
        """
        self._check_compatible(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if divisor.is_constant():
            return self.scale(divisor.constant_term().inverse())
        lead_exp, lead_coef = divisor.leading_term()
        lead_inv = lead_coef.inverse()
        remainder = dict(self.terms)
        quotient: Dict[Exponent, GaussianRational] = {}
        while remainder:
            exponent = max(remainder, key=grlex_key)
            shift = tuple(a - b for a, b in zip(exponent, lead_exp))
            if min(shift) < 0:
                raise PreconditionError("polynomial division is not exact")
            factor = remainder[exponent] * lead_inv
            quotient[shift] = factor
            for e, c in divisor.terms.items():
                target = tuple(a + b for a, b in zip(e, shift))
                value = remainder.get(target, ZERO) - c * factor
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return self._raw(quotient)

    # Comparison

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # Calculus and structure

    def derivative(self, var: str) -> "MultiPoly":
        position = self._index(var)
        terms = {}
        for exponent, coefficient in self.terms.items():
            k = exponent[position]
            if k:
                lowered = exponent[:position] + (k - 1,) + exponent[position + 1:]
                terms[lowered] = coefficient * k
        return self._raw(terms)

    def coefficients_in(self, var: str) -> Dict[int, "MultiPoly"]:
        """Split self as sum_k c_k * var^k; each c_k keeps the full variable list."""
        position = self._index(var)
        parts: Dict[int, Dict[Exponent, GaussianRational]] = {}
        for exponent, coefficient in self.terms.items():
            k = exponent[position]
            lowered = exponent[:position] + (0,) + exponent[position + 1:]
            parts.setdefault(k, {})[lowered] = coefficient
        return {k: self._raw(t) for k, t in parts.items()}

    def leading_coefficient(self, var: str) -> "MultiPoly":
        if self.is_zero():
            return self._raw({})
        return self.coefficients_in(var)[self.degree(var)]

    def homogeneous_part(self, degree: int) -> "MultiPoly":
        return self._raw({e: c for e, c in self.terms.items() if sum(e) == degree})

    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over another variable list; dropped variables must not occur."""
        variables = tuple(variables)
        used = set(self.used_variables())
        missing = used - set(variables)
        if missing:
            raise PreconditionError(f"variables {sorted(missing)} occur in the polynomial")
        positions = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {}
        for exponent, coefficient in self.terms.items():
            terms[tuple(exponent[p] if p is not None else 0 for p in positions)] = coefficient
        result = MultiPoly.__new__(MultiPoly)
        result.variables = variables
        result.terms = terms
        return result

    def evaluate(self, point: Mapping[str, object]) -> GaussianRational:
        """Evaluate at a point giving a value for every variable."""
        values = [GaussianRational.coerce(point[v]) for v in self.variables]
        total = ZERO
        for exponent, coefficient in self.terms.items():
            term = coefficient
            for value, k in zip(values, exponent):
                if k:
                    term = term * value ** k
            total = total + term
        return total

    def to_dense(self, var: str) -> List[GaussianRational]:
        """Coefficient list, lowest degree first, of a polynomial involving only var."""
        others = [v for v in self.used_variables() if v != var]
        if others:
            raise PreconditionError(f"polynomial is not univariate in {var!r}: involves {others}")
        if self.is_zero():
            return []
        position = self._index(var)
        dense = [ZERO] * (self.degree(var) + 1)
        for exponent, coefficient in self.terms.items():
            dense[exponent[position]] = coefficient
        return dense

    # Text

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({self.variables}, {format_poly(self)!r})"


def _format_monomial(variables: Sequence[str], exponent: Exponent) -> str:
    factors = []
    for name, k in zip(variables, exponent):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    return "*".join(factors)


def format_poly(p: MultiPoly) -> str:
    """Canonical text: terms `coeff*x^a*y^b`, largest monomial first."""
    if p.is_zero():
        return "0"
    pieces = []
    for exponent, coefficient in p.sorted_terms():
        monomial = _format_monomial(p.variables, exponent)
        if not monomial:
            text = format_gaussian(coefficient)
            if coefficient.im != 0 and coefficient.re != 0:
                text = f"({text})"
        elif coefficient == 1:
            text = monomial
        elif coefficient == -1:
            text = f"-{monomial}"
        elif coefficient.im == 0:
            text = f"{coefficient.re}*{monomial}"
        else:
            text = f"({format_gaussian(coefficient)})*{monomial}"
        pieces.append(text)
    output = pieces[0]
    for text in pieces[1:]:
        if text.startswith("-"):
            output += f" - {text[1:]}"
        else:
            output += f" + {text}"
    return output


class _PolyParser:
    """Recursive-descent parser for polynomial expressions."""

    def __init__(self, text: str, variables: Tuple[str, ...]):
        self.text = text
        self.variables = variables
        self.tokens = self._tokenize(text)
        self.position = 0

    @staticmethod
    def _tokenize(text: str) -> List[Tuple[str, str]]:
        tokens = []
        index = 0
        stripped = text.rstrip()
        while index < len(stripped):
            match = _TOKEN_PATTERN.match(stripped, index)
            if not match or match.end() == index:
                raise ParseError(f"unexpected character {stripped[index]!r} in {text!r}")
            kind = match.lastgroup
            tokens.append((kind, match.group(kind)))
            index = match.end()
        return tokens

    def _peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _take(self) -> Tuple[str, str]:
        token = self._peek()
        if token is None:
            raise ParseError(f"unexpected end of polynomial {self.text!r}")
        self.position += 1
        return token

    def parse(self) -> MultiPoly:
        result = self._expr()
        if self._peek() is not None:
            raise ParseError(f"trailing input {self._peek()[1]!r} in {self.text!r}")
        return result

    def _expr(self) -> MultiPoly:
        result = self._term()
        while self._peek() in (("op", "+"), ("op", "-")):
            _, op = self._take()
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> MultiPoly:
        result = self._unary()
        while self._peek() in (("op", "*"), ("op", "/")):
            _, op = self._take()
            rhs = self._unary()
            if op == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError(f"division by a non-constant or zero in {self.text!r}")
                result = result.scale(rhs.constant_term().inverse())
        return result

    def _unary(self) -> MultiPoly:
        token = self._peek()
        if token in (("op", "-"), ("op", "+")):
            self._take()
            operand = self._unary()
            return -operand if token[1] == "-" else operand
        return self._power()

    def _power(self) -> MultiPoly:
        base = self._atom()
        if self._peek() in (("op", "^"), ("op", "**")):
            self._take()
            kind, value = self._take()
            if kind != "number" or not value.isdigit():
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return base ** int(value)
        return base

    def _atom(self) -> MultiPoly:
        kind, value = self._take()
        if kind == "number":
            return MultiPoly.constant(Fraction(value), self.variables)
        if kind == "name":
            if value == "I":
                return MultiPoly.constant(GaussianRational(0, 1), self.variables)
            if value not in self.variables:
                raise ParseError(f"unknown variable {value!r} in {self.text!r}")
            return MultiPoly.variable(value, self.variables)
        if value == "(":
            inner = self._expr()
            closing = self._take()
            if closing != ("op", ")"):
                raise ParseError(f"expected ')' in {self.text!r}")
            return inner
        raise ParseError(f"unexpected token {value!r} in {self.text!r}")


def detect_variables(text: str) -> Tuple[str, ...]:
    """Variable names occurring in a polynomial text, sorted alphabetically."""
    names = {m.group("name") for m in _TOKEN_PATTERN.finditer(text) if m.group("name")}
    names.discard("I")
    return tuple(sorted(names))


def parse_poly(text: str, variables: Optional[Iterable[str]] = None) -> MultiPoly:
    """
    Parse polynomial text such as `x^2 - 1/2*x*y + (1 + I)*y^3`.

    Args:
        text: Polynomial expression (+, -, *, / by constants, ^, parentheses, I)
        variables: Ordered variable list (defaults to the names found, sorted)

    Returns:
        Parsed MultiPoly

    Raises:
        ParseError: On malformed input or unknown variables
    """
    variables = tuple(variables) if variables is not None else detect_variables(text)
    if "I" in variables:
        raise ParseError("'I' is reserved for the imaginary unit")
    return _PolyParser(text, variables).parse()
