"""
Multivariate Polynomials
Sparse polynomials with exact rational coefficients in named variables
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import MissingVariableError
from .rational import RationalLike, format_rational, to_rational

logger = logging.getLogger(__name__)

# Global variable order; exponent tuples always follow it
VARIABLE_ORDER = ('t', 'x', 'y', 'zeta', 's')

Exponents = Tuple[int, ...]


def _variable_key(name: str) -> Tuple[int, Union[int, str]]:
    if name in VARIABLE_ORDER:
        return (0, VARIABLE_ORDER.index(name))
    return (1, name)


class MultiPoly:
    """
    Polynomial over the rationals in canonical form

    Only variables that actually occur are kept, ordered by VARIABLE_ORDER
    (unknown names sort after it alphabetically), and no zero coefficient
    is stored. Two polynomials are equal iff their term mappings are equal.
    """

    __slots__ = ('_variables', '_terms')

    def __init__(
        self,
        variables: Sequence[str] = (),
        terms: Optional[Mapping[Exponents, RationalLike]] = None
    ):
        """
        Build a polynomial from exponent tuples

        Args:
            variables: Variable names the exponent tuples refer to
            terms: Mapping from exponent tuple to coefficient

        Raises:
            ValueError: If names repeat or an exponent tuple is malformed
        """
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Repeated variable names: {variables}")

        summed: Dict[Exponents, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != len(variables):
                raise ValueError(
                    f"Exponent tuple {exponents} does not match variables {variables}"
                )
            if any(e < 0 for e in exponents):
                raise ValueError(f"Negative exponent in {exponents}")
            summed[exponents] = summed.get(exponents, Fraction(0)) + to_rational(coeff)

        summed = {exps: c for exps, c in summed.items() if c != 0}

        used = [
            i for i in range(len(variables))
            if any(exps[i] != 0 for exps in summed)
        ]
        used.sort(key=lambda i: _variable_key(variables[i]))

        self._variables: Tuple[str, ...] = tuple(variables[i] for i in used)
        canonical = {tuple(exps[i] for i in used): c for exps, c in summed.items()}
        self._terms: Dict[Exponents, Fraction] = dict(sorted(canonical.items()))

    # ------------------------------------------------------------------
    # Constructors

    @classmethod
    def constant(cls, value: RationalLike) -> 'MultiPoly':
        return cls((), {(): value})

    @classmethod
    def variable(cls, name: str) -> 'MultiPoly':
        return cls((name,), {(1,): 1})

    @classmethod
    def monomial(cls, coeff: RationalLike = 1, **exponents: int) -> 'MultiPoly':
        """Monomial such as MultiPoly.monomial(3, t=1, x=2)"""
        names = tuple(exponents)
        return cls(names, {tuple(exponents[n] for n in names): coeff})

    @classmethod
    def from_json(cls, variables: Sequence[str], rows: Iterable[Sequence]) -> 'MultiPoly':
        """Inverse of to_json: rows of [e_1, ..., e_k, "coeff"]"""
        terms: Dict[Exponents, Fraction] = {}
        for row in rows:
            *exponents, coeff = row
            key = tuple(int(e) for e in exponents)
            terms[key] = terms.get(key, Fraction(0)) + to_rational(coeff)
        return cls(variables, terms)

    # ------------------------------------------------------------------
    # Inspection

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._variables

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial"""
        if not self.is_constant():
            raise ValueError(f"Polynomial {self} is not constant")
        return self._terms.get((), Fraction(0))

    def degree(self, var: str) -> int:
        if var not in self._variables:
            return 0
        i = self._variables.index(var)
        return max((exps[i] for exps in self._terms), default=0)

    def exponent_map(self) -> List[Tuple[Dict[str, int], Fraction]]:
        """Terms as ({variable: exponent}, coefficient) pairs"""
        return [
            ({v: e for v, e in zip(self._variables, exps) if e}, c)
            for exps, c in self._terms.items()
        ]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ------------------------------------------------------------------
    # Arithmetic

    @staticmethod
    def _coerce(other) -> Optional['MultiPoly']:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.constant(other)
        return None

    def _lift(self, variables: Tuple[str, ...]) -> Dict[Exponents, Fraction]:
        index = [variables.index(v) for v in self._variables]
        lifted = {}
        for exps, c in self._terms.items():
            full = [0] * len(variables)
            for i, e in zip(index, exps):
                full[i] = e
            lifted[tuple(full)] = c
        return lifted

    def _union(self, other: 'MultiPoly') -> Tuple[str, ...]:
        return tuple(sorted(set(self._variables) | set(other._variables), key=_variable_key))

    def __add__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables = self._union(other)
        result = self._lift(variables)
        for exps, c in other._lift(variables).items():
            result[exps] = result.get(exps, Fraction(0)) + c
        return MultiPoly(variables, result)

    __radd__ = __add__

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'MultiPoly':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables = self._union(other)
        left = self._lift(variables)
        right = other._lift(variables)
        result: Dict[Exponents, Fraction] = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(variables, result)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            other = other.constant_value()
        divisor = to_rational(other)
        if divisor == 0:
            raise ZeroDivisionError("Polynomial division by zero")
        return MultiPoly(self._variables, {e: c / divisor for e, c in self._terms.items()})

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Polynomial exponent must be a non-negative integer: {exponent}")
        result = MultiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self._variables, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    # Evaluation and substitution

    def evaluate(self, assignment: Mapping[str, RationalLike]) -> Fraction:
        """
        Evaluate exactly at a rational point

        Args:
            assignment: Value for every variable of the polynomial

        Returns:
            Exact value

        Raises:
            MissingVariableError: If a variable has no value
        """
        missing = [v for v in self._variables if v not in assignment]
        if missing:
            raise MissingVariableError(missing)

        values = [to_rational(assignment[v]) for v in self._variables]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for value, e in zip(values, exps):
                if e:
                    term *= value ** e
            total += term
        return total

    def compose(self, mapping: Mapping[str, Union['MultiPoly', RationalLike]]) -> 'MultiPoly':
        """
        Substitute several variables simultaneously

        Args:
            mapping: Replacement polynomial (or rational) per variable;
                variables not mentioned are kept

        Returns:
            Composed polynomial in canonical form
        """
        replacements = []
        for v in self._variables:
            if v in mapping:
                q = self._coerce(mapping[v])
                if q is None:
                    q = MultiPoly.constant(to_rational(mapping[v]))
            else:
                q = MultiPoly.variable(v)
            replacements.append(q)

        powers: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            if (i, e) not in powers:
                powers[(i, e)] = replacements[i] ** e
            return powers[(i, e)]

        result = MultiPoly()
        for exps, c in self._terms.items():
            term = MultiPoly.constant(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def substitute(self, var: str, q: Union['MultiPoly', RationalLike]) -> 'MultiPoly':
        return self.compose({var: q})

    def coefficient(self, var: str, k: int) -> 'MultiPoly':
        """Coefficient of var^k as a polynomial in the remaining variables"""
        if k < 0:
            raise ValueError(f"Coefficient index must be non-negative: {k}")
        if var not in self._variables:
            return self if k == 0 else MultiPoly()

        i = self._variables.index(var)
        rest = self._variables[:i] + self._variables[i + 1:]
        terms = {
            exps[:i] + exps[i + 1:]: c
            for exps, c in self._terms.items()
            if exps[i] == k
        }
        return MultiPoly(rest, terms)

    # ------------------------------------------------------------------
    # Text and JSON forms

    def _display_order(self) -> List[Tuple[Exponents, Fraction]]:
        # t ascending, then total degree of the other variables descending,
        # then x, y, ... descending
        t_index = self._variables.index('t') if 't' in self._variables else None

        def key(item):
            exps = item[0]
            t_exp = exps[t_index] if t_index is not None else 0
            others = [e for i, e in enumerate(exps) if i != t_index]
            return (t_exp, -sum(others), tuple(-e for e in others))

        return sorted(self._terms.items(), key=key)

    def to_text(self) -> str:
        """Human readable form, e.g. "x^3 + x^2 + x + y" """
        if self.is_zero():
            return "0"

        pieces = []
        for index, (exps, c) in enumerate(self._display_order()):
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self._variables, exps) if e
            ]
            monomial = "*".join(factors)
            magnitude = abs(c)
            if not monomial:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{format_rational(magnitude)}*{monomial}"

            if index == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def to_json(self, variables: Optional[Sequence[str]] = None) -> List[list]:
        """
        Rows [e_1, ..., e_k, "coeff"] over the given variable list

        Raises:
            ValueError: If the polynomial uses a variable outside the list
        """
        variables = tuple(variables) if variables is not None else self._variables
        extra = set(self._variables) - set(variables)
        if extra:
            raise ValueError(f"Variables {sorted(extra)} not in JSON variable list {variables}")

        index = [self._variables.index(v) if v in self._variables else None for v in variables]
        rows = []
        for exps, c in self._display_order():
            rows.append([exps[i] if i is not None else 0 for i in index] + [format_rational(c)])
        return rows

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r})"


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    """Exact sum or product; op is "add" or "mul" """
    if op == 'add':
        return p + q
    if op == 'mul':
        return p * q
    raise ValueError(f"Unknown polynomial operation: {op}")


def poly_eval(p: MultiPoly, assignment: Mapping[str, RationalLike]) -> Fraction:
    return p.evaluate(assignment)


def poly_substitute(p: MultiPoly, var: str, q: Union[MultiPoly, RationalLike]) -> MultiPoly:
    return p.substitute(var, q)


def poly_compose(p: MultiPoly, mapping: Mapping[str, Union[MultiPoly, RationalLike]]) -> MultiPoly:
    return p.compose(mapping)


def poly_coefficient(p: MultiPoly, var: str, k: int) -> MultiPoly:
    return p.coefficient(var, k)
