"""Exact sparse multivariate polynomials over a fixed variable set.

Variables are ``a, b, c, d, e, f, k, m, n`` in that order; a polynomial is a
map from exponent vectors to Fraction coefficients with zero coefficients
dropped, so equality of canonical forms is equality of polynomials.  Only
the handful of ring operations the identity certificates need are
implemented; degrees stay tiny (at most 4), so no sparsity tricks beyond a
dict are warranted.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

VARIABLES: tuple[str, ...] = ("a", "b", "c", "d", "e", "f", "k", "m", "n")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

Scalar = Union[int, Fraction]
_ZERO_EXPS = (0,) * len(VARIABLES)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] = ()):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in dict(terms).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls({_ZERO_EXPS: Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        if name not in _INDEX:
            raise KeyError(f"unknown variable {name!r} (expected one of {VARIABLES})")
        exps = [0] * len(VARIABLES)
        exps[_INDEX[name]] = 1
        return cls({tuple(exps): Fraction(1)})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def monomial_count(self) -> int:
        return len(self._terms)

    def coefficients(self) -> list[Fraction]:
        return list(self._terms.values())

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def support(self) -> set[str]:
        used: set[str] = set()
        for exps in self._terms:
            for name, power in zip(VARIABLES, exps):
                if power:
                    used.add(name)
        return used

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = _coerce(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        other = _coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, assignment: Mapping[str, Union["Polynomial", Scalar]]) -> "Polynomial":
        """Simultaneously replace variables by polynomials (or scalars)."""
        replacements: dict[int, Polynomial] = {}
        for name, value in assignment.items():
            if name not in _INDEX:
                raise KeyError(f"unknown variable {name!r}")
            replacements[_INDEX[name]] = _coerce(value)
        total = Polynomial()
        for exps, coeff in self._terms.items():
            factor = Polynomial.constant(coeff)
            residual = [0] * len(VARIABLES)
            for i, power in enumerate(exps):
                if not power:
                    continue
                if i in replacements:
                    factor = factor * replacements[i] ** power
                else:
                    residual[i] = power
            factor = factor * Polynomial({tuple(residual): Fraction(1)})
            total = total + factor
        return total

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; every supporting variable required."""
        missing = self.support() - set(point)
        if missing:
            raise KeyError(f"no value for variable(s) {', '.join(sorted(missing))}")
        values = {name: Fraction(v) for name, v in point.items()}
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for name, power in zip(VARIABLES, exps):
                if power:
                    term *= values[name] ** power
            total += term
        return total

    # -- formatting ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        def key(item):
            exps, _ = item
            return (-sum(exps), tuple(-x for x in exps))
        parts = []
        for exps, coeff in sorted(self._terms.items(), key=key):
            factors = []
            for name, power in zip(VARIABLES, exps):
                if power == 1:
                    factors.append(name)
                elif power > 1:
                    factors.append(f"{name}^{power}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _coerce(value: Union[Polynomial, Scalar]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def variables() -> tuple[Polynomial, ...]:
    """The nine generators, in declaration order."""
    return tuple(Polynomial.variable(name) for name in VARIABLES)
