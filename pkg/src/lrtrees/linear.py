"""Sparse formal linear combinations with exact rational coefficients."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any

Scalar = int | Fraction


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _fmt_coeff(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LinComb:
    """Immutable finite sum ``sum c_b * b`` over hashable basis objects.

    Zero coefficients are never stored. Integral coefficients are kept as
    ``int`` and the rest as ``Fraction``, so arithmetic stays exact.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Scalar] | Iterable[tuple[Hashable, Scalar]] = ()):
        acc: dict[Hashable, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for b, c in items:
            acc[b] = acc.get(b, 0) + c
        self._terms = {b: _norm(c) for b, c in acc.items() if c != 0}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Hashable, Scalar]) -> LinComb:
        obj = cls.__new__(cls)
        obj._terms = {b: _norm(c) for b, c in terms.items() if c != 0}
        obj._hash = None
        return obj

    @classmethod
    def linear_sum(cls, parts: Iterable[tuple[LinComb, Scalar]]) -> LinComb:
        """``Σ s_i x_i`` accumulated in one pass."""
        out: dict[Hashable, Scalar] = {}
        for x, s in parts:
            for b, c in x._terms.items():
                out[b] = out.get(b, 0) + c * s
        return cls._raw(out)

    @classmethod
    def basis(cls, b: Hashable) -> LinComb:
        return cls({b: 1})

    @classmethod
    def zero(cls) -> LinComb:
        return cls()

    def coeff(self, b: Hashable) -> Scalar:
        return self._terms.get(b, 0)

    def support(self) -> set:
        return set(self._terms)

    def items(self, sort_key: Callable[[Any], Any] | None = None) -> list[tuple[Any, Scalar]]:
        return sorted(self._terms.items(), key=lambda bc: (sort_key or _default_key)(bc[0]))

    def coefficient_sum(self) -> Scalar:
        return _norm(sum(self._terms.values()))

    def map_basis(self, f: Callable[[Any], LinComb]) -> LinComb:
        """Linear extension of ``f`` defined on basis elements."""
        out: dict[Hashable, Scalar] = {}
        for b, c in self._terms.items():
            for b2, c2 in f(b)._terms.items():
                out[b2] = out.get(b2, 0) + c * c2
        return LinComb._raw(out)

    def bilinear(self, other: LinComb, f: Callable[[Any, Any], LinComb]) -> LinComb:
        """Bilinear extension of ``f`` defined on pairs of basis elements."""
        out: dict[Hashable, Scalar] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                cab = ca * cb
                for b2, c2 in f(a, b)._terms.items():
                    out[b2] = out.get(b2, 0) + cab * c2
        return LinComb._raw(out)

    def __iter__(self) -> Iterator[Any]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: LinComb) -> LinComb:
        out = dict(self._terms)
        for b, c in other._terms.items():
            out[b] = out.get(b, 0) + c
        return LinComb._raw(out)

    def __neg__(self) -> LinComb:
        return LinComb._raw({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def __mul__(self, s: Scalar) -> LinComb:
        return LinComb._raw({b: c * s for b, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_string(self, fmt: Callable[[Any], str] = str, sort_key: Callable[[Any], Any] | None = None) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (b, c) in enumerate(self.items(sort_key)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = fmt(b) if mag == 1 else f"{_fmt_coeff(mag)}·{fmt(b)}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_string(_fmt_basis)

    def __repr__(self) -> str:
        return f"LinComb({self.to_string(_fmt_basis)})"


def _fmt_basis(b: Any) -> str:
    # plain tuples are tensor factors; Permutation subclasses tuple and keeps its own str
    if type(b) is tuple:
        return " ⊗ ".join(_fmt_basis(x) for x in b)
    return str(b)


def _default_key(b: Any) -> Any:
    key = getattr(b, "sort_key", None)
    if callable(key):
        return key()
    if isinstance(b, tuple):
        return tuple(_default_key(x) for x in b)
    return (str(type(b)), b)


def tensor(a: LinComb, b: LinComb) -> LinComb:
    """``a ⊗ b`` with basis elements stored as pairs."""
    return a.bilinear(b, lambda x, y: LinComb.basis((x, y)))


def tensor_string(x: LinComb, fmt: Callable[[Any], str] = str) -> str:
    return x.to_string(lambda p: f"{fmt(p[0])} ⊗ {fmt(p[1])}")
