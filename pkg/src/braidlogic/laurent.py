"""Exact integer Laurent polynomials in one variable."""

from __future__ import annotations

from typing import Mapping

__all__ = ["LaurentPoly", "NormalizedPoly", "InexactDivision"]


class InexactDivision(ArithmeticError):
    pass


class LaurentPoly:
    """Sparse ``{exponent: coefficient}`` polynomial; zero coefficients are never stored."""

    __slots__ = ("terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        clean = {int(e): int(c) for e, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "t") -> "LaurentPoly":
        return cls({exponent: coeff}, var)

    @classmethod
    def from_json(cls, data: Mapping[str, int], var: str = "t") -> "LaurentPoly":
        return cls({int(k): v for k, v in data.items()}, var)

    def to_json(self) -> dict[str, int]:
        return {str(e): self.terms[e] for e in sorted(self.terms)}

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        return min(self.terms)

    @property
    def max_degree(self) -> int:
        return max(self.terms)

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        # the zero and constant polynomials compare equal across variable names
        if self.var != other.var and (
            set(self.terms) - {0} or set(other.terms) - {0}
        ):
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise InexactDivision("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise InexactDivision("only ±t^k are units")
            return LaurentPoly({e * k: 1 if k % 2 == 0 else c}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute var ↦ var⁻¹."""
        return LaurentPoly({-e: c for e, c in self.terms.items()}, self.var)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient q with self = other·q; raises InexactDivision if none exists."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly({}, self.var)
        lo = other.min_degree
        divisor = {e - lo: c for e, c in other.terms.items()}
        dtop = max(divisor)
        dlead = divisor[dtop]
        rem = dict(self.terms)
        quot: dict[int, int] = {}
        rlo = min(rem)
        # long division from the top; the quotient cannot dip below rlo
        while rem:
            top = max(rem)
            if top - dtop < rlo:
                raise InexactDivision(f"{self} is not divisible by {other}")
            c = rem[top]
            if c % dlead:
                raise InexactDivision(f"{self} is not divisible by {other}")
            q = c // dlead
            qe = top - dtop
            quot[qe] = q
            for e, dc in divisor.items():
                k = qe + e
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot, self.var).shift(-lo)

    def __call__(self, value):
        return sum(c * value**e for e, c in self.terms.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_json()}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


class NormalizedPoly(LaurentPoly):
    """Representative of the orbit {±var^k · p}: lowest exponent 0, lowest coefficient positive."""

    __slots__ = ()

    @classmethod
    def of(cls, p: LaurentPoly) -> "NormalizedPoly":
        if p.is_zero():
            return cls({}, p.var)
        lo = p.min_degree
        sign = -1 if p.terms[lo] < 0 else 1
        return cls({e - lo: sign * c for e, c in p.terms.items()}, p.var)
