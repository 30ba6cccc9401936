"""Laurent polynomials in q with arbitrary-precision integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly:
    """An immutable element of Z[q, q^-1].

    Stored as a map exponent -> nonzero int.  Two values compare equal
    iff their term maps agree.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if terms is None:
            self._terms = {}
        else:
            self._terms = {int(e): int(c) for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (f, d), = b.items()
            return LaurentPoly._raw({e + f: c * d for e, c in a.items()})
        if len(a) == 1:
            (e, c), = a.items()
            return LaurentPoly._raw({e + f: c * d for f, d in b.items()})
        out: dict = {}
        for e, c in a.items():
            for f, d in b.items():
                out[e + f] = out.get(e + f, 0) + c * d
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly.monomial(e * k, c ** (-k))
            raise ValueError("negative power of a non-unit")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ArithmeticError when divisor does not divide self."""
        divisor = LaurentPoly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self._terms)
        dtop = divisor.max_exponent()
        dlow = divisor.min_exponent()
        lead = divisor._terms[dtop]
        quot: dict = {}
        # long division from the top degree down
        while rem:
            top = max(rem)
            if top - dtop < min(rem) - dlow:
                raise ArithmeticError(f"{divisor} does not divide {self}")
            c, r = divmod(rem[top], lead)
            if r:
                raise ArithmeticError(f"{divisor} does not divide {self}")
            shift = top - dtop
            quot[shift] = c
            for e, d in divisor._terms.items():
                v = rem.get(e + shift, 0) - c * d
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return LaurentPoly(quot)

    # -- q-specific maps --------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The ring involution q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def in_positive_q_span(self) -> bool:
        """True iff the polynomial lies in qZ[q] (every exponent >= 1)."""
        return all(e >= 1 for e in self._terms)

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def positive_part(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e > 0})

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e < 0})

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        from math import gcd

        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {str(e): str(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: accepts forms like ``"q^-1 + 2*q^3 - 5"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        terms: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s.replace("^-", "^~")):
            body = body.replace("~", "-")
            if "q" in body:
                coeff_part, _, exp_part = body.partition("q")
                coeff = int(coeff_part.rstrip("*")) if coeff_part else 1
                exp = int(exp_part[1:]) if exp_part.startswith("^") else 1
            else:
                coeff, exp = int(body), 0
            if sign == "-":
                coeff = -coeff
            terms[exp] = terms.get(exp, 0) + coeff
        return cls(terms)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)
Q_INV = LaurentPoly.monomial(-1)


def q_power(k: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(k, coeff)


def quantum_int(n: int) -> LaurentPoly:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("quantum_int needs n >= 0")
    return LaurentPoly._raw({n - 1 - 2 * k: 1 for k in range(n)})


def add(a, b) -> LaurentPoly:
    return LaurentPoly.coerce(a) + LaurentPoly.coerce(b)


def mul(a, b) -> LaurentPoly:
    return LaurentPoly.coerce(a) * LaurentPoly.coerce(b)


def neg(a) -> LaurentPoly:
    return -LaurentPoly.coerce(a)


def bar(a) -> LaurentPoly:
    return LaurentPoly.coerce(a).bar()


def in_positive_q_span(a) -> bool:
    return LaurentPoly.coerce(a).in_positive_q_span()


def eval_at_one(a) -> int:
    return LaurentPoly.coerce(a).eval_at_one()


def lsum(values: Iterable) -> LaurentPoly:
    out: dict = {}
    for v in values:
        for e, c in LaurentPoly.coerce(v)._terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out)
