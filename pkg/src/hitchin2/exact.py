"""Exact coefficient arithmetic and sparse multivariate polynomials.

The coefficient field is Q(i): ``GaussianRational`` holds exact rational
real and imaginary parts (``fractions.Fraction``, arbitrary precision,
always reduced).  Polynomials are sparse maps from exponent tuples to
nonzero coefficients over a fixed, ordered tuple of variable names::

    (3/2) * x**2 * u   ->   {(2, 0, 0, 1, 0, 0): GaussianRational(3, 2)}

The zero polynomial is the empty map.  Every operation returns canonical
form (no stored zero coefficient), so two polynomials are equal iff their
term maps are equal.  Term listings and serialized output are ordered
graded-lexicographically, largest first, which makes printed and emitted
polynomials byte-stable across runs.

All values are immutable once built and all operations are pure; sharing
across workers needs no synchronization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction, "GaussianRational"]


class ContextMismatchError(ValueError):
    """Raised when combining polynomials over different variable contexts."""


class UnknownVariableError(ValueError):
    """Raised when an operation names a variable absent from the context."""


class MissingAssignmentError(ValueError):
    """Raised when an evaluation point leaves a context variable unassigned."""


class GaussianRational:
    """Element of Q(i): ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def coerce(value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    def __add__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:  # real*real fast path; dominates Hamiltonian work
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in Q(i)")
        if not self.im and not other.im:
            return GaussianRational(self.re / other.re)
        n = other.re * other.re + other.im * other.im
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __float__(self) -> float:
        if self.im:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return float(self.re)

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}i"
        if not self.re:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


@dataclass(frozen=True)
class VariableContext:
    """Ordered tuple of distinct variable names; the home of a polynomial."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(f"{name!r} not in context {self.names}") from None

    def zero(self) -> "SparsePolynomial":
        return SparsePolynomial._raw(self, {})

    def one(self) -> "SparsePolynomial":
        return self.constant(1)

    def constant(self, value: Scalar) -> "SparsePolynomial":
        c = GaussianRational.coerce(value)
        if not c:
            return self.zero()
        return SparsePolynomial._raw(self, {(0,) * self.arity: c})

    def var(self, name: str) -> "SparsePolynomial":
        exp = [0] * self.arity
        exp[self.index(name)] = 1
        return SparsePolynomial._raw(self, {tuple(exp): ONE})

    def variables(self) -> tuple["SparsePolynomial", ...]:
        return tuple(self.var(n) for n in self.names)


def _graded_lex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class SparsePolynomial:
    """Sparse polynomial over Q(i) in the variables of a fixed context."""

    __slots__ = ("context", "terms")

    def __init__(self, context: VariableContext, terms: Mapping[tuple[int, ...], Scalar] = ()):
        clean: dict[tuple[int, ...], GaussianRational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != context.arity:
                raise ValueError(f"exponent {exp} does not match arity {context.arity}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = GaussianRational.coerce(coeff)
            if c:
                clean[exp] = c
        self.context = context
        self.terms = clean

    @classmethod
    def _raw(cls, context, terms: dict) -> "SparsePolynomial":
        # internal fast path: terms already canonical
        self = object.__new__(cls)
        self.context = context
        self.terms = terms
        return self

    # -- ring operations ------------------------------------------------

    def _coerce_operand(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            if other.context != self.context:
                raise ContextMismatchError(
                    f"contexts differ: {self.context.names} vs {other.context.names}"
                )
            return other
        return self.context.constant(other)

    def __add__(self, other):
        if not isinstance(other, (SparsePolynomial, GaussianRational, int, Fraction)):
            return NotImplemented
        other = self._coerce_operand(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp)
            s = c if s is None else s + c
            if s:
                out[exp] = s
            else:
                del out[exp]
        return SparsePolynomial._raw(self.context, out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (SparsePolynomial, GaussianRational, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SparsePolynomial._raw(self.context, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            c = GaussianRational.coerce(other)
            if not c:
                return self.context.zero()
            return SparsePolynomial._raw(self.context, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        other = self._coerce_operand(other)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                s = p if s is None else s + p
                if s:
                    out[e] = s
                else:
                    del out[e]
        return SparsePolynomial._raw(self.context, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = self.context.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            other = self.context.constant(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- calculus and evaluation -----------------------------------------

    def partial_derivative(self, name: str) -> "SparsePolynomial":
        k = self.context.index(name)
        out: dict[tuple[int, ...], GaussianRational] = {}
        for exp, c in self.terms.items():
            e = exp[k]
            if e:
                dexp = exp[:k] + (e - 1,) + exp[k + 1 :]
                out[dexp] = c * e
        return SparsePolynomial._raw(self.context, out)

    def evaluate(self, point: Mapping[str, Scalar]) -> GaussianRational:
        values = []
        for name in self.context.names:
            if name not in point:
                raise MissingAssignmentError(f"no value for variable {name!r}")
            values.append(GaussianRational.coerce(point[name]))
        total = ZERO
        caches: list[dict[int, GaussianRational]] = [{} for _ in values]
        for exp, coeff in self.terms.items():
            term = coeff
            for k, e in enumerate(exp):
                if not e:
                    continue
                cache = caches[k]
                p = cache.get(e)
                if p is None:
                    p = values[k] ** e
                    cache[e] = p
                term = term * p
            total = total + term
        return total

    def substitute(self, name: str, image: "SparsePolynomial") -> "SparsePolynomial":
        """Replace one variable by a polynomial over the same context."""
        image = self._coerce_operand(image)
        images = {n: self.context.var(n) for n in self.context.names}
        if name not in images:
            raise UnknownVariableError(f"{name!r} not in context {self.context.names}")
        images[name] = image
        return self.map_context(self.context, images)

    def map_context(
        self,
        target: VariableContext,
        images: Mapping[str, "SparsePolynomial"],
    ) -> "SparsePolynomial":
        """Apply the ring homomorphism sending each variable to its image.

        Every variable of this polynomial's context must have an image over
        ``target``; evaluating the result equals evaluating the original
        with each variable bound to its image's value.
        """
        imgs = []
        for name in self.context.names:
            if name not in images:
                raise MissingAssignmentError(f"no image for variable {name!r}")
            g = images[name]
            if g.context != target:
                raise ContextMismatchError(f"image of {name!r} lives in {g.context.names}")
            imgs.append(g)
        caches: list[dict[int, SparsePolynomial]] = [{0: target.one()} for _ in imgs]
        out = target.zero()
        for exp, coeff in self.terms.items():
            term = target.constant(coeff)
            for k, e in enumerate(exp):
                if not e:
                    continue
                cache = caches[k]
                p = cache.get(e)
                if p is None:
                    p = imgs[k] ** e
                    cache[e] = p
                term = term * p
            out = out + term
        return out

    # -- degree and structure queries -------------------------------------

    def total_degree(self) -> int:
        """Max total degree of a term; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, names: Iterable[str]) -> int:
        ks = [self.context.index(n) for n in names]
        return max((sum(e[k] for k in ks) for e in self.terms), default=0)

    def is_homogeneous_in(self, names: Iterable[str], degree: int) -> bool:
        ks = [self.context.index(n) for n in names]
        return all(sum(e[k] for k in ks) == degree for e in self.terms)

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], GaussianRational]]:
        """Terms in graded-lex order, largest first (the emission order)."""
        return sorted(self.terms.items(), key=lambda kv: _graded_lex_key(kv[0]), reverse=True)

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.context.names),
            "terms": [
                {"exp": list(exp), "re": str(c.re), "im": str(c.im)}
                for exp, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict, context: VariableContext | None = None) -> "SparsePolynomial":
        ctx = VariableContext(tuple(obj["vars"]))
        if context is not None:
            if context != ctx:
                raise ContextMismatchError(f"document vars {ctx.names} != {context.names}")
            ctx = context
        terms = {
            tuple(t["exp"]): GaussianRational(Fraction(t["re"]), Fraction(t["im"]))
            for t in obj["terms"]
        }
        return cls(ctx, terms)

    @classmethod
    def from_json(cls, text: str, context: VariableContext | None = None) -> "SparsePolynomial":
        return cls.from_json_obj(json.loads(text), context)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.context.names, exp)
                if e
            )
            if not mono:
                parts.append(f"({c})")
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<SparsePolynomial {self} over {self.context.names}>"
