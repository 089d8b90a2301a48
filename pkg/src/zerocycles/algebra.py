"""Exact rational, polynomial and etale-algebra arithmetic.

Everything is immutable and exact: scalars are `fractions.Fraction`,
univariate polynomials are coefficient tuples over Q, and an etale algebra
is a quotient Q[t]/(f) with f monic and squarefree.  No polynomial
factorization is ever performed; a reducible modulus is split lazily when
some computation runs into a zero divisor (`ZeroDivisorFound` carries the
discovered factor, and callers may continue componentwise).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def fraction_to_string(q: Fraction) -> str:
    """Canonical "num/den" string, plain integer when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Univariate polynomial over Q, coefficients stored lowest degree first.

    Trailing zero coefficients are stripped, so the leading coefficient is
    nonzero unless the polynomial is zero (empty tuple).  The zero polynomial
    has degree -1 by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls((_to_fraction(value),))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls.one()
        for r in roots:
            p = p * cls((-_to_fraction(r), 1))
        return p

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls(Fraction(s) for s in items)

    def to_strings(self) -> list:
        return [fraction_to_string(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return Poly(c / lead for c in self.coeffs)

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            other = _coerce_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dn, 0)
        for k in range(len(rem) - dn - 1, -1, -1):
            c = rem[k + dn] / lead
            if c == 0:
                continue
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dn])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def __call__(self, value):
        """Evaluate by Horner's rule; works for Fraction and ring elements."""
        if self.is_zero:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                var = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    term = var
                elif c == -1:
                    term = f"-{var}"
                else:
                    term = f"{c}*{var}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def _coerce_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((value,))
    return NotImplemented


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; poly_gcd(0, 0) = 0."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Extended gcd: returns (g, u, v) with g = u*a + v*b and g monic (or 0)."""
    r0, r1 = a, b
    u0, u1 = Poly.one(), Poly.zero()
    v0, v1 = Poly.zero(), Poly.one()
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero:
        return r0, u0, v0
    lead = r0.leading
    inv = 1 / lead
    return r0.monic(), u0 * inv, v0 * inv


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is constant.  Raises on the zero polynomial."""
    if f.is_zero:
        raise ValueError("squarefreeness is undefined for the zero polynomial")
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f (f nonzero)."""
    if f.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    if f.degree == 0:
        return Poly.one()
    return (f // poly_gcd(f, f.derivative())).monic()


class ZeroDivisorFound(ArithmeticError):
    """A nonzero, non-invertible element turned up over Q[t]/(f).

    `factor` is a monic proper divisor of the modulus, so the caller can
    split the algebra as Q[t]/(factor) x Q[t]/(f // factor) and retry
    componentwise.
    """

    def __init__(self, algebra: "EtaleAlgebra", factor: Poly):
        super().__init__(f"zero divisor over {algebra}: factor {factor}")
        self.algebra = algebra
        self.factor = factor


class EtaleAlgebra:
    """Quotient Q[t]/(f) with f monic squarefree of degree >= 1.

    A degree-n point of a variety is a point with coordinates here; the
    modulus degree upper-bounds the residue field degree (the modulus is not
    factored, so a split algebra looks the same as a field until a zero
    divisor shows up).
    """

    __slots__ = ("modulus",)

    def __init__(self, modulus: Poly):
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not modulus.is_monic:
            raise ValueError("modulus must be monic")
        if not is_squarefree(modulus):
            raise ValueError(f"modulus {modulus} is not squarefree")
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, value):
        raise AttributeError("EtaleAlgebra is immutable")

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, value) -> "AlgElement":
        if isinstance(value, AlgElement):
            if value.algebra != self:
                raise ValueError("element belongs to a different algebra")
            return value
        if isinstance(value, (int, Fraction, str)):
            value = Poly.constant(_to_fraction(value))
        elif not isinstance(value, Poly):
            value = Poly(value)
        return AlgElement(self, value % self.modulus)

    def from_rational(self, value) -> "AlgElement":
        return AlgElement(self, Poly.constant(_to_fraction(value)))

    @property
    def zero(self) -> "AlgElement":
        return AlgElement(self, Poly.zero())

    @property
    def one(self) -> "AlgElement":
        return AlgElement(self, Poly.one())

    @property
    def generator(self) -> "AlgElement":
        return self.element(Poly.x())

    def split(self, factor: Poly):
        """Split along a monic proper divisor of the modulus.

        Returns (Q[t]/(factor), Q[t]/(cofactor)); the two moduli are coprime
        because the modulus is squarefree.
        """
        if not factor.is_monic or not (1 <= factor.degree < self.degree):
            raise ValueError(f"{factor} is not a proper monic divisor")
        if not factor.divides(self.modulus):
            raise ValueError(f"{factor} does not divide {self.modulus}")
        return EtaleAlgebra(factor), EtaleAlgebra(self.modulus // factor)

    def __eq__(self, other):
        return isinstance(other, EtaleAlgebra) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("EtaleAlgebra", self.modulus))

    def __repr__(self):
        return f"Q[t]/({self.modulus})"


class AlgElement:
    """Element of an etale algebra, stored as its reduced representative."""

    __slots__ = ("algebra", "rep")

    def __init__(self, algebra: EtaleAlgebra, rep: Poly):
        if rep.degree >= algebra.degree:
            rep = rep % algebra.modulus
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("AlgElement is immutable")

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            if other.algebra != self.algebra:
                raise ValueError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.from_rational(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def is_unit(self) -> bool:
        if self.rep.is_zero:
            return False
        return poly_gcd(self.rep, self.algebra.modulus).degree == 0

    def zero_divisor_factor(self) -> Poly:
        """Monic proper modulus divisor witnessing non-invertibility.

        Only meaningful for nonzero non-units.
        """
        g = poly_gcd(self.rep, self.algebra.modulus)
        if not 1 <= g.degree < self.algebra.degree:
            raise ValueError("element is zero or a unit")
        return g

    def inverse(self) -> "AlgElement":
        """Multiplicative inverse.

        Raises ZeroDivisionError on 0 and ZeroDivisorFound (carrying a proper
        factor of the modulus) on a nonzero non-unit.
        """
        if self.rep.is_zero:
            raise ZeroDivisionError("inverting zero in an etale algebra")
        g, u, _ = poly_xgcd(self.rep, self.algebra.modulus)
        if g.degree > 0:
            raise ZeroDivisorFound(self.algebra, g)
        return AlgElement(self.algebra, u % self.algebra.modulus)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgElement(self.algebra, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.algebra, -self.rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgElement(self.algebra, self.rep - other.rep)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgElement(self.algebra, (self.rep * other.rep) % self.algebra.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.algebra.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reduce_mod(self, sub: EtaleAlgebra) -> "AlgElement":
        """Image in a component algebra whose modulus divides this one's."""
        if not sub.modulus.divides(self.algebra.modulus):
            raise ValueError("target modulus does not divide the current one")
        return AlgElement(sub, self.rep % sub.modulus)

    def at_root(self, tau) -> Fraction:
        """Evaluate the representative at a rational parameter.

        This is the projection to the component Q[t]/(t - tau) and is only
        meaningful when t - tau divides the modulus.
        """
        return self.rep(_to_fraction(tau))

    def constant_value(self) -> Fraction:
        """The element as a rational number; requires a constant representative."""
        if self.rep.degree > 0:
            raise ValueError(f"{self} is not a rational constant")
        return self.rep.coeff(0)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(("AlgElement", self.algebra.modulus, self.rep))

    def __repr__(self):
        return f"({self.rep} mod {self.algebra.modulus})"

    def to_json(self) -> dict:
        return {"modulus": self.algebra.modulus.to_strings(), "rep": self.rep.to_strings()}


def alg_element_from_json(obj: dict) -> AlgElement:
    algebra = EtaleAlgebra(Poly.from_strings(obj["modulus"]))
    return algebra.element(Poly.from_strings(obj["rep"]))


def crt_combine(algebra: EtaleAlgebra, a: AlgElement, b: AlgElement) -> AlgElement:
    """Recombine componentwise values over coprime factors of the modulus.

    a lives over Q[t]/(g), b over Q[t]/(h) with g*h = algebra.modulus; the
    result reduces to a mod g and to b mod h.
    """
    g = a.algebra.modulus
    h = b.algebra.modulus
    if g * h != algebra.modulus:
        raise ValueError("component moduli do not multiply to the target modulus")
    d, u, _ = poly_xgcd(g, h)
    if d.degree != 0:
        raise ValueError("component moduli are not coprime")
    # rep = a + g * u * (b - a) mod g*h, with u = g^{-1} mod h
    diff = (b.rep - a.rep) % h
    lift = (g * ((u * diff) % h)) + a.rep
    return algebra.element(lift)
