"""Exact constructions on cubic surfaces in P^3.

Implements line/surface intersections, the chord construction (third
intersection point of a secant), the tangent process on elliptic plane
sections (residual point of the tangent line, which realizes multiplication
by -2 on the section), length-3 line sections over etale algebras, and the
composite map sending a plane pencil and a line to the tangent-process image
of the line's intersection triple.

Coordinates live in an etale algebra so that points of degree up to 3 are
first-class values.  Whenever a computation over a reducible algebra hits a
zero divisor, `ZeroDivisorFound` escapes and the caller (see
`tangent_triple`) splits the algebra and retries componentwise.

Smoothness of the surface is never verified globally; each operation checks
smoothness at the specific points it touches via the gradient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import (
    AlgElement,
    EtaleAlgebra,
    Poly,
    ZeroDivisorFound,
    fraction_to_string,
    squarefree_part,
)

#: Degree-1 coefficient algebra Q[t]/(t); hosts all rational points.
RATIONALS = EtaleAlgebra(Poly.x())


class GeometryError(Exception):
    """Base class for genericity failures; `kind` feeds structured CLI errors."""

    kind = "GeometryError"


class LineInSurface(GeometryError):
    kind = "LineInSurface"


class EqualPoints(GeometryError):
    kind = "EqualPoints"


class PointOnAxis(GeometryError):
    kind = "PointOnAxis"


class SingularSectionPoint(GeometryError):
    kind = "SingularSectionPoint"


class TangentLineInSurface(GeometryError):
    kind = "TangentLineInSurface"


class PointNotOnSurface(GeometryError):
    kind = "PointNotOnSurface"


def _det2(a, b, c, d):
    return a * d - b * c


def _det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vscale(c, u):
    return tuple(c * a for a in u)


def _scan_units(values: Sequence[AlgElement], algebra: EtaleAlgebra):
    """Index of the last unit among `values`, or raise.

    Raises ZeroDivisorFound when nothing is a unit but something is nonzero
    (the mixed split case), ValueError when everything vanishes.
    """
    witness = None
    for i in range(len(values) - 1, -1, -1):
        v = values[i]
        if v.is_zero:
            continue
        if v.is_unit():
            return i
        if witness is None:
            witness = v
    if witness is not None:
        raise ZeroDivisorFound(algebra, witness.zero_divisor_factor())
    raise ValueError("all values are zero")


class ProjPoint:
    """Point of P^3 with coordinates in an etale algebra, up to unit scalars.

    Comparison and serialization normalize by scaling the last unit
    coordinate to 1; a point over a reducible algebra may have no unit
    coordinate at all, in which case normalization raises ZeroDivisorFound
    and equality falls back to raw representatives.
    """

    __slots__ = ("algebra", "coords", "_norm")

    def __init__(self, algebra: EtaleAlgebra, coords: Iterable):
        coords = tuple(algebra.element(c) for c in coords)
        if len(coords) != 4:
            raise ValueError("projective points here live in P^3")
        if all(c.is_zero for c in coords):
            raise ValueError("all coordinates are zero")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_norm", None)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @classmethod
    def rational(cls, values: Sequence) -> "ProjPoint":
        return cls(RATIONALS, [RATIONALS.element(v) for v in values])

    @property
    def is_rational(self) -> bool:
        return self.algebra.degree == 1

    def normalized(self) -> "ProjPoint":
        """Scale the last unit coordinate to 1 (deterministic representative)."""
        if self._norm is not None:
            return self._norm
        idx = _scan_units(self.coords, self.algebra)
        inv = self.coords[idx].inverse()
        norm = ProjPoint(self.algebra, [inv * c for c in self.coords])
        object.__setattr__(norm, "_norm", norm)
        object.__setattr__(self, "_norm", norm)
        return norm

    def key(self):
        """Canonical hashable key; normalized when possible."""
        try:
            pt = self.normalized()
        except ZeroDivisorFound:
            pt = self
        return (self.algebra.modulus.coeffs, tuple(c.rep.coeffs for c in pt.coords))

    def rational_coords(self) -> tuple:
        """Coordinates as Fractions; requires a degree-1 algebra."""
        return tuple(c.constant_value() for c in self.coords)

    def in_algebra(self, algebra: EtaleAlgebra) -> "ProjPoint":
        """Recoordinatize a rational point inside a bigger algebra."""
        if algebra == self.algebra:
            return self
        return ProjPoint(algebra, [algebra.from_rational(q) for q in self.rational_coords()])

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.algebra != other.algebra:
            return False
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"ProjPoint({list(self.coords)!r})"

    def to_json(self):
        try:
            pt = self.normalized()
        except ZeroDivisorFound:
            pt = self
        if self.is_rational:
            return [fraction_to_string(q) for q in pt.rational_coords()]
        return {
            "modulus": self.algebra.modulus.to_strings(),
            "coords": [c.rep.to_strings() for c in pt.coords],
        }


def point_from_json(obj) -> ProjPoint:
    if isinstance(obj, dict):
        algebra = EtaleAlgebra(Poly.from_strings(obj["modulus"]))
        return ProjPoint(algebra, [algebra.element(Poly.from_strings(c)) for c in obj["coords"]])
    return ProjPoint.rational(obj)


class Line:
    """Line in P^3 spanned by two basepoints over a common algebra."""

    __slots__ = ("algebra", "p", "q")

    def __init__(self, p: ProjPoint, q: ProjPoint):
        if p.algebra != q.algebra:
            raise ValueError("basepoints over different algebras")
        _check_spanning(p.coords, q.coords, p.algebra)
        object.__setattr__(self, "algebra", p.algebra)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    @classmethod
    def rational(cls, p: Sequence, q: Sequence) -> "Line":
        return cls(ProjPoint.rational(p), ProjPoint.rational(q))

    def at(self, s, t) -> tuple:
        """Coordinates of s*p + t*q."""
        return tuple(s * a + t * b for a, b in zip(self.p.coords, self.q.coords))

    def in_algebra(self, algebra: EtaleAlgebra) -> "Line":
        if algebra == self.algebra:
            return self
        return Line(self.p.in_algebra(algebra), self.q.in_algebra(algebra))

    def contains(self, point: ProjPoint) -> bool:
        rows = [point.coords, self.p.coords, self.q.coords]
        return all(
            _det3([r[i] for r in rows] for i in cols).is_zero
            for cols in itertools.combinations(range(4), 3)
        )

    def __repr__(self):
        return f"Line({self.p!r}, {self.q!r})"

    def to_json(self):
        return [self.p.to_json(), self.q.to_json()]


def line_from_json(obj) -> Line:
    return Line(point_from_json(obj[0]), point_from_json(obj[1]))


def _check_spanning(u, v, algebra):
    """Require the 4x2 matrix [u v] to have a unit 2x2 minor."""
    witness = None
    for i, j in itertools.combinations(range(4), 2):
        m = _det2(u[i], v[i], u[j], v[j])
        if m.is_zero:
            continue
        if m.is_unit():
            return
        if witness is None:
            witness = m
    if witness is not None:
        raise ZeroDivisorFound(algebra, witness.zero_divisor_factor())
    raise EqualPoints("basepoints coincide as projective points")


@dataclass(frozen=True)
class PlanePencil:
    """Pencil of planes through a base line (the axis)."""

    axis: Line


class CubicForm:
    """Homogeneous cubic form in X0..X3 with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for exp, coeff in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 4 or any(e < 0 for e in exp) or sum(exp) != 3:
                raise ValueError(f"{exp} is not a degree-3 exponent vector on 4 variables")
            coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if coeff != 0:
                clean[exp] = clean.get(exp, Fraction(0)) + coeff
        clean = {e: c for e, c in clean.items() if c != 0}
        if not clean:
            raise ValueError("the zero form is not a cubic surface")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("CubicForm is immutable")

    @classmethod
    def fermat(cls) -> "CubicForm":
        return cls.diagonal(1, 1, 1, 1)

    @classmethod
    def diagonal(cls, a, b, c, d) -> "CubicForm":
        exps = [(3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 3, 0), (0, 0, 0, 3)]
        return cls({e: v for e, v in zip(exps, (a, b, c, d)) if Fraction(v) != 0})

    def value_at(self, coords: Sequence):
        """Evaluate at any 4 ring elements (Fractions or AlgElements)."""
        total = None
        for exp, coeff in self.terms.items():
            term = coeff
            for c, e in zip(coords, exp):
                for _ in range(e):
                    term = term * c
            total = term if total is None else total + term
        return total

    def evaluate(self, point: ProjPoint) -> AlgElement:
        """Value at the point's coordinates; zero iff the point lies on the surface."""
        return point.algebra.element(self.value_at(point.coords))

    def gradient_at(self, coords: Sequence) -> tuple:
        out = []
        for i in range(4):
            part = None
            for exp, coeff in self.terms.items():
                if exp[i] == 0:
                    continue
                term = coeff * exp[i]
                for j, e in enumerate(exp):
                    f = e - 1 if j == i else e
                    for _ in range(f):
                        term = term * coords[j]
                part = term if part is None else part + term
            if part is None:
                part = Fraction(0)
            out.append(part)
        return tuple(out)

    def integer_terms(self) -> list:
        """Terms with denominators cleared, for integer-kernel evaluation."""
        denom = 1
        for coeff in self.terms.values():
            denom = denom * coeff.denominator // _gcd(denom, coeff.denominator)
        return [(exp, int(coeff * denom)) for exp, coeff in self.terms.items()]

    def __eq__(self, other):
        return isinstance(other, CubicForm) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        return f"CubicForm({self.terms!r})"

    def to_json(self) -> dict:
        return {
            "vars": 4,
            "degree": 3,
            "monomials": [
                {"exp": list(exp), "coeff": fraction_to_string(coeff)}
                for exp, coeff in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CubicForm":
        if obj.get("vars", 4) != 4 or obj.get("degree", 3) != 3:
            raise ValueError("expected a cubic form in 4 variables")
        return cls({tuple(m["exp"]): Fraction(m["coeff"]) for m in obj["monomials"]})


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class BinaryCubic:
    """Restriction of a cubic form to a line: sum of c[i] * s^(3-i) * t^i.

    The parametrization is s*p + t*q for the basepoints (p, q) used to build
    it; c0 = value at p, c3 = value at q.
    """

    algebra: EtaleAlgebra
    coeffs: tuple

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def rational_coeffs(self) -> tuple:
        return tuple(c.constant_value() for c in self.coeffs)

    def dehomogenized(self):
        """(poly in the affine parameter t, multiplicity of the root at infinity).

        Degree-1 algebras only; the root at infinity is the basepoint q.
        """
        c = self.rational_coeffs()
        poly = Poly(c)
        inf_mult = 0 if self.is_zero else 3 - poly.degree
        return poly, inf_mult

    def value(self, s, t):
        c0, c1, c2, c3 = self.coeffs
        return ((c0 * s + c1 * t) * s + c2 * t * t) * s + c3 * t * t * t


def _restrict_coords(surface: CubicForm, algebra: EtaleAlgebra, p, q) -> BinaryCubic:
    c0 = algebra.element(surface.value_at(p))
    c3 = algebra.element(surface.value_at(q))
    plus = algebra.element(surface.value_at(_vadd(p, q)))
    minus = algebra.element(surface.value_at(_vsub(p, q)))
    half = Fraction(1, 2)
    c2 = half * (plus + minus) - c0
    c1 = half * (plus - minus) - c3
    return BinaryCubic(algebra, (c0, c1, c2, c3))


def restrict_to_line(surface: CubicForm, line: Line) -> BinaryCubic:
    """Binary cubic cut on the line; identically zero iff the line lies in S."""
    return _restrict_coords(surface, line.algebra, line.p.coords, line.q.coords)


def third_point(surface: CubicForm, x: ProjPoint, y: ProjPoint) -> ProjPoint:
    """Residual intersection point of the secant through x and y.

    Both points must lie on the surface and differ projectively; the secant
    must not be contained in the surface.  With basepoints on S the
    restricted cubic is s*t*(c1*s + c2*t), so the third root is (c2 : -c1)
    and no division is needed.
    """
    if x.algebra != y.algebra:
        raise ValueError("points over different algebras")
    algebra = x.algebra
    if not surface.evaluate(x).is_zero or not surface.evaluate(y).is_zero:
        raise PointNotOnSurface("secant endpoints must lie on the surface")
    _check_spanning(x.coords, y.coords, algebra)
    cubic = _restrict_coords(surface, algebra, x.coords, y.coords)
    _, c1, c2, _ = cubic.coeffs
    if c1.is_zero and c2.is_zero:
        raise LineInSurface("the secant is contained in the surface")
    residual = tuple(c2 * a - c1 * b for a, b in zip(x.coords, y.coords))
    return ProjPoint(algebra, residual).normalized()


def fiber_plane(pencil: PlanePencil, x: ProjPoint) -> tuple:
    """The unique plane of the pencil through x, as a linear form on X0..X3.

    Computed as the signed 3x3 minors of the rows (axis basepoints, x); all
    minors vanishing means x lies on the axis.
    """
    axis = pencil.axis.in_algebra(x.algebra)
    rows = [axis.p.coords, axis.q.coords, x.coords]
    n = []
    for i in range(4):
        cols = [j for j in range(4) if j != i]
        minor = _det3([row[j] for j in cols] for row in rows)
        n.append(minor if i % 2 == 0 else -minor)
    if all(c.is_zero for c in n):
        raise PointOnAxis("point lies on the pencil axis")
    _scan_units(n, x.algebra)
    return tuple(n)


def tangent_residual(surface: CubicForm, pencil: PlanePencil, x: ProjPoint) -> ProjPoint:
    """Residual intersection of the tangent line at x to its plane section.

    x must be on the surface, off the pencil axis, and a smooth point of the
    section E = S ∩ (plane of the pencil through x).  The tangent line meets
    S doubly at x; the output is the remaining intersection point, which on
    an elliptic section realizes multiplication by -2.
    """
    algebra = x.algebra
    if not surface.evaluate(x).is_zero:
        raise PointNotOnSurface("tangent process needs a surface point")
    n = fiber_plane(pencil, x)
    grad = tuple(algebra.element(g) for g in surface.gradient_at(x.coords))

    # Tangent direction: the plane form and the gradient cut out a rank-2
    # system whose kernel is spanned by x and the tangent direction.
    pivot = None
    witness = None
    for i, j in itertools.combinations(range(4), 2):
        minor = _det2(n[i], n[j], grad[i], grad[j])
        if minor.is_zero:
            continue
        if minor.is_unit():
            pivot = (i, j, minor)
            break
        if witness is None:
            witness = minor
    if pivot is None:
        if witness is not None:
            raise ZeroDivisorFound(algebra, witness.zero_divisor_factor())
        raise SingularSectionPoint("gradient is proportional to the plane normal")

    i, j, minor = pivot
    free = [k for k in range(4) if k not in (i, j)]
    inv = minor.inverse()

    def kernel_vector(k: int) -> tuple:
        # Solve [n_i n_j; g_i g_j] (v_i, v_j) = -(n_k, g_k); free coord k = 1.
        vi = inv * (n[j] * grad[k] - n[k] * grad[j])
        vj = inv * (n[k] * grad[i] - n[i] * grad[k])
        v = [algebra.zero] * 4
        v[i], v[j], v[k] = vi, vj, algebra.one
        return tuple(v)

    k, l = free
    xk, xl = x.coords[k], x.coords[l]
    if xl.is_unit():
        direction = kernel_vector(k)
    elif xk.is_unit():
        direction = kernel_vector(l)
    elif not xl.is_zero:
        raise ZeroDivisorFound(algebra, xl.zero_divisor_factor())
    elif not xk.is_zero:
        raise ZeroDivisorFound(algebra, xk.zero_divisor_factor())
    else:  # x is supported on the pivot coordinates only, so x = 0: impossible
        raise AssertionError("point outside the kernel it must lie in")

    cubic = _restrict_coords(surface, algebra, x.coords, direction)
    c0, c1, c2, c3 = cubic.coeffs
    assert c0.is_zero and c1.is_zero, "tangency must force a double root"
    if c2.is_zero and c3.is_zero:
        raise TangentLineInSurface("tangent line is contained in the surface")
    residual = tuple(c3 * a - c2 * b for a, b in zip(x.coords, direction))
    if all(c.is_zero for c in residual):
        raise TangentLineInSurface("tangent line is contained in the surface")
    return ProjPoint(algebra, residual).normalized()


@dataclass(frozen=True)
class LengthThreeScheme:
    """A length-<=3 point package over one etale algebra.

    `point` is a single algebra-valued surface point; over the algebraic
    closure it spreads out into deg(algebra) points.  `non_reduced` records
    that the producing intersection had a repeated root (the scheme stored
    here is the reduced one).  `known_parameters` are parameter values of
    components discovered without any factorization (visible rational
    roots); when they account for the whole modulus degree the scheme is
    fully split.
    """

    algebra: EtaleAlgebra
    point: ProjPoint
    line: Optional[Line]
    non_reduced: bool
    known_parameters: tuple = ()

    @property
    def degree(self) -> int:
        return self.algebra.degree

    @property
    def fully_split(self) -> bool:
        return len(self.known_parameters) == self.algebra.degree

    def component_point(self, tau) -> ProjPoint:
        """Rational point obtained by evaluating coordinates at a known parameter."""
        coords = [c.at_root(tau) for c in self.point.coords]
        return ProjPoint.rational(coords).normalized()

    def rational_points(self) -> list:
        return [self.component_point(tau) for tau in self.known_parameters]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "non_reduced": self.non_reduced,
            "fully_split": self.fully_split,
            "known_parameters": [fraction_to_string(t) for t in self.known_parameters],
            "point": self.point.to_json(),
        }


def line_section(surface: CubicForm, line: Line) -> LengthThreeScheme:
    """The length-3 subscheme cut on the surface by a rational line.

    Builds Q[t]/(g) from the monic squarefree part of the restricted cubic,
    after an internal reparametrization that moves every intersection point
    away from the parameter at infinity.  Roots visible without any
    factorization (basepoints on S, plus a leftover linear factor) are
    reported in `known_parameters`.
    """
    if line.algebra.degree != 1:
        raise ValueError("line sections are built from rational lines")
    cubic = restrict_to_line(surface, line)
    c = list(cubic.rational_coeffs())
    if all(v == 0 for v in c):
        raise LineInSurface("the line is contained in the surface")

    p = line.p.rational_coords()
    q = line.q.rational_coords()

    # Visible roots (s : t) of the binary cubic, found without factoring:
    # (1:0) and (0:1) are the basepoints, and stripping both may leave a
    # linear factor whose root is rational by inspection.
    lead_zeros = 0
    while c[lead_zeros] == 0:
        lead_zeros += 1
    trail_zeros = 0
    while c[3 - trail_zeros] == 0:
        trail_zeros += 1
    visible = []
    if lead_zeros:
        visible.append((Fraction(1), Fraction(0)))
    if trail_zeros:
        visible.append((Fraction(0), Fraction(1)))
    mids = c[lead_zeros : 4 - trail_zeros]
    if len(mids) == 2:
        visible.append((mids[1], -mids[0]))

    # Reparametrize (p, q) -> (p, k*p + q) so the new second basepoint is off
    # the surface; a nonzero binary cubic has at most 3 roots, so some k in
    # 0..3 works.
    for k in range(4):
        if cubic.value(Fraction(k), Fraction(1)).constant_value() != 0:
            break
    else:
        raise AssertionError("a nonzero binary cubic cannot vanish at 4 parameters")
    q_new = _vadd(_vscale(Fraction(k), p), q)

    # g'(s', t') = g(s' + k t', t'): expand (s' + k t')^(3-i) binomially.
    shifted = [Fraction(0)] * 4
    binom = ((1,), (1, 1), (1, 2, 1), (1, 3, 3, 1))
    for i, ci in enumerate(c):
        if ci == 0:
            continue
        for r in range(3 - i + 1):
            shifted[i + r] += ci * binom[3 - i][r] * Fraction(k) ** r
    assert shifted[3] != 0
    affine = Poly(shifted).monic()
    reduced = squarefree_part(affine)
    non_reduced = reduced.degree < 3

    params = []
    for s, t in visible:
        # parameter in the new chart: s*p + t*q = (s - k t)*p + t*q_new
        denom = s - k * t
        assert denom != 0, "a visible root landed on the new basepoint"
        tau = t / denom
        assert reduced(tau) == 0
        if tau not in params:
            params.append(tau)
    params.sort()

    algebra = EtaleAlgebra(reduced)
    tbar = algebra.generator
    coords = [algebra.from_rational(a) + tbar * algebra.from_rational(b) for a, b in zip(p, q_new)]
    point = ProjPoint(algebra, coords)
    assert surface.evaluate(point).is_zero
    return LengthThreeScheme(
        algebra=algebra,
        point=point,
        line=line,
        non_reduced=non_reduced,
        known_parameters=tuple(params),
    )


def _tangent_on_components(
    surface: CubicForm, axis: Line, algebra: EtaleAlgebra, point: ProjPoint
) -> ProjPoint:
    """Tangent process over an algebra, splitting lazily at zero divisors."""
    from .algebra import crt_combine

    try:
        return tangent_residual(surface, PlanePencil(axis.in_algebra(algebra)), point)
    except ZeroDivisorFound as zd:
        sub_a, sub_b = algebra.split(zd.factor)
        results = []
        for sub in (sub_a, sub_b):
            sub_point = ProjPoint(sub, [c.reduce_mod(sub) for c in point.coords])
            results.append(_tangent_on_components(surface, axis, sub, sub_point))
        combined = [
            crt_combine(algebra, a, b)
            for a, b in zip(results[0].coords, results[1].coords)
        ]
        return ProjPoint(algebra, combined)


def tangent_triple(surface: CubicForm, pencil: PlanePencil, line: Line) -> LengthThreeScheme:
    """Apply the tangent process to every point of a line section at once.

    The line cuts a length-3 scheme off the surface; over its degree-<=3
    algebra the tangent process is applied to the tautological point, which
    over the algebraic closure is the triple of residual tangent points.
    Genericity failures propagate; zero divisors arising mid-computation
    split the algebra and the computation proceeds componentwise.
    """
    if pencil.axis.algebra.degree != 1:
        raise ValueError("the pencil axis must be a rational line")
    scheme = line_section(surface, line)
    image = _tangent_on_components(surface, pencil.axis, scheme.algebra, scheme.point)
    assert surface.evaluate(image).is_zero
    return LengthThreeScheme(
        algebra=scheme.algebra,
        point=image,
        line=None,
        non_reduced=scheme.non_reduced,
        known_parameters=scheme.known_parameters,
    )


def collinear(x: ProjPoint, y: ProjPoint, z: ProjPoint) -> bool:
    """True iff the 3x4 coordinate matrix has all 3x3 minors zero."""
    algebras = {p.algebra for p in (x, y, z)}
    if len(algebras) > 1:
        big = max(algebras, key=lambda a: a.degree)
        x, y, z = (p.in_algebra(big) for p in (x, y, z))
    rows = [x.coords, y.coords, z.coords]
    return all(
        _det3([row[j] for j in cols] for row in rows).is_zero
        for cols in itertools.combinations(range(4), 3)
    )
