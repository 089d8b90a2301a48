"""Truncated Chow ring of a product of three curves, and the skew-lines pencil check.

The ring has three square-zero generators (the hyperplane classes pulled
back from the factors of C_x x C_y x C_z), which is exactly enough to carry
the Segre-class degree count showing the collinearity locus strictly exceeds
its diagonal sublocus in degree, together with the exact rank computation
identifying the plane triples through three skew lines that form a pencil.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

GENERATORS = ("x", "y", "z")


class NotInStandardPosition(Exception):
    pass


class LinesIntersect(Exception):
    pass


class TriClass:
    """Integer combination of products of the square-zero generators.

    Keys are subsets of {"x", "y", "z"}; the empty set indexes the
    fundamental-class multiple.  Codimension of a monomial = subset size.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[frozenset, int]):
        clean = {}
        for subset, value in coeffs.items():
            subset = frozenset(subset)
            if not subset <= set(GENERATORS):
                raise ValueError(f"unknown generators in {set(subset)}")
            value = int(value)
            if value:
                clean[subset] = clean.get(subset, 0) + value
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("TriClass is immutable")

    @classmethod
    def zero(cls) -> "TriClass":
        return cls({})

    @classmethod
    def one(cls) -> "TriClass":
        return cls({frozenset(): 1})

    @classmethod
    def generator(cls, name: str) -> "TriClass":
        return cls({frozenset({name}): 1})

    def coeff(self, subset) -> int:
        return self.coeffs.get(frozenset(subset), 0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def codimension_part(self, k: int) -> "TriClass":
        return TriClass({s: v for s, v in self.coeffs.items() if len(s) == k})

    def is_homogeneous(self, k: int) -> bool:
        return all(len(s) == k for s in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for s, v in other.coeffs.items():
            out[s] = out.get(s, 0) + v
        return TriClass(out)

    __radd__ = __add__

    def __neg__(self):
        return TriClass({s: -v for s, v in self.coeffs.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        """Product with the square-zero rule: overlapping subsets annihilate."""
        if isinstance(other, int):
            return TriClass({s: v * other for s, v in self.coeffs.items()})
        if not isinstance(other, TriClass):
            return NotImplemented
        out: Dict[frozenset, int] = {}
        for s1, v1 in self.coeffs.items():
            for s2, v2 in other.coeffs.items():
                if s1 & s2:
                    continue
                key = s1 | s2
                out[key] = out.get(key, 0) + v1 * v2
        return TriClass(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if self.is_zero:
            return "TriClass(0)"
        parts = []
        for subset in sorted(self.coeffs, key=lambda s: (len(s), sorted(s))):
            label = "".join(sorted(subset)) or "1"
            parts.append(f"{self.coeffs[subset]}*{label}")
        return "TriClass(" + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        return {
            ("".join(sorted(s)) or "1"): v
            for s, v in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        }


def _coerce(value):
    if isinstance(value, TriClass):
        return value
    if isinstance(value, int):
        return TriClass({frozenset(): value}) if value else TriClass.zero()
    return NotImplemented


ALPHA = TriClass.generator("x")
BETA = TriClass.generator("y")
GAMMA = TriClass.generator("z")


@dataclass(frozen=True)
class CurveDegrees:
    """Degrees of the polarizations O(1) on the three curve factors."""

    deg_x: int = 6
    deg_y: int = 6
    deg_z: int = 6

    def __post_init__(self):
        if min(self.deg_x, self.deg_y, self.deg_z) <= 0:
            raise ValueError("curve degrees must be positive")


def segre_s2(a: TriClass = ALPHA, b: TriClass = BETA, c: TriClass = GAMMA) -> TriClass:
    """Second Segre class of a sum of three dual line classes: ab + ac + bc."""
    return a * b + a * c + b * c


def total_segre(a: TriClass = ALPHA, b: TriClass = BETA, c: TriClass = GAMMA) -> TriClass:
    """Whitney product (1+a)(1+b)(1+c)."""
    one = TriClass.one()
    return (one + a) * (one + b) * (one + c)


def degree_wrt_first(cls: TriClass, degs: CurveDegrees = CurveDegrees()) -> int:
    """Degree of a curve class measured against the first factor's hyperplane.

    The class must be homogeneous of codimension 2; multiplying by the first
    generator kills everything but the yz-part, and the top monomial
    evaluates to the product of the three curve degrees.
    """
    if not cls.is_homogeneous(2):
        raise ValueError("degree is defined for homogeneous codimension-2 classes")
    top = ALPHA * cls
    return top.coeff({"x", "y", "z"}) * degs.deg_x * degs.deg_y * degs.deg_z


def diagonal_locus_degree(pair_points: int = 12, degs: CurveDegrees = CurveDegrees()) -> int:
    """Degree (against the first factor) of the locus where two coordinates merge.

    The last two curves meet in `pair_points` points; over each the locus is
    a copy of the first curve, of degree deg_x.
    """
    if pair_points < 0:
        raise ValueError("intersection count must be nonnegative")
    return pair_points * degs.deg_x


def collinearity_report(degs: CurveDegrees = CurveDegrees(), pair_points: int = 12) -> dict:
    """The degree comparison that makes honest collinear triples exist.

    deg_D2 counts the full rank-drop locus, deg_D2_prime the degenerate
    sublocus with two equal coordinates; the strict inequality leaves room
    for triples of pairwise distinct collinear points.
    """
    d2 = degree_wrt_first(segre_s2(), degs)
    d2_prime = diagonal_locus_degree(pair_points, degs)
    return {
        "deg_D2": d2,
        "deg_D2_prime": d2_prime,
        "strict_inequality": d2 > d2_prime,
        "degrees": [degs.deg_x, degs.deg_y, degs.deg_z],
        "pair_points": pair_points,
        "s2": segre_s2().to_json(),
    }


# --- pencil condition for three pairwise skew lines ------------------------

#: Standard skew triple: X0=X1=0, X2=X3=0, X0-X2=X1-X3=0, each as a spanning pair.
STANDARD_LINES = (
    ((0, 0, 1, 0), (0, 0, 0, 1)),
    ((1, 0, 0, 0), (0, 1, 0, 0)),
    ((1, 0, 1, 0), (0, 1, 0, 1)),
)


def _frac_rows(rows) -> list:
    return [[Fraction(v) for v in row] for row in rows]


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Exact rank over Q by fraction-free-enough Gaussian elimination."""
    m = _frac_rows(rows)
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col] == 0:
                continue
            factor = m[r][col] / lead
            m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def plane_rows(u: Tuple, v: Tuple, w: Tuple) -> list:
    """Coefficient rows of the planes through the standard lines.

    u = (u0:u1) picks u0*X0 + u1*X1 through the first line, v = (v2:v3)
    picks v2*X2 + v3*X3 through the second, w = (w:w') picks
    w*(X0-X2) + w'*(X1-X3) through the third.
    """
    for pair in (u, v, w):
        if len(pair) != 2 or all(Fraction(c) == 0 for c in pair):
            raise ValueError("each plane parameter must be a nonzero pair")
    u0, u1 = (Fraction(c) for c in u)
    v2, v3 = (Fraction(c) for c in v)
    w0, w1 = (Fraction(c) for c in w)
    return [
        [u0, u1, 0, 0],
        [0, 0, v2, v3],
        [w0, w1, -w0, -w1],
    ]


def pencil_rank(u: Tuple, v: Tuple, w: Tuple) -> int:
    """Rank of the three plane forms: 2 means they generate a pencil."""
    return matrix_rank(plane_rows(u, v, w))


def diagonal_triple(param: Tuple) -> Tuple[Tuple, Tuple, Tuple]:
    """The diagonal parameter triple; always yields a pencil."""
    return tuple(param), tuple(param), tuple(param)


def _span_matches(points, standard) -> bool:
    std = _frac_rows(standard)
    if matrix_rank(std) != 2:
        return False
    for point in points:
        if matrix_rank(std + [[Fraction(c) for c in point]]) != 2:
            return False
    return True


def pencil_condition_solve(lines=STANDARD_LINES) -> dict:
    """Describe the plane triples through the standard skew lines forming a pencil.

    The input lines must be the standard triple (reduce arbitrary skew
    triples first with `standardize_skew_lines`).  The family is the
    diagonal copy of P^1: parameters (u0:u1) = (v2:v3) = (w:w'); the result
    carries sample verifications at a few exact parameters.
    """
    given = [tuple(tuple(Fraction(c) for c in p) for p in line) for line in lines]
    for line, standard in zip(given, STANDARD_LINES):
        if not _span_matches(line, standard):
            raise NotInStandardPosition(
                "expected the lines X0=X1=0, X2=X3=0, X0-X2=X1-X3=0"
            )
    samples = []
    for a, b in ((1, 0), (0, 1), (1, 1), (2, -3)):
        triple = diagonal_triple((a, b))
        samples.append({"param": [a, b], "rank": pencil_rank(*triple)})
    off = pencil_rank((1, 0), (0, 1), (1, 0))
    return {
        "family": "diagonal",
        "description": "(u0:u1) = (v2:v3) = (w:w')",
        "diagonal_samples": samples,
        "off_diagonal_example_rank": off,
    }


def _det4(rows) -> Fraction:
    m = _frac_rows(rows)
    det = Fraction(1)
    for col in range(4):
        pivot = None
        for r in range(col, 4):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        lead = m[col][col]
        for r in range(col + 1, 4):
            factor = m[r][col] / lead
            m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _mat_inv(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(n):
            if r == col or aug[r][col] == 0:
                continue
            factor = aug[r][col]
            aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def standardize_skew_lines(lines) -> list:
    """A coordinate change carrying three pairwise skew lines to the standard triple.

    Each line is a pair of spanning 4-vectors.  Raises LinesIntersect when
    two of the lines meet (the 4x4 spanning determinant vanishes); otherwise
    returns the 4x4 matrix T (new coordinates = T * old) and guarantees
    T maps the lines onto the spans of STANDARD_LINES.
    """
    pts = [[tuple(Fraction(c) for c in p) for p in line] for line in lines]
    for i, j in itertools.combinations(range(3), 2):
        stack = [list(pts[i][0]), list(pts[i][1]), list(pts[j][0]), list(pts[j][1])]
        if _det4(stack) == 0:
            raise LinesIntersect(f"lines {i} and {j} intersect")
    # Columns (p2, q2, p1, q1) send line 2 to span(e0, e1), line 1 to span(e2, e3).
    basis = [
        [pts[1][0][r], pts[1][1][r], pts[0][0][r], pts[0][1][r]] for r in range(4)
    ]
    t0 = _mat_inv(basis)
    r_new = _mat_mul(t0, [[c] for c in pts[2][0]])
    s_new = _mat_mul(t0, [[c] for c in pts[2][1]])
    r_new = [v[0] for v in r_new]
    s_new = [v[0] for v in s_new]
    bottom = [[r_new[2], s_new[2]], [r_new[3], s_new[3]]]
    combo = _mat_inv(bottom)
    # Re-span the third line so its lower half is the identity; the upper
    # half is then an invertible 2x2 block A, and diag(A^-1, I) straightens
    # the line onto the diagonal while preserving the first two.
    top = [[r_new[0], s_new[0]], [r_new[1], s_new[1]]]
    a_block = _mat_mul(top, combo)
    a_inv = _mat_inv(a_block)
    block = [
        [a_inv[0][0], a_inv[0][1], 0, 0],
        [a_inv[1][0], a_inv[1][1], 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
    transform = _mat_mul(_frac_rows(block), t0)
    for line, standard in zip(pts, STANDARD_LINES):
        image = [
            [v[0] for v in _mat_mul(transform, [[c] for c in p])] for p in line
        ]
        if not _span_matches(image, standard):
            raise AssertionError("standardization failed to reach the normal form")
    return transform
