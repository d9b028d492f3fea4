"""Imaginary hyperelliptic curves y^2 + h(x) y = f(x) with one point at infinity."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BadDegree, NonzeroHOddChar, NotOnCurve, SingularCurve, SingularSystem
from .gfield import FieldCtx, FieldElement
from .gpoly import Matrix, Poly, linsolve, resultant


@dataclass(frozen=True)
class Point:
    """An affine point (a, b)."""

    a: FieldElement
    b: FieldElement

    is_infinity = False

    def sort_key(self):
        return (self.a.v, self.b.v)

    def __str__(self):
        return f"({self.a},{self.b})"


class _Infinity:
    """The point Omega = [0:1:0]."""

    is_infinity = True
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def sort_key(self):
        return (float("inf"), float("inf"))

    def __repr__(self):
        return "inf"

    __str__ = __repr__


OMEGA = _Infinity()


class SingularCurveWarning(UserWarning):
    pass


@dataclass(eq=False)
class Curve:
    ctx: FieldCtx
    f: Poly
    h: Poly
    singular_ok: bool = False
    genus: int = field(init=False)
    nonsingular: bool = field(init=False)
    notes: list[str] = field(init=False, default_factory=list)

    def __post_init__(self):
        f, h = self.f, self.h
        d = f.degree
        if not f or d < 3 or d % 2 == 0:
            raise BadDegree(f"deg f must be odd and >= 3, got {d}")
        g = (d - 1) // 2
        if h.degree > g:
            raise BadDegree(f"deg h must be <= {g}, got {h.degree}")
        if self.ctx.p != 2 and h:
            raise NonzeroHOddChar("h must be zero in odd characteristic")
        self.genus = g
        self.nonsingular = self._certificate()
        if not self.nonsingular:
            msg = f"curve y^2 + ({h})y = {f} is singular"
            if not self.singular_ok:
                raise SingularCurve(msg)
            self.notes.append(msg)
            warnings.warn(msg, SingularCurveWarning, stacklevel=3)

    def _certificate(self) -> bool:
        f, h = self.f, self.h
        if self.ctx.p != 2:
            return bool(resultant(f, f.derivative()))
        if not h:
            return False
        dh = h.derivative()
        df = f.derivative()
        return bool(resultant(h, df * df + f * dh * dh))

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return (self.ctx, self.f, self.h, self.singular_ok) == (
            other.ctx, other.f, other.h, other.singular_ok,
        )

    def __hash__(self):
        return hash((self.ctx, self.f, self.h))

    # points ---------------------------------------------------------------

    def point(self, a, b) -> Point:
        """Build a point, checking the curve equation."""
        P = Point(self.ctx(a), self.ctx(b))
        if not self.on_curve(P):
            raise NotOnCurve(f"{P} is not on the curve")
        return P

    def on_curve(self, P) -> bool:
        if P.is_infinity:
            return True
        a, b = P.a, P.b
        return b * b + self.h(a) * b == self.f(a)

    def _require(self, P):
        if P.is_infinity:
            raise ValueError("expected an affine point")
        if not self.on_curve(P):
            raise NotOnCurve(f"{P} is not on the curve")

    def opposite(self, P: Point) -> Point:
        self._require(P)
        return Point(P.a, -P.b - self.h(P.a))

    def is_ramification(self, P: Point) -> bool:
        self._require(P)
        return P.b + P.b + self.h(P.a) == 0

    def is_singular_point(self, P) -> bool:
        if P.is_infinity:
            return False
        self._require(P)
        a, b = P.a, P.b
        dy = b + b + self.h(a)
        dx = self.h.derivative()(a) * b - self.f.derivative()(a)
        return not dy and not dx

    def points(self) -> list:
        """Affine rational points ordered by (a, b), then Omega."""
        out = []
        elems = self.ctx.elements()
        for a in elems:
            fa, ha = self.f(a), self.h(a)
            for b in elems:
                if b * b + ha * b == fa:
                    out.append(Point(a, b))
        out.append(OMEGA)
        return out


def curve_make(ctx: FieldCtx, f: Poly, h: Poly | None = None, singular_ok: bool = False) -> Curve:
    return Curve(ctx, f, h if h is not None else Poly(ctx), singular_ok)


def point_ops(curve: Curve, which: str, P):
    if which == "on_curve":
        if not curve.on_curve(P):
            raise NotOnCurve(f"{P} is not on the curve")
        return True
    if which == "opposite":
        return curve.opposite(P)
    if which == "is_ramification":
        return curve.is_ramification(P)
    raise ValueError(f"unknown point operation {which!r}")


def enumerate_points(curve: Curve) -> list:
    return curve.points()


@dataclass
class CurveFit:
    shift: FieldElement
    exponents: tuple[int, int]
    shifted: list[FieldElement]
    vandermonde: Matrix
    poly: Poly

    def shifted_poly(self) -> Poly:
        """Coefficients of f in powers of (x - shift), low-to-high from power 0."""
        lo = self.exponents[0]
        return Poly(self.poly.ctx, [0] * lo + list(self.shifted))


def vandermonde(ctx: FieldCtx, shift, exponents: tuple[int, int], xs: Sequence) -> Matrix:
    lo, hi = exponents
    c = ctx(shift)
    return Matrix.from_rows(ctx, [[(ctx(x) - c) ** k for k in range(lo, hi + 1)] for x in xs])


def fit_curve(ctx: FieldCtx, shift, exponents: tuple[int, int], samples: Sequence) -> CurveFit:
    """Find f = sum_k a_k (x - shift)^k, k in the exponent range, with y_i^2 = f(x_i)."""
    lo, hi = exponents
    if hi < lo or lo < 0:
        raise ValueError(f"bad exponent range {lo}..{hi}")
    if len(samples) != hi - lo + 1:
        raise ValueError(f"need {hi - lo + 1} samples, got {len(samples)}")
    xs = [ctx(x) for x, _ in samples]
    ys = [ctx(y) for _, y in samples]
    V = vandermonde(ctx, shift, exponents, xs)
    sol, null = linsolve(ctx, V, [y * y for y in ys])
    if sol is None or null:
        raise SingularSystem("Vandermonde system is singular (repeated abscissa or x = shift)")
    shifted_form = Poly(ctx, [0] * lo + sol)
    return CurveFit(ctx(shift), (lo, hi), sol, V, shifted_form.shift(-ctx(shift)))
