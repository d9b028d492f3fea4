"""Function-field elements (A + B*y)/C on a hyperelliptic curve, with exact valuations."""
from __future__ import annotations

from typing import Iterable, Mapping

from .curve import OMEGA, Curve, Point
from .errors import DivisionByZero, NotOnCurve, PoleAtPoint, ZeroFunction
from .gfield import FieldElement
from .gpoly import Poly, poly_gcd


class FuncElem:
    """(A + B*y)/C kept in lowest terms with C monic."""

    __slots__ = ("curve", "A", "B", "C")

    def __init__(self, curve: Curve, A, B=None, C=None):
        ctx = curve.ctx
        A = _as_poly(curve, A)
        B = _as_poly(curve, B) if B is not None else Poly(ctx)
        C = _as_poly(curve, C) if C is not None else Poly(ctx, [1])
        if not C:
            raise DivisionByZero("zero denominator")
        if not A and not B:
            C = Poly(ctx, [1])
        else:
            g = poly_gcd(poly_gcd(A, B), C)
            if g.degree > 0:
                A, B, C = A // g, B // g, C // g
            lead = C.lead
            if lead != 1:
                inv = lead.inv()
                A, B, C = A.scale(inv), B.scale(inv), C.scale(inv)
        self.curve = curve
        self.A, self.B, self.C = A, B, C

    @classmethod
    def x(cls, curve: Curve) -> "FuncElem":
        return cls(curve, Poly.x(curve.ctx))

    @classmethod
    def y(cls, curve: Curve) -> "FuncElem":
        return cls(curve, Poly(curve.ctx), Poly(curve.ctx, [1]))

    @classmethod
    def const(cls, curve: Curve, c) -> "FuncElem":
        return cls(curve, Poly(curve.ctx, [c]))

    def is_zero(self) -> bool:
        return not self.A and not self.B

    def __bool__(self):
        return not self.is_zero()

    def _lift(self, other) -> "FuncElem | None":
        if isinstance(other, FuncElem):
            return other
        if isinstance(other, (int, FieldElement, Poly)):
            return FuncElem(self.curve, other)
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self.A, self.B, self.C) == (o.A, o.B, o.C)

    def __hash__(self):
        return hash((self.A, self.B, self.C))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FuncElem(
            self.curve,
            self.A * o.C + o.A * self.C,
            self.B * o.C + o.B * self.C,
            self.C * o.C,
        )

    __radd__ = __add__

    def __neg__(self):
        return FuncElem(self.curve, -self.A, -self.B, self.C)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        f, h = self.curve.f, self.curve.h
        # y^2 = f - h*y
        bb = self.B * o.B
        return FuncElem(
            self.curve,
            self.A * o.A + bb * f,
            self.A * o.B + o.A * self.B - bb * h,
            self.C * o.C,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = FuncElem.const(self.curve, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "FuncElem":
        """Image under the hyperelliptic involution y -> -y - h."""
        return FuncElem(self.curve, self.A - self.B * self.curve.h, -self.B, self.C)

    def norm(self) -> tuple[Poly, Poly]:
        """F * conj(F) as a reduced ratio (numerator, monic denominator) in x."""
        return _reduce_ratio(numerator_norm(self.curve, self.A, self.B), self.C * self.C)

    def inv(self) -> "FuncElem":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero function")
        num, den = self.norm()
        c = self.conj()
        # conj(F) / norm(F) = (A' + B'y) * den / (C * num)
        return FuncElem(self.curve, c.A * den, c.B * den, c.C * num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def render(self) -> str:
        B = _wrap(self.B, self.B.degree > 0 and len([c for c in self.B.coeffs if c]) > 1)
        C = _wrap(self.C, self.C.degree > 0)
        return f"({self.A} + {B}*y)/{C}"

    def __repr__(self):
        return f"FuncElem{self.render()}"

    __str__ = render


def _wrap(p: Poly, paren: bool) -> str:
    s = p.render()
    return f"({s})" if paren else s


def _as_poly(curve: Curve, v) -> Poly:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (list, tuple)):
        return Poly(curve.ctx, v)
    return Poly(curve.ctx, [v])


def _reduce_ratio(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not num:
        return num, Poly(den.ctx, [1])
    g = poly_gcd(num, den)
    num, den = num // g, den // g
    inv = den.lead.inv()
    return num.scale(inv), den.scale(inv)


def numerator_norm(curve: Curve, A: Poly, B: Poly) -> Poly:
    """(A + B y)(A - B h - B y) = A^2 - A B h - B^2 f."""
    return A * A - A * B * curve.h - B * B * curve.f


def ff_arith(curve: Curve, op: str, F: FuncElem, G: FuncElem | None = None):
    if op == "add":
        return F + G
    if op == "mul":
        return F * G
    if op == "inv":
        return F.inv()
    if op == "conj":
        return F.conj()
    if op == "norm":
        return F.norm()
    raise ValueError(f"unknown function-field operation {op!r}")


# valuations ----------------------------------------------------------------

def valuation(curve: Curve, F: FuncElem, P) -> int:
    """Exact order of F at P (Omega allowed).

    At a singular point the value is the sum of the orders over all branches
    through it, i.e. the order at x = a of the norm of F; this is the only
    well-defined quantity without resolving the singularity.
    """
    if F.is_zero():
        raise ZeroFunction("valuation of the zero function")
    A, B, C = F.A, F.B, F.C
    if P.is_infinity:
        g = curve.genus
        cands = []
        if A:
            cands.append(-2 * A.degree)
        if B:
            cands.append(-2 * B.degree - (2 * g + 1))
        # the two candidates differ in parity, so the minimum is attained
        return min(cands) + 2 * C.degree
    if not curve.on_curve(P):
        raise NotOnCurve(f"{P} is not on the curve")
    a, b = P.a, P.b
    ord_c = C.order_at(a)
    if curve.is_singular_point(P):
        return numerator_norm(curve, A, B).order_at(a) - 2 * ord_c
    if curve.is_ramification(P):
        # local parameter y - b, and v(x - a) = 2
        cands = []
        centred = A + B.scale(b)
        if centred:
            cands.append(2 * centred.order_at(a))
        if B:
            cands.append(2 * B.order_at(a) + 1)
        return min(cands) - 2 * ord_c
    s, A1, B1 = _strip_common(A, B, a)
    if A1(a) + B1(a) * b:
        return s - ord_c
    # F vanishes at P; its conjugate cannot, so the norm sees only P
    return s + numerator_norm(curve, A1, B1).order_at(a) - ord_c


def _strip_common(A: Poly, B: Poly, a) -> tuple[int, Poly, Poly]:
    s = min(A.order_at(a), B.order_at(a))
    if s:
        lin = Poly.linear_root(A.ctx, a) ** s
        A, B = A // lin, B // lin
    return s, A, B


def _value_of_ratio(num: Poly, den: Poly, a) -> FieldElement:
    """Value at x = a of num/den, assumed to have no pole there."""
    ctx = num.ctx
    if not num:
        return ctx.zero
    kn, num = num.strip_root(a)
    kd, den = den.strip_root(a)
    if kn < kd:
        raise PoleAtPoint("rational function has a pole")
    if kn > kd:
        return ctx.zero
    return num(a) / den(a)


def ff_eval(curve: Curve, F: FuncElem, P: Point) -> FieldElement:
    if P.is_infinity:
        raise ValueError("evaluation is only defined at affine points")
    if not curve.on_curve(P):
        raise NotOnCurve(f"{P} is not on the curve")
    a, b = P.a, P.b
    A, B, C = F.A, F.B, F.C
    ca = C(a)
    if ca:
        return (A(a) + B(a) * b) / ca
    if F.is_zero():
        return curve.ctx.zero
    if valuation(curve, F, P) < 0:
        raise PoleAtPoint(f"{F} has a pole at {P}")
    if curve.is_singular_point(P):
        raise PoleAtPoint(f"value of {F} at the singular point {P} depends on the branch")
    if curve.is_ramification(P):
        # both (A + bB)/C and B(y - b)/C are regular; the second one vanishes
        return _value_of_ratio(A + B.scale(b), C, a)
    s, A1, B1 = _strip_common(A, B, a)
    lin_s = Poly.linear_root(curve.ctx, a) ** s
    here = A1(a) + B1(a) * b
    if here:
        return _value_of_ratio(lin_s, C, a) * here
    # F = (x-a)^s N(N~)/(C N~) with N~ = conj numerator, nonzero at P
    there = A1(a) - B1(a) * (b + curve.h(a))
    return _value_of_ratio(lin_s * numerator_norm(curve, A1, B1), C, a) / there


def denominator_support_check(curve: Curve, F: FuncElem, allowed_abscissas: Iterable) -> bool:
    """True iff every root of C (over the algebraic closure) is an allowed abscissa."""
    C = F.C
    for a in allowed_abscissas:
        _, C = C.strip_root(curve.ctx(a))
    return C.degree == 0


# local expansions ------------------------------------------------------------

def y_expansion(curve: Curve, P: Point, prec: int) -> list[FieldElement]:
    """Power series of y in t = x - a on the branch through a non-ramification point.

    Lifts y(a) = b coefficient by coefficient through y^2 + h y - f = 0; the
    derivative 2b + h(a) is a unit there.
    """
    if curve.is_ramification(P):
        raise ValueError("y is not a power series in x - a at a ramification point")
    ctx = curve.ctx
    a, b = P.a, P.b
    fs = curve.f.shift(a)
    hs = curve.h.shift(a)
    unit_inv = (b + b + curve.h(a)).inv()
    ys = [b]
    for j in range(1, prec):
        # coefficient j of y^2 + h y - f with y_j = 0
        acc = -fs.coeff(j)
        for i in range(1, j):
            acc = acc + ys[i] * ys[j - i]
        for i in range(0, j):
            acc = acc + hs.coeff(j - i) * ys[i]
        ys.append(-acc * unit_inv)
    return ys[:prec]


class Divisor:
    """Finite formal sum of curve points with nonzero integer multiplicities."""

    def __init__(self, curve: Curve, entries: Mapping | Iterable = ()):
        self.curve = curve
        self.entries: dict = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for P, m in items:
            if not curve.on_curve(P):
                raise NotOnCurve(f"{P} is not on the curve")
            self.entries[P] = self.entries.get(P, 0) + int(m)
        self.entries = {P: m for P, m in self.entries.items() if m}

    @classmethod
    def reduced(cls, curve: Curve, affine: Iterable, omega: int) -> "Divisor":
        """Build sum m_i P_i + omega * Omega from (P_i, m_i) pairs."""
        return cls(curve, list(affine) + [(OMEGA, omega)])

    def __getitem__(self, P) -> int:
        return self.entries.get(P, 0)

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.entries == other.entries

    @property
    def degree(self) -> int:
        return sum(self.entries.values())

    @property
    def omega(self) -> int:
        return self.entries.get(OMEGA, 0)

    def affine(self) -> list[tuple[Point, int]]:
        """Affine support with multiplicities, in canonical point order."""
        pts = [P for P in self.entries if not P.is_infinity]
        return [(P, self.entries[P]) for P in sorted(pts, key=lambda P: P.sort_key())]

    @property
    def affine_degree(self) -> int:
        return sum(m for _, m in self.affine())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self.entries.values())

    def support(self) -> list:
        return [P for P, _ in self.affine()] + ([OMEGA] if OMEGA in self.entries else [])

    def __str__(self):
        parts = [f"{m}*{P}" for P, m in self.affine()]
        if self.omega:
            parts.append(f"{self.omega}*inf")
        return " + ".join(parts) if parts else "0"
