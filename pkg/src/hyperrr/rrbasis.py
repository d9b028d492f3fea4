"""Explicit Riemann-Roch bases L(D) for D = sum m_i P_i + (n - j) Omega.

``rr_basis`` builds the basis from the interpolating curve y = k(x) through the
opposite points; ``dim_oracle`` recomputes dim L(D) by plain linear algebra on
local expansions and shares no code path with the construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .curve import OMEGA, Curve, Point
from .errors import (
    DegreeTooSmall,
    NoInterpolant,
    NotOnCurve,
    OutOfRange,
    UnsupportedMultiplicity,
)
from .funcfield import Divisor, FuncElem, denominator_support_check, valuation, y_expansion
from .gfield import FieldElement
from .gpoly import Matrix, Poly, linsolve, poly_gcd


@dataclass
class KappaCurve:
    k: Poly
    delta: int


@dataclass
class RRBasis:
    elements: list[FuncElem]
    psi: FuncElem | None
    n: int
    j: int
    g: int
    kappa: KappaCurve | None = None
    case: str = field(init=False)

    def __post_init__(self):
        self.case = "with-psi" if self.psi is not None and self.psi in self.elements else "no-psi"

    def __len__(self):
        return len(self.elements)

    def rank(self) -> int:
        """Rank over the base field, after clearing a common denominator."""
        if not self.elements:
            return 0
        curve = self.elements[0].curve
        den = Poly(curve.ctx, [1])
        for F in self.elements:
            den = _lcm(den, F.C)
        vecs = []
        for F in self.elements:
            scale = den // F.C
            A, B = F.A * scale, F.B * scale
            vecs.append((A, B))
        width = max(max(len(A.coeffs), len(B.coeffs)) for A, B in vecs)
        rows = [[A.coeff(i) for i in range(width)] + [B.coeff(i) for i in range(width)] for A, B in vecs]
        return Matrix.from_rows(curve.ctx, rows).rank()

    def render(self) -> str:
        lines = [f"dim={len(self.elements)} case={self.case}"]
        lines += [F.render() for F in self.elements]
        return "\n".join(lines)


def _lcm(a: Poly, b: Poly) -> Poly:
    return (a * b // poly_gcd(a, b)).monic()


def rr_dim(g: int, j: int, n: int) -> int:
    """dim L(D) for a reduced divisor of degree n with j affine points on a genus-g curve."""
    if g < 0 or not 0 <= j <= g or n < j:
        raise OutOfRange(f"need 0 <= j <= g and n >= j, got g={g} j={j} n={n}")
    if n >= 2 * g - j:
        return n - g + 1
    return (n - j) // 2 + 1


def psi_in_space(g: int, j: int, n: int) -> bool:
    return n - j >= 2 * (g - j) + 1


# -- divisor shape -----------------------------------------------------------

def divisor_shape(curve: Curve, D: Divisor) -> tuple[int, int, list[tuple[Point, int]]]:
    """Return (n, j, affine part) after checking D is effective with j <= g."""
    aff = D.affine()
    if any(m < 1 for _, m in aff):
        raise OutOfRange("affine multiplicities must be positive")
    j = sum(m for _, m in aff)
    n = D.degree
    if n < j:
        raise DegreeTooSmall(f"deg D = {n} is smaller than j = {j}")
    if j > curve.genus:
        raise OutOfRange(f"j = {j} exceeds the genus {curve.genus}")
    return n, j, aff


# -- kappa -------------------------------------------------------------------

def _taylor_rows(ctx, a: FieldElement, ncoef: int, nrows: int) -> list[list[FieldElement]]:
    """rows[r][i] = coefficient of (x - a)^r in x^i."""
    cols = [Poly(ctx, [0] * i + [1]).taylor(a, nrows) for i in range(ncoef)]
    return [[cols[i][r] for i in range(ncoef)] for r in range(nrows)]


def _merge_targets(curve: Curve, targets) -> list[tuple[Point, int]]:
    merged: dict[Point, int] = {}
    for Q, m in targets:
        if Q.is_infinity:
            raise ValueError("interpolation targets must be affine")
        if not curve.on_curve(Q):
            raise NotOnCurve(f"{Q} is not on the curve")
        if m < 1:
            raise ValueError("multiplicities must be >= 1")
        merged[Q] = merged.get(Q, 0) + m
    return sorted(merged.items(), key=lambda e: e[0].sort_key())


def _kappa_conditions(curve: Curve, targets: list[tuple[Point, int]], ncoef: int):
    ctx = curve.ctx
    rows, rhs = [], []
    for Q, m in targets:
        a, q = Q.a, Q.b
        if curve.is_ramification(Q):
            if m >= 3:
                raise UnsupportedMultiplicity(f"multiplicity {m} at ramification point {Q}")
            if m == 2:
                resid = curve.f - Poly(ctx, [q * q]) - curve.h.scale(q)
                if resid.order_at(a) < 2:
                    raise NoInterpolant(f"no curve y = k(x) meets {Q} with multiplicity 2")
            need = [q]
        else:
            # k must agree with the branch of y through Q to order m
            need = y_expansion(curve, Q, m)
        trows = _taylor_rows(ctx, a, ncoef, len(need))
        rows.extend(trows)
        rhs.extend(need)
    return rows, rhs


def _lex_min(ctx, x: list[FieldElement], null: list[list[FieldElement]]) -> list[FieldElement]:
    """Smallest vector (lexicographic from index 0, canonical element order) in x + span(null)."""
    x = list(x)
    dirs = [list(v) for v in null]
    for i in range(len(x)):
        piv = next((d for d in dirs if d[i]), None)
        if piv is None:
            continue
        dirs.remove(piv)
        c = x[i] / piv[i]
        x = [xe - c * pe for xe, pe in zip(x, piv)]
        new_dirs = []
        for d in dirs:
            if d[i]:
                c = d[i] / piv[i]
                d = [de - c * pe for de, pe in zip(d, piv)]
            new_dirs.append(d)
        dirs = new_dirs
    return x


def kappa_check(curve: Curve, targets, k: Poly) -> bool:
    """k(a_i) = q_i and ord_{a_i}(k^2 + k h - f) >= m_i for every target."""
    resid = k * k + k * curve.h - curve.f
    for Q, m in _merge_targets(curve, targets):
        if k(Q.a) != Q.b:
            return False
        if resid.order_at(Q.a) < m:
            return False
    return True


def kappa_interpolate(curve: Curve, targets, override: Poly | None = None) -> KappaCurve:
    merged = _merge_targets(curve, targets)
    if not merged:
        raise ValueError("at least one interpolation target is required")
    j = sum(m for _, m in merged)
    ctx = curve.ctx
    if override is not None:
        k = override
        if not kappa_check(curve, merged, k):
            raise NoInterpolant(f"override y = {k} does not interpolate the targets")
        delta = max(k.degree, 1) if k else 1
        if delta > j:
            raise NoInterpolant(f"override degree {delta} exceeds j = {j}")
        return KappaCurve(k, delta)
    n_cond = None
    for deg in range(0, j + 1):
        rows, rhs = _kappa_conditions(curve, merged, deg + 1)
        n_cond = len(rows)
        sol, null = linsolve(ctx, Matrix.from_rows(ctx, rows), rhs)
        if sol is not None:
            k = Poly(ctx, _lex_min(ctx, sol, null))
            return KappaCurve(k, max(k.degree, 1) if k else 1)
    raise NoInterpolant(f"no interpolating curve of degree <= {j} ({n_cond} conditions)")


# -- Psi and the basis -------------------------------------------------------

def psi_build(curve: Curve, D: Divisor, kappa_override: Poly | None = None) -> tuple[FuncElem, KappaCurve | None]:
    """Psi = (y - k(x)) / prod (x - a_i)^{m_i}; Psi = y when D has no affine part."""
    _, j, aff = divisor_shape(curve, D)
    if j == 0:
        return FuncElem.y(curve), None
    targets = [(curve.opposite(P), m) for P, m in aff]
    kap = kappa_interpolate(curve, targets, kappa_override)
    ctx = curve.ctx
    den = Poly(ctx, [1])
    for P, m in aff:
        den = den * Poly.linear_root(ctx, P.a) ** m
    return FuncElem(curve, -kap.k, Poly(ctx, [1]), den), kap


def rr_basis(curve: Curve, D: Divisor, kappa_override: Poly | None = None) -> RRBasis:
    n, j, _ = divisor_shape(curve, D)
    g = curve.genus
    x = FuncElem.x(curve)
    elements = [x**e for e in range((n - j) // 2 + 1)]
    psi, kap = psi_build(curve, D, kappa_override)
    if psi_in_space(g, j, n):
        top = ((n - j) - 2 * (g - j) - 1) // 2
        elements += [psi * x**e for e in range(top + 1)]
    return RRBasis(elements, psi, n, j, g, kap)


def membership_failures(curve: Curve, D: Divisor, F: FuncElem, points: Sequence | None = None) -> list[str]:
    """Reasons F fails div(F) + D >= 0 on the rational points (empty list = member)."""
    n, j, aff = divisor_shape(curve, D)
    bad = []
    if points is None:
        points = curve.points()
    for P in points:
        need = -D[P]
        v = valuation(curve, F, P)
        if v < need:
            bad.append(f"v_{P}(F) = {v} < {need}")
    if not denominator_support_check(curve, F, {P.a for P, _ in aff}):
        bad.append("denominator has roots outside supp(D)")
    return bad


# -- independent dimension oracle -------------------------------------------

def dim_oracle(curve: Curve, D: Divisor, prec: int | None = None) -> int:
    """dim L(D) by linear algebra on F = (A + B y)/E, E = prod (x - a_i)^{m_i}.

    Pole order at Omega bounds deg A and deg B; every rational point over an
    abscissa of supp(D) then imposes linear conditions read off from the local
    expansion of A + B y.
    """
    n, j, aff = divisor_shape(curve, D)
    ctx = curve.ctx
    g = curve.genus
    if prec is None:
        prec = 2 * j + 2 * g + 2
    da = (n - j) // 2 + j
    rb = (n - j) - (2 * g + 1)
    na, nb = da + 1, max(rb // 2 + j + 1, 0)
    nunk = na + nb

    mult_at: dict = {}
    for P, m in aff:
        mult_at[P.a] = mult_at.get(P.a, 0) + m

    rows: list[list[FieldElement]] = []
    for a, M in sorted(mult_at.items(), key=lambda e: e[0].v):
        fa, ha = curve.f(a), curve.h(a)
        above = [Point(a, b) for b in ctx.elements() if b * b + ha * b == fa]
        for R in above:
            if curve.is_singular_point(R):
                raise ValueError("the oracle needs a curve that is smooth over supp(D)")
            ram = curve.is_ramification(R)
            need = (2 if ram else 1) * M - D[R]
            if need <= 0:
                continue
            if ram:
                rows += _ramified_rows(ctx, R, na, nb, need)
            else:
                rows += _unramified_rows(curve, R, na, nb, need, max(prec, need))
    if not rows:
        return nunk
    return nunk - Matrix.from_rows(ctx, rows).rank()


def _unramified_rows(curve: Curve, R: Point, na: int, nb: int, need: int, prec: int):
    ctx = curve.ctx
    ys = y_expansion(curve, R, prec)[:need]
    shifted = [Poly(ctx, [0] * i + [1]).taylor(R.a, need) for i in range(max(na, nb))]
    rows = []
    for r in range(need):
        row = [shifted[i][r] for i in range(na)]
        for i in range(nb):
            acc = ctx.zero
            for l in range(r + 1):
                acc = acc + shifted[i][l] * ys[r - l]
            row.append(acc)
        rows.append(row)
    return rows


def _ramified_rows(ctx, R: Point, na: int, nb: int, need: int):
    # v_R(A + B y) = min(2 ord(A + bB), 2 ord(B) + 1): both must reach `need`
    shifted = [Poly(ctx, [0] * i + [1]).taylor(R.a, need) for i in range(max(na, nb))]
    rows = []
    for r in range((need + 1) // 2):
        rows.append([shifted[i][r] for i in range(na)] + [R.b * shifted[i][r] for i in range(nb)])
    for r in range(need // 2):
        rows.append([ctx.zero] * na + [shifted[i][r] for i in range(nb)])
    return rows
