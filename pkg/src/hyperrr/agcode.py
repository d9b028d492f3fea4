"""Goppa codes C_L(D, G) from a Riemann-Roch basis."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .curve import Curve, Point
from .errors import BudgetExceeded, DuplicatePoint, NotOnCurve, PointInSupport, RankDeficient
from .funcfield import Divisor, ff_eval
from .gfield import FieldCtx
from .gpoly import Matrix, Poly
from .rrbasis import RRBasis, rr_basis

DEFAULT_BUDGET = 10**7
_TAIL_WORDS = 1 << 16


@dataclass
class LinearCode:
    gen: Matrix
    ctx: FieldCtx
    m: int
    k: int
    d: int | None = None
    deg_d: int | None = None
    basis: RRBasis | None = field(default=None, repr=False)

    @classmethod
    def from_matrix(cls, gen: Matrix, deg_d: int | None = None) -> "LinearCode":
        k = gen.rank()
        if k != gen.rows:
            raise RankDeficient(f"generator rows are dependent (rank {k} < {gen.rows})")
        return cls(gen, gen.ctx, gen.cols, k, deg_d=deg_d)

    @property
    def goppa_bound(self) -> int | None:
        return None if self.deg_d is None else self.m - self.deg_d

    @property
    def singleton_bound(self) -> int:
        return self.m - self.k + 1

    def report(self) -> str:
        d = "unknown" if self.d is None else str(self.d)
        mds = "unknown" if self.d is None else str(self.d == self.singleton_bound).lower()
        line = f"code m={self.m} k={self.k} d={d} mds={mds}"
        if self.deg_d is not None:
            line += f" goppa_bound={self.goppa_bound}"
        return line


def generator_matrix(curve: Curve, D: Divisor, G: Sequence[Point], kappa_override: Poly | None = None) -> LinearCode:
    """Rows are the basis functions of L(D), columns their values at the points of G."""
    if not G:
        raise ValueError("need at least one evaluation point")
    seen = set()
    for P in G:
        if P.is_infinity:
            raise ValueError("evaluation points must be affine")
        if not curve.on_curve(P):
            raise NotOnCurve(f"{P} is not on the curve")
        if P in seen:
            raise DuplicatePoint(f"{P} listed twice")
        if D[P]:
            raise PointInSupport(f"{P} lies in the support of D")
        seen.add(P)
    basis = rr_basis(curve, D, kappa_override)
    rows = [[ff_eval(curve, F, P) for P in G] for F in basis.elements]
    gen = Matrix.from_rows(curve.ctx, rows)
    code = LinearCode.from_matrix(gen, deg_d=D.degree)
    code.basis = basis
    return code


def parity_check(code: LinearCode) -> tuple[Matrix, list[int] | None]:
    """H with gen * H^T = 0, built as [-A^T | I] from the reduced form [I | A].

    Returns ``(H, permutation)``; the permutation is ``None`` when the pivots
    already sit in the first k columns, otherwise it lists the column order
    (pivots first) in which H was assembled before being put back.
    """
    ctx = code.ctx
    red, pivots = code.gen.rref()
    k, m = len(pivots), code.m
    if k != code.k:
        raise RankDeficient(f"generator has rank {k}, expected {code.k}")
    others = [c for c in range(m) if c not in pivots]
    perm = pivots + others
    A = [[red[r, c] for c in others] for r in range(k)]
    H = Matrix(ctx, m - k, m)
    for i in range(m - k):
        for r in range(k):
            H[i, perm[r]] = -A[r][i]
        H[i, perm[k + i]] = ctx.one
    return H, (None if perm == list(range(m)) else perm)


def _digit_array(ctx: FieldCtx, values) -> np.ndarray:
    return np.array([ctx.digits(v.v) for v in values], dtype=np.int64)


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> tuple[int, bool]:
    """Exhaustive minimum weight over all nonzero messages."""
    ctx, k, m = code.ctx, code.k, code.m
    q, p, t = ctx.q, ctx.p, ctx.t
    if q**k - 1 > budget:
        raise BudgetExceeded(f"{q}^{k} - 1 messages exceed the budget {budget}")
    elems = ctx.elements()
    # scaled[r, s] = digits of elems[s] * row r
    scaled = np.stack([
        np.stack([_digit_array(ctx, [s * e for e in code.gen.row(r)]) for s in elems])
        for r in range(k)
    ]).reshape(k, q, m, t)
    n_tail = 1
    while n_tail < k and q ** (n_tail + 1) <= _TAIL_WORDS:
        n_tail += 1
    n_head = k - n_tail
    tail = np.zeros((1, m, t), dtype=np.int64)
    for r in range(n_head, k):
        tail = ((tail[:, None] + scaled[r][None]) % p).reshape(-1, m, t)
    best = m + 1
    for head in itertools.product(range(q), repeat=n_head):
        base = np.zeros((m, t), dtype=np.int64)
        for r, s in enumerate(head):
            base += scaled[r, s]
        words = (tail + base) % p
        weights = (words != 0).any(axis=2).sum(axis=1)
        if not any(head):
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
    d = best
    if code.deg_d is not None and m > code.deg_d:
        assert d >= m - code.deg_d, "Goppa bound violated"
    assert d <= code.singleton_bound, "Singleton bound violated"
    code.d = d
    return d, d == code.singleton_bound
