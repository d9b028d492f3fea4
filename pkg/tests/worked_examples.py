"""Worked examples shared by the test modules."""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from hyperrr import Curve, Divisor, FieldCtx, Poly, curve_make
from hyperrr.errors import SingularCurve


@dataclass
class Case:
    name: str
    curve: Curve
    D: Divisor
    G: list
    kappa: Poly | None
    gen: list[list]  # expected generator matrix, as field elements or ints
    d: int


GF31_SHIFTED = [22, 10, 26, 3, 14, 18]
GF31_SAMPLES = [(0, 0), (3, 6), (4, 12), (5, 20), (6, 30), (7, 12)]
GF31_V = [
    [1, 30, 1, 30, 1, 30],
    [4, 8, 16, 1, 2, 4],
    [9, 27, 19, 26, 16, 17],
    [16, 2, 8, 1, 4, 16],
    [25, 1, 5, 25, 1, 5],
    [5, 30, 25, 26, 1, 6],
]
GF31_VINV = [
    [18, 9, 23, 18, 11, 9],
    [8, 2, 3, 15, 5, 30],
    [30, 20, 22, 3, 7, 24],
    [0, 25, 25, 23, 28, 19],
    [16, 5, 15, 14, 14, 6],
    [24, 7, 1, 28, 30, 21],
]

# dim L(D) on a genus-5 curve, keyed by j, listed from n = j through n = 11
GENUS5_SEQUENCES = {
    0: [1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 7],
    1: [1, 1, 2, 2, 3, 3, 4, 4, 5, 6, 7],
    2: [1, 1, 2, 2, 3, 3, 4, 5, 6, 7],
    3: [1, 1, 2, 2, 3, 4, 5, 6, 7],
    4: [1, 1, 2, 3, 4, 5, 6, 7],
    5: [1, 2, 3, 4, 5, 6, 7],
}
# smallest n with Psi in the basis, g = 5
GENUS5_PSI_FROM = {0: 11, 1: 10, 2: 9, 3: 8, 4: 7, 5: 6}


def gf31_f(F: FieldCtx) -> Poly:
    shifted = Poly(F, [0, 0] + GF31_SHIFTED)
    return shifted.shift(-1)


def gf31_curve() -> Curve:
    F = FieldCtx(31)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return curve_make(F, gf31_f(F), None, singular_ok=True)


def gf31_case() -> Case:
    C = gf31_curve()
    F = C.ctx
    P = C.point
    D = Divisor.reduced(C, [(P(0, 0), 1), (P(1, 0), 2)], 1)
    t = Poly(F, [-1, 1])
    return Case(
        "gf31", C, D, [P(3, 25), P(4, 19), P(5, 11), P(6, 1)], t + t * t,
        [[1, 1, 1, 1], [30, 20, 15, 12]], 3,
    )


def gf5_case() -> Case:
    F = FieldCtx(5)
    C = curve_make(F, Poly(F, [1, 4, 0, 0, 0, 1]))
    P = C.point
    D = Divisor.reduced(C, [(P(0, 1), 1), (P(1, 4), 1)], 2)
    G = [P(2, 1), P(2, 4), P(3, 1), P(3, 4), P(4, 1), P(4, 4)]
    return Case("gf5", C, D, G, None, [[1] * 6, [2, 2, 3, 3, 4, 4], [4, 3, 1, 4, 2, 1]], 4)


def gf13_case() -> Case:
    F = FieldCtx(13)
    C = curve_make(F, Poly(F, [0, 9, 0, 4, 0, 1]))
    P = C.point
    D = Divisor.reduced(C, [(P(0, 0), 1)], 3)
    G = [P(a, b) for a, b in [(1, 1), (1, 12), (3, 1), (3, 12), (6, 6), (6, 7), (7, 4), (7, 9), (9, 6), (9, 7)]]
    gen = [[1] * 10, [1, 1, 3, 3, 6, 6, 7, 7, 9, 9], [1, 12, 9, 4, 1, 12, 8, 5, 5, 8]]
    return Case("gf13", C, D, G, None, gen, 8)


def gf17_case() -> Case:
    F = FieldCtx(17)
    C = curve_make(F, Poly(F, [15, 5, 11, 5, 13, 1]))
    P = C.point
    D = Divisor.reduced(C, [(P(8, 0), 1)], 3)
    pts = [(0, 7), (0, 10), (1, 4), (1, 13), (3, 8), (3, 9), (5, 1), (5, 16), (9, 1), (9, 16), (15, 7), (15, 10)]
    gen = [[1] * 12, [0, 0, 1, 1, 3, 3, 5, 5, 9, 9, 15, 15], [14, 3, 14, 3, 12, 5, 11, 6, 1, 16, 1, 16]]
    return Case("gf17", C, D, [P(a, b) for a, b in pts], None, gen, 10)


def gf4() -> FieldCtx:
    return FieldCtx(2, 2, [1, 1, 1])


def hexacode_curve() -> Curve:
    F = gf4()
    return curve_make(F, Poly(F, [0, 1, 0, 1, 0, 1]), Poly(F, [1]))


def hexacode_case() -> Case:
    C = hexacode_curve()
    F = C.ctx
    al = F.generator()
    al2 = al * al
    P = C.point
    D = Divisor.reduced(C, [(P(al2, 0), 1)], 3)
    G = [P(0, 0), P(0, 1), P(1, al), P(1, al2), P(al, 0), P(al, 1)]
    gen = [[1] * 6, [0, 0, 1, 1, al, al], [al, 0, al, 1, 1, 0]]
    return Case("hexacode", C, D, G, None, gen, 4)


def all_cases() -> list[Case]:
    return [gf31_case(), gf5_case(), gf13_case(), gf17_case(), hexacode_case()]


# -- random instances ---------------------------------------------------------

def random_curve(rng: random.Random, F: FieldCtx, g: int, need_root: bool = False) -> Curve:
    """Random nonsingular y^2 = f(x), deg f = 2g + 1, f monic (odd p only)."""
    while True:
        coeffs = [F.from_index(rng.randrange(F.q)) for _ in range(2 * g + 1)] + [1]
        if need_root:
            coeffs[0] = F.zero
        try:
            return curve_make(F, Poly(F, coeffs))
        except SingularCurve:
            continue


def random_char2_curve(rng: random.Random, F: FieldCtx, g: int) -> Curve:
    while True:
        f = [F.from_index(rng.randrange(F.q)) for _ in range(2 * g + 1)] + [1]
        h = [F.from_index(rng.randrange(F.q)) for _ in range(rng.randrange(1, g + 2))]
        if not any(h):
            continue
        try:
            return curve_make(F, Poly(F, f), Poly(F, h))
        except SingularCurve:
            continue


def random_poly(rng: random.Random, F: FieldCtx, max_deg: int) -> Poly:
    return Poly(F, [F.from_index(rng.randrange(F.q)) for _ in range(rng.randrange(max_deg + 2))])


def random_instance(rng: random.Random, primes=(5, 7, 11, 13), genera=(2, 3)):
    """Random (curve, D) with non-ramification P_i at distinct abscissas, m_i in {1, 2}."""
    while True:
        F = FieldCtx(rng.choice(primes))
        g = rng.choice(genera)
        C = random_curve(rng, F, g)
        j = rng.randrange(g + 1)
        n = rng.randint(j, 2 * g + 3)
        by_x: dict = {}
        for P in C.points()[:-1]:
            if not C.is_ramification(P):
                by_x.setdefault(P.a.v, []).append(P)
        mults = []
        left = j
        while left:
            m = min(left, rng.choice([1, 2]))
            mults.append(m)
            left -= m
        if len(mults) > len(by_x):
            continue
        xs = rng.sample(sorted(by_x), len(mults))
        aff = [(rng.choice(by_x[a]), m) for a, m in zip(xs, mults)]
        return C, Divisor.reduced(C, aff, n - j)
