import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperrr.agcode import LinearCode, generator_matrix, min_distance, parity_check
from hyperrr.errors import BudgetExceeded, DuplicatePoint, NotOnCurve, PointInSupport, RankDeficient
from hyperrr.gfield import FieldCtx
from hyperrr.gpoly import Matrix

from worked_examples import all_cases, gf5_case, gf31_case, gf4


def brute_distance(gen: Matrix) -> int:
    """Oracle: weight of every nonzero codeword, with plain Python loops."""
    F = gen.ctx
    els = F.elements()
    best = gen.cols
    rows = gen.to_rows()
    for msg in itertools.product(els, repeat=gen.rows):
        if not any(msg):
            continue
        word = [sum((m * r[c] for m, r in zip(msg, rows)), F.zero) for c in range(gen.cols)]
        best = min(best, sum(1 for w in word if w))
    return best


def code_from(F, rows):
    return LinearCode.from_matrix(Matrix.from_rows(F, rows))


def assert_dual(code, H):
    prod = code.gen @ H.transpose()
    assert all(e == 0 for e in prod.entries)
    assert H.rows == code.m - code.k
    assert H.rank() == H.rows


def test_gf31_code():
    case = gf31_case()
    code = generator_matrix(case.curve, case.D, case.G, case.kappa)
    assert code.gen.to_ints() == case.gen
    H, perm = parity_check(code)
    assert H.to_ints() == [[16, 14, 1, 0], [7, 23, 0, 1]]
    assert perm is None
    assert min_distance(code) == (3, True)


def test_gf5_code():
    case = gf5_case()
    code = generator_matrix(case.curve, case.D, case.G)
    assert code.gen.to_ints() == case.gen
    assert min_distance(code) == (4, True)
    assert code.report() == "code m=6 k=3 d=4 mds=true goppa_bound=2"


@pytest.mark.parametrize("case", all_cases(), ids=lambda c: c.name)
def test_worked_codes(case):
    code = generator_matrix(case.curve, case.D, case.G, case.kappa)
    F = case.curve.ctx
    assert code.gen.to_rows() == [[F(v) for v in row] for row in case.gen]
    H, _ = parity_check(code)
    assert_dual(code, H)
    d, mds = min_distance(code)
    assert d == case.d == brute_distance(code.gen)
    assert mds
    assert code.m - case.D.degree <= d <= code.m - code.k + 1


def test_parity_small():
    F = FieldCtx(5)
    H, perm = parity_check(code_from(F, [[1, 1]]))
    assert H.to_ints() == [[4, 1]]
    assert perm is None


def test_parity_identity_block():
    F = FieldCtx(7)
    code = code_from(F, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])
    H, _ = parity_check(code)
    assert H.to_ints() == [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]


def test_parity_non_systematic():
    F = FieldCtx(5)
    code = code_from(F, [[0, 1, 2, 3], [0, 2, 1, 1]])
    H, perm = parity_check(code)
    assert perm is not None and perm[:2] == [1, 2]
    assert_dual(code, H)


def test_repetition_code():
    code = code_from(FieldCtx(5), [[1, 1, 1]])
    assert min_distance(code) == (3, True)


def test_budget():
    case = gf5_case()
    code = generator_matrix(case.curve, case.D, case.G)
    with pytest.raises(BudgetExceeded):
        min_distance(code, budget=100)


def test_rank_deficient():
    with pytest.raises(RankDeficient):
        code_from(FieldCtx(5), [[1, 2, 3], [2, 4, 1]])
    # two evaluation points cannot carry a 3-dimensional space
    case = gf5_case()
    with pytest.raises(RankDeficient):
        generator_matrix(case.curve, case.D, case.G[:2])


def test_evaluation_point_checks():
    case = gf5_case()
    C = case.curve
    with pytest.raises(DuplicatePoint):
        generator_matrix(C, case.D, case.G + case.G[:1])
    with pytest.raises(PointInSupport):
        generator_matrix(C, case.D, case.G + [C.point(0, 1)])
    bad = type(case.G[0])(C.ctx(2), C.ctx(2))
    with pytest.raises(NotOnCurve):
        generator_matrix(C, case.D, case.G[:5] + [bad])


def test_distance_over_gf4():
    F = gf4()
    al = F.generator()
    code = LinearCode.from_matrix(Matrix.from_rows(F, [[1, 0, 1, al], [0, 1, al, 1]]))
    d, mds = min_distance(code)
    assert d == brute_distance(code.gen)
    assert mds == (d == 3)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_distance_invariant_under_row_operations(data):
    case = data.draw(st.sampled_from(all_cases()[:3]), label="case")
    code = generator_matrix(case.curve, case.D, case.G, case.kappa)
    F = code.ctx
    k = code.k
    seed = data.draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    while True:
        M = Matrix.from_rows(F, [[F.from_index(rng.randrange(F.q)) for _ in range(k)] for _ in range(k)])
        if M.rank() == k:
            break
    other = LinearCode.from_matrix(M @ code.gen, deg_d=code.deg_d)
    assert min_distance(other)[0] == case.d
    H, _ = parity_check(other)
    assert_dual(other, H)


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_random_codes_against_brute_force(p, data):
    F = FieldCtx(p)
    k = data.draw(st.integers(1, 3))
    m = data.draw(st.integers(k, 6))
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=m, max_size=m), min_size=k, max_size=k))
    gen = Matrix.from_rows(F, rows)
    if gen.rank() < k:
        return
    code = LinearCode.from_matrix(gen)
    H, _ = parity_check(code)
    assert_dual(code, H)
    d, mds = min_distance(code)
    assert d == brute_distance(gen)
    assert mds == (d == m - k + 1)
