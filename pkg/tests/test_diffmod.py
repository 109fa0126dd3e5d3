import dataclasses

import numpy as np
import pytest

from multibgg.core.linalg import rank, zeros
from multibgg.diffmod import (ConvergenceStatus, DifferentialModule, DMorphism, block_degree, cone_dm, fold_complex,
                              homology_dm, is_minimal_dm, minimize_dm, mk_differential_module, res_dm, res_min_flag,
                              unfold_flag)
from multibgg.errors import NonzeroDegreeDifferential, NotAFlag, NotAMorphism, NotSquareZero, UnsupportedGrading
from multibgg.groebner.presentation import is_zero_module
from multibgg.modules import FreeModule, GradedMatrix, cokernel, free_module, residue_field
from multibgg.modules.pieces import piece_dimension
from multibgg.modules.resolution import minimal_free_resolution
from multibgg.strands import is_strongly_linear_matrix


def _random_form(rng, S, d):
    f = S.zero()
    for exp in S.monomials_of_degree(d):
        f = f + S.monomial(exp, int(rng.integers(0, 101)))
    return f


def _with_contractible_pair(D):
    """D plus a summand g_p <- g_q with d(g_q) = g_p, generators in degrees a and 0."""
    S = D.ring
    a = D.degree
    twists = D.generators.twists + (a, S.zero_degree())
    n = len(twists)
    rows = [[S.zero() for _ in range(n)] for _ in range(n)]
    for i, row in enumerate(D.differential.entries):
        rows[i][:len(row)] = row
    rows[n - 2][n - 1] = S.one()
    G = FreeModule(S, twists)
    return DifferentialModule.free(GradedMatrix.of(G, G, rows, a))


def _elementary(rng, G, i, j):
    """I + f * E_ij and its inverse, or None when no form has the required degree."""
    S = G.ring
    d = tuple(s - t for s, t in zip(G.twists[j], G.twists[i]))
    f = _random_form(rng, S, d)
    if not f:
        return None
    rows = [[S.one() if r == c else S.zero() for c in range(G.rank)] for r in range(G.rank)]
    inverse = [list(r) for r in rows]
    rows[i][j] = f
    inverse[i][j] = -f
    return GradedMatrix.of(G, G, rows), GradedMatrix.of(G, G, inverse)


def _degreewise_matrix(D, d):
    """The differential D_d -> D_{d+a} of a free D over a Z-graded ring, and dim D_d."""
    S = D.ring
    (a,) = D.degree

    def basis(e):
        return [(j, m) for j, (t,) in enumerate(D.generators.twists) for m in S.monomials_of_degree((e - t,))]

    source, target = basis(d), basis(d + a)
    row_of = {key: r for r, key in enumerate(target)}
    A = zeros(S.field, len(target), len(source))
    for c, (j, m) in enumerate(source):
        for i in range(D.rank):
            for exp, coef in (D.differential.entry(i, j) * S.monomial(m)).terms.items():
                A[row_of[(i, exp)], c] = coef
    return A, len(source)


def _linear_coefficients(forms):
    return np.array([[f.terms.get(e, 0) for e in ((1, 0), (0, 1))] for f in forms], dtype=object)


def test_degree_two_homology(degree_two_dm):
    H = homology_dm(degree_two_dm)
    assert H.generators.twists == ((1,),)
    assert piece_dimension(H, (1,)) == 1
    assert piece_dimension(H, (2,)) == 0


def test_degree_two_homology_by_degreewise_ranks(degree_two_dm):
    field = degree_two_dm.ring.field
    H = homology_dm(degree_two_dm)
    for d in range(7):
        A, dim = _degreewise_matrix(degree_two_dm, d)
        B, _ = _degreewise_matrix(degree_two_dm, d - 2)
        cycles = dim - rank(field, A)
        assert cycles - rank(field, B) == (1 if d == 1 else 0)
        assert piece_dimension(H, (d,)) == cycles - rank(field, B)


def test_res_dm_degree_two(degree_two_dm):
    res = res_dm(degree_two_dm, 5)
    assert res.status is ConvergenceStatus.COMPLETE
    assert res.iterations == 3
    assert res.flag.block_twists == [((1,),), ((0,), (0,)), ((-1,),)]
    assert res.flag.degree == (2,)
    assert res.augmentation.target == degree_two_dm
    assert is_zero_module(homology_dm(res.cone()))


def test_res_dm_degree_two_differential(degree_two_dm):
    res = res_dm(degree_two_dm, 5)
    (top,), (u, v), (bottom,) = res.flag.flag
    d = res.flag.differential
    nonzero = {(i, j) for i, row in enumerate(d.entries) for j, f in enumerate(row) if f}
    assert nonzero == {(top, u), (top, v), (top, bottom), (u, bottom), (v, bottom)}
    assert d.entry(top, bottom).is_constant()
    # x, y up to a change of basis on both sides of the middle block
    field = degree_two_dm.ring.field
    assert rank(field, _linear_coefficients([d.entry(top, u), d.entry(top, v)])) == 2
    assert rank(field, _linear_coefficients([d.entry(u, bottom), d.entry(v, bottom)])) == 2
    assert (d @ d).is_zero()


def test_res_dm_uses_default_budget(degree_two_dm):
    res = res_dm(degree_two_dm)
    assert res.complete
    assert res.flag.rank == 4


def test_res_dm_truncates(degree_two_dm):
    res = res_dm(degree_two_dm, 1)
    assert res.status is ConvergenceStatus.TRUNCATED
    assert res.iterations == 1
    assert not is_zero_module(homology_dm(res.cone()))


def test_minimize_resolution_of_degree_two(degree_two_dm):
    D = minimize_dm(res_dm(degree_two_dm, 5).flag)
    assert D.rank == 2
    assert D.generators.twists == ((0,), (0,))
    assert is_minimal_dm(D)
    assert all(f and f.degree == (2,) for row in D.differential.entries for f in row)
    H = homology_dm(D)
    assert [piece_dimension(H, (d,)) for d in range(4)] == [0, 1, 0, 0]


def test_minimize_is_invariant_under_basis_change(degree_two_dm):
    rng = np.random.default_rng(7)
    D = _with_contractible_pair(degree_two_dm)
    G = D.generators
    for _ in range(20):
        d = D.differential
        for _ in range(4):
            i, j = (int(k) for k in rng.choice(G.rank, size=2, replace=False))
            change = _elementary(rng, G, i, j)
            if change is not None:
                P, P_inv = change
                d = P @ d @ P_inv
        conjugated = DifferentialModule.free(d)
        minimal = minimize_dm(conjugated)
        assert minimal.rank == 2
        assert sorted(minimal.generators.twists) == [(0,), (0,)]
        assert is_minimal_dm(minimal)
        assert piece_dimension(homology_dm(minimal), (1,)) == 1


def test_minimize_keeps_minimal_modules(degree_two_dm):
    assert minimize_dm(degree_two_dm).differential == degree_two_dm.differential


def test_rejects_differentials_that_do_not_square_to_zero(r101):
    rng = np.random.default_rng(11)
    G = FreeModule.of(r101, [(0,), (0,)])
    checked = 0
    for _ in range(20):
        rows = [[_random_form(rng, r101, (2,)) for _ in range(2)] for _ in range(2)]
        d = GradedMatrix.of(G, G, rows, (2,))
        if (d @ d).is_zero():
            continue
        with pytest.raises(NotSquareZero):
            DifferentialModule.free(d)
        checked += 1
    assert checked >= 15


def test_square_zero_modulo_relations(qq_xy):
    x, _ = qq_xy.gens
    M = cokernel(qq_xy, [[x ** 2]])
    D = DifferentialModule(M, GradedMatrix.of(M.generators, M.generators, [[x]], (1,)))
    assert is_zero_module(homology_dm(D))
    with pytest.raises(NotSquareZero):
        G = FreeModule.of(qq_xy, [(0,)])
        DifferentialModule.free(GradedMatrix.of(G, G, [[x]], (1,)))


def test_morphism_checks(degree_two_dm):
    S = degree_two_dm.ring
    x, _ = S.gens
    G = degree_two_dm.generators
    with pytest.raises(NotAMorphism):
        DMorphism(degree_two_dm, degree_two_dm, GradedMatrix.of(G, G, [[x, S.zero()], [S.zero(), x]], (1,)))
    with pytest.raises(NotAMorphism):
        DMorphism(degree_two_dm, degree_two_dm, GradedMatrix.of(G, G, [[S.one(), S.zero()], [S.zero(), S.zero()]]))
    assert is_zero_module(homology_dm(cone_dm(DMorphism.identity(degree_two_dm))))


def test_res_min_flag_of_residue_field(r101):
    D = DifferentialModule.zero(residue_field(r101), (0,))
    res = res_min_flag(D, 3)
    assert res.complete
    assert sorted(res.flag.generators.twists) == [(0,), (1,), (1,), (2,)]
    assert [len(b) for b in res.flag.flag] == [1, 2, 1]
    assert [block_degree(res.flag, b) for b in range(3)] == [(0,), (1,), (2,)]
    assert is_strongly_linear_matrix(res.flag.differential)
    assert is_minimal_dm(res.flag)


def test_minimized_res_dm_agrees_with_res_min_flag(r101):
    D = DifferentialModule.zero(residue_field(r101), (0,))
    res = res_dm(D, 10)
    assert res.complete
    minimal = minimize_dm(res.flag)
    flag = res_min_flag(D, 3).flag
    assert sorted(minimal.generators.twists) == sorted(flag.generators.twists) == [(0,), (1,), (1,), (2,)]
    assert is_minimal_dm(minimal)
    H, H_flag = homology_dm(minimal), homology_dm(flag)
    assert [piece_dimension(H, (d,)) for d in range(4)] == [piece_dimension(H_flag, (d,)) for d in range(4)]


def test_res_min_flag_of_a_free_module(r101):
    D = DifferentialModule.zero(free_module(r101, [(0,)]), (0,))
    res = res_min_flag(D, 1)
    assert res.complete
    assert res.flag.generators.twists == ((0,),)
    assert res.flag.differential.is_zero()


def test_res_min_flag_stops_after_given_blocks(r101):
    D = DifferentialModule.zero(residue_field(r101), (0,))
    res = res_min_flag(D, 2)
    assert res.status is ConvergenceStatus.TRUNCATED
    assert [len(b) for b in res.flag.flag] == [1, 2]


def test_res_min_flag_preconditions(degree_two_dm, hirzebruch3):
    with pytest.raises(NonzeroDegreeDifferential):
        res_min_flag(degree_two_dm, 2)
    with pytest.raises(UnsupportedGrading):
        res_min_flag(DifferentialModule.zero(residue_field(hirzebruch3)), 2)


@pytest.mark.parametrize("a", [(0,), (1,)])
def test_fold_and_unfold(qq_xy, a):
    C = minimal_free_resolution(residue_field(qq_xy), 3)
    F = fold_complex(C, a)
    assert F.degree == a
    assert [len(b) for b in F.flag] == [1, 2, 1]
    assert unfold_flag(F) == C
    assert homology_dm(F).rank == 1


def test_fold_block_degrees(qq_xy):
    F = fold_complex(minimal_free_resolution(residue_field(qq_xy), 3), (1,))
    assert [block_degree(F, b) for b in range(3)] == [(0,), (0,), (0,)]


def test_flag_order_is_checked(qq_xy):
    F = fold_complex(minimal_free_resolution(residue_field(qq_xy), 3), (1,))
    with pytest.raises(NotAFlag):
        dataclasses.replace(F, flag=tuple(reversed(F.flag)))
    with pytest.raises(NotAFlag):
        dataclasses.replace(F, flag=((0,), (1, 2)))


def test_mk_differential_module(degree_two_dm, qq_xy):
    assert mk_differential_module(degree_two_dm.differential) == degree_two_dm
    x, _ = qq_xy.gens
    M = cokernel(qq_xy, [[x ** 2]])
    D = mk_differential_module(GradedMatrix.of(M.generators, M.generators, [[x]], (1,)), M)
    assert not D.is_free()
