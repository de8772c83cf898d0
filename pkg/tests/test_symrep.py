import math

import pytest

from sunharm import (
    DualSymTensor,
    ExactMatrix,
    I,
    ONE,
    RepContext,
    SymTensor,
    ZERO,
    adjoint_on_p_plus,
    e_vec,
    gq,
    h0,
    inner,
    k_group_action,
    pair,
    power_of_vector,
    project_grade,
    rho_apply,
    rho_matrix,
    unitary_corpus,
    xi,
    xi_minus,
    xi_plus,
)
from sunharm.sun1 import k_basis, tangent_samples
from sunharm.symrep import graded_monomials, monomial_index, monomials

from conftest import make_rng, random_value


def top_power(n, m):
    """e_{n+1}^m."""
    return SymTensor.monomial((0,) * n + (m,))


@pytest.mark.parametrize("n,m", [(2, 1), (2, 3), (3, 2)])
def test_raising_on_top_power(n, m):
    v = [gq(2, 1)] + [gq("1/2")] * (n - 1)
    img = rho_apply(xi_plus(v), top_power(n, m))
    expected = SymTensor.zero(n, m)
    for j in range(n):
        expected = expected + SymTensor.monomial(
            tuple(1 if t == j else 0 for t in range(n)) + (m - 1,), v[j] * m
        )
    assert img == expected


@pytest.mark.parametrize("n,m", [(2, 2), (3, 3)])
def test_lowering_on_first_coordinate_power(n, m):
    v = [gq(1, 2)] + [gq(3)] * (n - 1)
    w = SymTensor.monomial((m,) + (0,) * n)
    img = rho_apply(xi_minus(v), w)
    expected = SymTensor.monomial((m - 1,) + (0,) * (n - 1) + (1,), v[0].conjugate() * m)
    assert img == expected


def test_raising_kills_horizontal_powers():
    n, m = 2, 3
    u = power_of_vector([1, 2, 0], m)  # a power of a vector in the first n coords
    assert rho_apply(xi_plus([gq(1), gq(1, 1)]), u).is_zero()


def test_projection_examples():
    n, m = 2, 3
    w = top_power(n, m)
    assert project_grade(w, 0) == w
    assert project_grade(w, m).is_zero()
    mix = SymTensor.monomial((1, 0, m - 1)) + SymTensor.monomial((m, 0, 0))
    assert project_grade(mix, 1) == SymTensor.monomial((1, 0, m - 1))
    total = SymTensor.zero(n, m)
    for k in range(m + 1):
        total = total + project_grade(mix, k)
    assert total == mix


def test_projection_out_of_range():
    with pytest.raises(ValueError):
        project_grade(top_power(2, 2), 3)


def test_inner_weights():
    assert inner(SymTensor.monomial((1, 1, 0)), SymTensor.monomial((1, 1, 0))) == ONE
    assert inner(SymTensor.monomial((2, 0, 0)), SymTensor.monomial((2, 0, 0))) == gq(2)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_adjointness_instance_both_sides_factorial(m):
    n = 2
    lhs_vec = rho_apply(xi_plus(e_vec(0, n)), top_power(n, m))
    probe = SymTensor.monomial((1, 0, m - 1))
    lhs = inner(lhs_vec, probe)
    rhs = inner(top_power(n, m), rho_apply(xi_minus(e_vec(0, n)), probe))
    assert lhs == rhs == gq(math.factorial(m))


def test_inner_conjugate_linearity_in_second_argument():
    w = SymTensor.monomial((1, 0, 0))
    assert inner(w, w.scale(I)) == -I
    assert inner(w.scale(I), w) == I


def test_grades_are_orthogonal():
    rng = make_rng(23)
    ctx = RepContext(2, 3)
    w1 = random_value(rng, ctx)
    w2 = random_value(rng, ctx)
    total = ZERO
    for k1 in range(ctx.m + 1):
        for k2 in range(ctx.m + 1):
            v = inner(project_grade(w1, k1), project_grade(w2, k2))
            if k1 != k2:
                assert v == ZERO
            total = total + v
    assert total == inner(w1, w2)


def test_multi_index_degree_enforced():
    with pytest.raises(ValueError):
        SymTensor(2, 3, {(1, 0, 0): gq(1)})


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2)])
def test_hermitian_and_skew_hermitian(n, m):
    rng = make_rng(7)
    ctx = RepContext(n, m)
    w1 = random_value(rng, ctx)
    w2 = random_value(rng, ctx)
    for v in tangent_samples(n):
        X = xi(v)
        assert inner(rho_apply(X, w1), w2) == inner(w1, rho_apply(X, w2))
    for K in k_basis(n):
        assert inner(rho_apply(K, w1), w2) == -inner(w1, rho_apply(K, w2))


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2)])
def test_representation_property(n, m):
    from sunharm import bracket

    samples = [
        xi(tangent_samples(n)[0]),
        xi_plus(tangent_samples(n)[-1]),
        xi_minus(tangent_samples(n)[1]),
        h0(n),
        k_basis(n)[-1],
    ]
    for X in samples:
        for Y in samples:
            lhs = rho_matrix(bracket(X, Y), n, m)
            MX = rho_matrix(X, n, m)
            MY = rho_matrix(Y, n, m)
            assert lhs == MX * MY - MY * MX


def test_dual_action_is_negated_transpose():
    n, m = 2, 2
    X = xi([gq(1, 1), gq("1/2", "-1/3")])
    Mp = rho_matrix(X, n, m, dual=False)
    Md = rho_matrix(X, n, m, dual=True)
    assert Md == -Mp.transpose()


def test_dual_action_pairing_identity():
    n, m = 2, 2
    rng = make_rng(3)
    ctx_p = RepContext(n, m)
    ctx_d = RepContext(n, m, dual=True)
    w = random_value(rng, ctx_p)
    lam = random_value(rng, ctx_d)
    for v in tangent_samples(n):
        X = xi(v)
        assert pair(rho_apply(X, lam), w) == -pair(lam, rho_apply(X, w))


def test_k_group_action_identity():
    w = SymTensor.monomial((1, 0, 1))
    assert k_group_action(ExactMatrix.identity(2), w) == w


def test_k_group_action_diagonal():
    w = SymTensor.monomial((1, 0, 1))
    out = k_group_action(ExactMatrix.diagonal([I, -I]), w)
    assert out == w.scale(I)


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2)])
def test_k_group_action_unitary_and_graded(n, m):
    rng = make_rng(11)
    ctx = RepContext(n, m)
    w1 = random_value(rng, ctx)
    w2 = random_value(rng, ctx)
    for A in unitary_corpus(n):
        g1 = k_group_action(A, w1)
        g2 = k_group_action(A, w2)
        assert inner(g1, g2) == inner(w1, w2)
        for k in range(m + 1):
            assert k_group_action(A, project_grade(w1, k)).support_grades() <= {k}


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2)])
def test_k_equivariance_of_raising_lowering(n, m):
    rng = make_rng(13)
    ctx = RepContext(n, m)
    w = random_value(rng, ctx)
    for A in unitary_corpus(n):
        for v in tangent_samples(n):
            kv = adjoint_on_p_plus(A, v)
            assert k_group_action(A, rho_apply(xi_plus(v), w)) == rho_apply(
                xi_plus(kv), k_group_action(A, w)
            )
            assert k_group_action(A, rho_apply(xi_minus(v), w)) == rho_apply(
                xi_minus(kv), k_group_action(A, w)
            )


def test_pair_examples():
    n, m = 2, 3
    lam = DualSymTensor.monomial((0, 0, m))
    assert pair(lam, top_power(n, m)) == ONE
    assert pair(lam, SymTensor.zero(n, m)) == ZERO
    lam1 = DualSymTensor.monomial((m, 0, 0))
    assert pair(lam1, power_of_vector([1, 1, 0], m)) == ONE


def test_pair_evaluation_on_powers():
    n, m = 2, 2
    rng = make_rng(5)
    lam = random_value(rng, RepContext(n, m, dual=True))
    v = [gq(2, 1), gq("1/2"), gq(1, -1)]
    vm = power_of_vector(v, m)
    direct = ZERO
    for alpha, c in lam.coeffs.items():
        term = c * math.factorial(m)
        for x, a in zip(v, alpha):
            term = term * (x ** a) / math.factorial(a)
        direct = direct + term
    assert pair(lam, vm) == direct


def test_rep_context_validation():
    with pytest.raises(ValueError):
        RepContext(0, 1)
    with pytest.raises(ValueError):
        RepContext(2, 0)
    ctx = RepContext(2, 2)
    assert ctx.dim_w == math.comb(4, 2)
    assert ctx.expected_kernel_dim == math.comb(4, 3)


def test_monomial_order_is_lex():
    basis = monomials(2, 2)
    assert basis == ((0, 2), (1, 1), (2, 0))
    idx = monomial_index(2, 2)
    assert idx[(1, 1)] == 1
    assert graded_monomials(2, 3, 1) == ((0, 1, 2), (1, 0, 2))


def test_mixing_primal_dual_rejected():
    with pytest.raises(TypeError):
        SymTensor.monomial((1, 0)) + DualSymTensor.monomial((1, 0))
    with pytest.raises(TypeError):
        inner(SymTensor.monomial((1, 0)), DualSymTensor.monomial((1, 0)))
