import math

import pytest

from sunharm import (
    Cocycle,
    I,
    RepContext,
    SymTensor,
    ZERO,
    assemble_system,
    bracket,
    classify,
    e_vec,
    gq,
    harmonic_kernel,
    kernel_is_invariant,
    minus_part,
    plus_part,
    polarization_cocycles,
    rho_apply,
    symmetric_component_membership,
    t_op,
    tstar_op,
    xi,
    xi_minus,
    xi_plus,
)
from sunharm.harmonic import cocycle_to_vector, _basis_tangent
from sunharm.checks import (
    check_contraction_isometry,
    check_dual_symmetry,
    check_operator_grading,
    check_symmetric_forcing,
    lemma_battery,
    riemann_split_report,
)
from sunharm.linalg import rank_of_rows, same_span
from sunharm.symrep import project_grade
from sunharm.sun1 import scale_vec, tangent_samples

from conftest import conjugate_linear_cocycle, make_rng, random_cocycle, random_value


def single_entry_cocycle(ctx, j, value, part="a"):
    a_vals = [ctx.zero_value() for _ in range(ctx.n)]
    b_vals = [ctx.zero_value() for _ in range(ctx.n)]
    (a_vals if part == "a" else b_vals)[j] = value
    return Cocycle(ctx, a_vals, b_vals)


# -- plus / minus parts -------------------------------------------------------


def test_conjugate_linear_has_no_plus_part():
    ctx = RepContext(2, 2)
    a = conjugate_linear_cocycle(make_rng(1), ctx)
    for j in range(ctx.n):
        assert plus_part(a, e_vec(j, ctx.n)).is_zero()
        assert minus_part(a, e_vec(j, ctx.n)) == a.a_values[j]


def test_complex_linear_has_no_minus_part():
    ctx = RepContext(2, 2)
    rng = make_rng(2)
    a_vals = [random_value(rng, ctx) for _ in range(2)]
    b_vals = [w.scale(I) for w in a_vals]
    a = Cocycle(ctx, a_vals, b_vals)
    for j in range(ctx.n):
        assert minus_part(a, e_vec(j, ctx.n)).is_zero()


def test_plus_part_complex_linear_in_direction():
    ctx = RepContext(2, 2)
    a = random_cocycle(make_rng(3), ctx)
    v = [gq(1, 2), gq("1/3", "-1/2")]
    assert plus_part(a, scale_vec(I, v)) == plus_part(a, v).scale(I)
    assert minus_part(a, scale_vec(I, v)) == minus_part(a, v).scale(-I)


def test_parts_sum_to_value():
    ctx = RepContext(2, 3)
    a = random_cocycle(make_rng(4), ctx)
    for j in range(ctx.n):
        v = e_vec(j, ctx.n)
        assert plus_part(a, v) + minus_part(a, v) == a.a_values[j]


def test_evaluate_consistency():
    ctx = RepContext(3, 2)
    a = random_cocycle(make_rng(6), ctx)
    for j in range(ctx.n):
        assert a.evaluate(e_vec(j, ctx.n)) == a.a_values[j]
        assert a.evaluate(scale_vec(I, e_vec(j, ctx.n))) == a.b_values[j]
    u = [gq("1/2", 1), gq(-2), gq(0, "2/3")]
    v = [gq(1), gq(0, -1), gq("1/3", "1/4")]
    total = [x + y for x, y in zip(u, v)]
    assert a.evaluate(total) == a.evaluate(u) + a.evaluate(v)


@pytest.mark.parametrize("dual", [False, True])
def test_transform_cocycle_is_group_action(dual):
    from sunharm import transform_cocycle, unitary_corpus
    from sunharm.harmonic import cocycle_to_vector as to_vec

    ctx = RepContext(2, 2, dual)
    a = random_cocycle(make_rng(8), ctx)
    corpus = unitary_corpus(2)
    A, B = corpus[3], corpus[5]
    assert to_vec(transform_cocycle(A * B, a)) == to_vec(
        transform_cocycle(A, transform_cocycle(B, a))
    )
    ident = corpus[0]
    assert to_vec(transform_cocycle(ident, a)) == to_vec(a)


# -- the two operators --------------------------------------------------------


def test_t_of_zero_cocycle():
    ctx = RepContext(2, 2)
    assert t_op(Cocycle.zero(ctx)).is_zero()
    assert tstar_op(Cocycle.zero(ctx)).is_zero()


def test_t_single_entry_example():
    # n=2, m=1: a(xi_e1) = e3, everything else zero.
    ctx = RepContext(2, 1)
    a = single_entry_cocycle(ctx, 0, SymTensor.monomial((0, 0, 1)))
    tf = t_op(a)
    assert tf.value(0, 1) == -SymTensor.monomial((0, 1, 0))
    assert tf.value(1, 0) == SymTensor.monomial((0, 1, 0))


def test_tstar_single_entry_example():
    ctx = RepContext(2, 1)
    a = single_entry_cocycle(ctx, 0, SymTensor.monomial((1, 0, 0)))
    assert tstar_op(a) == SymTensor.monomial((0, 0, 1))


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2)])
def test_coboundary_two_form_is_bracket_action(n, m):
    ctx = RepContext(n, m)
    rng = make_rng(5)
    w0 = random_value(rng, ctx)
    a = Cocycle(
        ctx,
        [rho_apply(_basis_tangent(n, p), w0) for p in range(n)],
        [rho_apply(_basis_tangent(n, p), w0) for p in range(n, 2 * n)],
    )
    tf = t_op(a)
    for p in range(2 * n):
        for q in range(p + 1, 2 * n):
            br = bracket(_basis_tangent(n, p), _basis_tangent(n, q))
            assert tf.value(p, q) == rho_apply(br, w0)


def test_trace_vanishes_on_top_graded_conjugate_linear():
    ctx = RepContext(2, 3)
    for seed in range(3):
        a = conjugate_linear_cocycle(make_rng(10 + seed), ctx, grade=ctx.m)
        assert tstar_op(a).is_zero()


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3)])
def test_two_form_matches_direct_symmetry_residual(n, m):
    """The two-form and the pairwise symmetry residual are computed through
    different paths and must agree."""
    ctx = RepContext(n, m)
    a = random_cocycle(make_rng(21), ctx)
    tf = t_op(a)
    for p in range(2 * n):
        for q in range(p + 1, 2 * n):
            direct = rho_apply(_basis_tangent(n, p), a.value(q)) - rho_apply(
                _basis_tangent(n, q), a.value(p)
            )
            assert tf.value(p, q) == direct
    # and for kernel elements the residual vanishes for arbitrary complex pairs
    for k in harmonic_kernel(ctx)[:2]:
        u = [gq(2, 1), gq("1/2", "1/3")][:n] + [ZERO] * (n - 2)
        v = [gq(0, 1), gq(-1, 2)][:n] + [ZERO] * (n - 2)
        res = rho_apply(xi(u), k.evaluate(v)) - rho_apply(xi(v), k.evaluate(u))
        assert res.is_zero()
        assert tstar_op(k).is_zero()


@pytest.mark.parametrize(
    "n,m",
    [(2, 1), (2, 2), (3, 1)],
)
def test_grade_decomposition_of_two_form(n, m):
    """Grade k of T a(Y_p, Y_q) equals the sum of its four bidegree pieces."""
    ctx = RepContext(n, m)
    a = random_cocycle(make_rng(31), ctx)

    def pk(w, k):
        if k < 0 or k > m:
            return ctx.zero_value()
        return project_grade(w, k)

    tf = t_op(a)
    dirs = [e_vec(j, n) for j in range(n)] + [
        scale_vec(I, e_vec(j, n)) for j in range(n)
    ]
    for p in range(2 * n):
        for q in range(p + 1, 2 * n):
            u, v = dirs[p], dirs[q]
            for k in range(m + 1):
                d1 = rho_apply(xi_plus(u), pk(plus_part(a, v), k - 1)) - rho_apply(
                    xi_plus(v), pk(plus_part(a, u), k - 1)
                )
                d2 = rho_apply(xi_minus(u), pk(minus_part(a, v), k + 1)) - rho_apply(
                    xi_minus(v), pk(minus_part(a, u), k + 1)
                )
                d3 = rho_apply(xi_plus(u), pk(minus_part(a, v), k - 1)) - rho_apply(
                    xi_minus(v), pk(plus_part(a, u), k + 1)
                )
                d4 = rho_apply(xi_minus(u), pk(plus_part(a, v), k + 1)) - rho_apply(
                    xi_plus(v), pk(minus_part(a, u), k - 1)
                )
                assert pk(tf.value(p, q), k) == d1 + d2 + d3 + d4


# -- the assembled system and its kernel -------------------------------------


@pytest.mark.parametrize("dual", [False, True])
def test_matrix_path_matches_operator_path(dual):
    """Applying the assembled system to a coordinate vector reproduces the
    two-form blocks and the trace block computed through the operators."""
    ctx = RepContext(2, 2, dual)
    n, d = ctx.n, ctx.dim_w
    a = random_cocycle(make_rng(41), ctx)
    vec = cocycle_to_vector(a)
    residual = assemble_system(ctx).apply(vec)
    index = ctx.basis_index()
    tf = t_op(a)
    pos = 0
    for p in range(2 * n):
        for q in range(p + 1, 2 * n):
            assert residual[pos : pos + d] == tf.value(p, q).to_vector(index)
            pos += d
    assert residual[pos : pos + d] == tstar_op(a).to_vector(index)


def test_system_shape_counts():
    ctx = RepContext(2, 1)
    M = assemble_system(ctx)
    assert (M.rows, M.cols) == (21, 12)
    ctx = RepContext(3, 2)
    M = assemble_system(ctx)
    d = ctx.dim_w
    assert M.cols == 2 * 3 * d
    assert M.rows == (math.comb(6, 2) + 1) * d


@pytest.mark.parametrize(
    "n,m,dual,expected",
    [
        (2, 1, False, 3),
        (2, 1, True, 3),
        (3, 2, False, 10),
        (3, 2, True, 10),
        (2, 3, False, math.comb(5, 4)),
    ],
)
def test_kernel_dimensions(n, m, dual, expected):
    ctx = RepContext(n, m, dual)
    kernel = harmonic_kernel(ctx)
    assert len(kernel) == expected == ctx.expected_kernel_dim


@pytest.mark.parametrize("dual", [False, True])
def test_kernel_elements_satisfy_operators(dual):
    ctx = RepContext(2, 2, dual)
    for a in harmonic_kernel(ctx):
        assert t_op(a).is_zero()
        assert tstar_op(a).is_zero()


@pytest.mark.parametrize("n,m,dual", [(2, 2, False), (2, 1, True), (3, 1, False)])
def test_kernel_equals_polarization_span(n, m, dual):
    ctx = RepContext(n, m, dual)
    kernel = [cocycle_to_vector(a) for a in harmonic_kernel(ctx)]
    pol = [cocycle_to_vector(a) for a in polarization_cocycles(ctx)]
    ncols = 2 * n * ctx.dim_w
    assert rank_of_rows(pol, ncols) == len(pol)  # independent oracle family
    assert same_span(kernel, pol, ncols)


@pytest.mark.parametrize("dual", [False, True])
def test_polarization_cocycles_are_solutions(dual):
    ctx = RepContext(3, 2, dual)
    pol = polarization_cocycles(ctx)
    assert len(pol) == ctx.expected_kernel_dim
    for a in pol:
        assert t_op(a).is_zero()
        assert tstar_op(a).is_zero()


@pytest.mark.parametrize("n,m,dual", [(2, 2, False), (2, 1, True)])
def test_kernel_k_invariance(n, m, dual):
    ctx = RepContext(n, m, dual)
    assert kernel_is_invariant(ctx, harmonic_kernel(ctx))


def test_kernel_deterministic():
    ctx = RepContext(2, 2)
    k1 = [cocycle_to_vector(a) for a in harmonic_kernel(ctx)]
    k2 = [cocycle_to_vector(a) for a in harmonic_kernel(ctx)]
    assert k1 == k2


# -- membership ---------------------------------------------------------------


def test_membership_polarizations():
    from sunharm.symrep import derivative

    n, j = 2, 3
    s = SymTensor.monomial((2, 2, 0)) + SymTensor.monomial((4, 0, 0), gq("1/2"))
    values = [derivative(s, k) for k in range(n)]
    member, cert = symmetric_component_membership(values)
    assert member and not cert


def test_membership_rejects_hook_witness():
    n, j = 2, 2
    w1 = -SymTensor.monomial((j - 1, 1, 0))
    w2 = SymTensor.monomial((j, 0, 0))
    member, cert = symmetric_component_membership([w1, w2])
    assert not member and cert
    assert cert.is_real() and cert.re > 0


def test_membership_zero_form():
    values = [SymTensor.zero(2, 2), SymTensor.zero(2, 2)]
    member, cert = symmetric_component_membership(values)
    assert member and not cert


def test_membership_grading_mismatch():
    mixed = SymTensor.monomial((1, 0, 1)) + SymTensor.monomial((2, 0, 0))
    with pytest.raises(ValueError):
        symmetric_component_membership([mixed, SymTensor.zero(2, 2)])


# -- classification -----------------------------------------------------------


def test_classify_primal_all_flags():
    ctx = RepContext(2, 2)
    report = classify(ctx, harmonic_kernel(ctx))
    assert report.flags == {
        "conjugate_linear": True,
        "top_graded": True,
        "symmetric_component": True,
        "dimension_match": True,
    }
    assert report.kernel_dim == math.comb(4, 3) == 4
    assert report.all_passed()


def test_classify_dual_flags():
    ctx = RepContext(2, 1, dual=True)
    report = classify(ctx, harmonic_kernel(ctx))
    assert report.flags["complex_linear"]
    assert report.flags["symmetric_component"]
    assert report.all_passed()


def test_classify_fails_on_riemann_case():
    ctx = RepContext(1, 2)
    report = classify(ctx, harmonic_kernel(ctx))
    assert not report.flags["conjugate_linear"]
    assert not report.flags["dimension_match"]
    assert not report.all_passed()


# -- structure batteries ------------------------------------------------------


@pytest.mark.parametrize("n,m", [(2, 3), (3, 2)])
def test_operator_grading_battery(n, m):
    entries = check_operator_grading(n, m)
    assert all(e["status"] == "pass" for e in entries)
    ks = [e["j"] for e in entries if e["name"] == "operator-grading"]
    assert ks == list(range(1, m))


def test_raising_annihilates_top_grade():
    n, m = 2, 3
    from sunharm.symrep import graded_monomials

    for alpha in graded_monomials(n, m, m):
        for v in tangent_samples(n):
            assert rho_apply(xi_plus(v), SymTensor.monomial(alpha)).is_zero()


@pytest.mark.parametrize(
    "n,m,expected",
    [(2, 1, 3), (3, 1, 6), (2, 2, 4)],
)
def test_dual_symmetry_dimensions(n, m, expected):
    entry = check_dual_symmetry(n, m)
    assert entry["status"] == "pass"
    assert entry["dimension"] == expected == math.comb(n + m, m + 1)


@pytest.mark.parametrize(
    "n,m,j,expected",
    [(2, 2, 1, 3), (2, 2, 2, 4), (3, 2, 1, math.comb(4, 2))],
)
def test_symmetric_forcing_dimensions(n, m, j, expected):
    entries = check_symmetric_forcing(n, m, j)
    by_name = {e["name"]: e for e in entries}
    assert by_name["symmetric-forcing"]["status"] == "pass"
    assert by_name["symmetric-forcing"]["dimension"] == expected
    assert by_name["hook-counterexample"]["status"] == "pass"


@pytest.mark.parametrize("j", [1, 2, 3])
def test_hook_counterexample_sides(j):
    """The two sides of the relation on the hook witness differ by -1 vs j."""
    n, m = 2, 3
    if j > m:
        return
    r = m - j
    w1 = -SymTensor.monomial((j - 1, 1, r))
    w2 = SymTensor.monomial((j, 0, r))
    lhs = rho_apply(xi_minus(e_vec(1, n)), w1)
    rhs = rho_apply(xi_minus(e_vec(0, n)), w2)
    target = (j - 1, 0, r + 1)
    assert lhs == SymTensor.monomial(target, -1)
    assert rhs == SymTensor.monomial(target, j)
    assert lhs != rhs


@pytest.mark.parametrize("n,m,j", [(2, 2, 1), (2, 3, 1), (2, 3, 2), (3, 3, 2)])
def test_contraction_isometry(n, m, j):
    entry = check_contraction_isometry(n, m, j)
    assert entry["status"] == "pass", entry["details"]


@pytest.mark.parametrize("m,j", [(2, 1), (3, 1), (3, 2), (4, 3)])
def test_contraction_pinned_value(m, j):
    n = 2
    beta_val = SymTensor.monomial((j, 0, m - j))
    out = rho_apply(xi_plus(e_vec(0, n)), beta_val)
    assert out == SymTensor.monomial((j + 1, 0, m - j - 1), m - j)


def test_lemma_battery_vacuous_for_m_one():
    entries = lemma_battery(2, 1)
    contraction = [e for e in entries if e["name"] == "contraction-isometry"]
    assert len(contraction) == 1 and contraction[0]["status"] == "vacuous"


def test_lemma_battery_handles_n_one():
    entries = lemma_battery(1, 2)
    assert entries and all(e["status"] in ("pass", "vacuous") for e in entries)
    names = {e["name"] for e in entries if e["status"] == "vacuous"}
    assert "dual-symmetry" in names and "hook-counterexample" in names


# -- the n = 1 split ----------------------------------------------------------


@pytest.mark.parametrize("m", [2, 4])
def test_riemann_split_even_powers(m):
    rep = riemann_split_report(RepContext(1, m))
    assert rep["split"]
    assert rep["complex_linear_dim"] == rep["conjugate_linear_dim"] > 0


def test_riemann_split_fails_for_higher_rank():
    rep = riemann_split_report(RepContext(2, 2))
    assert not rep["split"]
    assert rep["complex_linear_dim"] == 0
    assert rep["conjugate_linear_dim"] == rep["kernel_dim"]


def test_riemann_split_dual_case():
    rep = riemann_split_report(RepContext(1, 2, dual=True))
    assert rep["split"]
    assert rep["complex_linear_dim"] == rep["conjugate_linear_dim"]
