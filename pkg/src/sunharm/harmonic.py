"""Harmonicity constraints on cocycles and their exact joint kernel.

A cocycle is a real-linear map from the tangent part p of su(n,1) into the
representation space W (a symmetric power or its dual).  It is stored by its
values on the 2n real basis tangents

    Y_0..Y_{n-1}   = xi(e_1)..xi(e_n)        (the ``A_j`` values)
    Y_n..Y_{2n-1}  = xi(i e_1)..xi(i e_n)    (the ``B_j`` values)

Two constraint operators are imposed:

* the two-form  T a (Y_p, Y_q) = rho(Y_p) a(Y_q) - rho(Y_q) a(Y_p), whose
  vanishing says the bilinear form (u, v) -> rho(xi_u) a(xi_v) is symmetric;
* the trace  T* a = sum over all 2n basis directions of rho(Y_p) a(Y_p).

The joint kernel is computed exactly as the nullspace of one assembled
matrix.  Coordinate order: block p (all A blocks before all B blocks, index
ascending), then monomial index in lex order; constraint rows: all two-form
blocks for pairs (p, q) in lex order, then the trace block.  Everything
downstream (classification flags, isotypic membership, the structure checks
used by the CLI) is an exact zero test on these objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .exactfield import GaussianRational, I, ZERO, gq
from .linalg import ExactMatrix, det, kernel_basis, rank_of_rows, same_span
from .sun1 import LieElement, e_vec, scale_vec, unitary_corpus, xi
from .symrep import (
    DualSymTensor,
    RepContext,
    SymTensor,
    derivative,
    k_group_action,
    monomials,
    multiply_var,
    raise_weighted,
    rho_apply,
    rho_matrix,
    shift_down,
)

Vector = list[GaussianRational]

#: Convention notes recorded in every report.
DECISION_NOTES = (
    "two-form convention: T a(Y1,Y2) = rho(Y1)a(Y2) - rho(Y2)a(Y1), the"
    " antisymmetrization whose vanishing is equivalent to symmetry of"
    " (u,v) -> rho(xi_u)a(xi_v)",
    "trace convention: T* sums rho(Y)a(Y) over all 2n real basis directions"
    " xi(e_j) and xi(i e_j)",
)


@lru_cache(maxsize=None)
def _basis_tangent(n: int, p: int) -> LieElement:
    """The p-th real basis tangent (0 <= p < 2n)."""
    if p < n:
        return xi(e_vec(p, n))
    return xi(scale_vec(I, e_vec(p - n, n)))


@dataclass
class Cocycle:
    """A real-linear map p -> W stored by its 2n basis values."""

    ctx: RepContext
    a_values: list
    b_values: list

    def __post_init__(self):
        n = self.ctx.n
        if len(self.a_values) != n or len(self.b_values) != n:
            raise ValueError("a cocycle needs n A-values and n B-values")
        cls = self.ctx.value_class
        for w in (*self.a_values, *self.b_values):
            if not isinstance(w, cls):
                raise TypeError("cocycle values do not match the context")
            if w.n != n or w.degree != self.ctx.m:
                raise ValueError("cocycle value of wrong shape")

    @classmethod
    def zero(cls, ctx: RepContext) -> "Cocycle":
        return cls(
            ctx,
            [ctx.zero_value() for _ in range(ctx.n)],
            [ctx.zero_value() for _ in range(ctx.n)],
        )

    def value(self, p: int):
        """Value on the p-th real basis tangent."""
        return self.a_values[p] if p < self.ctx.n else self.b_values[p - self.ctx.n]

    def evaluate(self, v: Sequence):
        """Value on xi(v) for an arbitrary complex tangent vector v."""
        out = self.ctx.zero_value()
        for j, x in enumerate(v):
            if type(x) is not GaussianRational:
                x = gq(x)
            if x.re:
                out = out + self.a_values[j].scale(gq(x.re))
            if x.im:
                out = out + self.b_values[j].scale(gq(x.im))
        return out

    def is_zero(self) -> bool:
        return all(w.is_zero() for w in self.a_values + self.b_values)


def plus_part(a: Cocycle, v: Sequence):
    """Complex-linear component: (a(xi_v) - i a(xi_iv)) / 2."""
    out = a.ctx.zero_value()
    half = gq("1/2")
    for j, x in enumerate(v):
        if type(x) is not GaussianRational:
            x = gq(x)
        if not x:
            continue
        pj = (a.a_values[j] - a.b_values[j].scale(I)).scale(half)
        out = out + pj.scale(x)
    return out


def minus_part(a: Cocycle, v: Sequence):
    """Conjugate-linear component: (a(xi_v) + i a(xi_iv)) / 2."""
    out = a.ctx.zero_value()
    half = gq("1/2")
    for j, x in enumerate(v):
        if type(x) is not GaussianRational:
            x = gq(x)
        if not x:
            continue
        mj = (a.a_values[j] + a.b_values[j].scale(I)).scale(half)
        out = out + mj.scale(x.conjugate())
    return out


class TwoForm:
    """Antisymmetric table over unordered pairs of the 2n basis tangents."""

    def __init__(self, n: int, values: dict):
        self.n = n
        self.values = values  # keys (p, q) with p < q

    def value(self, p: int, q: int):
        if p == q:
            raise ValueError("a two-form needs two distinct directions")
        if p < q:
            return self.values[(p, q)]
        return -self.values[(q, p)]

    def is_zero(self) -> bool:
        return all(w.is_zero() for w in self.values.values())


def t_op(a: Cocycle) -> TwoForm:
    """The two-form T a; zero exactly when rho(xi_u)a(xi_v) is symmetric."""
    n = a.ctx.n
    vals = {}
    mats = [_basis_tangent(n, p) for p in range(2 * n)]
    for p in range(2 * n):
        for q in range(p + 1, 2 * n):
            vals[(p, q)] = rho_apply(mats[p], a.value(q)) - rho_apply(
                mats[q], a.value(p)
            )
    return TwoForm(n, vals)


def tstar_op(a: Cocycle):
    """The 2n-term trace sum rho(Y_p) a(Y_p)."""
    n = a.ctx.n
    out = a.ctx.zero_value()
    for p in range(2 * n):
        out = out + rho_apply(_basis_tangent(n, p), a.value(p))
    return out


# -- the assembled linear system ------------------------------------------


def _action_matrices(ctx: RepContext) -> list[ExactMatrix]:
    return [
        rho_matrix(_basis_tangent(ctx.n, p), ctx.n, ctx.m, ctx.dual)
        for p in range(2 * ctx.n)
    ]


def assemble_system(ctx: RepContext) -> ExactMatrix:
    """Matrix whose nullspace is {a : T a = 0 and T* a = 0}.

    Rows: the two-form blocks for pairs (p, q) in lex order, then the trace
    block; columns: cocycle coordinates (block p, then monomial).
    """
    n, d = ctx.n, ctx.dim_w
    nb = 2 * n
    mats = [M._d for M in _action_matrices(ctx)]
    rows = []
    for p in range(nb):
        for q in range(p + 1, nb):
            for r in range(d):
                row = [ZERO] * (nb * d)
                mp = mats[p][r]
                mq = mats[q][r]
                bq = q * d
                bp = p * d
                for s in range(d):
                    if mp[s]:
                        row[bq + s] = mp[s]
                    if mq[s]:
                        row[bp + s] = row[bp + s] - mq[s]
                rows.append(row)
    for r in range(d):
        row = [ZERO] * (nb * d)
        for p in range(nb):
            mp = mats[p][r]
            b = p * d
            for s in range(d):
                if mp[s]:
                    row[b + s] = row[b + s] + mp[s]
        rows.append(row)
    return ExactMatrix(rows)


def cocycle_to_vector(a: Cocycle) -> Vector:
    ctx = a.ctx
    index = ctx.basis_index()
    out = []
    for p in range(2 * ctx.n):
        out.extend(a.value(p).to_vector(index))
    return out


def cocycle_from_vector(ctx: RepContext, vec: Sequence[GaussianRational]) -> Cocycle:
    d = ctx.dim_w
    basis = ctx.basis()
    cls = ctx.value_class
    values = []
    for p in range(2 * ctx.n):
        coeffs = {}
        for s in range(d):
            c = vec[p * d + s]
            if c:
                coeffs[basis[s]] = c
        values.append(cls(ctx.n, ctx.m, coeffs))
    return Cocycle(ctx, values[: ctx.n], values[ctx.n :])


def harmonic_kernel(ctx: RepContext) -> list[Cocycle]:
    """Canonical exact basis of the joint kernel of (T, T*)."""
    return [cocycle_from_vector(ctx, v) for v in kernel_basis(assemble_system(ctx))]


# -- the symmetric/hook decomposition and membership ------------------------


def _uniform_grade(values: Sequence) -> int | None:
    grades = set()
    for w in values:
        grades |= w.support_grades()
    if not grades:
        return None
    if len(grades) > 1:
        raise ValueError("grading mismatch: values span several grades")
    return grades.pop()


def symmetric_component_membership(values: Sequence) -> tuple[bool, GaussianRational]:
    """Whether a graded form lies in the leading (symmetric) component.

    ``values`` are the n values of the form on the basis directions, all
    supported in a single grade g.  The leading component of
    C^n (x) S^g(C^n) is realized as the image of the polarization section of
    the multiplication map; the hook component is that map's kernel.  Returns
    the membership verdict together with the exact squared norm of the hook
    projection (zero iff member).
    """
    values = list(values)
    n = len(values)
    g = _uniform_grade(values)
    cert = ZERO
    if g is None:
        return True, cert
    dual = isinstance(values[0], DualSymTensor)
    if dual:
        s = values[0]._like({}, degree=values[0].degree + 1)
        for k in range(n):
            s = s + raise_weighted(values[k], k)
        section = [shift_down(s, k) for k in range(n)]
    else:
        s = values[0]._like({}, degree=values[0].degree + 1)
        for k in range(n):
            s = s + multiply_var(values[k], k)
        section = [derivative(s, k) for k in range(n)]
    inv = gq(1) / (g + 1)
    member = True
    for k in range(n):
        hook = values[k] - section[k].scale(inv)
        for c in hook.coeffs.values():
            cert = cert + c.norm_sq()
        if hook.coeffs:
            member = False
    return member, cert


def polarization_cocycles(ctx: RepContext) -> list[Cocycle]:
    """Independent explicit solutions spanning the symmetric component.

    Primal: conjugate-linear cocycles built from partial derivatives of
    degree-(m+1) polynomials in the first n variables.  Dual: complex-linear
    cocycles built from exponent shifts of dual monomials.  Each satisfies
    T = 0 and T* = 0; together they give the independent dimension oracle.
    """
    n, m = ctx.n, ctx.m
    out = []
    for sigma in monomials(n, m + 1):
        if ctx.dual:
            tau = DualSymTensor.monomial(sigma + (0,))
            a_vals = [shift_down(tau, k) for k in range(n)]
            b_vals = [w.scale(I) for w in a_vals]
        else:
            s = SymTensor.monomial(sigma + (0,))
            a_vals = [derivative(s, k) for k in range(n)]
            b_vals = [w.scale(-I) for w in a_vals]
        out.append(Cocycle(ctx, a_vals, b_vals))
    return out


# -- classification ---------------------------------------------------------


@dataclass
class KernelReport:
    """Structured verdict for one (n, m, dual) kernel computation."""

    ctx: RepContext
    system_rows: int
    system_cols: int
    kernel_dim: int
    expected_dim: int
    flags: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    lemmas: list = field(default_factory=list)
    seconds: float = 0.0

    def all_passed(self) -> bool:
        ok = all(c["status"] == "pass" for c in self.checks)
        return ok and all(e["status"] in ("pass", "vacuous") for e in self.lemmas)

    def as_dict(self) -> dict:
        return {
            "case": {"n": self.ctx.n, "m": self.ctx.m, "dual": self.ctx.dual},
            "mode": "kernel-verification",
            "system": {"rows": self.system_rows, "columns": self.system_cols},
            "kernel": {
                "dimension": self.kernel_dim,
                "expected_dimension": self.expected_dim,
            },
            "flags": dict(self.flags),
            "checks": list(self.checks),
            "lemmas": list(self.lemmas),
            "decisions": list(DECISION_NOTES),
            "seconds": self.seconds,
        }


def _check(name: str, passed: bool, detail: str = "") -> dict:
    return {"name": name, "status": "pass" if passed else "fail", "details": detail}


def classify(ctx: RepContext, kernel: Sequence[Cocycle],
             system_shape: tuple[int, int] | None = None) -> KernelReport:
    """Run the structural verdicts on a computed kernel basis.

    Flags (each an exact zero test): linearity (conjugate-linear for the
    primal side, complex-linear for the dual), support in the top grade,
    membership in the symmetric component, and the dimension count.
    """
    n, m = ctx.n, ctx.m
    if system_shape is None:
        rows = (math.comb(2 * n, 2) + 1) * ctx.dim_w
        cols = 2 * n * ctx.dim_w
    else:
        rows, cols = system_shape
    report = KernelReport(
        ctx=ctx,
        system_rows=rows,
        system_cols=cols,
        kernel_dim=len(kernel),
        expected_dim=ctx.expected_kernel_dim,
    )
    linear_key = "complex_linear" if ctx.dual else "conjugate_linear"

    # Every kernel element must re-verify through the operator path.
    op_ok = all(t_op(a).is_zero() and tstar_op(a).is_zero() for a in kernel)
    report.checks.append(
        _check("operator-recheck", op_ok, "T and T* vanish via direct evaluation")
    )

    wrong_part = minus_part if ctx.dual else plus_part
    lin_ok = all(
        wrong_part(a, e_vec(j, n)).is_zero() for a in kernel for j in range(n)
    )
    report.flags[linear_key] = lin_ok
    report.checks.append(
        _check(
            linear_key.replace("_", "-"),
            lin_ok,
            "vanishing of the opposite-linearity component",
        )
    )

    top_ok = all(
        w.support_grades() <= {m} for a in kernel for w in (*a.a_values, *a.b_values)
    )
    report.flags["top_graded"] = top_ok
    report.checks.append(
        _check("top-graded", top_ok, f"values supported in grade {m} only")
    )

    sym_ok = lin_ok and top_ok
    if sym_ok:
        good_part = plus_part if ctx.dual else minus_part
        for a in kernel:
            vals = [good_part(a, e_vec(k, n)) for k in range(n)]
            member, _cert = symmetric_component_membership(vals)
            if not member:
                sym_ok = False
                break
    report.flags["symmetric_component"] = sym_ok
    report.checks.append(
        _check(
            "symmetric-component",
            sym_ok,
            "hook projection of each basis element is exactly zero",
        )
    )

    dim_ok = len(kernel) == ctx.expected_kernel_dim
    report.flags["dimension_match"] = dim_ok
    report.checks.append(
        _check(
            "dimension-match",
            dim_ok,
            f"kernel dimension {len(kernel)} vs expected {ctx.expected_kernel_dim}",
        )
    )

    # Independent oracle: the explicit symmetric solutions span the kernel.
    pol = [cocycle_to_vector(a) for a in polarization_cocycles(ctx)]
    ker_vecs = [cocycle_to_vector(a) for a in kernel]
    ncols = 2 * n * ctx.dim_w
    span_ok = same_span(ker_vecs, pol, ncols)
    report.checks.append(
        _check(
            "polarization-span",
            span_ok,
            "kernel equals the span of the explicit symmetric solutions",
        )
    )
    return report


def transform_cocycle(A: ExactMatrix, a: Cocycle) -> Cocycle:
    """Induced action of an embedded unitary on a cocycle.

    (k . a)(xi_v) = rho(k) a(xi_{w}) with w = Ad(k)^{-1} v; on p the adjoint
    action of k = embed(A) is v -> det(A) A v, so its inverse is
    v -> conj(det(A)) A* v.
    """
    n = a.ctx.n
    dinv = det(A).conjugate()
    Ainv = A.conj_transpose()
    new_a = []
    new_b = []
    for j in range(n):
        u = [dinv * x for x in Ainv.column(j)]
        new_a.append(k_group_action(A, a.evaluate(u)))
        new_b.append(k_group_action(A, a.evaluate(scale_vec(I, u))))
    return Cocycle(a.ctx, new_a, new_b)


def kernel_is_invariant(ctx: RepContext, kernel: Sequence[Cocycle]) -> bool:
    """The compact group maps the kernel into itself (exact rank test)."""
    ncols = 2 * ctx.n * ctx.dim_w
    base = [cocycle_to_vector(a) for a in kernel]
    r = rank_of_rows(base, ncols)
    for A in unitary_corpus(ctx.n):
        moved = [cocycle_to_vector(transform_cocycle(A, a)) for a in kernel]
        if rank_of_rows(base + moved, ncols) != r:
            return False
    return True
