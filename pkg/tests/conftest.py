"""Shared deterministic generators for the test suite."""

import random
from fractions import Fraction

from sunharm import Cocycle, RepContext, gq
from sunharm.symrep import graded_monomials, monomials


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_scalar(rng: random.Random):
    re = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    im = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return gq(re, im)


def random_value(rng: random.Random, ctx: RepContext, grade: int | None = None):
    basis = (
        graded_monomials(ctx.n, ctx.m, grade)
        if grade is not None
        else monomials(ctx.n + 1, ctx.m)
    )
    coeffs = {}
    for alpha in basis:
        if rng.random() < 0.6:
            coeffs[alpha] = random_scalar(rng)
    return ctx.value_class(ctx.n, ctx.m, coeffs)


def random_cocycle(rng: random.Random, ctx: RepContext, grade: int | None = None):
    return Cocycle(
        ctx,
        [random_value(rng, ctx, grade) for _ in range(ctx.n)],
        [random_value(rng, ctx, grade) for _ in range(ctx.n)],
    )


def conjugate_linear_cocycle(rng: random.Random, ctx: RepContext, grade: int | None = None):
    """A cocycle with vanishing complex-linear part (B_j = -i A_j)."""
    a_vals = [random_value(rng, ctx, grade) for _ in range(ctx.n)]
    b_vals = [w.scale(gq(0, -1)) for w in a_vals]
    return Cocycle(ctx, a_vals, b_vals)
