"""Seeded random generators for property checks.

Everything is driven by a caller-supplied random.Random so that identical
seeds give identical data.  Generic weight choices are drawn and then
re-drawn until the shift is non-resonant up to the order the caller needs.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .densities import BidiffOp, Context, Density, SymbolPoly, VectorField
from .poly import Poly
from .resonance import classify_shift


def random_fraction(rng: random.Random, span: int = 4, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_x_poly(rng: random.Random, n: int, degree: int, terms: int = 4) -> Poly:
    out = {}
    zero = (0,) * n
    for _ in range(terms):
        exps = [0] * n
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(n)] += 1
        out[(tuple(exps), zero, zero)] = random_fraction(rng)
    return Poly(n, out)


def random_vector_field(rng: random.Random, n: int, degree: int) -> VectorField:
    return VectorField(tuple(random_x_poly(rng, n, degree, 3) for _ in range(n)))


def random_density(rng: random.Random, n: int, degree: int, weight) -> Density:
    return Density(random_x_poly(rng, n, degree), weight)


def random_body(rng: random.Random, n: int, order: int, coeff_degree: int,
                arity: int = 2, terms: int = 6) -> Poly:
    out = {}
    for _ in range(terms):
        xa = [0] * n
        for _ in range(rng.randint(0, coeff_degree)):
            xa[rng.randrange(n)] += 1
        fiber = rng.randint(0, order)
        aa = [0] * n
        ba = [0] * n
        for _ in range(fiber):
            target = aa if (arity == 1 or rng.random() < 0.5) else ba
            target[rng.randrange(n)] += 1
        out[(tuple(xa), tuple(aa), tuple(ba))] = random_fraction(rng)
    return Poly(n, out)


def generic_context(rng: random.Random, n: int, max_order: int,
                    arity: int = 2) -> Context:
    """Random weights whose shift is non-resonant up to max_order."""
    while True:
        weights = tuple(random_fraction(rng, 3, 5) for _ in range(arity))
        mu = random_fraction(rng, 3, 5)
        ctx = Context(n, weights, mu)
        if not classify_shift(n, ctx.delta, max_order).tuples:
            return ctx


def random_operator(rng: random.Random, ctx: Context, order: int,
                    coeff_degree: int, terms: int = 6) -> BidiffOp:
    return BidiffOp(
        random_body(rng, ctx.n, order, coeff_degree, ctx.arity, terms), ctx)


def random_symbol(rng: random.Random, ctx: Context, order: int,
                  coeff_degree: int, terms: int = 6) -> SymbolPoly:
    return SymbolPoly(
        random_body(rng, ctx.n, order, coeff_degree, ctx.arity, terms), ctx)
