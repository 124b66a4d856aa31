"""Casimir operators of the projective algebra action and their spectrum.

`casimir_direct` sums Lie_e composed with Lie_e* over the dual basis pairs
and is the defining form.  On symbols it coincides with the closed form
`casimir_symbol` (degree preserving, coefficient transparent); on operators
it decomposes as casimir_symbol plus the degree-lowering correction
`casimir_correction`.  The decomposition identity is verified exactly in the
test suite rather than assumed.

On the block of homogeneous symbols of total fiber degree i with two-line
tableau label q, `casimir_symbol` is the scalar

    n(n+1) d(d-1) - 2((n+1) d - n + q)(i) + 2 i^2 + 2 q(q-1)

where d is the shift; `casimir_eigenvalue` evaluates it and
`highest_weight_vector` produces the canonical generator of each block.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, TypeVar, Union

from .densities import BidiffOp, Context, SymbolPoly, lie_derivative_operator, lie_derivative_symbol
from .poly import ALPHA, BETA, Poly, as_fraction
from .slbasis import sl_basis


class SpectralLabel(NamedTuple):
    """Names an isotypic block: total degree i and tableau label p."""

    i: int
    p: int


class LabelRangeError(ValueError):
    """Spectral label outside the admissible range."""


def check_label(n: int, i: int, p: int):
    if i < 0 or p < 0:
        raise LabelRangeError(f"label ({i},{p}) must be non-negative")
    if n == 1:
        if p != 0:
            raise LabelRangeError(f"label ({i},{p}) invalid: p must be 0 when n=1")
    elif p > i // 2:
        raise LabelRangeError(f"label ({i},{p}) invalid: p exceeds floor(i/2)")


def casimir_eigenvalue(n: int, delta, i: int, p: int) -> Fraction:
    """Eigenvalue of casimir_symbol on the (i, p) block."""
    check_label(n, i, p)
    d = as_fraction(delta)
    return (n * (n + 1) * d * (d - 1)
            - 2 * ((n + 1) * d - n + p) * i
            + 2 * i * i
            + 2 * p * (p - 1))


def highest_weight_vector(k: int, l: int, q: int, ctx: Context) -> SymbolPoly:
    """(a1*b2 - a2*b1)^q * a1^(k-q) * b1^(l-q), the canonical generator of
    the two-line tableau block with row lengths k+l-q and q."""
    if q < 0 or q > min(k, l):
        raise LabelRangeError(f"tableau label q={q} exceeds min(k,l)={min(k, l)}")
    n = ctx.n
    if n == 1 and q > 0:
        raise LabelRangeError("q must be 0 when n=1")
    body = (Poly.variable(n, ALPHA, 1) ** (k - q)
            * Poly.variable(n, BETA, 1) ** (l - q))
    if q:
        det = (Poly.variable(n, ALPHA, 1) * Poly.variable(n, BETA, 2)
               - Poly.variable(n, ALPHA, 2) * Poly.variable(n, BETA, 1))
        body = det ** q * body
    return SymbolPoly(body, ctx)


_OpOrSym = TypeVar("_OpOrSym", bound=Union[SymbolPoly, BidiffOp])


def _ct_body(body: Poly, ctx: Context) -> Poly:
    n = ctx.n
    d = ctx.delta
    fams = ctx.fiber_families()
    out = (n * (n + 1) * d * (d - 1)) * body
    for fam in fams:
        e = body.euler(fam)
        if not e.is_zero():
            out = out + (2 * (n + 1) * (1 - d)) * e
    for fam_k in fams:
        if body.degree(fam_k) <= 0:
            continue
        for fam_l in fams:
            if body.degree(fam_l) <= 0:
                continue
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    xi_k_i = Poly.variable(n, fam_k, i)
                    xi_l_j = Poly.variable(n, fam_l, j)
                    cross = body.diff(fam_l, i).diff(fam_k, j)
                    if not cross.is_zero():
                        out = out + xi_k_i * xi_l_j * cross
                    straight = body.diff(fam_l, j).diff(fam_k, i)
                    if not straight.is_zero():
                        out = out + xi_k_i * xi_l_j * straight
    return out


def casimir_symbol(arg: _OpOrSym) -> _OpOrSym:
    """Degree-preserving closed form: acts on fiber variables only, so it is
    transparent to the x coefficients."""
    return type(arg)(_ct_body(arg.body, arg.context), arg.context)


def _nc_body(body: Poly, ctx: Context) -> Poly:
    n = ctx.n
    out = Poly.zero(n)
    for fam, lam in zip(ctx.fiber_families(), ctx.weights):
        contracted = body.eta_contract(fam)
        if contracted.is_zero():
            continue
        piece = contracted.euler(fam) + ((n + 1) * lam) * contracted
        out = out + 2 * piece
    return out


def casimir_correction(arg: _OpOrSym) -> _OpOrSym:
    """Degree-lowering part: one x-derivative paired with one fiber
    derivative per family, weighted by the fiber degree plus (n+1) times the
    argument weight."""
    return type(arg)(_nc_body(arg.body, arg.context), arg.context)


def casimir_direct(arg: _OpOrSym) -> _OpOrSym:
    """Sum of Lie_e after Lie_e* over all dual basis pairs.

    Uses the operator action on BidiffOp and the tensor action on
    SymbolPoly; all x-dependent intermediate terms are kept and must cancel
    on their own."""
    if isinstance(arg, BidiffOp):
        lie = lie_derivative_operator
    elif isinstance(arg, SymbolPoly):
        lie = lie_derivative_symbol
    else:
        raise TypeError("casimir_direct expects a SymbolPoly or BidiffOp")
    total = Poly.zero(arg.context.n)
    for pair in sl_basis(arg.context.n):
        total = total + lie(pair.element, lie(pair.dual, arg)).body
    return type(arg)(total, arg.context)
