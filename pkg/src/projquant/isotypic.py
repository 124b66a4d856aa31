"""Decomposition of symbols into eigenblocks of the symbol Casimir.

A homogeneous symbol of total fiber degree i splits into components labelled
(i, p) with p up to floor(i/2) (only p = 0 in dimension one or at arity
one).  The projectors are Lagrange interpolants of casimir_symbol: the
eigenvalue differences 2 (p - q)(p + q - 1 - i) are shift-free, so any
context shift yields the same operator.
"""

from __future__ import annotations

from .casimir import SpectralLabel, casimir_eigenvalue, casimir_symbol, check_label
from .densities import Context, SymbolPoly
from .poly import Poly


def labels_for_degree(ctx: Context, degree: int) -> tuple[SpectralLabel, ...]:
    """Admissible labels (degree, q) in this context."""
    if degree < 0:
        return ()
    if ctx.n == 1 or ctx.arity == 1:
        return (SpectralLabel(degree, 0),)
    return tuple(SpectralLabel(degree, q) for q in range(degree // 2 + 1))


def _project_homogeneous(body: Poly, degree: int, p: int, ctx: Context) -> Poly:
    labels = labels_for_degree(ctx, degree)
    gamma_p = casimir_eigenvalue(ctx.n, ctx.delta, degree, p)
    out = body
    for _, q in labels:
        if q == p:
            continue
        gamma_q = casimir_eigenvalue(ctx.n, ctx.delta, degree, q)
        shifted = _ct_minus(out, gamma_q, ctx)
        out = shifted.scale(1 / (gamma_p - gamma_q))
        if out.is_zero():
            break
    return out


def _ct_minus(body: Poly, scalar, ctx: Context) -> Poly:
    sym = casimir_symbol(SymbolPoly(body, ctx))
    return sym.body - scalar * body


def decompose_body(body: Poly, degree: int, ctx: Context) -> dict[SpectralLabel, Poly]:
    """Isotypic pieces of a homogeneous body; zero pieces are omitted."""
    if body.is_zero():
        return {}
    parts = {}
    labels = labels_for_degree(ctx, degree)
    if len(labels) == 1:
        return {labels[0]: body}
    remaining = body
    for label in labels[:-1]:
        piece = _project_homogeneous(body, degree, label.p, ctx)
        if not piece.is_zero():
            parts[label] = piece
            remaining = remaining - piece
    if not remaining.is_zero():
        parts[labels[-1]] = remaining
    return parts


def isotypic_project(sym: SymbolPoly, label: SpectralLabel) -> SymbolPoly:
    """Projection of a homogeneous symbol onto one eigenblock."""
    i, p = label
    ctx = sym.context
    check_label(ctx.n, i, p)
    if ctx.arity == 1 and p != 0:
        raise ValueError("arity-1 symbols only carry p = 0 labels")
    if sym.body.is_zero():
        return sym
    degrees = set(sym.body.fiber_parts())
    if degrees != {i}:
        raise ValueError(
            f"projection needs a homogeneous symbol of degree {i}, "
            f"found degrees {sorted(degrees)}")
    return SymbolPoly(_project_homogeneous(sym.body, i, p, ctx), ctx)


def decompose(sym: SymbolPoly) -> dict[SpectralLabel, SymbolPoly]:
    """Full isotypic decomposition; components sum to the input."""
    ctx = sym.context
    out: dict[SpectralLabel, SymbolPoly] = {}
    for degree, part in sym.body.fiber_parts().items():
        for label, piece in decompose_body(part, degree, ctx).items():
            out[label] = SymbolPoly(piece, ctx)
    return dict(sorted(out.items()))
