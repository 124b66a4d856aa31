"""Equivariant quantization and its inverse symbol map.

`quantize` prolongs each isotypic component of a symbol into an eigenvector
of the operator Casimir by solving the triangular system level by level: at
each lower degree the correction of the previous level is decomposed and
divided by the eigenvalue gap.  A vanishing gap with a vanishing right-hand
side leaves the component free; it is set to zero and recorded as a free
slot.  A vanishing gap with a non-vanishing right-hand side is a genuine
obstruction and is reported with the exact offending component, so weight
conditions for solvability can be read off from the error rather than being
hard-coded.

`symbol_map` inverts the construction by top-down peeling: quantize the
principal part, subtract, recurse.

The second-order closed forms, the arity-one quantization, the polarization
maps between unary and binary second-order symbols, and the two
divergence-style equivariant maps available at shift one are provided
alongside, mainly as independent cross-checks of the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .casimir import SpectralLabel, casimir_eigenvalue, _nc_body
from .densities import ArityError, BidiffOp, Context, SymbolPoly
from .isotypic import decompose_body, labels_for_degree
from .poly import ALPHA, BETA, Poly, as_fraction


class ObstructionError(Exception):
    """No eigenvector prolongation: a resonant block is actually hit."""

    def __init__(self, source: SpectralLabel, blocked: SpectralLabel,
                 obstruction: SymbolPoly):
        self.source = source
        self.blocked = blocked
        self.obstruction = obstruction
        super().__init__(
            f"component {tuple(source)} cannot be prolonged: the eigenvalue "
            f"gap at {tuple(blocked)} vanishes but the correction does not")


class CriticalShiftError(ValueError):
    """A closed-form denominator vanishes at this shift."""

    def __init__(self, denominator: str, delta):
        self.denominator = denominator
        super().__init__(
            f"critical shift: denominator {denominator} vanishes at "
            f"delta = {delta}")


@dataclass(frozen=True)
class QuantizationResult:
    operator: BidiffOp
    free_slots: frozenset[SpectralLabel]

    @property
    def unique(self) -> bool:
        return not self.free_slots


@dataclass(frozen=True)
class SymbolMapResult:
    symbol: SymbolPoly
    free_slots: frozenset[SpectralLabel]

    @property
    def unique(self) -> bool:
        return not self.free_slots


def _prolong_component(body: Poly, label: SpectralLabel, ctx: Context,
                       free_slots: set[SpectralLabel]) -> Poly:
    """Solve the triangular system below one eigencomponent."""
    n, delta = ctx.n, ctx.delta
    gamma = casimir_eigenvalue(n, delta, label.i, label.p)
    total = body
    current = body
    for j in range(label.i - 1, -1, -1):
        correction = _nc_body(current, ctx)
        parts = decompose_body(correction, j, ctx)
        level = Poly.zero(n)
        for lab in labels_for_degree(ctx, j):
            gap = gamma - casimir_eigenvalue(n, delta, lab.i, lab.p)
            piece = parts.get(lab)
            if gap == 0:
                if piece is None:
                    free_slots.add(lab)
                else:
                    raise ObstructionError(label, lab, SymbolPoly(piece, ctx))
            elif piece is not None:
                level = level + piece.scale(1 / gap)
        total = total + level
        current = level
    return total


def quantize(sym: SymbolPoly) -> QuantizationResult:
    """Equivariant prolongation of a symbol into an operator.

    Sources of different degrees and labels are processed independently and
    summed; the principal part of the result equals the input."""
    ctx = sym.context
    ctx.fiber_families()  # arity must be representable
    free_slots: set[SpectralLabel] = set()
    total = Poly.zero(ctx.n)
    for degree, part in sorted(sym.body.fiber_parts().items(), reverse=True):
        for label, piece in sorted(decompose_body(part, degree, ctx).items()):
            total = total + _prolong_component(piece, label, ctx, free_slots)
    return QuantizationResult(BidiffOp(total, ctx), frozenset(free_slots))


def symbol_map(op: BidiffOp) -> SymbolMapResult:
    """Inverse of quantize, by principal-part peeling."""
    ctx = op.context
    remaining = op.body
    collected = Poly.zero(ctx.n)
    free_slots: set[SpectralLabel] = set()
    while not remaining.is_zero():
        degree = remaining.fiber_degree()
        top = remaining.fiber_parts()[degree]
        collected = collected + top
        prolonged = quantize(SymbolPoly(top, ctx))
        free_slots |= prolonged.free_slots
        remaining = remaining - prolonged.operator.body
        if not remaining.is_zero() and remaining.fiber_degree() >= degree:
            raise AssertionError("peeling failed to lower the order")
    return SymbolMapResult(SymbolPoly(collected, ctx), frozenset(free_slots))


# ----------------------------------------------------------------------
# second-order closed forms


def _order2_denominators(ctx: Context) -> tuple[Fraction, Fraction, Fraction]:
    n, delta = ctx.n, ctx.delta
    den1 = 1 - delta
    den2 = (n + 1) * (1 - delta) + 1
    den3 = (n + 1) * (1 - delta) + 2
    if den1 == 0:
        raise CriticalShiftError("1 - delta", delta)
    if den2 == 0:
        raise CriticalShiftError("(n+1)(1-delta) + 1", delta)
    if den3 == 0:
        raise CriticalShiftError("(n+1)(1-delta) + 2", delta)
    return den1, den2, den3


def _split_symmetric(part: Poly) -> tuple[Poly, Poly]:
    swapped = part.swap_fibers()
    half = Fraction(1, 2)
    return (part + swapped).scale(half), (part - swapped).scale(half)


def quantize_order2_closed(sym: SymbolPoly) -> BidiffOp:
    """Explicit prolongation of symbols of degree at most two.

    Pure second order in one argument gains one and two coefficient
    derivatives with ratios built from (n+1)*weight + 1; the mixed symmetric
    part uses (n+1)*weight for each argument and a doubled product term; the
    antisymmetric part gains single derivatives with ratio weight/(1-shift);
    degree one matches the antisymmetric ratios and degree zero passes
    through.  Valid away from the three vanishing denominators."""
    ctx = sym.context
    if ctx.arity != 2:
        raise ArityError("second-order closed form needs arity 2")
    if sym.degree > 2:
        raise ValueError("closed form only covers degree <= 2")
    n = ctx.n
    lam1, lam2 = ctx.weights
    den1, den2, den3 = _order2_denominators(ctx)
    out = Poly.zero(n)
    for (da, db), part in sym.body.bidegree_parts().items():
        if da + db == 0:
            out = out + part
        elif (da, db) == (1, 0):
            out = out + part + (lam1 / den1) * part.eta_contract(ALPHA)
        elif (da, db) == (0, 1):
            out = out + part + (lam2 / den1) * part.eta_contract(BETA)
        elif (da, db) == (2, 0):
            r1 = ((n + 1) * lam1 + 1) / den3
            r2 = ((n + 1) * lam1 + 1) * (n + 1) * lam1 / (den3 * den2)
            once = part.eta_contract(ALPHA)
            out = out + part + r1 * once + (r2 / 2) * once.eta_contract(ALPHA)
        elif (da, db) == (0, 2):
            r1 = ((n + 1) * lam2 + 1) / den3
            r2 = ((n + 1) * lam2 + 1) * (n + 1) * lam2 / (den3 * den2)
            once = part.eta_contract(BETA)
            out = out + part + r1 * once + (r2 / 2) * once.eta_contract(BETA)
        else:
            symmetric, antisymmetric = _split_symmetric(part)
            if not symmetric.is_zero():
                s1 = (n + 1) * lam1 / den3
                s2 = (n + 1) * lam2 / den3
                s12 = (n + 1) ** 2 * lam1 * lam2 / (den3 * den2)
                out = (out + symmetric
                       + s1 * symmetric.eta_contract(ALPHA)
                       + s2 * symmetric.eta_contract(BETA)
                       + s12 * symmetric.eta_contract(ALPHA).eta_contract(BETA))
            if not antisymmetric.is_zero():
                out = (out + antisymmetric
                       + (lam1 / den1) * antisymmetric.eta_contract(ALPHA)
                       + (lam2 / den1) * antisymmetric.eta_contract(BETA))
    return BidiffOp(out, ctx)


def linear_quantize_order2(sym: SymbolPoly, lam, mu) -> BidiffOp:
    """Arity-one quantization of a degree <= 2 symbol: the same triangular
    engine run with a single fiber family."""
    lam = as_fraction(lam)
    mu = as_fraction(mu)
    ctx1 = Context(sym.context.n, (lam,), mu)
    delta = ctx1.delta
    if delta == 1:
        raise CriticalShiftError("1 - delta", delta)
    n = ctx1.n
    if delta == Fraction(n + 2, n + 1):
        raise CriticalShiftError("(n+1)(1-delta) + 1", delta)
    if delta == Fraction(n + 3, n + 1):
        raise CriticalShiftError("(n+1)(1-delta) + 2", delta)
    if sym.body.fiber_degree() > 2:
        raise ValueError("degree must be <= 2")
    return quantize(SymbolPoly(sym.body, ctx1)).operator


def tau_maps(sym: SymbolPoly, ctx2: Context | None = None
             ) -> tuple[SymbolPoly, SymbolPoly, SymbolPoly]:
    """Polarizations of a homogeneous degree-2 arity-1 symbol P:
    P(a), P(b), and P(a+b) - P(a) - P(b), in a binary context with the same
    shift."""
    if sym.context.arity != 1:
        raise ArityError("polarization starts from an arity-1 symbol")
    if set(sym.body.fiber_parts()) != {2}:
        raise ValueError("polarization needs a homogeneous degree-2 symbol")
    if ctx2 is None:
        ctx2 = Context(sym.context.n, (sym.context.weights[0], Fraction(0)),
                       sym.context.mu)
    if ctx2.delta != sym.context.delta:
        raise ValueError("target context must carry the same shift")
    body = sym.body
    on_first = SymbolPoly(body, ctx2)
    on_second = SymbolPoly(body.move_alpha_to_beta(), ctx2)
    mixed = SymbolPoly(
        body.fiber_sum_expand() - on_first.body - on_second.body, ctx2)
    return on_first, on_second, mixed


# ----------------------------------------------------------------------
# shift-one equivariant maps


def _require_shift(ctx: Context, value: Fraction, where: str):
    if ctx.delta != value:
        raise ValueError(f"{where} is defined at shift {value}, "
                         f"context has {ctx.delta}")


def t1(sym: SymbolPoly) -> BidiffOp:
    """Antisymmetric degree-(1,1) symbol with coefficient c maps to the
    operator sending (f, g) to sum over (i, j) of
    d_i c * f * d_j g - d_j c * f * d_i g; defined at shift one."""
    ctx = sym.context
    _require_shift(ctx, Fraction(1), "t1")
    parts = sym.body.bidegree_parts()
    if not set(parts) <= {(1, 1)} or not (sym.body + sym.body.swap_fibers()).is_zero():
        raise ValueError("t1 expects an antisymmetric bidegree-(1,1) symbol")
    return BidiffOp(sym.body.eta_contract(ALPHA), ctx)


def t2(sym: SymbolPoly) -> BidiffOp:
    """Symbol c * a_i maps to (f, g) -> d_i c * f * g; defined at shift one."""
    ctx = sym.context
    _require_shift(ctx, Fraction(1), "t2")
    if not set(sym.body.bidegree_parts()) <= {(1, 0)}:
        raise ValueError("t2 expects a bidegree-(1,0) symbol")
    return BidiffOp(sym.body.eta_contract(ALPHA), ctx)


# ----------------------------------------------------------------------
# the one-parameter family at the next critical shift


def order2_critical_family(sym: SymbolPoly, k) -> BidiffOp:
    """The prolongation family of symmetric degree-2 symbols at shift
    (n+2)/(n+1): first-derivative ratios as in the generic closed form, with
    a free parameter k on the doubly-derived coefficient slot.  The engine's
    canonical output (zero free slot) is the member with k = 0."""
    ctx = sym.context
    n = ctx.n
    _require_shift(ctx, Fraction(n + 2, n + 1), "order2_critical_family")
    if ctx.arity != 2:
        raise ArityError("order2_critical_family needs arity 2")
    k = as_fraction(k)
    lam1, lam2 = ctx.weights
    den3 = (n + 1) * (1 - ctx.delta) + 2
    out = Poly.zero(n)
    for (da, db), part in sym.body.bidegree_parts().items():
        if (da, db) == (2, 0):
            once = part.eta_contract(ALPHA)
            out = (out + part + (((n + 1) * lam1 + 1) / den3) * once
                   + (k / 2) * once.eta_contract(ALPHA))
        elif (da, db) == (0, 2):
            once = part.eta_contract(BETA)
            out = (out + part + (((n + 1) * lam2 + 1) / den3) * once
                   + (k / 2) * once.eta_contract(BETA))
        elif (da, db) == (1, 1):
            symmetric, antisymmetric = _split_symmetric(part)
            if not antisymmetric.is_zero():
                raise ValueError("family covers the symmetric block only")
            out = (out + symmetric
                   + ((n + 1) * lam1 / den3) * symmetric.eta_contract(ALPHA)
                   + ((n + 1) * lam2 / den3) * symmetric.eta_contract(BETA)
                   + (k / 2) * symmetric.eta_contract(ALPHA).eta_contract(BETA))
        else:
            raise ValueError("family is defined on degree-2 symbols")
    return BidiffOp(out, ctx)
