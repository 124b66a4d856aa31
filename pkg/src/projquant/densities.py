"""Densities, vector fields, symbols and bidifferential operators, with the
Lie derivative actions that make each of them a module over polynomial
vector fields.

The operator and symbol spaces share one polynomial representation: a term
x^s a^u b^v of an operator body encodes the coefficient x^s applied to
(D^u of the first argument) times (D^v of the second argument), while the
same term of a symbol body is a plain tensor-field monomial with fiber
variables a, b.  The two Lie derivatives differ precisely by the
degree-lowering corrections computed here.

The operator Lie derivative is implemented in closed polynomial form: pairing
the body with a vector field X expands a finite Taylor series in which each
fiber shift of order m contributes the m-th x-derivative of a component of X.
The series stops at the x-degree of X, so every polynomial field is handled
exactly.  The defining composition form (act, then subtract the action on
each argument) is kept as `lie_derivative_via_definition` and serves as an
independent oracle in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import ALPHA, BETA, X, DimensionMismatchError, Poly, as_fraction, multi_indices


class ArityError(ValueError):
    """Operation not available at this operator arity."""


class WeightMismatchError(ValueError):
    """Density weights do not match the operator's context."""


@dataclass(frozen=True)
class Context:
    """Ambient data: dimension n, argument weights, target weight mu.

    The shift (the weight of an operator's coefficient densities) is always
    derived as mu minus the sum of the argument weights, never stored.
    """

    n: int
    weights: tuple[Fraction, ...]
    mu: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        object.__setattr__(self, "weights",
                           tuple(as_fraction(w) for w in self.weights))
        object.__setattr__(self, "mu", as_fraction(self.mu))
        if len(self.weights) < 1:
            raise ValueError("at least one argument weight is required")

    @classmethod
    def from_delta(cls, n: int, weights, delta) -> "Context":
        weights = tuple(as_fraction(w) for w in weights)
        return cls(n, weights, as_fraction(delta) + sum(weights))

    @property
    def arity(self) -> int:
        return len(self.weights)

    @property
    def delta(self) -> Fraction:
        return self.mu - sum(self.weights)

    def fiber_families(self) -> tuple[str, ...]:
        if self.arity == 1:
            return (ALPHA,)
        if self.arity == 2:
            return (ALPHA, BETA)
        raise ArityError(
            f"arity {self.arity} not representable: the polynomial "
            "representation carries two fiber families")


def _check_x_only(p: Poly, what: str):
    if p.degree(ALPHA) > 0 or p.degree(BETA) > 0:
        raise ValueError(f"{what} must depend on x only")


@dataclass(frozen=True)
class Density:
    """Polynomial density of a given weight."""

    value: Poly
    weight: Fraction

    def __post_init__(self):
        _check_x_only(self.value, "density value")
        object.__setattr__(self, "weight", as_fraction(self.weight))

    @property
    def n(self) -> int:
        return self.value.n


@dataclass(frozen=True)
class VectorField:
    """Polynomial vector field, one x-only component per coordinate."""

    components: tuple[Poly, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("vector field needs at least one component")
        n = comps[0].n
        for c in comps:
            if c.n != n:
                raise DimensionMismatchError("component dimensions differ")
            _check_x_only(c, "vector field component")
        if len(comps) != n:
            raise DimensionMismatchError(
                f"expected {n} components, got {len(comps)}")
        object.__setattr__(self, "components", comps)

    @property
    def n(self) -> int:
        return self.components[0].n

    def divergence(self) -> Poly:
        out = Poly.zero(self.n)
        for i, comp in enumerate(self.components):
            out = out + comp.diff(X, i + 1)
        return out

    def x_degree(self) -> int:
        return max(c.degree(X) for c in self.components)


@dataclass(frozen=True)
class SymbolPoly:
    """Symmetric-tensor-valued symbol: fiber polynomial with x coefficients."""

    body: Poly
    context: Context

    def __post_init__(self):
        if self.body.n != self.context.n:
            raise DimensionMismatchError("body and context dimensions differ")
        if self.context.arity == 1 and self.body.degree(BETA) > 0:
            raise ArityError("arity-1 symbol cannot contain b variables")

    @property
    def degree(self) -> int:
        return self.body.fiber_degree()

    def to_operator(self) -> "BidiffOp":
        return BidiffOp(self.body, self.context)


@dataclass(frozen=True)
class BidiffOp:
    """Multidifferential operator in polynomial form."""

    body: Poly
    context: Context

    def __post_init__(self):
        if self.body.n != self.context.n:
            raise DimensionMismatchError("body and context dimensions differ")
        if self.context.arity == 1 and self.body.degree(BETA) > 0:
            raise ArityError("arity-1 operator cannot contain b variables")

    @property
    def order(self) -> int:
        return self.body.fiber_degree()

    def polynomial_form(self) -> SymbolPoly:
        return SymbolPoly(self.body, self.context)


# ----------------------------------------------------------------------
# Lie derivatives


def lie_derivative_density(field: VectorField, phi: Density) -> Density:
    """Derivative along the field plus weight times divergence."""
    if field.n != phi.n:
        raise DimensionMismatchError("field and density dimensions differ")
    out = Poly.zero(phi.n)
    for i, comp in enumerate(field.components):
        out = out + comp * phi.value.diff(X, i + 1)
    out = out + phi.weight * field.divergence() * phi.value
    return Density(out, phi.weight)


def apply_operator(op: BidiffOp, *args: Density) -> Density:
    """Evaluate the operator on polynomial densities.

    Each term x^s a^u b^v contributes x^s * D^u(arg1) * D^v(arg2)."""
    ctx = op.context
    if len(args) != ctx.arity:
        raise ArityError(f"expected {ctx.arity} arguments, got {len(args)}")
    for arg, weight in zip(args, ctx.weights):
        if arg.n != ctx.n:
            raise DimensionMismatchError("argument dimension differs")
        if arg.weight != weight:
            raise WeightMismatchError(
                f"argument weight {arg.weight} != context weight {weight}")
    fams = ctx.fiber_families()
    slots = {ALPHA: 0, BETA: 1}
    out = Poly.zero(ctx.n)
    for (xa, aa, ba), coeff in op.body.terms.items():
        fiber_exps = (aa, ba)
        piece = Poly(ctx.n, {(xa, (0,) * ctx.n, (0,) * ctx.n): coeff})
        for fam in fams:
            derived = args[slots[fam]].value.diff_multi(X, fiber_exps[slots[fam]])
            piece = piece * derived
            if piece.is_zero():
                break
        out = out + piece
    return Density(out, ctx.mu)


def _pairing_derivative(field: VectorField, body: Poly) -> Poly:
    """<X, eta> body: derivatives hitting the coefficient part."""
    out = Poly.zero(body.n)
    for i, comp in enumerate(field.components):
        step = body.diff(X, i + 1)
        if step.is_zero():
            continue
        out = out + comp * step
    return out


def lie_derivative_symbol(field: VectorField, sym: SymbolPoly) -> SymbolPoly:
    """Tensor-field Lie derivative in fiber coordinates."""
    if field.n != sym.body.n:
        raise DimensionMismatchError("field and symbol dimensions differ")
    ctx = sym.context
    body = sym.body
    n = ctx.n
    out = _pairing_derivative(field, body)
    for fam in ctx.fiber_families():
        if body.degree(fam) <= 0:
            continue
        for ell in range(n):
            xi_l = Poly.variable(n, fam, ell + 1)
            for k in range(n):
                dX = field.components[ell].diff(X, k + 1)
                if dX.is_zero():
                    continue
                step = body.diff(fam, k + 1)
                if step.is_zero():
                    continue
                out = out - dX * xi_l * step
    out = out + ctx.delta * field.divergence() * body
    return SymbolPoly(out, ctx)


def lie_derivative_operator(field: VectorField, op: BidiffOp) -> BidiffOp:
    """Closed polynomial form of the Lie derivative of an operator.

    For each fiber family the shifted-argument expansion is a finite Taylor
    series: the order-m fiber derivative of the body pairs with the m-th
    (or (m + 1)-th, for the weight part) x-derivatives of the components of
    the field.
    """
    if field.n != op.body.n:
        raise DimensionMismatchError("field and operator dimensions differ")
    ctx = op.context
    body = op.body
    n = ctx.n
    out = _pairing_derivative(field, body)
    max_order = max(field.x_degree(), 0)
    for fam, lam in zip(ctx.fiber_families(), ctx.weights):
        fam_degree = body.degree(fam)
        if fam_degree <= 0:
            continue
        for order in range(1, min(max_order, fam_degree) + 1):
            for m in multi_indices(n, order):
                step = body.taylor_diff(fam, m)
                if step.is_zero():
                    continue
                for ell in range(n):
                    dX = field.components[ell].diff_multi(X, m)
                    if not dX.is_zero():
                        out = out - dX * Poly.variable(n, fam, ell + 1) * step
                    if lam == 0:
                        continue
                    m_plus = list(m)
                    m_plus[ell] += 1
                    dX2 = field.components[ell].diff_multi(X, tuple(m_plus))
                    if not dX2.is_zero():
                        out = out - lam * dX2 * step
    out = out + ctx.delta * field.divergence() * body
    return BidiffOp(out, ctx)


def lie_derivative_via_definition(field: VectorField, op: BidiffOp,
                                  *args: Density) -> Density:
    """(Lie_X T)(f, ...) computed from the defining composition form."""
    total = lie_derivative_density(field, apply_operator(op, *args))
    for i in range(len(args)):
        shifted = list(args)
        shifted[i] = lie_derivative_density(field, args[i])
        total = Density(total.value - apply_operator(op, *shifted).value,
                        total.weight)
    return total


def bracket(first: VectorField, second: VectorField) -> VectorField:
    """Lie bracket of vector fields."""
    if first.n != second.n:
        raise DimensionMismatchError("field dimensions differ")
    n = first.n
    comps = []
    for i in range(n):
        out = Poly.zero(n)
        for j in range(n):
            out = out + first.components[j] * second.components[i].diff(X, j + 1)
            out = out - second.components[j] * first.components[i].diff(X, j + 1)
        comps.append(out)
    return VectorField(tuple(comps))
