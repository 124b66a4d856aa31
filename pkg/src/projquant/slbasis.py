"""The imbedding of sl(n+1) into polynomial vector fields.

The basis consists of the constant fields, the linear fields, and the n
quadratic fields eps_i whose i-th component is x_i * x_l in slot l.  Each
basis element is listed together with its dual partner for the fixed
invariant pairing; the Casimir computations depend on this normalization,
so the duality is hard-coded rather than recomputed from a bilinear form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .densities import VectorField, bracket
from .poly import Poly, X, multi_indices


@dataclass(frozen=True)
class DualBasisPair:
    label: str
    element: VectorField
    dual: VectorField


def _zero_field_components(n: int) -> list[Poly]:
    return [Poly.zero(n) for _ in range(n)]


def _e_offdiag(n: int, i: int, j: int) -> VectorField:
    """-x_j d/dx_i (1-based indices)."""
    comps = _zero_field_components(n)
    comps[i - 1] = -Poly.variable(n, X, j)
    return VectorField(tuple(comps))


def _e_diag(n: int, i: int) -> VectorField:
    """-x_i d/dx_i minus the Euler field."""
    comps = [-Poly.variable(n, X, k + 1) for k in range(n)]
    comps[i - 1] = comps[i - 1] - Poly.variable(n, X, i)
    return VectorField(tuple(comps))

def _e_diag_dual(n: int, i: int) -> VectorField:
    """-x_i d/dx_i."""
    comps = _zero_field_components(n)
    comps[i - 1] = -Poly.variable(n, X, i)
    return VectorField(tuple(comps))


def _e_const(n: int, i: int) -> VectorField:
    """-d/dx_i."""
    comps = _zero_field_components(n)
    comps[i - 1] = Poly.constant(n, -1)
    return VectorField(tuple(comps))


def _eps(n: int, i: int) -> VectorField:
    """x_i times the Euler field."""
    xi = Poly.variable(n, X, i)
    comps = [xi * Poly.variable(n, X, k + 1) for k in range(n)]
    return VectorField(tuple(comps))


def euler_field(n: int) -> VectorField:
    return VectorField(tuple(Poly.variable(n, X, k + 1) for k in range(n)))


def sl_basis(n: int) -> tuple[DualBasisPair, ...]:
    """All n^2 + 2n dual pairs; the elements alone form the basis."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    pairs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                pairs.append(DualBasisPair(
                    f"e_{i}_{j}", _e_offdiag(n, i, j), _e_offdiag(n, j, i)))
    for i in range(1, n + 1):
        pairs.append(DualBasisPair(f"e_{i}_{i}", _e_diag(n, i), _e_diag_dual(n, i)))
    for i in range(1, n + 1):
        pairs.append(DualBasisPair(f"e_{i}", _e_const(n, i), _eps(n, i)))
    for i in range(1, n + 1):
        pairs.append(DualBasisPair(f"eps_{i}", _eps(n, i), _e_const(n, i)))
    return tuple(pairs)


def basis_fields(n: int) -> tuple[tuple[str, VectorField], ...]:
    """The (n+1)^2 - 1 labelled basis elements."""
    return tuple((pair.label, pair.element) for pair in sl_basis(n))


# ----------------------------------------------------------------------
# exact span membership


def _field_coordinates(field: VectorField, coords: list) -> list[Fraction]:
    vec = []
    for slot, key in coords:
        vec.append(field.components[slot].terms.get(key, Fraction(0)))
    return vec


def _coordinate_index(n: int, max_degree: int) -> list:
    zero = (0,) * n
    keys = []
    for order in range(max_degree + 1):
        for m in multi_indices(n, order):
            keys.append((m, zero, zero))
    return [(slot, key) for slot in range(n) for key in keys]


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]):
    """Solve matrix @ c = rhs over the rationals; None when inconsistent.

    Columns are basis fields, rows are monomial coordinates."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[r]) + [rhs[r]] for r in range(rows)]
    pivot_cols = []
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, rows) if aug[k][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for k in range(rows):
            if k != r and aug[k][c] != 0:
                factor = aug[k][c]
                aug[k] = [vk - factor * vr for vk, vr in zip(aug[k], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    for k in range(r, rows):
        if aug[k][cols] != 0:
            return None
    solution = [Fraction(0)] * cols
    for row, c in enumerate(pivot_cols):
        solution[c] = aug[row][cols]
    return solution


def span_decompose(field: VectorField, n: int):
    """Exact coefficients of a field in the basis; None if not in the span."""
    pairs = sl_basis(n)
    coords = _coordinate_index(n, max(2, field.x_degree()))
    matrix_cols = [_field_coordinates(p.element, coords) for p in pairs]
    matrix = [[matrix_cols[c][r] for c in range(len(pairs))]
              for r in range(len(coords))]
    rhs = _field_coordinates(field, coords)
    solution = _solve_exact(matrix, rhs)
    if solution is None:
        return None
    return {pairs[k].label: coeff for k, coeff in enumerate(solution) if coeff != 0}


def bracket_closure_check(n: int):
    """Verify every pairwise bracket of basis elements stays in the span.

    Returns (True, None) on success, else (False, (label_a, label_b))."""
    fields = basis_fields(n)
    for label_a, a in fields:
        for label_b, b in fields:
            if span_decompose(bracket(a, b), n) is None:
                return False, (label_a, label_b)
    return True, None
