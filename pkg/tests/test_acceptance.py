"""Acceptance criteria.

One test per criterion; each prints a PASS/FAIL line with its runtime and
asserts the stated time budget.  Every comparison is exact.

Run with:  pytest tests/test_acceptance.py -v -s
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from projquant.casimir import (casimir_correction, casimir_direct,
                               casimir_eigenvalue, casimir_symbol,
                               highest_weight_vector)
from projquant.densities import (Context, Density, SymbolPoly,
                                 apply_operator, lie_derivative_operator,
                                 lie_derivative_symbol)
from projquant.parsing import parse_poly
from projquant.quantization import (ObstructionError, linear_quantize_order2,
                                    order2_critical_family, quantize,
                                    quantize_order2_closed, symbol_map, t1,
                                    t2, tau_maps)
from projquant.resonance import (classify_shift, critical_lower_bound,
                                 is_critical, one_dimensional_resonances,
                                 resonant_delta)
from projquant.sampling import (generic_context, random_density,
                                random_operator, random_symbol,
                                random_vector_field, random_x_poly)
from projquant.slbasis import basis_fields


@contextmanager
def criterion(number: int, description: str, budget_seconds: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - start
        print(f"ACCEPTANCE {number:2d} FAIL ({elapsed:6.2f}s)  {description}")
        raise
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {number:2d} PASS ({elapsed:6.2f}s)  {description}")
    assert elapsed < budget_seconds, (
        f"criterion {number} exceeded its {budget_seconds}s budget")


def test_criterion_01_second_order_resonances():
    with criterion(1, "second-order resonant shifts and their pairings", 1.0):
        for n in (2, 3, 5):
            by_delta = {}
            for i in range(1, 3):
                for p in range(i // 2 + 1):
                    for j in range(i):
                        for q in range(j // 2 + 1):
                            d = resonant_delta(n, i, p, j, q)
                            by_delta.setdefault(d, []).append((i, p, j, q))
                            assert is_critical(i, p, j, q)
            assert set(by_delta) == {Fraction(n + 3, n + 1),
                                     Fraction(n + 2, n + 1), Fraction(1)}
            assert by_delta[Fraction(n + 3, n + 1)] == [(2, 0, 1, 0)]
            assert by_delta[Fraction(n + 2, n + 1)] == [(2, 0, 0, 0)]
            assert sorted(by_delta[Fraction(1)]) == [
                (1, 0, 0, 0), (2, 1, 0, 0), (2, 1, 1, 0)]


def test_criterion_02_eigenvalue_lemma():
    with criterion(2, "eigenvalue of the symbol Casimir on every block", 10.0):
        for n in (2, 3):
            for delta in (Fraction(0), Fraction(1, 2), Fraction(7, 3)):
                ctx = Context.from_delta(n, (Fraction(1, 3), Fraction(-1, 5)),
                                         delta)
                for k in range(5):
                    for l in range(5):
                        for q in range(min(k, l) + 1):
                            vec = highest_weight_vector(k, l, q, ctx)
                            gamma = casimir_eigenvalue(n, delta, k + l, q)
                            assert casimir_symbol(vec).body == gamma * vec.body


def test_criterion_03_casimir_decomposition():
    with criterion(3, "direct Casimir equals symbol part plus correction", 30.0):
        rng = random.Random(303)
        for n in (1, 2):
            for _ in range(10):
                ctx = Context(n, (Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                                  Fraction(rng.randint(-6, 6), rng.randint(1, 4))),
                              Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
                op = random_operator(rng, ctx, 3, 2)
                assert casimir_direct(op).body == (
                    casimir_symbol(op).body + casimir_correction(op).body)


def test_criterion_04_equivariance_theorem():
    with criterion(4, "symbol map intertwines every basis field", 60.0):
        rng = random.Random(404)
        n = 2
        for _ in range(3):
            ctx = generic_context(rng, n, 4)
            for _ in range(10):
                op = random_operator(rng, ctx, 3, 2)
                sym = symbol_map(op).symbol
                for label, field in basis_fields(n):
                    lhs = symbol_map(
                        lie_derivative_operator(field, op)).symbol.body
                    rhs = lie_derivative_symbol(field, sym).body
                    assert lhs == rhs, f"fails along {label}"


def test_criterion_05_closed_form_agreement():
    with criterion(5, "engine matches the explicit second-order formulas", 10.0):
        rng = random.Random(505)
        shapes = ["a1*a1", "a1*a2", "b1*b2", "b2*b2", "a1*b1", "a1*b2",
                  "a2*b1", "a1", "b2", "1"]
        for n in (2, 3):
            for _ in range(5):
                ctx = generic_context(rng, n, 3)
                for c in ("1", "x1", "x1*x2"):
                    for shape in shapes:
                        P = SymbolPoly(parse_poly(f"({c})*({shape})", n), ctx)
                        assert quantize(P).operator.body == \
                            quantize_order2_closed(P).body


def test_criterion_06_obstruction_at_top_shift():
    """KNOWN RED at one grid point, kept as stated.

    The final assertion demands that the mixed symmetric generator obstructs
    at every weight pair on the grid, including (0, 0).  The exact triangular
    system gives the obstruction 2(n+1)(lam1 b2 + lam2 a2) for that symbol,
    which vanishes at (0, 0); the prolongation then exists and is an exact
    eigenvector of the direct Casimir summation (see
    test_no_single_weight_solves_all_generators_at_top_shift, which verifies
    the true statement: the pure blocks force weight -1/(n+1) while the mixed
    block forces (0, 0), so no weight pair solves all shapes at this shift).
    An honest engine therefore cannot raise at (0, 0), and this check records
    the discrepancy instead of papering over it."""
    with criterion(6, "obstructions at shift (n+3)/(n+1)", 5.0):
        for n in (2, 3):
            delta = Fraction(n + 3, n + 1)
            special = Fraction(-1, n + 1)
            grid = [Fraction(0), special, Fraction(1, 3), Fraction(1, 2),
                    Fraction(-1, 2)]
            for lam1 in grid:
                ctx = Context.from_delta(n, (lam1, Fraction(0)), delta)
                P = SymbolPoly(parse_poly("x1*a1*a1", n), ctx)
                if lam1 == special:
                    result = quantize(P)
                    assert result.free_slots == {(1, 0)}
                else:
                    with pytest.raises(ObstructionError):
                        quantize(P)
            unobstructed = []
            for lam1 in grid:
                for lam2 in grid:
                    ctx = Context.from_delta(n, (lam1, lam2), delta)
                    P = SymbolPoly(parse_poly("x1*(a1*b2 + a2*b1)", n), ctx)
                    try:
                        quantize(P)
                        unobstructed.append((lam1, lam2))
                    except ObstructionError:
                        pass
            assert not unobstructed, (
                f"n={n}: mixed generator expected to obstruct everywhere on "
                f"the grid but succeeded at {unobstructed}")


def test_criterion_07_middle_shift_weight_set():
    with criterion(7, "solvable weights and the free family at (n+2)/(n+1)",
                   30.0):
        n = 2
        delta = Fraction(n + 2, n + 1)
        special = Fraction(-1, n + 1)
        generators = ["x1*x2*a1*a2", "x1*x2*b1*b2", "x1*x2*(a1*b2 + a2*b1)"]
        good = {(Fraction(0), Fraction(0)), (Fraction(0), special),
                (special, Fraction(0))}
        grid = [Fraction(0), special, Fraction(1, 3), Fraction(1, 2),
                Fraction(-1, 2)]
        for lam1 in grid:
            for lam2 in grid:
                ctx = Context.from_delta(n, (lam1, lam2), delta)
                solvable = True
                slots = set()
                for g in generators:
                    try:
                        slots |= quantize(
                            SymbolPoly(parse_poly(g, n), ctx)).free_slots
                    except ObstructionError:
                        solvable = False
                        break
                assert solvable == ((lam1, lam2) in good)
                if solvable:
                    assert slots == {(0, 0)}
        ctx = Context.from_delta(n, (Fraction(0), Fraction(0)), delta)
        for k in (Fraction(0), Fraction(1), Fraction(-2, 5)):
            for g in generators:
                P = SymbolPoly(parse_poly(g, n), ctx)
                for label, field in basis_fields(n):
                    lhs = order2_critical_family(
                        lie_derivative_symbol(field, P), k).body
                    rhs = lie_derivative_operator(
                        field, order2_critical_family(P, k)).body
                    assert lhs == rhs, f"family fails along {label} at k={k}"


def test_criterion_08_shift_one():
    with criterion(8, "shift one: solvability and the two invariant maps",
                   60.0):
        n = 2
        ctx = Context.from_delta(n, (Fraction(0), Fraction(0)), Fraction(1))
        rng = random.Random(808)
        for _ in range(5):
            P = random_symbol(rng, ctx, 6, 1, terms=8)
            result = quantize(P)
            assert symbol_map(result.operator).symbol.body == P.body
        c = random_x_poly(rng, n, 3)
        P1 = SymbolPoly(c * parse_poly("a1*b2 - a2*b1", n), ctx)
        P2 = SymbolPoly(random_x_poly(rng, n, 3) * parse_poly("a1", n)
                        + random_x_poly(rng, n, 3) * parse_poly("a2", n), ctx)
        fields = [f for _, f in basis_fields(n)]
        fields += [random_vector_field(rng, n, 3) for _ in range(10)]
        for field in fields:
            assert t1(lie_derivative_symbol(field, P1)).body == \
                lie_derivative_operator(field, t1(P1)).body
            assert t2(lie_derivative_symbol(field, P2)).body == \
                lie_derivative_operator(field, t2(P2)).body


def test_criterion_09_critical_lower_bound():
    with criterion(9, "lower bound function for critical shifts", 30.0):
        for n in (2, 3):
            assert critical_lower_bound(n, 1) == 1
            values = [critical_lower_bound(n, i) for i in range(1, 13)]
            assert all(a <= b for a, b in zip(values, values[1:]))
            for i in range(1, 13):
                for p in range(i // 2 + 1):
                    for j in range(i):
                        for q in range(j // 2 + 1):
                            if is_critical(i, p, j, q):
                                d = resonant_delta(n, i, p, j, q)
                                assert d >= critical_lower_bound(n, i)
                                assert d >= 1


def test_criterion_10_shift_zero_is_safe():
    with criterion(10, "shift zero: resonant, never critical, still solvable",
                   60.0):
        n = 2
        assert resonant_delta(n, 7, 3, 6, 0) == 0
        assert not is_critical(7, 3, 6, 0)
        result = classify_shift(n, Fraction(0), 7)
        assert result.kind == "resonant"
        assert all(not t.critical for t in result.tuples)
        ctx = Context.from_delta(n, (Fraction(0), Fraction(0)), Fraction(0))
        rng = random.Random(1010)
        for _ in range(2):
            P = random_symbol(rng, ctx, 7, 1, terms=9)
            result = quantize(P)
            for label, field in basis_fields(n):
                lhs = quantize(lie_derivative_symbol(field, P)).operator.body
                rhs = lie_derivative_operator(field, result.operator).body
                assert lhs == rhs, f"fails along {label}"


def test_criterion_11_dimension_one():
    with criterion(11, "dimension one: resonances and round trips", 10.0):
        for i in range(1, 11):
            for j in range(i):
                if i + j > 10:
                    continue
                expected = 1 + Fraction(i + j - 1, 2)
                assert one_dimensional_resonances(i, j) == expected
                assert resonant_delta(1, i, 0, j, 0) == expected
                found = classify_shift(1, expected, i)
                assert any((t.i, t.j) == (i, j) and t.critical
                           for t in found.tuples)
        rng = random.Random(1111)
        for _ in range(4):
            ctx = generic_context(rng, 1, 5)
            P = random_symbol(rng, ctx, 4, 2)
            result = quantize(P)
            assert result.unique
            assert symbol_map(result.operator).symbol.body == P.body


def test_criterion_12_linear_case_compositions():
    with criterion(12, "second-order compositions through the linear map",
                   10.0):
        n = 2
        rng = random.Random(1212)
        ctx = generic_context(rng, n, 3)
        lam1, lam2 = ctx.weights
        for _ in range(5):
            c = random_x_poly(rng, n, 2)
            f = random_density(rng, n, 3, lam1)
            g = random_density(rng, n, 3, lam2)
            base = c * parse_poly("a1*a2", n)
            P_first = SymbolPoly(base, Context(n, (lam1,), ctx.mu - lam2))
            P_second = SymbolPoly(base, Context(n, (lam2,), ctx.mu - lam1))
            P_sum = SymbolPoly(base, Context(n, (lam1 + lam2,), ctx.mu))
            alpha_block, _, mixed = tau_maps(P_first, ctx)

            lhs = apply_operator(quantize(alpha_block).operator, f, g).value
            rhs = apply_operator(
                linear_quantize_order2(P_first, lam1, ctx.mu - lam2), f
            ).value * g.value
            assert lhs == rhs

            lhs = apply_operator(quantize(mixed).operator, f, g).value
            fg = Density(f.value * g.value, lam1 + lam2)
            rhs = apply_operator(
                linear_quantize_order2(P_sum, lam1 + lam2, ctx.mu), fg).value
            rhs = rhs - apply_operator(
                linear_quantize_order2(P_first, lam1, ctx.mu - lam2), f
            ).value * g.value
            rhs = rhs - f.value * apply_operator(
                linear_quantize_order2(P_second, lam2, ctx.mu - lam1), g).value
            assert lhs == rhs
