"""Typed-error contracts across the library surface."""

from fractions import Fraction

import pytest

from hirotaweb import (DifferentialForm, DimensionError, Mobius, MultiPoly,
                       RationalFunction, WebSpec, WebSpecError,
                       build_solution, build_system_matrix, exact_div,
                       flatness_check, restrict, transform, verify_hirota,
                       veronese_form)


def test_polynomial_error_paths():
    x1 = MultiPoly.variable(2, 0)
    with pytest.raises(DimensionError):
        MultiPoly.variable(2, 5)
    with pytest.raises(DimensionError):
        MultiPoly(2, {(1,): Fraction(1)})
    with pytest.raises(DimensionError):
        x1.derivative(7)
    with pytest.raises(DimensionError):
        x1.evaluate([1])
    with pytest.raises(ValueError):
        MultiPoly.zero(2).leading_term()
    with pytest.raises(ValueError):
        x1.constant_value()
    with pytest.raises(ValueError):
        x1 ** -1
    with pytest.raises(ZeroDivisionError):
        exact_div(x1, MultiPoly.zero(2))
    with pytest.raises(DimensionError):
        x1.substitute({0: MultiPoly.variable(3, 0)})  # wrong target ring


def test_rational_function_conveniences():
    x1, x2 = (MultiPoly.variable(2, i) for i in range(2))
    f = RationalFunction(x1 + x2, x2)
    assert (1 / RationalFunction(x1)) == RationalFunction(MultiPoly.one(2), x1)
    assert f.eliminate({1: 1}) == RationalFunction(MultiPoly.variable(1, 0) + 1)
    assert (2 - RationalFunction(x1)) == RationalFunction(2 - x1)


def test_form_validation():
    x1 = MultiPoly.variable(3, 0)
    with pytest.raises(DimensionError):
        DifferentialForm(3, 1, {(0, 1): x1})      # arity mismatch
    with pytest.raises(DimensionError):
        DifferentialForm(3, 2, {(1, 1): x1})      # not strictly increasing
    with pytest.raises(DimensionError):
        DifferentialForm(3, 1, {(5,): x1})        # out of range
    with pytest.raises(DimensionError):
        DifferentialForm.dx(3, 0) + DifferentialForm.dx(3, 0).wedge(
            DifferentialForm.dx(3, 1))            # degree mismatch
    zero = DifferentialForm.zero(3, 1)
    assert zero.component((0,)).is_zero


def test_web_level_error_paths():
    with pytest.raises(WebSpecError):
        build_system_matrix(WebSpec.numeric(3, 1, 1), "Q-middle")
    with pytest.raises(WebSpecError):
        verify_hirota(build_solution(WebSpec.numeric(3, 1, 1)), mode="guess")
    with pytest.raises(WebSpecError):
        verify_hirota(build_solution(WebSpec.numeric(3, 1, 1)),
                      mode="sampled", trials=0)
    with pytest.raises(WebSpecError):
        verify_hirota(build_solution(WebSpec.numeric(3, 1, 1)),
                      mode="sampled", bound=10)
    with pytest.raises(WebSpecError):
        verify_hirota(build_solution(WebSpec.numeric(3, 1, 1)).f)  # no nodes
    sol = build_solution(WebSpec.symbolic(3, 1, 1))
    with pytest.raises(WebSpecError):
        restrict(sol, 1, 0)
    with pytest.raises(WebSpecError):
        flatness_check(WebSpec.symbolic(3, 1, 1))
    f = build_solution(WebSpec.numeric(3, 1, 1)).f
    with pytest.raises(DimensionError):
        veronese_form(f, [1, 2, 3, 4])
    with pytest.raises(DimensionError):
        transform(f, Mobius.identity(), [Mobius.identity()] * 2)
