"""Interpolation matrices, coefficient extraction, and the elimination oracle."""

from fractions import Fraction

import pytest

from hirotaweb import (DegenerateInterpolantError, MultiPoly, PoleError,
                       RationalFunction, WebSpec, WebSpecError,
                       build_system_matrix, cauchy_interpolant,
                       evaluate_interpolant, highest_coefficients,
                       interpolant_matches_oracle, interpolation_check,
                       random_numeric_instances, signed_minors, solve_oracle)
from reference_forms import closed_form_3d, common_scalar


def poly_rows(matrix):
    return [[matrix.entry(i, j) for j in range(matrix.cols)]
            for i in range(matrix.rows)]


def test_spec_validation():
    with pytest.raises(WebSpecError):
        WebSpec(3, 1, 0)                 # k + l + 1 != n
    with pytest.raises(WebSpecError):
        WebSpec.numeric(3, 1, 1, [1, 1, 2])   # repeated nodes
    with pytest.raises(WebSpecError):
        WebSpec(1, 0, 0)


def test_denominator_top_matrix_three_nodes():
    spec = WebSpec.numeric(3, 1, 1)
    m = build_system_matrix(spec, "Q-top")
    x = [MultiPoly.variable(3, i) for i in range(3)]
    one = MultiPoly.one(3)
    assert poly_rows(m) == [
        [one, one, -x[0]],
        [one, 2 * one, -x[1]],
        [one, 3 * one, -x[2]],
    ]


def test_numerator_top_matrix_three_nodes():
    spec = WebSpec.numeric(3, 1, 1)
    m = build_system_matrix(spec, "P-top")
    x = [MultiPoly.variable(3, i) for i in range(3)]
    one = MultiPoly.one(3)
    assert poly_rows(m) == [
        [one, -x[0], -x[0]],
        [one, -x[1], -2 * x[1]],
        [one, -x[2], -3 * x[2]],
    ]


def test_full_numerator_matrix_two_nodes_with_parameter_row():
    spec = WebSpec.numeric(2, 1, 0, [0, 1])
    m = build_system_matrix(spec, "P-full")
    # ring gains one trailing parameter variable
    x1, x2, t = (MultiPoly.variable(3, i) for i in range(3))
    one, zero = MultiPoly.one(3), MultiPoly.zero(3)
    assert poly_rows(m) == [
        [one, zero, -x1],
        [one, one, -x2],
        [one, t, zero],
    ]


def test_highest_coefficients_three_nodes_numeric():
    spec = WebSpec.numeric(3, 1, 1)
    p_top, q_top = highest_coefficients(spec)
    x = [MultiPoly.variable(3, i) for i in range(3)]
    assert p_top == x[0] * x[1] - 2 * x[0] * x[2] + x[1] * x[2]
    assert q_top == -x[0] + 2 * x[1] - x[2]


def test_highest_coefficients_match_symbolic_closed_form():
    spec = WebSpec.symbolic(3, 1, 1)
    p_top, q_top = highest_coefficients(spec)
    known_p, known_q = closed_form_3d()
    assert RationalFunction(p_top, q_top) == RationalFunction(known_p, known_q)
    assert common_scalar(p_top, q_top, known_p, known_q) == -1


def test_lagrange_degeneration():
    # l = 0: the denominator's only coefficient is the node Vandermonde,
    # a nonzero constant, and the solution becomes polynomial.
    spec = WebSpec.numeric(3, 2, 0)
    p_top, q_top = highest_coefficients(spec)
    assert q_top.is_constant and not q_top.is_zero
    assert q_top.constant_value() == Fraction(2)  # (2-1)(3-1)(3-2)


def test_lagrange_denominator_is_vandermonde_symbolically():
    spec = WebSpec.symbolic(4, 3, 0)
    minors = signed_minors(spec)
    q0 = minors[4]
    _, node = __import__("reference_forms").xl_ring(4)
    vandermonde = MultiPoly.one(8)
    for i in range(1, 5):
        for j in range(i + 1, 5):
            vandermonde = vandermonde * (node(j) - node(i))
    assert q0 == vandermonde


def test_interpolant_normalized_at_data_point():
    spec = WebSpec.numeric(3, 1, 1)
    interp = cauchy_interpolant(spec, normalize=True, x_values=[1, 2, 5])
    values = [c.constant_value() for c in interp.p_coeffs[:2]]
    values.append(interp.q_coeffs[1].constant_value())
    assert values == [Fraction(1, 2), Fraction(1, 4), Fraction(-1, 4)]
    assert interp.q_coeffs[0].constant_value() == 1
    assert interp.normalized


def test_interpolant_identity_data():
    spec = WebSpec.numeric(3, 1, 1)
    interp = cauchy_interpolant(spec, normalize=True, x_values=[1, 2, 3])
    p = [c.constant_value() for c in interp.p_coeffs]
    q = [c.constant_value() for c in interp.q_coeffs]
    assert p == [0, 1, 0] and q == [1, 0]


def test_interpolant_unattainable_point():
    # The linear system solves, but numerator and denominator share the
    # root at node 3, so the normalized interpolant does not exist.
    spec = WebSpec.numeric(3, 1, 1)
    with pytest.raises(DegenerateInterpolantError):
        cauchy_interpolant(spec, normalize=True, x_values=[1, 1, 2])
    p0, p1, q1 = solve_oracle(spec, [1, 1, 2])
    assert (p0, p1, q1) == (1, Fraction(-1, 3), Fraction(-1, 3))
    assert 1 + q1 * 3 == 0  # the shared root at node 3


def test_normalization_without_data_rejected():
    with pytest.raises(WebSpecError):
        cauchy_interpolant(WebSpec.numeric(3, 1, 1), normalize=True)


@pytest.mark.parametrize("spec", [
    WebSpec.numeric(3, 1, 1),
    WebSpec.numeric(4, 2, 1),
    WebSpec.numeric(2, 1, 0, [0, 1]),
    WebSpec.symbolic(3, 1, 1),
    WebSpec.symbolic(4, 1, 2),
])
def test_interpolation_identity(spec):
    assert interpolation_check(spec)


def test_solve_oracle_examples():
    spec = WebSpec.numeric(3, 1, 1)
    assert solve_oracle(spec, [1, 2, 5]) == (Fraction(1, 2), Fraction(1, 4), Fraction(-1, 4))
    assert solve_oracle(spec, [1, 2, 3]) == (0, 1, 0)
    c = Fraction(7, 3)
    assert solve_oracle(spec, [c, c, c]) == (c, 0, 0)


def test_evaluate_interpolant():
    spec = WebSpec.numeric(3, 1, 1)
    interp = cauchy_interpolant(spec, normalize=True, x_values=[1, 2, 5])
    assert evaluate_interpolant(interp, 0) == Fraction(1, 2)
    assert evaluate_interpolant(interp, 2) == 2
    with pytest.raises(PoleError):
        evaluate_interpolant(interp, 4)


def test_evaluate_interpolant_symbolic_data():
    # With symbolic data the value is a rational function of the coordinates:
    # F(node_i) must come out as x_i.
    spec = WebSpec.numeric(3, 1, 1)
    interp = cauchy_interpolant(spec)
    f_at_node = evaluate_interpolant(interp, 2)
    assert f_at_node == RationalFunction(MultiPoly.variable(3, 1))


def test_unnormalized_top_coefficients_consistent():
    for spec in (WebSpec.numeric(4, 2, 1), WebSpec.symbolic(3, 1, 1),
                 WebSpec.numeric(5, 2, 2)):
        interp = cauchy_interpolant(spec)
        p_top, q_top = highest_coefficients(spec)
        assert interp.p_coeffs[spec.k] == p_top
        assert interp.q_coeffs[spec.l] == q_top


@pytest.mark.parametrize("n,k,l", [(3, 1, 1), (4, 2, 1), (5, 2, 2), (5, 3, 1)])
def test_leading_coefficient_degrees_and_sums(n, k, l):
    spec = WebSpec.numeric(n, k, l)
    p_top, q_top = highest_coefficients(spec)
    assert p_top.homogeneous_degree() == l + 1
    assert q_top.homogeneous_degree() == l
    ones = [Fraction(1)] * n
    assert p_top.evaluate(ones) == 0
    if l >= 1:
        assert q_top.evaluate(ones) == 0


def test_oracle_equivalence_on_random_instances():
    for spec, xs in random_numeric_instances(4, 2, 1, count=25, seed=11):
        assert interpolant_matches_oracle(spec, xs)
    for spec, xs in random_numeric_instances(3, 0, 2, count=25, seed=12):
        assert interpolant_matches_oracle(spec, xs)


def _coefficients_in_last_variable(poly):
    """Split a polynomial by powers of its last ring variable, returning the
    coefficient polynomials in the ring without that variable."""
    n = poly.n_vars
    buckets = {}
    for exps, coeff in poly.terms.items():
        buckets.setdefault(exps[-1], {})[exps[:-1]] = coeff
    top = max(buckets) if buckets else 0
    return [MultiPoly(n - 1, buckets.get(j, {})) for j in range(top + 1)]


@pytest.mark.parametrize("spec", [WebSpec.numeric(3, 1, 1),
                                  WebSpec.numeric(4, 1, 2),
                                  WebSpec.symbolic(3, 2, 0)])
def test_minor_extraction_agrees_with_full_determinants(spec):
    # The coefficient lists must equal the full (n+1) x (n+1) determinants
    # expanded in powers of the trailing parameter variable.
    from hirotaweb import determinant
    minors = signed_minors(spec)
    p_det = determinant(build_system_matrix(spec, "P-full"))
    q_det = determinant(build_system_matrix(spec, "Q-full"))
    p_coeffs = _coefficients_in_last_variable(p_det)
    q_coeffs = _coefficients_in_last_variable(q_det)
    for j, expected in enumerate(minors[:spec.k + 1]):
        assert p_coeffs[j] == expected, ("P", j)
    for j, expected in enumerate(minors[spec.k + 1:]):
        assert q_coeffs[j] == expected, ("Q", j)


def test_full_matrix_with_numeric_parameter():
    # Pinning the parameter to a node value makes the full determinant
    # vanish after the data row substitution P(node_i) = x_i Q(node_i);
    # check instead at a fresh value against the coefficient lists.
    spec = WebSpec.numeric(3, 1, 1)
    from hirotaweb import determinant
    minors = signed_minors(spec)
    at = Fraction(7, 2)
    p_det = determinant(build_system_matrix(spec, "P-full", param=at))
    expected = MultiPoly.zero(3)
    for j in range(spec.k + 1):
        expected = expected + minors[j] * at ** j
    assert p_det == expected


def test_evaluate_symbolic_interpolant_at_data_point():
    spec = WebSpec.numeric(3, 1, 1)
    interp = cauchy_interpolant(spec)  # symbolic coefficients
    value = evaluate_interpolant(interp, Fraction(0), x_values=[1, 2, 5])
    normalized = cauchy_interpolant(spec, normalize=True, x_values=[1, 2, 5])
    assert value == evaluate_interpolant(normalized, Fraction(0))
