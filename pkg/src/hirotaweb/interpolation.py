"""Rational interpolation through fixed nodes, done entirely by determinants.

A web specification fixes the dimension n, the numerator/denominator degrees
k and l with k + l + 1 = n, and the interpolation nodes: either n pairwise
distinct exact numbers, or fully symbolic nodes carried as extra ring
variables.  The interpolant F with F(node_i) = x_i is encoded by two
coefficient matrices; its numerator and denominator coefficients are signed
maximal minors of one n x (n+1) row matrix, extracted in a single memoized
pass so all signs are consistent by construction.

Coefficient lists are kept unnormalized by default (they are polynomials in
the value coordinates x); dividing by the denominator's constant term only
happens at a numeric evaluation point, where it either succeeds or raises a
DegenerateInterpolantError.

Ring layout: variables 0..n-1 are the values x1..xn; in symbolic-node mode
variables n..2n-1 are the nodes l1..ln; matrix builders may append one extra
trailing variable t for the interpolation parameter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Optional, Sequence, Union

from .errors import DegenerateInterpolantError, DimensionError, PoleError, WebSpecError
from .polynomials import (MultiPoly, PolyMatrix, Scalar, determinant,
                          maximal_minors)
from .ratfunc import RationalFunction

MatrixKind = Literal["P-full", "Q-full", "P-top", "Q-top"]

PARAM_NAME = "t"


@dataclass(frozen=True)
class WebSpec:
    """Dimension, interpolation order and nodes of one web construction.

    ``lambdas`` is either None (symbolic nodes) or n pairwise distinct exact
    numbers.  Public index arguments (nodes, coordinates, triples) are
    1-based throughout the library, matching the x1..xn naming.
    """

    n: int
    k: int
    l: int
    lambdas: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.n < 2:
            raise WebSpecError(f"dimension must be at least 2, got {self.n}")
        if self.k < 0 or self.l < 0:
            raise WebSpecError("negative interpolation order")
        if self.k + self.l + 1 != self.n:
            raise WebSpecError(
                f"order mismatch: k + l + 1 = {self.k + self.l + 1} != n = {self.n}")
        if self.lambdas is not None:
            values = tuple(Fraction(v) for v in self.lambdas)
            object.__setattr__(self, "lambdas", values)
            if len(values) != self.n:
                raise WebSpecError(f"expected {self.n} nodes, got {len(values)}")
            if len(set(values)) != self.n:
                raise WebSpecError("nodes must be pairwise distinct")

    @classmethod
    def numeric(cls, n: int, k: int, l: int,
                lambdas: Optional[Sequence[Scalar]] = None) -> "WebSpec":
        """Numeric-node spec; nodes default to 1, 2, ..., n."""
        if lambdas is None:
            lambdas = [Fraction(i) for i in range(1, n + 1)]
        return cls(n, k, l, tuple(Fraction(v) for v in lambdas))

    @classmethod
    def symbolic(cls, n: int, k: int, l: int) -> "WebSpec":
        return cls(n, k, l, None)

    @property
    def is_symbolic(self) -> bool:
        return self.lambdas is None

    @property
    def n_vars(self) -> int:
        """Ring size: n for numeric nodes, 2n when the nodes are symbolic."""
        return self.n if self.lambdas is not None else 2 * self.n

    def x_poly(self, i: int, n_vars: Optional[int] = None) -> MultiPoly:
        """The coordinate x_i (1-based) as a polynomial, optionally embedded
        in a larger ring sharing the same leading layout."""
        if not 1 <= i <= self.n:
            raise DimensionError(f"coordinate index {i} out of range 1..{self.n}")
        return MultiPoly.variable(n_vars or self.n_vars, i - 1)

    def node(self, i: int, n_vars: Optional[int] = None) -> Union[Fraction, MultiPoly]:
        """Node value lambda_i (1-based): a number, or a variable when symbolic."""
        if not 1 <= i <= self.n:
            raise DimensionError(f"node index {i} out of range 1..{self.n}")
        if self.lambdas is not None:
            return self.lambdas[i - 1]
        return MultiPoly.variable(n_vars or self.n_vars, self.n + i - 1)

    def names(self, extra_param: bool = False) -> list[str]:
        out = [f"x{i}" for i in range(1, self.n + 1)]
        if self.lambdas is None:
            out += [f"l{i}" for i in range(1, self.n + 1)]
        if extra_param:
            out.append(PARAM_NAME)
        return out

    def describe(self) -> str:
        nodes = ("symbolic" if self.lambdas is None
                 else ",".join(str(v) for v in self.lambdas))
        return f"n={self.n} k={self.k} l={self.l} nodes={nodes}"


def _node_powers(spec: WebSpec, i: int, top: int, n_vars: int) -> list[MultiPoly]:
    """[node_i^0, ..., node_i^top] as polynomials in the given ring."""
    lam = spec.node(i, n_vars) if spec.is_symbolic else spec.lambdas[i - 1]
    powers = []
    current: Union[Fraction, MultiPoly] = Fraction(1) if not spec.is_symbolic else MultiPoly.one(n_vars)
    for _ in range(top + 1):
        if isinstance(current, Fraction):
            powers.append(MultiPoly.const(n_vars, current))
        else:
            powers.append(current)
        current = current * lam
    return powers


def _data_rows(spec: WebSpec, p_top: int, q_top: int, n_vars: int) -> list[list[MultiPoly]]:
    """Rows [1, l_i, ..., l_i^p_top, -x_i, ..., -x_i l_i^q_top] for i = 1..n.

    A negative top degree produces an empty block (the k = 0 / l = 0 cases).
    """
    rows = []
    for i in range(1, spec.n + 1):
        powers = _node_powers(spec, i, max(p_top, q_top, 0), n_vars)
        x = spec.x_poly(i, n_vars)
        row = [powers[j] for j in range(p_top + 1)]
        row += [-(x * powers[j]) for j in range(q_top + 1)]
        rows.append(row)
    return rows


def build_system_matrix(spec: WebSpec, which: MatrixKind,
                        param: Optional[Scalar] = None) -> PolyMatrix:
    """One of the four interpolation matrices.

    The two "full" kinds are (n+1) x (n+1) with a final row in powers of the
    interpolation parameter; by default that parameter is a fresh trailing
    ring variable, or pass ``param`` to pin it to an exact number.  The two
    "top" kinds are the n x n matrices whose signed determinants are the
    leading coefficients.
    """
    n, k, l = spec.n, spec.k, spec.l
    if which in ("P-full", "Q-full"):
        symbolic_param = param is None
        n_vars = spec.n_vars + (1 if symbolic_param else 0)
        rows = _data_rows(spec, k, l, n_vars)
        if symbolic_param:
            t: Union[Fraction, MultiPoly] = MultiPoly.variable(n_vars, n_vars - 1)
            t_power: Union[Fraction, MultiPoly] = MultiPoly.one(n_vars)
        else:
            t = Fraction(param)
            t_power = Fraction(1)
        powers = []
        for _ in range(max(k, l) + 1):
            powers.append(t_power if isinstance(t_power, MultiPoly)
                          else MultiPoly.const(n_vars, t_power))
            t_power = t_power * t
        zero = MultiPoly.zero(n_vars)
        if which == "P-full":
            last = [powers[j] for j in range(k + 1)] + [zero] * (l + 1)
        else:
            last = [zero] * (k + 1) + [powers[j] for j in range(l + 1)]
        rows.append(last)
        return PolyMatrix.from_rows(rows)
    if which == "P-top":
        return PolyMatrix.from_rows(_data_rows(spec, k - 1, l, spec.n_vars))
    if which == "Q-top":
        return PolyMatrix.from_rows(_data_rows(spec, k, l - 1, spec.n_vars))
    raise WebSpecError(f"unknown matrix kind {which!r}")


def row_matrix(spec: WebSpec) -> PolyMatrix:
    """The shared n x (n+1) data matrix of both full determinants."""
    return PolyMatrix.from_rows(_data_rows(spec, spec.k, spec.l, spec.n_vars))


def signed_minors(spec: WebSpec) -> list[MultiPoly]:
    """All n+1 coefficients of the interpolant's two determinants.

    Entry c is (-1)^(n+c) det(row matrix without column c); entries 0..k are
    the numerator coefficients, entries k+1..n the denominator coefficients.
    One elimination pass produces all of them, so the relative signs match
    the leading-coefficient formulas by construction.
    """
    minors = maximal_minors(row_matrix(spec))
    return [m if (spec.n + c) % 2 == 0 else -m for c, m in enumerate(minors)]


def highest_coefficients(spec: WebSpec) -> tuple[MultiPoly, MultiPoly]:
    """The leading numerator and denominator coefficients (P_k, Q_l)."""
    p_det = determinant(build_system_matrix(spec, "P-top"))
    q_det = determinant(build_system_matrix(spec, "Q-top"))
    p_sign = -1 if (spec.n + spec.k) % 2 else 1
    q_sign = -1 if (spec.n + spec.k + spec.l + 1) % 2 else 1
    return p_det * p_sign, q_det * q_sign


@dataclass(frozen=True)
class CauchyInterpolant:
    """Coefficient lists of the rational interpolant.

    ``p_coeffs`` has length n (parameter powers 0..k, zero-padded above k);
    ``q_coeffs`` has length l+1.  Unnormalized lists are the raw signed
    determinant minors; normalized lists (numeric data only) are scaled so
    the denominator's constant term is 1.
    """

    spec: WebSpec
    p_coeffs: tuple[MultiPoly, ...]
    q_coeffs: tuple[MultiPoly, ...]
    normalized: bool = False

    def p_at(self, value: Scalar) -> MultiPoly:
        """Numerator polynomial evaluated at a numeric parameter value."""
        return _poly_in_param(self.p_coeffs, value)

    def q_at(self, value: Scalar) -> MultiPoly:
        return _poly_in_param(self.q_coeffs, value)


def _poly_in_param(coeffs: Sequence[MultiPoly], value: Scalar) -> MultiPoly:
    value = Fraction(value)
    total = MultiPoly.zero(coeffs[0].n_vars)
    power = Fraction(1)
    for c in coeffs:
        if not c.is_zero and power:
            total = total + c * power
        power *= value
    return total


def cauchy_interpolant(spec: WebSpec, normalize: bool = False,
                       x_values: Optional[Sequence[Scalar]] = None) -> CauchyInterpolant:
    """Extract the interpolant's coefficient lists from the determinants.

    With ``x_values`` the coefficients are instantiated at that data point
    (numeric nodes only); ``normalize`` then divides through by the
    denominator's constant term, raising DegenerateInterpolantError when
    that term vanishes (an unattainable-point configuration).
    """
    if normalize and x_values is None:
        raise WebSpecError("normalization needs a numeric data point; "
                           "symbolic coefficients stay unnormalized")
    minors = signed_minors(spec)
    p = minors[:spec.k + 1]
    q = minors[spec.k + 1:]
    if x_values is not None:
        if spec.is_symbolic:
            raise WebSpecError("numeric data needs numeric nodes")
        if len(x_values) != spec.n:
            raise WebSpecError(f"expected {spec.n} data values")
        point = [Fraction(v) for v in x_values]
        p = [MultiPoly.const(spec.n_vars, c.evaluate(point)) for c in p]
        q = [MultiPoly.const(spec.n_vars, c.evaluate(point)) for c in q]
        if normalize:
            q0 = q[0].constant_value()
            if not q0:
                raise DegenerateInterpolantError(
                    "denominator constant term vanishes at this data point")
            p = [c * (1 / q0) for c in p]
            q = [c * (1 / q0) for c in q]
            # Attainability: a denominator root at a node means the numerator
            # shares it and the interpolation condition silently fails there.
            q_values = [c.constant_value() for c in q]
            for i in range(1, spec.n + 1):
                lam = spec.lambdas[i - 1]
                if sum(c * lam ** j for j, c in enumerate(q_values)) == 0:
                    raise DegenerateInterpolantError(
                        f"numerator and denominator share a root at node {i}: "
                        "unattainable data point")
    pad = [MultiPoly.zero(spec.n_vars)] * (spec.n - len(p))
    return CauchyInterpolant(spec, tuple(p) + tuple(pad), tuple(q),
                             normalized=bool(normalize))


def interpolation_check(spec: WebSpec) -> bool:
    """Whether P(node_i) - x_i Q(node_i) vanishes identically for every i.

    This is the defining interpolation property, checked as an exact
    polynomial identity in the coordinates (and nodes, when symbolic).
    """
    minors = signed_minors(spec)
    n_vars = spec.n_vars
    for i in range(1, spec.n + 1):
        powers = _node_powers(spec, i, spec.n, n_vars)
        p_val = MultiPoly.zero(n_vars)
        for j in range(spec.k + 1):
            p_val = p_val + minors[j] * powers[j]
        q_val = MultiPoly.zero(n_vars)
        for j in range(spec.l + 1):
            q_val = q_val + minors[spec.k + 1 + j] * powers[j]
        if not (p_val - spec.x_poly(i) * q_val).is_zero:
            return False
    return True


def solve_oracle(spec: WebSpec, x_values: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Independent route: solve the interpolation conditions by exact
    Gaussian elimination, returning (p_0..p_k, q_1..q_l) with q_0 = 1.

    A rank-deficient but consistent system (constant data, say) resolves by
    setting the free unknowns to zero; an inconsistent one raises.
    """
    if spec.is_symbolic:
        raise WebSpecError("the elimination oracle needs numeric nodes")
    if len(x_values) != spec.n:
        raise WebSpecError(f"expected {spec.n} data values")
    xs = [Fraction(v) for v in x_values]
    n, k, l = spec.n, spec.k, spec.l
    rows = []
    for i in range(n):
        lam = spec.lambdas[i]
        powers = [lam ** j for j in range(max(k, l) + 1)]
        row = [powers[j] for j in range(k + 1)]
        row += [-xs[i] * powers[j] for j in range(1, l + 1)]
        row.append(xs[i])
        rows.append(row)
    # Forward elimination with first-nonzero pivoting; all exact.
    pivot_cols: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = next((r for r in range(rank, n) if rows[r][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, n):
            factor = rows[r][col] / pivot
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivot_cols.append(col)
        rank += 1
    for r in range(rank, n):
        if rows[r][n]:
            raise DegenerateInterpolantError("singular interpolation system")
    solution = [Fraction(0)] * n
    for r in range(rank - 1, -1, -1):
        col = pivot_cols[r]
        acc = rows[r][n] - sum(rows[r][j] * solution[j] for j in range(col + 1, n))
        solution[col] = acc / rows[r][col]
    return tuple(solution)


def evaluate_interpolant(interp: CauchyInterpolant, at: Scalar,
                         x_values: Optional[Sequence[Scalar]] = None
                         ) -> Union[Fraction, RationalFunction]:
    """F(at) = p(at)/q(at): an exact number when the coefficients are (or are
    made) numeric, otherwise a rational function of the coordinates."""
    p_val = interp.p_at(at)
    q_val = interp.q_at(at)
    if x_values is not None:
        point = [Fraction(v) for v in x_values]
        p_num = p_val.evaluate(point)
        q_num = q_val.evaluate(point)
    elif p_val.is_constant and q_val.is_constant:
        p_num = p_val.constant_value()
        q_num = q_val.constant_value()
    else:
        if q_val.is_zero:
            raise PoleError(f"denominator vanishes identically at {at}")
        return RationalFunction(p_val, q_val)
    if not q_num:
        raise PoleError(f"denominator vanishes at parameter value {at}")
    return p_num / q_num


def interpolant_matches_oracle(spec: WebSpec, x_values: Sequence[Scalar]) -> bool:
    """Determinant route vs elimination route on one numeric instance."""
    interp = cauchy_interpolant(spec, normalize=True, x_values=x_values)
    oracle = solve_oracle(spec, x_values)
    ours = [c.constant_value() for c in interp.p_coeffs[:spec.k + 1]]
    ours += [c.constant_value() for c in interp.q_coeffs[1:]]
    return tuple(ours) == tuple(oracle)


def random_numeric_instances(n: int, k: int, l: int, count: int, seed: int,
                             bound: int = 20) -> Iterator[tuple[WebSpec, list[Fraction]]]:
    """Reproducible random nondegenerate instances for oracle comparisons.

    Integer nodes and data in [-bound, bound], rejection-sampled until the
    nodes are distinct and the interpolation system is solvable.
    """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        lambdas = [rng.randint(-bound, bound) for _ in range(n)]
        if len(set(lambdas)) != n:
            continue
        xs = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        spec = WebSpec.numeric(n, k, l, lambdas)
        try:
            solve_oracle(spec, xs)
            cauchy_interpolant(spec, normalize=True, x_values=xs)
        except DegenerateInterpolantError:
            continue
        produced += 1
        yield spec, xs
