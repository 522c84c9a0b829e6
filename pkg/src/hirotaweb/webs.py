"""Web solutions and their certificates.

The central object is the quotient of the two leading interpolation
coefficients: as a function of the data point x it solves the dispersionless
Hirota system for the chosen nodes.  This module builds that solution and
certifies everything checkable about it in exact arithmetic:

* residual checks of the second-order system over all index triples, either
  as polynomial identities or by seeded exact evaluation at random points
  (with the Schwartz-Zippel failure bound reported);
* the one-parameter annihilating 1-form and its per-coefficient Frobenius
  integrability test;
* the coframe of parameter-power coefficient 1-forms and the flatness
  dichotomy, certified through the integrability of the degree-1 coframe
  element with the closed-form witness identity checked alongside;
* restriction of a solution to a coordinate hyperplane and composition with
  Mobius transformations, both of which produce new solutions.

Geometry (forms, coframes, flatness, restriction) requires numeric nodes;
residual verification also runs in fully symbolic node mode, where the nodes
are ring variables and the identities hold in all of them at once.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from .errors import (DegenerateInterpolantError, DegenerateRestrictionError,
                     DimensionError, HirotaWebError, WebSpecError)
from .forms import DifferentialForm, LambdaForm
from .interpolation import WebSpec, highest_coefficients, signed_minors
from .polynomials import MultiPoly, Scalar
from .ratfunc import RationalFunction

NodeValue = Union[Fraction, MultiPoly]


@dataclass(frozen=True)
class HirotaSolution:
    """A solution f = p_top/q_top built from the leading interpolation
    coefficients of one web specification."""

    spec: WebSpec
    f: RationalFunction
    p_top: MultiPoly
    q_top: MultiPoly

    @property
    def is_degenerate_order(self) -> bool:
        """True for k = 0 or l = 0: the web is flat in those cases."""
        return self.spec.k == 0 or self.spec.l == 0

    def nodes(self) -> list[NodeValue]:
        return [self.spec.node(i) for i in range(1, self.spec.n + 1)]


def build_solution(spec: WebSpec) -> HirotaSolution:
    """Assemble the solution from the leading coefficients."""
    p_top, q_top = highest_coefficients(spec)
    if q_top.is_zero:
        raise DegenerateInterpolantError("leading denominator coefficient vanishes")
    return HirotaSolution(spec, RationalFunction(p_top, q_top), p_top, q_top)


def web_triples(n: int) -> list[tuple[int, int, int]]:
    """All index triples 1 <= i < j < k <= n."""
    return list(combinations(range(1, n + 1), 3))


class _ResidualFactors:
    """Shared polynomial factors of the residual numerators of one function.

    Writing f = P/Q, the first derivatives are N_i/Q^2 with
    N_i = P_i Q - P Q_i, and the mixed second derivatives are M_jk/Q^3 with
    M_jk = (N_j)_k Q - 2 N_j Q_k (symmetric in j, k).  The residual of a
    triple then has numerator

        sum over cyclic (i,j,k) of (node_j - node_k) N_i M_jk

    over the common denominator Q^5, so the zero test and the sampled
    evaluation never need to touch the denominator at all.
    """

    def __init__(self, f: RationalFunction):
        self.num = f.num
        self.den = f.den
        self.n_vars = f.n_vars
        self._num_partials: dict[int, MultiPoly] = {}
        self._den_partials: dict[int, MultiPoly] = {}
        self._n: dict[int, MultiPoly] = {}
        self._dn: dict[tuple[int, int], MultiPoly] = {}
        self._m: dict[tuple[int, int], MultiPoly] = {}

    def num_partial(self, v: int) -> MultiPoly:
        if v not in self._num_partials:
            self._num_partials[v] = self.num.derivative(v)
        return self._num_partials[v]

    def den_partial(self, v: int) -> MultiPoly:
        if v not in self._den_partials:
            self._den_partials[v] = self.den.derivative(v)
        return self._den_partials[v]

    def n_poly(self, v: int) -> MultiPoly:
        """Numerator of the first derivative in 0-based variable v."""
        if v not in self._n:
            self._n[v] = self.num_partial(v) * self.den - self.num * self.den_partial(v)
        return self._n[v]

    def dn_poly(self, j: int, k: int) -> MultiPoly:
        """Partial of N_j with respect to variable k (both 0-based)."""
        key = (j, k)
        if key not in self._dn:
            self._dn[key] = self.n_poly(j).derivative(k)
        return self._dn[key]

    def m_poly(self, j: int, k: int) -> MultiPoly:
        """Numerator of the mixed second derivative; cached per unordered pair."""
        a, b = (j, k) if j <= k else (k, j)
        key = (a, b)
        if key not in self._m:
            self._m[key] = self.dn_poly(a, b) * self.den - 2 * self.n_poly(a) * self.den_partial(b)
        return self._m[key]

    def residual_numerator(self, nodes: Sequence[NodeValue],
                           triple: tuple[int, int, int]) -> MultiPoly:
        i, j, k = (t - 1 for t in triple)
        li, lj, lk = nodes[i], nodes[j], nodes[k]
        total = (self.n_poly(i) * self.m_poly(j, k)) * (lj - lk)
        total = total + (self.n_poly(j) * self.m_poly(k, i)) * (lk - li)
        total = total + (self.n_poly(k) * self.m_poly(i, j)) * (li - lj)
        return total

    def residual_value(self, nodes: Sequence[NodeValue],
                       triple: tuple[int, int, int],
                       point: Sequence[Fraction],
                       cache: dict) -> Fraction:
        """Residual numerator evaluated at a point without building it."""
        q_val = cache.get("den")
        if q_val is None:
            q_val = cache["den"] = self.den.evaluate(point)

        def n_val(v: int) -> Fraction:
            key = ("n", v)
            if key not in cache:
                cache[key] = self.n_poly(v).evaluate(point)
            return cache[key]

        def m_val(j: int, k: int) -> Fraction:
            a, b = (j, k) if j <= k else (k, j)
            key = ("m", a, b)
            if key not in cache:
                qk_key = ("dq", b)
                if qk_key not in cache:
                    cache[qk_key] = self.den_partial(b).evaluate(point)
                cache[key] = (self.dn_poly(a, b).evaluate(point) * q_val
                              - 2 * n_val(a) * cache[qk_key])
            return cache[key]

        def node_val(v: int) -> Fraction:
            node = nodes[v]
            return node.evaluate(point) if isinstance(node, MultiPoly) else node

        i, j, k = (t - 1 for t in triple)
        return (n_val(i) * m_val(j, k) * (node_val(j) - node_val(k))
                + n_val(j) * m_val(k, i) * (node_val(k) - node_val(i))
                + n_val(k) * m_val(i, j) * (node_val(i) - node_val(j)))

    def degree_bound(self, nodes_symbolic: bool,
                     triples: Sequence[tuple[int, int, int]]) -> int:
        """Upper bound on the residual numerator's total degree, from the
        factor degrees alone (the numerator itself is never expanded)."""
        diff_deg = 1 if nodes_symbolic else 0
        q_deg = self.den.degree()
        best = 0
        for triple in triples:
            for i, j, k in ((triple[0], triple[1], triple[2]),
                            (triple[1], triple[2], triple[0]),
                            (triple[2], triple[0], triple[1])):
                vi, vj, vk = i - 1, j - 1, k - 1
                m_deg = max(self.dn_poly(vj, vk).degree() + q_deg,
                            self.n_poly(vj).degree() + self.den_partial(vk).degree())
                best = max(best, diff_deg + self.n_poly(vi).degree() + m_deg)
        return best


def hirota_residual(f: RationalFunction, nodes: Sequence[NodeValue],
                    triple: tuple[int, int, int]) -> RationalFunction:
    """The residual of one triple of the second-order system, as an exact
    rational function.  Triples are 1-based and must be pairwise distinct."""
    i, j, k = triple
    if len({i, j, k}) != 3 or not all(1 <= t <= len(nodes) for t in (i, j, k)):
        raise DimensionError(f"bad triple {triple} for {len(nodes)} nodes")
    factors = _ResidualFactors(f)
    numerator = factors.residual_numerator(nodes, triple)
    return RationalFunction(numerator, factors.den ** 5)


@dataclass(frozen=True)
class TripleCheck:
    triple: tuple[int, int, int]
    ok: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    """Per-triple residual verdicts plus, in sampled mode, the soundness
    budget: degree bound and per-trial Schwartz-Zippel failure bound."""

    mode: str
    passed: bool
    checks: tuple[TripleCheck, ...]
    trials: Optional[int] = None
    bound: Optional[int] = None
    seed: Optional[int] = None
    degree_bound: Optional[int] = None
    per_trial_failure_bound: Optional[Fraction] = None

    def summary(self) -> str:
        state = "verified" if self.passed else "FAILED"
        head = f"{state}, {len(self.checks)} triple(s), mode={self.mode}"
        if self.mode == "sampled" and self.per_trial_failure_bound is not None:
            head += (f", per-trial failure bound {self.per_trial_failure_bound}"
                     f" (= {float(self.per_trial_failure_bound):.3e})")
        return head


def verify_hirota(solution_or_f: Union[HirotaSolution, RationalFunction],
                  nodes: Optional[Sequence[NodeValue]] = None,
                  mode: str = "symbolic",
                  trials: int = 3,
                  bound: int = 10 ** 6,
                  seed: int = 42,
                  max_workers: int = 1) -> VerificationReport:
    """Check the full residual system for a solution (or any function).

    Symbolic mode proves every triple's residual numerator is the zero
    polynomial.  Sampled mode evaluates each numerator exactly at ``trials``
    seeded random integer points with coordinates in [-bound, bound] and
    requires exact zeros; a nonzero numerator would survive one trial with
    probability at most degree/(2*bound + 1).
    """
    if isinstance(solution_or_f, HirotaSolution):
        f = solution_or_f.f
        node_list = solution_or_f.nodes()
        n = solution_or_f.spec.n
        symbolic = solution_or_f.spec.is_symbolic
    else:
        if nodes is None:
            raise WebSpecError("nodes are required when verifying a bare function")
        f = solution_or_f
        node_list = list(nodes)
        n = len(node_list)
        symbolic = any(isinstance(v, MultiPoly) for v in node_list)

    triples = web_triples(n)
    factors = _ResidualFactors(f)

    if mode == "symbolic":
        # Warm the shared caches sequentially, then the per-triple products
        # can run in any order (or in parallel) with identical results.
        for v in range(n):
            factors.n_poly(v)
        for a, b in combinations(range(n), 2):
            factors.m_poly(a, b)

        def check_one(triple: tuple[int, int, int]) -> TripleCheck:
            numerator = factors.residual_numerator(node_list, triple)
            if numerator.is_zero:
                return TripleCheck(triple, True, "residual numerator is 0")
            return TripleCheck(triple, False,
                               f"nonzero residual numerator with {len(numerator.terms)} term(s)")

        if max_workers > 1:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                checks = tuple(pool.map(check_one, triples))
        else:
            checks = tuple(check_one(t) for t in triples)
        return VerificationReport("symbolic", all(c.ok for c in checks), checks)

    if mode != "sampled":
        raise WebSpecError(f"unknown verification mode {mode!r}")
    if trials < 1:
        raise WebSpecError("sampled mode needs at least one trial")
    if bound < 10 ** 3:
        raise WebSpecError("sampling bound must be at least 10^3")

    rng = random.Random(seed)
    n_vars = f.n_vars
    points: list[list[Fraction]] = []
    while len(points) < trials:
        point = [Fraction(rng.randint(-bound, bound)) for _ in range(n_vars)]
        if symbolic:
            node_coords = point[n:2 * n]
            if len(set(node_coords)) != n:
                continue
        points.append(point)

    degree_bound = factors.degree_bound(symbolic, triples)
    failure_bound = Fraction(degree_bound, 2 * bound + 1)

    point_caches: list[dict] = [{} for _ in points]
    checks = []
    for triple in triples:
        bad = None
        for point, cache in zip(points, point_caches):
            value = factors.residual_value(node_list, triple, point, cache)
            if value:
                bad = (point, value)
                break
        if bad is None:
            checks.append(TripleCheck(
                triple, True, f"exact zero at {trials} sampled point(s)"))
        else:
            checks.append(TripleCheck(
                triple, False, f"nonzero residual value {bad[1]} at a sampled point"))
    return VerificationReport("sampled", all(c.ok for c in checks), tuple(checks),
                              trials=trials, bound=bound, seed=seed,
                              degree_bound=degree_bound,
                              per_trial_failure_bound=failure_bound)


# -- annihilating form and coframe ---------------------------------------------


def veronese_form(f: RationalFunction, lambdas: Sequence[Scalar]) -> LambdaForm:
    """The degree-(n-1) parameter polynomial of 1-forms annihilating the web.

    Coefficient m is sum_i e_im f_i dx_i where e_im is the lambda^m
    coefficient of prod_{j != i} (lambda - lambda_j); evaluating the result
    at node_i leaves a multiple of dx_i, and the leading coefficient is df.
    """
    values = [Fraction(v) for v in lambdas]
    n = len(values)
    if len(set(values)) != n:
        raise WebSpecError("nodes must be pairwise distinct")
    if f.n_vars != n:
        raise DimensionError(
            f"function has {f.n_vars} variables but {n} nodes were given")
    partials = [f.derivative(v) for v in range(n)]
    coefficient_forms = []
    expansions = []
    for i in range(n):
        conv = [Fraction(1)]
        for j in range(n):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(conv) + 1)
            for m, c in enumerate(conv):
                nxt[m + 1] += c
                nxt[m] -= values[j] * c
            conv = nxt
        expansions.append(conv)
    for m in range(n):
        components = {}
        for i in range(n):
            coeff = partials[i] * expansions[i][m]
            if not coeff.is_zero:
                components[(i,)] = coeff
        coefficient_forms.append(DifferentialForm(n, 1, components))
    return LambdaForm(coefficient_forms)


def frobenius_check(alpha: LambdaForm) -> bool:
    """Whether d(alpha) wedge alpha vanishes for every parameter power.

    If every component of every coefficient form shares one primitive
    denominator h, the test runs on the cleared pencil h*alpha instead:
    h is parameter-free, so d(h a) wedge (h a) = h^2 (d a wedge a) vanishes
    coefficient-for-coefficient exactly when the original does, and the
    cleared computation stays purely polynomial.
    """
    cleared = _clear_common_denominator(alpha)
    target = cleared if cleared is not None else alpha
    return target.d().wedge(target).is_zero


def _clear_common_denominator(alpha: LambdaForm) -> Optional[LambdaForm]:
    """h*alpha with polynomial components, when all denominators agree up to
    a scalar; None when they do not."""
    common: Optional[MultiPoly] = None
    for form in alpha.coefficients:
        for coeff in form.components.values():
            primitive = coeff.den * (1 / coeff.den.content())
            if common is None:
                common = primitive
            elif common != primitive:
                return None
    if common is None:
        return alpha  # no components at all: the zero pencil
    one = MultiPoly.one(common.n_vars)
    cleared = []
    for form in alpha.coefficients:
        components = {}
        for idx, coeff in form.components.items():
            scalar = 1 / coeff.den.content()
            components[idx] = RationalFunction(coeff.num * scalar, one)
        stripped = DifferentialForm(form.n_vars, form.degree)
        stripped.components = components
        cleared.append(stripped)
    return LambdaForm(cleared)


@dataclass(frozen=True)
class Coframe:
    """The n coefficient 1-forms of the annihilating parameter polynomial.

    Unnormalized coframes have polynomial components built straight from the
    determinant coefficients; normalized ones divide by the square of the
    denominator's constant term, which makes the three-term expression for
    the degree-1 element hold on the nose.
    """

    spec: WebSpec
    alphas: tuple[DifferentialForm, ...]
    normalized: bool


def _gradient_form(p: MultiPoly) -> DifferentialForm:
    n = p.n_vars
    components = {}
    for v in range(n):
        partial = p.derivative(v)
        if not partial.is_zero:
            components[(v,)] = RationalFunction(partial)
    return DifferentialForm(n, 1, components)


def _interpolant_polys(spec: WebSpec) -> tuple[list[MultiPoly], list[MultiPoly]]:
    minors = signed_minors(spec)
    return minors[:spec.k + 1], minors[spec.k + 1:]


def _raw_coframe_forms(p_list: Sequence[MultiPoly],
                       q_list: Sequence[MultiPoly], n: int) -> list[DifferentialForm]:
    n_vars = p_list[0].n_vars
    dp = [_gradient_form(p) for p in p_list]
    dq = [_gradient_form(q) for q in q_list]
    forms = []
    for m in range(n):
        total = DifferentialForm.zero(n_vars, 1)
        for i, q in enumerate(q_list):
            j = m - i
            if 0 <= j < len(p_list):
                total = total + dp[j].scale(q) - dq[i].scale(p_list[j])
        forms.append(total)
    return forms


def coframe(spec: WebSpec, normalized: bool = True) -> Coframe:
    """Coefficient 1-forms of the annihilating form, from the determinant data.

    Requires numeric nodes (the forms live on the coordinate space).  The
    normalized coframe equals the unnormalized one divided by the square of
    the denominator's constant term; both annihilate the same web.
    """
    if spec.is_symbolic:
        raise WebSpecError("coframes need numeric nodes")
    p_list, q_list = _interpolant_polys(spec)
    forms = _raw_coframe_forms(p_list, q_list, spec.n)
    if normalized:
        q0 = q_list[0]
        if q0.is_zero:
            raise DegenerateInterpolantError("denominator constant term vanishes")
        scale = RationalFunction(MultiPoly.one(spec.n_vars), q0 * q0)
        forms = [form.scale(scale) for form in forms]
    return Coframe(spec, tuple(forms), normalized)


@dataclass(frozen=True)
class FlatnessVerdict:
    """Outcome of the flatness dichotomy for one web.

    ``witness`` is the 3-form d(alpha_1) wedge alpha_1 of the normalized
    coframe; nonflat certification means it has a nonzero component, hence
    is nonvanishing on a dense open set.  The integrability of the mirror
    element alpha_(n-2) is recorded alongside as a cross-check.
    """

    status: str                       # "nonflat-certified" | "flat-certified"
    witness: DifferentialForm
    witness_index: int                # which coframe element certified (1)
    cross_check_index: int            # the mirror element n-2
    alpha1_integrable: bool
    cross_check_integrable: bool
    witness_identity_checked: bool

    @property
    def is_flat(self) -> bool:
        return self.status == "flat-certified"


def flatness_check(spec: WebSpec) -> FlatnessVerdict:
    """Certify the web flat or nonflat through coframe integrability.

    Works with the polynomial multiples beta_m = Q0^2 alpha_m of the
    normalized coframe elements: d(beta_m) wedge beta_m equals
    Q0^4 (d(alpha_m) wedge alpha_m), so either side vanishes exactly when
    the other does and the whole computation stays polynomial.  For
    k, l >= 1 the closed-form witness identity

        d(alpha_1) wedge alpha_1 = 2 dq_1 wedge dp_0 wedge dp_1

    (normalized coefficients) is asserted as an exact identity of 3-forms.
    """
    if spec.is_symbolic:
        raise WebSpecError("flatness certification needs numeric nodes")
    if spec.n < 3:
        raise WebSpecError("flatness certification needs dimension at least 3")
    p_list, q_list = _interpolant_polys(spec)
    q0 = q_list[0]
    if q0.is_zero:
        raise DegenerateInterpolantError("denominator constant term vanishes")
    raw = _raw_coframe_forms(p_list, q_list, spec.n)

    def wedge_self(form: DifferentialForm) -> DifferentialForm:
        return form.exterior_derivative().wedge(form)

    w1_poly = wedge_self(raw[1])
    second = spec.n - 2
    w2_poly = w1_poly if second == 1 else wedge_self(raw[second])

    identity_checked = False
    if spec.k >= 1 and spec.l >= 1:
        gamma_p0 = _gradient_form(p_list[0]).scale(q0) - _gradient_form(q0).scale(p_list[0])
        gamma_p1 = _gradient_form(p_list[1]).scale(q0) - _gradient_form(q0).scale(p_list[1])
        gamma_q1 = _gradient_form(q_list[1]).scale(q0) - _gradient_form(q0).scale(q_list[1])
        rhs = gamma_q1.wedge(gamma_p0).wedge(gamma_p1).scale(MultiPoly.const(spec.n_vars, 2))
        if w1_poly.scale(q0 * q0) != rhs:
            raise HirotaWebError(
                "internal inconsistency: the coframe witness identity failed")
        identity_checked = True

    witness_scale = RationalFunction(MultiPoly.one(spec.n_vars), q0 ** 4)
    witness = w1_poly.scale(witness_scale)
    alpha1_ok = w1_poly.is_zero
    cross_ok = w2_poly.is_zero
    if not alpha1_ok:
        status = "nonflat-certified"
    elif cross_ok:
        status = "flat-certified"
    else:
        raise HirotaWebError(
            "inconsistent certificates: alpha_1 integrable but the mirror element is not")
    return FlatnessVerdict(status, witness, 1, second, alpha1_ok, cross_ok,
                           identity_checked)


# -- restriction and transformation -----------------------------------------------


def restrict(solution: HirotaSolution, coordinate: int,
             value: Scalar) -> RationalFunction:
    """Fix coordinate x_coordinate (1-based) to a constant.

    The result lives in n-1 densely reindexed variables and solves the
    lower-dimensional system whose node list omits the matching node.
    """
    spec = solution.spec
    if spec.is_symbolic:
        raise WebSpecError("restriction needs numeric nodes")
    if not 1 <= coordinate <= spec.n:
        raise DimensionError(f"coordinate {coordinate} out of range 1..{spec.n}")
    assignments = {coordinate - 1: Fraction(value)}
    denominator = solution.f.den.eliminate(assignments)
    if denominator.is_zero:
        raise DegenerateRestrictionError(
            f"denominator vanishes identically at x{coordinate} = {value}")
    return RationalFunction(solution.f.num.eliminate(assignments), denominator)


def restricted_nodes(spec: WebSpec, coordinate: int) -> list[Fraction]:
    """Node list of the lower-dimensional system after fixing x_coordinate."""
    if spec.is_symbolic:
        raise WebSpecError("restriction needs numeric nodes")
    return [v for i, v in enumerate(spec.lambdas, start=1) if i != coordinate]


@dataclass(frozen=True)
class Mobius:
    """A fractional-linear map t -> (a t + b)/(c t + d), ad - bc != 0."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a * self.d - self.b * self.c == 0:
            raise WebSpecError("degenerate fractional-linear map")

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def inversion(cls) -> "Mobius":
        """t -> 1/t."""
        return cls(Fraction(0), Fraction(1), Fraction(1), Fraction(0))

    @property
    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d


def _substitute_mobius(poly: MultiPoly, maps: Sequence[Mobius]) -> RationalFunction:
    """Compose a polynomial with per-variable fractional-linear maps.

    Clearing denominators: with D_v the degree of variable v, each term
    c prod x_v^e_v becomes c prod (a_v x_v + b_v)^e_v (c_v x_v + d_v)^(D_v - e_v)
    over the common denominator prod (c_v x_v + d_v)^(D_v).
    """
    n = poly.n_vars
    if all(m.is_identity for m in maps):
        return RationalFunction(poly)
    max_deg = [0] * n
    for exps in poly.terms:
        for v, e in enumerate(exps):
            if e > max_deg[v]:
                max_deg[v] = e
    lin_num = [MultiPoly.variable(n, v) * maps[v].a + maps[v].b for v in range(n)]
    lin_den = [MultiPoly.variable(n, v) * maps[v].c + maps[v].d for v in range(n)]
    power_cache: dict[tuple[str, int, int], MultiPoly] = {}

    def power(kind: str, v: int, e: int) -> MultiPoly:
        key = (kind, v, e)
        if key not in power_cache:
            base = lin_num[v] if kind == "num" else lin_den[v]
            power_cache[key] = base ** e
        return power_cache[key]

    numerator = MultiPoly.zero(n)
    for exps, coeff in poly.terms.items():
        term = MultiPoly.const(n, coeff)
        for v, e in enumerate(exps):
            if e:
                term = term * power("num", v, e)
            if max_deg[v] - e:
                term = term * power("den", v, max_deg[v] - e)
        numerator = numerator + term
    denominator = MultiPoly.one(n)
    for v in range(n):
        if max_deg[v]:
            denominator = denominator * power("den", v, max_deg[v])
    return RationalFunction(numerator, denominator)


def transform(f: RationalFunction, outer: Mobius,
              inner: Sequence[Mobius]) -> RationalFunction:
    """The composed function outer(f(inner_1(x_1), ..., inner_n(x_n))).

    Solutions map to solutions of the same system; inversion outer and inner
    maps exchange the roles of the numerator and denominator orders.
    """
    if len(inner) != f.n_vars:
        raise DimensionError(
            f"expected {f.n_vars} coordinate maps, got {len(inner)}")
    top = _substitute_mobius(f.num, inner)
    bottom = _substitute_mobius(f.den, inner)
    composed = top / bottom
    numerator = composed.num * outer.a + composed.den * outer.b
    denominator = composed.num * outer.c + composed.den * outer.d
    if denominator.is_zero:
        raise ZeroDivisionError("outer map sends the function to infinity")
    return RationalFunction(numerator, denominator)


# -- structural properties of the leading coefficients ------------------------------


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    ok: bool
    detail: str


def structural_properties(spec: WebSpec) -> list[PropertyCheck]:
    """The three structural facts about the leading coefficients.

    1. both are homogeneous in the coordinates, of degrees l+1 and l;
    2. the numerator's degree exceeds the denominator's by one;
    3. each coefficient sum vanishes -- for the numerator when k >= 1 and
       for the denominator when l >= 1 (below those orders the defining
       column dependence does not exist and the sums are nonzero).
    """
    p_top, q_top = highest_coefficients(spec)
    x_vars = range(spec.n)
    checks = []

    p_deg = p_top.homogeneous_degree(x_vars)
    q_deg = q_top.homogeneous_degree(x_vars)
    ok1 = (not p_top.is_zero and not q_top.is_zero
           and p_deg == spec.l + 1 and q_deg == spec.l)
    checks.append(PropertyCheck(
        "homogeneous",
        ok1,
        f"numerator degree {p_deg}, denominator degree {q_deg} "
        f"(expected {spec.l + 1} and {spec.l})"))

    ok2 = p_deg is not None and q_deg is not None and p_deg == q_deg + 1
    gap = p_deg - q_deg if (p_deg is not None and q_deg is not None) else None
    checks.append(PropertyCheck(
        "degree-gap", ok2, f"deg num - deg den = {gap} (expected 1)"))

    ones = [Fraction(1)] * spec.n
    p_sum = p_top.eliminate(dict(enumerate(ones))) if spec.is_symbolic else None
    if spec.is_symbolic:
        q_sum = q_top.eliminate(dict(enumerate(ones)))
        p_sum_zero = p_sum.is_zero
        q_sum_zero = q_sum.is_zero
        p_detail = p_sum.text([f"l{i}" for i in range(1, spec.n + 1)])
        q_detail = q_sum.text([f"l{i}" for i in range(1, spec.n + 1)])
    else:
        p_value = p_top.evaluate(ones)
        q_value = q_top.evaluate(ones)
        p_sum_zero = p_value == 0
        q_sum_zero = q_value == 0
        p_detail = str(p_value)
        q_detail = str(q_value)
    p_ok = p_sum_zero if spec.k >= 1 else not p_sum_zero
    q_ok = q_sum_zero if spec.l >= 1 else not q_sum_zero
    p_claim = "zero" if spec.k >= 1 else "nonzero (order 0)"
    q_claim = "zero" if spec.l >= 1 else "nonzero (order 0)"
    checks.append(PropertyCheck(
        "coefficient-sums", p_ok and q_ok,
        f"numerator sum {p_detail} (expected {p_claim}), "
        f"denominator sum {q_detail} (expected {q_claim})"))
    return checks
