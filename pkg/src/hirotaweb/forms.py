"""Exterior algebra over rational-function coefficients.

A degree-g form is stored as a map from strictly increasing g-tuples of
0-based variable indices to RationalFunction components (zero components are
never stored; the degree-0 form has the single key ()).  Wedge products use
merge-inversion signs, and the exterior derivative differentiates every ring
variable, so forms should be built over rings whose variables are all
genuine coordinates (numeric-node mode).

LambdaForm bundles a list of forms as the coefficients of a polynomial in a
spectral parameter; its ``d`` and ``wedge`` act degree by degree, which is
what the per-coefficient Frobenius test needs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import DimensionError
from .polynomials import MultiPoly, Scalar, poly_to_json
from .ratfunc import RationalFunction

Index = tuple[int, ...]
Coefficient = Union[RationalFunction, MultiPoly, Scalar]


def _merge_indices(left: Index, right: Index) -> Optional[tuple[int, Index]]:
    """Merge two increasing index tuples; None if they share an index.

    Returns (sign, merged) where sign is the parity of the shuffle that
    sorts the concatenation.
    """
    if not left:
        return 1, right
    if not right:
        return 1, left
    inversions = 0
    for a in left:
        for b in right:
            if a == b:
                return None
            if b < a:
                inversions += 1
    merged = tuple(sorted(left + right))
    return (-1 if inversions % 2 else 1), merged


class DifferentialForm:
    """Alternating form of fixed degree with RationalFunction components."""

    __slots__ = ("n_vars", "degree", "components")

    def __init__(self, n_vars: int, degree: int,
                 components: Optional[Mapping[Index, Coefficient]] = None):
        if degree < 0:
            raise DimensionError("negative form degree")
        self.n_vars = n_vars
        self.degree = degree
        clean: dict[Index, RationalFunction] = {}
        for idx, value in (components or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise DimensionError(f"component {idx} has wrong arity for degree {degree}")
            if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
                raise DimensionError(f"component index {idx} is not strictly increasing")
            if idx and (idx[0] < 0 or idx[-1] >= n_vars):
                raise DimensionError(f"component index {idx} out of range")
            coeff = RationalFunction._coerce(value, n_vars)
            if coeff.is_zero:
                continue
            if coeff.n_vars != n_vars:
                raise DimensionError("component coefficient from a different ring")
            clean[idx] = coeff
        self.components = clean

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int, degree: int) -> "DifferentialForm":
        return cls(n_vars, degree)

    @classmethod
    def from_function(cls, value: Coefficient, n_vars: Optional[int] = None) -> "DifferentialForm":
        """Wrap a scalar/polynomial/rational function as a 0-form."""
        if isinstance(value, (MultiPoly, RationalFunction)):
            n_vars = value.n_vars
        elif n_vars is None:
            raise DimensionError("n_vars required for a scalar 0-form")
        return cls(n_vars, 0, {(): value})

    @classmethod
    def dx(cls, n_vars: int, var: int) -> "DifferentialForm":
        """The coordinate 1-form for the 0-based variable ``var``."""
        if not 0 <= var < n_vars:
            raise DimensionError(f"variable index {var} out of range")
        return cls(n_vars, 1, {(var,): Fraction(1)})

    # -- predicates --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.components

    def component(self, idx: Iterable[int]) -> RationalFunction:
        return self.components.get(tuple(idx),
                                   RationalFunction.from_scalar(self.n_vars, 0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        if self.n_vars != other.n_vars or self.degree != other.degree:
            return False
        for idx in set(self.components) | set(other.components):
            if self.component(idx) != other.component(idx):
                return False
        return True

    __hash__ = None

    # -- linear structure ----------------------------------------------------------

    def _check_compatible(self, other: "DifferentialForm") -> None:
        if self.n_vars != other.n_vars:
            raise DimensionError("forms over different rings")
        if self.degree != other.degree:
            raise DimensionError("forms of different degree")

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        self._check_compatible(other)
        out = dict(self.components)
        for idx, coeff in other.components.items():
            cur = out.get(idx)
            total = coeff if cur is None else cur + coeff
            if total.is_zero:
                out.pop(idx, None)
            else:
                out[idx] = total
        result = DifferentialForm(self.n_vars, self.degree)
        result.components = out
        return result

    def __neg__(self) -> "DifferentialForm":
        result = DifferentialForm(self.n_vars, self.degree)
        result.components = {idx: -c for idx, c in self.components.items()}
        return result

    def __sub__(self, other: "DifferentialForm") -> "DifferentialForm":
        return self.__add__(other.__neg__())

    def scale(self, factor: Coefficient) -> "DifferentialForm":
        """Multiply every component by a function (0-form scaling)."""
        factor = RationalFunction._coerce(factor, self.n_vars)
        if factor.is_zero:
            return DifferentialForm.zero(self.n_vars, self.degree)
        result = DifferentialForm(self.n_vars, self.degree)
        result.components = {idx: c * factor for idx, c in self.components.items()}
        return result

    def __mul__(self, factor: Coefficient) -> "DifferentialForm":
        return self.scale(factor)

    __rmul__ = __mul__

    # -- exterior algebra --------------------------------------------------------------

    def wedge(self, other: "DifferentialForm") -> "DifferentialForm":
        if self.n_vars != other.n_vars:
            raise DimensionError("forms over different rings")
        degree = self.degree + other.degree
        out: dict[Index, RationalFunction] = {}
        for idx_a, coeff_a in self.components.items():
            for idx_b, coeff_b in other.components.items():
                merged = _merge_indices(idx_a, idx_b)
                if merged is None:
                    continue
                sign, idx = merged
                piece = coeff_a * coeff_b
                if sign < 0:
                    piece = -piece
                cur = out.get(idx)
                total = piece if cur is None else cur + piece
                if total.is_zero:
                    out.pop(idx, None)
                else:
                    out[idx] = total
        result = DifferentialForm(self.n_vars, degree)
        result.components = out
        return result

    def exterior_derivative(self) -> "DifferentialForm":
        """d(f dx_I) summed over components: each variable differentiates f
        and wedges in from the left with the appropriate shuffle sign."""
        out: dict[Index, RationalFunction] = {}
        for idx, coeff in self.components.items():
            for var in range(self.n_vars):
                if var in idx:
                    continue
                partial = coeff.derivative(var)
                if partial.is_zero:
                    continue
                position = sum(1 for i in idx if i < var)
                if position % 2:
                    partial = -partial
                key = tuple(sorted(idx + (var,)))
                cur = out.get(key)
                total = partial if cur is None else cur + partial
                if total.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = total
        result = DifferentialForm(self.n_vars, self.degree + 1)
        result.components = out
        return result

    # -- output -----------------------------------------------------------------------

    def text(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.components:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.n_vars)]
        pieces = []
        for idx in sorted(self.components):
            coeff = self.components[idx]
            body = coeff.text(names)
            if (" + " in body or " - " in body) and not body.startswith("("):
                body = f"({body})"
            basis = "^".join(f"d{names[i]}" for i in idx)
            pieces.append(f"{body} {basis}".strip())
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"DifferentialForm(degree={self.degree}, {self.text()!r})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "components": [
                {
                    "idx": [i + 1 for i in idx],
                    "num": poly_to_json(self.components[idx].num),
                    "den": poly_to_json(self.components[idx].den),
                }
                for idx in sorted(self.components)
            ],
        }


class LambdaForm:
    """A polynomial in the spectral parameter whose coefficients are forms."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[DifferentialForm]):
        if not coefficients:
            raise DimensionError("a LambdaForm needs at least one coefficient")
        n_vars = coefficients[0].n_vars
        degree = coefficients[0].degree
        for form in coefficients:
            if form.n_vars != n_vars or form.degree != degree:
                raise DimensionError("LambdaForm coefficients must match in ring and degree")
        self.coefficients = tuple(coefficients)

    @property
    def n_vars(self) -> int:
        return self.coefficients[0].n_vars

    @property
    def form_degree(self) -> int:
        return self.coefficients[0].degree

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coefficients)

    def coefficient(self, m: int) -> DifferentialForm:
        if 0 <= m < len(self.coefficients):
            return self.coefficients[m]
        return DifferentialForm.zero(self.n_vars, self.form_degree)

    def at(self, value: Scalar) -> DifferentialForm:
        """Evaluate the parameter polynomial at an exact number."""
        value = Fraction(value)
        total = DifferentialForm.zero(self.n_vars, self.form_degree)
        power = Fraction(1)
        for form in self.coefficients:
            total = total + form.scale(power)
            power *= value
        return total

    def d(self) -> "LambdaForm":
        return LambdaForm([c.exterior_derivative() for c in self.coefficients])

    def wedge(self, other: "LambdaForm") -> "LambdaForm":
        """Coefficient-wise convolution of the two parameter polynomials."""
        if self.n_vars != other.n_vars:
            raise DimensionError("LambdaForms over different rings")
        degree = self.form_degree + other.form_degree
        size = len(self.coefficients) + len(other.coefficients) - 1
        out = [DifferentialForm.zero(self.n_vars, degree) for _ in range(size)]
        for i, a in enumerate(self.coefficients):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coefficients):
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a.wedge(b)
        return LambdaForm(out)
