"""Cages of hyperplanes in projective n-space and their node combinatorics.

A cage of size d in P^n is n color groups of d hyperplanes each, such that
every choice of one hyperplane per color meets in a single point and the
resulting d^n nodes are pairwise distinct, with no node lying on any
hyperplane it does not index.  Nodes carry their multi-index I in [1,d]^n;
the norm of an index is the sum of its entries.

Two distinguished node selections drive everything downstream: the
simplicial set (norm <= d+n-1, which has C(d+n-1, n) elements) and the
supra-simplicial set (norm <= d+n, which has C(d+n, n) - n elements).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .errors import CageValidationError, MustValidateError, ShapeError
from .field import FieldDescriptor, FieldElement
from .linalg import Matrix, invert, kernel_basis
from .poly import HomogPoly, LinearForm, product_of_linear_forms

Index = tuple[int, ...]


def norm(index: Index) -> int:
    return sum(index)


def all_indices(d: int, n: int) -> tuple[Index, ...]:
    """Every multi-index in [1,d]^n, lexicographic."""
    return tuple(itertools.product(range(1, d + 1), repeat=n))


@dataclass(frozen=True)
class NodeSelection:
    """A named subset of the multi-index grid [1,d]^n."""

    kind: str
    indices: tuple[Index, ...]

    def __len__(self):
        return len(self.indices)

    def __contains__(self, index):
        return tuple(index) in set(self.indices)


def simplicial_indices(d: int, n: int) -> NodeSelection:
    """Indices of norm <= d+n-1; exactly C(d+n-1, n) of them."""
    picked = tuple(i for i in all_indices(d, n) if norm(i) <= d + n - 1)
    assert len(picked) == comb(d + n - 1, n)
    return NodeSelection("simplicial", picked)


def supra_simplicial_indices(d: int, n: int) -> NodeSelection:
    """Indices of norm <= d+n; exactly C(d+n, n) - n of them."""
    picked = tuple(i for i in all_indices(d, n) if norm(i) <= d + n)
    assert len(picked) == comb(d + n, n) - n
    return NodeSelection("supra-simplicial", picked)


@dataclass(frozen=True)
class Node:
    """A cage node: its multi-index and canonical projective coordinates.

    The point is normalized so that its last nonzero coordinate is 1, which
    makes representatives directly comparable.
    """

    index: Index
    point: tuple[FieldElement, ...]


@dataclass(frozen=True)
class ValidationFailure:
    kind: str
    index: Index
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    node_count: int
    failures: tuple[ValidationFailure, ...]


def canonical_point(vector: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Scale a nonzero vector so its last nonzero coordinate becomes 1."""
    last = None
    for i in range(len(vector) - 1, -1, -1):
        if not vector[i].is_zero():
            last = i
            break
    if last is None:
        raise ValueError("zero vector has no projective normalization")
    inv = vector[last].inverse()
    return tuple(inv * v for v in vector)


class Cage:
    """n color groups of d hyperplanes each in P^n (so n+1 coordinates).

    Construction checks only the shape; call validate() to certify the
    transversality and distinctness conditions before asking for nodes.
    """

    __slots__ = ("field", "groups", "n", "d", "attempts",
                 "_report", "_nodes", "_node_by_index", "_group_polys",
                 "_group_grads")

    def __init__(self, field: FieldDescriptor,
                 groups: Sequence[Sequence[LinearForm]],
                 attempts: Optional[int] = None):
        groups = tuple(tuple(g) for g in groups)
        if not groups or not groups[0]:
            raise ShapeError("cage needs at least one color and one form")
        n = len(groups)
        d = len(groups[0])
        if any(len(g) != d for g in groups):
            raise ShapeError("all color groups must have the same size")
        for g in groups:
            for form in g:
                if form.field != field:
                    raise ShapeError("form field differs from cage field")
                if form.num_vars != n + 1:
                    raise ShapeError(
                        f"forms must have {n + 1} coordinates for n={n}")
        self.field = field
        self.groups = groups
        self.n = n
        self.d = d
        self.attempts = attempts
        self._report = None
        self._nodes = None
        self._node_by_index = None
        self._group_polys = {}
        self._group_grads = {}

    # -- validation and node access -------------------------------------

    def validate(self) -> ValidationReport:
        """Certify transversality, distinctness, and incidence exactness.

        The report lists one failure per offending index tuple; nodes become
        available only after a fully clean run.
        """
        if self._report is not None:
            return self._report
        failures: list[ValidationFailure] = []
        nodes: list[Node] = []
        seen: dict[tuple, Index] = {}
        for index in all_indices(self.d, self.n):
            rows = [self.groups[j][index[j] - 1].coeffs for j in range(self.n)]
            kernel = kernel_basis(Matrix(self.field, rows))
            if kernel.dim != 1:
                failures.append(ValidationFailure(
                    "degenerate-tuple", index,
                    f"hyperplane tuple meets in a {kernel.dim}-dimensional "
                    "solution space, expected a single point"))
                continue
            point = canonical_point(kernel.vectors[0])
            if point in seen:
                failures.append(ValidationFailure(
                    "coincident-nodes", index,
                    f"node coincides with node {seen[point]}"))
                continue
            seen[point] = index
            nodes.append(Node(index, point))
        # no node may lie on a hyperplane it does not index
        for node in nodes:
            for j in range(self.n):
                for i, form in enumerate(self.groups[j], start=1):
                    value = form.evaluate(node.point)
                    if value.is_zero() != (i == node.index[j]):
                        failures.append(ValidationFailure(
                            "incidence", node.index,
                            f"color {j + 1} hyperplane {i}: "
                            f"vanishing pattern violated"))
        valid = not failures
        report = ValidationReport(valid, len(nodes), tuple(failures))
        self._report = report
        if valid:
            self._nodes = tuple(nodes)
            self._node_by_index = {nd.index: nd for nd in nodes}
        return report

    def is_validated(self) -> bool:
        return self._report is not None and self._report.valid

    def _require_valid(self):
        if self._report is None:
            raise MustValidateError("call validate() before using nodes")
        if not self._report.valid:
            raise MustValidateError("cage failed validation")

    def nodes(self) -> tuple[Node, ...]:
        """All d^n nodes in lexicographic index order."""
        self._require_valid()
        return self._nodes

    def node(self, index) -> Node:
        self._require_valid()
        try:
            return self._node_by_index[tuple(index)]
        except KeyError:
            raise KeyError(f"no node with index {tuple(index)}") from None

    def nodes_for(self, selection: NodeSelection) -> tuple[Node, ...]:
        self._require_valid()
        return tuple(self._node_by_index[i] for i in selection.indices)

    # -- distinguished polynomials ---------------------------------------

    def group_polynomial(self, color: int) -> HomogPoly:
        """Product of the color's d hyperplane forms (colors counted from 0)."""
        if not 0 <= color < self.n:
            raise ShapeError(f"no color {color}")
        if color not in self._group_polys:
            self._group_polys[color] = product_of_linear_forms(
                self.groups[color])
        return self._group_polys[color]

    def group_polynomials(self) -> tuple[HomogPoly, ...]:
        return tuple(self.group_polynomial(j) for j in range(self.n))

    def group_gradient(self, color: int) -> tuple[HomogPoly, ...]:
        """Partial derivatives of group_polynomial(color), cached."""
        if color not in self._group_grads:
            poly = self.group_polynomial(color)
            self._group_grads[color] = tuple(
                poly.partial(i) for i in range(self.n + 1))
        return self._group_grads[color]

    def pencil(self, lambdas: Sequence) -> HomogPoly:
        """The combination sum(lambda_j * group_polynomial(j))."""
        if len(lambdas) != self.n:
            raise ShapeError(f"need {self.n} pencil coefficients")
        lams = [self.field.coerce(c) for c in lambdas]
        if all(c.is_zero() for c in lams):
            raise ValueError("degenerate pencil: all coefficients zero")
        acc = HomogPoly.zero(self.field, self.n + 1, self.d)
        for lam, poly in zip(lams, self.group_polynomials()):
            if not lam.is_zero():
                acc = acc + poly.scale(lam)
        return acc

    # -- derived cages ----------------------------------------------------

    def slice(self, s: int) -> "Cage":
        """Subcage cut by the s-th hyperplane of the first color.

        Keeps hyperplanes 1..d-s+1 of the remaining colors, restricted to
        the cut hyperplane, giving a size-(d-s+1) cage in P^(n-1).
        """
        self._require_valid()
        if not 1 <= s <= self.d:
            raise ValueError(f"slice index {s} outside [1, {self.d}]")
        if self.n < 2:
            raise ValueError("slicing needs at least two colors")
        cut = self.groups[0][s - 1].coeffs
        drop = min(i for i, c in enumerate(cut) if not c.is_zero())
        keep = [i for i in range(self.n + 1) if i != drop]
        scale = cut[drop].inverse()
        new_size = self.d - s + 1
        new_groups = []
        for j in range(1, self.n):
            forms = []
            for i in range(new_size):
                coeffs = self.groups[j][i].coeffs
                forms.append(LinearForm(self.field, [
                    coeffs[k] - coeffs[drop] * scale * cut[k] for k in keep]))
            new_groups.append(forms)
        sliced = Cage(self.field, new_groups)
        report = sliced.validate()
        if not report.valid:
            raise CageValidationError("slice failed validation", report)
        return sliced

    def transform(self, g: Matrix) -> "Cage":
        """Apply a projective change of coordinates to every hyperplane."""
        if g.rows != self.n + 1 or g.cols != self.n + 1:
            raise ShapeError(f"transform needs a {self.n + 1}-square matrix")
        try:
            ginv = invert(g)
        except ValueError:
            raise ValueError("transform matrix is singular") from None
        cols = ginv.transpose().entries
        new_groups = []
        for g_forms in self.groups:
            forms = []
            for form in g_forms:
                coeffs = [sum((c * e for c, e in zip(form.coeffs, col)),
                              self.field.zero()) for col in cols]
                forms.append(LinearForm(self.field, coeffs))
            new_groups.append(forms)
        out = Cage(self.field, new_groups)
        report = out.validate()
        if not report.valid:
            raise CageValidationError("transformed cage failed validation",
                                      report)
        return out

    def summary(self) -> dict:
        return {"n": self.n, "d": self.d, "field": self.field.label,
                "nodes": self.d ** self.n}

    def __repr__(self):
        return f"Cage(n={self.n}, d={self.d}, field={self.field.label})"


# -- constructors ------------------------------------------------------------

def axis_cage(field: FieldDescriptor, points: Sequence[Sequence]) -> Cage:
    """Axis-aligned cage through a grid of affine points.

    points is a list of d affine points in n coordinates; color j consists of
    the hyperplanes x_j = points[i][j].  Each coordinate must take d distinct
    values, otherwise the grid is degenerate.
    """
    if not points:
        raise ValueError("need at least one grid point")
    d = len(points)
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise ShapeError("grid points have inconsistent arity")
    values = [[field.coerce(p[j]) for p in points] for j in range(n)]
    for j in range(n):
        if len(set(values[j])) != d:
            raise ValueError(
                f"coordinate {j + 1} repeats a value; grid is not in "
                "general position")
    zero, one = field.zero(), field.one()
    groups = []
    for j in range(n):
        forms = []
        for i in range(d):
            coeffs = [zero] * (n + 1)
            coeffs[j] = one
            coeffs[n] = -values[j][i]
            forms.append(LinearForm(field, coeffs))
        groups.append(forms)
    cage = Cage(field, groups)
    report = cage.validate()
    if not report.valid:
        raise CageValidationError("axis cage failed validation", report)
    return cage


def random_cage(seed: int, d: int, n: int,
                field: Optional[FieldDescriptor] = None,
                max_attempts: int = 200) -> Cage:
    """Seeded random cage with small integer coefficients.

    Resamples whole candidates until validation passes; the accepted cage
    records how many attempts were used.  The same seed always yields the
    same cage.
    """
    if field is None:
        field = FieldDescriptor.rationals()
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        groups = []
        for _ in range(n):
            forms = []
            for _ in range(d):
                while True:
                    coeffs = [Fraction(rng.randint(-9, 9))
                              for _ in range(n + 1)]
                    if any(coeffs):
                        break
                forms.append(LinearForm(field, coeffs))
            groups.append(forms)
        cage = Cage(field, groups, attempts=attempt)
        if cage.validate().valid:
            return cage
    raise ValueError(f"no valid cage found in {max_attempts} attempts "
                     f"(seed {seed}, d={d}, n={n})")
