"""Inscribing complete intersections with a prescribed tangent at one node.

Everything here works in the affine chart of a node's canonical
representative: the chart is the position of the trailing 1, and chart-local
vectors list the remaining n coordinates in order.  The conormal directions
available at a node p are spanned by the differentials of the n group
products; prescribing a tangent subspace tau at p singles out the
combinations of group products whose differentials annihilate tau, and those
combinations cut the unique inscribed variety.  Its tangent space at any
other node is then forced, and reading those forced tangents off is exact
linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cage import Cage, Node
from .errors import ShapeError, SingularNodeError
from .field import FieldElement
from .linalg import Matrix, SubspaceBasis, kernel_basis, rank, span_equal
from .poly import HomogPoly

Vector = tuple[FieldElement, ...]


def chart_of(node: Node) -> int:
    """Chart index of a canonical point: position of its trailing 1."""
    for i in range(len(node.point) - 1, -1, -1):
        if not node.point[i].is_zero():
            return i
    raise ValueError("node has a zero point")


@dataclass(frozen=True)
class TangentSubspace:
    """A linear subspace of the tangent space at a node, in chart-local
    coordinates (all coordinates except the chart one, in order)."""

    node: Node
    chart: int
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def make_tangent(node: Node, vectors: Sequence[Sequence]) -> TangentSubspace:
    """Tangent subspace at a node from chart-local vectors.

    Vectors must be linearly independent and have n entries (ambient
    coordinates minus the chart one).
    """
    field = node.point[0].field
    n = len(node.point) - 1
    vecs = tuple(tuple(field.coerce(x) for x in v) for v in vectors)
    for v in vecs:
        if len(v) != n:
            raise ShapeError(f"tangent vectors need {n} chart-local entries")
    if vecs and rank(Matrix(field, vecs)) != len(vecs):
        raise ValueError("tangent vectors are linearly dependent")
    return TangentSubspace(node, chart_of(node), vecs)


@dataclass(frozen=True)
class LambdaMatrix:
    """Row coefficients of pencil combinations cutting an inscribed variety.

    Each of the s rows gives one combination of the cage's n group products;
    the rows are linearly independent and canonical (reduced echelon form),
    and only their span is geometrically meaningful.
    """

    cage: Cage
    rows: tuple[Vector, ...]

    @property
    def s(self) -> int:
        return len(self.rows)

    def polynomials(self) -> tuple[HomogPoly, ...]:
        return tuple(self.cage.pencil(row) for row in self.rows)

    def row_span(self) -> SubspaceBasis:
        return SubspaceBasis(self.cage.n, self.rows)

    def same_variety(self, other: "LambdaMatrix") -> bool:
        return span_equal(self.row_span(), other.row_span())


def node_differentials(cage: Cage, node: Node) -> Matrix:
    """n x n matrix whose row j is the chart-local differential of the j-th
    group product at the node.

    Invertible at every node of a valid cage: exactly one factor of each
    product vanishes there, so row j is a nonzero multiple of that factor's
    differential, and the n factors are transversal.
    """
    chart = chart_of(node)
    rows = []
    for j in range(cage.n):
        grads = cage.group_gradient(j)
        full = [grads[i].evaluate(node.point) for i in range(cage.n + 1)]
        rows.append([full[i] for i in range(cage.n + 1) if i != chart])
    return Matrix(cage.field, rows)


def inscribe_with_tangent(cage: Cage, node: Node,
                          tangent: TangentSubspace) -> LambdaMatrix:
    """The unique codimension-s inscribed variety tangent to `tangent`.

    s = n - tangent.dim must be at least 1.  The rows returned span all
    pencil combinations whose differential at the node annihilates the
    prescribed tangent subspace.
    """
    if tangent.node.index != node.index:
        raise ValueError("tangent subspace is attached to a different node")
    if tangent.chart != chart_of(node):
        raise ValueError("tangent chart differs from the node's chart")
    n = cage.n
    s = n - tangent.dim
    if s < 1:
        raise ValueError("full-dimensional tangent prescribes nothing")
    diff = node_differentials(cage, node)
    if tangent.dim == 0:
        rows = Matrix.identity(cage.field, n).entries
        return LambdaMatrix(cage, rows)
    constraints = Matrix(cage.field, [
        [_dot(cage.field, diff.row(j), v) for j in range(n)]
        for v in tangent.basis])
    kernel = kernel_basis(constraints)
    if kernel.dim != s:
        raise SingularNodeError(
            f"expected a {s}-dimensional solution, got {kernel.dim}")
    return LambdaMatrix(cage, kernel.vectors)


def tangent_at_node(variety: LambdaMatrix, cage, node: Node = None
                    ) -> TangentSubspace:
    """Tangent space of the inscribed variety at any node of its cage.

    The cage argument may be omitted (it is carried by the variety), so both
    tangent_at_node(v, q) and tangent_at_node(v, c, q) work.  The chart-local
    Jacobian at the node is the lambda rows times the node differentials; it
    must have full rank s, matching smoothness of the variety at every node.
    """
    if node is None:
        cage, node = variety.cage, cage
    diff = node_differentials(cage, node)
    jac = Matrix(cage.field, [diff.transpose().matvec(row)
                              for row in variety.rows])
    if rank(jac) != variety.s:
        raise SingularNodeError(
            f"variety is singular at node {node.index}")
    kernel = kernel_basis(jac)
    return TangentSubspace(node, chart_of(node), kernel.vectors)


def propagate_tangents(cage: Cage, node: Node,
                       tangent: TangentSubspace) -> Mapping[tuple, TangentSubspace]:
    """Inscribe at one node, then read the forced tangent at every node.

    Returns an index-keyed map over all nodes; the entry at the starting
    node recovers the prescribed subspace.
    """
    variety = inscribe_with_tangent(cage, node, tangent)
    return {q.index: tangent_at_node(variety, q) for q in cage.nodes()}


def transport_tangent(tangent: TangentSubspace, g: Matrix,
                      image_node: Node) -> TangentSubspace:
    """Push a tangent subspace forward along a projective map.

    image_node must be the image of tangent.node under g, already in
    canonical form.  Lifts each chart-local vector to the cone, applies g,
    and rewrites in the image node's chart.
    """
    field = tangent.node.point[0].field
    src = tangent.node.point
    if g.rows != len(src) or g.cols != len(src):
        raise ShapeError("transport needs a square matrix of ambient size")
    big_q = g.matvec(src)
    new_chart = chart_of(image_node)
    qc = big_q[new_chart]
    if qc.is_zero():
        raise ValueError("image point leaves the target chart")
    new_basis = []
    for v in tangent.basis:
        lift = list(v[:tangent.chart]) + [field.zero()] + list(v[tangent.chart:])
        w = g.matvec(lift)
        wc = w[new_chart]
        local = [w[i] * qc - big_q[i] * wc
                 for i in range(len(src)) if i != new_chart]
        new_basis.append(tuple(local))
    return TangentSubspace(image_node, new_chart, tuple(new_basis))


def _dot(field, u, v):
    acc = field.zero()
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc
