"""Exact verification of interpolation, rigidity, slicing and smoothness.

All checks reduce to ranks and kernels of evaluation matrices: rows are
points, columns are the degree-k monomials.  Results come back as structured
reports whose every numeric claim (ranks, dimensions, cardinalities) can be
recomputed from the cage alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cage import (Cage, Node, NodeSelection, all_indices, canonical_point,
                   simplicial_indices, supra_simplicial_indices)
from .errors import ShapeError
from .field import FieldDescriptor, FieldElement
from .inscribe import LambdaMatrix
from .linalg import (Matrix, SubspaceBasis, in_span, kernel_basis, rank,
                     span_equal)
from .poly import HomogPoly, LinearForm, monomial_basis, _coordinate_powers


# -- report plumbing ---------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: dict
    witness: Optional[HomogPoly] = None


@dataclass(frozen=True)
class VerificationReport:
    subject: dict
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def merged_with(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.subject, self.checks + other.checks)


# -- evaluation matrices and Hilbert functions -------------------------------

@dataclass(frozen=True)
class EvalMatrix:
    """Evaluation of all degree-`degree` monomials at a fixed point list."""

    matrix: Matrix
    degree: int
    indices: Optional[tuple] = None


def _point_tuples(points) -> list[tuple[FieldElement, ...]]:
    out = []
    for p in points:
        pt = p.point if isinstance(p, Node) else tuple(p)
        out.append(pt)
    return out


def _infer_field(pts, field) -> FieldDescriptor:
    if field is not None:
        return field
    for pt in pts:
        for c in pt:
            if isinstance(c, FieldElement):
                return c.field
    raise ValueError("pass field= when points carry no field elements")


def evaluation_matrix(points, degree: int, field: FieldDescriptor = None,
                      indices=None) -> EvalMatrix:
    """Rows indexed by points, columns by monomial_basis(degree, arity).

    The field is read off the points themselves; the keyword exists for
    point lists given as plain rationals.
    """
    pts = _point_tuples(points)
    field = _infer_field(pts, field)
    if not pts:
        nv = 1
    else:
        nv = len(pts[0])
        if any(len(p) != nv for p in pts):
            raise ShapeError("points have inconsistent arity")
    basis = monomial_basis(degree, nv)
    rows = []
    one = field.one()
    for pt in pts:
        powers = _coordinate_powers(field, pt, degree)
        row = []
        for exp in basis:
            val = one
            for i, e in enumerate(exp):
                if e:
                    val = val * powers[i][e]
            row.append(val)
        rows.append(row)
    matrix = Matrix(field, rows) if rows else Matrix(field, [])
    return EvalMatrix(matrix, degree, indices)


def _separating_form(field: FieldDescriptor,
                     points: Sequence[tuple[FieldElement, ...]]):
    """A linear form vanishing at none of the points.

    Tries coefficient vectors (1, t, t^2, ...) for t = 0, 1, 2, ...; each
    point rules out at most arity-1 values of t, so the scan terminates
    within (arity-1) * len(points) + 1 steps.
    """
    nv = len(points[0])
    bound = (nv - 1) * len(points) + 1
    for t in range(bound):
        coeffs = [field.from_rational(Fraction(t) ** i) for i in range(nv)]
        form = LinearForm(field, coeffs)
        if all(not form.evaluate(p).is_zero() for p in points):
            return form
    raise RuntimeError("separating form scan exhausted its provable bound")


def hilbert_table(points, k_max: int,
                  field: FieldDescriptor = None) -> tuple[int, ...]:
    """Hilbert function values h(0..k_max) of a finite reduced point set.

    Ranks are computed directly until the function reaches the point count.
    From there on the value stays put: scaling the degree-k0 columns by
    powers of a linear form that vanishes at no point embeds the stabilized
    evaluation matrix into every higher degree, so the rank cannot drop, and
    it cannot exceed the point count.  The separating form is constructed
    explicitly, which makes the shortcut a certificate rather than an
    assumption.
    """
    raw = _point_tuples(points)
    field = _infer_field(raw, field) if raw else field
    pts = [canonical_point(tuple(field.coerce(c) for c in p)) for p in raw]
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in Hilbert function input")
    count = len(pts)
    values = []
    stabilized = False
    for k in range(k_max + 1):
        if stabilized:
            values.append(count)
            continue
        if count == 0:
            values.append(0)
            continue
        r = rank(evaluation_matrix(pts, k, field=field).matrix)
        values.append(r)
        if r == count:
            _separating_form(field, pts)
            stabilized = True
    return tuple(values)


def hilbert_function(points, k: int, field: FieldDescriptor = None) -> int:
    """Rank of the degree-k evaluation matrix of a duplicate-free point set."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return hilbert_table(points, k, field=field)[k]


# -- interpolation and rigidity ----------------------------------------------

def group_span(cage: Cage) -> SubspaceBasis:
    """Coefficient-vector span of the n group products."""
    vectors = tuple(cage.group_polynomial(j).coefficient_vector()
                    for j in range(cage.n))
    return SubspaceBasis(len(vectors[0]), vectors)


def verify_supra_interpolation(cage: Cage) -> VerificationReport:
    """Degree-d forms through the supra-simplicial nodes are exactly the
    combinations of the n group products.

    Checks, in order: the supra evaluation matrix has full row rank, its
    kernel has dimension n, the kernel coincides with the span of the group
    products, and every kernel element vanishes on all d^n nodes, not just
    the selected ones.
    """
    cage.validate()
    supra = supra_simplicial_indices(cage.d, cage.n)
    pts = cage.nodes_for(supra)
    ev = evaluation_matrix(pts, cage.d, indices=supra.indices)
    kernel = kernel_basis(ev.matrix)
    r = ev.matrix.cols - kernel.dim
    checks = [CheckResult(
        "supra-evaluation-rank", r == len(supra),
        {"rank": r, "selection-size": len(supra),
         "columns": ev.matrix.cols})]
    checks.append(CheckResult(
        "kernel-dimension", kernel.dim == cage.n,
        {"kernel-dim": kernel.dim, "expected": cage.n}))
    span = group_span(cage)
    same = span_equal(kernel, span) if kernel.dim == span.dim else False
    witness = None
    if not same:
        for vec in kernel.vectors:
            if not in_span(vec, span):
                witness = HomogPoly.from_coefficients(
                    cage.field, cage.n + 1, cage.d, vec)
                break
    checks.append(CheckResult(
        "kernel-equals-group-span", same,
        {"kernel-dim": kernel.dim, "group-span-dim": span.dim}, witness))
    bad = None
    all_vanish = True
    for vec in kernel.vectors:
        poly = HomogPoly.from_coefficients(cage.field, cage.n + 1, cage.d, vec)
        for node in cage.nodes():
            if not poly.evaluate(node.point).is_zero():
                all_vanish = False
                bad = poly
                break
        if not all_vanish:
            break
    checks.append(CheckResult(
        "kernel-vanishes-on-all-nodes", all_vanish,
        {"node-count": len(cage.nodes())}, bad))
    return VerificationReport(cage.summary(), tuple(checks))


def _simplicial_rank(cage: Cage):
    simp = simplicial_indices(cage.d, cage.n)
    pts = cage.nodes_for(simp)
    ev = evaluation_matrix(pts, cage.d - 1, indices=simp.indices)
    return simp, ev, rank(ev.matrix)


def verify_degree_minimality(cage: Cage) -> VerificationReport:
    """No nonzero form of degree d-1 passes through the simplicial nodes."""
    cage.validate()
    simp, ev, r = _simplicial_rank(cage)
    trivial = r == ev.matrix.cols
    return VerificationReport(cage.summary(), (CheckResult(
        "simplicial-lower-degree-kernel-trivial", trivial,
        {"rank": r, "columns": ev.matrix.cols,
         "selection-size": len(simp)}),))


def verify_simplicial_rigidity(cage: Cage) -> VerificationReport:
    """The simplicial nodes of a size-(k+1) cage rigidly pin degree-k forms:
    the square evaluation matrix in degree k = d-1 is invertible."""
    cage.validate()
    simp, ev, r = _simplicial_rank(cage)
    square = len(simp) == ev.matrix.cols
    checks = (
        CheckResult("simplicial-matrix-square", square,
                     {"selection-size": len(simp),
                      "columns": ev.matrix.cols}),
        CheckResult("simplicial-matrix-invertible",
                     square and r == ev.matrix.cols,
                     {"rank": r, "size": ev.matrix.cols}),
    )
    return VerificationReport(cage.summary(), checks)


# -- slicing and Cayley-Bacharach --------------------------------------------

def fubini_slice_check(cage: Cage,
                       k_max: Optional[int] = None) -> VerificationReport:
    """Hilbert function additivity across the first-color slices.

    For every k, h of the full node set equals the sum over s of h of the
    slice node sets (first index = s) evaluated at k-(s-1), with negative
    arguments contributing zero.
    """
    cage.validate()
    nodes = cage.nodes()
    if k_max is None:
        k_max = len(nodes)
    full = hilbert_table(nodes, k_max)
    slices = []
    for s in range(1, cage.d + 1):
        part = [nd for nd in nodes if nd.index[0] == s]
        slices.append(hilbert_table(part, k_max))
    mismatches = []
    for k in range(k_max + 1):
        lhs = full[k]
        rhs = 0
        for s in range(1, cage.d + 1):
            shifted = k - (s - 1)
            if shifted >= 0:
                rhs += slices[s - 1][shifted]
        if lhs != rhs:
            mismatches.append({"k": k, "lhs": lhs, "rhs": rhs})
    return VerificationReport(cage.summary(), (CheckResult(
        "slice-additivity", not mismatches,
        {"k-max": k_max, "mismatches": mismatches}),))


def _partition_indices(cage: Cage, partition):
    part1 = tuple(tuple(i) for i in partition[0])
    part2 = tuple(tuple(i) for i in partition[1])
    everything = set(all_indices(cage.d, cage.n))
    if set(part1) | set(part2) != everything or set(part1) & set(part2):
        raise ValueError("partition must split the index grid exactly")
    return part1, part2


def cayley_bacharach_check(cage: Cage, partition, k: int) -> VerificationReport:
    """Conditions a plane cage's nodes impose on degree-k curves split.

    For a bipartition X = X1 + X2 of the d^2 nodes of a plane cage and
    0 <= k <= 2d-3, the failure of X1 to impose independent conditions in
    degree k equals the failure of X2 in the complementary degree 2d-3-k:
    h_X(k) - h_X1(k) = |X2| - h_X2(2d-3-k).
    """
    cage.validate()
    if cage.n != 2:
        raise ValueError("this identity is implemented for plane cages only")
    socle = 2 * cage.d - 3
    if not 0 <= k <= socle:
        raise ValueError(f"degree {k} outside [0, {socle}]")
    part1, part2 = _partition_indices(cage, partition)
    x1 = [cage.node(i) for i in part1]
    x2 = [cage.node(i) for i in part2]
    h_x = hilbert_function(cage.nodes(), k)
    h_x1 = hilbert_function(x1, k) if x1 else 0
    h_x2 = hilbert_function(x2, socle - k) if x2 else 0
    lhs = h_x - h_x1
    rhs = len(x2) - h_x2
    return VerificationReport(cage.summary(), (CheckResult(
        "cayley-bacharach", lhs == rhs,
        {"k": k, "socle": socle, "lhs": lhs, "rhs": rhs,
         "split": [len(x1), len(x2)]}),))


def transversal_points(field: FieldDescriptor, lines_a: Sequence[LinearForm],
                       lines_b: Sequence[LinearForm]):
    """Pairwise intersection points of two families of plane lines.

    Requires every pair to meet in a single point and all points distinct;
    the result is keyed by the (i, j) pair, both 1-based.
    """
    points = {}
    seen = {}
    for i, la in enumerate(lines_a, start=1):
        for j, lb in enumerate(lines_b, start=1):
            kernel = kernel_basis(Matrix(field, [la.coeffs, lb.coeffs]))
            if kernel.dim != 1:
                raise ValueError(f"lines ({i},{j}) do not meet transversally")
            pt = canonical_point(kernel.vectors[0])
            if pt in seen:
                raise ValueError(
                    f"intersection ({i},{j}) coincides with {seen[pt]}")
            seen[pt] = (i, j)
            points[(i, j)] = pt
    return points


def cayley_bacharach_pair(field: FieldDescriptor,
                          lines_a: Sequence[LinearForm],
                          lines_b: Sequence[LinearForm],
                          partition, k: int) -> VerificationReport:
    """The same splitting identity on a complete intersection of two line
    products of degrees d and e, socle degree d+e-3."""
    d, e = len(lines_a), len(lines_b)
    socle = d + e - 3
    if not 0 <= k <= socle:
        raise ValueError(f"degree {k} outside [0, {socle}]")
    points = transversal_points(field, lines_a, lines_b)
    part1 = [tuple(p) for p in partition[0]]
    part2 = [tuple(p) for p in partition[1]]
    if set(part1) | set(part2) != set(points) or set(part1) & set(part2):
        raise ValueError("partition must split the intersection grid exactly")
    x = list(points.values())
    x1 = [points[p] for p in part1]
    x2 = [points[p] for p in part2]
    h_x = hilbert_function(x, k, field=field)
    h_x1 = hilbert_function(x1, k, field=field) if x1 else 0
    h_x2 = hilbert_function(x2, socle - k, field=field) if x2 else 0
    lhs = h_x - h_x1
    rhs = len(x2) - h_x2
    return VerificationReport(
        {"d": d, "e": e, "field": field.label},
        (CheckResult("cayley-bacharach-pair", lhs == rhs,
                     {"k": k, "socle": socle, "lhs": lhs, "rhs": rhs}),))


# -- smoothness ---------------------------------------------------------------

def smoothness_check(variety: LambdaMatrix,
                     cage: Optional[Cage] = None) -> VerificationReport:
    """The inscribed variety passes through every node smoothly: each
    defining pencil vanishes on all nodes and the full Jacobian has rank
    exactly s everywhere on the node set."""
    if cage is None:
        cage = variety.cage
    cage.validate()
    if rank(Matrix(cage.field, variety.rows)) != variety.s:
        raise ValueError("lambda rows are linearly dependent")
    polys = variety.polynomials()
    vanish = True
    vanish_witness = None
    for poly in polys:
        for node in cage.nodes():
            if not poly.evaluate(node.point).is_zero():
                vanish = False
                vanish_witness = poly
                break
        if not vanish:
            break
    checks = [CheckResult("pencils-vanish-on-nodes", vanish,
                          {"s": variety.s, "node-count": len(cage.nodes())},
                          vanish_witness)]
    grads = [[cage.group_gradient(j)[i] for i in range(cage.n + 1)]
             for j in range(cage.n)]
    bad_nodes = []
    for node in cage.nodes():
        grad_rows = [[g.evaluate(node.point) for g in grads[j]]
                     for j in range(cage.n)]
        gm = Matrix(cage.field, grad_rows)
        jac = Matrix(cage.field, [gm.transpose().matvec(row)
                                  for row in variety.rows])
        if rank(jac) != variety.s:
            bad_nodes.append(node.index)
    checks.append(CheckResult(
        "jacobian-rank-at-nodes", not bad_nodes,
        {"expected-rank": variety.s, "singular-nodes": bad_nodes}))
    return VerificationReport(cage.summary(), tuple(checks))


def complete_intersection_span_check(polys: Sequence[HomogPoly],
                                     cage: Cage) -> bool:
    """Whether every given degree-d form is a combination of the group
    products.

    Vanishing on all d^n nodes is a precondition and is checked; a
    non-vanishing input is a usage error, not a False result.
    """
    cage.validate()
    span = group_span(cage)
    nodes = cage.nodes()
    for poly in polys:
        if poly.num_vars != cage.n + 1 or poly.degree != cage.d:
            raise ShapeError(
                f"expected degree {cage.d} in {cage.n + 1} variables, got "
                f"degree {poly.degree} in {poly.num_vars}")
        for node in nodes:
            if not poly.evaluate(node.point).is_zero():
                raise ValueError(
                    f"input does not vanish at node {node.index}")
    return all(in_span(p.coefficient_vector(), span) for p in polys)


# -- the deficient selection -------------------------------------------------

def independence_counterexample() -> VerificationReport:
    """Node count alone does not control interpolation.

    On the 4x4 axis grid over {0,1,2,3}^2, removing the three nodes indexed
    (4,2), (4,3), (4,4) leaves 13 nodes, the same count as the
    supra-simplicial selection, yet degree-4 curves through the 13 leftover
    nodes form a strictly larger family: the kernel jumps to dimension >= 3
    and contains a product of lines outside the group-product span.
    """
    from .cage import axis_cage
    field = FieldDescriptor.rationals()
    grid = [(i, i) for i in range(4)]
    cage = axis_cage(field, grid)
    removed = {(4, 2), (4, 3), (4, 4)}
    deficient = NodeSelection("deficient", tuple(
        i for i in all_indices(4, 2) if i not in removed))
    supra = supra_simplicial_indices(4, 2)
    checks = [CheckResult(
        "same-cardinality", len(deficient) == len(supra),
        {"deficient": len(deficient), "supra": len(supra)})]
    ev_supra = evaluation_matrix(cage.nodes_for(supra), 4)
    k_supra = kernel_basis(ev_supra.matrix)
    checks.append(CheckResult(
        "supra-kernel-dimension", k_supra.dim == 2,
        {"kernel-dim": k_supra.dim, "expected": 2}))
    ev_def = evaluation_matrix(cage.nodes_for(deficient), 4)
    k_def = kernel_basis(ev_def.matrix)
    checks.append(CheckResult(
        "deficient-kernel-dimension", k_def.dim >= 3,
        {"kernel-dim": k_def.dim, "expected-at-least": 3}))
    # explicit extra curve: three vertical lines and one horizontal line
    factors = [LinearForm(field, [1, 0, 0]),
               LinearForm(field, [1, 0, -1]),
               LinearForm(field, [1, 0, -2]),
               LinearForm(field, [0, 1, 0])]
    from .poly import product_of_linear_forms
    extra = product_of_linear_forms(factors)
    vanishes = all(extra.evaluate(cage.node(i).point).is_zero()
                   for i in deficient.indices)
    misses = all(not extra.evaluate(cage.node(i).point).is_zero()
                 for i in sorted(removed))
    outside = not in_span(extra.coefficient_vector(), group_span(cage))
    checks.append(CheckResult(
        "witness-through-deficient-only", vanishes and misses, {}, extra))
    checks.append(CheckResult(
        "witness-outside-group-span", outside, {}, extra))
    in_kernel = in_span(extra.coefficient_vector(), k_def)
    checks.append(CheckResult(
        "witness-in-deficient-kernel", in_kernel, {}, extra))
    return VerificationReport(cage.summary(), tuple(checks))


# -- suites -------------------------------------------------------------------

SUITE_CHECKS = ("validation", "interpolation", "minimality", "rigidity",
                "fubini")
DEFAULT_SUITE = ("validation", "interpolation", "minimality")


def run_suite(cage: Cage, checks: Sequence[str] = DEFAULT_SUITE
              ) -> VerificationReport:
    """Run the named cage-level checks and merge their reports.

    "fubini" is opt-in: its Hilbert tables grow with the node count and the
    default suite stays fast on large cages.  A cage that fails validation
    short-circuits to a single failed check: none of the node-level
    statements are meaningful without the node set.
    """
    gate = cage.validate()
    if not gate.valid:
        return VerificationReport(cage.summary(), (CheckResult(
            "validation", False,
            {"node-count": gate.node_count,
             "failures": [f"{f.kind} at {f.index}" for f in gate.failures],
             "skipped": [c for c in checks if c != "validation"]}),))
    report = VerificationReport(cage.summary(), ())
    for name in checks:
        if name == "validation":
            v = cage.validate()
            report = report.merged_with(VerificationReport(
                cage.summary(), (CheckResult(
                    "validation", v.valid,
                    {"node-count": v.node_count,
                     "failures": [f"{f.kind} at {f.index}"
                                  for f in v.failures]}),)))
        elif name == "interpolation":
            report = report.merged_with(verify_supra_interpolation(cage))
        elif name == "minimality":
            report = report.merged_with(verify_degree_minimality(cage))
        elif name == "rigidity":
            report = report.merged_with(verify_simplicial_rigidity(cage))
        elif name == "fubini":
            report = report.merged_with(fubini_slice_check(cage))
        else:
            raise ValueError(f"unknown check {name!r}")
    return report
