"""Degreewise cohomology of the differential: dimensions, representative
bases, class membership and products of classes.

Representatives are chosen deterministically: the reduced-echelon kernel
basis of d is projected off the boundary space and re-echelonized, so two
runs on the same input produce byte-identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .dg import DGSpec, d, d_matrix
from .fields import check_same_field
from .linalg import RowSpan
from .skew import GradedElement, degree_dim


class DegreeOverflowError(ValueError):
    """A class operation left the computed degree range."""


@dataclass
class CohomologyClass:
    degree: int
    representative: GradedElement
    coordinates: tuple

    @property
    def is_zero(self) -> bool:
        F = self.representative.field
        return all(F.is_zero(c) for c in self.coordinates)


@dataclass
class CohomologyReport:
    spec: DGSpec
    max_degree: int
    dims: list
    cocycle_ranks: list
    coboundary_ranks: list
    bases: list  # per degree, list of GradedElement representatives
    _boundaries: list = dataclass_field(default_factory=list, repr=False)
    _reps: list = dataclass_field(default_factory=list, repr=False)

    def class_of(self, z: GradedElement) -> CohomologyClass | None:
        """The class of a cocycle; None when z is not a cocycle.

        The zero class has all-zero coordinates.  The stored representative
        is the canonical combination of the report's basis representatives.
        """
        check_same_field(self.spec.field, z.field)
        deg = z.degree
        if deg > self.max_degree:
            raise DegreeOverflowError(f"degree {deg} beyond computed bound {self.max_degree}")
        if not d(self.spec, z).is_zero():
            return None
        F = self.spec.field
        residue = self._boundaries[deg].reduce(z.vector())
        coeffs = self._reps[deg].express(residue)
        if coeffs is None:
            raise AssertionError("cocycle outside boundary+representative span")
        rep = GradedElement.zero(F, deg)
        for c, basis_rep in zip(coeffs, self.bases[deg]):
            if not F.is_zero(c):
                rep = rep.add(basis_rep.scale(c))
        return CohomologyClass(deg, rep, tuple(coeffs))

    def class_product(self, u: CohomologyClass, v: CohomologyClass) -> CohomologyClass:
        """Class of representative(u) * representative(v)."""
        if u.degree + v.degree > self.max_degree:
            raise DegreeOverflowError(
                f"product degree {u.degree + v.degree} beyond bound {self.max_degree}")
        w = u.representative.mul(v.representative)
        cls = self.class_of(w)
        if cls is None:
            raise AssertionError("product of cocycles is not a cocycle")
        return cls

    def unit_class(self) -> CohomologyClass:
        return self.class_of(GradedElement.monomial(self.spec.field, (0, 0, 0)))

    def to_json(self) -> dict:
        return {
            "field": self.spec.field.name,
            "matrix": self.spec.matrix.to_json(),
            "max_degree": self.max_degree,
            "dims": list(self.dims),
            "cocycle_ranks": list(self.cocycle_ranks),
            "coboundary_ranks": list(self.coboundary_ranks),
            "bases": [[rep.render() for rep in degree] for degree in self.bases],
        }


def cohomology(spec: DGSpec, max_degree: int) -> CohomologyReport:
    """Exact dims and echelonized representative bases for degrees <= bound."""
    if max_degree < 2:
        raise ValueError("max_degree must be >= 2")
    F = spec.field

    mats = [d_matrix(spec, deg) for deg in range(max_degree + 1)]
    dims, zr, br, bases = [], [], [], []
    boundary_spans, rep_spans = [], []

    for deg in range(max_degree + 1):
        width = degree_dim(deg)
        kernel = mats[deg].kernel_basis()
        boundaries = RowSpan(F, width)
        if deg > 0:
            src_dim = degree_dim(deg - 1)
            for j in range(src_dim):
                col = tuple(mats[deg - 1][i, j] for i in range(width))
                boundaries.add(col)
        z_rank = len(kernel)
        b_rank = boundaries.dim

        # representatives: kernel vectors minus their boundary projection,
        # kept in reduced echelon form for canonical output
        reps = RowSpan(F, width)
        for v in kernel:
            reps.add(boundaries.reduce(v))
        basis_elems = [GradedElement.from_vector(F, deg, row) for row in reps.basis_rows()]

        dims.append(z_rank - b_rank)
        zr.append(z_rank)
        br.append(b_rank)
        bases.append(basis_elems)
        boundary_spans.append(boundaries)
        rep_spans.append(reps)

    report = CohomologyReport(spec, max_degree, dims, zr, br, bases)
    report._boundaries = boundary_spans
    report._reps = rep_spans
    return report
