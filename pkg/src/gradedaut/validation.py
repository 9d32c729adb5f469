"""Standing-assumption checks for a graded presentation R = S/I.

Every algorithm downstream assumes an effective pointed grading, a
lattice basis among the free parts of the generator weights, homogeneous
relations inside the square of the irrelevant ideal, and trivial ideal
components in the generator degrees.  The report collects all six flags
in one pass instead of failing at the first, so a bad input surfaces
every problem at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .errors import ValidationError
from .grading import check_effective, check_pointed
from .polynomials import (GradedPolyRing, Ideal, distinct_term_degrees,
                          ideal_component_basis, is_homogeneous)


@dataclass(frozen=True)
class ValidationReport:
    effective: bool
    pointed: bool
    generators_homogeneous: bool
    contained_in_square: bool
    variable_components_trivial: bool
    has_lattice_basis: bool
    messages: tuple[str, ...] = ()

    @property
    def grading_ok(self) -> bool:
        """The ideal-free flags used by the polynomial-ring stage."""
        return self.effective and self.pointed and self.has_lattice_basis

    @property
    def ok(self) -> bool:
        return (self.grading_ok and self.generators_homogeneous
                and self.contained_in_square and self.variable_components_trivial)

    def flag_items(self):
        return (("effective", self.effective),
                ("pointed", self.pointed),
                ("generators homogeneous", self.generators_homogeneous),
                ("relations in square of maximal ideal", self.contained_in_square),
                ("trivial components in generator degrees", self.variable_components_trivial),
                ("lattice basis among free parts", self.has_lattice_basis))


def has_lattice_basis(ring: GradedPolyRing) -> bool:
    """Does some k-subset of the free parts have determinant +-1?"""
    k = ring.grading.free_rank
    if k == 0:
        return True
    free = []
    for v in ring.degrees.free_parts():
        if v not in free:
            free.append(v)
    for subset in combinations(free, k):
        M = linalg.to_matrix(list(zip(*subset)), width=k)
        if abs(linalg.det(M)) == 1:
            return True
    return False


def validate_presentation(ring: GradedPolyRing, ideal: Ideal | None = None) -> ValidationReport:
    """All standing assumptions at once; no exception on failure."""
    messages = []
    effective = check_effective(ring.degrees)
    if not effective:
        messages.append("the generator degrees do not generate the grading group")
    pointed = check_pointed(ring.degrees)
    if not pointed:
        messages.append("the weight configuration is not pointed; no strictly "
                        "positive functional exists")
    lattice = has_lattice_basis(ring)
    if not lattice:
        messages.append("no subset of the free parts is a lattice basis")

    generators = ideal.generators if ideal is not None else ()
    homogeneous = True
    for idx, g in enumerate(generators, start=1):
        if not is_homogeneous(ring, g):
            homogeneous = False
            degs = ", ".join(str(d) for d in distinct_term_degrees(ring, g))
            messages.append(f"generator {idx} is not homogeneous; term degrees {degs}")

    in_square = True
    for idx, g in enumerate(generators, start=1):
        bad = min((sum(m) for m in g.terms), default=2)
        if bad < 2:
            in_square = False
            messages.append(f"generator {idx} has a term of total degree {bad}; "
                            "relations must lie in the square of the maximal ideal")

    components_trivial = True
    if generators and (not pointed or not homogeneous):
        components_trivial = False
        messages.append("components in generator degrees were not checked "
                        "(requires a pointed grading and homogeneous generators)")
    elif generators:
        for q in ring.degrees.distinct_weights():
            comp = ideal_component_basis(ideal, q)
            if comp:
                components_trivial = False
                messages.append(f"the ideal has a nontrivial component in the "
                                f"generator degree {q} (dimension {len(comp)})")

    return ValidationReport(effective, pointed, homogeneous, in_square,
                            components_trivial, lattice, tuple(messages))


def require_valid_grading(ring: GradedPolyRing):
    """Raise unless the ideal-free flags pass."""
    report = validate_presentation(ring)
    if not report.grading_ok:
        raise ValidationError("; ".join(report.messages))
    return report
