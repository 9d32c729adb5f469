"""Cutting the automorphisms of the quotient algebra out of the
automorphisms of the polynomial ring.

A structured matrix descends to R = S/I exactly when it maps each graded
piece of I into I again.  Per weight symmetry B and per generator degree
u this is finitely many linear conditions: push an echelon basis of I_u
through the symbolic substitution, then require every annihilator form
of I at the target degree B(u) to kill the image.  The conditions are
polynomials in the matrix slots and join the earlier equation lists.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import StructuralError, ValidationError
from .grading import GroupElement
from .polynomials import (GradedPolyRing, Ideal, Polynomial, annihilator_forms,
                          degree_of, ideal_component_basis, monomial_basis,
                          polynomial_to_str)
from .ringaut import (DET_TERM_BOUND, AutPresentation, AutTriple,
                      CombinedIdeal, aut_ks, render_presentation,
                      substitute_polynomial)
from .validation import validate_presentation


def ideal_generator_degrees(ideal: Ideal) -> tuple[GroupElement, ...]:
    """Distinct degrees of the generators, by first occurrence."""
    seen = []
    for g in ideal.generators:
        d = degree_of(ideal.ring, g)
        if d not in seen:
            seen.append(d)
    return tuple(seen)


@dataclass(frozen=True)
class ComponentData:
    """One graded piece of the ambient ring together with the part of
    the ideal it contains."""

    degree: GroupElement
    monomials: tuple
    ideal_basis: tuple
    forms: tuple

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def component_data(ideal: Ideal, u: GroupElement) -> ComponentData:
    monomials = monomial_basis(ideal.ring, u)
    inside = ideal_component_basis(ideal, u)
    forms = annihilator_forms(inside, len(monomials))
    return ComponentData(u, tuple(monomials), tuple(tuple(v) for v in inside),
                         tuple(tuple(f) for f in forms))


def stabilizer_ideal_for_triple(presentation: AutPresentation, ideal: Ideal,
                                triple: AutTriple, components=None):
    """The linear conditions keeping the ideal invariant, as polynomials
    in the matrix slots.

    Scan order: generator degrees by first occurrence, then the echelon
    basis of I_u, then the annihilator forms at the target degree.
    Identical conditions are kept once.
    """
    basis = presentation.basis
    if components is None:
        components = {}
    out = []
    seen = set()
    for u in ideal_generator_degrees(ideal):
        if u not in components:
            components[u] = component_data(ideal, u)
        target_degree = triple.weight_aut.apply(u)
        if target_degree not in components:
            components[target_degree] = component_data(ideal, target_degree)
        src, tgt = components[u], components[target_degree]
        if src.dimension != tgt.dimension:
            raise StructuralError(
                f"internal error: components at {u} and {target_degree} have "
                f"dimensions {src.dimension} and {tgt.dimension}, a weight "
                "symmetry cannot change component dimensions")
        position = {m: i for i, m in enumerate(tgt.monomials)}
        for row in src.ideal_basis:
            f = Polynomial({m: c for m, c in zip(src.monomials, row) if c})
            image = substitute_polynomial(basis, f, triple.matrix)
            coeffs = [Polynomial.zero()] * tgt.dimension
            for mono, poly in image.items():
                if mono not in position:
                    raise StructuralError(
                        "internal error: substitution left the target component")
                coeffs[position[mono]] = poly
            for form in tgt.forms:
                gen = Polynomial.zero()
                for c, poly in zip(form, coeffs):
                    if c and not poly.is_zero():
                        gen = gen + poly * c
                if gen.is_zero() or gen in seen:
                    continue
                seen.add(gen)
                out.append(gen)
    return tuple(out)


@dataclass(frozen=True)
class StabilizerTriple:
    """A weight symmetry with both equation layers: the polynomial-ring
    conditions and the ideal-stabilizing conditions."""

    base: AutTriple
    stabilizer_gens: tuple

    @property
    def matrix(self):
        return self.base.matrix

    @property
    def weight_aut(self):
        return self.base.weight_aut

    @property
    def ideal(self):
        return self.base.ideal + self.stabilizer_gens


@dataclass(frozen=True)
class StabilizerPresentation:
    """Automorphisms of the graded quotient algebra as an affine variety:
    one equation list per admissible weight symmetry, all living in the
    common slot ring."""

    ring: GradedPolyRing
    ideal: Ideal
    base: AutPresentation
    triples: tuple
    degree_roster: tuple
    combined_ideal: CombinedIdeal

    @property
    def n(self) -> int:
        return self.base.n

    def slot_names(self):
        return self.base.slot_names()


_POOL_STATE = {}


def _pool_init(args):
    _POOL_STATE["args"] = args


def _stab_worker(idx: int):
    base, ideal, components = _POOL_STATE["args"]
    return stabilizer_ideal_for_triple(base, ideal, base.triples[idx],
                                       dict(components))


def aut_grad_alg(ring: GradedPolyRing, ideal: Ideal, jobs: int = 1,
                 term_bound: int = DET_TERM_BOUND) -> StabilizerPresentation:
    """Full pipeline for the quotient algebra R = S/I.

    Refuses any input failing a validation flag, in particular an ideal
    meeting a component S_q for a generator weight q; the message names
    the weight.
    """
    report = validate_presentation(ring, ideal)
    if not report.ok:
        raise ValidationError("; ".join(report.messages) or "invalid input")
    base = aut_ks(ring, jobs=jobs, term_bound=term_bound)
    roster = ideal_generator_degrees(ideal)
    components = {}
    for u in roster:
        components[u] = component_data(ideal, u)
        for t in base.triples:
            v = t.weight_aut.apply(u)
            if v not in components:
                components[v] = component_data(ideal, v)
    if jobs > 1 and len(base.triples) > 1:
        args = (base, ideal, components)
        with ProcessPoolExecutor(max_workers=jobs, initializer=_pool_init,
                                 initargs=(args,)) as pool:
            gen_lists = tuple(pool.map(_stab_worker, range(len(base.triples))))
    else:
        gen_lists = tuple(stabilizer_ideal_for_triple(base, ideal, t, components)
                          for t in base.triples)
    triples = tuple(StabilizerTriple(t, gens)
                    for t, gens in zip(base.triples, gen_lists))
    combined = CombinedIdeal(tuple(t.ideal for t in triples))
    return StabilizerPresentation(ring, ideal, base, triples, roster, combined)


def render_stabilizer(pres: StabilizerPresentation) -> str:
    """Report for the quotient algebra: the ambient presentation plus
    the stabilizing conditions per triple."""
    names = pres.slot_names()
    lines = [render_presentation(pres.base)]
    lines.append("")
    lines.append("ideal generator degrees: "
                 + ", ".join(str(u) for u in pres.degree_roster))
    for idx, t in enumerate(pres.triples, start=1):
        lines.append(f"stabilizing conditions for triple {idx} "
                     f"({len(t.stabilizer_gens)} generators):")
        for g in t.stabilizer_gens:
            lines.append("  " + polynomial_to_str(g, names))
    return "\n".join(lines)
