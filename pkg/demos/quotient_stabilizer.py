"""Stabilizer equations for a quotient by a homogeneous ideal."""

from fractions import Fraction
from pathlib import Path

from gradedaut.algebraaut import aut_grad_alg, component_data
from gradedaut.inout import read_input
from gradedaut.polynomials import Polynomial, polynomial_to_str

problem = read_input(Path(__file__).with_name("quadric8.toml"))
ring = problem.ring()
ideal = problem.ideal(ring)

stab = aut_grad_alg(ring, ideal)
print("ideal generator degrees: "
      + ", ".join(str(u) for u in stab.degree_roster))

# the graded piece holding the quadric: four monomials, one of which
# spans the ideal slice, leaving three linear conditions
u = stab.degree_roster[0]
comp = component_data(ideal, u)
mono_names = [polynomial_to_str(Polynomial.from_term(m, 1), ring.var_names())
              for m in comp.monomials]
print(f"component at {u}: dimension {comp.dimension}")
print("  basis: " + ", ".join(mono_names))
print(f"  ideal slice dimension {len(comp.ideal_basis)}, "
      f"{len(comp.forms)} annihilator forms")

names = stab.slot_names()
for idx, t in enumerate(stab.triples, start=1):
    print(f"\ntriple {idx}: {len(t.base.ideal)} ring equations plus "
          f"{len(t.stabilizer_gens)} stabilizing conditions")
    for g in t.stabilizer_gens:
        print("  " + polynomial_to_str(g, names))

# spot check: a diagonal point scaling each variable by the character of
# its weight satisfies every equation of the identity triple
t1 = stab.triples[0]
free = (Fraction(2), Fraction(3), Fraction(5))
sign = -1
values = [Fraction(0)] * (stab.n ** 2 + 1)
det = Fraction(1)
for i in range(stab.n):
    w = stab.base.basis.flat_degree(i)
    chi = Fraction(1)
    for t, a in zip(free, w.free_part):
        chi *= t ** a
    for eps in w.torsion_part:
        chi *= sign ** eps
    values[i * stab.n + i] = chi
    det *= chi
values[-1] = 1 / det

residuals = [g.substitute_values(values) for g in t1.ideal]
print(f"\ndiagonal character point: {len(t1.ideal)} equations, "
      f"max residual {max(abs(r) for r in residuals)}")
