"""Brute-force reference implementations used by several test modules.

Each oracle decides its question by exhaustive enumeration with none of
the search-space reductions used by the library, so agreement is
meaningful evidence.
"""

from itertools import combinations, permutations, product

from gradedaut import linalg
from gradedaut.grading import (DegreeMatrix, GradingGroup, GroupAutomorphism,
                               degree_of_exponent, torsion_block_bijective)


def naive_monomial_basis(ring, w):
    """All monomials of degree w, by filtering every exponent vector in
    a box that provably contains them.

    A positive functional phi gives each variable the weight
    phi(q_i) >= 1, and any monomial of degree w satisfies
    sum e_i * phi(q_i) = phi(w); so e_i <= phi(w) / phi(q_i) bounds the
    box.  Inside it every vector is checked outright.
    """
    phi = linalg.positive_functional(
        [q.free_part for q in ring.degrees.columns], ring.grading.free_rank)
    assert phi is not None, "oracle needs a pointed grading"
    cap = linalg.dot(phi, w.free_part)
    if cap < 0:
        return set()
    steps = [linalg.dot(phi, q.free_part) for q in ring.degrees.columns]
    bounds = [cap // s for s in steps]
    hits = set()
    for e in product(*(range(b + 1) for b in bounds)):
        if (sum(ei * s for ei, s in zip(e, steps)) == cap
                and degree_of_exponent(ring.degrees, e) == w):
            hits.add(e)
    return hits


def naive_basis_box_size(ring, w):
    """Number of vectors naive_monomial_basis would scan."""
    phi = linalg.positive_functional(
        [q.free_part for q in ring.degrees.columns], ring.grading.free_rank)
    assert phi is not None
    cap = linalg.dot(phi, w.free_part)
    if cap < 0:
        return 0
    size = 1
    for q in ring.degrees.columns:
        size *= cap // linalg.dot(phi, q.free_part) + 1
    return size


def extendable_bijections(Q: DegreeMatrix):
    """Every automorphism of the grading group preserving the weight set,
    found by testing all weight bijections for extendability and all
    torsion blocks outright.

    Requires the free parts to span the free quotient (so the free block
    is forced by the bijection).
    """
    group = Q.group
    k = group.free_rank
    orders = group.torsion_orders
    l = len(orders)
    weights = list(dict.fromkeys(Q.columns))
    s = len(weights)
    found = set()
    c_space = list(product(*(range(orders[i]) for i in range(l) for _ in range(k))))
    d_space = list(product(*(range(orders[i]) for i in range(l) for _ in range(l))))
    for sigma in permutations(range(s)):
        if k:
            rows, rhs = [], []
            for j in range(s):
                f = weights[j].free_part
                g = weights[sigma[j]].free_part
                for i in range(k):
                    row = [0] * (k * k)
                    for t in range(k):
                        row[i * k + t] = f[t]
                    rows.append(row)
                    rhs.append(g[i])
            sol = linalg.solve(rows, rhs)
            if sol is None or any(x.denominator != 1 for x in sol):
                continue
            A = tuple(tuple(int(sol[i * k + t]) for t in range(k)) for i in range(k))
            if abs(linalg.det(linalg.to_matrix(A, width=k))) != 1:
                continue
        else:
            A = ()
        for c_flat in c_space:
            C = tuple(tuple(c_flat[i * k + t] for t in range(k)) for i in range(l))
            for d_flat in d_space:
                D = tuple(tuple(d_flat[i * l + j] for j in range(l)) for i in range(l))
                if any((orders[j] * D[i][j]) % orders[i] != 0
                       for i in range(l) for j in range(l)):
                    continue
                if not torsion_block_bijective(D, orders):
                    continue
                good = True
                for j in range(s):
                    lhs = tuple(
                        (linalg.dot(C[i], weights[j].free_part)
                         + linalg.dot(D[i], weights[j].torsion_part)) % orders[i]
                        for i in range(l))
                    if lhs != weights[sigma[j]].torsion_part:
                        good = False
                        break
                if good:
                    found.add(GroupAutomorphism(group, A, C, D))
    return found


def random_pointed_grading(rng, kmax=3, lmax=1, rmax=6, span=2):
    """A random degree matrix that is pointed and contains a lattice
    basis among its free parts."""
    from gradedaut.validation import has_lattice_basis
    from gradedaut.polynomials import GradedPolyRing
    while True:
        k = rng.randint(1, kmax)
        l = rng.randint(0, lmax)
        orders = tuple(rng.choice((2, 3)) for _ in range(l))
        group = GradingGroup(k, orders)
        r = rng.randint(k, rmax)
        cols = tuple(group.element(tuple(rng.randint(-span, span) for _ in range(k)),
                                   tuple(rng.randint(0, a - 1) for a in orders))
                     for _ in range(r))
        Q = DegreeMatrix(cols)
        if linalg.positive_functional(Q.free_parts(), k) is None:
            continue
        if not has_lattice_basis(GradedPolyRing.from_degree_matrix(Q)):
            continue
        return Q


def torus_character(element, free_values, torsion_signs):
    """chi^element evaluated at a rational torus point.

    free_values are nonzero rationals, one per free coordinate;
    torsion_signs are +-1, one per torsion coordinate of order 2.
    """
    from fractions import Fraction
    val = Fraction(1)
    for t, e in zip(free_values, element.free_part):
        val *= Fraction(t) ** e
    for s, c in zip(torsion_signs, element.torsion_part):
        val *= Fraction(s) ** c
    return val


def span_equal(gens_a, gens_b):
    """Whether two polynomial lists span the same rational vector space."""
    from gradedaut.polynomials import grlex_key
    monos = sorted({m for g in (*gens_a, *gens_b) for m in g.terms},
                   key=grlex_key)
    if not monos:
        return True

    def rows(gens):
        return [[g.terms.get(m, 0) for m in monos] for g in gens]

    ra, rb = rows(gens_a), rows(gens_b)
    both = linalg.rank(ra + rb)
    return linalg.rank(ra) == both and linalg.rank(rb) == both


def cone_member(rays, x):
    """x in the nonnegative span of rays, via Caratheodory: membership
    is witnessed on a linearly independent subset, where coefficients
    are unique, so every subset is checked by exact solving."""
    rays = list(rays)
    dim = len(x)
    if not any(x):
        return True
    for size in range(1, min(len(rays), dim) + 1):
        for sub in combinations(rays, size):
            M = [[r[t] for r in sub] for t in range(dim)]
            if linalg.rank(M) < size:
                continue
            sol = linalg.solve(M, list(x))
            if sol is not None and all(c >= 0 for c in sol):
                return True
    return False
