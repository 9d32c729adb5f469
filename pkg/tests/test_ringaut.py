import random
from fractions import Fraction

import pytest

from gradedaut.errors import GuardError, StructuralError, ValidationError
from gradedaut.grading import DegreeMatrix, GradingGroup, GroupAutomorphism
from gradedaut.polynomials import GradedPolyRing, Polynomial, polynomial_to_str
from gradedaut.ringaut import (ActionBasis, SymbolicMatrix, aut_ks,
                               build_action_basis, multiplicativity_ideal,
                               render_presentation, structured_matrix,
                               substitute_polynomial, yz_names,
                               zero_pattern_ideal)

from conftest import QUADRIC8_AUT_MATRICES
from oracles import torus_character


@pytest.fixture(scope="module")
def quadric8_basis(quadric8_ring):
    return build_action_basis(quadric8_ring)


@pytest.fixture(scope="module")
def quadric8_presentation(quadric8_ring):
    return aut_ks(quadric8_ring)


def zring(*weights):
    group = GradingGroup(1, ())
    cols = tuple(group.element((w,), ()) for w in weights)
    return GradedPolyRing.from_degree_matrix(DegreeMatrix(cols))


def test_action_basis_quadric8(quadric8_basis):
    b = quadric8_basis
    assert b.n == 8
    assert all(len(block) == 1 for block in b.blocks)
    # every component is spanned by its own variable, in variable order
    expected = tuple(tuple(int(i == t) for i in range(8)) for t in range(8))
    assert b.flat == expected
    assert b.weights == b.ring.degrees.distinct_weights()
    assert b.flat_degree(1) == b.ring.degrees.columns[1]


def test_action_basis_mixed_blocks():
    ring = zring(1, 2)
    b = build_action_basis(ring)
    assert b.flat == ((1, 0), (2, 0), (0, 1))
    assert [len(block) for block in b.blocks] == [1, 2]
    assert b.block_of_flat(0) == 0
    assert b.block_of_flat(2) == 1
    assert b.block_start(1) == 1
    assert b.flat_index((2, 0)) == 1


def test_structured_matrix_identity_is_diagonal(quadric8_basis, quadric8_group):
    m = structured_matrix(quadric8_basis, GroupAutomorphism.identity(quadric8_group))
    assert m.n == 8
    for i in range(8):
        for j in range(8):
            expect = i * 8 + j + 1 if i == j else 0
            assert m.pattern[i][j] == expect
    assert m.nonzero_indices() == (1, 10, 19, 28, 37, 46, 55, 64)


def test_structured_matrix_frozen_pattern(quadric8_basis, quadric8_group):
    aut = GroupAutomorphism.from_display(quadric8_group, QUADRIC8_AUT_MATRICES[1])
    m = structured_matrix(quadric8_basis, aut)
    positions = tuple((i + 1, j + 1) for i in range(8) for j in range(8)
                      if m.pattern[i][j])
    assert positions == ((1, 1), (2, 5), (3, 8), (4, 7),
                         (5, 2), (6, 6), (7, 4), (8, 3))
    assert m.nonzero_indices() == (1, 13, 24, 31, 34, 46, 52, 59)


def test_structured_matrix_rejects_dimension_mismatch():
    group = GradingGroup(2, ())
    cols = (group.element((1, 0), ()), group.element((0, 1), ()),
            group.element((0, 1), ()))
    ring = GradedPolyRing.from_degree_matrix(DegreeMatrix(cols))
    basis = build_action_basis(ring)
    swap = GroupAutomorphism(group, ((0, 1), (1, 0)), (), ())
    with pytest.raises(StructuralError):
        structured_matrix(basis, swap)


def test_zero_pattern_ideal_identity(quadric8_basis, quadric8_group):
    m = structured_matrix(quadric8_basis, GroupAutomorphism.identity(quadric8_group))
    gens = zero_pattern_ideal(m)
    assert len(gens) == 57
    names = yz_names(8)
    # zero slots first, row major
    assert polynomial_to_str(gens[0], names) == "Y(2)"
    assert polynomial_to_str(gens[55], names) == "Y(63)"
    assert all(len(g.terms) == 1 and g.total_degree() == 1 for g in gens[:56])
    assert polynomial_to_str(gens[56], names) == \
        "Y(1)*Y(10)*Y(19)*Y(28)*Y(37)*Y(46)*Y(55)*Y(64)*Z - 1"


def test_zero_pattern_ideal_frozen_det(quadric8_basis, quadric8_group):
    aut = GroupAutomorphism.from_display(quadric8_group, QUADRIC8_AUT_MATRICES[1])
    gens = zero_pattern_ideal(structured_matrix(quadric8_basis, aut))
    assert len(gens) == 57
    assert polynomial_to_str(gens[56], yz_names(8)) == \
        "-Y(1)*Y(13)*Y(24)*Y(31)*Y(34)*Y(46)*Y(52)*Y(59)*Z - 1"


def test_zero_pattern_singular_pattern_rejected():
    m = SymbolicMatrix(2, ((1, 2), (0, 0)))
    with pytest.raises(StructuralError):
        zero_pattern_ideal(m)


def test_zero_pattern_term_guard():
    n = 3
    full = SymbolicMatrix(n, tuple(tuple(i * n + j + 1 for j in range(n))
                                   for i in range(n)))
    with pytest.raises(GuardError):
        zero_pattern_ideal(full, term_bound=3)
    assert len(zero_pattern_ideal(full)) == 1


def test_multiplicativity_empty_for_variable_blocks(quadric8_basis):
    assert multiplicativity_ideal(quadric8_basis) == []


def test_multiplicativity_frozen_equations():
    basis = build_action_basis(zring(1, 2))
    gens = multiplicativity_ideal(basis)
    names = yz_names(3)
    assert [polynomial_to_str(g, names) for g in gens] == [
        "Y(2)^2",
        "2*Y(1)*Y(2)",
        "2*Y(2)*Y(3)",
        "Y(1)^2 - Y(5)",
        "2*Y(1)*Y(3)",
        "Y(3)^2",
        "-Y(4)",
        "-Y(6)",
    ]


def test_substitution_against_identity_pattern(quadric8_basis, quadric8_group,
                                               quadric8_ideal):
    m = structured_matrix(quadric8_basis,
                          GroupAutomorphism.identity(quadric8_group))
    image = substitute_polynomial(quadric8_basis, quadric8_ideal.generators[0], m)
    y = lambda i: Polynomial.variable(i - 1, 65)
    expect = {
        (1, 0, 0, 0, 0, 1, 0, 0): y(1) * y(46),
        (0, 1, 0, 0, 1, 0, 0, 0): y(10) * y(37),
        (0, 0, 1, 1, 0, 0, 0, 0): y(19) * y(28),
        (0, 0, 0, 0, 0, 0, 1, 1): y(55) * y(64),
    }
    assert image == expect


def test_aut_ks_quadric8(quadric8_presentation, quadric8_ring):
    pres = quadric8_presentation
    assert len(pres.triples) == 4
    shown = tuple(t.weight_aut.display_matrix() for t in pres.triples)
    assert shown == QUADRIC8_AUT_MATRICES
    assert all(len(t.ideal) == 57 for t in pres.triples)
    assert pres.slot_ring.variable_count == 65
    cols = pres.slot_ring.degrees.columns
    assert cols[9] == quadric8_ring.degrees.columns[1]
    assert cols[64].is_zero()
    group = quadric8_ring.grading
    assert pres.witness_degree() == group.element((0, 0, -8), (0,))
    assert pres.combined_ideal.factors == tuple(t.ideal for t in pres.triples)


def test_aut_ks_single_variable():
    pres = aut_ks(zring(1))
    assert len(pres.triples) == 1
    gens = pres.triples[0].ideal
    assert [polynomial_to_str(g, yz_names(1)) for g in gens] == ["Y(1)*Z - 1"]


def test_aut_ks_mixed_block_sizes():
    ring = zring(1, 2, 1)
    pres = aut_ks(ring)
    assert len(pres.triples) == 1
    assert pres.basis.n == 6
    det_gen = [g for g in pres.triples[0].ideal
               if g.substitute_values([Fraction(0)] * 37) == Fraction(-1)]
    assert len(det_gen) == 1
    # 2 x 2 and 4 x 4 diagonal blocks give 2! * 4! determinant terms
    assert len(det_gen[0].terms) == 49


def test_aut_ks_validation_gate():
    with pytest.raises(ValidationError):
        aut_ks(zring(1, -1))


def test_torus_points_satisfy_identity_triple(quadric8_presentation):
    pres = quadric8_presentation
    identity_triple = pres.triples[0]
    n = pres.n
    rng = random.Random(20260822)
    pool = [Fraction(a, b) for a in (-3, -2, -1, 1, 2, 3) for b in (1, 2, 3)]
    for _ in range(100):
        free = tuple(rng.choice(pool) for _ in range(3))
        signs = (rng.choice((1, -1)),)
        diag = [torus_character(pres.basis.flat_degree(i), free, signs)
                for i in range(n)]
        values = [Fraction(0)] * (n * n + 1)
        det = Fraction(1)
        for i, d in enumerate(diag):
            values[i * n + i] = d
            det *= d
        values[n * n] = 1 / det
        for g in identity_triple.ideal:
            assert g.substitute_values(values) == 0


def test_jobs_parity(quadric8_ring, quadric8_presentation):
    parallel = aut_ks(quadric8_ring, jobs=2)
    assert parallel.triples == quadric8_presentation.triples


def test_combined_ideal_products():
    pres = aut_ks(zring(1, 2))
    combined = pres.combined_ideal
    assert len(combined.factors) == 1
    gens = combined.factors[0]
    prods = combined.expand_pair(0, 0)
    assert len(prods) == len(gens) ** 2
    assert prods[0] == gens[0] * gens[0]
    with pytest.raises(GuardError):
        combined.expand_pair(0, 0, gen_bound=10)


def test_render_presentation(quadric8_presentation):
    text = render_presentation(quadric8_presentation)
    assert "action basis size n = 8" in text
    assert "triple 4" in text
    assert "deg Y(1..8) = (1, 0, 1; 1)" in text
    assert "Y(1)*Y(10)*Y(19)*Y(28)*Y(37)*Y(46)*Y(55)*Y(64)*Z - 1" in text
    assert text.count("weight symmetry") == 4


def test_render_notes_larger_blocks():
    text = render_presentation(aut_ks(zring(1, 2)))
    assert "several monomials" in text
