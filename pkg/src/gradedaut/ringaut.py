"""Presentation of the graded automorphism group of the polynomial ring.

The graded components attached to the distinct generator weights are
concatenated into one action basis of size n.  A weight symmetry B only
allows a linear map to send block i into the block of B(w_i), so the
generic matrix has a forced zero pattern; the remaining freedom is one
coordinate Y per possibly nonzero slot, numbered row major, plus one
witness variable Z whose equation det * Z = 1 keeps the matrix
invertible.  Together with the equations forcing multiplicativity on
composite basis monomials this presents the graded automorphisms of S as
an affine variety over the rationals.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardError, StructuralError, ValidationError
from .grading import DegreeMatrix, GroupAutomorphism, GroupElement
from .polynomials import (GradedPolyRing, Monomial, Polynomial, grlex_key,
                          monomial_basis, monomial_mul, polynomial_to_str)
from .validation import validate_presentation
from .weightsym import AdmissibleAut, admissible_automorphisms, aut_gen_weights

DET_TERM_BOUND = 10 ** 6


@dataclass(frozen=True)
class ActionBasis:
    """Concatenated monomial bases of the components S_w, w a generator
    weight, in canonical block order."""

    ring: GradedPolyRing
    weights: tuple[GroupElement, ...]
    blocks: tuple[tuple[Monomial, ...], ...]
    flat: tuple[Monomial, ...]

    @property
    def n(self) -> int:
        return len(self.flat)

    def block_start(self, i: int) -> int:
        return sum(len(b) for b in self.blocks[:i])

    def block_of_flat(self, idx: int) -> int:
        for i, b in enumerate(self.blocks):
            if idx < len(b):
                return i
            idx -= len(b)
        raise IndexError(idx)

    def flat_index(self, mono: Monomial) -> int:
        return self.flat.index(tuple(mono))

    def flat_degree(self, idx: int) -> GroupElement:
        return self.weights[self.block_of_flat(idx)]


def build_action_basis(ring: GradedPolyRing) -> ActionBasis:
    """Blocks follow the canonical weight order: first occurrence along
    the variable list.  Flat indices number the concatenation from 1."""
    weights = ring.degrees.distinct_weights()
    blocks = tuple(monomial_basis(ring, w) for w in weights)
    flat = tuple(m for b in blocks for m in b)
    return ActionBasis(ring, weights, blocks, flat)


def yz_names(n: int) -> tuple[str, ...]:
    """Variable roster of the presentation ring: Y(1..n^2) then Z."""
    return tuple(f"Y({i})" for i in range(1, n * n + 1)) + ("Z",)


@dataclass(frozen=True)
class SymbolicMatrix:
    """n x n matrix whose entries are either 0 or the variable Y(index).

    pattern[i][j] holds the 1-based Y index (i*n + j + 1) or 0.
    """

    n: int
    pattern: tuple[tuple[int, ...], ...]

    def nonzero_indices(self) -> tuple[int, ...]:
        """The 1-based Y indices present, row major."""
        return tuple(v for row in self.pattern for v in row if v)

    def entry(self, i: int, j: int) -> int:
        return self.pattern[i][j]

    def __str__(self):
        cells = [[f"Y({v})" if v else "0" for v in row] for row in self.pattern]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + ", ".join(c.rjust(width) for c in row) + "]"
                         for row in cells)


def structured_matrix(basis: ActionBasis, B: GroupAutomorphism) -> SymbolicMatrix:
    """Zero pattern of a graded map for the weight symmetry B: slot
    (i, j) survives exactly when deg(flat_j) = B(deg(flat_i))."""
    weights = basis.weights
    images = [B.apply(w) for w in weights]
    block_map = []
    for i, img in enumerate(images):
        if img not in weights:
            raise StructuralError("automorphism does not permute the weight set")
        j = weights.index(img)
        if len(basis.blocks[i]) != len(basis.blocks[j]):
            raise StructuralError(
                f"automorphism is not admissible: components at {weights[i]} and "
                f"{img} have different dimensions")
        block_map.append(j)
    n = basis.n
    rows = []
    for fi in range(n):
        target = block_map[basis.block_of_flat(fi)]
        start = basis.block_start(target)
        allowed = set(range(start, start + len(basis.blocks[target])))
        rows.append(tuple(fi * n + fj + 1 if fj in allowed else 0
                          for fj in range(n)))
    return SymbolicMatrix(n, tuple(rows))


def _pattern_permutations(matrix: SymbolicMatrix, bound: int):
    """Permutations supported by the nonzero pattern, with signs.

    Yields (columns, sign) pairs; raises once more than `bound` are found.
    """
    n = matrix.n
    out = []
    cols = [0] * n
    used = [False] * n

    def place(i: int):
        if i == n:
            sign = 1
            for a in range(n):
                for b in range(a + 1, n):
                    if cols[a] > cols[b]:
                        sign = -sign
            out.append((tuple(cols), sign))
            if len(out) > bound:
                raise GuardError(
                    f"symbolic determinant exceeds {bound} terms; raise the "
                    "term bound to proceed")
            return
        for j in range(n):
            if not used[j] and matrix.pattern[i][j]:
                used[j] = True
                cols[i] = j
                place(i + 1)
                used[j] = False

    place(0)
    return out


def zero_pattern_ideal(matrix: SymbolicMatrix, term_bound: int = DET_TERM_BOUND):
    """One vanishing generator per zero slot, then the invertibility
    witness det(A) * Z - 1 expanded over the pattern."""
    n = matrix.n
    nvars = n * n + 1
    gens = []
    for i in range(n):
        for j in range(n):
            if matrix.pattern[i][j] == 0:
                gens.append(Polynomial.variable(i * n + j, nvars))
    perms = _pattern_permutations(matrix, term_bound)
    if not perms:
        raise StructuralError(
            "structurally singular pattern: no invertible matrix has this "
            "shape, the weight symmetry admits no graded map")
    terms = {}
    for columns, sign in perms:
        expo = [0] * nvars
        for i, j in enumerate(columns):
            expo[i * n + j] += 1
        expo[n * n] = 1  # the witness variable Z
        terms[tuple(expo)] = terms.get(tuple(expo), 0) + sign
    det_gen = Polynomial(terms) - Polynomial.constant(1, nvars)
    gens.append(det_gen)
    return gens


# --- substitution: S' coefficients against T monomials -----------------

def _ys_add(P, Q):
    out = dict(P)
    for mono, poly in Q.items():
        acc = out.get(mono)
        acc = poly if acc is None else acc + poly
        if acc.is_zero():
            out.pop(mono, None)
        else:
            out[mono] = acc
    return out


def _ys_mul(P, Q):
    out = {}
    for ma, pa in P.items():
        for mb, pb in Q.items():
            key = monomial_mul(ma, mb)
            acc = out.get(key)
            prod = pa * pb
            acc = prod if acc is None else acc + prod
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def generic_row_image(basis: ActionBasis, flat_idx: int,
                      matrix: SymbolicMatrix | None = None):
    """Image of the flat_idx-th basis element under the generic map, as
    a map T-monomial -> Y-coefficient.  With a SymbolicMatrix only the
    surviving slots contribute."""
    n = basis.n
    nvars = n * n + 1
    out = {}
    for j in range(n):
        if matrix is not None and matrix.pattern[flat_idx][j] == 0:
            continue
        out[basis.flat[j]] = Polynomial.variable(flat_idx * n + j, nvars)
    return out


def substitute_polynomial(basis: ActionBasis, f: Polynomial,
                          matrix: SymbolicMatrix | None = None):
    """Image of f in S under T_i -> sum_j Y_ij flat_j.

    Returns a map from T-monomials to polynomials in the Y variables.
    Every ring variable occurs in the action basis, which pins its row.
    """
    n = basis.n
    nvars_y = n * n + 1
    r = basis.ring.variable_count
    var_rows = []
    for t in range(r):
        unit = tuple(int(i == t) for i in range(r))
        var_rows.append(basis.flat_index(unit))
    result = {}
    for mono, coeff in f.terms.items():
        acc = {(0,) * r: Polynomial.constant(coeff, nvars_y)}
        for t, e in enumerate(mono):
            img = generic_row_image(basis, var_rows[t], matrix)
            for _ in range(e):
                acc = _ys_mul(acc, img)
        result = _ys_add(result, acc)
    return result


def multiplicativity_ideal(basis: ActionBasis):
    """Coefficient equations forcing images of composite basis monomials
    to equal products of images of their factors.

    For every basis monomial m with a factorization m = m' * m'' inside
    the flat basis, the image of m and the product of the images of m'
    and m'' are expanded over T-monomials and matched coefficient by
    coefficient; generators are the differences, product side minus
    direct side, deduplicated in scan order.
    """
    n = basis.n
    out = []
    seen = set()
    for fm, mono in enumerate(basis.flat):
        pairs = []
        for fa in range(n):
            for fb in range(fa, n):
                if monomial_mul(basis.flat[fa], basis.flat[fb]) == mono:
                    pairs.append((fa, fb))
        for fa, fb in pairs:
            direct = generic_row_image(basis, fm)
            prod = _ys_mul(generic_row_image(basis, fa),
                           generic_row_image(basis, fb))
            keys = sorted(set(direct) | set(prod), key=grlex_key, reverse=True)
            for mu in keys:
                zero = Polynomial.zero()
                gen = prod.get(mu, zero) - direct.get(mu, zero)
                if gen.is_zero() or gen in seen:
                    continue
                seen.add(gen)
                out.append(gen)
    return out


@dataclass(frozen=True)
class AutTriple:
    """One weight symmetry with its structured matrix and equations."""

    matrix: SymbolicMatrix
    weight_aut: GroupAutomorphism
    ideal: tuple[Polynomial, ...]


@dataclass(frozen=True)
class CombinedIdeal:
    """The combined equations kept in factored form: one generator list
    per triple.  The vanishing locus is the union over the triples, the
    same locus the product of the lists would cut out; consumers choose
    between the factored form and explicit products."""

    factors: tuple[tuple[Polynomial, ...], ...]

    def expand_pair(self, i: int, j: int, gen_bound: int = 10 ** 5):
        """Generators of the product of factor ideals i and j."""
        a, b = self.factors[i], self.factors[j]
        if len(a) * len(b) > gen_bound:
            raise GuardError(
                f"pairwise product would have {len(a) * len(b)} generators, "
                f"above the bound {gen_bound}")
        return tuple(g * h for g in a for h in b)


@dataclass(frozen=True)
class AutPresentation:
    """Everything the polynomial-ring stage produces: the coordinate
    ring of matrix slots, one triple per admissible weight symmetry, and
    the combined equations."""

    ring: GradedPolyRing
    basis: ActionBasis
    slot_ring: GradedPolyRing
    triples: tuple[AutTriple, ...]
    combined_ideal: CombinedIdeal

    @property
    def n(self) -> int:
        return self.basis.n

    def slot_names(self) -> tuple[str, ...]:
        return yz_names(self.basis.n)

    def variable_weight_table(self):
        """Degrees of Y(1), ..., Y(n^2), Z in roster order."""
        return tuple(self.slot_ring.degrees.columns)

    def witness_degree(self) -> GroupElement:
        """Degree making each det * Z - 1 generator homogeneous; the
        combined roster instead grades Z by zero."""
        total = self.ring.grading.zero()
        for i in range(self.n):
            total = total + self.basis.flat_degree(i)
        return -total


def _slot_ring(basis: ActionBasis) -> GradedPolyRing:
    group = basis.ring.grading
    n = basis.n
    cols = []
    for i in range(n):
        cols.extend([basis.flat_degree(i)] * n)
    cols.append(group.zero())
    return GradedPolyRing(n * n + 1, group, DegreeMatrix(tuple(cols)))


def _build_triple(basis, admissible, mult_gens, term_bound):
    matrix = structured_matrix(basis, admissible.aut)
    gens = tuple(zero_pattern_ideal(matrix, term_bound)) + tuple(mult_gens)
    return AutTriple(matrix, admissible.aut, gens)


_POOL_STATE = {}


def _triple_worker(idx: int):
    basis, admissibles, mult_gens, term_bound = _POOL_STATE["args"]
    return _build_triple(basis, admissibles[idx], mult_gens, term_bound)


def _pool_init(args):
    _POOL_STATE["args"] = args


def aut_ks(ring: GradedPolyRing, jobs: int = 1,
           term_bound: int = DET_TERM_BOUND) -> AutPresentation:
    """The full presentation: admissible weight symmetries, structured
    matrices, and per-symmetry equation lists.

    Requires an effective pointed grading with a lattice basis among the
    free parts; the ideal of the algebra plays no role at this stage.
    """
    report = validate_presentation(ring)
    if not report.grading_ok:
        raise ValidationError("; ".join(report.messages) or "invalid grading")
    basis = build_action_basis(ring)
    auts = aut_gen_weights(ring.degrees)
    admissibles = admissible_automorphisms(auts, ring)
    mult_gens = tuple(multiplicativity_ideal(basis))
    if jobs > 1 and len(admissibles) > 1:
        args = (basis, admissibles, mult_gens, term_bound)
        with ProcessPoolExecutor(max_workers=jobs, initializer=_pool_init,
                                 initargs=(args,)) as pool:
            triples = tuple(pool.map(_triple_worker, range(len(admissibles))))
    else:
        triples = tuple(_build_triple(basis, adm, mult_gens, term_bound)
                        for adm in admissibles)
    combined = CombinedIdeal(tuple(t.ideal for t in triples))
    return AutPresentation(ring, basis, _slot_ring(basis), triples, combined)


# --- rendering ---------------------------------------------------------

def render_element_list(elements) -> str:
    return ", ".join(str(e) for e in elements)


def render_presentation(pres: AutPresentation) -> str:
    """Plain-text report: variable weight table, then each triple with
    its weight symmetry, structured matrix, and equations."""
    n = pres.n
    names = pres.slot_names()
    lines = []
    lines.append(f"action basis size n = {n}")
    flat_names = [polynomial_to_str(Polynomial.from_term(m, 1), pres.ring.var_names())
                  for m in pres.basis.flat]
    lines.append("flat basis: " + ", ".join(flat_names))
    if any(len(b) > 1 for b in pres.basis.blocks):
        lines.append("note: some components contain several monomials; the "
                     "admissibility filter compares dimensions only and the "
                     "multiplicativity equations carry the rest")
    lines.append("slot degrees, one block of Y variables per basis row:")
    for i in range(n):
        lo, hi = i * n + 1, (i + 1) * n
        lines.append(f"  deg Y({lo}..{hi}) = {pres.basis.flat_degree(i)}")
    lines.append(f"  deg Z = {pres.ring.grading.zero()} "
                 f"(per triple: {pres.witness_degree()})")
    for idx, triple in enumerate(pres.triples, start=1):
        lines.append("")
        lines.append(f"triple {idx}: weight symmetry")
        lines.append(str(triple.weight_aut))
        lines.append("structured matrix:")
        lines.append(str(triple.matrix))
        lines.append(f"equations ({len(triple.ideal)} generators):")
        for g in triple.ideal:
            lines.append("  " + polynomial_to_str(g, names))
    return "\n".join(lines)
