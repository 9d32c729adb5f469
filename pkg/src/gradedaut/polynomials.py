"""Sparse multivariate polynomials over the rationals, graded pieces of
polynomial rings, and linear algebra inside graded ideal components.

Monomials are plain exponent tuples.  The canonical term order used for
every printed or listed output is graded lexicographic, largest first,
with the first variable strongest; all listings in this package are
sorted by it so identical inputs print identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import InputError, StructuralError, ValidationError
from .grading import (DegreeMatrix, GradingGroup, GroupElement,
                      degree_of_exponent, positive_weight_functional)

Monomial = tuple  # exponent vectors; the alias marks intent in signatures


def grlex_key(mono: Monomial):
    return (sum(mono), mono)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Finite map from exponent tuples to nonzero rational coefficients.

    Treated as immutable; arithmetic returns fresh objects.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c:
                clean[tuple(int(e) for e in mono)] = c
        lengths = {len(m) for m in clean}
        if len(lengths) > 1:
            raise StructuralError("mixed exponent lengths in one polynomial")
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls({})

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        """The single variable with 0-based `index`."""
        expo = [0] * nvars
        expo[index] = 1
        return cls({tuple(expo): Fraction(1)})

    @classmethod
    def from_term(cls, mono: Monomial, coeff) -> "Polynomial":
        return cls({tuple(mono): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "Polynomial"):
        if self.terms and other.terms:
            a = len(next(iter(self.terms)))
            b = len(next(iter(other.terms)))
            if a != b:
                raise StructuralError("polynomials in different variable rosters")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not self.terms:
                raise StructuralError("cannot infer arity; use Polynomial.constant")
            nvars = len(next(iter(self.terms)))
            other = Polynomial.constant(other, nvars)
        self._check_compatible(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return Polynomial(terms)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        self._check_compatible(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = monomial_mul(m1, m2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        if not self.terms:
            if e == 0:
                raise StructuralError("0**0 with unknown arity")
            return Polynomial.zero()
        nvars = len(next(iter(self.terms)))
        out = Polynomial.constant(1, nvars)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def sorted_terms(self):
        """Terms largest-first in the canonical order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]),
                      reverse=True)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def substitute_values(self, values):
        """Exact evaluation at a point given as a sequence of Fractions."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            prod = coeff
            for v, e in zip(values, mono):
                if e:
                    prod *= Fraction(v) ** e
            total += prod
        return total

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def default_names(nvars: int, stem: str = "T") -> tuple[str, ...]:
    return tuple(f"{stem}({i + 1})" for i in range(nvars))


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def polynomial_to_str(f: Polynomial, names) -> str:
    """Canonical rendering: terms in descending order, `*` products,
    `^` powers, unit coefficients suppressed."""
    if f.is_zero():
        return "0"
    names = list(names)
    chunks = []
    for idx, (mono, coeff) in enumerate(f.sorted_terms()):
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        mag = abs(coeff)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if idx == 0:
            chunks.append(("-" if coeff < 0 else "") + body)
        else:
            chunks.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(chunks)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[()^*/+-]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise _err(text, pos + len(text[pos:]) - len(stripped),
                       f"unexpected character {stripped[0]!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _line_col(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    last = text.rfind("\n", 0, pos)
    return line, pos - last if last >= 0 else pos + 1


def _err(text: str, pos: int, message: str) -> InputError:
    line, col = _line_col(text, pos)
    return InputError([(line, col, message)])


def parse_polynomial(text: str, names) -> Polynomial:
    """Parse the plain-text grammar, e.g. `T(1)*T(6) + 2*T(7)^2 - 1/2`.

    `names` is the variable roster; indexed names like `Y(13)` and bare
    names like `Z` are both resolved against it.
    """
    roster = {name: i for i, name in enumerate(names)}
    nvars = len(roster)
    tokens = _tokenize(text)
    k = 0

    def peek():
        return tokens[k]

    def take(kind=None, value=None):
        nonlocal k
        tok = tokens[k]
        if kind is not None and tok[0] != kind:
            raise _err(text, tok[2], f"expected {kind}, found {tok[1]!r}" if tok[1]
                       else f"expected {kind}, found end of input")
        if value is not None and tok[1] != value:
            raise _err(text, tok[2], f"expected {value!r}, found {tok[1]!r}")
        k += 1
        return tok

    def parse_factor():
        tok = peek()
        if tok[0] == "int":
            take()
            num = int(tok[1])
            if peek()[0] == "op" and peek()[1] == "/":
                take()
                den_tok = take("int")
                return Polynomial.constant(Fraction(num, int(den_tok[1])), nvars), None
            return Polynomial.constant(num, nvars), None
        if tok[0] == "name":
            take()
            name = tok[1]
            if peek()[0] == "op" and peek()[1] == "(":
                take()
                idx_tok = take("int")
                take("op", ")")
                name = f"{name}({idx_tok[1]})"
            if name not in roster:
                raise _err(text, tok[2], f"unknown variable {name!r}")
            base = Polynomial.variable(roster[name], nvars)
            if peek()[0] == "op" and peek()[1] == "^":
                take()
                exp_tok = take("int")
                return base, int(exp_tok[1])
            return base, 1
        raise _err(text, tok[2], f"expected a term, found {tok[1]!r}" if tok[1]
                   else "expected a term, found end of input")

    def parse_term():
        poly, power = parse_factor()
        acc = poly if power is None else poly ** power
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            poly, power = parse_factor()
            acc = acc * (poly if power is None else poly ** power)
        return acc

    result = Polynomial.zero()
    sign = 1
    tok = peek()
    if tok[0] == "op" and tok[1] in "+-":
        take()
        sign = -1 if tok[1] == "-" else 1
    while True:
        term = parse_term()
        result = result + term * sign
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] == "op" and tok[1] in "+-":
            take()
            sign = -1 if tok[1] == "-" else 1
            continue
        raise _err(text, tok[2], f"expected + or -, found {tok[1]!r}")
    return result


@dataclass(frozen=True)
class GradedPolyRing:
    """S = Q[T_1, ..., T_r] with deg(T_i) the i-th column of `degrees`."""

    variable_count: int
    grading: GradingGroup
    degrees: DegreeMatrix

    def __post_init__(self):
        if self.degrees.var_count != self.variable_count:
            raise StructuralError("degree matrix width differs from variable count")
        if self.degrees.group != self.grading:
            raise StructuralError("degree matrix lives in a different group")

    @classmethod
    def from_degree_matrix(cls, Q: DegreeMatrix) -> "GradedPolyRing":
        return cls(Q.var_count, Q.group, Q)

    def var_names(self) -> tuple[str, ...]:
        return default_names(self.variable_count)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.var_names())

    def show(self, f: Polynomial) -> str:
        return polynomial_to_str(f, self.var_names())


@dataclass(frozen=True)
class Ideal:
    ring: GradedPolyRing
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.is_zero():
                raise StructuralError("zero generator in ideal")
            for mono in g.terms:
                if len(mono) != self.ring.variable_count:
                    raise StructuralError("generator arity differs from the ring")


def distinct_term_degrees(ring: GradedPolyRing, f: Polynomial):
    """The distinct degrees among the terms of f, in canonical term order."""
    seen = []
    for mono, _ in f.sorted_terms():
        d = degree_of_exponent(ring.degrees, mono)
        if d not in seen:
            seen.append(d)
    return tuple(seen)


def degree_of(ring: GradedPolyRing, f: Polynomial) -> GroupElement:
    """Common degree of all terms of a homogeneous polynomial."""
    if f.is_zero():
        raise StructuralError("the zero polynomial has no degree")
    degrees = distinct_term_degrees(ring, f)
    if len(degrees) > 1:
        raise ValidationError(
            "polynomial is not homogeneous; term degrees "
            + ", ".join(str(d) for d in degrees))
    return degrees[0]


def is_homogeneous(ring: GradedPolyRing, f: Polynomial) -> bool:
    return f.is_zero() or len(distinct_term_degrees(ring, f)) == 1


@lru_cache(maxsize=None)
def _monomial_basis_cached(ring: GradedPolyRing, w: GroupElement):
    phi = positive_weight_functional(ring.degrees)
    if phi is None:
        raise ValidationError(
            "grading is not pointed; graded components may be infinite "
            "dimensional and monomial enumeration would not terminate")
    cols = ring.degrees.columns
    r = ring.variable_count
    phi_vals = [linalg.dot(phi, q.free_part) for q in cols]
    out = []
    expo = [0] * r

    def descend(i: int, remaining: GroupElement, budget: Fraction):
        if budget < 0:
            return
        if i == r:
            if remaining.is_zero():
                out.append(tuple(expo))
            return
        top = int(budget / phi_vals[i])
        for e in range(top, -1, -1):
            expo[i] = e
            descend(i + 1, remaining - cols[i].scale(e), budget - e * phi_vals[i])
        expo[i] = 0

    descend(0, w, linalg.dot(phi, w.free_part))
    out.sort(key=grlex_key, reverse=True)
    return tuple(out)


def monomial_basis(ring: GradedPolyRing, w: GroupElement):
    """All monomials of degree w, canonically ordered, largest first.

    Termination relies on a strictly positive functional on the weight
    cone, so the grading must be pointed.
    """
    if w.group != ring.grading:
        raise StructuralError("degree lives in a different group")
    return _monomial_basis_cached(ring, w)


def component_dimension(ring: GradedPolyRing, w: GroupElement) -> int:
    return len(monomial_basis(ring, w))


def ideal_component_basis(I: Ideal, u: GroupElement):
    """Echelon basis of the degree-u piece of I, as coefficient vectors
    over monomial_basis(ring, u).

    The spanning set is every product m * g_j with deg(m) = u - deg(g_j);
    these span I_u because the g_j generate I as a module over S.
    """
    ring = I.ring
    target = monomial_basis(ring, u)
    if not target:
        return []
    index = {mono: i for i, mono in enumerate(target)}
    rows = []
    for g in I.generators:
        gdeg = degree_of(ring, g)
        for m in monomial_basis(ring, u - gdeg):
            prod = Polynomial.from_term(m, 1) * g
            row = [Fraction(0)] * len(target)
            for mono, coeff in prod.terms.items():
                row[index[mono]] = coeff
            rows.append(row)
    if not rows:
        return []
    reduced, pivots = linalg.rref(rows)
    return [tuple(reduced[i]) for i in range(len(pivots))]


def annihilator_forms(component_basis, dimension: int):
    """Linear forms on Q^dimension vanishing exactly on the span of the
    given vectors; returned as the reduced echelon kernel basis."""
    vectors = [list(v) for v in component_basis]
    if not vectors:
        forms = [[Fraction(int(i == j)) for j in range(dimension)]
                 for i in range(dimension)]
        return [tuple(f) for f in forms]
    kernel = linalg.nullspace(vectors, ncols=dimension)
    if not kernel:
        return []
    reduced, pivots = linalg.rref(kernel)
    return [tuple(reduced[i]) for i in range(len(pivots))]
