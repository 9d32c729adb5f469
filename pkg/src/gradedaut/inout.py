"""Problem files, result bundles on disk, and script export.

A problem is a small declarative text file: `key = value` lines with
integers, quoted strings and nested arrays, comments starting at `#`,
and a `[grading]` section.  `parse_input` collects every diagnostic it
can before failing, and `print_input` writes the canonical form back,
so parse(print(p)) == p.

Result bundles persist as JSON under the schema name "graded-aut/1";
`read_report` undoes `write_report` exactly.  Timing is carried on the
in-memory bundle only and never serialized, which keeps reports
byte-stable across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebraaut import StabilizerPresentation, StabilizerTriple
from .errors import InputError, StructuralError, ValidationError
from .grading import DegreeMatrix, GradingGroup, GroupAutomorphism
from .polynomials import (GradedPolyRing, Ideal, Polynomial, default_names,
                          parse_polynomial, polynomial_to_str)
from .ringaut import (AutPresentation, AutTriple, CombinedIdeal, SymbolicMatrix,
                      _slot_ring, build_action_basis)
from .validation import ValidationReport

SCHEMA = "graded-aut/1"
MODES = ("all-subsets", "user-faces")


# --- problem files -----------------------------------------------------

@dataclass(frozen=True)
class ProblemInput:
    """One problem, exactly as a file describes it.

    `rows` holds the degree matrix with free rows first, then one row
    per torsion factor.  Generator strings are kept in canonical
    printed form.  `faces` lists 1-based variable index sets and is
    present exactly when mode is "user-faces".
    """

    free_rank: int
    torsion: tuple[int, ...]
    var_count: int
    rows: tuple[tuple[int, ...], ...]
    ideal_gens: tuple[str, ...] = ()
    w: tuple[int, ...] | None = None
    faces: tuple[tuple[int, ...], ...] | None = None
    mode: str = "all-subsets"

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(a) for a in self.torsion))
        object.__setattr__(self, "rows",
                           tuple(tuple(int(x) for x in r) for r in self.rows))
        object.__setattr__(self, "ideal_gens", tuple(self.ideal_gens))
        if self.w is not None:
            object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        if self.faces is not None:
            object.__setattr__(self, "faces",
                               tuple(tuple(int(i) for i in f) for f in self.faces))
        if self.mode not in MODES:
            raise StructuralError(f"unknown mode {self.mode!r}")
        if (self.faces is not None) != (self.mode == "user-faces"):
            raise StructuralError("faces and mode user-faces go together")

    def group(self) -> GradingGroup:
        return GradingGroup(self.free_rank, self.torsion)

    def degree_matrix(self) -> DegreeMatrix:
        return DegreeMatrix.from_rows(self.group(), self.rows)

    def ring(self) -> GradedPolyRing:
        return GradedPolyRing.from_degree_matrix(self.degree_matrix())

    def ideal(self, ring: GradedPolyRing | None = None) -> Ideal:
        ring = self.ring() if ring is None else ring
        return Ideal(ring, tuple(ring.parse(s) for s in self.ideal_gens))

    def w_element(self):
        if self.w is None:
            return None
        return self.group().from_coordinates(self.w)


def print_input(p: ProblemInput) -> str:
    lines = ["# graded ring automorphism problem"]
    lines.append(f"vars = {p.var_count}")
    lines.append("Q = [")
    for row in p.rows:
        lines.append("    [" + ", ".join(str(x) for x in row) + "],")
    lines.append("]")
    if p.ideal_gens:
        lines.append("ideal = [")
        for g in p.ideal_gens:
            lines.append(f'    "{g}",')
        lines.append("]")
    else:
        lines.append("ideal = []")
    if p.w is not None:
        lines.append("w = [" + ", ".join(str(x) for x in p.w) + "]")
    if p.faces is not None:
        lines.append("faces = [")
        for f in p.faces:
            lines.append("    [" + ", ".join(str(i) for i in f) + "],")
        lines.append("]")
    lines.append(f'mode = "{p.mode}"')
    lines.append("")
    lines.append("[grading]")
    lines.append(f"free_rank = {p.free_rank}")
    lines.append("torsion = [" + ", ".join(str(a) for a in p.torsion) + "]")
    return "\n".join(lines) + "\n"


class _Reader:
    """Character cursor with 1-based line and column tracking."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos]

    def take(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def skip_space(self, newlines: bool):
        while not self.eof():
            ch = self.peek()
            if ch in " \t" or (newlines and ch in "\r\n"):
                self.take()
            elif ch == "#":
                while not self.eof() and self.peek() != "\n":
                    self.take()
            else:
                return

    def skip_line(self):
        while not self.eof() and self.take() != "\n":
            pass

    def read_bare(self) -> str:
        out = []
        while not self.eof():
            ch = self.peek()
            if ch.isalnum() or ch in "_-":
                out.append(self.take())
            else:
                break
        return "".join(out)


def _read_value(rd: _Reader, diags: list):
    """One value: integer, quoted string, or array; arrays span lines."""
    line, col = rd.line, rd.col
    if rd.eof() or rd.peek() in "\r\n":
        diags.append((line, col, "missing value"))
        return None
    ch = rd.peek()
    if ch == '"':
        rd.take()
        out = []
        while True:
            if rd.eof() or rd.peek() == "\n":
                diags.append((line, col, "unterminated string"))
                return None
            c = rd.take()
            if c == '"':
                return "".join(out)
            out.append(c)
    if ch == "[":
        rd.take()
        items = []
        while True:
            rd.skip_space(newlines=True)
            if rd.eof():
                diags.append((line, col, "unterminated array"))
                return None
            if rd.peek() == "]":
                rd.take()
                return items
            items.append(_read_value(rd, diags))
            rd.skip_space(newlines=True)
            if rd.eof():
                diags.append((line, col, "unterminated array"))
                return None
            nxt = rd.peek()
            if nxt == ",":
                rd.take()
            elif nxt != "]":
                diags.append((rd.line, rd.col,
                              f"expected ',' or ']' in array, found {nxt!r}"))
                return None
    if ch == "-" or ch.isdigit():
        digits = []
        if ch == "-":
            digits.append(rd.take())
        while not rd.eof() and rd.peek().isdigit():
            digits.append(rd.take())
        text = "".join(digits)
        if text in ("", "-"):
            diags.append((line, col, "malformed integer"))
            return None
        return int(text)
    diags.append((line, col, f"unexpected character {ch!r} in value"))
    rd.take()
    return None


def _read_entries(text: str):
    """Raw scan: `full.key -> (value, line, col)` plus syntax diagnostics."""
    rd = _Reader(text)
    entries = {}
    diags = []
    section = ""
    while True:
        rd.skip_space(newlines=True)
        if rd.eof():
            break
        line, col = rd.line, rd.col
        if rd.peek() == "[":
            rd.take()
            name = rd.read_bare()
            if not name or rd.eof() or rd.peek() != "]":
                diags.append((line, col, "malformed section header"))
                rd.skip_line()
                continue
            rd.take()
            section = name
            rd.skip_space(newlines=False)
            if not rd.eof() and rd.peek() not in "\r\n":
                diags.append((rd.line, rd.col,
                              "unexpected text after section header"))
                rd.skip_line()
            continue
        key = rd.read_bare()
        if not key:
            diags.append((line, col, f"unexpected character {rd.peek()!r}"))
            rd.skip_line()
            continue
        rd.skip_space(newlines=False)
        if rd.eof() or rd.peek() != "=":
            diags.append((rd.line, rd.col, f"expected '=' after key {key!r}"))
            rd.skip_line()
            continue
        rd.take()
        rd.skip_space(newlines=False)
        value = _read_value(rd, diags)
        full = f"{section}.{key}" if section else key
        if full in entries:
            diags.append((line, col, f"duplicate key {full!r}"))
        else:
            entries[full] = (value, line, col)
        rd.skip_space(newlines=False)
        if not rd.eof() and rd.peek() not in "\r\n":
            diags.append((rd.line, rd.col,
                          f"unexpected text after the value of {full!r}"))
            rd.skip_line()
    return entries, diags


_KNOWN_KEYS = ("grading.free_rank", "grading.torsion", "vars", "Q",
               "ideal", "w", "faces", "mode")


def _as_int(entry, key, diags):
    value, line, col = entry
    if isinstance(value, int):
        return value
    diags.append((line, col, f"{key} must be an integer"))
    return None


def _as_int_list(entry, key, diags):
    value, line, col = entry
    if isinstance(value, list) and all(isinstance(x, int) for x in value):
        return [int(x) for x in value]
    diags.append((line, col, f"{key} must be an array of integers"))
    return None


def parse_input(text: str) -> ProblemInput:
    """Parse a problem file; raises InputError carrying every
    (line, column, message) diagnostic found."""
    entries, diags = _read_entries(text)
    for key, (_, line, col) in entries.items():
        if key not in _KNOWN_KEYS:
            diags.append((line, col, f"unknown key {key!r}"))

    def have(key):
        return key in entries and entries[key][0] is not None

    free_rank = torsion = var_count = None
    if have("grading.free_rank"):
        free_rank = _as_int(entries["grading.free_rank"], "free_rank", diags)
        if free_rank is not None and free_rank < 0:
            diags.append(entries["grading.free_rank"][1:]
                         + ("free_rank must be nonnegative",))
            free_rank = None
    elif "grading.free_rank" not in entries:
        diags.append((1, 1, "missing key grading.free_rank"))
    torsion = []
    if have("grading.torsion"):
        torsion = _as_int_list(entries["grading.torsion"], "torsion", diags)
        if torsion is not None and any(a < 2 for a in torsion):
            diags.append(entries["grading.torsion"][1:]
                         + ("every torsion order must be at least 2",))
            torsion = None
    if have("vars"):
        var_count = _as_int(entries["vars"], "vars", diags)
        if var_count is not None and var_count < 1:
            diags.append(entries["vars"][1:] + ("vars must be positive",))
            var_count = None
    elif "vars" not in entries:
        diags.append((1, 1, "missing key vars"))

    rows = None
    if have("Q"):
        value, line, col = entries["Q"]
        if not isinstance(value, list):
            diags.append((line, col, "Q must be an array of rows"))
        else:
            rows = []
            for i, row in enumerate(value, start=1):
                if not (isinstance(row, list)
                        and all(isinstance(x, int) for x in row)):
                    diags.append((line, col,
                                  f"Q row {i} must be an array of integers"))
                    rows = None
                    break
                if var_count is not None and len(row) != var_count:
                    diags.append((line, col,
                                  f"Q row {i} has {len(row)} entries, "
                                  f"expected vars = {var_count}"))
                    rows = None
                    break
                rows.append(tuple(row))
            if (rows is not None and free_rank is not None
                    and torsion is not None
                    and len(rows) != free_rank + len(torsion)):
                diags.append((line, col,
                              f"Q has {len(rows)} rows, expected free_rank"
                              f" + torsion count = {free_rank + len(torsion)}"))
                rows = None
    elif "Q" not in entries:
        diags.append((1, 1, "missing key Q"))

    gens = []
    if have("ideal"):
        value, line, col = entries["ideal"]
        if not isinstance(value, list):
            diags.append((line, col, "ideal must be an array of strings"))
            gens = None
        elif var_count is not None:
            names = default_names(var_count)
            for i, s in enumerate(value, start=1):
                if not isinstance(s, str):
                    diags.append((line, col,
                                  f"ideal generator {i} must be a string"))
                    continue
                try:
                    f = parse_polynomial(s, names)
                except InputError as exc:
                    msg = exc.diagnostics[0][2] if exc.diagnostics else "parse error"
                    diags.append((line, col, f"ideal generator {i}: {msg}"))
                    continue
                if f.is_zero():
                    diags.append((line, col, f"ideal generator {i} is zero"))
                    continue
                gens.append(polynomial_to_str(f, names))

    w = None
    if have("w"):
        w = _as_int_list(entries["w"], "w", diags)
        if (w is not None and free_rank is not None and torsion is not None
                and len(w) != free_rank + len(torsion)):
            diags.append(entries["w"][1:]
                         + (f"w has {len(w)} coordinates, expected "
                            f"free_rank + torsion count = "
                            f"{free_rank + len(torsion)}",))
            w = None

    faces = None
    if have("faces"):
        value, line, col = entries["faces"]
        if (not isinstance(value, list)
                or not all(isinstance(f, list) for f in value)):
            diags.append((line, col, "faces must be an array of index arrays"))
        elif not value:
            diags.append((line, col,
                          "faces, when given, must list at least one face"))
        else:
            faces = []
            for i, f in enumerate(value, start=1):
                if not f or not all(isinstance(x, int) for x in f):
                    diags.append((line, col,
                                  f"face {i} must be a nonempty integer array"))
                    faces = None
                    break
                if var_count is not None and any(
                        x < 1 or x > var_count for x in f):
                    diags.append((line, col,
                                  f"face {i} has an index outside 1..{var_count}"))
                    faces = None
                    break
                faces.append(tuple(f))
            if faces is not None:
                faces = tuple(faces)

    mode = None
    if have("mode"):
        value, line, col = entries["mode"]
        if not isinstance(value, str) or value not in MODES:
            diags.append((line, col,
                          "mode must be one of " + ", ".join(MODES)))
        else:
            mode = value
    if mode is None:
        mode = "user-faces" if faces is not None else "all-subsets"
    if mode == "user-faces" and faces is None and not diags:
        diags.append(entries["mode"][1:]
                     + ("mode user-faces needs a faces key",))
    if mode == "all-subsets" and faces is not None:
        diags.append(entries["mode"][1:]
                     + ("faces given, but mode is all-subsets",))

    if diags or None in (free_rank, torsion, var_count, rows, gens):
        raise InputError(sorted(set(diags)) or
                         [(1, 1, "incomplete problem description")])
    return ProblemInput(free_rank, tuple(torsion), var_count, tuple(rows),
                        tuple(gens), None if w is None else tuple(w),
                        faces, mode)


def read_input(path) -> ProblemInput:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_input(fh.read())


# --- result bundles ----------------------------------------------------

@dataclass(frozen=True)
class FilterResult:
    """Outcome of the chamber filter: the class w, the chamber's
    primitive rays, and the 0-based indices of the retained triples."""

    w: tuple[int, ...]
    retained: tuple[int, ...]
    chamber_rays: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        object.__setattr__(self, "retained",
                           tuple(int(i) for i in self.retained))
        object.__setattr__(self, "chamber_rays",
                           tuple(tuple(int(x) for x in r)
                                 for r in self.chamber_rays))


@dataclass(frozen=True)
class ResultBundle:
    """Everything one run produced.  Later stages may be absent; timing
    is informational only and never part of equality or serialization."""

    problem: ProblemInput
    report: ValidationReport | None = None
    weight_auts: tuple[tuple[tuple[int, ...], ...], ...] = ()
    presentation: AutPresentation | None = None
    stabilizer: StabilizerPresentation | None = None
    filter_result: FilterResult | None = None
    timing: float | None = field(default=None, compare=False)


def filtered_stabilizer(stab: StabilizerPresentation, retained):
    """The presentation cut down to the retained triples."""
    kept = tuple(stab.triples[i] for i in retained)
    return StabilizerPresentation(stab.ring, stab.ideal, stab.base, kept,
                                  stab.degree_roster,
                                  CombinedIdeal(tuple(t.ideal for t in kept)))


def _encode_poly(f: Polynomial):
    return [[list(m), [c.numerator, c.denominator]] for m, c in f.sorted_terms()]


def _decode_poly(data) -> Polynomial:
    terms = {}
    for mono, frac in data:
        terms[tuple(int(e) for e in mono)] = Fraction(int(frac[0]), int(frac[1]))
    return Polynomial(terms)


def _degree_rows(Q: DegreeMatrix):
    k = Q.group.free_rank
    l = Q.group.torsion_rank
    rows = [tuple(c.free_part[i] for c in Q.columns) for i in range(k)]
    rows += [tuple(c.torsion_part[j] for c in Q.columns) for j in range(l)]
    return rows


def _encode_ring(ring: GradedPolyRing):
    return {"free_rank": ring.grading.free_rank,
            "torsion": list(ring.grading.torsion_orders),
            "Q": [list(r) for r in _degree_rows(ring.degrees)]}


def _decode_ring(data) -> GradedPolyRing:
    group = GradingGroup(int(data["free_rank"]),
                         tuple(int(a) for a in data["torsion"]))
    Q = DegreeMatrix.from_rows(group, data["Q"])
    return GradedPolyRing.from_degree_matrix(Q)


def _encode_problem(p: ProblemInput):
    return {"grading": {"free_rank": p.free_rank, "torsion": list(p.torsion)},
            "vars": p.var_count,
            "Q": [list(r) for r in p.rows],
            "ideal": list(p.ideal_gens),
            "w": None if p.w is None else list(p.w),
            "faces": None if p.faces is None else [list(f) for f in p.faces],
            "mode": p.mode}


def _decode_problem(data) -> ProblemInput:
    faces = data.get("faces")
    return ProblemInput(
        int(data["grading"]["free_rank"]),
        tuple(int(a) for a in data["grading"]["torsion"]),
        int(data["vars"]),
        tuple(tuple(int(x) for x in r) for r in data["Q"]),
        tuple(data["ideal"]),
        None if data.get("w") is None else tuple(int(x) for x in data["w"]),
        None if faces is None else tuple(tuple(int(i) for i in f)
                                         for f in faces),
        data.get("mode", "all-subsets"))


_REPORT_FLAGS = ("effective", "pointed", "generators_homogeneous",
                 "contained_in_square", "variable_components_trivial",
                 "has_lattice_basis")


def _encode_report(report: ValidationReport):
    out = {flag: getattr(report, flag) for flag in _REPORT_FLAGS}
    out["messages"] = list(report.messages)
    return out


def _decode_report(data) -> ValidationReport:
    return ValidationReport(*(bool(data[flag]) for flag in _REPORT_FLAGS),
                            messages=tuple(data["messages"]))


def _encode_presentation(pres: AutPresentation):
    return {"ring": _encode_ring(pres.ring),
            "n": pres.n,
            "triples": [{"weight_aut": [list(r) for r in
                                        t.weight_aut.display_matrix()],
                         "pattern": [list(r) for r in t.matrix.pattern],
                         "equations": [_encode_poly(g) for g in t.ideal]}
                        for t in pres.triples]}


def _decode_presentation(data) -> AutPresentation:
    ring = _decode_ring(data["ring"])
    basis = build_action_basis(ring)
    n = int(data["n"])
    if basis.n != n:
        raise InputError([(1, 1, f"presentation section is inconsistent: "
                           f"stored n = {n}, ring gives n = {basis.n}")])
    triples = []
    for t in data["triples"]:
        aut = GroupAutomorphism.from_display(ring.grading, t["weight_aut"])
        pattern = tuple(tuple(int(x) for x in row) for row in t["pattern"])
        gens = tuple(_decode_poly(g) for g in t["equations"])
        triples.append(AutTriple(SymbolicMatrix(n, pattern), aut, gens))
    triples = tuple(triples)
    combined = CombinedIdeal(tuple(t.ideal for t in triples))
    return AutPresentation(ring, basis, _slot_ring(basis), triples, combined)


def _encode_stabilizer(stab: StabilizerPresentation):
    roster = [list(u.free_part) + list(u.torsion_part)
              for u in stab.degree_roster]
    return {"base": _encode_presentation(stab.base),
            "ideal": [_encode_poly(g) for g in stab.ideal.generators],
            "roster": roster,
            "stabilizer_gens": [[_encode_poly(g) for g in t.stabilizer_gens]
                                for t in stab.triples]}


def _decode_stabilizer(data) -> StabilizerPresentation:
    base = _decode_presentation(data["base"])
    ring = base.ring
    ideal = Ideal(ring, tuple(_decode_poly(g) for g in data["ideal"]))
    roster = tuple(ring.grading.from_coordinates(c) for c in data["roster"])
    gen_lists = data["stabilizer_gens"]
    if len(gen_lists) != len(base.triples):
        raise InputError([(1, 1, "stabilizer section is inconsistent: "
                           f"{len(gen_lists)} generator lists for "
                           f"{len(base.triples)} triples")])
    triples = tuple(StabilizerTriple(t, tuple(_decode_poly(g) for g in gens))
                    for t, gens in zip(base.triples, gen_lists))
    combined = CombinedIdeal(tuple(t.ideal for t in triples))
    return StabilizerPresentation(ring, ideal, base, triples, roster, combined)


def bundle_to_data(bundle: ResultBundle) -> dict:
    return {
        "schema": SCHEMA,
        "problem": _encode_problem(bundle.problem),
        "validation": (None if bundle.report is None
                       else _encode_report(bundle.report)),
        "weight_symmetries": [[list(r) for r in m]
                              for m in bundle.weight_auts],
        "presentation": (None if bundle.presentation is None
                         else _encode_presentation(bundle.presentation)),
        "stabilizer": (None if bundle.stabilizer is None
                       else _encode_stabilizer(bundle.stabilizer)),
        "filter": (None if bundle.filter_result is None
                   else {"w": list(bundle.filter_result.w),
                         "retained": list(bundle.filter_result.retained),
                         "chamber_rays": [list(r) for r in
                                          bundle.filter_result.chamber_rays]}),
        "timing": None,
    }


def bundle_from_data(data) -> ResultBundle:
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        found = data.get("schema") if isinstance(data, dict) else None
        raise InputError([(1, 1, f"unsupported report schema {found!r}; "
                           f"this build reads {SCHEMA!r}")])
    problem = _decode_problem(data["problem"])
    report = (None if data.get("validation") is None
              else _decode_report(data["validation"]))
    weight_auts = tuple(tuple(tuple(int(x) for x in row) for row in m)
                        for m in data.get("weight_symmetries", []))
    pres = (None if data.get("presentation") is None
            else _decode_presentation(data["presentation"]))
    stab = (None if data.get("stabilizer") is None
            else _decode_stabilizer(data["stabilizer"]))
    fdata = data.get("filter")
    filt = (None if fdata is None
            else FilterResult(tuple(fdata["w"]), tuple(fdata["retained"]),
                              tuple(tuple(r) for r in fdata["chamber_rays"])))
    return ResultBundle(problem, report, weight_auts, pres, stab, filt)


def report_to_text(bundle: ResultBundle) -> str:
    return json.dumps(bundle_to_data(bundle), indent=2) + "\n"


def report_from_text(text: str) -> ResultBundle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError([(exc.lineno, exc.colno,
                           f"not valid JSON: {exc.msg}")]) from None
    return bundle_from_data(data)


def write_report(bundle: ResultBundle, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report_to_text(bundle))


def read_report(path) -> ResultBundle:
    with open(path, "r", encoding="utf-8") as fh:
        return report_from_text(fh.read())


# --- script export -----------------------------------------------------

def export_cas_script(bundle: ResultBundle, dialect: str = "singular-like") -> str:
    """A ready-to-run script declaring the slot ring and every equation
    list, with dimension and absolute-decomposition commands at the end.
    The output is a pure function of the bundle."""
    if dialect != "singular-like":
        raise ValidationError(f"unsupported export dialect {dialect!r}; "
                              "this build writes singular-like")
    if bundle.stabilizer is not None:
        pres = bundle.stabilizer.base
        items = list(enumerate(t.ideal for t in bundle.stabilizer.triples))
    elif bundle.presentation is not None:
        pres = bundle.presentation
        items = list(enumerate(t.ideal for t in bundle.presentation.triples))
    else:
        raise ValidationError("bundle carries no presentation to export")
    if bundle.filter_result is not None:
        keep = set(bundle.filter_result.retained)
        items = [(i, gens) for i, gens in items if i in keep]
    n = pres.n
    names = pres.slot_names()
    lines = ["// automorphism equations, singular-like dialect",
             f"// {len(items)} weight symmetries, matrix size {n}",
             'LIB "primdec.lib";',
             f"ring Sp = 0,(Y(1..{n * n}),Z),dp;"]
    ideal_names = []
    for pos, (orig, gens) in enumerate(items, start=1):
        name = f"J{pos}"
        ideal_names.append(name)
        lines.append("")
        lines.append(f"// triple {orig + 1} of the full list")
        body = ",\n  ".join(polynomial_to_str(g, names) for g in gens)
        lines.append(f"ideal {name} = {body};")
    if ideal_names:
        lines.append("")
        if len(ideal_names) == 1:
            lines.append(f"ideal J = {ideal_names[0]};")
        else:
            lines.append("ideal J = intersect(" + ",".join(ideal_names) + ");")
        for name in ideal_names:
            lines.append(f"dim(std({name}));")
        lines.append("dim(std(J));")
        lines.append("list absJ = absPrimdecGTZ(J);")
        lines.append("absJ;")
    return "\n".join(lines) + "\n"
