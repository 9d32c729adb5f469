"""Command line front end.

Subcommands mirror the library stages: `check` validates, `weights-aut`
lists the grading-group symmetries, `autks` and `autgradalg` print the
equation presentations, `autxhat` applies the chamber filter, and
`export` writes a CAS script.  Exit codes: 0 success, 1 validation
failure, 2 parse failure, 3 resource-guard refusal.

The default worker count comes from the GRADED_AUT_JOBS environment
variable; `--jobs` overrides it.  All stdout output is a pure function
of the input, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .algebraaut import aut_grad_alg, render_stabilizer
from .errors import GuardError, InputError, StructuralError, ValidationError
from .gitfan import aut_xhat, git_cone, render_cone
from .inout import (FilterResult, ResultBundle, export_cas_script,
                    parse_input, read_input, report_from_text, write_report)
from .ringaut import aut_ks, render_presentation
from .validation import validate_presentation
from .weightsym import aut_gen_weights


def _default_jobs() -> int:
    raw = os.environ.get("GRADED_AUT_JOBS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return n if n >= 1 else 1


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="FILE",
                        help="problem file (export also accepts a report)")
    common.add_argument("--w", metavar="LIST",
                        help="class to filter by, comma-separated integers")
    common.add_argument("--mode", choices=("all-subsets", "user-faces"),
                        help="orbit cone enumeration mode")
    common.add_argument("--dialect", default="singular-like", metavar="NAME",
                        help="export dialect")
    common.add_argument("--out", metavar="PATH",
                        help="write a report (or the exported script) here")
    common.add_argument("--jobs", type=int, metavar="N",
                        help="worker processes; default from GRADED_AUT_JOBS")
    top = argparse.ArgumentParser(
        prog="graded-aut",
        description="automorphism presentations of graded affine algebras")
    sub = top.add_subparsers(dest="command", required=True)
    for name, text in (("check", "validate a problem file"),
                       ("weights-aut", "symmetries of the generator weights"),
                       ("autks", "equations for the polynomial ring"),
                       ("autgradalg", "equations for the quotient algebra"),
                       ("autxhat", "filter by the chamber of w"),
                       ("export", "write a CAS script")):
        sub.add_parser(name, parents=[common], help=text)
    return top


def _w_coords(args, problem):
    if args.w is not None:
        parts = [p.strip() for p in args.w.split(",")]
        try:
            coords = tuple(int(p) for p in parts)
        except ValueError:
            raise InputError([(1, 1, "--w must be a comma-separated integer "
                               f"list, got {args.w!r}")]) from None
    elif problem.w is not None:
        coords = problem.w
    else:
        raise InputError([(1, 1, "no class given: add a w key to the input "
                           "file or pass --w")])
    expected = problem.free_rank + len(problem.torsion)
    if len(coords) != expected:
        raise InputError([(1, 1, f"w has {len(coords)} coordinates, "
                           f"expected {expected}")])
    return coords


def _faces_used(args, problem):
    mode = args.mode if args.mode is not None else problem.mode
    if mode == "user-faces":
        if problem.faces is None:
            raise InputError([(1, 1, "mode user-faces needs faces in the "
                               "input file")])
        return problem.faces
    return None


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    start = time.perf_counter()
    jobs = args.jobs if args.jobs is not None and args.jobs >= 1 \
        else _default_jobs()

    if args.command == "export":
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            bundle = report_from_text(text)
        else:
            problem = parse_input(text)
            ring = problem.ring()
            ideal = problem.ideal(ring)
            report = validate_presentation(ring, ideal)
            auts = tuple(a.display_matrix()
                         for a in aut_gen_weights(ring.degrees))
            if problem.ideal_gens:
                stab = aut_grad_alg(ring, ideal, jobs=jobs)
                bundle = ResultBundle(problem, report, auts, stab.base, stab,
                                      timing=time.perf_counter() - start)
            else:
                pres = aut_ks(ring, jobs=jobs)
                bundle = ResultBundle(problem, report, auts, pres,
                                      timing=time.perf_counter() - start)
        _emit(export_cas_script(bundle, args.dialect), args.out)
        return 0

    problem = read_input(args.input)
    ring = problem.ring()
    ideal = problem.ideal(ring)
    report = validate_presentation(ring, ideal)

    if args.command == "check":
        for label, flag in report.flag_items():
            print(f"{label}: {'pass' if flag else 'FAIL'}")
        for msg in report.messages:
            print("note: " + msg)
        if args.out:
            write_report(ResultBundle(
                problem, report, timing=time.perf_counter() - start),
                args.out)
        return 0 if report.ok else 1

    if not report.grading_ok:
        raise ValidationError("; ".join(report.messages) or "invalid grading")
    auts = aut_gen_weights(ring.degrees)
    displays = tuple(a.display_matrix() for a in auts)

    if args.command == "weights-aut":
        print(f"{len(auts)} weight symmetries")
        for i, a in enumerate(auts, start=1):
            print(f"\nsymmetry {i}:")
            print(str(a))
        if args.out:
            write_report(ResultBundle(
                problem, report, displays,
                timing=time.perf_counter() - start), args.out)
        return 0

    if args.command == "autks":
        pres = aut_ks(ring, jobs=jobs)
        print(render_presentation(pres))
        if args.out:
            write_report(ResultBundle(
                problem, report, displays, pres,
                timing=time.perf_counter() - start), args.out)
        return 0

    if args.command == "autgradalg":
        stab = aut_grad_alg(ring, ideal, jobs=jobs)
        print(render_stabilizer(stab))
        if args.out:
            write_report(ResultBundle(
                problem, report, displays, stab.base, stab,
                timing=time.perf_counter() - start), args.out)
        return 0

    # autxhat: check the class and its chamber before the heavy stages
    coords = _w_coords(args, problem)
    faces = _faces_used(args, problem)
    w = problem.group().from_coordinates(coords)
    lam = git_cone(ring.degrees, w, faces, jobs=jobs)
    stab = aut_grad_alg(ring, ideal, jobs=jobs)
    filtered = aut_xhat(stab, w, faces, jobs=jobs)
    retained = tuple(i for i, t in enumerate(stab.triples)
                     if t in filtered.triples)
    print(f"git chamber of w = {w}:")
    print(render_cone(lam))
    print(f"\n{len(filtered.triples)} of {len(stab.triples)} weight "
          "symmetries fix the chamber\n")
    print(render_stabilizer(filtered))
    if args.out:
        write_report(ResultBundle(
            problem, report, displays, stab.base, stab,
            FilterResult(coords, retained, lam.rays),
            timing=time.perf_counter() - start), args.out)
    return 0


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return _run(args)
    except InputError as exc:
        for line, col, msg in exc.diagnostics:
            print(f"{args.input}:{line}:{col}: {msg}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
