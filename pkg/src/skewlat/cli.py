"""Command-line interface.

Exit status: 0 on success with every checked property holding, 1 when a
checked property fails (a witness is printed), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import matrices
from .algebra import classify, d_decomposition, subalgebra, verify_skew_lattice
from .category import associativity_audit, build_coset_category, categorical_verdict
from .cosets import coset_bijections, coset_partition, image_set
from .errors import NotClosed, NotComparable, SkewLatticeError
from .fixtures import ALGEBRAS
from .formats import MatrixFile, parse_algebra, parse_matrices, serialize_algebra, serialize_matrices
from .report import (
    PREDICATES,
    export_dot,
    format_classes,
    format_witness,
    report,
    search_subalgebras,
    verification_report,
)

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None
    try:
        return parse_algebra(text)
    except (SkewLatticeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_skew(path: str, out):
    alg = _load(path)
    rep = verification_report(alg)
    if not rep.ok:
        out.write(rep.text())
        return alg, False
    return alg, True


def cmd_check(args, out) -> int:
    rep = verification_report(_load(args.file))
    out.write(rep.text())
    return OK if rep.ok else FAILED


def cmd_report(args, out) -> int:
    rep = report(_load(args.file))
    out.write(rep.text())
    return OK if rep.ok else FAILED


def cmd_classify(args, out) -> int:
    alg, ok = _load_skew(args.file, out)
    if not ok:
        return FAILED
    for name, verdict in classify(alg):
        out.write(f"{name}: {'true' if verdict.holds else 'false'}\n")
        if not verdict.holds:
            out.write(f"{name}.witness: {format_witness(alg, verdict.witness)}\n")
    return OK


def cmd_dclasses(args, out) -> int:
    alg, ok = _load_skew(args.file, out)
    if not ok:
        return FAILED
    d = d_decomposition(alg)
    for i, cls in enumerate(d.classes):
        below = [k for k in range(len(d)) if d.above(i, k)]
        out.write(f"class {i}: {format_classes(alg, [cls])} above {below}\n")
    out.write("quotient_meet:\n")
    out.writelines(" ".join(map(str, row)) + "\n" for row in d.quotient_meet)
    out.write("quotient_join:\n")
    out.writelines(" ".join(map(str, row)) + "\n" for row in d.quotient_join)
    out.write(f"is_lattice: {'true' if d.is_lattice else 'false'}\n")
    return OK


def cmd_cosets(args, out) -> int:
    alg, ok = _load_skew(args.file, out)
    if not ok:
        return FAILED
    d = d_decomposition(alg)
    for i in (args.upper, args.lower):
        if not 0 <= i < len(d):
            raise InputError(f"no D-class {i}; classes are 0..{len(d) - 1}")
    try:
        part = coset_partition(alg, args.upper, args.lower)
    except NotComparable as exc:
        raise InputError(str(exc)) from None
    out.write(f"upper: {format_classes(alg, [d.classes[args.upper]])}\n")
    out.write(f"lower: {format_classes(alg, [d.classes[args.lower]])}\n")
    out.write(f"up_cosets: {format_classes(alg, part.up_cosets)}\n")
    out.write(f"down_cosets: {format_classes(alg, part.down_cosets)}\n")
    for x in d.classes[args.upper]:
        img = image_set(alg, x, args.lower)
        out.write(f"image_set {alg.label(x)}: {format_classes(alg, [img.members])}\n")
    for f in coset_bijections(alg, args.upper, args.lower):
        out.write(f"bijection: {format_witness(alg, f)}\n")
    return OK


def cmd_category(args, out) -> int:
    alg, ok = _load_skew(args.file, out)
    if not ok:
        return FAILED
    verdict = categorical_verdict(alg)
    out.write(f"categorical: {'true' if verdict.categorical else 'false'}\n")
    if not verdict.categorical:
        out.write(f"categorical.witness: {format_witness(alg, verdict.categorical_witness)}\n")
    out.write(f"strictly_categorical: {'true' if verdict.strictly_categorical else 'false'}\n")
    if not verdict.strictly_categorical:
        out.write(f"strictly_categorical.witness: {format_witness(alg, verdict.strict_witness)}\n")
    if verdict.categorical:
        cat = build_coset_category(alg)
        out.write(f"objects: {len(cat.objects)}\n")
        for (A, B), fs in sorted(cat.hom.items()):
            if fs:
                out.write(f"hom {A} {B}: " + " ".join(format_witness(alg, f) for f in fs) + "\n")
    if args.audit_assoc:
        audit = associativity_audit(alg)
        out.write(f"audit.triples: {audit.triples_checked}\n")
        out.write(f"audit.failures: {len(audit.witnesses)}\n")
        for w in audit.witnesses:
            out.write("audit.witness: delta={} psi={} phi={} left={} right={}\n".format(
                *(format_witness(alg, v) for v in (w.delta, w.psi, w.phi, w.left, w.right))))
    return OK


def cmd_dot(args, out) -> int:
    alg, ok = _load_skew(args.file, out)
    if not ok:
        return FAILED
    out.write(export_dot(alg))
    return OK


def _parse_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad element list {text!r}") from None


def cmd_sub(args, out) -> int:
    alg = _load(args.file)
    elems = _parse_list(args.elements)
    if not elems or any(not 0 <= x < alg.size for x in elems):
        raise InputError(f"elements must lie in 0..{alg.size - 1}")
    try:
        sub = subalgebra(alg, elems)
    except NotClosed as exc:
        out.write(f"not_closed: {exc}\n")
        return FAILED
    out.write(serialize_algebra(sub))
    return OK


def cmd_search(args, out) -> int:
    alg, ok = _load_skew(args.file, out)
    if not ok:
        return FAILED
    if args.pred not in PREDICATES:
        raise InputError(f"unknown predicate {args.pred!r}; choose from {', '.join(sorted(PREDICATES))}")
    for subset in search_subalgebras(alg, args.max, args.pred):
        out.write(" ".join(map(str, subset)) + "\n")
    return OK


def cmd_fixture(args, out) -> int:
    if args.name in ALGEBRAS:
        out.write(serialize_algebra(ALGEBRAS[args.name]))
        return OK
    lat = getattr(matrices, args.name)(args.char)
    if args.induced:
        out.write(serialize_algebra(lat.algebra))
    else:
        mats = dict(zip(lat.names, lat.elements))
        out.write(serialize_matrices(MatrixFile(args.char, lat.elements[0].dim, mats)))
    return OK


def cmd_closure(args, out) -> int:
    try:
        mf = parse_matrices(Path(args.file).read_text())
    except OSError as exc:
        raise InputError(str(exc)) from None
    except (SkewLatticeError, ValueError) as exc:
        raise InputError(f"{args.file}: {exc}") from None
    try:
        lat = matrices.closure(list(mf.matrices.values()), cap=args.cap, names=list(mf.matrices))
    except SkewLatticeError as exc:
        out.write(f"closure_failed: {exc}\n")
        return FAILED
    out.write(f"# {len(lat)} elements; nabla equals circle: {'true' if lat.nabla_is_circ else 'false'}\n")
    for name, m in zip(lat.names, lat.elements):
        if name not in mf.matrices:
            out.write(f"# {name} = " + " / ".join(" ".join(map(str, r)) for r in m.entries) + "\n")
    out.write(serialize_algebra(lat.algebra))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewlat", description="Finite skew lattice toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("check", cmd_check, "verify the skew lattice axioms"),
        ("report", cmd_report, "full key/value report"),
        ("classify", cmd_classify, "variety and handedness flags"),
        ("dclasses", cmd_dclasses, "D-classes and the lattice reflection"),
        ("dot", cmd_dot, "admissible Hasse diagram in DOT"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.set_defaults(func=fn)

    p = sub.add_parser("cosets", help="coset partitions between two D-classes")
    p.add_argument("file")
    p.add_argument("--upper", type=int, required=True)
    p.add_argument("--lower", type=int, required=True)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("category", help="categorical verdicts and the coset category")
    p.add_argument("file")
    p.add_argument("--audit-assoc", action="store_true", help="audit associativity of the cross product")
    p.set_defaults(func=cmd_category)

    p = sub.add_parser("sub", help="restrict to a closed subset")
    p.add_argument("file")
    p.add_argument("--elements", required=True, help="comma-separated element indices")
    p.set_defaults(func=cmd_sub)

    p = sub.add_parser("search", help="closed subsets satisfying a predicate")
    p.add_argument("file")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--pred", default="any")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fixture", help="emit a built-in example")
    p.add_argument("name", choices=["fig1", "fig3", "x2", "example19", "example20"])
    p.add_argument("--char", type=int, default=0, help="characteristic for matrix examples")
    p.add_argument("--induced", action="store_true", help="emit the induced algebra of a matrix example")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("closure", help="close a matrix file under product and nabla")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=4096)
    p.set_defaults(func=cmd_closure)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except SkewLatticeError as exc:
        out.write(f"failed: {exc}\n")
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
