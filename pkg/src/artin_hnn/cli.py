"""Command line interface.

Exit codes:

    0  success
    1  invalid system or bijection (validation error)
    2  usage error (unknown subcommand or flag)
    3  input parse error
    4  verification failed (some check has status ``fail``)
    5  undecided: coset enumeration overflow or oracle budget exhausted
    6  internal construction failure
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .embedding import construct
from .errors import (
    BudgetExhausted,
    InputParseError,
    StageError,
    ValidationError,
)
from .io import build_record, certificate_record, dumps, format_presentation, load_input
from .oracles import ReductionBudget, coset_enumerate
from .presentations import artin_presentation
from .systems import INF
from .verify import DEFAULT_MAX_COSETS, run_checks
from .words import format_word

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VERIFY_FAILED = 4
EXIT_UNDECIDED = 5
EXIT_INTERNAL = 6


def _lab(v) -> str:
    return "inf" if v == INF else str(v)


def _labels(values) -> str:
    vals = sorted(values, key=lambda v: (v == INF, v if v != INF else 0))
    return "{" + ", ".join(_lab(v) for v in vals) + "}"


def _load(path: str):
    doc = load_input(path)
    return doc.validated()


def cmd_validate(args, out) -> int:
    system, phi = _load(args.file)
    print(f"kind = {system.kind}", file=out)
    print(f"generators = {' '.join(system.generators)}", file=out)
    print(f"L(S,m) = {_labels(system.label_set())}", file=out)
    print(f"right-angled = {'yes' if system.is_right_angled else 'no'}", file=out)
    print(f"S' = {{{', '.join(phi.domain)}}}", file=out)
    print(f"S'' = {{{', '.join(phi.image)}}}", file=out)
    print("phi preserves labels", file=out)
    return EXIT_OK


def cmd_build(args, out) -> int:
    system, phi = _load(args.file)
    cert = construct(system, phi, args.k)
    if args.format == "record":
        out.write(dumps(build_record(cert)))
        return EXIT_OK
    lam = cert.coupling
    print(f"k = {cert.k}", file=out)
    print(f"loops = {[list(c) for c in lam.loops]}", file=out)
    print(f"paths = {[list(p) for p in lam.paths]}", file=out)
    print(f"classes ({len(cert.cover.classes)}):", file=out)
    for name in cert.cover.classes:
        members = " ".join(f"({i},{s})" for i, s in cert.cover.members[name])
        print(f"  {name} = {{{members}}}", file=out)
    print("psi:", file=out)
    for i, table in enumerate(cert.cover.psi):
        print(f"  psi_{i}: " + ", ".join(f"{s}->{x}" for s, x in table.items()), file=out)
    print("mbar:", file=out)
    classes = cert.cover.classes
    for n, x in enumerate(classes):
        for y in classes[n + 1 :]:
            print(f"  m({x},{y}) = {_lab(cert.mbar.m(x, y))}", file=out)
    print(f"target labels = {_labels(cert.target_system.label_set())}", file=out)
    header = f"target {cert.kind} group ({len(cert.target.generators)} generators)"
    out.write(format_presentation(cert.target, header))
    return EXIT_OK


def cmd_embed(args, out) -> int:
    system, phi = _load(args.file)
    cert = construct(system, phi, args.k)
    kernel = cert.kernel
    print(f"k = {cert.k}; transversal = " + ", ".join(format_word(w) or "1" for w in kernel.transversal), file=out)
    print("kernel generator : ambient word : image", file=out)
    emb = cert.embedding
    for g in kernel.subgroup_presentation.generators:
        amb = format_word(kernel.generator_words[g]) or "1"
        img = format_word(emb.images[g]) or "1"
        print(f"  {g} : {amb} : {img}", file=out)
    if cert.theta_doubling is not None:
        print("theta:", file=out)
        for g, w in cert.theta_doubling.images.items():
            if w != ((g, 1),):
                print(f"  {g} -> {format_word(w)}", file=out)
    return EXIT_OK


def _verify_options(args) -> dict:
    return {
        "samples": args.samples,
        "max_syllables": args.max_syllables,
        "seed": args.seed,
        "budget": ReductionBudget(max_states=args.budget),
        "max_cosets": args.max_cosets,
    }


def _print_report(report, out) -> None:
    for c in report.checks:
        print(f"{c.status.upper():<12} {c.name} ({c.elapsed:.3f}s): {c.detail}", file=out)
    print(
        f"seed={report.seed} budgets={report.budgets} "
        f"fail={len(report.failed())} inconclusive={len(report.inconclusive())}",
        file=out,
    )


def cmd_verify(args, out) -> int:
    system, phi = _load(args.file)
    cert = construct(system, phi, args.k)
    report = run_checks(cert, **_verify_options(args))
    _print_report(report, out)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_certify(args, out) -> int:
    system, phi = _load(args.file)
    cert = construct(system, phi, args.k)
    cert.report = run_checks(cert, **_verify_options(args))
    _print_report(cert.report, out)
    if not cert.report.ok:
        print("certificate not issued: some check failed", file=out)
        return EXIT_VERIFY_FAILED
    Path(args.output).write_text(dumps(certificate_record(cert)), encoding="utf-8")
    print(f"certificate written to {args.output}", file=out)
    return EXIT_OK


def cmd_order(args, out) -> int:
    doc = load_input(args.file)
    system = doc.system()
    if system.kind != "coxeter":
        print("error: order needs a coxeter system", file=sys.stderr)
        return EXIT_INVALID
    table = coset_enumerate(artin_presentation(system), (), args.max_cosets)
    print(f"order = {table.index}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artin-hnn",
        description="Virtual embeddings of Artin/Coxeter HNN-extensions into Artin/Coxeter groups.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a system and bijection")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    def with_k(p):
        p.add_argument("--k", type=int, default=None, help="override the minimal cover index")

    p = sub.add_parser("build", help="print k, the cover classes, labels and the target presentation")
    p.add_argument("file")
    with_k(p)
    p.add_argument("--format", choices=("text", "record"), default="text")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("embed", help="print kernel generators and their images")
    p.add_argument("file")
    with_k(p)
    p.set_defaults(func=cmd_embed)

    def with_verify(p):
        with_k(p)
        p.add_argument("--samples", type=int, default=100)
        p.add_argument("--max-syllables", type=int, default=4)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=ReductionBudget().max_states, help="max states per Tits closure")
        p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    p = sub.add_parser("verify", help="run every check and print the report")
    p.add_argument("file")
    with_verify(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="run the pipeline and write a certificate record")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    with_verify(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("order", help="order of a Coxeter group by coset enumeration")
    p.add_argument("file")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.set_defaults(func=cmd_order)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"invalid input [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except StageError as exc:
        if isinstance(exc.cause, ValidationError):
            print(f"invalid input [{exc.cause.code}]: {exc.cause}", file=sys.stderr)
            return EXIT_INVALID
        print(f"internal error [{exc.cause.code}] in stage {exc.stage}: {exc.cause}", file=sys.stderr)
        return EXIT_INTERNAL
    except BudgetExhausted as exc:
        print(f"undecided [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED


def main() -> None:
    sys.exit(run())
