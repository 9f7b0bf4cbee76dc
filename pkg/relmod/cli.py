"""Command line entry point: ``relmod <subcommand> ...``.

Exit status is 0 on success, 1 when a verified scenario fails and 2 on any
library or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence

from .cayley import build_ball, growth, to_dot
from .complexes import (
    TwoComplex,
    double_presentation,
    trefoil_ki,
    verify_trefoil_genset,
)
from .config import get_settings
from .errors import RelmodError
from .fox import fox_derive, fox_vector
from .groupring import format_element
from .oracles import parse_oracle
from .presentations import Presentation, dump_presentation, format_presentation, load_presentation
from .scenarios import ScenarioReport, run_all, scenario_ids
from .words import format_word, parse_gen, parse_word

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _split_words(text: str) -> list[str]:
    return [part.strip() for part in text.split(";") if part.strip()]


def _format_report(report: ScenarioReport) -> str:
    lines = [f"{report.status.upper():<4} {report.id} ({len(report.steps)} steps, {report.ms:.1f} ms)"]
    for step in report.steps:
        if not step.passed:
            lines.append(f"    {step.desc}: expected {step.expected}, got {step.actual}")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    ids = None if args.all or args.id is None else [args.id]
    jobs = args.jobs if args.jobs is not None else get_settings().jobs
    reports = run_all(ids, jobs=jobs)
    if args.json:
        _out(json.dumps([report.to_dict() for report in reports], indent=2))
    else:
        for report in reports:
            _out(_format_report(report))
        passed = sum(report.passed for report in reports)
        _out(f"{passed}/{len(reports)} scenarios passed")
    return 0 if all(report.passed for report in reports) else 1


def cmd_nf(args: argparse.Namespace) -> int:
    oracle = parse_oracle(args.group)
    normal = oracle.nf(parse_word(args.word))
    if args.json:
        _out(json.dumps({"group": oracle.describe(), "word": args.word, "nf": format_word(normal.word)}))
    else:
        _out(format_word(normal.word))
    return 0


def cmd_fox(args: argparse.Namespace) -> int:
    oracle = parse_oracle(args.group)
    word = parse_word(args.word)
    if args.wrt:
        g = parse_gen(args.wrt)
        derivative = fox_derive(word, g, oracle)
        if args.json:
            _out(json.dumps({str(g): [[c, format_word(w)] for w, c in derivative]}))
        else:
            _out(f"d/d{g}: {format_element(derivative)}")
        return 0
    vector = fox_vector(word, sorted(word.gens()), oracle)
    if args.json:
        _out(json.dumps(vector.to_json()))
    else:
        for g in vector.gens:
            _out(f"d/d{g}: {format_element(vector[g])}")
    return 0


def cmd_ball(args: argparse.Namespace) -> int:
    oracle = parse_oracle(args.group)
    if args.gens:
        gens = tuple(parse_word(text) for text in _split_words(args.gens))
    else:
        gens = tuple(g.word() for g in oracle.generators())
    ball = build_ball(oracle, gens, args.radius, args.budget)
    if args.dot:
        _out(to_dot(ball))
        return 0
    _out(f"vertices: {ball.graph.number_of_nodes()}")
    _out(f"edges: {ball.graph.number_of_edges()}")
    if args.stats:
        _out("growth: " + " ".join(str(size) for size in growth(ball)))
    return 0


def cmd_chi(args: argparse.Namespace) -> int:
    complex_ = TwoComplex.from_presentation(load_presentation(args.file))
    _out(str(complex_.chi))
    return 0


def _emit_presentation(presentation: Presentation, out: str | None) -> None:
    if out:
        dump_presentation(presentation, out)
        logger.info("Wrote %s", out)
    else:
        _out(format_presentation(presentation).rstrip("\n"))


def cmd_double(args: argparse.Namespace) -> int:
    presentation = load_presentation(args.file)
    ids = [parse_word(text) for text in _split_words(args.ids or "")]
    doubled = double_presentation(presentation, ids)
    _emit_presentation(doubled, args.out)
    _out(f"chi: {TwoComplex(doubled).chi}")
    return 0


def cmd_trefoil_ki(args: argparse.Namespace) -> int:
    doubled = trefoil_ki(args.i)
    _emit_presentation(doubled, args.out)
    _out(f"chi: {TwoComplex(doubled).chi}")
    _out(f"generating set verified: {verify_trefoil_genset(args.i)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relmod",
        description="Word problems, Fox calculus and presentation complexes for BS(2,3) and friends.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the scenario catalog")
    verify.add_argument("id", nargs="?", choices=scenario_ids(), help="single scenario id")
    verify.add_argument("--all", action="store_true", help="run every scenario (default)")
    verify.add_argument("--json", action="store_true", help="emit a JSON report array")
    verify.add_argument("--jobs", type=int, default=None, help="worker threads")
    verify.set_defaults(func=cmd_verify)

    nf_parser = sub.add_parser("nf", help="normal form of a word")
    nf_parser.add_argument("--group", required=True, help="oracle descriptor, e.g. bs:2,3")
    nf_parser.add_argument("word", help="word literal")
    nf_parser.add_argument("--json", action="store_true")
    nf_parser.set_defaults(func=cmd_nf)

    fox = sub.add_parser("fox", help="Fox derivatives of a word")
    fox.add_argument("--group", required=True)
    fox.add_argument("--word", required=True)
    fox.add_argument("--wrt", help="differentiate with respect to one generator")
    fox.add_argument("--json", action="store_true")
    fox.set_defaults(func=cmd_fox)

    ball = sub.add_parser("ball", help="Cayley ball statistics")
    ball.add_argument("--group", required=True)
    ball.add_argument("--gens", help="';'-separated generator words (default: oracle generators)")
    ball.add_argument("--radius", type=int, required=True)
    ball.add_argument("--budget", type=int, default=None, help="vertex budget")
    ball.add_argument("--stats", action="store_true", help="print sphere sizes")
    ball.add_argument("--dot", action="store_true", help="emit DOT text")
    ball.set_defaults(func=cmd_ball)

    chi = sub.add_parser("chi", help="Euler characteristic of a presentation file")
    chi.add_argument("file")
    chi.set_defaults(func=cmd_chi)

    double = sub.add_parser("double", help="double a presentation along identification words")
    double.add_argument("file")
    double.add_argument("--ids", default="", help="';'-separated identification words")
    double.add_argument("--out", help="output presentation file")
    double.set_defaults(func=cmd_double)

    ki = sub.add_parser("trefoil-ki", help="doubled trefoil presentation K_i")
    ki.add_argument("--i", type=int, required=True)
    ki.add_argument("--out", help="output presentation file")
    ki.set_defaults(func=cmd_trefoil_ki)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = "DEBUG" if args.verbose else get_settings().log_level
    logging.basicConfig(level=getattr(logging, level), format=LOG_FORMAT)
    try:
        return args.func(args)
    except (RelmodError, ValueError, OSError) as e:
        logger.error("%s failed: %s", args.command, e)
        sys.stderr.write(f"relmod: error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
