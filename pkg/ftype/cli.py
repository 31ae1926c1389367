"""Command-line front end: `ftype analyze | rep | quotient | word | selftest`.

Exit codes: 0 ok, 1 validation error or selftest mismatch, 2 numeric failure
after retries, 3 parse error.
"""

import logging
import sys
from argparse import ArgumentParser, Namespace
from asyncio import gather, get_running_loop, run
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from .amalgam import normal_form
from .classify import ProperPower, TwoInvolutions
from .config import DEFAULT_SETTINGS, Settings
from .errors import ExitCode, FTypeError, PresentationSyntaxError
from .presentation import FTypePresentation, decompose, parse
from .represent import FaithfulnessClass, Representer, sample_words
from .reports import AnalysisReport, analyze, encode
from .words import is_product_of_two_involutions, is_proper_power, order_of, parse_word
from .words.oracles import check_involution_products, check_proper_powers

_logger = logging.getLogger('ftype')


def _read(path: str) -> FTypePresentation:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise PresentationSyntaxError(f"cannot read {path}: {e.strerror}", 0) from e
    return parse(text)


def _settings(args: Namespace) -> Settings:
    changes = {}
    if getattr(args, 'tol', None) is not None:
        changes['residual'] = args.tol
    if getattr(args, 'margin', None) is not None:
        changes['margin'] = args.margin
    if getattr(args, 'retries', None) is not None:
        changes['factor_retries'] = args.retries
    return DEFAULT_SETTINGS.replace(**changes)


def _emit(command: str, result: Any, as_json: bool, text: Callable[[Any], str]) -> None:
    print(encode(command, result) if as_json else text(result))


def _analysis_text(report: AnalysisReport) -> str:
    lines = [report.presentation.rstrip(), '']
    for finding in report.validation.findings:
        lines.append(f"{finding.severity.value}: {finding.code}: {finding.message}")
    if not report.validation.ok:
        lines.append('invalid presentation')
        return '\n'.join(lines)
    if report.chi is None:
        lines.append('relator omits generators; analyze the free product split')
        return '\n'.join(lines)
    verdict = report.hyperbolicity
    lines += [
        f"decomposition: {report.decomposition}",
        f"chi = {report.chi}",
        f"tits: {report.tits}",
        f"hyperbolic: {verdict.hyperbolic} (U: {verdict.obstruction_u}, V: {verdict.obstruction_v})",
        f"special: {report.special}",
        f"malnormal criterion: {report.malnormal.criterion_holds}",
    ]
    if report.deficiency is not None:
        lines.append(f"deficiency (index {report.deficiency.index}): {report.deficiency.d}, "
                     f"chi of the subgroup {report.deficiency.subgroup_chi}")
    if report.quotient is not None:
        q = report.quotient
        lines += [
            f"quotient by R^{q.m}: sum alpha_i + 1/m = {q.quantity}",
            f"  finite index subgroup onto Z: {q.finite_index_onto_z}",
            f"  finite index subgroup onto F2: {q.finite_index_onto_free_rank2}",
            f"  contains F2: {q.free_subgroup_rank2}",
            f"  virtually torsion-free: {q.virtually_torsion_free}",
        ]
    lines += [f"  {note}" for note in verdict.notes]
    lines += [f"{fact.statement} [{fact.status}]" for fact in report.stated_facts]
    return '\n'.join(lines)


def _analyze_file(path: str, deficiency_index: Optional[int], m: Optional[int]) -> AnalysisReport:
    return analyze(_read(path), deficiency_index, m)


async def _analyze_all(paths: Sequence[str], deficiency_index: Optional[int], m: Optional[int]) -> list:
    loop = get_running_loop()
    return await gather(
        *(loop.run_in_executor(None, _analyze_file, path, deficiency_index, m) for path in paths),
        return_exceptions=True,
    )


def cmd_analyze(args: Namespace) -> int:
    if len(args.files) == 1:
        results = [_analyze_file(args.files[0], args.deficiency_index, args.m)]
    else:
        results = run(_analyze_all(args.files, args.deficiency_index, args.m))

    code = ExitCode.OK
    for path, result in zip(args.files, results):
        if isinstance(result, BaseException):
            code = max(code, ExitCode.of(result))
            print(f"{path}: {result}", file=sys.stderr)
            continue
        if not result.ok:
            code = max(code, ExitCode.VALIDATION)
        if len(args.files) > 1 and not args.json:
            print(f"== {path}")
        _emit('analyze', result, args.json, _analysis_text)
    return code


def cmd_rep(args: Namespace) -> int:
    representation = Representer(_settings(args), _logger).essential_rep(_read(args.file), args.seed)
    _emit('rep', representation, args.json, lambda r: '\n'.join((
        f"class: {r.faithfulness.value}",
        *(f"{r.presentation.alphabet.name(g)} -> {m!r}" for g, m in sorted(r.assignment.items())),
        f"max residual: {r.certificate.max_residual:.3g}",
        f"min margin: {r.certificate.min_margin:.3g}",
        f"elementary: {r.certificate.elementary}",
        *r.notes,
    )))
    return ExitCode.OK


def cmd_quotient(args: Namespace) -> int:
    presentation = _read(args.file)
    settings = _settings(args)
    if args.retries is not None:
        settings = settings.replace(quotient_retries=args.retries)
    certificate = Representer(settings, _logger).quotient_rep(
        presentation, parse_word(args.relator, presentation.alphabet), args.m, args.seed)
    _emit('quotient', certificate, args.json, lambda c: '\n'.join((
        f"rho({c.relator}) has order {c.m} ({c.route} route)",
        f"t0 = {c.t0:.12g}",
        f"trace = {c.trace:.12g}, residual {c.trace_residual:.3g}",
        f"order residual {c.order_residual:.3g}, power margin {c.power_margin:.3g}",
        f"trace polynomial: {c.polynomial}",
    )))
    return ExitCode.OK


def cmd_word(args: Namespace) -> int:
    presentation = _read(args.file)
    w = parse_word(args.word, presentation.alphabet)
    form = normal_form(w, decompose(presentation))
    order = order_of(w)
    found = None if w.is_identity else is_proper_power(w)
    pair = None if w.is_identity or order.is_finite else is_product_of_two_involutions(w)
    result = {
        'word': w,
        'normal_form': str(form),
        'trivial': form.is_trivial,
        'order_in_free_product': str(order),
        'proper_power': None if found is None else ProperPower(found.root, found.k),
        'involution_product': None if pair is None else TwoInvolutions(pair.x, pair.y),
    }
    _emit('word', result, args.json, lambda r: '\n'.join(f"{key}: {value}" for key, value in r.items()))
    return ExitCode.OK


def cmd_selftest(args: Namespace) -> int:
    presentation = _read(args.file)
    alphabet = presentation.alphabet
    reports = [
        check_proper_powers(alphabet, args.max_len),
        check_involution_products(alphabet, args.max_len),
    ]
    mismatches = sum(len(report.mismatches) for report in reports)
    for report in reports:
        print(f"{report.name}: {report.checked} checked, {len(report.mismatches)} mismatches")
        for mismatch in report.mismatches:
            print(f"  {mismatch}")

    representer = Representer(_settings(args), _logger)
    representation = representer.essential_rep(presentation, args.seed)
    if representation.faithfulness is FaithfulnessClass.FAITHFUL:
        words = sample_words(presentation, args.words, 12, args.seed)
        result = representer.cross_validate(representation, words)
        mismatches += len(result.mismatches)
        print(f"word problem against rho: {result.checked} checked, {len(result.mismatches)} mismatches, "
              f"{len(result.undecided)} undecided")
    else:
        print(f"word problem against rho: skipped, class {representation.faithfulness.value}")
    return ExitCode.VALIDATION if mismatches else ExitCode.OK


def _numeric_options(parser: ArgumentParser) -> None:
    parser.add_argument('--seed', type=int, default=0, help="seed of every random draw (default 0)")
    parser.add_argument('--tol', type=float, default=None, help="relation residual tolerance (default 1e-9)")
    parser.add_argument('--margin', type=float, default=None, help="decision margin (default 1e-6)")
    parser.add_argument('--retries', type=int, default=None, help="reseeded draws before giving up")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='ftype', description="Groups of F-type: analysis and PSL(2,C) representations.")
    parser.add_argument('-v', '--verbose', action='count', default=0, help="-v for info, -vv for debug logging")
    commands = parser.add_subparsers(dest='command', required=True)

    command = commands.add_parser('analyze', help="invariants and classification of presentations")
    command.add_argument('files', nargs='+')
    command.add_argument('--json', action='store_true')
    command.add_argument('--deficiency-index', type=int, default=None, metavar='J',
                         help="deficiency of a subgroup of index J")
    command.add_argument('-m', type=int, default=None, metavar='M',
                         help="conditions for the quotient by R^M of a special group")
    command.set_defaults(handler=cmd_analyze)

    command = commands.add_parser('rep', help="essential representation into PSL(2,C)")
    command.add_argument('file')
    command.add_argument('--json', action='store_true')
    _numeric_options(command)
    command.set_defaults(handler=cmd_rep)

    command = commands.add_parser('quotient', help="representation of G / N(R^m) with rho(R) of order m")
    command.add_argument('file')
    command.add_argument('--relator', required=True)
    command.add_argument('-m', type=int, required=True)
    command.add_argument('--json', action='store_true')
    _numeric_options(command)
    command.set_defaults(handler=cmd_quotient)

    command = commands.add_parser('word', help="normal form and decisions for one word")
    command.add_argument('file')
    command.add_argument('--word', required=True)
    command.add_argument('--json', action='store_true')
    command.set_defaults(handler=cmd_word)

    command = commands.add_parser('selftest', help="compare decisions with brute force and rho")
    command.add_argument('file')
    command.add_argument('--max-len', type=int, default=5)
    command.add_argument('--words', type=int, default=500)
    _numeric_options(command)
    command.set_defaults(handler=cmd_selftest)

    return parser


def main(argv: Sequence[str] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        return int(args.handler(args))
    except FTypeError as e:
        print(f"error: {e}", file=sys.stderr)
        return int(ExitCode.of(e))
