import json
import logging
from argparse import ArgumentParser, Namespace
from pathlib import Path
from sys import argv, exit
from typing import List
from sympy import factorint
from typek import storage, type_k
from typek.disc_forms import discriminant_group, fingerprints_equal
from typek.errors import FixtureError, GuardExceeded, LatticeParseError, TypeKError
from typek.lattice import parse_lattice
from typek.qseries import eta, theta
from typek.quad_space import q_equivalent
from typek.report import Report
from typek.settings import default_trunc
from typek.suites import SUITES, run_suites
from typek.utils import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SERIES = {
    'theta2': lambda t: theta(2, t),
    'theta3': lambda t: theta(3, t),
    'theta4': lambda t: theta(4, t),
    'eta': eta,
}


def _factored(n: int) -> str:
    if n <= 1:
        return str(n)
    return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in sorted(factorint(n).items()))


def verify(args: Namespace) -> int:
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    reports = run_suites(names, args.trunc, args.jobs)
    report = reports[0] if len(reports) == 1 else Report.merge('all', reports)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render())
    if args.report and not storage.write_report(args.report, report.to_json()):
        return EXIT_USAGE
    return EXIT_OK if report.passed else EXIT_FAILED


def lattice_info(args: Namespace) -> int:
    lattice = parse_lattice(args.expression)
    disc = lattice.disc()
    info = {
        "lattice": str(lattice),
        "rank": lattice.rank,
        "signature": list(lattice.signature()),
        "disc": disc,
        "even": lattice.is_even(),
        "unimodular": lattice.is_unimodular(),
    }
    if lattice.is_even() and lattice.is_nondegenerate():
        try:
            info["discriminant_group"] = [d for d in discriminant_group(lattice).orders if d > 1]
        except GuardExceeded as e:
            logger.warning(e.message)
    if args.json:
        print(json.dumps(info, indent=2))
        return EXIT_OK
    print(info["lattice"])
    print(f"rank {lattice.rank}")
    print(f"signature {lattice.signature()}")
    print(f"|disc| {abs(disc)} = {_factored(abs(disc))}")
    print("even" if lattice.is_even() else "odd")
    if lattice.is_unimodular():
        print("unimodular")
    if "discriminant_group" in info:
        group = " + ".join(f"Z/{d}" for d in info["discriminant_group"]) or "0"
        print(f"discriminant group {group}")
    return EXIT_OK


def lattice_eq(args: Namespace) -> int:
    first, second = parse_lattice(args.first), parse_lattice(args.second)
    verdict = q_equivalent(first, second)
    print(f"over Q: {verdict}")
    if verdict and first.is_even() and second.is_even() and first.is_nondegenerate():
        try:
            same = fingerprints_equal(first, second)
            print(f"discriminant forms: {'same fingerprint' if same else 'different fingerprints'}")
        except GuardExceeded as e:
            logger.warning(f"discriminant forms not compared: {e.message}")
    return EXIT_OK if verdict else EXIT_FAILED


def series(args: Namespace) -> int:
    trunc = args.trunc if args.trunc is not None else default_trunc('series')
    print(SERIES[args.function](trunc).to_text())
    return EXIT_OK


def parse_typek(args: List[str]) -> int:
    parser = ArgumentParser(description='Exact verification of Calabi-Yau threefolds of type K')
    parser.add_argument('--debug', action='store_true', help='log at debug level')
    parser.add_argument('--tables', metavar='FILE', help='read the classification tables from FILE')
    subparsers = parser.add_subparsers(title='subcommands',
                                       description='Valid subcommands',
                                       help='append -h to any subcommand to see potential additional parameters')

    verify_parser = subparsers.add_parser('verify')
    verify_parser.add_argument('suite', choices=['all'] + list(SUITES))
    verify_parser.add_argument('--trunc', type=int, help='truncation order of the series suites')
    verify_parser.add_argument('--json', action='store_true', help='print the report as JSON')
    verify_parser.add_argument('--report', metavar='FILE', help='also write the JSON report to FILE')
    verify_parser.add_argument('--jobs', type=int, default=1, help='number of suites run in parallel')
    verify_parser.set_defaults(func=verify)

    lattice_parser = subparsers.add_parser('lattice')
    lattice_subparsers = lattice_parser.add_subparsers(title='lattice subcommands')
    info_parser = lattice_subparsers.add_parser('info')
    info_parser.add_argument('expression')
    info_parser.add_argument('--json', action='store_true')
    info_parser.set_defaults(func=lattice_info)
    eq_parser = lattice_subparsers.add_parser('eq')
    eq_parser.add_argument('first')
    eq_parser.add_argument('second')
    eq_parser.set_defaults(func=lattice_eq)

    series_parser = subparsers.add_parser('series')
    series_parser.add_argument('function', choices=list(SERIES))
    series_parser.add_argument('--trunc', type=int, help='largest exponent of q')
    series_parser.set_defaults(func=series)

    parsed = parser.parse_args(args)
    if parsed.debug:
        logging.getLogger().setLevel(logging.DEBUG)
    if not hasattr(parsed, 'func'):
        parser.print_help()
        return EXIT_USAGE
    if getattr(parsed, 'trunc', None) is not None and parsed.trunc < 0:
        parser.print_usage()
        logger.error("--trunc must be non-negative")
        return EXIT_USAGE
    if parsed.tables:
        if not Path(parsed.tables).is_file():
            logger.error(f"tables file {parsed.tables} does not exist")
            return EXIT_USAGE
        storage.set_tables_path(parsed.tables)
        type_k.tables.cache_clear()

    try:
        return parsed.func(parsed)
    except LatticeParseError as e:
        print(f"error: {e.message}")
        return EXIT_USAGE
    except FixtureError as e:
        logger.error(e.message)
        return EXIT_USAGE
    except TypeKError as e:
        logger.error(e.message)
        return EXIT_FAILED


def typek():
    logging.basicConfig(level=logging.INFO)
    exit(parse_typek(argv[1:]))
