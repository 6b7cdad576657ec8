"""orelab command line: analyze, polygon, dedekind, pure60 and scan."""

import argparse
import logging
import re
import sys
from typing import List, Optional, Tuple

try:
    from .config import DEFAULT_FORMAT, DEFAULT_SEED, LOG_FORMAT, LOG_LEVEL, OUTPUT_FORMATS, SCAN_WORKERS
    from .errors import InconsistencyError, OrelabError
    from .expression import PolyExpr
    from .idealfactor import dedekind_factorization, dedekind_test, prime_shape
    from .intsupport import is_prime
    from .monogeny import RangeScanner, analyze_polynomial, analyze_power_case, analyze_pure60
    from .polyalg import is_irreducible, reduce_mod_p
    from .polygon import phi_expand, principal_polygon, residual_polys
    from .report import ReportBuilder, render_polygon
except ImportError:
    from config import DEFAULT_FORMAT, DEFAULT_SEED, LOG_FORMAT, LOG_LEVEL, OUTPUT_FORMATS, SCAN_WORKERS
    from errors import InconsistencyError, OrelabError
    from expression import PolyExpr
    from idealfactor import dedekind_factorization, dedekind_test, prime_shape
    from intsupport import is_prime
    from monogeny import RangeScanner, analyze_polynomial, analyze_power_case, analyze_pure60
    from polyalg import is_irreducible, reduce_mod_p
    from polygon import phi_expand, principal_polygon, residual_polys
    from report import ReportBuilder, render_polygon


LOGGER = logging.getLogger(__name__)

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT = 0, 2, 3

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def prime_arg(text: str) -> int:
    """argparse type: a prime number."""
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"not a prime: {p}")
    return p


def primes_arg(text: str) -> List[int]:
    """argparse type: comma separated primes, sorted and deduplicated."""
    return sorted({prime_arg(part) for part in text.split(",") if part.strip()})


def range_arg(text: str) -> Tuple[int, int]:
    """argparse type: an inclusive range LO..HI with LO <= HI."""
    match = _RANGE.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    low, high = int(match.group(1)), int(match.group(2))
    if low > high:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return low, high


def seed_arg(text: str) -> int:
    """argparse type: an unsigned 64-bit seed."""
    seed = int(text)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def cmd_analyze(args: argparse.Namespace, builder: ReportBuilder) -> str:
    """Analyze a monic polynomial at its discriminant primes or at --primes."""
    expr = PolyExpr.parse(args.poly)
    report = analyze_polynomial(expr.parsed, args.primes, args.seed)
    if args.format == "json":
        return builder.to_json(builder.document(report, args.seed))
    return builder.to_text(report)


def cmd_polygon(args: argparse.Namespace, builder: ReportBuilder) -> str:
    """Draw the principal phi-polygon and list its residual polynomials."""
    F = PolyExpr.parse(args.poly).parsed
    phi = PolyExpr.parse(args.phi).parsed
    exp = phi_expand(F, phi)
    polygon = principal_polygon(exp, args.prime)
    residuals = residual_polys(exp, args.prime) if is_irreducible(reduce_mod_p(phi, args.prime)) else None
    if args.format == "json":
        document = builder.polygon_record(polygon)
        document["residuals"] = (
            None if residuals is None else [builder.residual_record(str(phi), r, args.seed) for r in residuals]
        )
        return builder.to_json(document)
    lines = [f"phi = {phi}, p = {args.prime}, ind_phi = {polygon.index()}", render_polygon(polygon)]
    if residuals is None:
        lines.append(f"phi is reducible mod {args.prime}; residual polynomials skipped")
    for residual in residuals or []:
        squarefree = "squarefree" if residual.is_squarefree() else "not squarefree"
        lines.append(f"slope {residual.side.slope}: R(y) = {residual} ({squarefree})")
    return "\n".join(lines) + "\n"


def cmd_dedekind(args: argparse.Namespace, builder: ReportBuilder) -> str:
    """Dedekind criterion and factorization shape at one prime."""
    F = PolyExpr.parse(args.poly).parsed
    report = dedekind_test(F, args.prime, args.seed)
    shape = dedekind_factorization(F, args.prime, args.seed) if report.passes else prime_shape(F, args.prime, args.seed)
    if args.format == "json":
        document = builder.dedekind_record(report)
        document["shape"] = builder.shape_record(shape)
        return builder.to_json(document)
    verdict = "passes" if report.passes else "fails"
    lines = [f"Dedekind criterion at p = {args.prime}: {verdict}"]
    lines += [f"  {phi}^{l}" for phi, l in report.factors]
    lines.append(f"  M = {report.quotient}")
    for phi, l in report.failing_factors:
        lines.append(f"  {phi} (multiplicity {l}) divides M mod {args.prime}")
    entries = ", ".join(f"(e={s.e}, f={s.f}) x{s.count}" for s in shape.entries)
    lines.append(f"shape ({'complete' if shape.complete else 'partial'}): {entries}")
    return "\n".join(lines) + "\n"


def cmd_pure60(args: argparse.Namespace, builder: ReportBuilder) -> str:
    """Classify x^60 - m or x^60 - a^u."""
    if args.m is not None:
        if args.a is not None or args.u is not None:
            raise argparse.ArgumentTypeError("--m excludes --a/--u")
        report = analyze_pure60(args.m, args.seed)
    elif args.a is not None:
        report = analyze_power_case(args.a, args.u if args.u is not None else 1, args.seed)
    else:
        raise argparse.ArgumentTypeError("one of --m or --a is required")
    if args.format == "json":
        return builder.to_json(builder.document(report, args.seed))
    return builder.to_text(report)


def cmd_scan(args: argparse.Namespace, builder: ReportBuilder) -> str:
    """Classify every m in a range."""
    low, high = args.range
    scanner = RangeScanner(low, high, seed=args.seed, workers=args.workers, compute=not args.congruences_only)
    rows = scanner.rows()
    if args.format == "csv":
        return builder.scan_csv(rows)
    if args.format == "json":
        return builder.to_json(builder.scan_document(rows, low, high))
    return builder.scan_text(rows)


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=seed_arg, default=DEFAULT_SEED, help="seed of the equal-degree splitter")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="orelab", description="Newton polygons, index divisors and monogeneity of pure fields"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    single = ("text", "json")

    analyze = sub.add_parser("analyze", parents=[common], help="full analysis of a monic polynomial")
    analyze.add_argument("--poly", required=True)
    analyze.add_argument("--primes", type=primes_arg, default=None, help="comma separated, default: disc primes")
    analyze.add_argument("--format", choices=single, default=DEFAULT_FORMAT)
    analyze.set_defaults(handler=cmd_analyze)

    polygon = sub.add_parser("polygon", parents=[common], help="principal phi-Newton polygon")
    polygon.add_argument("--poly", required=True)
    polygon.add_argument("--prime", type=prime_arg, required=True)
    polygon.add_argument("--phi", required=True)
    polygon.add_argument("--format", choices=single, default=DEFAULT_FORMAT)
    polygon.set_defaults(handler=cmd_polygon)

    dedekind = sub.add_parser("dedekind", parents=[common], help="Dedekind criterion at one prime")
    dedekind.add_argument("--poly", required=True)
    dedekind.add_argument("--prime", type=prime_arg, required=True)
    dedekind.add_argument("--format", choices=single, default=DEFAULT_FORMAT)
    dedekind.set_defaults(handler=cmd_dedekind)

    pure60 = sub.add_parser("pure60", parents=[common], help="x^60 - m or x^60 - a^u")
    pure60.add_argument("--m", type=int)
    pure60.add_argument("--a", type=int)
    pure60.add_argument("--u", type=int)
    pure60.add_argument("--format", choices=single, default=DEFAULT_FORMAT)
    pure60.set_defaults(handler=cmd_pure60)

    scan = sub.add_parser("scan", parents=[common], help="classify every m in a range")
    scan.add_argument("--range", type=range_arg, required=True, metavar="LO..HI")
    scan.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT)
    scan.add_argument("--workers", type=int, default=SCAN_WORKERS)
    scan.add_argument("--congruences-only", action="store_true", help="skip the computed cross-check")
    scan.set_defaults(handler=cmd_scan)
    return parser


def configure_logging(verbose: bool) -> None:
    """Send log records to stderr."""
    logging.basicConfig(level=logging.DEBUG if verbose else LOG_LEVEL, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    configure_logging(args.verbose)
    builder = ReportBuilder()
    try:
        output = args.handler(args, builder)
    except InconsistencyError as exc:
        LOGGER.error("internal inconsistency: %s", exc)
        print(f"orelab: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (OrelabError, argparse.ArgumentTypeError) as exc:
        print(f"orelab: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
