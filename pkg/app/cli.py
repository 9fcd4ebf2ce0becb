import argparse
import logging
import sys

import pandas as pd

from app.genbench.generators import FamilyKind
from app.genbench.harness import INVERTERS, Status, parse_sizes, run_experiment
from app.genbench.report import FORMATS, WIDE_VALUES, emit_count_table, emit_report, emit_wide_report, render
from app.linalg.complexity import count_table
from app.linalg.errors import GenerationFailed, InversionError
from app.linalg.matcore import OpCounter, SymmetryCheck
from app.utils.config import load_settings
from app.utils.file_io import format_matrix_text, read_matrix, write_matrix
from app.verify import run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

SYMMETRIC_METHODS = {"v1", "v2", "cholesky", "ldl", "km", "km_elementwise", "robust"}


def build_parser() -> argparse.ArgumentParser:
    settings = load_settings()
    parser = argparse.ArgumentParser(prog="syminv", description="Square-root-free symmetric matrix inversion")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    invert = sub.add_parser("invert", help="invert a matrix file")
    invert.add_argument("--method", choices=sorted(INVERTERS), default="v2")
    invert.add_argument("--input", required=True, help=".mtx or .csv matrix file")
    invert.add_argument("--output", help=".mtx or .csv target, CSV on stdout when omitted")
    invert.add_argument("--count", action="store_true", help="report mul/div and square root counts on stderr")
    invert.add_argument("--symmetry-tol", type=float, default=None)

    bench = sub.add_parser("bench", help="run a benchmark experiment")
    bench.add_argument("--experiment", type=int, choices=(1, 2, 3), required=True)
    bench.add_argument("--sizes", default=",".join(str(n) for n in settings.default_sizes))
    bench.add_argument("--methods", default="all")
    bench.add_argument("--seed", type=int, default=settings.default_seed)
    bench.add_argument("--family", choices=[k.value for k in FamilyKind], default=None)
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("--format", choices=FORMATS, default="csv")
    bench.add_argument("--layout", choices=("long", "wide"), default="long",
                       help="wide: one methods x sizes table per measured value")
    bench.add_argument("--save", action="store_true", help="store the run in the results database")

    count = sub.add_parser("count", help="theoretical operation counts")
    count.add_argument("--sizes", default=",".join(str(n) for n in settings.default_sizes))
    count.add_argument("--p", type=int, default=1, help="trailing required variables for modgauss_p")
    count.add_argument("--format", choices=FORMATS, default="markdown")

    verify = sub.add_parser("verify", help="run the invariant suite")
    verify.add_argument("--max-n", type=int, default=40)
    verify.add_argument("--seed", type=int, default=settings.default_seed)
    return parser


def _cmd_invert(args) -> int:
    settings = load_settings().with_overrides(symmetry_tol=args.symmetry_tol)
    a = read_matrix(args.input)
    counter = OpCounter() if args.count else None
    inverter = INVERTERS[args.method]
    try:
        if args.method in SYMMETRIC_METHODS:
            inverse = inverter(a, counter, SymmetryCheck(settings.symmetry_tol))
        else:
            inverse = inverter(a, counter)
    except InversionError as exc:
        logger.error("%s", exc)
        return EXIT_FAILURE

    if args.output:
        write_matrix(args.output, inverse)
    else:
        print(format_matrix_text(inverse))
    if counter is not None:
        print(f"muldiv={counter.muldiv} sqrt={counter.sqrt}", file=sys.stderr)
    return EXIT_OK


def _cmd_bench(args) -> int:
    sizes = parse_sizes(args.sizes)
    reports = run_experiment(
        args.experiment, sizes, args.methods, seed=args.seed, family=args.family, workers=args.workers
    )
    if args.layout == "wide":
        sys.stdout.write(emit_wide_report(reports, WIDE_VALUES[args.experiment], args.format))
    else:
        sys.stdout.write(emit_report(reports, args.format))

    if args.save:
        from app.crud.database import save_reports
        from app.database import SessionLocal, init_db

        init_db()
        with SessionLocal() as db:
            run = save_reports(db=db, experiment=args.experiment, seed=args.seed, sizes=sizes, reports=reports)
            logger.info("Saved run %d with %d reports", run.id, len(reports))

    failed = [r for r in reports if r.status is Status.FAILED]
    return EXIT_FAILURE if failed else EXIT_OK


def _cmd_count(args) -> int:
    sys.stdout.write(emit_count_table(count_table(parse_sizes(args.sizes), args.p), args.format))
    return EXIT_OK


def _cmd_verify(args) -> int:
    outcomes = run_verification(args.max_n, args.seed)
    df = pd.DataFrame([{"check": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes])
    sys.stdout.write(render(df, "markdown"))
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_FAILURE


COMMANDS = {
    "invert": _cmd_invert,
    "bench": _cmd_bench,
    "count": _cmd_count,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else load_settings().log_level
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        return COMMANDS[args.command](args)
    except (InversionError, GenerationFailed) as exc:
        logger.error("%s", exc)
        return EXIT_FAILURE
    except (ValueError, IndexError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
