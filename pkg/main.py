# ---------------- Import core libraries ----------------
import argparse                               # Subcommand parsing
import logging                                # Diagnostics to stderr
import sys

from app.errors import (
    ConfigError,
    ContractViolationError,
    InvariantViolationError,
    OpaqueError,
    ParseError,
)

try:
    from app import settings
except ConfigError as exc:
    sys.stderr.write(f"error: {exc}\n")
    sys.exit(1)

# ---------------- Import app modules ----------------
from app.coverage import compute_coverage
from app.database import record_run
from app.documents import (
    InputDocument,
    OutputDocument,
    parse_input,
    parse_point,
    parse_rational,
    serialize_input,
    serialize_output,
)
from app.generator import fix_iso_segments, gapped_ngon
from app.history import history_report
from app.oracle import is_blocked
from app.render import render_svg
from app.selftest import run_selftest
from app.trend import trend_report

logger = logging.getLogger("opaque")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


# ---------------- Helpers ----------------
def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except UnicodeDecodeError as exc:
        raise ParseError("input", f"not valid UTF-8 at byte {exc.start}",
                         exc.object[exc.start:exc.end])


def _emit(text, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_barrier(input_path):
    return parse_input(_read(input_path)).to_barrier()


def _guarded(command):
    """Run a command, turning package errors into exit codes."""
    try:
        return command()
    except (ContractViolationError, InvariantViolationError) as exc:
        logger.error("internal error: %s", exc)
        return EXIT_INTERNAL
    except (OpaqueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_INPUT


# ---------------- Commands ----------------
def cmd_coverage(input_path, output_path=None, svg_path=None, stats=False):
    def run():
        barrier = _load_barrier(input_path)
        result = compute_coverage(barrier, with_timings=stats)
        _emit(serialize_output(OutputDocument.from_result(result)), output_path)
        if svg_path:
            _emit(render_svg(result), svg_path)
        record_run("coverage", input_path, {
            "regions": len(result.regions),
            "isolated_points": len(result.isolated_points),
            "n": barrier.n,
            "m": barrier.m,
        })
        return EXIT_OK
    return _guarded(run)


def cmd_query(input_path, point):
    def run():
        p = parse_point(point, "--point")
        verdict = is_blocked(p, _load_barrier(input_path))
        _emit(f"{verdict}\n")
        record_run("query", input_path, {"point": str(p), "verdict": str(verdict)})
        return EXIT_OK
    return _guarded(run)


def cmd_gen(kind="ngon", n=None, gap=None, seed=None, output_path=None):
    def run():
        if kind == "fixiso":
            segments = fix_iso_segments()
        else:
            segments = gapped_ngon(n, parse_rational(gap, "--gap"), seed)
        _emit(serialize_input(InputDocument(tuple(segments))), output_path)
        return EXIT_OK
    return _guarded(run)


def cmd_selftest(count, max_segments, bound, seed):
    def run():
        if count < 0 or max_segments < 1 or bound < 1:
            logger.error("count must be >= 0, max-segments and bound >= 1")
            return EXIT_INPUT
        report = run_selftest(count, max_segments, bound, seed)
        _emit(report.text())
        record_run("selftest", f"seed={seed}", {
            "count": count, "instances": report.instances, "failures": report.failures,
        })
        return EXIT_OK if report.passed else EXIT_INTERNAL
    return _guarded(run)


def cmd_history(limit=20, clear=False):
    def run():
        if not settings.HISTORY_DB:
            logger.warning("run history is disabled; set OPAQUE_HISTORY_DB to enable it")
        _emit(history_report(limit, clear))
        return EXIT_OK
    return _guarded(run)


def cmd_trend(sizes, gap):
    def run():
        try:
            parsed = [int(s) for s in sizes.split(",") if s.strip()]
        except ValueError:
            logger.error("--sizes must be a comma-separated list of integers, got %r", sizes)
            return EXIT_INPUT
        frame = trend_report(parsed, parse_rational(gap, "--gap"))
        _emit(frame.to_string(index=False) + "\n")
        return EXIT_OK
    return _guarded(run)


# ---------------- Argument parsing ----------------
def build_parser():
    ap = argparse.ArgumentParser(prog="opaque", description="Coverage of opaque forests")
    ap.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coverage", help="Compute the coverage of a barrier")
    p.add_argument("input")
    p.add_argument("--out", help="Output document path (default: stdout)")
    p.add_argument("--svg", help="Write an SVG picture to this path")
    p.add_argument("--stats", action="store_true", help="Include per-stage timings")

    p = sub.add_parser("query", help="Is a point blocked by the barrier?")
    p.add_argument("input")
    p.add_argument("--point", required=True, help="x,y with integer or num/den coordinates")

    p = sub.add_parser("gen", help="Generate a barrier document")
    p.add_argument("kind", choices=["ngon", "fixiso"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--gap", default="1/100", help="Fraction of each edge removed at both ends")
    p.add_argument("--seed", type=int, help="Jitter the circle parameters")
    p.add_argument("--out", help="Output path (default: stdout)")

    p = sub.add_parser("selftest", help="Check the pipeline against the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-segments", type=int, default=6)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("history", help="Show recorded runs")
    p.add_argument("--limit", type=int, default=20)
    p.add_argument("--clear", action="store_true")

    p = sub.add_parser("trend", help="Growth report on gapped n-gons")
    p.add_argument("--sizes", default="8,12,16")
    p.add_argument("--gap", default="1/100")
    return ap


# ---------------- Routing ----------------
def main(argv=None):
    args = build_parser().parse_args(argv)
    level = "DEBUG" if args.verbose else settings.LOG_LEVEL
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)

    if args.command == "coverage":
        return cmd_coverage(args.input, args.out, args.svg, args.stats)
    if args.command == "query":
        return cmd_query(args.input, args.point)
    if args.command == "gen":
        return cmd_gen(args.kind, args.n, args.gap, args.seed, args.out)
    if args.command == "selftest":
        return cmd_selftest(args.count, args.max_segments, args.bound, args.seed)
    if args.command == "history":
        return cmd_history(args.limit, args.clear)
    return cmd_trend(args.sizes, args.gap)


if __name__ == "__main__":
    sys.exit(main())
