"""Command-line entry point: ``spectilt session.st [-c CMD ...] [--json]``."""

import argparse
import sys

from ..errors import InputError, SpectiltError
from .report import Report, emit
from .session import Session


def build_parser():
    ap = argparse.ArgumentParser(prog="spectilt",
                                 description="Evaluate a session file of declarations and commands.")
    ap.add_argument("session", help="session file ('-' for stdin)")
    ap.add_argument("-c", "--command", action="append", default=None,
                    help="run this command after the declarations instead of the file's commands (repeatable)")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of text")
    ap.add_argument("--jobs", type=int, default=1, help="worker threads for per-prime / per-suite work")
    ap.add_argument("--pd-cap", type=int, default=None, help="resolution length cap")
    ap.add_argument("--degree-bound", type=int, default=None, help="top degree for Hilbert comparisons")
    ap.add_argument("--timing", action="store_true", help="append wall times to text output")
    return ap


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read session file {path!r}: {e.strerror}", code="cli.io") from None


def run(argv=None, out=None):
    """Run the CLI; returns the exit code (0 ok, 2 input, 3 budget, 4 internal)."""
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout.buffer
    fmt = "json" if args.json else "text"
    reports = []
    code = 0
    try:
        if args.jobs < 1:
            raise InputError("--jobs must be >= 1")
        if args.pd_cap is not None and args.pd_cap < 0:
            raise InputError("--pd-cap must be >= 0")
        session = Session(jobs=args.jobs, pd_cap=args.pd_cap, degree_bound=args.degree_bound)
        text = _read(args.session)
        session.run_text(text, args.command, reports)
    except SpectiltError as e:
        code = e.exit_code
        reports.append(Report(getattr(e, "statement", "") or "", "error", e.to_dict()))
    out.write(emit(reports, fmt, timing=args.timing))
    out.flush()
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
