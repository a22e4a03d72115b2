"""Command line: ``dimfilter [--format text|json] [--timings] SESSION COMMAND ...``
or ``dimfilter [--format ...] [--jobs N] corpus DIRECTORY``."""

import argparse
import sys
from pathlib import Path

from .commands import COMMANDS, error_result, run_command
from .corpus import corpus_run
from .errors import ParseError, ResourceError
from .report import Report, digest
from .session import parse_session

USAGE = """\
dimfilter [--format text|json] [--timings] SESSION COMMAND [OPTIONS]
dimfilter [--format text|json] [--jobs N] corpus DIRECTORY

commands:
  gb --target NAME          reduced Groebner basis of an ideal, prime or module
  dim --module NAME         Krull dimension and annihilator
  ext --module NAME --j J   Ext^J(M, R)
  dk --module NAME --k K    the dimension filtration piece D_K(M)
  sn --module NAME --n N    Serre's condition S_N
  hypotheses --module NAME  ring assumptions for the module's ambient ring
  verify --module NAME --max-n N
                            S_n against condition (ii) for n = 1..N
  props --module NAME [--seed S]
                            seeded property checks
"""


def _options(argv):
    parser = argparse.ArgumentParser(prog="dimfilter", usage=USAGE, add_help=True)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--timings", action="store_true",
                        help="record wall time in milliseconds (reports stop being byte-stable)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for corpus")
    parser.add_argument("target", help="session file, or 'corpus'")
    parser.add_argument("rest", nargs=argparse.REMAINDER)
    return parser.parse_args(argv)


def emit(report, fmt, stream=None):
    stream = stream or sys.stdout
    stream.write(report.to_json() if fmt == "json" else report.to_text())


def main(argv=None):
    opts = _options(sys.argv[1:] if argv is None else argv)
    if opts.target == "corpus":
        if len(opts.rest) != 1:
            sys.stderr.write("usage: dimfilter corpus DIRECTORY\n")
            return 1
        report = corpus_run(opts.rest[0], jobs=opts.jobs)
        emit(report, opts.format)
        return report.exit_code
    path = Path(opts.target)
    if opts.rest and opts.rest[0] not in COMMANDS:
        sys.stderr.write(f"unknown command {opts.rest[0]!r}\n{USAGE}")
        return 1
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        sys.stderr.write(f"cannot read {path}: {exc}\n")
        return 1
    try:
        session = parse_session(text)
    except (ParseError, ResourceError) as exc:
        report = Report(" ".join(opts.rest), "", input_digest=digest(text))
        code = 2 if isinstance(exc, ResourceError) else 1
        kind = "resource" if code == 2 else "parse"
        report.results = [error_result(kind, f"{path.name}: {exc}")]
        emit(report, opts.format, sys.stdout if opts.format == "json" else sys.stderr)
        return code
    report = run_command(session, opts.rest, timings=opts.timings)
    stream = sys.stderr if report.exit_code and opts.format == "text" else sys.stdout
    emit(report, opts.format, stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
