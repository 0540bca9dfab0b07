"""Command line entry point.

Exit codes: 0 success / agreement, 1 disagreement, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from ._numeric import DEFAULT_TOL, tolerance
from .config import load_config
from .errors import ApolloniusError, CoincidentObjects, ParseError
from . import report as R

COMMANDS = ("classify", "count", "solve", "verify", "batch", "render", "fixtures")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="apollonius", description="Count and construct Apollonius solutions.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("target", nargs="?", help="config file (batch: directory of configs)")
    p.add_argument("--mode", choices=("exact", "float"), default=None)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="float-mode zero band")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("-n", "--count", type=int, default=1000, help="batch size when generating")
    p.add_argument("--points", type=int, default=0, choices=(0, 1, 2, 3),
                   help="number of point objects in generated configs")
    p.add_argument("--allow-degenerate", action="store_true")
    p.add_argument("--out", default=None, help="output path (render) or directory (fixtures)")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    try:
        with tolerance(args.tol):
            return _dispatch(args)
    except (ParseError, CoincidentObjects, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ApolloniusError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "fixtures":
        names = R.run_fixtures(args.out or args.target or "fixtures")
        _emit(R.dumps({"written": names}), None)
        return 0
    if cmd == "batch":
        summary, code = R.run_batch(
            directory=args.target,
            seed=args.seed,
            n=args.count,
            allow_degenerate=args.allow_degenerate,
            n_points=args.points,
            mode=args.mode,
        )
        _emit(R.dumps(summary), args.out)
        return code
    if not args.target:
        print("error: a config file is required", file=sys.stderr)
        return 2
    cfg = load_config(args.target, args.mode)
    if cmd == "classify":
        _emit(R.dumps(R.run_classify(cfg)), args.out)
        return 0
    if cmd == "count":
        _emit(R.dumps(R.run_count(cfg)), args.out)
        return 0
    if cmd == "solve":
        _emit(R.dumps(R.run_solve(cfg)), args.out)
        return 0
    if cmd == "verify":
        doc, code = R.run_verify(cfg)
        _emit(R.dumps(doc), args.out)
        return code
    svg = R.run_render(cfg, args.out)
    if not args.out:
        sys.stdout.write(svg.decode("utf-8"))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
