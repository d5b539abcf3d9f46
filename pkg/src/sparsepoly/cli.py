"""Command-line front end.

Subcommands:

    eval    evaluate a polyform expression at a point
    knight  closed-walk counts for the d-dimensional knight
    walk    survival probability of the trap-annihilated periodic walk
    bench   ordered-vs-hashed backend timings (correctness-gated)

Results go to stdout; logs and timings go to stderr, so output is safe to
pipe.  Exit codes: 0 success, 2 usage error, 3 domain/arity error,
4 parse error, 5 capacity/overflow.  The SPRAY_BACKEND environment
variable ("ordered" or "hashed") overrides the default backend where no
--backend flag is given.
"""

from __future__ import annotations

import argparse
import os
import statistics
import sys
import time

from . import algebra
from .calculus import evaluate
from .constructors import knight, walk_kernel
from .core import Backend, DEFAULT_BACKEND
from .errors import ArityError, CapacityError, DomainError, ParseError, SingularityError
from .textio import _num, parse
from .walks import WalkConfig, knight_closed_walks, run_walk


def _env_backend() -> Backend:
    name = os.environ.get("SPRAY_BACKEND")
    if name is None:
        return DEFAULT_BACKEND
    return Backend.parse(name)


def _resolve_backend(args) -> Backend:
    if getattr(args, "backend", None):
        return Backend.parse(args.backend)
    return _env_backend()


def _point(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coordinate list {text!r}") from None


def _index(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index {text!r}") from None


def _traps(text: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(_index(part) for part in text.split(";"))


def _cmd_eval(args) -> int:
    poly = parse(args.expr, args.arity)
    value = evaluate(poly, args.at)
    print(_num(value))
    return 0


def _cmd_knight(args) -> int:
    backend = _resolve_backend(args)
    start = time.perf_counter()
    count = knight_closed_walks(args.dim, args.moves, args.pause, backend)
    elapsed = time.perf_counter() - start
    print(int(count))
    print(f"elapsed {elapsed:.3f}s", file=sys.stderr)
    return 0


def _cmd_walk(args) -> int:
    backend = _resolve_backend(args)
    cfg = WalkConfig(
        d=args.dim,
        n=args.side,
        kernel=walk_kernel(args.dim, backend),
        initial=args.initial,
        traps=args.traps,
        steps=args.steps,
    )
    start = time.perf_counter()
    _, survival = run_walk(cfg)
    print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    print(f"{survival:#.7g}")
    return 0


def _bench_workload(op: str, dim: int, moves: int, backend: Backend):
    base = knight(dim, backend)
    if op == "power":
        return lambda: algebra.power(base, moves)
    setup = algebra.power(base, max(moves - 1, 0))
    return lambda: algebra.multiply(setup, base)


def _cmd_bench(args) -> int:
    which = (
        [Backend.ORDERED, Backend.HASHED]
        if args.backend in (None, "both")
        else [Backend.parse(args.backend)]
    )
    # correctness gate: both backends must agree before any timing is shown
    results = {}
    for backend in (Backend.ORDERED, Backend.HASHED):
        results[backend] = _bench_workload(args.op, args.dim, args.moves, backend)()
    if results[Backend.ORDERED] != results[Backend.HASHED]:
        print("error: backends disagree on the result", file=sys.stderr)
        return 1
    size = results[Backend.ORDERED].num_terms
    print("backend,op,size,median_s")
    for backend in which:
        work = _bench_workload(args.op, args.dim, args.moves, backend)
        times = []
        for _ in range(args.repeat):
            start = time.perf_counter()
            work()
            times.append(time.perf_counter() - start)
        print(f"{backend.value},{args.op},{size},{statistics.median(times):.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsepoly",
        description="sparse Laurent polynomial toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a polyform expression at a point")
    p.add_argument("--expr", required=True, help="polyform text, e.g. 'x*y^3 + 2*x^2*y^2'")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--at", type=_point, required=True, help="comma-separated coordinates")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("knight", help="count closed knight walks")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--moves", type=int, required=True)
    p.add_argument("--pause", action="store_true", help="allow standing still")
    p.add_argument("--backend", choices=("ordered", "hashed"))
    p.set_defaults(func=_cmd_knight)

    p = sub.add_parser("walk", help="survival probability of the trapped periodic walk")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--side", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--initial", type=_index, required=True, help="e.g. 10,10")
    p.add_argument("--traps", type=_traps, default=(), help="e.g. '2,3;3,5'")
    p.add_argument("--backend", choices=("ordered", "hashed"))
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("bench", help="time a workload under both backends")
    p.add_argument("--op", choices=("mul", "power"), required=True)
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--moves", type=int, default=6)
    p.add_argument("--backend", choices=("ordered", "hashed", "both"))
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ArityError, DomainError, SingularityError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except (CapacityError, OverflowError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 5
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
