"""Command-line front end.

    rbchrom compute U --in edge.json --basis p
    rbchrom breakdown --in digraph.json
    rbchrom verify omega-bridge --n 5
    rbchrom enumerate posets --n 3
    rbchrom search e-negative-uio --n 6

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 precondition or size-bound violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence, TextIO

from . import checks
from .core import partitions
from .decomp import BagInputError, cover_polynomial, linear_breakdown, path_cycle_x0
from .invariants import (
    W_redei,
    Y_chromatic,
    chromatic_poly,
    chromatic_sym,
    redei_berge,
    redei_berge_poly,
)
from .structures import (
    Digraph,
    Graph,
    Poset,
    StructureInputError,
    admissible_functions,
    bag_of_sticks,
    digraph_of,
    enumerate_posets,
    inc,
    structure_from_json,
    tournaments,
    unit_interval_order,
)
from .symfn import project_qsym_to_sym

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

SYM_BASES = ("m", "e", "p", "h", "s")
QSYM_BASES = ("M", "F")
NC_BASES = ("m", "e", "p", "h")


class UsageError(Exception):
    pass


class PreconditionError(Exception):
    pass


def _as_graph(S: Any) -> Graph:
    if isinstance(S, Poset):
        return inc(S)
    if isinstance(S, Graph):
        return S
    raise UsageError("edges: this invariant needs a graph (or a poset, via its incomparability graph)")


def _as_digraph(S: Any) -> Digraph:
    if isinstance(S, Poset):
        return digraph_of(S)
    if isinstance(S, Digraph):
        return S
    raise UsageError("arcs: this invariant needs a digraph (or a poset, via its digraph)")


def _loopless(X: Digraph) -> Digraph:
    if X.has_loops():
        raise PreconditionError("arcs: loops are not allowed for this invariant")
    return X


def _in_basis(f: Any, basis: str | None, allowed: Sequence[str], default: str) -> Any:
    b = basis or default
    if b not in allowed:
        raise UsageError(f"basis: {b!r} not available here; choose from {', '.join(allowed)}")
    return f.to(b)


def compute(kind: str, S: Any, basis: str | None) -> dict[str, Any]:
    """The JSON payload for ``compute``."""
    if kind == "X":
        return _in_basis(chromatic_sym(_as_graph(S)), basis, SYM_BASES, "m").to_json()
    if kind == "U":
        U = redei_berge(_as_digraph(S))
        if basis in QSYM_BASES or basis is None:
            return _in_basis(U, basis, QSYM_BASES, "F").to_json()
        return _in_basis(project_qsym_to_sym(U), basis, SYM_BASES, "m").to_json()
    if kind == "Y":
        return _in_basis(Y_chromatic(_as_graph(S)), basis, NC_BASES, "m").to_json()
    if kind == "W":
        return _in_basis(W_redei(_as_digraph(S)), basis, NC_BASES, "m").to_json()
    if kind == "chromatic-poly":
        return chromatic_poly(_as_graph(S)).to_json()
    if kind == "rb-poly":
        return redei_berge_poly(_as_digraph(S)).to_json()
    if kind == "cover-poly":
        poly = cover_polynomial(_loopless(_as_digraph(S)))
        return {"variables": ["m", "n"],
                "terms": [{"m": i, "n": j, "coeff": str(c)} for (i, j), c in poly.items()]}
    if kind == "xi-x0":
        return _in_basis(path_cycle_x0(_loopless(_as_digraph(S))), basis, SYM_BASES, "m").to_json()
    raise UsageError(f"unknown invariant {kind!r}")


COMPUTE_KINDS = ("X", "U", "Y", "W", "chromatic-poly", "rb-poly", "cover-poly", "xi-x0")


def render_table(payload: dict[str, Any]) -> str:
    if "terms" in payload and payload["terms"] and "key" in payload["terms"][0]:
        rows = [(f"{payload['basis']}[{t['key']}]", t["coeff"]) for t in payload["terms"]]
    elif "terms" in payload and "variables" in payload:
        rows = [(f"m^{t['m']} n^{t['n']}", t["coeff"]) for t in payload["terms"]]
    elif "text" in payload:
        return payload["text"] + "\n"
    else:
        rows = []
    if not rows:
        return "0\n"
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _load(path: str) -> Any:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"--in: cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"--in: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return structure_from_json(data)


def _emit(text: str, out: str | None, stdout: TextIO) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _check_bound(n: int, limit: int, unsafe: bool, what: str) -> None:
    if n < 0:
        raise UsageError("--n: must be nonnegative")
    if n > limit and not unsafe:
        raise PreconditionError(f"--n: {what} is bounded by {limit} (pass --unsafe-bounds to lift)")


# --------------------------------------------------------------------------
# commands


def cmd_compute(args: argparse.Namespace, stdout: TextIO) -> int:
    payload = compute(args.kind, _load(args.input), args.basis)
    text = _dump(payload) if args.format == "json" else render_table(payload)
    _emit(text, args.out, stdout)
    return EXIT_OK


def cmd_breakdown(args: argparse.Namespace, stdout: TextIO) -> int:
    X = _as_digraph(_load(args.input))
    try:
        result = linear_breakdown(X)
    except BagInputError as exc:
        raise PreconditionError(f"arcs: {exc}") from exc
    payload = result.to_json()
    if args.format == "json":
        text = _dump(payload)
    else:
        text = "".join(f"U[P_{tuple(g['shape'])}]  {g['coeff']}\n" for g in payload["grouped"])
    _emit(text, args.out, stdout)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, stdout: TextIO) -> int:
    suite = checks.SUITES.get(args.suite)
    if suite is None:
        raise UsageError(f"suite: unknown suite {args.suite!r}; choose from {', '.join(checks.SUITES)}")
    n = suite.default if args.n is None else args.n
    _check_bound(n, suite.limit, args.unsafe_bounds, args.suite)
    instances = checks.run_suite(args.suite, n, args.seed)
    failures = [inst for inst in instances if not inst.ok]
    if args.format == "json":
        text = _dump({
            "suite": args.suite, "n": n, "seed": args.seed,
            "instances": [{"label": i.label, "ok": i.ok, "detail": i.detail} for i in instances],
            "passed": len(instances) - len(failures), "failed": len(failures),
        })
    else:
        lines = [f"{'PASS' if i.ok else 'FAIL'}  {i.label}" + (f"  ({i.detail})" if i.detail else "")
                 for i in instances]
        lines.append(f"# {args.suite} n={n} seed={args.seed}: "
                     f"{len(instances) - len(failures)} passed, {len(failures)} failed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out, stdout)
    return EXIT_FAIL if failures else EXIT_OK


ENUMERATORS: dict[str, tuple[Callable[[int], Any], int]] = {
    "posets": (lambda n: enumerate_posets(n), 6),
    "posets-iso": (lambda n: enumerate_posets(n, up_to_iso=True), 7),
    "nuio-irreducible": (lambda n: (unit_interval_order(f, n) for f in admissible_functions(n)), 10),
    "tournaments": (tournaments, 6),
    "bags": (lambda n: (bag_of_sticks(lam) for lam in partitions(n)), 12),
}


def cmd_enumerate(args: argparse.Namespace, stdout: TextIO) -> int:
    if args.kind not in ENUMERATORS:
        raise UsageError(f"kind: unknown kind {args.kind!r}; choose from {', '.join(ENUMERATORS)}")
    gen, limit = ENUMERATORS[args.kind]
    if args.n is None:
        raise UsageError("--n: required")
    _check_bound(args.n, limit, args.unsafe_bounds, args.kind)
    lines = [json.dumps(S.to_json(), separators=(",", ":")) for S in gen(args.n)]
    lines.append(f"# count: {len(lines)}")
    _emit("\n".join(lines) + "\n", args.out, stdout)
    return EXIT_OK


def cmd_search(args: argparse.Namespace, stdout: TextIO) -> int:
    if args.target not in checks.SEARCHES:
        raise UsageError(f"target: unknown target {args.target!r}; choose from {', '.join(checks.SEARCHES)}")
    fn, limit = checks.SEARCHES[args.target]
    if args.n is None:
        raise UsageError("--n: required")
    _check_bound(args.n, limit, args.unsafe_bounds, args.target)
    findings = fn(args.n)
    _emit(_dump({"target": args.target, "n": args.n, "findings": findings}), args.out, stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rbchrom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--unsafe-bounds", action="store_true", help="lift the default size bounds")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compute", help="compute an invariant of a structure")
    p.add_argument("kind", choices=COMPUTE_KINDS)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--basis", choices=SYM_BASES + QSYM_BASES)
    common(p)
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("breakdown", help="bags-of-sticks breakdown of a digraph")
    p.add_argument("--in", dest="input", required=True)
    common(p)
    p.set_defaults(handler=cmd_breakdown)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(handler=cmd_verify, format="table")

    p = sub.add_parser("enumerate", help="enumerate structures")
    p.add_argument("kind")
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("search", help="scan for counterexamples or collisions")
    p.add_argument("target")
    p.add_argument("--n", type=int)
    common(p)
    p.set_defaults(handler=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args, stdout)
    except (UsageError, StructureInputError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (PreconditionError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
