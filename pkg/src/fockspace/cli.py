"""``fock`` command line: D(q) matrices, verification reports, crystal graphs, reductions.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Results are cached under $FOCK_CACHE_DIR (default ./.fock-cache), one JSON
file per key, written by temp-file rename.  The cache only saves time.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .canonical import DMatrix, d_matrix
from .crystal import crystal_graph, graph_to_dot, graph_to_json
from .decomp import check_leclerc_rule, hecke_d, reduce_chain, run_all_checks
from .partitions import Partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ORACLE_LIMIT = 16


# ---------------------------------------------------------------------------
# cache


def cache_root() -> Path:
    return Path(os.environ.get("FOCK_CACHE_DIR", "./.fock-cache"))


def _canonical_dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def cache_path(kind: str, n: int, ell: int) -> Path:
    return cache_root() / f"{kind}-n{n}-ell{ell}-v{__version__}.json"


def cache_load(kind: str, n: int, ell: int):
    path = cache_path(kind, n, ell)
    try:
        entry = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    key = entry.get("key", {})
    if key != {"kind": kind, "n": n, "ell": ell, "version": __version__}:
        return None
    body = _canonical_dump(entry.get("payload"))
    if hashlib.sha256(body.encode()).hexdigest() != entry.get("checksum"):
        return None
    return entry["payload"]


def cache_store(kind: str, n: int, ell: int, payload) -> None:
    root = cache_root()
    try:
        root.mkdir(parents=True, exist_ok=True)
        body = _canonical_dump(payload)
        entry = {
            "key": {"kind": kind, "n": n, "ell": ell, "version": __version__},
            "checksum": hashlib.sha256(body.encode()).hexdigest(),
            "payload": payload,
        }
        fd, tmp = tempfile.mkstemp(dir=root, prefix=".tmp-", suffix=".json")
        with os.fdopen(fd, "w") as fh:
            fh.write(_canonical_dump(entry))
        os.replace(tmp, cache_path(kind, n, ell))
    except OSError:
        pass  # an unwritable cache is not an error


def cached_dmatrix(n: int, ell: int) -> DMatrix:
    payload = cache_load("dmatrix", n, ell)
    if payload is not None:
        return DMatrix.from_json(payload)
    D = d_matrix(n, ell)
    cache_store("dmatrix", n, ell, D.to_json())
    return D


# ---------------------------------------------------------------------------
# commands


def cmd_dmatrix(args, out) -> int:
    D = cached_dmatrix(args.n, args.ell)
    if args.format == "json":
        out.write(json.dumps(D.to_json(), indent=1) + "\n")
    elif args.format == "csv":
        out.write(D.to_csv())
    else:
        out.write(D.to_latex())
    return EXIT_OK


def cmd_verify(args, out) -> int:
    reports = run_all_checks(args.n, args.ell)
    reports.append(check_leclerc_rule(min(max(args.n, 8), ORACLE_LIMIT), args.ell))
    ok = all(r["passed"] for r in reports)
    out.write(json.dumps({"n": args.n, "ell": args.ell, "passed": ok, "checks": reports}, indent=1) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_crystal(args, out) -> int:
    payload = cache_load("crystal", args.depth, args.ell)
    if payload is None:
        nodes, edges = crystal_graph(args.ell, args.depth)
        payload = graph_to_json(nodes, edges, args.ell)
        cache_store("crystal", args.depth, args.ell, payload)
    if args.format == "json":
        out.write(json.dumps(payload, indent=1) + "\n")
    else:
        nodes = [Partition(p) for p in payload["nodes"]]
        edges = [(Partition(e["from"]), Partition(e["to"]), e["residue"]) for e in payload["edges"]]
        out.write(graph_to_dot(nodes, edges, args.ell))
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    lam, mu = args.lam, args.mu
    if lam.size != mu.size:
        raise UsageError(f"partitions must have the same size: {lam} and {mu}")
    chain = reduce_chain((lam, mu), args.ell)
    report = chain.to_json()
    status = EXIT_OK
    if args.oracle:
        checks = []
        for step in chain:
            a, b = step.input_pair, step.output_pair
            if a[0].size <= ORACLE_LIMIT and b[0].size <= ORACLE_LIMIT:
                va = hecke_d(*a, args.ell).eval_at_one()
                vb = hecke_d(*b, args.ell).eval_at_one()
                checks.append({"step": step.to_json(), "before": va, "after": vb, "passed": va == vb})
        report["oracle"] = checks
        if not all(c["passed"] for c in checks):
            status = EXIT_FAIL
    out.write(json.dumps(report, indent=1) + "\n")
    return status


# ---------------------------------------------------------------------------
# argument parsing


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _ell(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("ell must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fock", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("dmatrix", help="q-decomposition matrix D(q) of weight n")
    d.add_argument("--n", type=_nonneg, required=True)
    d.add_argument("--ell", type=_ell, required=True)
    d.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    d.set_defaults(func=cmd_dmatrix)

    v = sub.add_parser("verify", help="row-(n) theorem and lemma checks")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--ell", type=_ell, required=True)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("crystal", help="crystal graph of the empty partition")
    c.add_argument("--ell", type=_ell, required=True)
    c.add_argument("--depth", type=_nonneg, required=True)
    c.add_argument("--format", choices=["dot", "json"], default="dot")
    c.set_defaults(func=cmd_crystal)

    r = sub.add_parser("reduce", help="row/column removal and Mullineux reduction chain")
    r.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    r.add_argument("--mu", type=_partition_arg, required=True)
    r.add_argument("--ell", type=_ell, required=True)
    r.add_argument("--oracle", action="store_true", help="check each step against D(q) at q=1")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify" and args.n < 1:
            raise UsageError("verify needs n >= 1")
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"fock: error: {exc}\n")
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
