"""Command line front end.

Usage:
  vpshell build      --n N --s S [--labels] [--format json|dot] [-o PATH]
  vpshell verify-el  --n N --s S [--sabotage NAME]
  vpshell count      --n N --s S [--method M] [-o PATH]
  vpshell sequence   --s S --max-n N [-o PATH]
  vpshell export-dot --n N --s S [--labels] [-o PATH]

Exit codes: 0 success, 1 verification failure, 2 oracle mismatch,
3 budget exceeded, 4 bad input.  Enumeration budgets default to 10^6
elements and 10^7 chains; flags --max-elements/--max-chains or the
environment variables VPSHELL_MAX_ELEMENTS/VPSHELL_MAX_CHAINS override.
Identical invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import complexes, labeling, spherecount, vecpart
from .errors import OracleMismatch, ResourceLimit, VpshellError
from .poset import poset_to_dot, poset_to_json

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3
EXIT_BAD_INPUT = 4

DEFAULT_MAX_ELEMENTS = 10 ** 6
DEFAULT_MAX_CHAINS = 10 ** 7


class _BadInput(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments; the contract here is 4
    def error(self, message):
        raise _BadInput(message)


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, normalized."""

    command: str
    n: int = 0
    s: int = 1
    method: str = "all"
    fmt: str = "json"
    labels: bool = False
    sabotage: str | None = None
    max_n: int = 0
    out: str | None = None
    max_elements: int = DEFAULT_MAX_ELEMENTS
    max_chains: int = DEFAULT_MAX_CHAINS


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise _BadInput(f"{name} must be an integer, got {raw!r}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="vpshell", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_n=True):
        if with_n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--s", type=int, required=True,
                        help="number of labelings (at least 1)")
        sp.add_argument("-o", "--out", default=None,
                        help="write output here instead of stdout")
        sp.add_argument("--max-elements", type=int, default=None)
        sp.add_argument("--max-chains", type=int, default=None)

    b = sub.add_parser("build", help="emit the validated poset")
    common(b)
    b.add_argument("--labels", action="store_true",
                   help="attach edge labels to covers")
    b.add_argument("--format", dest="fmt", choices=("json", "dot"),
                   default="json")

    v = sub.add_parser("verify-el", help="check the EL property")
    common(v)
    v.add_argument("--sabotage", choices=labeling.SABOTAGES, default=None,
                   help="inject a deliberate defect first")

    c = sub.add_parser("count", help="count spheres in the wedge")
    common(c)
    c.add_argument("--method", choices=spherecount.METHODS + ("all",),
                   default="all")

    q = sub.add_parser("sequence", help="totals for n = 1..max-n, recursion only")
    common(q, with_n=False)
    q.add_argument("--max-n", type=int, required=True)

    d = sub.add_parser("export-dot", help="Hasse diagram as GraphViz DOT")
    common(d)
    d.add_argument("--labels", action="store_true")
    return parser


def _config(args) -> RunConfig:
    if getattr(args, "s", 1) < 1 or getattr(args, "n", 1) < 1 \
            or getattr(args, "max_n", 1) < 1:
        raise _BadInput("n, s, and max-n must be positive")
    return RunConfig(
        command=args.command,
        n=getattr(args, "n", 0),
        s=args.s,
        method=getattr(args, "method", "all"),
        fmt=getattr(args, "fmt", "json"),
        labels=getattr(args, "labels", False),
        sabotage=getattr(args, "sabotage", None),
        max_n=getattr(args, "max_n", 0),
        out=args.out,
        max_elements=(args.max_elements if args.max_elements is not None
                      else _env_int("VPSHELL_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS)),
        max_chains=(args.max_chains if args.max_chains is not None
                    else _env_int("VPSHELL_MAX_CHAINS", DEFAULT_MAX_CHAINS)))


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _cmd_build(cfg: RunConfig) -> int:
    p = vecpart.vector_partition_poset(cfg.n, cfg.s,
                                       max_elements=cfg.max_elements)
    edge_labels = (labeling.edge_label_map(p, labeling.cover_label)
                   if cfg.labels else None)
    if cfg.fmt == "dot":
        _emit(poset_to_dot(p, edge_labels), cfg.out)
    else:
        _emit(poset_to_json(p, edge_labels), cfg.out)
    return EXIT_OK


def _cmd_verify_el(cfg: RunConfig) -> int:
    p = vecpart.vector_partition_poset(cfg.n, cfg.s,
                                       max_elements=cfg.max_elements)
    lines = []
    code = EXIT_OK
    if cfg.sabotage is None:
        report = labeling.verify_el(p)
        lines.append(report.text())
        if not report.ok:
            code = EXIT_VERIFY
    else:
        # a defect must be caught by at least one of the two verifiers
        report = labeling.verify_el(
            p, labeling.sabotaged_label_map(p, cfg.sabotage))
        lines.append(f"[sabotage {cfg.sabotage}] {report.text()}")
        order = labeling.sabotaged_shelling_order(p, cfg.sabotage)
        shell = complexes.verify_shelling(complexes.order_complex(p), order)
        lines.append(
            f"[sabotage {cfg.sabotage}] shelling "
            + ("valid" if shell.valid else f"INVALID: {shell.problem}"))
        if not report.ok or not shell.valid:
            code = EXIT_VERIFY
    _emit("\n".join(lines) + "\n", cfg.out)
    return code


def _cmd_count(cfg: RunConfig) -> int:
    methods = (spherecount.METHODS if cfg.method == "all"
               else (cfg.method,))
    cert = spherecount.sphere_count_certificate(
        cfg.n, cfg.s, methods=methods,
        max_elements=cfg.max_elements, max_chains=cfg.max_chains)
    _emit(json.dumps(cert, sort_keys=True), cfg.out)
    return EXIT_OK if cert["match"] else EXIT_MISMATCH


def _cmd_sequence(cfg: RunConfig) -> int:
    rows = ["n,s,count" + (",tree_count" if cfg.s == 1 else "")]
    code = EXIT_OK
    for n in range(1, cfg.max_n + 1):
        total = spherecount.count_total(n, cfg.s)
        if cfg.s == 1:
            trees = spherecount.nonambiguous_tree_count(n - 1)
            rows.append(f"{n},{cfg.s},{total},{trees}")
            if trees != total:
                code = EXIT_MISMATCH
        else:
            rows.append(f"{n},{cfg.s},{total}")
    _emit("\n".join(rows) + "\n", cfg.out)
    return code


def _cmd_export_dot(cfg: RunConfig) -> int:
    return _cmd_build(RunConfig(**{**cfg.__dict__, "fmt": "dot"}))


_COMMANDS = {
    "build": _cmd_build,
    "verify-el": _cmd_verify_el,
    "count": _cmd_count,
    "sequence": _cmd_sequence,
    "export-dot": _cmd_export_dot,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        cfg = _config(args)
        return _COMMANDS[cfg.command](cfg)
    except _BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ResourceLimit as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OracleMismatch as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except VpshellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
