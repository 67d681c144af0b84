"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant
violation or failed verification, 3 conjecture violation found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .chain import ChainComplex, MultiplicityTable
from .characters import character, class_size
from .csf import CsfExpansion, SizeBoundError, chromatic_symmetric_function, csf_to_schur, schur_to_monomial
from .graphs import Graph, GraphFormatError, read_graph, star
from .linalg import RankBackend
from .partitions import PartitionParseError, parse_partition, partitions_of
from .star import FormulaDomainError, predict_h10_star
from .tableaux import enumerate_ssyt, enumerate_syt, f_syt, hook_lengths, kostka
from .verify import (
    VerifyReport,
    verify_conjecture,
    verify_corollaries,
    verify_cross,
    verify_kernel,
    verify_table1,
)

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_CONJECTURE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    graph: Graph | None = None
    graph_source: str | None = None
    rank_mode: str = "auto"
    allow_large: bool = False
    method: str | None = None
    seed: int = 0
    output_format: str = "table"
    extra: dict = field(default_factory=dict)

    def backend(self) -> RankBackend:
        return RankBackend(mode=self.rank_mode, seed=self.seed)

    def input_record(self) -> dict:
        rec = {k: str(v) for k, v in sorted(self.extra.items())}
        if self.graph is not None:
            rec["graph_source"] = self.graph_source
            rec["n"] = str(self.graph.n)
            rec["edges"] = [f"{u} {v}" for u, v in self.graph.edges]
        return rec


def _graph_from(args) -> tuple[Graph, str]:
    if (args.star is None) == (args.graph is None):
        raise UsageError("give exactly one of --star N or --graph FILE")
    if args.star is not None:
        return star(args.star), f"--star {args.star}"
    return read_graph(args.graph), args.graph


def _emit(cfg: RunConfig, result, text: str, rows: list[dict] | None, metadata: dict | None = None, out=None):
    out = out or sys.stdout
    if cfg.output_format == "json":
        doc = {"command": cfg.command, "input": cfg.input_record(), "metadata": metadata or {}, "result": result}
        out.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    elif cfg.output_format == "csv":
        rows = rows or []
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        out.write(buf.getvalue())
    else:
        out.write(text)


# ---------------------------------------------------------------- tableaux


def cmd_tableaux(args) -> int:
    cfg = RunConfig("tableaux", output_format=args.format, extra={"quantity": args.quantity, "args": " ".join(args.values)})
    q = args.quantity
    vals = [parse_partition(v) for v in args.values]
    need = {"f": 1, "hooks": 1, "syt": 1, "partitions": 0, "kostka": 2, "ssyt": 2, "char": 2, "class-size": 1}
    if q == "partitions":
        if len(args.values) != 1 or not args.values[0].isdigit():
            raise UsageError("tableaux partitions N")
        ps = partitions_of(int(args.values[0]))
        _emit(cfg, [str(p) for p in ps], "".join(f"{p}\n" for p in ps), [{"partition": str(p)} for p in ps])
        return EXIT_OK
    if len(vals) != need[q]:
        raise UsageError(f"tableaux {q} takes {need[q]} partition argument(s)")
    if q == "f":
        value = f_syt(vals[0])
    elif q == "kostka":
        value = kostka(vals[0], vals[1])
    elif q == "char":
        value = character(vals[0], vals[1])
    elif q == "class-size":
        value = class_size(vals[0])
    elif q == "hooks":
        rows = hook_lengths(vals[0])
        text = "".join(" ".join(map(str, r)) + "\n" for r in rows)
        _emit(cfg, [[str(h) for h in r] for r in rows], text, [{"row": str(i), "hooks": " ".join(map(str, r))} for i, r in enumerate(rows)])
        return EXIT_OK
    else:
        tabs = enumerate_syt(vals[0]) if q == "syt" else enumerate_ssyt(vals[0], vals[1])
        if args.list:
            if cfg.output_format == "table":
                for t in tabs:
                    sys.stdout.write(str(t) + "\n")
            else:
                _emit(cfg, [[[str(x) for x in r] for r in t.rows] for t in tabs], "", [{"tableau": str(t)} for t in tabs])
            return EXIT_OK
        value = len(tabs)
    _emit(cfg, str(value), f"{value}\n", [{"quantity": q, "value": str(value)}])
    return EXIT_OK


# --------------------------------------------------------------------- csf


def _csf_records(e: CsfExpansion) -> list[dict]:
    return [{"basis": e.basis, "partition": str(lam), "coefficient": str(c)} for lam, c in e.items()]


def cmd_csf(args) -> int:
    G, source = _graph_from(args)
    cfg = RunConfig("csf", G, source, output_format=args.format, extra={"basis": args.basis})
    mono = chromatic_symmetric_function(G)
    e = csf_to_schur(mono) if args.basis == "schur" else mono
    if args.basis == "schur" and schur_to_monomial(e) != mono:
        raise ArithmeticError("Schur expansion does not reproduce the monomial expansion")
    prefix = "s" if e.basis == "schur" else "m"
    text = "".join(f"{prefix}_{{{lam}}}: {c}\n" for lam, c in e.items())
    _emit(cfg, _csf_records(e), text, _csf_records(e))
    return EXIT_OK


# ---------------------------------------------------------------- homology


def _table_text(table: MultiplicityTable) -> str:
    return table.to_text() or "0\n"


def cmd_homology(args) -> int:
    G, source = _graph_from(args)
    cfg = RunConfig(
        "homology", G, source, rank_mode=args.rank_mode, allow_large=args.allow_large, method=args.method,
        seed=args.seed, output_format=args.format, extra={"i": args.index},
    )
    if not 0 <= args.index <= G.m:
        raise UsageError(f"-i must lie in 0..{G.m}")
    cc = ChainComplex(G, backend=cfg.backend(), allow_large=args.allow_large, method=args.method)
    info = cc.report(args.index)
    table = info.pop("table")
    metadata = {k: v for k, v in info.items()}
    text = _table_text(table)
    if cfg.output_format == "table":
        text += f"# chain dimensions: {' '.join(info['chain_dimensions'])}\n"
        text += f"# rank backend: {info['backend']['rank_mode']}, primes {' '.join(info['backend']['primes'])}\n"
        text += f"# method: {info['method']}\n"
    _emit(cfg, table.to_records(), text, table.to_records(), metadata)
    return EXIT_OK


def cmd_predict(args) -> int:
    cfg = RunConfig("predict", output_format=args.format, extra={"star": args.star})
    table = predict_h10_star(args.star)
    text = _table_text(table) + "# assumes the vanishing conjecture for shapes outside ell 2^k 1^m\n"
    _emit(cfg, table.to_records(), text, table.to_records(), {"assumes_conjecture": True})
    return EXIT_OK


# ------------------------------------------------------------------ verify


def cmd_verify(args) -> int:
    cfg = RunConfig("verify", rank_mode=args.rank_mode, seed=args.seed, output_format=args.format,
                    allow_large=args.allow_large, method=args.method,
                    extra={"suite": args.suite, "max_n": args.max_n})
    large = {"method": args.method, "allow_large": args.allow_large}
    backend = cfg.backend()
    report = VerifyReport()
    suite = args.suite
    if suite in ("table1", "all"):
        verify_table1(report)
    if suite in ("corollaries", "all"):
        verify_corollaries(30, report)
    if suite in ("kernel", "all"):
        verify_kernel(report)
    if suite in ("cross", "all"):
        verify_cross(args.max_n if args.max_n is not None else 6, backend, report, **large)
    if suite in ("conjecture", "all"):
        verify_conjecture(args.max_n if args.max_n is not None else 5, backend, report, **large)
    violations = [
        {"n": str(r.n), "i": str(i), "partition": str(lam), "multiplicity": str(m)}
        for r in report.conjecture
        for i, lam, m in r.violations
    ]
    result = {
        "checks": [c.to_dict() for c in report.checks],
        "all_passed": "true" if report.passed else "false",
        "conjecture": [r.to_dict() for r in report.conjecture],
        "violations": violations,
    }
    lines = [c.line() + "\n" for c in report.checks]
    if report.conjecture:
        for r in report.conjecture:
            found = ", ".join(f"i={i} {lam}:{m}" for i, lam, m in r.violations) or "none"
            lines.append(f"CONJECTURE n={r.n} i=0..{r.n - 1}: violations {found}\n")
    lines.append(f"{sum(c.passed for c in report.checks)}/{len(report.checks)} checks passed\n")
    metadata = dict(report.metadata)
    metadata["exit_code"] = str(report.exit_code())
    rows = [c.to_dict() for c in report.checks] + [dict(v, name="conjecture violation") for v in violations]
    _emit(cfg, result, "".join(lines), rows, metadata)
    return report.exit_code()


# ------------------------------------------------------------------ parser


def _add_graph_args(p):
    p.add_argument("--star", type=int, metavar="N", help="star graph on N vertices")
    p.add_argument("--graph", metavar="FILE", help="graph file ('n <count>' then 'u v' lines)")


def _add_format(p):
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")


def _add_rank_args(p):
    p.add_argument("--rank-mode", choices=["exact", "modular", "auto"], default="auto")
    p.add_argument("--exact", dest="rank_mode", action="store_const", const="exact", help="same as --rank-mode exact")
    p.add_argument("--seed", type=int, default=0, help="seed for choosing the primes")
    p.add_argument("--method", choices=["projector", "young"], default=None,
                   help="image multiplicities from class-sum projectors or Young-subgroup fixed points")
    p.add_argument("--allow-large", action="store_true", help="permit n = 7 (modular ranks only)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromhom", description="Degree-0 chromatic symmetric homology of small graphs.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("tableaux", help="partitions, tableaux, Kostka numbers, characters")
    p.add_argument("quantity", choices=["f", "kostka", "syt", "ssyt", "hooks", "char", "class-size", "partitions"])
    p.add_argument("values", nargs="*", help="partitions such as 3,2,2 or '3 2^2'")
    p.add_argument("--list", action="store_true", help="print the tableaux instead of their count")
    _add_format(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("csf", help="chromatic symmetric function")
    _add_graph_args(p)
    p.add_argument("--basis", choices=["monomial", "schur"], default="monomial")
    _add_format(p)
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("homology", help="Specht multiplicities of H_{i,0}")
    _add_graph_args(p)
    p.add_argument("-i", "--index", type=int, default=1)
    _add_rank_args(p)
    _add_format(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("predict", help="closed-form H_{1,0} of a star (assumes the vanishing conjecture)")
    p.add_argument("--star", type=int, metavar="N", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", help="reproduction and consistency checks")
    p.add_argument("suite", choices=["table1", "cross", "conjecture", "corollaries", "kernel", "all"])
    p.add_argument("--max-n", type=int, default=None)
    _add_rank_args(p)
    _add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, PartitionParseError, GraphFormatError, SizeBoundError, FormulaDomainError, OSError) as exc:
        print(f"chromhom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, AssertionError) as exc:
        print(f"chromhom: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"chromhom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
