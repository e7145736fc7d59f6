"""Command line front end for batch cutset runs.

Every computing subcommand prints one JSON report with a fixed field
order, so two runs over the same inputs and seeds are byte-identical
(timing can be zeroed through SPARSECUT_ZERO_TIMING for comparisons).
Exit codes separate the reasons a run can stop: 0 success, 2 violated
precondition or unusable input, 3 exhausted search budget, 1 broken
internal invariant.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .algorithms import (
    degenerate_sparse_cutset,
    prop2_cutset,
    theorem1_cutset,
    theorem2_cutset,
    theorem3_dichotomy,
    theorem4_independent_cutset,
    theorem5_certify,
)
from .certificates import (
    Certificate,
    GoodCutset,
    IndependentCutset,
    KrrWitness,
    SquaredCycleIso,
    certificate_from_dict,
    certificate_to_dict,
)
from .errors import (
    BudgetExhausted,
    GraphError,
    InternalInvariantError,
    NoCutsetFound,
    PreconditionError,
)
from .generators import (
    CliqueChainParams,
    clique_chain,
    figure2_pattern,
    icosahedron,
    named_small,
    random_regular,
    squared_cycle,
    squared_path,
)
from .graph import CutsetReport, Graph, induced_stats
from .io import (
    emit_edge_list,
    emit_graph6,
    graph_digest,
    parse_edge_list,
    parse_graph6,
    to_dot,
)
from .oracles import (
    OracleBudget,
    enumerate_min_cutsets,
    find_constrained_cutset,
    find_independent_cutset,
    find_krr,
    recognize_squared_cycle,
    verify_certificate,
    vertex_connectivity,
)

SCHEMA_VERSION = 1

_REPORT_FIELDS = (
    ("schema_version", "int, currently 1"),
    ("input_digest", "sha256 of the canonical edge list, null for generate"),
    ("command", "object: op plus the parameters that shaped the run"),
    ("certificate", "tagged certificate object, or null when none applies"),
    ("verified", "bool when verification ran, null when skipped"),
    ("stats", "cutset statistics or oracle payload, null when none"),
    ("error", "only on failures: code, type, message"),
    ("timing_ms", "integer; 0 under SPARSECUT_ZERO_TIMING"),
)


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"environment variable {name} must be an integer, got {raw!r}")


def _env_flag(name: str) -> bool | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    return raw.strip().lower() not in ("0", "false", "no", "off")


def _timing_ms(t0: float) -> int:
    if _env_flag("SPARSECUT_ZERO_TIMING"):
        return 0
    return int((time.monotonic() - t0) * 1000)


def _budget(args) -> OracleBudget:
    max_n = getattr(args, "max_n", None)
    if max_n is None:
        max_n = _env_int("SPARSECUT_MAX_N")
    max_subset = getattr(args, "max_subset", None)
    if max_subset is None:
        max_subset = _env_int("SPARSECUT_MAX_SUBSET")
    base = OracleBudget()
    return OracleBudget(
        max_n=base.max_n if max_n is None else max_n,
        max_subset_size=base.max_subset_size if max_subset is None else max_subset,
        time_hint_s=getattr(args, "time_hint", None),
    )


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="ascii")


def _looks_like_graph6(text: str) -> bool:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        return True
    if not line or any(ch.isspace() for ch in line):
        return False
    return all(63 <= ord(ch) <= 126 for ch in line)


def _load_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6" or (fmt == "auto" and _looks_like_graph6(text)):
        return parse_graph6(text)
    return parse_edge_list(text)


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _emit(report: dict, path: str | None = None) -> None:
    _write_out(json.dumps(report, indent=2) + "\n", path)


def _stats_for(g: Graph, cert: Certificate | None) -> dict | None:
    members = getattr(cert, "cutset", None)
    if members is None:
        return None
    return induced_stats(g, set(members)).to_dict()


def _verification_wanted(args, g: Graph) -> bool:
    if getattr(args, "verify", None) is not None:
        return args.verify
    env = _env_flag("SPARSECUT_VERIFY")
    if env is not None:
        return env
    return g.n <= 20


def _report_skeleton(op: str, digest: str | None, params: dict) -> dict:
    command = {"op": op}
    command.update(params)
    return {
        "schema_version": SCHEMA_VERSION,
        "input_digest": digest,
        "command": command,
    }


_ERROR_CODES = (
    (InternalInvariantError, 1),
    (BudgetExhausted, 3),
    (NoCutsetFound, 2),
    (PreconditionError, 2),
    (GraphError, 2),
)


def _code_for(exc: Exception) -> int | None:
    for cls, code in _ERROR_CODES:
        if isinstance(exc, cls):
            return code
    return None


# ----------------------------------------------------------------- generate


def _cmd_generate(args) -> int:
    seed = args.seed
    if seed is None:
        seed = _env_int("SPARSECUT_SEED") or 0
    name = args.family
    params = args.params
    try:
        g = _build_family(name, params, seed)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, (GraphError, PreconditionError)):
            raise
        raise GraphError(f"generate {name}: bad parameters {params}: {exc}") from None
    text = emit_graph6(g) + "\n" if args.format == "graph6" else emit_edge_list(g)
    _write_out(text, args.output)
    return 0


def _build_family(name: str, params: list[int], seed: int) -> Graph:
    named = {
        "k4": "K4",
        "triangular-prism": "TriangularPrism",
        "k3boxk3": "K3BoxK3",
        "linegraphpetersen": "LineGraphPetersen",
    }
    if name == "icosahedron":
        return icosahedron()
    if name == "squared-cycle":
        return squared_cycle(*params)
    if name == "squared-path":
        return squared_path(*params)
    if name == "figure2":
        return figure2_pattern(*params)
    if name == "clique-chain":
        return clique_chain(CliqueChainParams(*params))
    if name == "random-regular":
        return random_regular(*params, seed=seed)
    if name in named:
        if params:
            raise GraphError(f"generate {name} takes no positional parameters")
        return named_small(named[name])
    known = ", ".join(
        sorted(
            [
                "icosahedron",
                "squared-cycle",
                "squared-path",
                "figure2",
                "clique-chain",
                "random-regular",
                *named,
            ]
        )
    )
    raise GraphError(f"unknown family {name!r}; known: {known}")


# --------------------------------------------------------------- find-cutset


def _run_method(g: Graph, args) -> tuple[Certificate | None, CutsetReport | None]:
    method = args.method
    if method == "thm1":
        if args.delta is None:
            raise PreconditionError("find-cutset --method thm1 requires --delta")
        report = theorem1_cutset(g, args.delta)
        cert = GoodCutset(
            cutset=report.cutset.members,
            size_bound=args.delta,
            degree_bound=args.delta - 3,
        )
        return cert, report
    if method == "thm2":
        return theorem2_cutset(g), None
    if method == "thm3":
        return theorem3_dichotomy(g), None
    if method == "thm4":
        return theorem4_independent_cutset(g), None
    if method == "thm5":
        if args.delta is None or args.r is None:
            raise PreconditionError("find-cutset --method thm5 requires --delta and --r")
        return theorem5_certify(g, args.delta, args.r), None
    if method == "prop2":
        report = prop2_cutset(g)
        cert = GoodCutset(cutset=report.cutset.members, degree_bound=1)
        return cert, report
    if method == "degenerate":
        report = degenerate_sparse_cutset(g, args.u)
        return GoodCutset(cutset=report.cutset.members), report
    raise GraphError(f"unknown method {method!r}")


def _find_cutset_once(text: str, args) -> tuple[dict, int]:
    t0 = time.monotonic()
    params = {"method": args.method}
    for key in ("delta", "r", "u"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    try:
        g = _load_graph(text, args.format)
    except Exception as exc:
        code = _code_for(exc)
        if code is None:
            raise
        out = _report_skeleton("find-cutset", None, params)
        out["certificate"] = None
        out["verified"] = None
        out["stats"] = None
        out["error"] = {"code": code, "type": type(exc).__name__, "message": str(exc)}
        out["timing_ms"] = _timing_ms(t0)
        return out, code
    out = _report_skeleton("find-cutset", graph_digest(g), params)
    try:
        cert, report = _run_method(g, args)
    except Exception as exc:
        code = _code_for(exc)
        if code is None:
            raise
        out["certificate"] = None
        out["verified"] = None
        out["stats"] = None
        out["error"] = {"code": code, "type": type(exc).__name__, "message": str(exc)}
        out["timing_ms"] = _timing_ms(t0)
        return out, code
    out["certificate"] = None if cert is None else certificate_to_dict(cert)
    if cert is not None and _verification_wanted(args, g):
        out["verified"] = verify_certificate(g, cert)
    else:
        out["verified"] = None
    if report is not None:
        out["stats"] = report.to_dict()
    else:
        out["stats"] = _stats_for(g, cert)
    out["timing_ms"] = _timing_ms(t0)
    if out["verified"] is False:
        out["error"] = {
            "code": 1,
            "type": "VerificationFailed",
            "message": "certificate failed the oracle re-check",
        }
        return out, 1
    if args.dot is not None and cert is not None:
        members = getattr(cert, "cutset", ()) or ()
        _write_out(to_dot(g, members), args.dot)
    return out, 0


def _cmd_find_cutset(args) -> int:
    if args.corpus is not None:
        return _corpus_run(args, _find_cutset_once)
    out, code = _find_cutset_once(_read_text(args.input), args)
    _emit(out, args.output)
    return code


# -------------------------------------------------------------------- oracle


def _run_oracle(g: Graph, args) -> tuple[Certificate | None, dict | None]:
    which = args.probe
    budget = _budget(args)
    if which == "independent-cutset":
        hit = find_independent_cutset(g, budget)
        if hit is None:
            return None, {"found": False}
        return IndependentCutset(cutset=hit.members), None
    if which == "constrained-cutset":
        if args.max_delta is None and args.avg is None:
            raise PreconditionError(
                "oracle constrained-cutset needs --max-delta or --avg"
            )
        avg = None
        if args.avg is not None:
            p, _, q = args.avg.partition("/")
            try:
                avg = Fraction(int(p), int(q or "1"))
            except (ValueError, ZeroDivisionError):
                raise GraphError(f"--avg expects P/Q, got {args.avg!r}") from None
        hit = find_constrained_cutset(g, max_delta=args.max_delta, max_avg=avg, budget=budget)
        if hit is None:
            return None, {"found": False}
        cert = GoodCutset(
            cutset=hit.members,
            degree_bound=args.max_delta,
            avg_bound_strict=(
                None if avg is None else (avg.numerator, avg.denominator)
            ),
        )
        return cert, None
    if which == "connectivity":
        return None, {"connectivity": vertex_connectivity(g)}
    if which == "krr":
        if args.r is None:
            raise PreconditionError("oracle krr requires --r")
        hit = find_krr(g, args.r, budget)
        if hit is None:
            return None, {"found": False}
        side_a, side_b = hit
        return KrrWitness(r=args.r, side_a=side_a.members, side_b=side_b.members), None
    if which == "min-cutsets":
        cuts = enumerate_min_cutsets(g, budget)
        return None, {
            "count": len(cuts),
            "cutsets": [list(c.members) for c in cuts],
        }
    if which == "squared-cycle":
        order = recognize_squared_cycle(g)
        if order is None:
            return None, {"found": False}
        return SquaredCycleIso(order=order), None
    raise GraphError(f"unknown oracle {which!r}")


def _oracle_once(text: str, args) -> tuple[dict, int]:
    t0 = time.monotonic()
    params = {"probe": args.probe}
    for key in ("r", "max_delta", "avg", "max_n", "max_subset", "time_hint"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    try:
        g = _load_graph(text, args.format)
        out = _report_skeleton("oracle", graph_digest(g), params)
        cert, payload = _run_oracle(g, args)
    except Exception as exc:
        code = _code_for(exc)
        if code is None:
            raise
        out = _report_skeleton("oracle", None, params)
        out["certificate"] = None
        out["verified"] = None
        out["stats"] = None
        out["error"] = {"code": code, "type": type(exc).__name__, "message": str(exc)}
        out["timing_ms"] = _timing_ms(t0)
        return out, code
    out["certificate"] = None if cert is None else certificate_to_dict(cert)
    if cert is not None and _verification_wanted(args, g):
        out["verified"] = verify_certificate(g, cert)
    else:
        out["verified"] = None
    out["stats"] = payload if payload is not None else _stats_for(g, cert)
    out["timing_ms"] = _timing_ms(t0)
    if out["verified"] is False:
        out["error"] = {
            "code": 1,
            "type": "VerificationFailed",
            "message": "oracle result failed the certificate re-check",
        }
        return out, 1
    return out, 0


def _cmd_oracle(args) -> int:
    if args.corpus is not None:
        return _corpus_run(args, _oracle_once)
    out, code = _oracle_once(_read_text(args.input), args)
    _emit(out, args.output)
    return code


# -------------------------------------------------------------------- verify


def _cmd_verify(args) -> int:
    t0 = time.monotonic()
    text = _read_text(args.input)
    g = _load_graph(text, args.format)
    cert_raw = json.loads(Path(args.certificate).read_text(encoding="ascii"))
    cert = certificate_from_dict(cert_raw)
    ok = verify_certificate(g, cert)
    out = _report_skeleton(
        "verify", graph_digest(g), {"certificate_file": str(args.certificate)}
    )
    out["certificate"] = certificate_to_dict(cert)
    out["verified"] = ok
    out["stats"] = _stats_for(g, cert)
    out["timing_ms"] = _timing_ms(t0)
    _emit(out, args.output)
    return 0 if ok else 1


# -------------------------------------------------------------------- report


def _cmd_report(args) -> int:
    if args.json:
        schema = {
            "schema_version": SCHEMA_VERSION,
            "fields": [
                {"name": name, "doc": doc} for name, doc in _REPORT_FIELDS
            ],
            "exit_codes": {
                "0": "certificate produced (and verified when enabled)",
                "1": "internal invariant breach or failed verification",
                "2": "violated precondition or unusable input",
                "3": "search budget exhausted",
            },
        }
        _emit(schema, args.output)
        return 0
    lines = [f"run report schema, version {SCHEMA_VERSION}", ""]
    for name, doc in _REPORT_FIELDS:
        lines.append(f"  {name}: {doc}")
    lines += [
        "",
        "exit codes: 0 success, 2 precondition, 3 budget, 1 invariant breach",
    ]
    _write_out("\n".join(lines) + "\n", args.output)
    return 0


# -------------------------------------------------------------------- corpus


def _corpus_run(args, runner) -> int:
    root = Path(args.corpus)
    if not root.is_dir():
        raise GraphError(f"--corpus {root} is not a directory")
    files = sorted(p for p in root.iterdir() if p.is_file())
    if not files:
        raise GraphError(f"--corpus {root} holds no files")

    def one(path: Path) -> tuple[str, dict, int]:
        try:
            text = path.read_text(encoding="ascii")
        except (OSError, UnicodeDecodeError) as exc:
            return (
                path.name,
                {"error": {"code": 2, "type": "GraphError", "message": str(exc)}},
                2,
            )
        out, code = runner(text, args)
        return path.name, out, code

    workers = min(8, len(files))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(one, files))
    rows.sort(key=lambda row: row[0])
    results = [{"file": name, "report": out} for name, out, _ in rows]
    aggregate = {
        "schema_version": SCHEMA_VERSION,
        "corpus": str(root),
        "count": len(results),
        "results": results,
    }
    _emit(aggregate, args.output)
    codes = {code for _, _, code in rows}
    for severe in (1, 3, 2):
        if severe in codes:
            return severe
    return 0


# ---------------------------------------------------------------- arg wiring


def _add_io_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("-i", "--input", default=None, help="graph file, '-' or absent for stdin")
    p.add_argument("-o", "--output", default=None, help="write output here instead of stdout")
    p.add_argument(
        "--format",
        choices=("auto", "edge-list", "graph6"),
        default="auto",
        help="input format; auto sniffs graph6 lines",
    )


def _add_budget_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=None, help="oracle order cap")
    p.add_argument("--max-subset", type=int, default=None, help="oracle subset size cap")
    p.add_argument("--time-hint", type=float, default=None, help="soft seconds limit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsecut",
        description="certified sparse cutsets: constructions, oracles, reports",
    )
    sub = parser.add_subparsers(dest="op", required=True)

    p = sub.add_parser("generate", help="emit a fixture graph")
    p.add_argument("family", help="icosahedron, squared-cycle, figure2, ...")
    p.add_argument("params", nargs="*", type=int, help="family parameters")
    p.add_argument("--seed", type=int, default=None, help="RNG seed for random families")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("find-cutset", help="run a constructive method")
    p.add_argument(
        "--method",
        required=True,
        choices=("thm1", "thm2", "thm3", "thm4", "thm5", "prop2", "degenerate"),
    )
    p.add_argument("--delta", type=int, default=None, help="degree bound for thm1/thm5")
    p.add_argument("--r", type=int, default=None, help="biclique order for thm5")
    p.add_argument("--u", type=int, default=0, help="center vertex for degenerate")
    p.add_argument(
        "--verify",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="force oracle re-check on or off (default: on for n <= 20)",
    )
    p.add_argument("--dot", default=None, help="also write a DOT file with the cutset filled")
    p.add_argument("--corpus", default=None, help="process every file in this directory")
    _add_io_options(p)
    p.set_defaults(func=_cmd_find_cutset)

    p = sub.add_parser("oracle", help="run a brute-force search or check")
    p.add_argument(
        "probe",
        choices=(
            "independent-cutset",
            "constrained-cutset",
            "connectivity",
            "krr",
            "min-cutsets",
            "squared-cycle",
        ),
    )
    p.add_argument("--r", type=int, default=None, help="biclique order for krr")
    p.add_argument("--max-delta", type=int, default=None, help="internal degree cap")
    p.add_argument("--avg", default=None, help="strict average bound as P/Q")
    p.add_argument(
        "--verify",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="re-check found certificates (default: on for n <= 20)",
    )
    p.add_argument("--corpus", default=None, help="process every file in this directory")
    _add_budget_options(p)
    _add_io_options(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="re-check a serialized certificate")
    p.add_argument("--certificate", required=True, help="certificate JSON file")
    _add_io_options(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("report", help="describe the JSON report schema")
    p.add_argument("--json", action="store_true", help="machine-readable schema")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (KeyboardInterrupt, BrokenPipeError):
        return 130
    except Exception as exc:
        code = _code_for(exc)
        if code is None:
            raise
        print(f"sparsecut: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
