"""Command-line interface and the JSON file formats.

Subcommands:
  check           decide whether a system admits a common prior
  cohomology      simplex counts, coboundary ranks, and H^k
  counterexample  build an irreconcilable system from a holed complex
  oracle          independent linear-feasibility cross-check

Exit codes: 0 when a common prior exists (or the command simply
succeeded), 1 when it does not exist (or no counterexample is possible),
2 for invalid input. All probabilities in reports are exact fractions in
lowest terms; reports are deterministic byte for byte for a given input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Mapping, Sequence

from urprior.cohomology import cohomology_dim
from urprior.compat import (
    Asymmetry,
    Certificate,
    CycleCertificate,
    Violation,
    decide_urprior,
    pairwise_compatibility,
)
from urprior.complexes import (
    SimplicialComplex,
    build_overlap_complex,
    coboundary_matrix,
    connected_components,
    from_facets,
)
from urprior.credence import AgentSystem, ValidationError, validate
from urprior.numerics import Matrix, format_rational
from urprior.numerics import rank as matrix_rank
from urprior.oracle import feasibility_oracle
from urprior.witness import NoHoleError, generate_counterexample

__all__ = ["main", "load_complex", "load_system", "system_to_dict", "complex_to_dict"]


class CliError(Exception):
    def __init__(self, message: str, code: int = 2) -> None:
        super().__init__(message)
        self.code = code


def _load_json(path: str) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON in {path}: {exc}") from exc


def load_system(path: str) -> AgentSystem:
    """Read and validate a system file. Raises ValidationError on rule breaks."""
    return validate(_load_json(path))


def load_complex(path: str) -> SimplicialComplex:
    """Read a complex file ({"vertices": [...], "facets": [[...], ...]})."""
    raw = _load_json(path)
    if not isinstance(raw, Mapping):
        raise CliError(f"{path}: complex file must be a JSON object")
    vertices = raw.get("vertices")
    facets = raw.get("facets")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise CliError(f"{path}: 'vertices' must be a list of labels")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise CliError(f"{path}: 'facets' must be a list of vertex lists")
    try:
        return from_facets(vertices, facets)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc


def system_to_dict(system: AgentSystem) -> dict[str, Any]:
    """Serialize a system to the JSON file shape, fractions as strings."""
    return {
        "outcomes": list(system.space.outcomes),
        "agents": [
            {
                "name": agent.name,
                "credence": {
                    x: format_rational(agent.pmf[x])
                    for x in system.space.outcomes
                    if x in agent.pmf
                },
            }
            for agent in system.agents
        ],
    }


def complex_to_dict(X: SimplicialComplex) -> dict[str, Any]:
    return {
        "vertices": list(X.vertices),
        "facets": [[X.vertices[i] for i in facet] for facet in X.facets()],
    }


def _certificate_to_json(certificate: Certificate) -> dict[str, Any]:
    if isinstance(certificate, Violation):
        return {
            "kind": "pairwise_violation",
            "pair": list(certificate.pair),
            "outcome": certificate.outcome,
            "conditional_left": format_rational(certificate.conditional_left),
            "conditional_right": format_rational(certificate.conditional_right),
        }
    if isinstance(certificate, Asymmetry):
        return {
            "kind": "null_overlap_asymmetry",
            "pair": list(certificate.pair),
            "overlap_mass_left": format_rational(certificate.overlap_mass_left),
            "overlap_mass_right": format_rational(certificate.overlap_mass_right),
        }
    if isinstance(certificate, CycleCertificate):
        return {
            "kind": "cycle_holonomy",
            "cycle": list(certificate.cycle),
            "holonomy": format_rational(certificate.holonomy),
            "breaking_edge": list(certificate.breaking_edge),
        }
    raise TypeError(f"unknown certificate type {type(certificate).__name__}")


def _describe_certificate(cert: Mapping[str, Any]) -> str:
    kind = cert["kind"]
    if kind == "pairwise_violation":
        a, b = cert["pair"]
        return (
            f"agents {a} and {b} disagree on {cert['outcome']!r} given their shared outcomes: "
            f"{cert['conditional_left']} vs {cert['conditional_right']}"
        )
    if kind == "null_overlap_asymmetry":
        a, b = cert["pair"]
        return (
            f"agents {a} and {b} share outcomes, but only one side gives the overlap "
            f"positive mass ({cert['overlap_mass_left']} vs {cert['overlap_mass_right']})"
        )
    if kind == "cycle_holonomy":
        walk = " -> ".join(list(cert["cycle"]) + [cert["cycle"][0]])
        u, v = cert["breaking_edge"]
        return f"cycle {walk} has ratio product {cert['holonomy']} != 1 (edge {u}-{v} closes it)"
    return str(dict(cert))


def _measure_to_json(measure: Mapping[str, Any], system: AgentSystem) -> dict[str, str]:
    return {x: format_rational(measure[x]) for x in system.space.outcomes if x in measure}


def build_check_report(system: AgentSystem, max_dim: int = 2) -> tuple[dict[str, Any], int]:
    """Assemble the full check report and its exit code."""
    compatibility = pairwise_compatibility(system)
    X = build_overlap_complex(system, max_dim=max_dim)
    result = decide_urprior(system)
    report: dict[str, Any] = {
        "valid": True,
        "agents": len(system.agents),
        "outcomes": len(system.space.outcomes),
        "pairwise": {
            "compatible": compatibility.compatible,
            "violations": [_certificate_to_json(v) for v in compatibility.violations],
        },
        "asymmetries": [_certificate_to_json(a) for a in compatibility.asymmetries],
        "complex": {"counts": X.counts(max(2, X.dim))},
        "components": len(connected_components(X)),
        "h1": cohomology_dim(X, 1),
        "verdict": result.verdict,
        "ur_prior": _measure_to_json(result.measure, system) if result.measure is not None else None,
        "certificate": _certificate_to_json(result.certificate)
        if result.certificate is not None
        else None,
    }
    return report, 0 if result.verdict == "exists" else 1


def render_check_text(report: Mapping[str, Any]) -> str:
    lines = [f"agents: {report['agents']}, outcomes: {report['outcomes']}"]
    pairwise = report["pairwise"]
    if pairwise["compatible"]:
        lines.append("pairwise: compatible")
    else:
        lines.append("pairwise: incompatible")
        for v in pairwise["violations"]:
            lines.append("  " + _describe_certificate(v))
    if report["asymmetries"]:
        lines.append("asymmetries:")
        for a in report["asymmetries"]:
            lines.append("  " + _describe_certificate(a))
    else:
        lines.append("asymmetries: none")
    counts = report["complex"]["counts"]
    lines.append("complex: " + " ".join(f"X{k}={c}" for k, c in enumerate(counts)))
    lines.append(f"components: {report['components']}")
    lines.append(f"H1 = {report['h1']}")
    if report["verdict"] == "exists":
        lines.append("verdict: ur-prior exists")
        lines.append("ur-prior:")
        for outcome, value in report["ur_prior"].items():
            lines.append(f"  {outcome} = {value}")
        if report["components"] > 1:
            lines.append(
                "note: the overlap skeleton is disconnected, so the relative mass "
                "between components is one valid choice among many"
            )
    else:
        lines.append("verdict: no ur-prior")
        lines.append("certificate: " + _describe_certificate(report["certificate"]))
    return "\n".join(lines)


def _emit(payload: Mapping[str, Any], text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _invalid_system(exc: ValidationError, as_json: bool) -> int:
    if as_json:
        print(json.dumps({"valid": False, "errors": exc.violations}, indent=2))
    else:
        print("invalid system file:")
        for line in exc.violations:
            print(f"  {line}")
    return 2


def cmd_check(args: argparse.Namespace) -> int:
    if args.max_dim < 2:
        raise CliError("--max-dim must be at least 2 for check reports")
    try:
        system = load_system(args.file)
    except ValidationError as exc:
        return _invalid_system(exc, args.json)
    report, code = build_check_report(system, max_dim=args.max_dim)
    _emit(report, render_check_text(report), args.json)
    return code


def _simplex_tag(X: SimplicialComplex, s: Sequence[int]) -> str:
    return ",".join(X.vertices[i] for i in s)


def _render_labeled_matrix(
    title: str, m: Matrix, row_labels: list[str], col_labels: list[str]
) -> str:
    header = [""] + col_labels
    body = [
        [row_labels[i]] + [format_rational(x) for x in m.entries[i]] for i in range(m.rows)
    ]
    table = [header] + body
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    lines = [title]
    for row in table:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def cmd_cohomology(args: argparse.Namespace) -> int:
    if args.dim < 1:
        raise CliError("--dim must be at least 1")
    raw = _load_json(args.file)
    if isinstance(raw, Mapping) and "agents" in raw:
        try:
            system = validate(raw)
        except ValidationError as exc:
            raise CliError("invalid system file: " + "; ".join(exc.violations)) from exc
        depth = args.max_dim if args.max_dim is not None else args.dim + 1
        X = build_overlap_complex(system, max_dim=depth)
    elif isinstance(raw, Mapping) and "facets" in raw:
        X = load_complex(args.file)
    else:
        raise CliError(f"{args.file}: neither a system file (agents) nor a complex file (facets)")

    k = args.dim
    below = coboundary_matrix(X, k - 1)
    at = coboundary_matrix(X, k)
    rank_below = matrix_rank(below)
    rank_at = matrix_rank(at)
    cocycles = len(X.simplices(k)) - rank_at
    coboundaries = rank_below
    h = cocycles - coboundaries

    payload = {
        "counts": X.counts(),
        "dim": k,
        "ranks": {f"delta_{k - 1}": rank_below, f"delta_{k}": rank_at},
        "cocycles": cocycles,
        "coboundaries": coboundaries,
        "h": h,
    }
    lines = [
        "simplices: " + " ".join(f"X{d}={c}" for d, c in enumerate(X.counts())),
        f"rank delta_{k - 1} = {rank_below}",
        f"rank delta_{k} = {rank_at}",
        f"cocycles {cocycles}, coboundaries {coboundaries}, H{k} = {h}",
    ]
    if args.dump_matrices:
        lines.append("")
        lines.append(
            _render_labeled_matrix(
                f"delta_{k - 1} (rows: {k}-simplices, cols: {k - 1}-simplices)",
                below,
                [_simplex_tag(X, s) for s in X.simplices(k)],
                [_simplex_tag(X, s) for s in X.simplices(k - 1)],
            )
        )
        lines.append("")
        lines.append(
            _render_labeled_matrix(
                f"delta_{k} (rows: {k + 1}-simplices, cols: {k}-simplices)",
                at,
                [_simplex_tag(X, s) for s in X.simplices(k + 1)],
                [_simplex_tag(X, s) for s in X.simplices(k)],
            )
        )
    _emit(payload, "\n".join(lines), args.json)
    return 0


def cmd_counterexample(args: argparse.Namespace) -> int:
    X = load_complex(args.file)
    try:
        system = generate_counterexample(X)
    except NoHoleError as exc:
        print(f"no counterexample: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(system_to_dict(system), indent=2)
    if args.output:
        try:
            Path(args.output).write_text(text + "\n")
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc}") from exc
        print(
            f"wrote a {len(system.agents)}-agent, {len(system.space.outcomes)}-outcome "
            f"system to {args.output}"
        )
    else:
        print(text)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        system = load_system(args.file)
    except ValidationError as exc:
        return _invalid_system(exc, args.json)
    measure = feasibility_oracle(system)
    verdict = "exists" if measure is not None else "none"
    payload = {
        "verdict": verdict,
        "ur_prior": _measure_to_json(measure, system) if measure is not None else None,
    }
    if measure is not None:
        lines = ["verdict: ur-prior exists", "ur-prior:"]
        lines.extend(f"  {x} = {v}" for x, v in payload["ur_prior"].items())
        text = "\n".join(lines)
    else:
        text = "verdict: no ur-prior"
    _emit(payload, text, args.json)
    return 0 if measure is not None else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urprior",
        description="Decide whether overlapping credence functions admit a common prior.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide a system file and report the result")
    p_check.add_argument("file", help="system JSON file")
    p_check.add_argument("--json", action="store_true", help="machine-readable report")
    p_check.add_argument(
        "--max-dim",
        type=int,
        default=2,
        help="how deep to enumerate the overlap complex for the report (default 2)",
    )
    p_check.set_defaults(handler=cmd_check)

    p_coh = sub.add_parser("cohomology", help="cohomology of a system's overlap complex or a complex file")
    p_coh.add_argument("file", help="system or complex JSON file")
    p_coh.add_argument("--dim", type=int, default=1, help="cohomology degree k (default 1)")
    p_coh.add_argument("--json", action="store_true", help="machine-readable report")
    p_coh.add_argument(
        "--max-dim",
        type=int,
        default=None,
        help="overlap enumeration depth for system files (default: dim+1)",
    )
    p_coh.add_argument(
        "--dump-matrices", action="store_true", help="print the labeled coboundary matrices"
    )
    p_coh.set_defaults(handler=cmd_cohomology)

    p_counter = sub.add_parser(
        "counterexample",
        help="from a complex with H1 != 0, build a pairwise-compatible system with no common prior",
    )
    p_counter.add_argument("file", help="complex JSON file")
    p_counter.add_argument("--output", help="write the system file here instead of stdout")
    p_counter.set_defaults(handler=cmd_counterexample)

    p_oracle = sub.add_parser("oracle", help="independent feasibility check of a system file")
    p_oracle.add_argument("file", help="system JSON file")
    p_oracle.add_argument("--json", action="store_true", help="machine-readable report")
    p_oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
