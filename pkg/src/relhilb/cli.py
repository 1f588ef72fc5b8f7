"""Command-line front end.

Every subcommand prints one JSON object (or a plain table) on stdout.  Exit
status is 0 on success, 1 when the input violates a precondition and 2 when
two internal computations disagree.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import ConsistencyError, DomainError, PreconditionError
from .exactpoly import parse_form, parse_ints, parse_point
from .genuslab import genus_report, hurwitz_genus_from_data
from .hilbfiber import degree_audit, enumerate_fiber_points, fiber_point_report
from .hilbfiber import _admissible as admissible_profile
from .monodromy import run_monodromy
from .moricone import FamilyParams, class_constants, classify_fano_threefolds, extremal_rays, pairing, pairing_table
from .projection import (
    FiberProfile,
    Hypersurface,
    corollary_bound,
    fiber_profile,
    is_general_center,
    nodes_cusps_label,
    singular_count_on_line,
)


class UsageError(PreconditionError):
    kind = "usage"


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    params: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    output: str = "json"


def to_jsonable(obj: Any) -> Any:
    """Exact JSON: integral rationals become ints, others "num/den" strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _load_curve(params: Dict[str, Any]) -> Hypersurface:
    if params.get("expr") is not None:
        text = params["expr"]
    elif params.get("poly") is not None:
        path = Path(params["poly"])
        try:
            text = path.read_text()
        except OSError as exc:
            raise DomainError(f"cannot read polynomial file {path}: {exc.strerror}") from None
    else:
        raise UsageError("one of --poly FILE or --expr TEXT is required")
    return Hypersurface(parse_form(text.strip()))


def _need(params: Dict[str, Any], *names: str) -> None:
    for n in names:
        if params.get(n) is None:
            raise UsageError(f"--{n} is required")


def _cmd_fiber(cfg: RunConfig) -> dict:
    _need(cfg.params, "center", "direction")
    A = _load_curve(cfg.params)
    z, w = parse_point(cfg.params["center"]), parse_point(cfg.params["direction"])
    prof = fiber_profile(A, z, w)
    return {
        "profile": list(prof.multiplicities),
        "sum": prof.degree,
        "m": A.m,
        "singular_on_line": singular_count_on_line(A, z, w),
        "corollary_bound": corollary_bound(prof, A.m),
        "label": nodes_cusps_label(prof),
    }


def _cmd_pencil(cfg: RunConfig) -> dict:
    _need(cfg.params, "center")
    A = _load_curve(cfg.params)
    z = parse_point(cfg.params["center"])
    res = is_general_center(A, z)
    if res.report is None:
        return {"general": False, "diagnostics": list(res.diagnostics)}
    out = res.report.to_json()
    out["discriminant"] = list(res.report.discriminant.coeffs)
    out["general"] = res.general
    out["diagnostics"] = list(res.diagnostics)
    out["branch_components"] = [
        {
            "profile": list(c.profile.multiplicities),
            "roots": c.root_count,
            "disc_multiplicity": c.disc_multiplicity,
        }
        for c in res.components
    ]
    return out


def _cmd_hilb(cfg: RunConfig) -> dict:
    _need(cfg.params, "profile", "a")
    prof = FiberProfile(parse_ints(cfg.params["profile"]))
    a = cfg.params["a"]
    points = [fiber_point_report(s).to_json() for s in enumerate_fiber_points(prof, a)]
    check = degree_audit(prof, a).total if admissible_profile(prof) else None
    return {"profile": list(prof.multiplicities), "a": a, "points": points, "degree_check": check}


def _cmd_genus(cfg: RunConfig) -> dict:
    p = cfg.params
    if p.get("poly") is None and p.get("expr") is None:
        _need(p, "d", "a")
        return genus_report(p["d"], p["a"]).to_json()
    _need(p, "center", "a")
    A = _load_curve(p)
    if p.get("d") is not None and p["d"] != A.degree:
        raise DomainError(f"--d {p['d']} does not match the curve degree {A.degree}")
    return hurwitz_genus_from_data(A, parse_point(p["center"]), p["a"]).to_json()


def _cmd_cone(cfg: RunConfig) -> dict:
    p = cfg.params
    _need(p, "n", "a", "d")
    fp = FamilyParams(p["n"], p["a"], p["d"], p.get("iz"), p.get("delta") or 1)
    cone = extremal_rays(fp)
    k = class_constants(fp)
    return {
        "params": {"n": fp.n, "a": fp.a, "d": fp.d, "iz": fp.iz, "delta": fp.delta},
        "pairing": pairing_table(fp),
        "rays": [
            {"name": r.name, "locus": r.locus, "class": list(r.generator.coords)}
            for r in cone.extremal_rays
        ],
        "simplicial": cone.simplicial,
        "fano": cone.is_fano,
        "V_class": list(k.V.coords),
        "minusK_class": list(k.minus_K.coords),
        "minusK_dot_V": pairing(k.minus_K, k.V, fp),
    }


def _cmd_classify(cfg: RunConfig) -> dict:
    entries = classify_fano_threefolds()
    return {
        "fano_threefolds": [
            {"d": e.d, "a": e.a, "tau_isomorphism": e.tau_isomorphism} for e in entries
        ],
        "count": len(entries),
    }


def _cmd_monodromy(cfg: RunConfig) -> dict:
    _need(cfg.params, "center", "samples")
    if cfg.seed is None:
        raise UsageError("--seed is required for monodromy")
    A = _load_curve(cfg.params)
    z = parse_point(cfg.params["center"])
    return run_monodromy(A, z, cfg.params["samples"], cfg.seed).report.to_json()


_COMMANDS = {
    "fiber": _cmd_fiber,
    "pencil": _cmd_pencil,
    "hilb": _cmd_hilb,
    "genus": _cmd_genus,
    "cone": _cmd_cone,
    "classify3folds": _cmd_classify,
    "monodromy": _cmd_monodromy,
}


def run(config: RunConfig) -> Tuple[int, dict]:
    """Dispatch a validated config; returns (exit status, report)."""
    try:
        handler = _COMMANDS[config.subcommand]
    except KeyError:
        return 1, UsageError(f"unknown subcommand {config.subcommand!r}").to_json()
    try:
        return 0, to_jsonable(handler(config))
    except PreconditionError as exc:
        return 1, exc.to_json()
    except ConsistencyError as exc:
        return 2, exc.to_json()


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    curve = _ArgParser(add_help=False)
    curve.add_argument("--poly", metavar="FILE", help="file holding the form")
    curve.add_argument("--expr", metavar="TEXT", help="the form given inline")

    parser = _ArgParser(prog="relhilb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_ArgParser)

    p = sub.add_parser("fiber", parents=[common, curve], help="fibre profile along one line")
    p.add_argument("--center", required=True)
    p.add_argument("--direction", required=True)

    p = sub.add_parser("pencil", parents=[common, curve], help="pencil discriminant of a plane curve")
    p.add_argument("--center", required=True)

    p = sub.add_parser("hilb", parents=[common], help="points of a Hilbert-scheme fibre")
    p.add_argument("--profile", required=True)
    p.add_argument("--a", type=int, required=True)

    p = sub.add_parser("genus", parents=[common, curve], help="genus of the relative Hilbert curve")
    p.add_argument("--d", type=int)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--center")

    p = sub.add_parser("cone", parents=[common], help="intersection table and cone of curves")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--iz", type=int)
    p.add_argument("--delta", type=int, default=1)

    sub.add_parser("classify3folds", parents=[common], help="Fano threefolds in the family")

    p = sub.add_parser("monodromy", parents=[common, curve], help="Frobenius cycle-type sampling")
    p.add_argument("--center", required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def _table(obj: Any, indent: str = "") -> List[str]:
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_table(val, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(val, separators=(',', ':'))}")
    return lines


def render(report: dict, output: str) -> str:
    if output == "table":
        return "\n".join(_table(report))
    return json.dumps(report, separators=(",", ":"))


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(render(exc.to_json(), "json"))
        return 1
    params = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "format", "seed")}
    cfg = RunConfig(ns.subcommand, params, getattr(ns, "seed", None), ns.format)
    status, report = run(cfg)
    print(render(report, cfg.output))
    return status


if __name__ == "__main__":
    sys.exit(main())
