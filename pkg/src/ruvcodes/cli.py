"""Command-line front end: ruvcodes {classify,distance,table,verify,field-info}."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .distances import formula_report
from .errors import BudgetExceeded, CapExceeded, CodeError, UncoveredFamily
from .gf import is_qr, make_field
from .ideals import TAGS, IdealSpec, enumerate_specs, parse_z, square_decomposition, validate_spec
from .oracle import DEFAULT_CAP, DEFAULT_NODE_LIMIT, basis_matrix, exhaustive_min, min_hamming, min_pair, vector_poly
from .quotient import AmbientParams, format_poly, make_ambient, nilpotency_index
from .report import params_dict, render_table, render_verify, row_dict, spec_label, table_rows
from .ring4 import UnitFamily, format_ring_element, parse_ring_element
from .verify import exit_code, run_campaign, summarize, verify_base_field, worst

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key=value file; flags override it")
    parser.add_argument("--p", type=int, default=3)
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--s", type=int, default=1)
    parser.add_argument("--irreducible", help="comma-separated coefficients c0,...,cm of the defining polynomial")
    parser.add_argument("--alpha", default="2+v+uv")
    parser.add_argument("--format", choices=("md", "csv", "json"), default="md")
    parser.add_argument("--out", help="write output here instead of stdout")


def _spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--type", dest="tag", choices=TAGS, required=True)
    parser.add_argument("--ell", type=int, default=0)
    parser.add_argument("--t", type=int, default=0)
    parser.add_argument("--mu", type=int, default=0)
    parser.add_argument("--z", default="0", help="polynomial in x over the base field, e.g. 1 or x+2")


def _campaign_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--z-policy", choices=("zero-only", "representative", "random"), default="representative")
    parser.add_argument("--samples", type=_positive, default=1, help="random z per cell")
    parser.add_argument("--seed", type=int, default=0)


def _budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--wmax", type=_positive, default=None, help="support-search bound (default: formula value)")
    parser.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="exhaustive enumeration cap")
    parser.add_argument("--node-limit", type=_positive, default=DEFAULT_NODE_LIMIT)


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = _Parser(prog="ruvcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    subs = {}

    p = sub.add_parser("classify", help="family of alpha and the ideal listing")
    _common(p)
    _campaign_flags(p)
    subs["classify"] = p

    p = sub.add_parser("distance", help="count exponent, torsion exponent and distances of one ideal")
    _common(p)
    _spec_flags(p)
    _budget_flags(p)
    p.add_argument("--oracle", action="store_true", help="also compute the values by brute force")
    subs["distance"] = p

    p = sub.add_parser("table", help="formula table for every ideal")
    _common(p)
    _campaign_flags(p)
    subs["table"] = p

    p = sub.add_parser("verify", help="check every formula against the oracle")
    _common(p)
    _campaign_flags(p)
    _budget_flags(p)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--base-field", action="store_true", help="check the base-field tables instead")
    subs["verify"] = p

    p = sub.add_parser("field-info", help="field, alpha0 and nilpotency data")
    _common(p)
    subs["field-info"] = p
    return parser, subs


def read_config(path: str) -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, val = line.split("=", 1)
        out[key.strip().lstrip("-").replace("-", "_")] = val.strip()
    return out


def _prescan(argv: Sequence[str]) -> tuple[Optional[str], Optional[str]]:
    command = next((a for a in argv if a in COMMANDS), None)
    config = None
    for i, a in enumerate(argv):
        if a == "--config" and i + 1 < len(argv):
            config = argv[i + 1]
        elif a.startswith("--config="):
            config = a.split("=", 1)[1]
    return command, config


def parse_args(argv: Optional[Sequence[str]]) -> argparse.Namespace:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subs = build_parser()
    command, config = _prescan(argv)
    if config and command:
        cfg = read_config(config)
        if "type" in cfg:
            cfg["tag"] = cfg.pop("type")
        sp = subs[command]
        known = {a.dest for a in sp._actions}
        unknown = set(cfg) - known
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        for a in sp._actions:
            if a.dest in cfg:
                a.required = False
        sp.set_defaults(**{k: _coerce(sp, k, v) for k, v in cfg.items()})
    return parser.parse_args(argv)


def _coerce(sp: argparse.ArgumentParser, dest: str, value: str):
    for a in sp._actions:
        if a.dest == dest:
            if isinstance(a, argparse._StoreTrueAction):
                return value.lower() in ("1", "true", "yes", "on")
            return a.type(value) if a.type else value
    return value


def ambient_from_args(args) -> AmbientParams:
    irr = [int(c) for c in args.irreducible.split(",")] if args.irreducible else None
    F = make_field(args.p, args.m, args.s, irr)
    return make_ambient(F, parse_ring_element(F, args.alpha))


def spec_from_args(args, params: AmbientParams) -> IdealSpec:
    z = () if args.z.strip() in ("", "0") else parse_z(args.z, params)
    spec = IdealSpec(args.tag, args.ell, args.t, args.mu, z)
    return validate_spec(spec, params.family, params.ps)


def _emit(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    params = ambient_from_args(args)
    fam = params.family
    lines = [f"alpha = {format_ring_element(params.alpha)}: {fam.value}"]
    if fam is UnitFamily.SQUARE:
        dec = square_decomposition(params)
        lines.append(
            f"alpha = gamma^2 with gamma = {format_ring_element(dec.gamma)}; "
            f"the ambient ring splits into gamma- and (-gamma)-constacyclic parts "
            f"(-gamma = {format_ring_element(dec.minus_gamma)}) of length {dec.length}"
        )
        _emit("\n".join(lines) + "\n", args)
        return EXIT_OK
    if not fam.covered:
        lines.append("no closed forms for this family; Types A and B are listed, use `distance --oracle` for values")
    specs = list(enumerate_specs(params, args.z_policy, args.samples, args.seed))
    counts: dict[str, int] = {}
    for sp in specs:
        counts[sp.tag] = counts.get(sp.tag, 0) + 1
    if args.format == "json":
        doc = {
            "params": params_dict(params),
            "counts": counts,
            "ideals": [spec_label(sp, params) for sp in specs],
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args)
        return EXIT_OK
    lines.append("counts: " + ", ".join(f"{k}={v}" for k, v in counts.items()) + f", total={len(specs)}")
    lines.extend(spec_label(sp, params) for sp in specs)
    _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_distance(args) -> int:
    params = ambient_from_args(args)
    F = params.field
    doc: dict = {"params": params_dict(params)}
    if params.family.covered:
        spec = spec_from_args(args, params)
        report = formula_report(spec, params.family, F.p, F.m, F.s)
        doc.update(row_dict(spec, params, report))
    else:
        if not args.oracle:
            raise CodeError(f"no closed forms for family {params.family.value}; rerun with --oracle")
        z = () if args.z.strip() in ("", "0") else parse_z(args.z, params)
        spec = IdealSpec(args.tag, args.ell, args.t, args.mu, z)
        doc["generator"] = spec_label(spec, params)
    status = EXIT_OK
    if args.oracle:
        code = basis_matrix(spec, params)
        orc: dict = {"eta_exponent": code.rank}
        render = lambda v: format_poly(vector_poly(v, params))  # noqa: E731
        if code.p**code.rank <= args.cap:
            ch, cs = exhaustive_min(code, args.cap)
        else:
            w = args.wmax or params.n
            ch = min_hamming(code, w, args.node_limit)
            cs = min_pair(code, 2 * w, args.node_limit)
        orc["d_h"] = ch.to_dict(render)
        orc["d_sp"] = cs.to_dict(render)
        doc["oracle"] = orc
        doc["source"] = "both" if "eta_exponent" in doc else "oracle"
        if "eta_exponent" in doc:
            agree = code.rank == doc["eta_exponent"] and all(
                c.exact and c.value == doc[k] for k, c in (("d_h", ch), ("d_sp", cs))
            )
            status = EXIT_OK if agree else EXIT_FAIL
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args)
    else:
        lines = [f"{k}: {v}" for k, v in doc.items() if k not in ("params", "oracle")]
        for k, v in doc.get("oracle", {}).items():
            lines.append(f"oracle {k}: {v}")
        _emit("\n".join(lines) + "\n", args)
    return status


def cmd_table(args) -> int:
    params = ambient_from_args(args)
    if not params.family.covered:
        raise UncoveredFamily(f"no closed forms for family {params.family.value}")
    rows = table_rows(params, args.z_policy, args.samples, args.seed)
    _emit(render_table(rows, params, args.format), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = ambient_from_args(args)
    if args.base_field:
        results = verify_base_field(params.field, params.alpha.a1, args.wmax, args.cap, args.node_limit)
        summary = summarize(results)
        if args.format == "json":
            doc = {
                "params": params_dict(params),
                "summary": summary,
                "results": [
                    {"ell": r.ell, "status": r.status, "checks": [c.to_dict() for c in r.checks], "witnesses": r.witnesses}
                    for r in results
                ],
            }
            text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        else:
            text = "".join(
                f"{r.status:8} ell={r.ell} "
                + " ".join(f"{c.name}={c.observed if c.observed is not None else '?'}/{c.expected}" for c in r.checks)
                + "\n"
                for r in results
            )
            text += "summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()) + "\n"
        _emit(text, args)
        st = worst(r.status for r in results)
        return {"PASS": 0, "BOUNDED": 0, "FAIL": 1, "SKIPPED": 3}[st]
    if not params.family.covered:
        raise UncoveredFamily(f"no closed forms to verify for family {params.family.value}")
    results = run_campaign(
        params, args.z_policy, args.samples, args.seed, args.wmax, args.cap, args.node_limit, args.jobs
    )
    _emit(render_verify(results, params, args.format, summarize(results)), args)
    return exit_code(results)


def cmd_field_info(args) -> int:
    params = ambient_from_args(args)
    F = params.field
    a1 = params.alpha.a1
    info = params_dict(params)
    info.update(
        {
            "alpha1": str(a1),
            "alpha1_is_square": is_qr(a1),
            "alpha0": str(params.alpha0),
            "torsion_unit": format_ring_element(params.torsion_unit),
        }
    )
    if params.family.covered:
        info["nilpotency_index"] = nilpotency_index(params)
    if args.format == "json":
        text = json.dumps(info, indent=2, sort_keys=True) + "\n"
    else:
        text = "".join(f"{k}: {v}\n" for k, v in info.items())
    _emit(text, args)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "distance": cmd_distance,
    "table": cmd_table,
    "verify": cmd_verify,
    "field-info": cmd_field_info,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
