"""Generator labels and md/csv/json rendering for tables and verification runs."""
from __future__ import annotations

import csv
import io
import json
from typing import Optional

from .distances import formula_report
from .ideals import CodeReport, IdealSpec, enumerate_specs
from .quotient import AmbientParams
from .ring4 import format_ring_element

CSV_COLUMNS = ("type", "ell", "t", "mu", "z", "eta_exponent", "d_h", "d_sp", "im", "provenance", "source")

# The golden table at (3,1,1, 2+v+uv) has no d_sp for <(x^2-2)+uz(x), u>.
BLANK_CELL_PARAMS = (3, 1, 1, "2+v+uv")
BLANK_CELL_FOOTNOTE = "blank in the golden table; the formula gives 2 (key mu = 0 <= p^s) and the oracle agrees"


def params_key(params: AmbientParams) -> tuple:
    F = params.field
    return (F.p, F.m, F.s, format_ring_element(params.alpha))


def is_blank_cell(spec: IdealSpec, params: AmbientParams) -> bool:
    return (
        params_key(params) == BLANK_CELL_PARAMS
        and spec.tag == "D"
        and spec.has_z
        and (spec.ell, spec.t, spec.mu) == (1, 0, 0)
    )


def _y(params: AmbientParams, k: int) -> str:
    a0 = str(params.alpha0)
    if "+" in a0:
        a0 = f"({a0})"
    base = f"(x^2-{a0})"
    if k == 0:
        return ""
    return base if k == 1 else f"{base}^{k}"


def _tors(params: AmbientParams) -> str:
    return "v" if params.torsion_unit.a3 else "u"


def spec_label(spec: IdealSpec, params: AmbientParams) -> str:
    """Generator notation such as <(x^2-2)^5+u(x^2-2)^4z(x), u(x^2-2)^4>."""
    if spec.tag == "A0":
        return "<0>"
    if spec.tag == "A1":
        return "<1>"
    u = _tors(params)
    if spec.tag == "B":
        return f"<{u}{_y(params, spec.ell)}>"
    main = _y(params, spec.ell) or "1"
    if spec.has_z:
        main += f"+{u}{_y(params, spec.t)}z(x)"
    if spec.tag == "C":
        return f"<{main}>"
    return f"<{main}, {u}{_y(params, spec.mu)}>"


def format_z(spec: IdealSpec, params: AmbientParams) -> str:
    if not spec.has_z:
        return "0"
    terms = []
    for k, (a, b) in enumerate(spec.z):
        if not (a or b):
            continue
        lin = []
        if a:
            s = str(a)
            lin.append("x" if s == "1" else f"({s})x" if "+" in s else f"{s}x")
        if b:
            lin.append(str(b))
        body = "+".join(lin)
        if k == 0:
            terms.append(body)
        else:
            terms.append(f"({body}){_y(params, k)}")
    return "+".join(terms)


def row_dict(spec: IdealSpec, params: AmbientParams, report: CodeReport, source: str = "formula") -> dict:
    row = {
        "type": spec.tag,
        "ell": spec.ell,
        "t": spec.t,
        "mu": spec.mu,
        "z": format_z(spec, params),
        "eta_exponent": report.eta_exponent,
        "d_h": report.d_h,
        "d_sp": report.d_sp,
        "im": report.im,
        "provenance": ";".join(report.provenance),
        "source": source,
        "generator": spec_label(spec, params),
    }
    if is_blank_cell(spec, params):
        row["footnote"] = BLANK_CELL_FOOTNOTE
    return row


def params_dict(params: AmbientParams) -> dict:
    F = params.field
    return {
        "p": F.p,
        "m": F.m,
        "s": F.s,
        "alpha": format_ring_element(params.alpha),
        "family": params.family.value,
        "field": F.describe(),
        "length": params.n,
    }


def table_rows(params: AmbientParams, z_policy: str = "representative", samples: int = 1, seed: int = 0) -> list[dict]:
    F = params.field
    rows = []
    for spec in enumerate_specs(params, z_policy, samples, seed):
        report = formula_report(spec, params.family, F.p, F.m, F.s)
        rows.append(row_dict(spec, params, report))
    return rows


def _eta(p: int, e: int) -> str:
    return "1" if e == 0 else f"{p}^{e}"


def render_table(rows: list[dict], params: AmbientParams, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"params": params_dict(params), "rows": rows}, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return render_csv(rows)
    return render_markdown(rows, params)


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: "" if r[k] is None else r[k] for k in CSV_COLUMNS})
    return buf.getvalue()


def render_markdown(rows: list[dict], params: AmbientParams) -> str:
    p = params.field.p
    info = params_dict(params)
    out = [
        f"{info['field']}, alpha = {info['alpha']} ({info['family']}), length {info['length']}",
        "",
        "| Ideal | eta | d_H | d_sp |",
        "|---|---|---|---|",
    ]
    notes: list[str] = []
    group: Optional[str] = None
    for r in rows:
        tag = "A" if r["type"] in ("A0", "A1") else r["type"]
        if tag != group:
            out.append(f"| **Type {tag}** | | | |")
            group = tag
        dsp = str(r["d_sp"])
        if "footnote" in r:
            notes.append(r["footnote"])
            dsp += f"[^{len(notes)}]"
        out.append(f"| {r['generator']} | {_eta(p, r['eta_exponent'])} | {r['d_h']} | {dsp} |")
    if notes:
        out.append("")
        out.extend(f"[^{i}]: {n}" for i, n in enumerate(notes, 1))
    return "\n".join(out) + "\n"


def verify_rows(results, params: AmbientParams) -> list[dict]:
    rows = []
    for res in results:
        row = row_dict(res.spec, params, res.report, source="both")
        row["status"] = res.status
        row["checks"] = [c.to_dict() for c in res.checks]
        row["witnesses"] = dict(res.witnesses)
        rows.append(row)
    return rows


def render_verify(results, params: AmbientParams, fmt: str, summary: dict) -> str:
    rows = verify_rows(results, params)
    if fmt == "json":
        doc = {"params": params_dict(params), "summary": summary, "results": rows}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return render_csv(rows)
    out = [f"{params_dict(params)['field']}, alpha = {format_ring_element(params.alpha)}", ""]
    for r in rows:
        bad = [c for c in r["checks"] if c["status"] != "PASS"]
        line = f"{r['status']:8} {r['generator']}"
        if r["type"] in ("C", "D") and r["z"] != "0":
            line += f"  z={r['z']}"
        for c in bad:
            line += f"  [{c['name']}: expected {c['expected']}, observed {c['observed']}; {c['detail']}]"
        out.append(line)
    out.append("")
    out.append("summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()))
    return "\n".join(out) + "\n"
