'''Plain data reports and their markdown rendering.

Each ``*_report`` function returns a JSON-ready dict; :func:`render_md`
turns any of them into deterministic markdown.
'''
from __future__ import annotations

from typing import Sequence

from .classify import ClassificationRecord, classify_blowup, describe, tags
from .errors import DPOrdersError
from .fixtures import Fixture, catalog
from .lattice import DivisorClass, format_terms, intersect
from .order import OrderData, k_squared, order_canonical, terminal_violations
from .positivity import (
    ContractionStep,
    Diagnostic,
    effective_cone_generators,
    is_almost_del_pezzo,
    is_del_pezzo,
    is_minimal,
    k_zero_curves,
    run_mmp,
)
from .serialize import rational


def d_string(o: OrderData) -> str:
    return format_terms(zip(o.base_d_coeffs(), o.base.names)) or "0"


def order_summary(o: OrderData) -> dict:
    return {
        "base": o.base.label,
        "D": d_string(o),
        "degrees": sorted(o.degrees()),
        "points": list(o.surface.point_ids),
        "k_squared": rational(k_squared(o)),
        "K": str(order_canonical(o)),
    }


def _curve_row(g, K: DivisorClass) -> dict:
    return {**describe(g), "square": rational(g.square), "K_dot": rational(intersect(K, g.cls))}


def _record(r: ClassificationRecord) -> dict:
    out = {"tag": r.tag, "theorem": r.theorem, "clause": r.clause, "k_zero": [dict(x) for x in r.k_zero]}
    if r.note:
        out["note"] = r.note
    return out


def check_report(o: OrderData, fixture_id: str | None = None) -> dict:
    out: dict = {"command": "check", "id": fixture_id, "order": order_summary(o)}
    notes: list[str] = []
    out["del_pezzo"] = is_del_pezzo(o)
    out["almost_del_pezzo"] = is_almost_del_pezzo(o)
    K = order_canonical(o)
    try:
        out["minimal"] = is_minimal(o)
        out["generators"] = [_curve_row(g, K) for g in effective_cone_generators(o)]
    except DPOrdersError as exc:
        out["minimal"] = None
        out["generators"] = []
        notes.append(f"{exc.kind}: {exc}")
    out["k_zero"] = [_curve_row(g, K) for g in k_zero_curves(o)] if out["almost_del_pezzo"] else []
    recs = classify_blowup(o)
    out["classification"] = [_record(r) for r in recs]
    out["tags"] = tags(recs)
    out["terminal_violations"] = terminal_violations(o)
    fx = catalog().get(fixture_id) if fixture_id else None
    if fx is not None and fx.order == o:
        out["expect"] = {k: v for k, v in sorted(fx.expect.items())}
        out["expect_ok"] = _matches(out, fx)
    out["notes"] = notes
    return out


def _matches(out: dict, fx: Fixture) -> bool:
    got = {
        "del_pezzo": out["del_pezzo"],
        "almost_del_pezzo": out["almost_del_pezzo"],
        "minimal": out["minimal"],
        "k_squared": out["order"]["k_squared"],
        "k_zero": sorted(r["witness"] for r in out["k_zero"]),
        "tags": out["tags"],
    }
    return all(got.get(k) == v for k, v in fx.expect.items())


def kzero_report(o: OrderData, fixture_id: str | None = None) -> dict:
    K = order_canonical(o)
    recs = classify_blowup(o)
    return {
        "command": "kzero",
        "id": fixture_id,
        "order": order_summary(o),
        "k_zero": [_curve_row(g, K) for g in k_zero_curves(o)],
        "tags": tags(recs),
    }


def _step(s: ContractionStep) -> dict:
    return {
        "contracted": s.contracted.witness,
        "class": str(s.contracted.cls),
        "a": rational(s.a),
        "k_squared_before": rational(k_squared(s.before)),
        "k_squared_after": rational(k_squared(s.after)),
        "almost_del_pezzo_after": is_almost_del_pezzo(s.after),
    }


def _diag(d: Diagnostic) -> dict:
    return {"class": None if d.cls is None else str(d.cls), "kind": d.kind, "reason": d.reason, "witness": d.witness}


def mmp_report(o: OrderData, fixture_id: str | None = None) -> dict:
    diags: list[Diagnostic] = []
    final, steps = run_mmp(o, diags)
    match = [fid for fid, f in sorted(catalog().items()) if f.order.surface.k == 0 and f.order == final]
    return {
        "command": "mmp",
        "id": fixture_id,
        "order": order_summary(o),
        "steps": [_step(s) for s in steps],
        "final": order_summary(final),
        "final_minimal": is_minimal(final),
        "final_fixture": match[0] if match else None,
        "diagnostics": [_diag(d) for d in diags],
    }


def enumerate_report(base: str, records: Sequence[ClassificationRecord]) -> dict:
    rows = []
    for r in records:
        w = r.witness
        rows.append({"tag": r.tag, "base": w["base"], "D": w["D"], "e": w["e"], "k_squared": w["k_squared"],
                     "note": r.note})
    return {"command": "enumerate", "base": base, "count": len(rows), "records": rows, "tags": sorted({r.tag for r in records})}


def fixtures_report() -> dict:
    rows = []
    for fid, f in sorted(catalog().items()):
        rows.append({"id": fid, "base": f.order.base.label, "D": d_string(f.order), "degrees": sorted(f.order.degrees()),
                     "points": f.order.surface.k, "figure": f.figure, "description": f.description,
                     "tags": list(f.expect.get("tags", []))})
    return {"command": "fixtures", "count": len(rows), "fixtures": rows}


# markdown

def _yn(v) -> str:
    return {True: "yes", False: "no", None: "n/a"}[v]


def _table(headers: Sequence[str], rows: Sequence[Sequence]) -> list[str]:
    out = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    for r in rows:
        out.append("| " + " | ".join(str(x).replace("|", "\\|") for x in r) + " |")
    return out


def _order_lines(s: dict) -> list[str]:
    return [
        f"- base: {s['base']}",
        f"- D: {s['D']}",
        f"- degrees: {', '.join(map(str, s['degrees'])) or 'none'}",
        f"- points: {', '.join(s['points']) or 'none'}",
        f"- K: {s['K']}",
        f"- K^2: {s['k_squared']}",
    ]


def _curve_table(rows: Sequence[dict]) -> list[str]:
    if not rows:
        return ["none"]
    return _table(["witness", "kind", "class", "square", "K.C"],
                  [(r["witness"], r["kind"], r["class"], r["square"], r["K_dot"]) for r in rows])


def _title(r: dict) -> str:
    return f"# {r['command']}" + (f": {r['id']}" if r.get("id") else "")


def render_md(r: dict) -> str:
    cmd = r["command"]
    lines: list[str]
    if cmd == "check":
        lines = [_title(r), "", *_order_lines(r["order"]), "",
                 f"- del Pezzo: {_yn(r['del_pezzo'])}",
                 f"- almost del Pezzo: {_yn(r['almost_del_pezzo'])}",
                 f"- minimal: {_yn(r['minimal'])}",
                 f"- tags: {', '.join(r['tags']) or 'none'}"]
        if "expect_ok" in r:
            lines.append(f"- catalog expectations: {'match' if r['expect_ok'] else 'MISMATCH'}")
        lines += ["", "## generators", "", *_curve_table(r["generators"]), "", "## K-zero curves", "",
                  *_curve_table(r["k_zero"])]
        if r["terminal_violations"]:
            lines += ["", "## terminal violations", "", *[f"- {v}" for v in r["terminal_violations"]]]
        if r["notes"]:
            lines += ["", "## notes", "", *[f"- {n}" for n in r["notes"]]]
    elif cmd == "kzero":
        lines = [_title(r), "", *_order_lines(r["order"]), f"- tags: {', '.join(r['tags']) or 'none'}", "",
                 *_curve_table(r["k_zero"])]
    elif cmd == "mmp":
        lines = [_title(r), "", *_order_lines(r["order"]), "", "## steps", ""]
        if r["steps"]:
            lines += _table(["#", "contracted", "class", "a", "K^2 before", "K^2 after", "almost dP after"],
                            [(i + 1, s["contracted"], s["class"], s["a"], s["k_squared_before"], s["k_squared_after"],
                              _yn(s["almost_del_pezzo_after"])) for i, s in enumerate(r["steps"])])
        else:
            lines.append("none")
        lines += ["", "## result", "", *_order_lines(r["final"]), f"- minimal: {_yn(r['final_minimal'])}",
                  f"- catalog fixture: {r['final_fixture'] or 'none'}"]
        if r["diagnostics"]:
            lines += ["", "## diagnostics", "", *[f"- {d['witness']}: {d['reason']}" for d in r["diagnostics"]]]
    elif cmd == "enumerate":
        lines = [f"# enumerate: {r['base']}", "", f"{r['count']} records", "",
                 *_table(["tag", "base", "D", "e", "K^2", "note"],
                         [(x["tag"], x["base"], " ".join(map(str, x["D"])), ",".join(map(str, x["e"])),
                           x["k_squared"], x["note"]) for x in r["records"]])]
    elif cmd == "fixtures":
        lines = ["# fixtures", "", f"{r['count']} entries", "",
                 *_table(["id", "base", "D", "e", "points", "figure", "tags"],
                         [(x["id"], x["base"], x["D"], ",".join(map(str, x["degrees"])), x["points"],
                           x["figure"] or "", ", ".join(x["tags"])) for x in r["fixtures"]])]
    else:
        raise ValueError(f"no markdown renderer for {cmd!r}")
    return "\n".join(lines) + "\n"
