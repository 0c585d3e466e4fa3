"""Certificate replay and CSV/Markdown reports over a findings file."""

from __future__ import annotations

import csv
import io
from collections import Counter
from pathlib import Path

from ..canon import canonical_key
from ..graph import edit_from_json, replay
from ..graph6 import parse_graph6
from ..structure import AdjacentPairWitness, ClawWitness, DoubleStarWitness
from .findings import BLOCKING, Finding, read_findings
from .sweep import summarize


class ReplayError(AssertionError):
    pass


def _check_trace(t: dict) -> None:
    g = parse_graph6(t["graph6"])
    replay(g, [edit_from_json(s) for s in t["steps"]])


def _walk(obj, g, path: str) -> None:
    if isinstance(obj, dict):
        if {"vertices", "kind", "size"} <= obj.keys():
            if not g.dominates(obj["vertices"]):
                raise ReplayError(f"{path}: certificate does not dominate")
            if len(obj["vertices"]) != obj["size"]:
                raise ReplayError(f"{path}: size mismatch")
            if obj["kind"] == "independent-dominating" and g.internal_edges(obj["vertices"]):
                raise ReplayError(f"{path}: certificate not independent")
        if {"graph6", "steps"} <= obj.keys():
            _check_trace(obj)
        witnesses = {"claw": ClawWitness, "double_star": DoubleStarWitness,
                     "adjacent_deg3_pair": AdjacentPairWitness}
        for name, cls in witnesses.items():
            w = obj.get(name)
            if isinstance(w, dict):
                fields = {k: tuple(v) if isinstance(v, list) else v for k, v in w.items()}
                if not cls(**fields).verify(g):
                    raise ReplayError(f"{path}.{name}: witness does not match adjacency")
        for k, v in obj.items():
            _walk(v, g, f"{path}.{k}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _walk(v, g, f"{path}[{i}]")


def verify_finding(f: Finding) -> None:
    """Re-check everything a finding embeds against its input graph."""
    g6 = f.certificates.get("input_graph6")
    if g6 is None:
        raise ReplayError("finding has no input graph")
    g = parse_graph6(g6)
    if canonical_key(g) != f.graph_key:
        raise ReplayError("input graph does not match graph key")
    _walk(f.certificates, g, "certificates")
    if f.property_id == "fact_u_literal" and f.verdict == "Violated":
        h = replay(g, [edit_from_json(s) for s in f.certificates["trace"]["steps"]])
        for v in f.certificates.get("undominated", []):
            if v in h.closed_neighborhood(f.certificates["x"]):
                raise ReplayError(f"vertex {v} is dominated after replay")


def _graph_rows(findings: list[Finding]) -> list[dict]:
    rows: dict[str, dict] = {}
    for f in findings:
        c = f.certificates
        if "gamma" in c and "i" in c and isinstance(c["gamma"], dict):
            row = rows.setdefault(f.graph_key, {"graph_key": f.graph_key})
            row["n"] = c.get("n", row.get("n"))
            row["gamma"] = c["gamma"]["size"]
            row["i"] = c["i"]["size"]
            if "bound" in c:
                row["bound"] = c["bound"]
        else:
            rows.setdefault(f.graph_key, {"graph_key": f.graph_key})
    out = []
    for key in sorted(rows):
        r = rows[key]
        r.setdefault("n", parse_graph6(key).n)
        r.setdefault("bound", -(-r["n"] // 3))
        r["gap"] = r["i"] - r["gamma"] if "i" in r else None
        out.append(r)
    return sorted(out, key=lambda r: (r["n"], r["graph_key"]))


def _csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fields, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _md_table(rows: list[dict], fields: list[str]) -> list[str]:
    lines = ["| " + " | ".join(fields) + " |", "|" + "---|" * len(fields)]
    for r in rows:
        lines.append("| " + " | ".join("" if r.get(k) is None else str(r.get(k)) for k in fields) + " |")
    return lines


def build_report(findings: list[Finding], errors: list[tuple[int, str]] = ()) -> dict[str, str]:
    """Return {filename: content} for summary.csv, graphs.csv, gaps.csv, report.md."""
    summary = summarize(findings)
    srows = [{"property": p, **counts, "blocking": p in BLOCKING} for p, counts in summary.items()]
    grows = _graph_rows(findings)
    gaps = Counter(r["gap"] for r in grows if r.get("gap") is not None)
    hrows = [{"gap": k, "graphs": gaps[k]} for k in sorted(gaps)]
    violated = sorted((f for f in findings if f.verdict == "Violated"),
                      key=lambda f: (f.property_id, f.graph_key))

    md = ["# Sweep report", "", "## Properties", ""]
    md += _md_table(srows, ["property", "Holds", "Violated", "NotApplicable", "blocking"])
    md += ["", f"## Graphs ({len(grows)})", ""]
    md += _md_table(grows, ["graph_key", "n", "gamma", "i", "bound", "gap"])
    md += ["", "## i - gamma gap histogram", ""]
    md += _md_table(hrows, ["gap", "graphs"])
    md += ["", f"## Violated findings ({len(violated)})", ""]
    for f in violated:
        flag = " **BLOCKING**" if f.property_id in BLOCKING else ""
        md.append(f"- `{f.property_id}` on `{f.graph_key}`{flag}: "
                  f"{f.certificates.get('reason', '')}".rstrip(": "))
    if errors:
        md += ["", "## Unreadable cache lines", ""]
        md += [f"- line {n}: {msg}" for n, msg in errors]
    return {
        "summary.csv": _csv(srows, ["property", "Holds", "Violated", "NotApplicable", "blocking"]),
        "graphs.csv": _csv(grows, ["graph_key", "n", "gamma", "i", "bound", "gap"]),
        "gaps.csv": _csv(hrows, ["gap", "graphs"]),
        "report.md": "\n".join(md) + "\n",
    }


def report_from_cache(path: Path | str, out_dir: Path | str | None = None):
    findings, errors = read_findings(path)
    # last writer wins, as in the cache
    latest = {f.key: f for f in findings}
    files = build_report(list(latest.values()), errors)
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            (out / name).write_text(text, encoding="utf-8")
    return files, errors
