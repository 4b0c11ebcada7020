"""Render an InvariantReport as JSON, CSV, or plain text.

The JSON layout is the stable machine interface: fixed key order, exact
integers only (rationals appear as numerator/denominator pairs), null for
fields that do not apply.  CSV flattens the same data to one header and one
row; text is for people.
"""

from __future__ import annotations

import csv
import io
import json

from .moduli_invariants import InvariantReport


def report_to_dict(report: InvariantReport) -> dict:
    stats = report.stats
    cover = stats.cover_parameter
    hom = report.homology
    return {
        "genus": stats.genus,
        "twist_count": stats.twist_count,
        "nonseparating": stats.nonseparating,
        "separating": stats.separating,
        "separating_by_type": {str(h): c for h, c in stats.separating_by_type},
        "cover_parameter": None
        if cover is None
        else {"numerator": cover.numerator, "denominator": cover.denominator},
        "relation_passed": report.relation_passed,
        "chi": report.chi,
        "sigma": report.sigma,
        "betti": None if hom is None else list(hom.betti),
        "torsion_h1": None if hom is None else list(hom.torsion_h1),
        "torsion_h2": None if hom is None else list(hom.torsion_h2),
        "section_assumed": None if hom is None else hom.section_assumed,
        "b_plus": report.b_plus,
        "b_minus": report.b_minus,
        "c1_squared": report.c1_squared,
        "chi_h": report.chi_h,
        "hodge_degree": report.hodge_degree,
        "wp_pairing": report.wp_pairing,
        "double_cover_base": report.double_cover_base,
        "word_signature": None if report.breakdown is None else report.breakdown.word_signature,
        "cocycle_terms": None if report.breakdown is None else list(report.breakdown.terms),
        "verdicts": [
            {"name": v.name, "passed": v.passed, "detail": v.detail}
            for v in report.verdicts
        ],
    }


def render_json(report: InvariantReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def render_csv(report: InvariantReport) -> str:
    data = report_to_dict(report)

    def flat(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, list):
            return ";".join(str(x) for x in value)
        if isinstance(value, dict):
            return ";".join(f"{k}:{v}" for k, v in value.items())
        return str(value)

    columns = [(k, flat(v)) for k, v in data.items() if k != "verdicts"]
    for v in data["verdicts"]:
        columns.append((f"verdict_{v['name']}", "Pass" if v["passed"] else "Fail"))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([name for name, _ in columns])
    writer.writerow([value for _, value in columns])
    return buf.getvalue()


def render_text(report: InvariantReport) -> str:
    data = report_to_dict(report)
    lines = [
        f"genus {data['genus']}, {data['twist_count']} twists "
        f"({data['nonseparating']} nonseparating, {data['separating']} separating)",
        f"euler characteristic: {data['chi']}",
    ]
    if data["sigma"] is not None:
        lines.append(f"signature: {data['sigma']}")
        lines.append(
            f"betti: {data['betti']}  torsion h1: {data['torsion_h1'] or 'none'}"
            f"  torsion h2: {data['torsion_h2'] or 'none'}"
        )
        lines.append(
            f"b+: {data['b_plus']}  b-: {data['b_minus']}  c1^2: {data['c1_squared']}"
            f"  chi_h: {data['chi_h']}"
        )
        lines.append(
            f"hodge degree: {data['hodge_degree']}  wp pairing: {data['wp_pairing']}"
        )
        if data["double_cover_base"] is not None:
            lines.append(f"double cover base: {data['double_cover_base']}")
    else:
        lines.append("no 4-manifold invariants: the word fails the homological relation")
    lines.append("verdicts:")
    for v in data["verdicts"]:
        mark = "Pass" if v["passed"] else "Fail"
        lines.append(f"  {mark} {v['name']}: {v['detail']}")
    return "\n".join(lines) + "\n"
