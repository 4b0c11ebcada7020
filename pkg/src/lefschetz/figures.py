"""Matplotlib summary figure for a report: signature accumulation, Betti bars, verdicts."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .moduli_invariants import InvariantReport


def render_report_figure(report: InvariantReport, path: str) -> None:
    """Write a one-page PNG/PDF/SVG summary (format from the file suffix)."""
    fig, (ax_sig, ax_betti, ax_text) = plt.subplots(1, 3, figsize=(13, 4))

    if report.breakdown is not None:
        running = [0]
        for t in report.breakdown.terms:
            running.append(running[-1] + t)
        ax_sig.step(range(len(running)), running, where="post")
        ax_sig.axhline(report.breakdown.word_signature, linestyle=":", linewidth=1)
        ax_sig.set_title(
            f"cocycle accumulation (sigma = {report.sigma})"
        )
        ax_sig.set_xlabel("prefix length")
        ax_sig.set_ylabel("partial signature")
    else:
        ax_sig.set_axis_off()
        ax_sig.set_title("no signature: relation fails")

    if report.homology is not None:
        ax_betti.bar(range(5), report.homology.betti)
        ax_betti.set_xticks(range(5), [f"b{i}" for i in range(5)])
        ax_betti.set_title("Betti numbers")
    else:
        ax_betti.set_axis_off()
        ax_betti.set_title("no homology: relation fails")

    stats = report.stats
    lines = [
        f"genus {stats.genus}, {stats.twist_count} twists",
        f"n = {stats.nonseparating}, s = {stats.separating}",
        f"chi = {report.chi}",
    ]
    if report.sigma is not None:
        lines.append(f"sigma = {report.sigma}")
        lines.append(f"hodge degree = {report.hodge_degree}")
        lines.append(f"wp pairing = {report.wp_pairing}")
    lines.append("")
    for v in report.verdicts:
        lines.append(("PASS " if v.passed else "FAIL ") + v.name)
    ax_text.set_axis_off()
    ax_text.text(0.0, 1.0, "\n".join(lines), va="top", family="monospace", fontsize=9)

    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
