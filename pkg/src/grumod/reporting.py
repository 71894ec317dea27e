"""Figure and delimited-output rendering for CLI reports.

When a report directory is requested, each command writes a small CSV summary
next to one or two matplotlib figures (suite pass/fail chart, per-degree
dimension bars). Rendering never touches the JSON that goes to stdout.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

PASS_COLOR = "#2a9d8f"
FAIL_COLOR = "#e76f51"


def _ensure_dir(path: str):
    os.makedirs(path, exist_ok=True)


def _save(fig, outdir: str, name: str):
    path = os.path.join(outdir, name)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def _write_csv(outdir: str, name: str, header, rows):
    path = os.path.join(outdir, name)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def render_props(report: dict, outdir: str) -> list:
    """Pass/fail overview of the paper suites plus a CSV of the outcomes."""
    _ensure_dir(outdir)
    suites = report.get("results", [])
    names = [s["suite"] for s in suites]
    passed = [bool(s["passed"]) for s in suites]
    fig, ax = plt.subplots(figsize=(7, 0.45 * max(4, len(names))))
    colors = [PASS_COLOR if p else FAIL_COLOR for p in passed]
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names)
    ax.set_xticks([])
    ax.invert_yaxis()
    for i, p in enumerate(passed):
        ax.text(0.5, i, "pass" if p else "FAIL", va="center", ha="center", color="white")
    ax.set_title(f"paper property suites (seed {report.get('seed')})")
    files = [_save(fig, outdir, "props-suites.png")]
    files.append(
        _write_csv(
            outdir,
            "props-suites.csv",
            ["suite", "passed"],
            [[n, "yes" if p else "no"] for n, p in zip(names, passed)],
        )
    )
    return files


def render_analyze(report: dict, outdir: str) -> list:
    """Verdict chart for the requested checks plus a CSV of verdicts."""
    _ensure_dir(outdir)
    results = report.get("results", [])
    labels = [r["property"] for r in results]
    verdicts = [r["verdict"] for r in results]
    color_of = {"yes": PASS_COLOR, "no": FAIL_COLOR, "not-decided": "#e9c46a"}
    fig, ax = plt.subplots(figsize=(7, 0.45 * max(4, len(labels))))
    ax.barh(range(len(labels)), [1] * len(labels), color=[color_of[v] for v in verdicts])
    ax.set_yticks(range(len(labels)))
    ax.set_yticklabels(labels)
    ax.set_xticks([])
    ax.invert_yaxis()
    for i, v in enumerate(verdicts):
        ax.text(0.5, i, v, va="center", ha="center", color="black")
    ax.set_title(f"analysis of {report.get('target', '?')}")
    files = [_save(fig, outdir, "analyze-verdicts.png")]
    dims = report.get("component_dims") or {}
    if dims:
        fig, ax = plt.subplots(figsize=(6, 3))
        keys = list(dims)
        ax.bar(range(len(keys)), [dims[k] for k in keys], color="#264653")
        ax.set_xticks(range(len(keys)))
        ax.set_xticklabels(keys, rotation=45, ha="right")
        ax.set_ylabel("dim")
        ax.set_title("component dimensions")
        files.append(_save(fig, outdir, "analyze-components.png"))
    files.append(
        _write_csv(
            outdir,
            "analyze-verdicts.csv",
            ["check", "verdict"],
            list(zip(labels, verdicts)),
        )
    )
    return files


def render_degree_dims(report: dict, outdir: str, stem: str, title: str) -> list:
    """Bar chart + CSV for any per-degree dimension table."""
    _ensure_dir(outdir)
    dims = report.get("degree_dims") or {}
    files = []
    if dims:
        fig, ax = plt.subplots(figsize=(6, 3))
        keys = list(dims)
        ax.bar(range(len(keys)), [dims[k] for k in keys], color="#264653")
        ax.set_xticks(range(len(keys)))
        ax.set_xticklabels(keys, rotation=45, ha="right")
        ax.set_ylabel("dim")
        ax.set_title(title)
        files.append(_save(fig, outdir, f"{stem}.png"))
    files.append(
        _write_csv(
            outdir,
            f"{stem}.csv",
            ["degree", "dim"],
            [[k, v] for k, v in dims.items()],
        )
    )
    return files
