"""Method comparison reports: table, JSON, CSV, and a rendered figure.

A compare run evaluates several solution methods on one instance and
collects, per method, the adversarial tour length, the auxiliary weight
behind the ordering, and the runtime. Methods whose size guards trip are
marked skipped instead of failing the whole report. Besides the solver
pipelines, any ordering named in the instance's ``meta["orderings"]`` can
be compared directly (e.g. the snake orderings of the grid family).
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field

from .adversary import AdversarialTour, Ordering, adversarial_value
from .errors import InvalidArgumentError, TooLargeError
from .geometry import (
    DiskRegion,
    Instance,
    PointsRegion,
    SegmentRegion,
    compile_candidates,
)
from .solvers import (
    atsp_2approx,
    atsp_3approx,
    atsp_mst2,
    center_tsp_ordering,
    exact_atsp,
    tspn_order,
)

__all__ = ["CompareRow", "CompareReport", "build_compare_report", "SOLVER_METHODS",
           "format_table", "report_to_dict", "write_csv", "render_figure", "tour_points"]

SOLVER_METHODS = {
    "exact": exact_atsp,
    "2approx": atsp_2approx,
    "3approx": atsp_3approx,
    "mst2": atsp_mst2,
    "center": lambda inst: center_tsp_ordering(inst, exact=len(inst.regions) <= 16),
    "tspn": tspn_order,
}


@dataclass
class CompareRow:
    method: str
    tag: str | None = None
    length: float | None = None
    aux_weight: float | None = None
    runtime_ms: float | None = None
    skipped: bool = False
    reason: str = ""


@dataclass
class CompareReport:
    instance_label: str
    rows: list[CompareRow] = field(default_factory=list)
    ratios: dict[str, float] = field(default_factory=dict)
    # evaluated tours, for rendering; keyed like rows
    tours: dict[str, AdversarialTour] = field(default_factory=dict)


def _run_method(instance: Instance, method: str):
    """(tag, ordering, tour, aux_weight) for a solver name or a named ordering."""
    if method in SOLVER_METHODS:
        res = SOLVER_METHODS[method](instance)
        return res.method, res.ordering, res.tour, res.aux_weight
    named = instance.meta.get("orderings", {})
    if method in named:
        ordering = Ordering(tuple(named[method]))
        return None, ordering, adversarial_value(instance, ordering), None
    known = sorted(SOLVER_METHODS) + sorted(named)
    raise InvalidArgumentError(f"unknown method {method!r}; known: {', '.join(known)}")


def build_compare_report(instance: Instance, methods: list[str]) -> CompareReport:
    report = CompareReport(instance_label=instance.label)
    seen = set()
    for method in methods:
        if method in seen:
            continue
        seen.add(method)
        t0 = time.perf_counter()
        try:
            tag, _, tour, aux = _run_method(instance, method)
        except TooLargeError as e:
            report.rows.append(CompareRow(method, skipped=True, reason=str(e)))
            continue
        ms = (time.perf_counter() - t0) * 1000.0
        report.rows.append(
            CompareRow(method, tag=tag, length=tour.length, aux_weight=aux, runtime_ms=ms)
        )
        report.tours[method] = tour
    done = [r for r in report.rows if not r.skipped]
    if done:
        best = min(r.length for r in done)
        for r in done:
            if best > 0:
                report.ratios[r.method] = r.length / best
            else:
                report.ratios[r.method] = 1.0 if r.length == 0 else float("inf")
    return report


def format_table(report: CompareReport) -> str:
    """Aligned text table; deterministic (no runtimes)."""
    lines = [f"instance: {report.instance_label}"]
    header = f"{'method':<12} {'length':>14} {'aux_weight':>14} {'ratio':>8}"
    lines.append(header)
    lines.append("-" * len(header))
    for r in report.rows:
        if r.skipped:
            lines.append(f"{r.method:<12} skipped: {r.reason}")
            continue
        aux = f"{r.aux_weight:.6f}" if r.aux_weight is not None else "-"
        lines.append(
            f"{r.method:<12} {r.length:>14.6f} {aux:>14} {report.ratios[r.method]:>8.4f}"
        )
    return "\n".join(lines)


def report_to_dict(report: CompareReport) -> dict:
    return {
        "instance_label": report.instance_label,
        "rows": [
            {
                "method": r.method,
                "tag": r.tag,
                "length": r.length,
                "aux_weight": r.aux_weight,
                "runtime_ms": r.runtime_ms,
                "skipped": r.skipped,
                "reason": r.reason,
            }
            for r in report.rows
        ],
        "ratios": report.ratios,
    }


def write_csv(report: CompareReport, path) -> None:
    """Delimited rows, one per method (runtimes included)."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow(["method", "tag", "length", "aux_weight", "runtime_ms", "ratio", "skipped", "reason"])
        for r in report.rows:
            w.writerow(
                [
                    r.method,
                    r.tag or "",
                    "" if r.length is None else repr(r.length),
                    "" if r.aux_weight is None else repr(r.aux_weight),
                    "" if r.runtime_ms is None else f"{r.runtime_ms:.3f}",
                    "" if r.skipped else repr(report.ratios[r.method]),
                    "1" if r.skipped else "0",
                    r.reason,
                ]
            )


def tour_points(instance: Instance, tour: AdversarialTour) -> list[tuple[float, float]]:
    """Chosen candidate coordinates in tour order."""
    out = []
    for rid in tour.ordering.perm:
        p = compile_candidates(instance.regions[rid])[tour.choice[rid]]
        out.append((p.x, p.y))
    return out


def render_figure(instance: Instance, report: CompareReport, path) -> None:
    """Draw the regions and one tour polyline per compared method."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 8))
    for region in instance.regions:
        if isinstance(region, SegmentRegion):
            ax.plot(
                [region.a.x, region.b.x], [region.a.y, region.b.y],
                color="0.55", linewidth=1.5, zorder=1,
            )
        elif isinstance(region, DiskRegion):
            ax.add_patch(
                plt.Circle(
                    (region.center.x, region.center.y), region.radius,
                    fill=False, color="0.55", linewidth=1.2, zorder=1,
                )
            )
        elif isinstance(region, PointsRegion):
            pass  # candidate dots below are enough
        cand = compile_candidates(region)
        ax.scatter(
            [p.x for p in cand], [p.y for p in cand],
            s=8, color="0.3", zorder=2,
        )
    for i, (method, tour) in enumerate(report.tours.items()):
        pts = tour_points(instance, tour)
        if tour.closed:
            pts = pts + [pts[0]]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ax.plot(xs, ys, linewidth=1.8, alpha=0.8, zorder=3,
                label=f"{method} ({tour.length:.3f})", color=f"C{i % 10}")
    ax.set_aspect("equal")
    ax.set_title(report.instance_label)
    if report.tours:
        ax.legend(loc="best", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
