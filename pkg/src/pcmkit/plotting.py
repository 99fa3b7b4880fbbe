"""Figure rendering for curve sweeps and verdict grids.

Everything here draws to files through matplotlib's Agg backend, so it
works headless. Figures are a convenience view of data the library
already emits as CSV or JSON; nothing downstream depends on them.
"""

from __future__ import annotations

from .harness import PROPERTIES, AxiomReport, CurveSeries, VerdictStatus
from .indices import descriptor

_GOLDEN = (1 + 5 ** 0.5) / 2

_STATUS_COLOR = {
    VerdictStatus.NO_VIOLATION_FOUND: "#4d9e55",
    VerdictStatus.VIOLATION_FOUND: "#c44e52",
    VerdictStatus.HEURISTIC: "#d8a13a",
    VerdictStatus.NOT_APPLICABLE: "#b0b0b0",
}
_STATUS_TEXT = {
    VerdictStatus.NO_VIOLATION_FOUND: "ok",
    VerdictStatus.VIOLATION_FOUND: "viol",
    VerdictStatus.HEURISTIC: "heur",
    VerdictStatus.NOT_APPLICABLE: "n/a",
}


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def save_curve_figure(series: CurveSeries, path) -> None:
    """One curve: parameter on x, index value on y."""
    plt = _plt()
    label = descriptor(series.index_id).label
    x = [s[0] for s in series.samples]
    y = [s[1] for s in series.samples]
    fig, ax = plt.subplots(figsize=(6.4, 6.4 / _GOLDEN))
    ax.plot(x, y, marker="o", markersize=3, linewidth=1.2, color="#3b6ea5")
    ax.set_xlabel(series.param)
    ax.set_ylabel(f"{label} value")
    if series.param == "b":
        ax.set_title(f"{label} under uniform intensification")
    else:
        where = ""
        if series.row is not None:
            where = f" of entry ({series.row + 1},{series.col + 1})"
        ax.set_title(f"{label} under perturbation{where}")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_verdict_figure(report: AxiomReport, path) -> None:
    """Colored grid of empirical verdicts, one row per index."""
    plt = _plt()
    ids = list(report.verdicts)
    nrows = len(ids)
    ncols = len(PROPERTIES)
    fig, ax = plt.subplots(figsize=(1.1 * ncols + 1.6, 0.55 * nrows + 1.2))
    for r, idx in enumerate(ids):
        for c, prop in enumerate(PROPERTIES):
            status = report.verdicts[idx][prop].status
            ax.add_patch(plt.Rectangle((c, nrows - 1 - r), 1, 1,
                                       facecolor=_STATUS_COLOR[status],
                                       edgecolor="white", linewidth=1.5))
            ax.text(c + 0.5, nrows - 1 - r + 0.5, _STATUS_TEXT[status],
                    ha="center", va="center", fontsize=8, color="white")
    ax.set_xlim(0, ncols)
    ax.set_ylim(0, nrows)
    ax.set_xticks([c + 0.5 for c in range(ncols)])
    ax.set_xticklabels(PROPERTIES)
    ax.set_yticks([nrows - 1 - r + 0.5 for r in range(nrows)])
    ax.set_yticklabels([descriptor(i).label for i in ids])
    ax.tick_params(length=0)
    for spine in ax.spines.values():
        spine.set_visible(False)
    ax.set_title(f"empirical property verdicts "
                 f"(seed={report.config.seed})", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
