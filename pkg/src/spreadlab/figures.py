"""Figure rendering for scan reports.

Renders the bound-profile curve with its 21/16 threshold line and the
super-level interval markers as a standalone SVG (1.1) file via
matplotlib.  Output is byte-reproducible: fixed hash salt, no embedded
creation date.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .scanlab import FIGURE_THRESHOLD, IntervalSet, ScanTable  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "spreadlab"

CURVE_COLOR = "tab:blue"
THRESHOLD_COLOR = "tab:orange"
MARKER_COLOR = "red"


def render_scan_figure(table: ScanTable, out_path,
                       threshold: float = FIGURE_THRESHOLD,
                       highlight: IntervalSet | None = None) -> None:
    """Write the scan as a standalone SVG line plot."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    x = table.rows[:, 0]
    f = table.rows[:, 1]
    ax.plot(x, f, color=CURVE_COLOR, lw=1.5,
            label=f"f(x, {table.eta:g})")
    ax.axhline(threshold, color=THRESHOLD_COLOR, lw=1.5,
               label=f"threshold {threshold:g}")
    if highlight is not None:
        for lo, hi in highlight:
            ax.axvline(lo, color=MARKER_COLOR, ls="--", lw=1.0)
            ax.axvline(hi, color=MARKER_COLOR, ls="--", lw=1.0)
    ax.plot([table.max_x], [table.max_value], marker="o", ms=4,
            color=CURVE_COLOR)
    ax.set_xlabel("x")
    ax.set_ylabel("f")
    ax.legend(loc="lower center", fontsize=9)
    fig.tight_layout()
    fig.savefig(out_path, format="svg", metadata={"Date": None})
    plt.close(fig)
