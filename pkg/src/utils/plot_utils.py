"""
Step-function SVG plots of integer-indexed sequences.
"""
import io
import logging
from typing import Dict, Optional, Tuple

import matplotlib

matplotlib.use('agg')

import matplotlib.pyplot as plt  # noqa: E402

from src.utils.errors import PlotError  # noqa: E402

logger = logging.getLogger(__name__)

SERIES_COLORS: Dict[str, str] = {
    'phi': 'tab:blue',
    'A': 'green',
    'B': 'maroon',
    'C': 'red',
}


class PlotUtils:
    """Renders sequences as piecewise-constant SVG"""

    @staticmethod
    def step_svg(series: Dict[str, Dict[int, float]], title: str,
                 y_limits: Optional[Tuple[float, float]] = None) -> str:
        """
        Draws each series constant on [n, n+1).

        Args:
            series: Label -> {n: value}
            title: Plot title
            y_limits: Optional fixed y-range

        Returns:
            str: SVG document, byte-stable for identical input
        """
        ns = sorted({n for points in series.values() for n in points})
        if not ns:
            raise PlotError("Nothing to plot: every series is empty.")
        with plt.rc_context({'svg.hashsalt': 'likeiper', 'svg.fonttype': 'path'}):
            fig, ax = plt.subplots(figsize=(6.4, 4.8))
            for label, points in series.items():
                xs = sorted(n for n, v in points.items() if v is not None)
                if not xs:
                    continue
                ys = [float(points[n]) for n in xs]
                ax.step(xs + [xs[-1] + 1], ys + [ys[-1]], where='post',
                        label=label, color=SERIES_COLORS.get(label))
            ax.axhline(0.0, color='grey', linewidth=0.5)
            ax.set_xlim(ns[0], ns[-1] + 1)
            if y_limits is not None:
                ax.set_ylim(*y_limits)
            ax.set_xlabel(f"n ({ns[0]}..{ns[-1]})")
            ax.set_title(title)
            if len(series) > 1:
                ax.legend()
            buffer = io.StringIO()
            fig.savefig(buffer, format='svg', metadata={'Date': None})
            plt.close(fig)
        logger.debug(f"Rendered {title} over n={ns[0]}..{ns[-1]}")
        return buffer.getvalue()
