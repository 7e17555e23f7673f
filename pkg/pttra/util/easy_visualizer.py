from __future__ import annotations

import math
import shutil
from typing import Any, Sequence

import numpy as np
from asciichartpy import blue, cyan, green, lightblue, lightgreen, lightred, magenta, plot, red, reset, yellow


class EasyVisualizer:
    """Terminal line charts of sampled curves.

    Example:
     ::

        cplt = EasyVisualizer()
        cplt.set_colors(["green"])
        print(cplt.line_plot([abs_psi]))
    """

    def __init__(self) -> None:
        self.line_colors = {
            "blue": blue,
            "cyan": cyan,
            "green": green,
            "lightblue": lightblue,
            "lightgreen": lightgreen,
            "lightred": lightred,
            "magenta": magenta,
            "red": red,
            "yellow": yellow,
        }
        self.color_priority = ["green", "red", "blue", "magenta", "yellow", "cyan", "lightblue", "lightgreen"]
        self.plot_config: dict[str, Any] = {
            "height": 15,
            "colors": [],
        }
        self.plot_data: list[list[float]] = []

    def set_height(self, height: int) -> None:
        """Set the height of the vertical axis in rows."""
        self.plot_config["height"] = height

    def set_colors(self, colors: list[str]) -> None:
        """Set the color of each line.

        Raises:
            ValueError: An unknown color is specified.
        """
        unknown = [c for c in colors if c not in self.line_colors]
        if unknown:
            raise ValueError(f"unknown colors: {unknown}")
        self.plot_config["colors"] = [self.line_colors[c] for c in colors]

    def caption(self, labels: list[str]) -> str:
        """Colored caption lines, one per plotted series."""
        return "\n".join(
            f"{self.line_colors[self.color_priority[i % len(self.color_priority)]]}{label}{reset}"
            for i, label in enumerate(labels)
        )

    def line_plot(self, data: Sequence[Sequence[float]], width: int | None = None) -> str:
        """Render series as an ascii chart.

        Series longer than the terminal are resampled to fit.

        Args:
            data (Sequence[Sequence[float]]): One or more series.
            width (int | None, optional): Columns; the terminal width minus
                the axis labels when None.

        Returns:
            str: The chart, empty when a series is empty or not finite.
        """
        if width is None:
            width = max(shutil.get_terminal_size().columns - 15, 10)
        if len(data) == 0:
            return ""
        if self.plot_config["colors"] == []:
            self.set_colors(self.color_priority[: len(data)])

        self.plot_data = []
        for series in data:
            values = [float(v) for v in series]
            if len(values) == 0 or not all(math.isfinite(v) for v in values):
                return ""
            if len(values) > width:
                index = np.linspace(0, len(values) - 1, width).round().astype(int)
                values = [values[i] for i in index]
            self.plot_data.append(values)
        return str(plot(series=self.plot_data, cfg=self.plot_config))
