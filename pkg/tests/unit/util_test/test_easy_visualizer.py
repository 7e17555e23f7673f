import pytest

from pttra.util import EasyVisualizer


def test_set_height():
    cplot = EasyVisualizer()

    assert cplot.plot_config["height"] == 15  # initial value
    cplot.set_height(5)
    assert cplot.plot_config["height"] == 5


def test_set_colors():
    cplot = EasyVisualizer()
    assert cplot.set_colors([]) is None
    assert cplot.set_colors(["red", "green"]) is None
    assert len(cplot.plot_config["colors"]) == 2

    with pytest.raises(ValueError):
        cplot.set_colors(["darkred", "darkgreen"])


def test_caption():
    cplot = EasyVisualizer()
    caption = cplot.caption(["|psi|", "Re psi"])
    assert len(caption.splitlines()) == 2
    assert "|psi|" in caption


def test_line_plot():
    cplot = EasyVisualizer()
    cplot.set_height(5)
    data = [1, 9, 2, 3, 4, 5]
    chart = cplot.line_plot([data], width=40)
    assert isinstance(chart, str)
    assert len(chart.splitlines()) == 6


def test_line_plot_resamples():
    cplot = EasyVisualizer()
    cplot.line_plot([list(range(500))], width=30)
    assert len(cplot.plot_data[0]) == 30
    assert cplot.plot_data[0][0] == 0.0
    assert cplot.plot_data[0][-1] == 499.0


def test_line_plot_rejects_bad_data():
    cplot = EasyVisualizer()
    assert cplot.line_plot([]) == ""
    assert cplot.line_plot([[]], width=20) == ""
    assert cplot.line_plot([[1.0, float("nan")]], width=20) == ""
