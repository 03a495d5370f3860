# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import matplotlib
from matplotlib.figure import Figure
import numpy as np

from zneqv.constants import HOP_THRESHOLD, HOP_IDEAL_ASYMPTOTE

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

THRESHOLD_GID = "threshold_two_thirds"
ASYMPTOTE_GID = "ideal_asymptote"

_SVG_PARAMS = {"svg.hashsalt": "zneqv", "svg.fonttype": "none"}


def _reference_lines(ax):
    ax.axhline(HOP_THRESHOLD, color="tab:red", linestyle="--", linewidth=1., label="2/3",
               gid=THRESHOLD_GID)
    ax.axhline(HOP_IDEAL_ASYMPTOTE, color="tab:grey", linestyle=":", linewidth=1.,
               label="(1 + ln 2) / 2", gid=ASYMPTOTE_GID)


def _save(fig, filename):
    with matplotlib.rc_context(_SVG_PARAMS):
        fig.savefig(filename, format="svg", metadata={"Date": None})


def plot_cumulative_hop(series, lambda_series=None, title=None, filename=None):
    """
    Cumulative heavy output probability chart: running mean of the extrapolated HOPs with its 2
    sigma band, optional running means per scale factor and reference lines at 2/3 and at the
    ideal asymptote (1 + ln 2) / 2.

    :param series: output of cumulative_series, (index, mean, 2 sigma) tuples
    :type series: list
    :param lambda_series: scale factor -> running mean HOP per circuit
    :type lambda_series: dict, default None
    :param title: figure title
    :type title: str, default None
    :param filename: if given, the figure is written there as SVG
    :type filename: str, file-object, default None
    :return: the figure
    :rtype: matplotlib.figure.Figure
    """
    index = np.array([s[0] for s in series]) + 1
    mean = np.array([s[1] for s in series])
    band = np.array([s[2] for s in series])
    fig = Figure(figsize=(7., 4.5))
    ax = fig.add_subplot(1, 1, 1)
    for lam, values in sorted((lambda_series or {}).items()):
        ax.plot(index, values, linewidth=0.8, alpha=0.7, label="lambda = %g" % lam)
    ax.plot(index, mean, color="black", linewidth=1.5, label="ZNE mean", gid="zne_mean")
    ax.fill_between(index, mean - band, mean + band, color="tab:blue", alpha=0.25,
                    label="2 sigma", gid="zne_band")
    _reference_lines(ax)
    ax.set_xlabel("number of circuits")
    ax.set_ylabel("cumulative heavy output probability")
    ax.set_ylim(0.4, 1.05)
    if title:
        ax.set_title(title)
    ax.legend(loc="lower right", fontsize="small")
    if filename is not None:
        _save(fig, filename)
        logger.info("cumulative HOP chart written to %s" % filename)
    return fig


def plot_combination_histogram(table, bins=20, title=None, filename=None):
    """
    Histogram of the mean extrapolated HOP over all scale-factor combinations.

    :param table: output of ensemble_combination_table
    :type table: pandas.DataFrame
    """
    fig = Figure(figsize=(6., 4.))
    ax = fig.add_subplot(1, 1, 1)
    ax.hist(table["mean_hop"].values, bins=bins, color="tab:blue", alpha=0.8)
    ax.axvline(HOP_THRESHOLD, color="tab:red", linestyle="--", gid=THRESHOLD_GID)
    ax.set_xlabel("mean extrapolated HOP")
    ax.set_ylabel("scale factor combinations")
    if title:
        ax.set_title(title)
    if filename is not None:
        _save(fig, filename)
    return fig
