import numpy as np


def _draw(ax, t, one_based, title):
    shift = 1 if one_based else 0
    n = t.n
    im = ax.imshow(t.entries, cmap='viridis', vmin=0, vmax=max(n - 1, 1))
    ticks = np.arange(n)
    ax.set_xticks(ticks)
    ax.set_yticks(ticks)
    ax.set_xticklabels(ticks + shift)
    ax.set_yticklabels(ticks + shift)
    ax.xaxis.tick_top()
    if n <= 16:
        for (i, j), v in np.ndenumerate(t.entries):
            ax.text(j, i, str(v + shift), ha='center', va='center', color='w', fontsize=8)
    if title:
        ax.set_title(title)
    return im


def plot_table(t, path=None, one_based=False, title=None):
    """
    Heat map of a Cayley table, rows indexed by the left factor.

    :param t: table to draw
    :param str path: image file to write; when ``None`` the figure is returned
    :param bool one_based: label elements 1..n instead of 0..n-1
    """
    from matplotlib import pyplot as plt

    fig, ax = plt.subplots(figsize=(4, 4))
    _draw(ax, t, one_based, title)
    fig.tight_layout()
    if path is None:
        return fig
    fig.savefig(path)
    plt.close(fig)


def plot_parastrophes(t, path=None, one_based=False):
    """The table and its five parastrophes side by side."""
    from matplotlib import pyplot as plt
    from .parastrophes import all_parastrophes

    tables = [('Q', t)] + [(kind.label, p) for kind, p in all_parastrophes(t).items()]
    fig, axes = plt.subplots(2, 3, figsize=(10, 7))
    for ax, (label, table) in zip(axes.flat, tables):
        _draw(ax, table, one_based, label)
    fig.tight_layout()
    if path is None:
        return fig
    fig.savefig(path)
    plt.close(fig)
