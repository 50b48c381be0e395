"""Figure rendering for the CLI report path (matplotlib, file output only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def plot_size_distribution(rows: list[tuple[int, int]], path) -> None:
    """Log-log scatter of community size vs count."""
    fig, ax = plt.subplots(figsize=(5, 4))
    if rows:
        sizes, counts = zip(*rows)
        ax.loglog(sizes, counts, "o", markersize=4)
    ax.set_xlabel("community size")
    ax.set_ylabel("count")
    ax.set_title("Community size distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_sweep(epsilons: list[float], counts: list[int], path) -> None:
    """Community count as the merge threshold grows."""
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.plot(epsilons, counts, "o-")
    ax.set_xlabel("epsilon")
    ax.set_ylabel("communities")
    ax.set_title("Merge threshold sweep")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_scaling(nodes: list[int], seconds: list[float], slope: float, path) -> None:
    """Log-log core-phase time vs graph size with the fitted exponent."""
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.loglog(nodes, seconds, "o-", label=f"fit slope {slope:.2f}")
    ax.set_xlabel("nodes")
    ax.set_ylabel("core phase seconds")
    ax.set_title("Core phase scaling")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
