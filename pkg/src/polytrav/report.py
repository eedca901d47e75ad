"""Figure rendering for traversal runs.

Writes PNG plots plus a plain-text summary into a directory, next to
wherever the caller streamed the listing itself.  Import stays lazy so
the rest of the library never touches matplotlib.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .bitstring import listing_cost, max_diff
from .engine import TraversalResult
from .verify import count_oracle_calls


def render_report(
    result: TraversalResult,
    directory: Union[Path, str],
    title: str = "traversal",
) -> list[Path]:
    """Render transition and oracle-call figures plus a summary file.

    Returns the paths written.  The directory is created if missing.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    listing = result.listing
    stats = count_oracle_calls(result)
    written = []

    if len(listing) > 1:
        positions = [
            max_diff(listing[i], listing[i + 1]) for i in range(len(listing) - 1)
        ]
        fig, ax = plt.subplots(figsize=(8, 3))
        ax.step(range(1, len(positions) + 1), positions, where="mid")
        ax.set_xlabel("transition")
        ax.set_ylabel("rewritten prefix length")
        ax.set_title(f"{title}: transition positions")
        ax.set_ylim(0, len(listing[0]) + 1)
        fig.tight_layout()
        path = directory / "transitions.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    if stats.per_visit:
        fig, ax = plt.subplots(figsize=(8, 3))
        ax.bar(range(1, len(stats.per_visit) + 1), stats.per_visit, width=0.8)
        ax.axhline(stats.budget, linestyle="--", linewidth=1, label="budget")
        ax.set_xlabel("visit")
        ax.set_ylabel("oracle calls")
        ax.set_title(f"{title}: oracle calls per visit")
        ax.legend(loc="upper right")
        fig.tight_layout()
        path = directory / "oracle_calls.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    lines = [
        f"title: {title}",
        f"objects: {len(listing)}",
        f"complete: {result.complete}",
        f"listing cost: {listing_cost(listing) if listing else 'n/a'}",
        f"initialization calls: {stats.init_calls}",
        f"max calls per visit: {stats.max_calls}",
        f"mean calls per visit: {stats.mean_calls:.3f}",
        f"per-visit budget: {stats.budget}",
    ]
    path = directory / "summary.txt"
    path.write_text("\n".join(lines) + "\n")
    written.append(path)
    return written
