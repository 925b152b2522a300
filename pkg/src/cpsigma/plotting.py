"""Figure rendering for the CLI report paths (matplotlib, file output only)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .geometry import SurfaceSampleSet


def plot_surface(samples: SurfaceSampleSet, path: str) -> None:
    """3D scatter of the first three ambient coordinates, colored by the
    metric density."""
    coords = np.array([s.coords for s in samples.samples])
    density = np.array([s.metric_density for s in samples.samples])
    fig = plt.figure(figsize=(7, 6))
    ax = fig.add_subplot(111, projection="3d")
    sc = ax.scatter(
        coords[:, 0], coords[:, 1], coords[:, 2], c=density, cmap="viridis", s=12
    )
    fig.colorbar(sc, ax=ax, shrink=0.7, label="metric density")
    ax.set_title(
        f"immersed sphere: two_s={samples.instance.two_s}, k={samples.k}, "
        f"R^2={samples.radius_squared}"
    )
    ax.set_xlabel("c_1")
    ax.set_ylabel("c_2")
    ax.set_zlabel("c_3")
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_geometry_table(rows: list[dict], path: str) -> None:
    """Per-level geometry summary: radius, curvature and Kahler cosine."""
    ks = [r["k"] for r in rows]
    r2 = [float(r["radius_squared_value"]) for r in rows]
    curv = [float(r["gauss_curvature_value"]) for r in rows]
    cos_t = [float(r["cos_kahler_value"]) for r in rows]
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.5))
    axes[0].bar(ks, r2, color="tab:blue")
    axes[0].set_title("squared radius")
    axes[1].bar(ks, curv, color="tab:orange")
    axes[1].set_title("Gaussian curvature")
    axes[2].bar(ks, cos_t, color="tab:green")
    axes[2].set_title("cos(Kahler angle)")
    for ax in axes:
        ax.set_xlabel("level k")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
