"""Matplotlib rendering of the CSV data products (PNG, Agg backend)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .runner import Product

_STYLE = {
    "figure.figsize": (6.4, 4.0),
    "font.size": 11,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "savefig.dpi": 150,
}


def render_product(product: Product, path: str) -> bool:
    """Render the figure matching a data product; False if it has none."""
    renderer = _RENDERERS.get(product.name)
    if renderer is None:
        return False
    with plt.rc_context(_STYLE):
        fig = renderer(product)
        fig.savefig(path)
        plt.close(fig)
    return True


def _columns(product: Product) -> list[np.ndarray]:
    cols = len(product.header)
    data = [[] for _ in range(cols)]
    for row in product.rows:
        if any(cell is None for cell in row):
            continue
        for i in range(cols):
            data[i].append(float(row[i]))
    return [np.asarray(c) for c in data]


def _render_fig2(product: Product):
    ratio, f = _columns(product)
    fig, ax = plt.subplots()
    ax.plot(ratio, f, "o-", ms=4)
    ax.set_xlabel(r"cavity width ratio $\delta\rho/\rho_1$")
    ax.set_ylabel(r"geometric coupling factor $f$")
    fig.tight_layout()
    return fig


def _render_fig3a(product: Product):
    det, upper, lower = _columns(product)
    fig, ax = plt.subplots()
    ax.plot(det / 1e6, upper / 1e6, label=r"$(\omega_+-\omega)/2\pi$")
    ax.plot(det / 1e6, lower / 1e6, label=r"$(\omega_--\omega)/2\pi$")
    ax.plot(det / 1e6, np.maximum(det, 0.0) / 1e6, "k--", lw=0.8, alpha=0.5)
    ax.plot(det / 1e6, np.minimum(det, 0.0) / 1e6, "k--", lw=0.8, alpha=0.5)
    ax.set_xlabel(r"detuning $\Delta/2\pi$ (MHz)")
    ax.set_ylabel("dressed frequency offset (MHz)")
    ax.legend()
    fig.tight_layout()
    return fig


def _render_evolution(product: Product):
    t, p_e, n_ph, _ = _columns(product)
    fig, ax = plt.subplots()
    ax.plot(t * 1e9, p_e, label=r"$P_e$")
    ax.plot(t * 1e9, n_ph, label=r"$n_\mathrm{ph}$")
    ax.set_xlabel("time (ns)")
    ax.set_ylabel("population")
    ax.legend()
    fig.tight_layout()
    return fig


_RENDERERS = {
    "fig2": _render_fig2,
    "fig3a": _render_fig3a,
    "fig3b": _render_evolution,
    "rabi": _render_evolution,
}
