"""Self-contained SVG rendering of spectral distributions.

Two views of the same eigenvalue file: the step-CDF overlay against the
semicircle CDF, and a histogram-density overlay against the semicircle
density (bin width by the Freedman-Diaconis rule).  Output is a fixed
800x500 viewBox with the measured sup-interval gap embedded as a text
annotation, so downstream checks can compare it against summary.csv.
"""

from __future__ import annotations

import math
from typing import Dict, List, Tuple

import numpy as np

from .semicircle import sc_cdf, sc_pdf
from .spectral import discrepancy_parts, esd_from_values

WIDTH, HEIGHT = 800, 500
_ML, _MR, _MT, _MB = 62, 18, 24, 46


def read_esd_csv(path: str) -> Tuple[Dict[str, str], np.ndarray]:
    """Parse an eigenvalue CSV: '# key=value ...' header, one value per line."""
    meta: Dict[str, str] = {}
    values: List[float] = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for item in line[1:].split():
                    key, _, val = item.partition("=")
                    if val:
                        meta[key] = val
            elif line != "eigenvalue":
                values.append(float(line))
    if not values:
        raise ValueError(f"{path}: no eigenvalues found")
    return meta, np.array(values)


def plot_esd(esd_path: str, out_path: str, mode: str = "cdf") -> None:
    """Render an eigenvalue CSV to an SVG file."""
    meta, values = read_esd_csv(esd_path)
    svg = render_esd_svg(values, meta, mode=mode)
    with open(out_path, "w") as fh:
        fh.write(svg)


def render_esd_svg(values, meta: Dict[str, str] | None = None,
                   mode: str = "cdf") -> str:
    if mode not in ("cdf", "density"):
        raise ValueError(f"mode must be 'cdf' or 'density', got {mode!r}")
    esd = esd_from_values(values)
    atoms = esd.atoms
    meta = meta or {}
    sup_gap = discrepancy_parts(esd)[0]

    xlo = min(-2.4, float(atoms[0]) - 0.2)
    xhi = max(2.4, float(atoms[-1]) + 0.2)

    if mode == "cdf":
        ymax = 1.0
        ylabel = "cumulative probability"
    else:
        centers, heights, edges = _fd_histogram(atoms)
        ymax = max(float(max(heights, default=0.0)), 1.0 / math.pi) * 1.15
        ylabel = "density"

    def px(x: float) -> float:
        return _ML + (x - xlo) / (xhi - xlo) * (WIDTH - _ML - _MR)

    def py(y: float) -> float:
        return HEIGHT - _MB - y / ymax * (HEIGHT - _MT - _MB)

    parts: List[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    parts.append(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
    parts += _axes(px, py, xlo, xhi, ymax, ylabel, mode)

    # reference curve, 400 samples
    xs = np.linspace(xlo, xhi, 400)
    ref = sc_cdf(xs) if mode == "cdf" else sc_pdf(xs)
    pts = " ".join(f"{px(float(x)):.2f},{py(float(y)):.2f}" for x, y in zip(xs, ref))
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="#d62728" stroke-width="1.6"/>'
    )

    if mode == "cdf":
        parts.append(_step_path(atoms, px, py))
    else:
        for c, h, (a, b) in zip(centers, heights, edges):
            parts.append(
                f'<rect x="{px(a):.2f}" y="{py(h):.2f}" '
                f'width="{px(b) - px(a):.2f}" height="{py(0.0) - py(h):.2f}" '
                f'fill="#1f77b4" fill-opacity="0.45" stroke="#1f77b4"/>'
            )

    label = meta.get("code", "spectrum")
    n = meta.get("n", str(len(atoms)))
    p = meta.get("p", str(len(atoms)))
    parts.append(
        f'<text x="{_ML + 8}" y="{_MT + 14}" font-family="monospace" '
        f'font-size="13">{_esc(label)}  n={n}  p={p}</text>'
    )
    parts.append(
        f'<text x="{_ML + 8}" y="{_MT + 32}" font-family="monospace" '
        f'font-size="12">sup-interval gap = {sup_gap!r}</text>'
    )
    parts.append(
        f'<text x="{WIDTH - _MR - 240}" y="{_MT + 14}" font-family="monospace" '
        f'font-size="12" fill="#d62728">semicircle law</text>'
    )
    parts.append(
        f'<text x="{WIDTH - _MR - 240}" y="{_MT + 30}" font-family="monospace" '
        f'font-size="12" fill="#1f77b4">empirical spectrum</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _step_path(atoms: np.ndarray, px, py) -> str:
    p = len(atoms)
    d = [f"M {px(float(atoms[0]) - 10):.2f} {py(0.0):.2f}"]
    d.append(f"L {px(float(atoms[0])):.2f} {py(0.0):.2f}")
    for i, a in enumerate(atoms):
        x = px(float(a))
        d.append(f"L {x:.2f} {py(i / p):.2f}")
        d.append(f"L {x:.2f} {py((i + 1) / p):.2f}")
    d.append(f"L {px(float(atoms[-1]) + 10):.2f} {py(1.0):.2f}")
    return (
        f'<path d="{" ".join(d)}" fill="none" stroke="#1f77b4" stroke-width="1.6"/>'
    )


def _fd_histogram(atoms: np.ndarray):
    """Freedman-Diaconis bins; falls back to sqrt(p) bins for zero IQR."""
    p = len(atoms)
    q1, q3 = np.quantile(atoms, [0.25, 0.75])
    h = 2.0 * (q3 - q1) / p ** (1.0 / 3.0)
    lo, hi = float(atoms[0]), float(atoms[-1])
    if h <= 0 or hi == lo:
        nbins = max(int(math.sqrt(p)), 1)
        lo, hi = lo - 0.5, hi + 0.5
    else:
        nbins = max(int(math.ceil((hi - lo) / h)), 1)
    edges = np.linspace(lo, hi, nbins + 1)
    counts, _ = np.histogram(atoms, bins=edges)
    widths = np.diff(edges)
    heights = counts / (p * widths)
    centers = (edges[:-1] + edges[1:]) / 2.0
    return centers, heights, list(zip(edges[:-1], edges[1:]))


def _axes(px, py, xlo, xhi, ymax, ylabel, mode) -> List[str]:
    parts = [
        f'<line x1="{_ML}" y1="{py(0.0):.2f}" x2="{WIDTH - _MR}" '
        f'y2="{py(0.0):.2f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" '
        f'y2="{HEIGHT - _MB}" stroke="black" stroke-width="1"/>',
    ]
    for xt in range(int(math.ceil(xlo)), int(math.floor(xhi)) + 1):
        x = px(float(xt))
        parts.append(
            f'<line x1="{x:.2f}" y1="{py(0.0):.2f}" x2="{x:.2f}" '
            f'y2="{py(0.0) + 5:.2f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{py(0.0) + 18:.2f}" font-size="11" '
            f'font-family="monospace" text-anchor="middle">{xt}</text>'
        )
    nticks = 4
    for i in range(nticks + 1):
        yv = ymax * i / nticks
        y = py(yv)
        parts.append(
            f'<line x1="{_ML - 5}" y1="{y:.2f}" x2="{_ML}" y2="{y:.2f}" '
            f'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_ML - 8}" y="{y + 4:.2f}" font-size="11" '
            f'font-family="monospace" text-anchor="end">{yv:.2f}</text>'
        )
    parts.append(
        f'<text x="{(WIDTH - _MR + _ML) / 2:.0f}" y="{HEIGHT - 10}" font-size="12" '
        f'font-family="monospace" text-anchor="middle">eigenvalue</text>'
    )
    parts.append(
        f'<text x="14" y="{(HEIGHT - _MB + _MT) / 2:.0f}" font-size="12" '
        f'font-family="monospace" text-anchor="middle" '
        f'transform="rotate(-90 14 {(HEIGHT - _MB + _MT) / 2:.0f})">{ylabel}</text>'
    )
    return parts


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
