"""Static SVG figures: polygons and sampled conics in the affine chart z = 1."""

from __future__ import annotations

import math

import numpy as np


def sample_conic(m: np.ndarray, center, count: int = 180) -> list[tuple[float, float]]:
    """Points of the real affine conic hit by rays from ``center`` (assumed inside it)."""
    m = np.real(np.asarray(m, dtype=complex))
    c = np.array([center[0], center[1], 1.0])
    out = []
    for k in range(count + 1):
        th = 2 * math.pi * k / count
        d = np.array([math.cos(th), math.sin(th), 0.0])
        a, b, cc = d @ m @ d, 2 * (c @ m @ d), c @ m @ c
        disc = b * b - 4 * a * cc
        if abs(a) < 1e-15 or disc < 0:
            continue
        s = (-b + math.sqrt(disc)) / (2 * a)
        if s < 0:
            s = (-b - math.sqrt(disc)) / (2 * a)
        if s >= 0:
            p = c + s * d
            out.append((float(p[0]), float(p[1])))
    return out


def render(polylines: list[dict], size: int = 480) -> str:
    """SVG text for a list of {"points": [(x, y), ...], "closed": bool, "stroke": str}."""
    pts = [p for pl in polylines for p in pl["points"] if all(math.isfinite(v) for v in p)]
    if not pts:
        pts = [(0.0, 0.0), (1.0, 1.0)]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.05 * span
    scale = size / (span + 2 * pad)

    def tx(p):
        return ((p[0] - x0 + pad) * scale, (y1 - p[1] + pad) * scale)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">', f'<rect width="{size}" height="{size}" fill="white"/>']
    for pl in polylines:
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(tx, pl["points"]))
        tag = "polygon" if pl.get("closed") else "polyline"
        stroke = pl.get("stroke", "black")
        parts.append(f'<{tag} points="{coords}" fill="none" stroke="{stroke}" stroke-width="1.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write(path: str, polylines: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(polylines))
