"""SVG pictures of planar point sets and their boundaries."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import PointSet, boundary_members

__all__ = ["Style", "render_svg"]


@dataclass(frozen=True)
class Style:
    cell: int = 24
    set_color: str = "#1f4fd8"
    boundary_color: str = "#d62728"
    grid_color: str = "#d0d0d0"
    radius_ratio: float = 0.28


def render_svg(S: PointSet, style: Style = Style()) -> str:
    """Draw ``S`` and ``dS \\ S`` as dots on the integer grid.

    The first coordinate runs left to right, the second bottom to top.
    Output depends only on the set and the style.
    """
    if S.sig.dim != 2:
        raise ValueError(f"rendering needs a 2-dimensional domain, got {S.sig}")
    if style.cell < 2:
        raise ValueError("cell size must be at least 2 pixels")
    inner = boundary_members(S) - S.members
    shown = S.members | inner
    if shown:
        xs = [p[0] for p in shown]
        ys = [p[1] for p in shown]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0, y0 = (-1 if S.sig.k >= 1 else 0), (-1 if S.sig.k >= 2 else 0)
        x1, y1 = x0 + 2, y0 + 2
    c = style.cell
    width, height = (x1 - x0 + 2) * c, (y1 - y0 + 2) * c

    def px(x: int) -> int:
        return (x - x0 + 1) * c

    def py(y: int) -> int:
        return (y1 - y + 1) * c

    r = max(1, round(c * style.radius_ratio))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<g stroke="{style.grid_color}" stroke-width="1">',
    ]
    for x in range(x0, x1 + 1):
        out.append(f'<line x1="{px(x)}" y1="{py(y1)}" x2="{px(x)}" y2="{py(y0)}"/>')
    for y in range(y0, y1 + 1):
        out.append(f'<line x1="{px(x0)}" y1="{py(y)}" x2="{px(x1)}" y2="{py(y)}"/>')
    out.append("</g>")
    for cls, color, pts in (("boundary", style.boundary_color, inner),
                            ("set", style.set_color, S.members)):
        out.append(f'<g class="{cls}" fill="{color}">')
        for x, y in sorted(pts):
            out.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="{r}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
