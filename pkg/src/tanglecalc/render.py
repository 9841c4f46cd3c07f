"""Illustrative SVG drawings of 4-plats.

The braid is drawn left to right on four horizontal strands with plat caps
at both ends.  No layout guarantees: the picture is for eyeballing only.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .oracle.diagram import fourplat_braid

_STEP = 40
_GAP = 30
_MARGIN = 30


def _crossing(x: float, row: int, sign: int) -> list[str]:
    y0 = _MARGIN + (row - 1) * _GAP
    y1 = y0 + _GAP
    over = (x, y0, x + _STEP, y1) if sign > 0 else (x, y1, x + _STEP, y0)
    under = (x, y1, x + _STEP, y0) if sign > 0 else (x, y0, x + _STEP, y1)
    ux0, uy0, ux1, uy1 = under
    mx, my = (ux0 + ux1) / 2, (uy0 + uy1) / 2
    f = 0.3
    return [
        _line(*over),
        _line(ux0, uy0, ux0 + (mx - ux0) * (1 - f), uy0 + (my - uy0) * (1 - f)),
        _line(ux1 + (mx - ux1) * (1 - f), uy1 + (my - uy1) * (1 - f), ux1, uy1),
    ]


def _line(x0, y0, x1, y1) -> str:
    return f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" y2="{y1:.1f}" />'


def _cap(x: float, top_row: int, side: int) -> str:
    y0 = _MARGIN + (top_row - 1) * _GAP
    y1 = y0 + _GAP
    bulge = x + side * _GAP / 2
    return f'<path d="M {x:.1f} {y0:.1f} C {bulge:.1f} {y0:.1f} {bulge:.1f} {y1:.1f} {x:.1f} {y1:.1f}" />'


def render_fourplat_svg(p: int, q: int, title: str | None = None) -> str:
    """SVG text of the 4-plat diagram of ``b(p, q)``."""
    letters = fourplat_braid(p, q)
    width = 2 * _MARGIN + _GAP + _STEP * max(len(letters), 1)
    height = 2 * _MARGIN + 3 * _GAP + 20
    x_start = _MARGIN + _GAP / 2
    parts = []
    for k, (gen, sign) in enumerate(letters):
        x = x_start + k * _STEP
        parts += _crossing(x, gen, sign)
        for row in range(1, 5):
            if row not in (gen, gen + 1):
                y = _MARGIN + (row - 1) * _GAP
                parts.append(_line(x, y, x + _STEP, y))
    x_end = x_start + _STEP * len(letters)
    if not letters:
        for row in range(1, 5):
            y = _MARGIN + (row - 1) * _GAP
            parts.append(_line(x_start, y, x_start + _STEP, y))
        x_end = x_start + _STEP
    for top in (1, 3):
        parts.append(_cap(x_start, top, -1))
        parts.append(_cap(x_end, top, 1))
    label = escape(title or f"b({p},{q})")
    body = "\n  ".join(parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">\n'
        f'  <g fill="none" stroke="black" stroke-width="2">\n  {body}\n  </g>\n'
        f'  <text x="{_MARGIN}" y="{height - 8:.0f}" font-family="sans-serif" font-size="12">{label}</text>\n'
        "</svg>\n"
    )
