"""SVG picture of the label partition of a pencil's real parameter line."""

from math import atan, pi

from .exceptions import NotAPencilError
from .forms import apolar_system
from .labels import classify
from .rank import admissible_rank, pencil_search_order
from .realroots import pencil_member

WIDTH, HEIGHT = 800, 120
LEFT, RIGHT = 40, 760
BAR_Y, BAR_H = 40, 30
PALETTE = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1"]


def _x(lam):
    """Arctangent compactification of the parameter line onto the drawing width."""
    return LEFT + (RIGHT - LEFT) * (atan(lam) / pi + 0.5)


def _root_position(interval):
    lo, hi = interval
    return float((lo + hi) / 2)


def pencil_partition(f):
    """``(g1, g2, roots, segments)`` for the admissible-rank pencil of ``f``.

    ``segments`` lists ``(lo, hi, sample, label)`` with ``lo``/``hi`` floats
    (``None`` for an infinite end) and ``label`` possibly ``None``.
    """
    k, _ = admissible_rank(f)
    system = apolar_system(f, k)
    if system.dim != 2:
        raise NotAPencilError(f"apolar system in degree {k} has dimension {system.dim}")
    g1, g2 = system.pencil()
    lams, _, roots = pencil_search_order(g1, g2)
    n_gaps = len(roots) + 1
    samples = lams[:n_gaps]
    ends = [None] + [_root_position(r) for r in roots] + [None]
    segments = []
    for i, lam in enumerate(samples):
        segments.append((ends[i], ends[i + 1], lam, classify(pencil_member(g1, g2, lam))))
    at_infinity = classify(g2)
    return g1, g2, roots, segments, at_infinity


def partition_svg(f, out=None):
    """Render the partition; writes to ``out`` when given and returns the SVG text."""
    g1, g2, roots, segments, at_inf = pencil_partition(f)
    colors = {}
    for *_, lab in segments:
        if lab is not None and lab not in colors:
            colors[lab] = PALETTE[len(colors) % len(PALETTE)]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<text x="{LEFT}" y="20" font-size="12" font-family="monospace">pencil {g1} + lambda*{g2}</text>',
    ]
    for lo, hi, lam, lab in segments:
        x0 = LEFT if lo is None else _x(lo)
        x1 = RIGHT if hi is None else _x(hi)
        fill = colors.get(lab, "#cccccc")
        text = "none" if lab is None else str(lab)
        parts.append(
            f'<rect class="interval" x="{x0:.2f}" y="{BAR_Y}" width="{max(x1 - x0, 0.5):.2f}" height="{BAR_H}" '
            f'fill="{fill}" data-label="{text}" data-witness="{lam}"/>'
        )
        xm = _x(float(lam))
        parts.append(f'<text x="{xm:.2f}" y="{BAR_Y + BAR_H + 14}" font-size="10" text-anchor="middle">{text}</text>')
        parts.append(f'<text x="{xm:.2f}" y="{BAR_Y + BAR_H + 26}" font-size="9" text-anchor="middle">lambda={lam}</text>')
    for r in roots:
        x = _x(_root_position(r))
        parts.append(f'<line class="tick" x1="{x:.2f}" y1="{BAR_Y - 6}" x2="{x:.2f}" y2="{BAR_Y + BAR_H + 2}" stroke="black"/>')
    inf_text = "none" if at_inf is None else str(at_inf)
    parts.append(f'<text x="{RIGHT + 4}" y="{BAR_Y + 18}" font-size="10">inf:{inf_text}</text>')
    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if out is not None:
        with open(out, "w") as fh:
            fh.write(svg)
    return svg
