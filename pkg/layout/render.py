"""
SVG and TikZ output for lattice diagrams.
"""
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from congruences.coloring import ji_poset
from lattices.core import Edge, Lattice
from layout.coordinates import Layout, Point
from shared.models import EdgeKind, RenderSection
from swing.trajectories import edge_classes, trajectory_of

DEFAULT = {
    'colors': False,
    'trajectories': False,
    'labels': True,
    'fgcolor': 'black',
    'bgcolor': 'white',
    'margin': 1,
}


def _number(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.3f}"


class SvgBackend:
    """Collects SVG 1.1 elements on an integer grid scaled from layout units."""

    def __init__(self, layout: Layout, settings: RenderSection, **params):
        self.settings = settings
        self.fgcolor = params.get('fgcolor', DEFAULT['fgcolor'])
        self.bgcolor = params.get('bgcolor', DEFAULT['bgcolor'])
        margin = Fraction(params.get('margin', DEFAULT['margin']))
        xs = [p[0] for p in layout.positions]
        ys = [p[1] for p in layout.positions]
        self._min_x = min(xs) - margin
        self._max_y = max(ys) + margin
        self._width = (max(xs) + margin - self._min_x) * settings.scale
        self._height = (self._max_y - min(ys) + margin) * settings.scale
        self._edges: List[str] = []
        self._nodes: List[str] = []

    def _project(self, point: Point) -> Point:
        scale = self.settings.scale
        return (point[0] - self._min_x) * scale, (self._max_y - point[1]) * scale

    def draw_edge(self, start: Point, end: Point, color: str, width: int, title: str) -> None:
        (x1, y1), (x2, y2) = self._project(start), self._project(end)
        self._edges.append(
            f'  <line x1="{_number(x1)}" y1="{_number(y1)}" x2="{_number(x2)}" y2="{_number(y2)}" '
            f'stroke="{color}" stroke-width="{width}" stroke-linecap="round">'
            f'<title>{title}</title></line>'
        )

    def draw_node(self, point: Point, label: Optional[str]) -> None:
        x, y = self._project(point)
        r = self.settings.node_radius
        self._nodes.append(
            f'  <circle cx="{_number(x)}" cy="{_number(y)}" r="{r}" '
            f'fill="{self.bgcolor}" stroke="{self.fgcolor}" stroke-width="1"/>'
        )
        if label is not None:
            self._nodes.append(
                f'  <text x="{_number(x + 2 * r)}" y="{_number(y + r)}" '
                f'font-family="sans-serif" font-size="{2 * r + 2}" fill="{self.fgcolor}">{label}</text>'
            )

    def output(self) -> str:
        width, height = _number(self._width), _number(self._height)
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
            f'  <rect width="100%" height="100%" fill="{self.bgcolor}"/>',
        ]
        lines.extend(self._edges)
        lines.extend(self._nodes)
        lines.append('</svg>')
        return "\n".join(lines) + "\n"


class TikZBackend:
    """Collects TikZ commands in layout units."""

    def __init__(self, layout: Layout, settings: RenderSection, **params):
        self.settings = settings
        self.fgcolor = params.get('fgcolor', DEFAULT['fgcolor'])
        self._colors: Dict[str, str] = {}
        self._edges: List[str] = []
        self._nodes: List[str] = []

    def _color_name(self, color: str) -> str:
        if not color.startswith("#"):
            return color
        if color not in self._colors:
            self._colors[color] = f"slatt{len(self._colors)}"
        return self._colors[color]

    def draw_edge(self, start: Point, end: Point, color: str, width: int, title: str) -> None:
        self._edges.append(
            f"  \\draw[draw={self._color_name(color)}, line width={width * 0.4:.1f}pt] "
            f"({_number(start[0])},{_number(start[1])}) -- ({_number(end[0])},{_number(end[1])});"
            f" % {title}"
        )

    def draw_node(self, point: Point, label: Optional[str]) -> None:
        text = f" node[right] {{\\small {label}}}" if label is not None else ""
        self._nodes.append(
            f"  \\filldraw[fill=white, draw={self.fgcolor}] "
            f"({_number(point[0])},{_number(point[1])}) circle (2pt){text};"
        )

    def output(self) -> str:
        lines = [
            f"\\definecolor{{{name}}}{{HTML}}{{{color[1:].upper()}}}"
            for color, name in self._colors.items()
        ]
        lines.append("\\begin{tikzpicture}[scale=0.7]")
        lines.extend(self._edges)
        lines.extend(self._nodes)
        lines.append("\\end{tikzpicture}")
        return "\n".join(lines) + "\n"


def _edge_color(edge: Edge, palette: Sequence[str], fgcolor: str,
                col: Optional[Dict[Edge, int]], traj: Optional[Dict[Edge, int]]) -> str:
    if traj is not None:
        return palette[traj[edge] % len(palette)]
    if col is not None:
        return palette[col[edge] % len(palette)]
    return fgcolor


def draw(lattice: Lattice, layout: Layout, backend, **params) -> str:
    """Draw every edge, then every element, on ``backend`` and return its output.

    Keyword arguments
    -----------------
    colors : bool
        Tint edges by their color in P.
    trajectories : bool
        Tint edges by trajectory instead.
    labels : bool
        Write element ids next to the nodes.
    """
    settings = backend.settings
    col = ji_poset(lattice)[1] if params.get('colors', DEFAULT['colors']) else None
    traj = trajectory_of(lattice) if params.get('trajectories', DEFAULT['trajectories']) else None
    labels = params.get('labels', DEFAULT['labels'])
    classes = edge_classes(lattice)

    for edge in lattice.edges:
        steep = classes[edge] is EdgeKind.STEEP
        backend.draw_edge(
            layout.positions[edge.bottom],
            layout.positions[edge.top],
            _edge_color(edge, settings.palette, backend.fgcolor, col, traj),
            settings.steep_stroke if steep else settings.stroke,
            f"{edge} {classes[edge].value}",
        )
    for x in range(lattice.n):
        backend.draw_node(layout.positions[x], str(x) if labels else None)
    return backend.output()


def render_svg(lattice: Lattice, layout: Layout,
               settings: Optional[RenderSection] = None, **params) -> str:
    """SVG document for the diagram; byte-stable for fixed input and options."""
    settings = settings or RenderSection()
    return draw(lattice, layout, SvgBackend(layout, settings, **params), **params)


def render_tikz(lattice: Lattice, layout: Layout,
                settings: Optional[RenderSection] = None, **params) -> str:
    """TikZ picture for the diagram."""
    settings = settings or RenderSection()
    return draw(lattice, layout, TikZBackend(layout, settings, **params), **params)
