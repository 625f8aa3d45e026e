"""
Diagramas de escenas, rejillas SPP e instancias TSP
Cada diagrama se dibuja a la vez en SVG (fuente vectorial) y PNG
"""
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, Tuple

from spatialgen.rendering.raster import RasterCanvas
from spatialgen.rendering.svg import SvgBuilder
from spatialgen.utils.helpers import atomic_write, format_cell

logger = logging.getLogger(__name__)

PALETTES = (
    ('#e6194b', '#3cb44b', '#4363d8', '#f58231', '#911eb4', '#46a0a0',
     '#f032e6', '#808000', '#800000', '#000075', '#9a6324', '#008080'),
    ('#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd', '#8c564b',
     '#e377c2', '#7f7f7f', '#bcbd22', '#17becf', '#393b79', '#637939'),
)
HIGHLIGHT = '#ffbf00'
GRID_COLOR = '#202020'
OBSTACLE_COLOR = '#404040'
START_COLOR = '#2e9e44'
END_COLOR = '#d03030'
TEXT_COLOR = '#000000'


@dataclass(frozen=True)
class DiagramSpec:
    kind: str = 'scene'
    width: int = 512
    height: int = 512
    margin: int = 32
    marker_radius: int = 8
    font_size: int = 14
    palette: int = 0
    canvas: int = 1000

    def __post_init__(self):
        if self.kind not in ('scene', 'spp', 'tsp'):
            raise ValueError(f"Tipo de diagrama desconocido: {self.kind}")
        if self.width < 128 or self.height < 128:
            raise ValueError("width y height deben ser >= 128")
        if not 0 <= self.palette < len(PALETTES):
            raise ValueError(f"Paleta inexistente: {self.palette}")
        if 2 * self.margin >= min(self.width, self.height):
            raise ValueError("Margen demasiado grande")

    @classmethod
    def from_config(cls, settings, kind='scene'):
        size = settings.get('IMAGE_SIZE', 512)
        return cls(
            kind=kind,
            width=size,
            height=size,
            margin=settings.get('IMAGE_MARGIN', 32),
            marker_radius=settings.get('MARKER_RADIUS', 8),
            font_size=settings.get('FONT_SIZE', 14),
            canvas=settings.get('CANVAS_SIZE', 1000),
        )

    def color(self, position):
        colors = PALETTES[self.palette]
        return colors[position % len(colors)]


@dataclass(frozen=True)
class Diagram:
    diagram_id: str
    kind: str
    svg: str
    png: bytes
    markers: Dict[str, Tuple[float, float]] = field(default_factory=dict, compare=False)


def canvas_to_pixel(x, y, spec):
    """Coordenadas de lienzo (y hacia arriba) a píxeles (y hacia abajo)"""
    inner_w = spec.width - 2 * spec.margin
    inner_h = spec.height - 2 * spec.margin
    px = spec.margin + x / spec.canvas * inner_w
    py = spec.margin + (spec.canvas - y) / spec.canvas * inner_h
    return px, py


def pixel_to_canvas(px, py, spec):
    """Inversa de canvas_to_pixel"""
    inner_w = spec.width - 2 * spec.margin
    inner_h = spec.height - 2 * spec.margin
    x = (px - spec.margin) / inner_w * spec.canvas
    y = spec.canvas - (py - spec.margin) / inner_h * spec.canvas
    return x, y


class _Painter:
    """Reenvía cada primitiva al SVG y al raster"""

    def __init__(self, spec):
        self.spec = spec
        self.svg = SvgBuilder(spec.width, spec.height)
        self.raster = RasterCanvas(spec.width, spec.height)

    def line(self, x1, y1, x2, y2, stroke, width=1):
        self.svg.line(x1, y1, x2, y2, stroke, width)
        self.raster.line(x1, y1, x2, y2, stroke, width)

    def rect(self, x, y, width, height, fill, css_class=None):
        self.svg.rect(x, y, width, height, fill, css_class)
        self.raster.rect(x, y, width, height, fill)

    def marker(self, label, cx, cy, fill, highlight=False):
        r = self.spec.marker_radius
        if highlight:
            self.svg.circle(cx, cy, r + 3, HIGHLIGHT, css_class='highlight', data={'label': label})
            self.raster.ring(cx, cy, r, r + 3, HIGHLIGHT)
        self.svg.circle(cx, cy, r, fill, data={'label': label})
        self.raster.disk(cx, cy, r, fill)

    def text(self, x, y, content, fill=TEXT_COLOR, css_class='label', anchor='start'):
        self.svg.text(x, y, content, self.spec.font_size, fill, css_class, anchor)
        self.raster.text(x, y, content, fill, anchor)

    def finish(self, diagram_id, markers=None):
        return Diagram(
            diagram_id=diagram_id,
            kind=self.spec.kind,
            svg=self.svg.get_svg(),
            png=self.raster.to_png(),
            markers=markers or {},
        )


def _draw_points(painter, objects, highlight_label=None):
    spec = painter.spec
    r = spec.marker_radius
    placed = {}
    for obj in objects:
        placed[obj.label] = canvas_to_pixel(obj.point.x, obj.point.y, spec)

    # Etiquetas primero, marcadores encima
    for obj in objects:
        px, py = placed[obj.label]
        if px + r + 3 + spec.font_size > spec.width:
            painter.text(px - r - 3, py - r, obj.label, anchor='end')
        else:
            painter.text(px + r + 3, py - r, obj.label)

    for position, obj in enumerate(objects):
        px, py = placed[obj.label]
        painter.marker(obj.label, px, py, spec.color(position), highlight=obj.label == highlight_label)
    return placed


def render_scene(scene, spec=None):
    """
    Diagrama de una escena: un marcador relleno por objeto y su etiqueta al lado

    Returns:
        Diagram con SVG y PNG idénticos byte a byte entre corridas
    """
    spec = spec or DiagramSpec(kind='scene')
    painter = _Painter(spec)
    placed = _draw_points(painter, scene.objects)
    return painter.finish(scene.scene_id, placed)


def render_tsp(instance, spec=None):
    """Como render_scene, con el objeto de inicio resaltado con un anillo"""
    spec = spec or DiagramSpec(kind='tsp')
    painter = _Painter(spec)
    placed = _draw_points(painter, instance.objects, highlight_label=instance.start_label)
    return painter.finish(instance.instance_id, placed)


def cell_box(cell, grid_n, spec):
    """Caja en píxeles (x, y, lado) de una celda (col, row) con filas de abajo hacia arriba"""
    side = (min(spec.width, spec.height) - 2 * spec.margin) / grid_n
    col, row = cell
    return spec.margin + col * side, spec.margin + (grid_n - 1 - row) * side, side


def render_spp(instance, spec=None):
    """
    Rejilla n x n con líneas visibles, S en el inicio, E en el fin,
    índices de filas y columnas, obstáculos en gris oscuro y leyenda
    """
    spec = spec or DiagramSpec(kind='spp')
    painter = _Painter(spec)
    n = instance.grid_n
    _, _, side = cell_box((0, 0), n, spec)
    left = top = spec.margin
    extent = side * n

    for cell in sorted(instance.obstacles):
        x, y, _ = cell_box(cell, n, spec)
        painter.rect(x, y, side, side, OBSTACLE_COLOR, css_class='obstacle')

    markers = {}
    for glyph, cell, color in (('S', instance.start, START_COLOR), ('E', instance.end, END_COLOR)):
        x, y, _ = cell_box(cell, n, spec)
        inset = side * 0.2
        painter.rect(x + inset, y + inset, side - 2 * inset, side - 2 * inset, color, css_class=f'mark-{glyph}')
        painter.text(x + side / 2, y + side / 2 + spec.font_size / 3, glyph, fill='#ffffff',
                     css_class='glyph', anchor='middle')
        markers[glyph] = (x + side / 2, y + side / 2)

    for k in range(n + 1):
        offset = k * side
        painter.line(left + offset, top, left + offset, top + extent, GRID_COLOR)
        painter.line(left, top + offset, left + extent, top + offset, GRID_COLOR)

    for k in range(n):
        painter.text(left + k * side + side / 2, top + extent + spec.font_size + 2, str(k),
                     css_class='axis', anchor='middle')
        painter.text(left - 6, top + (n - 1 - k) * side + side / 2 + spec.font_size / 3, str(k),
                     css_class='axis', anchor='end')

    legend = f'S = start {format_cell(instance.start)}   E = end {format_cell(instance.end)}'
    painter.text(left, top - 8, legend, css_class='legend')
    return painter.finish(instance.instance_id, markers)


def render_item_image(item_kind, subject, spec=None):
    """Despacha por tipo de sujeto (escena, SPP, TSP)"""
    if item_kind == 'spp':
        return render_spp(subject, spec)
    if item_kind == 'tsp':
        return render_tsp(subject, spec)
    return render_scene(subject, spec)


def save_diagram(diagram, directory):
    """
    Escribe {id}.svg y {id}.png de forma atómica

    Returns:
        (ruta_svg, ruta_png)
    """
    svg_path = os.path.join(directory, f'{diagram.diagram_id}.svg')
    png_path = os.path.join(directory, f'{diagram.diagram_id}.png')
    atomic_write(svg_path, diagram.svg.encode('utf-8'))
    atomic_write(png_path, diagram.png)
    logger.debug(f"Diagrama guardado: {png_path}")
    return svg_path, png_path
