"""
Representación visual determinista (SVG + PNG)
"""

from spatialgen.rendering.diagrams import (
    Diagram,
    DiagramSpec,
    canvas_to_pixel,
    cell_box,
    pixel_to_canvas,
    render_item_image,
    render_scene,
    render_spp,
    render_tsp,
    save_diagram
)

__all__ = [
    'Diagram',
    'DiagramSpec',
    'canvas_to_pixel',
    'cell_box',
    'pixel_to_canvas',
    'render_item_image',
    'render_scene',
    'render_spp',
    'render_tsp',
    'save_diagram'
]
