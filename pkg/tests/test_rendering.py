import io

import numpy as np
import pytest
from PIL import Image, ImageColor

from spatialgen.rendering.diagrams import (
    DiagramSpec, canvas_to_pixel, cell_box, pixel_to_canvas, render_item_image,
    render_scene, render_spp, render_tsp, save_diagram
)
from tests.factories import SceneFactory, SppInstanceFactory, TspInstanceFactory


def _image(diagram):
    return Image.open(io.BytesIO(diagram.png)).convert('RGB')


def test_scene_markers_and_labels(scene):
    """Test a 5-object scene has 5 markers and 5 labels"""
    diagram = render_scene(scene)
    assert diagram.svg.count('class="marker"') == 5
    assert diagram.svg.count('class="label"') == 5
    for label in scene.labels:
        assert f'data-label="{label}"' in diagram.svg
    assert _image(diagram).size == (512, 512)


def test_scene_render_is_deterministic(scene):
    """Test identical bytes across runs"""
    first, second = render_scene(scene), render_scene(scene)
    assert first.svg == second.svg
    assert first.png == second.png


def test_y_axis_flip():
    """Test an object at (0, 1000) lands in the top-left corner of the bitmap"""
    scene = SceneFactory(coords=((0, 1000), (1000, 0)))
    spec = DiagramSpec()
    image = _image(render_scene(scene, spec))
    assert image.getpixel((32, 32)) == ImageColor.getrgb(spec.color(0))
    assert image.getpixel((479, 479)) == ImageColor.getrgb(spec.color(1))


def test_canvas_pixel_mapping():
    spec = DiagramSpec()
    assert canvas_to_pixel(0, 0, spec) == (32, 480)
    assert canvas_to_pixel(1000, 1000, spec) == (480, 32)
    x, y = pixel_to_canvas(*canvas_to_pixel(123, 877, spec), spec)
    assert x == pytest.approx(123)
    assert y == pytest.approx(877)


def test_marker_centroid_round_trip(scene):
    """Test marker pixel centroids map back to the object coordinates"""
    spec = DiagramSpec()
    pixels = np.asarray(_image(render_scene(scene, spec)))
    for position, obj in enumerate(scene.objects):
        color = np.array(ImageColor.getrgb(spec.color(position)))
        rows, cols = np.nonzero(np.all(pixels == color, axis=-1))
        assert len(rows) > 0
        x, y = pixel_to_canvas(cols.mean() + 0.5, rows.mean() + 0.5, spec)
        assert abs(x - obj.point.x) <= 1.0
        assert abs(y - obj.point.y) <= 1.0


def test_svg_marker_positions(scene):
    """Test vector markers sit at the mapped coordinates"""
    spec = DiagramSpec()
    diagram = render_scene(scene, spec)
    for obj in scene.objects:
        px, py = canvas_to_pixel(obj.point.x, obj.point.y, spec)
        assert f'data-label="{obj.label}" cx="{px:.2f}" cy="{py:.2f}"' in diagram.svg
        assert diagram.markers[obj.label] == (px, py)


def test_spp_grid(corner_instance):
    """Test 4x4 grid: 16 cells, start and end marked once"""
    diagram = render_spp(corner_instance)
    assert diagram.svg.count('<line ') == 2 * (4 + 1)
    assert diagram.svg.count('class="mark-S"') == 1
    assert diagram.svg.count('class="mark-E"') == 1
    assert diagram.svg.count('class="obstacle"') == 0
    assert set(diagram.markers) == {'S', 'E'}
    assert render_spp(corner_instance).png == diagram.png


def test_spp_cell_orientation(corner_instance):
    """Test row 0 is drawn at the bottom"""
    spec = DiagramSpec(kind='spp')
    _, y_bottom, side = cell_box((0, 0), 4, spec)
    _, y_top, _ = cell_box((0, 3), 4, spec)
    assert y_top == spec.margin
    assert y_bottom == spec.margin + 3 * side
    image = _image(render_spp(corner_instance, spec))
    start_center = (int(spec.margin + side / 2), int(y_bottom + side / 2) - side // 4)
    assert image.getpixel(start_center) == ImageColor.getrgb('#2e9e44')


def test_spp_obstacles_drawn():
    instance = SppInstanceFactory(grid_n=5, start=(0, 0), end=(4, 4), obstacles=frozenset({(2, 2), (1, 3)}))
    diagram = render_spp(instance)
    assert diagram.svg.count('class="obstacle"') == 2
    assert diagram.svg.count('<line ') == 2 * (5 + 1)


def test_tsp_highlight(square_instance):
    """Test 4 markers with the start highlighted"""
    diagram = render_tsp(square_instance)
    assert diagram.svg.count('class="marker"') == 4
    assert diagram.svg.count('class="highlight"') == 1
    assert 'class="highlight" data-label="A"' in diagram.svg
    assert render_tsp(square_instance).png == diagram.png


def test_tsp_five_objects():
    instance = TspInstanceFactory(coords=((100, 100), (800, 150), (450, 500), (200, 850), (900, 900)))
    assert render_tsp(instance).svg.count('class="marker"') == 5


def test_render_item_image_dispatch(scene, corner_instance, square_instance):
    assert render_item_image('scene', scene).kind == 'scene'
    assert render_item_image('spp', corner_instance).kind == 'spp'
    assert render_item_image('tsp', square_instance).kind == 'tsp'


def test_diagram_spec_validation(app):
    with pytest.raises(ValueError):
        DiagramSpec(kind='chart')
    with pytest.raises(ValueError):
        DiagramSpec(width=64, height=64)
    with pytest.raises(ValueError):
        DiagramSpec(palette=9)
    spec = DiagramSpec.from_config(app.config, kind='tsp')
    assert (spec.width, spec.height, spec.canvas) == (512, 512, 1000)


def test_palette_changes_colors(scene):
    assert render_scene(scene, DiagramSpec(palette=1)).png != render_scene(scene).png


def test_save_diagram(tmp_path, scene):
    svg_path, png_path = save_diagram(render_scene(scene), tmp_path / 'images')
    assert svg_path.endswith(f'{scene.scene_id}.svg')
    with open(png_path, 'rb') as handle:
        assert handle.read(8) == b'\x89PNG\r\n\x1a\n'
