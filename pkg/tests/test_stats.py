import pytest

from spatialgen.dataset.stats import compute_stats, frequencies, length_bins, render_stats_table
from spatialgen.generation.instructions import build_eval_mcq, build_training_bundle
from spatialgen.generation.scenes import sample_batch
from spatialgen.models.geometry import SectorConfig
from spatialgen.models.items import (
    DIRECTION, DISTANCE_COMPARE, DISTANCE_NUMERIC, LOCALIZATION_COORDINATE, LOCALIZATION_REGION,
    MCQ_CAPABILITIES, SCENE_DESCRIPTION, TASK_SPP, SppItem
)
from spatialgen.models.scene import GenConfig
from spatialgen.tasks.spp import solve_spp
from tests.factories import SppInstanceFactory


def test_training_capability_shares(sample_scenes):
    """Test shares follow the per-scene layout 3/4/3/3/3/1"""
    items = [item for scene in sample_scenes[:5] for item in build_training_bundle(scene)]
    report = compute_stats(items)
    assert report.total == 85
    assert report.capability[DIRECTION] == pytest.approx(3 / 17)
    assert report.capability[DISTANCE_COMPARE] == pytest.approx(4 / 17)
    assert report.capability[DISTANCE_NUMERIC] == pytest.approx(3 / 17)
    assert report.capability[LOCALIZATION_REGION] == pytest.approx(3 / 17)
    assert report.capability[LOCALIZATION_COORDINATE] == pytest.approx(3 / 17)
    assert report.capability[SCENE_DESCRIPTION] == pytest.approx(1 / 17)
    assert sum(report.direction.values()) == pytest.approx(1)
    assert report.answer_key == {}


def test_mcq_answer_key_shares(sample_scenes):
    items = [build_eval_mcq(scene, capability, seed=3) for scene in sample_scenes for capability in MCQ_CAPABILITIES]
    report = compute_stats(items)
    assert sum(report.answer_key.values()) == pytest.approx(1)
    assert set(report.answer_key) <= {'A', 'B', 'C', 'D'}
    assert set(report.direction) <= {'top-left', 'top-right', 'bottom-left', 'bottom-right'}


def test_object_region_uses_each_scene_once(scene):
    """Test object regions are counted per scene, not per item"""
    report = compute_stats(build_training_bundle(scene))
    assert sum(report.object_region.values()) == pytest.approx(1)
    assert min(report.object_region.values()) == pytest.approx(1 / 5)


def test_object_region_distribution():
    """Test corner regions hold most objects under uniform sampling"""
    items = [item for scene in sample_batch(21, 300) for item in build_training_bundle(scene, 'direction')]
    regions = compute_stats(items).object_region
    corners = sum(regions.get(name, 0) for name in ('top-left', 'top-right', 'bottom-left', 'bottom-right'))
    assert 0.54 <= corners <= 0.74
    assert regions.get('center', 0) <= 0.1


def test_spp_length_histogram(corner_instance):
    adjacent = SppInstanceFactory(start=(0, 0), end=(0, 1))
    items = [
        SppItem(instance.instance_id, 'p', 'images/x.png', instance, solve_spp(instance))
        for instance in (corner_instance, adjacent, adjacent)
    ]
    report = compute_stats(items)
    assert report.capability == {TASK_SPP: 1.0}
    assert report.spp_length[4] == pytest.approx({'1': 2 / 3, '6': 1 / 3})


def test_length_bins():
    assert length_bins([0, 249.9, 250, 1000]) == ['00000-00250', '00000-00250', '00250-00500', '01000-01250']


def test_frequencies():
    assert frequencies([]) == {}
    assert frequencies(['b', 'a', 'b', 'b']) == {'a': 0.25, 'b': 0.75}


def test_render_stats_table(sample_scenes):
    report = compute_stats(build_training_bundle(sample_scenes[0]))
    table = render_stats_table(report)
    assert table.startswith('items: 17')
    assert 'capability' in table
    assert '%' in table
    assert report.to_dict()['total'] == 17


def test_stats_follow_generation_config(scene):
    """Test direction and region tables use the configured sectors and thresholds"""
    wide = GenConfig(sector=SectorConfig(cardinal_half_width=44), region_lower=0.2, region_upper=0.8)
    items = build_training_bundle(scene, 'direction', wide.sector, regions=wide.regions)
    default = compute_stats(items)
    configured = compute_stats(items, wide)
    assert any('-' in label for label in default.direction)
    assert not any('-' in label for label in configured.direction)
    assert configured.direction == frequencies(item.answer for item in items)
    assert default.object_region.get('center', 0) == 0
    assert configured.object_region['center'] == pytest.approx(2 / 5)
