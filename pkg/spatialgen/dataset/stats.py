"""
Estadísticas de un manifiesto
Todas las etiquetas se recalculan desde las escenas e instancias embebidas
"""
import logging
from dataclasses import dataclass, field
from itertools import chain
from typing import Dict

import numpy as np
import pandas as pd
from tabulate import tabulate

from spatialgen.geometry.core import direction_sector, region_of
from spatialgen.models.items import (
    DIRECTION, DISTANCE_COMPARE, LOCALIZATION_REGION, InstructionItem, McqItem, SppItem, TspItem
)
from spatialgen.models.scene import GenConfig
from spatialgen.tasks.spp import solve_spp
from spatialgen.tasks.tsp import solve_tsp

logger = logging.getLogger(__name__)

TSP_BIN_WIDTH = 250


@dataclass
class StatsReport:
    total: int
    capability: Dict[str, float] = field(default_factory=dict)
    direction: Dict[str, float] = field(default_factory=dict)
    distance_phrasing: Dict[str, float] = field(default_factory=dict)
    localization: Dict[str, float] = field(default_factory=dict)
    object_region: Dict[str, float] = field(default_factory=dict)
    answer_key: Dict[str, float] = field(default_factory=dict)
    spp_length: Dict[int, Dict[str, float]] = field(default_factory=dict)
    tsp_length: Dict[int, Dict[str, float]] = field(default_factory=dict)

    def tables(self):
        """Tablas no vacías como (nombre, frecuencias)"""
        named = [
            ('capability', self.capability),
            ('direction', self.direction),
            ('distance_phrasing', self.distance_phrasing),
            ('localization', self.localization),
            ('object_region', self.object_region),
            ('answer_key', self.answer_key),
        ]
        named += [(f'spp_length[grid_n={n}]', table) for n, table in sorted(self.spp_length.items())]
        named += [(f'tsp_length[n_objects={n}]', table) for n, table in sorted(self.tsp_length.items())]
        return [(name, table) for name, table in named if table]

    def to_dict(self):
        return {'total': self.total, **{name: table for name, table in self.tables()}}


def frequencies(values):
    """Frecuencias relativas ordenadas por etiqueta (suman 1)"""
    series = pd.Series(list(values), dtype=object)
    if series.empty:
        return {}
    counts = series.value_counts(normalize=True).sort_index()
    return {str(label): float(share) for label, share in counts.items()}


def length_bins(lengths, width=TSP_BIN_WIDTH):
    """Etiqueta de intervalo 'a-b' para cada longitud"""
    starts = (np.floor(np.asarray(lengths, dtype=float) / width) * width).astype(int)
    return [f'{start:05d}-{start + width:05d}' for start in starts]


def compute_stats(items, cfg=None):
    """
    StatsReport a partir de los ítems de un manifiesto

    Args:
        items: Ítems leídos con read_manifest
        cfg: GenConfig con el que se generó (sectores y umbrales de región)
    """
    items = list(items)
    cfg = cfg or GenConfig()
    capabilities, directions, phrasings, regions, keys = [], [], [], [], []
    scenes = {}
    spp_lengths, tsp_lengths = {}, {}

    for item in items:
        if isinstance(item, (InstructionItem, McqItem)):
            scene = item.scene
            scenes.setdefault(scene.scene_id, scene)
            capabilities.append(item.capability)
            meta = item.meta
            if item.capability == DIRECTION:
                a, b = meta['objects']
                mode = 4 if isinstance(item, McqItem) else 8
                directions.append(direction_sector(scene.point(a), scene.point(b), mode, cfg.sector).value)
            elif item.capability == DISTANCE_COMPARE:
                phrasings.append(meta['phrasing'])
            elif item.capability == LOCALIZATION_REGION:
                regions.append(region_of(scene.point(meta['objects'][0]), *cfg.regions).value)
            if isinstance(item, McqItem):
                keys.append(item.answer_key)
        elif isinstance(item, SppItem):
            capabilities.append(item.task)
            spp_lengths.setdefault(item.instance.grid_n, []).append(solve_spp(item.instance).optimal_length)
        elif isinstance(item, TspItem):
            capabilities.append(item.task)
            tsp_lengths.setdefault(len(item.instance.objects), []).append(solve_tsp(item.instance).tour_length)

    object_regions = (
        region_of(obj.point, *cfg.regions).value
        for obj in chain.from_iterable(scene.objects for scene in scenes.values())
    )

    report = StatsReport(
        total=len(items),
        capability=frequencies(capabilities),
        direction=frequencies(directions),
        distance_phrasing=frequencies(phrasings),
        localization=frequencies(regions),
        object_region=frequencies(object_regions),
        answer_key=frequencies(keys),
        spp_length={n: frequencies(values) for n, values in spp_lengths.items()},
        tsp_length={n: frequencies(length_bins(values)) for n, values in tsp_lengths.items()},
    )
    logger.info(f"Estadísticas calculadas sobre {len(items)} ítems ({len(scenes)} escenas)")
    return report


def render_stats_table(report):
    blocks = [f'items: {report.total}']
    for name, table in report.tables():
        rows = [[label, f'{share * 100:.2f}%'] for label, share in table.items()]
        blocks.append(tabulate(rows, headers=[name, 'share'], tablefmt='simple'))
    return '\n\n'.join(blocks) + '\n'
