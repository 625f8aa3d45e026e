"""
Utilidades para spatialgen
Funciones y clases de apoyo reutilizables
"""

from spatialgen.utils.helpers import (
    derive_seed,
    make_rng,
    scene_id_for,
    spp_id_for,
    tsp_id_for,
    Lineage,
    parse_lineage,
    object_labels,
    format_cell,
    format_point,
    atomic_write
)

from spatialgen.utils.performance import (
    batch_process,
    timed
)

__all__ = [
    # Helpers
    'derive_seed',
    'make_rng',
    'scene_id_for',
    'spp_id_for',
    'tsp_id_for',
    'Lineage',
    'parse_lineage',
    'object_labels',
    'format_cell',
    'format_point',
    'atomic_write',

    # Performance
    'batch_process',
    'timed'
]
