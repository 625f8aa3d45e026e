"""
Serialización del dataset, validación y estadísticas
"""

from spatialgen.dataset.io import (
    MANIFEST_NAME,
    item_to_record,
    record_to_item,
    read_manifest,
    read_records,
    read_responses,
    validate_record,
    write_dataset,
    write_responses
)
from spatialgen.dataset.stats import StatsReport, compute_stats, render_stats_table

__all__ = [
    'MANIFEST_NAME',
    'item_to_record',
    'record_to_item',
    'read_manifest',
    'read_records',
    'read_responses',
    'validate_record',
    'write_dataset',
    'write_responses',
    'StatsReport',
    'compute_stats',
    'render_stats_table'
]
