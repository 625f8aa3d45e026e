"""
Núcleo geométrico: dirección, distancia, localización
"""
from spatialgen.geometry.core import (
    direction_sector,
    euclidean_distance,
    format_distance,
    region_of,
    rank_pairs_by_distance,
    relative_angle,
    boundary_gap,
    region_boundary_gap,
    PairRanking
)

__all__ = [
    'direction_sector',
    'euclidean_distance',
    'format_distance',
    'region_of',
    'rank_pairs_by_distance',
    'relative_angle',
    'boundary_gap',
    'region_boundary_gap',
    'PairRanking'
]
