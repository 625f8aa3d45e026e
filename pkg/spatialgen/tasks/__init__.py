"""
Tareas compuestas: camino más corto en rejilla y viajante
"""

from spatialgen.tasks.spp import PathCheck, check_path, gen_spp, grid_cells, solve_spp
from spatialgen.tasks.tsp import MAX_OBJECTS, gen_tsp, solve_tsp, tour_length

__all__ = [
    'PathCheck',
    'check_path',
    'gen_spp',
    'grid_cells',
    'solve_spp',
    'MAX_OBJECTS',
    'gen_tsp',
    'solve_tsp',
    'tour_length'
]
