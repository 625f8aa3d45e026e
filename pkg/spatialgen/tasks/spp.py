"""
Camino más corto en rejilla (SPP)
Generación con semilla, BFS exacto con conteo de caminos óptimos y el
verificador de validez compartido con el evaluador
"""
import logging
from collections import deque
from typing import NamedTuple, Optional

from spatialgen.extensions import GenerationExhausted, Unreachable
from spatialgen.models.tasks import SppInstance, SppSolution
from spatialgen.utils.helpers import make_rng, spp_id_for

logger = logging.getLogger(__name__)


class PathCheck(NamedTuple):
    valid: bool
    reason: Optional[str] = None
    steps: int = 0


def grid_cells(grid_n):
    return [(col, row) for row in range(grid_n) for col in range(grid_n)]


def gen_spp(seed, grid_n, index=0, obstacles=0, max_attempts=1000):
    """
    Instancia SPP determinista

    Args:
        seed: Semilla maestra
        grid_n: Tamaño de la rejilla (>= 2)
        index: Índice dentro del lote
        obstacles: Número de celdas bloqueadas (0 = rejilla libre)
        max_attempts: Intentos para colocar obstáculos sin desconectar

    Returns:
        SppInstance con inicio y fin distintos elegidos uniformemente
    """
    if grid_n < 2:
        raise ValueError("grid_n debe ser >= 2")
    cells = grid_cells(grid_n)
    if obstacles < 0 or obstacles > len(cells) - 2:
        raise ValueError(f"Número de obstáculos inválido: {obstacles}")

    rng = make_rng(seed, index, f'spp{grid_n}')
    start, end = rng.sample(cells, 2)
    instance_id = spp_id_for(seed, index, grid_n, obstacles)

    if not obstacles:
        return SppInstance(instance_id=instance_id, grid_n=grid_n, start=start, end=end, seed=seed)

    free = [cell for cell in cells if cell not in (start, end)]
    for attempt in range(1, max_attempts + 1):
        blocked = frozenset(rng.sample(free, obstacles))
        instance = SppInstance(
            instance_id=instance_id, grid_n=grid_n, start=start, end=end,
            obstacles=blocked, seed=seed,
        )
        if _bfs_layers(instance).get(end) is not None:
            return instance
        logger.debug(f"{instance_id}: obstáculos desconectan inicio y fin (intento {attempt})")

    raise GenerationExhausted(
        f"{max_attempts} intentos sin colocar {obstacles} obstáculos", index=index, attempts=max_attempts
    )


def _bfs_layers(instance):
    """Distancia BFS desde el inicio a cada celda alcanzable"""
    dist = {instance.start: 0}
    queue = deque([instance.start])
    while queue:
        cell = queue.popleft()
        for nxt in instance.neighbors(cell):
            if nxt not in dist:
                dist[nxt] = dist[cell] + 1
                queue.append(nxt)
    return dist


def solve_spp(instance):
    """
    Resuelve una instancia por BFS

    El conteo de caminos óptimos se hace sobre el DAG de capas BFS; el camino
    devuelto es el canónico (predecesor lexicográficamente menor en cada paso,
    reconstruido desde el fin).

    Raises:
        Unreachable si los obstáculos separan inicio y fin
    """
    dist = _bfs_layers(instance)
    if instance.end not in dist:
        raise Unreachable(f"{instance.instance_id}: fin {instance.end} inalcanzable")

    counts = {instance.start: 1}
    for cell in sorted(dist, key=dist.get):
        if cell == instance.start:
            continue
        counts[cell] = sum(
            counts.get(prev, 0)
            for prev in instance.neighbors(cell)
            if dist.get(prev) == dist[cell] - 1
        )

    path = [instance.end]
    while path[-1] != instance.start:
        cell = path[-1]
        path.append(min(
            prev for prev in instance.neighbors(cell) if dist.get(prev) == dist[cell] - 1
        ))
    path.reverse()

    return SppSolution(
        optimal_length=dist[instance.end],
        one_optimal_path=tuple(path),
        optimal_path_count=counts[instance.end],
    )


def check_path(instance, cells):
    """
    Valida un camino propuesto sobre la instancia

    Returns:
        PathCheck(valid, reason, steps)
    """
    cells = [tuple(cell) for cell in cells or ()]
    if not cells:
        return PathCheck(False, 'camino vacío')
    if cells[0] != tuple(instance.start):
        return PathCheck(False, f'no empieza en {instance.start}')
    if cells[-1] != tuple(instance.end):
        return PathCheck(False, f'no termina en {instance.end}')

    seen = set()
    for cell in cells:
        if not instance.in_grid(cell):
            return PathCheck(False, f'celda {cell} fuera de la rejilla')
        if cell in instance.obstacles:
            return PathCheck(False, f'atraviesa el obstáculo {cell}')
        if cell in seen:
            return PathCheck(False, f'revisita {cell}')
        seen.add(cell)

    for prev, cell in zip(cells, cells[1:]):
        if abs(prev[0] - cell[0]) + abs(prev[1] - cell[1]) != 1:
            return PathCheck(False, f'paso no 4-conexo {prev}->{cell}')

    return PathCheck(True, None, len(cells) - 1)
