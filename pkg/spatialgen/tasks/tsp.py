"""
Viajante (TSP) sobre objetos etiquetados con inicio fijo
Held-Karp exacto y orden canónico entre tours de igual longitud
"""
import logging
import math
from functools import lru_cache

from spatialgen.extensions import TooLarge
from spatialgen.generation.scenes import sample_valid_points
from spatialgen.models.scene import GenConfig, SceneObject
from spatialgen.models.tasks import TspInstance, TspSolution
from spatialgen.utils.helpers import make_rng, object_labels, tsp_id_for

logger = logging.getLogger(__name__)

MAX_OBJECTS = 12
MIN_OBJECTS = 3


def gen_tsp(seed, n_objects, index=0, cfg=None):
    """
    Instancia TSP determinista

    Los puntos se muestrean como en las escenas, con la misma separación
    mínima; el objeto de inicio se elige con el mismo RNG.

    Raises:
        GenerationExhausted si no se logra la separación
    """
    if not MIN_OBJECTS <= n_objects <= MAX_OBJECTS:
        raise ValueError(f"n_objects debe estar entre {MIN_OBJECTS} y {MAX_OBJECTS}")
    cfg = cfg or GenConfig()
    rng = make_rng(seed, index, f'tsp{n_objects}')
    points = sample_valid_points(rng, n_objects, cfg, index=index, separation_only=True)
    labels = object_labels(n_objects)
    objects = tuple(SceneObject(label=label, point=point) for label, point in zip(labels, points))
    return TspInstance(
        instance_id=tsp_id_for(seed, index, n_objects),
        objects=objects,
        start_label=rng.choice(labels),
        seed=seed,
    )


def tour_length(instance, order):
    """Longitud del tour cerrado (vuelve al inicio)"""
    points = [instance.point(label) for label in order]
    return sum(
        math.hypot(b.x - a.x, b.y - a.y)
        for a, b in zip(points, points[1:] + points[:1])
    )


def solve_tsp(instance, max_objects=MAX_OBJECTS):
    """
    Held-Karp con inicio fijo

    Se calcula el costo de completar el tour desde cada (visitados, actual) y
    luego se reconstruye eligiendo siempre la etiqueta menor que mantiene el
    óptimo: el resultado es el orden lexicográficamente menor.

    Raises:
        TooLarge si hay más de max_objects objetos
    """
    n = len(instance.objects)
    if n > max_objects:
        raise TooLarge(f"Held-Karp limitado a {max_objects} objetos (recibidos {n})")

    labels = sorted(instance.labels)
    points = [instance.point(label) for label in labels]
    dist = [[math.hypot(q.x - p.x, q.y - p.y) for q in points] for p in points]
    start = labels.index(instance.start_label)
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def remaining(visited, current):
        if visited == full:
            return dist[current][start]
        return min(
            dist[current][nxt] + remaining(visited | (1 << nxt), nxt)
            for nxt in range(n)
            if not visited & (1 << nxt)
        )

    optimum = remaining(1 << start, start)
    tolerance = 1e-9 * max(1.0, optimum)

    order = [start]
    visited = 1 << start
    while visited != full:
        current = order[-1]
        target = remaining(visited, current)
        for nxt in range(n):
            if visited & (1 << nxt):
                continue
            if dist[current][nxt] + remaining(visited | (1 << nxt), nxt) <= target + tolerance:
                order.append(nxt)
                visited |= 1 << nxt
                break

    remaining.cache_clear()
    result = tuple(labels[i] for i in order)
    return TspSolution(order=result, tour_length=tour_length(instance, result))
