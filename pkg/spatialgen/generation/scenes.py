"""
Generador de escenas con semilla
Muestreo por rechazo de escenas completas: toda escena aceptada admite
ground truth sin ambigüedad (sin empates ni vectores sobre bordes de sector)
"""
import logging
from functools import partial
from itertools import combinations

from spatialgen.extensions import GenerationExhausted, TieDetected
from spatialgen.geometry.core import (
    boundary_gap, euclidean_distance, region_boundary_gap, rank_pairs_by_distance
)
from spatialgen.models.geometry import CANVAS_MAX, CANVAS_MIN, Point
from spatialgen.models.scene import GenConfig, Scene, SceneObject
from spatialgen.utils.helpers import make_rng, object_labels, scene_id_for
from spatialgen.utils.performance import batch_process, timed

logger = logging.getLogger(__name__)


def sample_points(rng, count, cfg):
    """Un intento: count puntos uniformes enteros sobre el lienzo"""
    return [
        Point(rng.randint(CANVAS_MIN, CANVAS_MAX), rng.randint(CANVAS_MIN, CANVAS_MAX))
        for _ in range(count)
    ]


def violation(points, cfg, separation_only=False):
    """
    Primera regla violada por un conjunto de puntos, o None

    Reglas: separación mínima, margen a las líneas de región, franja de
    exclusión alrededor de bordes de sector y ausencia de empates de distancia.
    Con separation_only solo se exige la separación mínima (instancias TSP).
    """
    if separation_only:
        for a, b in combinations(points, 2):
            if euclidean_distance(a, b) < cfg.min_separation:
                return f'separación {a}-{b}'
        return None

    for point in points:
        if region_boundary_gap(point, cfg.region_lower, cfg.region_upper) < cfg.region_margin:
            return f'margen de región {point}'

    for a, b in combinations(points, 2):
        if euclidean_distance(a, b) < cfg.min_separation:
            return f'separación {a}-{b}'
        if boundary_gap(a, b, cfg.sector) < cfg.sector.epsilon_exclusion:
            return f'borde de sector {a}->{b}'

    if len(points) >= 3:
        objects = tuple(SceneObject(label, point) for label, point in zip(object_labels(len(points)), points))
        candidate = Scene(scene_id='candidate', seed=0, index=0, objects=objects)
        try:
            rank_pairs_by_distance(candidate, candidate.pairs(), tolerance=cfg.tie_tolerance)
        except TieDetected as e:
            return f'empate {e.message}'
    return None


def sample_valid_points(rng, count, cfg, index=None, separation_only=False):
    """
    Repite intentos completos hasta cumplir todas las reglas

    Raises:
        GenerationExhausted tras cfg.max_attempts intentos
    """
    for attempt in range(1, cfg.max_attempts + 1):
        points = sample_points(rng, count, cfg)
        reason = violation(points, cfg, separation_only)
        if reason is None:
            if attempt > 1:
                logger.debug(f"Índice {index}: aceptado tras {attempt} intentos")
            return points
        logger.debug(f"Índice {index}: intento {attempt} rechazado ({reason})")

    raise GenerationExhausted(
        f"{cfg.max_attempts} intentos sin escena válida (configuración demasiado estricta)",
        index=index,
        attempts=cfg.max_attempts,
    )


def sample_scene(master_seed, index, cfg=None):
    """
    Escena determinista para (master_seed, index, cfg)

    Args:
        master_seed: Semilla maestra de 64 bits
        index: Índice de la escena en el lote
        cfg: GenConfig

    Returns:
        Scene
    """
    cfg = cfg or GenConfig()
    rng = make_rng(master_seed, index, 'scene')
    low, high = cfg.n_objects
    count = rng.randint(low, high)
    points = sample_valid_points(rng, count, cfg, index=index)
    objects = tuple(
        SceneObject(label=label, point=point)
        for label, point in zip(object_labels(count), points)
    )
    return Scene(scene_id=scene_id_for(master_seed, index), seed=master_seed, index=index, objects=objects)


def _scene_at(index, master_seed, cfg):
    return sample_scene(master_seed, index, cfg)


@timed('sample_batch')
def sample_batch(master_seed, count, cfg=None, workers=1):
    """
    Lote de escenas: equivale a [sample_scene(master_seed, i, cfg) for i in range(count)]

    Args:
        master_seed: Semilla maestra
        count: Número de escenas (>= 1)
        cfg: GenConfig
        workers: Procesos para el reparto; no afecta al resultado
    """
    if count < 1:
        raise ValueError("count debe ser >= 1")
    cfg = cfg or GenConfig()
    logger.info(f"Generando {count} escenas (seed={master_seed}, workers={workers})")
    return batch_process(range(count), partial(_scene_at, master_seed=master_seed, cfg=cfg), workers=workers)
