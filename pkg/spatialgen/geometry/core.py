"""
Predicados espaciales puros sobre el lienzo 1000x1000
Dirección por sectores, distancias, regiones y comparaciones
"""
import math
from dataclasses import dataclass
from typing import List, Tuple

from spatialgen.extensions import AmbiguousAxis, DegenerateInput, TieDetected
from spatialgen.models.geometry import DirectionLabel, RegionLabel, SectorConfig

DEFAULT_SECTORS = SectorConfig()


def relative_angle(a, b):
    """
    Ángulo del vector a->b en grados, marco y hacia arriba

    Returns:
        Ángulo en [0, 360)
    """
    dx = b.x - a.x
    dy = b.y - a.y
    if dx == 0 and dy == 0:
        raise DegenerateInput(f"Puntos idénticos {a}")
    return math.degrees(math.atan2(dy, dx)) % 360.0


def direction_sector(a, b, mode=8, cfg=None):
    """
    Etiqueta de dirección de b respecto de a

    Args:
        a: Punto de referencia
        b: Punto consultado
        mode: 8 (cardinales + diagonales) o 4 (solo diagonales)
        cfg: SectorConfig con el semiancho de los sectores cardinales

    Returns:
        DirectionLabel
    """
    cfg = cfg or DEFAULT_SECTORS
    dx = b.x - a.x
    dy = b.y - a.y
    if dx == 0 and dy == 0:
        raise DegenerateInput(f"Puntos idénticos {a}")

    if mode == 4:
        if dx == 0 or dy == 0:
            raise AmbiguousAxis(f"Vector ({dx}, {dy}) sobre un eje")
        return _quadrant(dx, dy)

    if mode != 8:
        raise ValueError(f"Modo de dirección inválido: {mode}")

    angle = relative_angle(a, b)
    half_width = cfg.cardinal_half_width
    for axis, label in ((0.0, DirectionLabel.RIGHT), (90.0, DirectionLabel.TOP),
                        (180.0, DirectionLabel.LEFT), (270.0, DirectionLabel.BOTTOM)):
        if circular_difference(angle, axis) <= half_width:
            return label
    return _quadrant(dx, dy)


def _quadrant(dx, dy):
    vertical = 'top' if dy > 0 else 'bottom'
    horizontal = 'right' if dx > 0 else 'left'
    return DirectionLabel(f'{vertical}-{horizontal}')


def circular_difference(alpha, beta):
    """Distancia angular mínima entre dos ángulos en grados"""
    diff = abs(alpha - beta) % 360.0
    return min(diff, 360.0 - diff)


def boundary_gap(a, b, cfg=None):
    """Distancia angular del vector a->b al borde de sector más cercano (4 y 8 sectores)"""
    cfg = cfg or DEFAULT_SECTORS
    angle = relative_angle(a, b)
    boundaries = set(cfg.boundaries(8)) | set(cfg.boundaries(4))
    return min(circular_difference(angle, boundary) for boundary in boundaries)


def euclidean_distance(a, b):
    """Distancia euclídea en unidades de lienzo"""
    return math.hypot(b.x - a.x, b.y - a.y)


def format_distance(value):
    """Distancias con un decimal en prompts y respuestas"""
    return f'{value:.1f}'


def region_of(p, lower=0.4, upper=0.6, canvas=1000):
    """
    Región (de 9) que contiene al punto, con intervalos semiabiertos

    Args:
        p: Punto
        lower: Umbral inferior como fracción del lienzo
        upper: Umbral superior como fracción del lienzo

    Returns:
        RegionLabel
    """
    if not 0 < lower < upper < 1:
        raise ValueError(f"Umbrales inválidos: {lower}, {upper}")

    horizontal = _band(p.x, lower * canvas, upper * canvas, ('left', None, 'right'))
    vertical = _band(p.y, lower * canvas, upper * canvas, ('bottom', None, 'top'))

    if horizontal is None and vertical is None:
        return RegionLabel.CENTER
    if vertical is None:
        return RegionLabel(horizontal)
    if horizontal is None:
        return RegionLabel(vertical)
    return RegionLabel(f'{vertical}-{horizontal}')


def _band(value, low, high, names):
    if value < low:
        return names[0]
    if value < high:
        return names[1]
    return names[2]


def region_boundary_gap(p, lower=0.4, upper=0.6, canvas=1000):
    """Distancia del punto a la línea de región más cercana"""
    lines = (lower * canvas, upper * canvas)
    return min(abs(coord - line) for coord in (p.x, p.y) for line in lines)


@dataclass(frozen=True)
class PairRanking:
    """Pares ordenados por distancia (estable) con argmin/argmax estrictos"""
    ordered: Tuple[Tuple[Tuple[str, str], float], ...]

    @property
    def argmin(self):
        return self.ordered[0][0]

    @property
    def argmax(self):
        return self.ordered[-1][0]

    def distance(self, pair):
        for candidate, value in self.ordered:
            if candidate == tuple(pair):
                return value
        raise KeyError(pair)

    @property
    def pairs(self) -> List[Tuple[str, str]]:
        return [pair for pair, _ in self.ordered]


def rank_pairs_by_distance(scene, pairs, tolerance=1.0):
    """
    Ordena pares de objetos por distancia euclídea

    Args:
        scene: Escena con los objetos
        pairs: Lista de pares (etiqueta, etiqueta), al menos 2
        tolerance: Diferencia mínima entre distancias para no considerarlas empate

    Returns:
        PairRanking

    Raises:
        TieDetected si dos distancias difieren menos que tolerance
    """
    pairs = [tuple(pair) for pair in pairs]
    if len(pairs) < 2:
        raise ValueError("Se requieren al menos 2 pares")

    measured = []
    for pair in pairs:
        try:
            first, second = scene.point(pair[0]), scene.point(pair[1])
        except KeyError as e:
            raise ValueError(f"Par {pair} no existe en la escena: {e}")
        measured.append((pair, euclidean_distance(first, second)))

    ordered = sorted(measured, key=lambda entry: entry[1])
    for (pair_a, dist_a), (pair_b, dist_b) in zip(ordered, ordered[1:]):
        if dist_b - dist_a < tolerance:
            raise TieDetected(
                f"Empate entre {pair_a} ({dist_a:.3f}) y {pair_b} ({dist_b:.3f})"
            )
    return PairRanking(ordered=tuple(ordered))
