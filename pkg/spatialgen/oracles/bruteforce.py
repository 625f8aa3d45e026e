"""
Oráculos de fuerza bruta independientes
Solo dependen de los modelos de datos: nada de la geometría ni de los solvers
"""
import math
from dataclasses import dataclass
from itertools import permutations
from typing import Any

import numpy as np

PERMUTATION_BRUTEFORCE = 'permutation-bruteforce'
PATH_ENUMERATION = 'path-enumeration'
MONTE_CARLO = 'monte-carlo'
SCALAR_MATH = 'scalar-math'

MC_MIN_SAMPLES = 10 ** 6


@dataclass(frozen=True)
class OracleResult:
    value: Any
    method: str


def _length(a, b):
    dx = b.x - a.x
    dy = b.y - a.y
    return math.sqrt(dx * dx + dy * dy)


def brute_tsp(instance):
    """Longitud mínima del tour cerrado probando las (n-1)! permutaciones"""
    labels = instance.labels
    if len(labels) > 9:
        raise ValueError("brute_tsp admite a lo sumo 9 objetos")
    start = instance.start_label
    points = {obj.label: obj.point for obj in instance.objects}
    rest = [label for label in labels if label != start]

    best = math.inf
    for perm in permutations(rest):
        tour = (start, *perm, start)
        total = sum(_length(points[u], points[v]) for u, v in zip(tour, tour[1:]))
        best = min(best, total)
    return OracleResult(best, PERMUTATION_BRUTEFORCE)


def _steps(cell, grid_n, blocked):
    col, row = cell
    for nxt in ((col, row + 1), (col, row - 1), (col + 1, row), (col - 1, row)):
        if 0 <= nxt[0] < grid_n and 0 <= nxt[1] < grid_n and nxt not in blocked:
            yield nxt


def enumerate_simple_paths(instance, steps):
    """Todos los caminos simples de inicio a fin con exactamente `steps` pasos"""
    start, end = tuple(instance.start), tuple(instance.end)
    blocked = set(instance.obstacles)
    found = []

    def extend(path, seen):
        if len(path) - 1 == steps:
            if path[-1] == end:
                found.append(tuple(path))
            return
        if path[-1] == end:
            return
        for nxt in _steps(path[-1], instance.grid_n, blocked):
            if nxt not in seen:
                seen.add(nxt)
                path.append(nxt)
                extend(path, seen)
                path.pop()
                seen.remove(nxt)

    extend([start], {start})
    return found


def enumerate_shortest_paths(instance):
    """
    Conjunto completo de caminos óptimos por profundización iterativa

    Returns:
        OracleResult con un frozenset de caminos (tuplas de celdas)
    """
    if instance.grid_n > 6:
        raise ValueError("enumerate_shortest_paths admite rejillas de hasta 6x6")
    for depth in range(1, instance.grid_n * instance.grid_n):
        paths = enumerate_simple_paths(instance, depth)
        if paths:
            return OracleResult(frozenset(paths), PATH_ENUMERATION)
    return OracleResult(frozenset(), PATH_ENUMERATION)


def _quadrant_name(dx, dy):
    return f"{'top' if dy > 0 else 'bottom'}-{'right' if dx > 0 else 'left'}"


def sector_by_slopes(a, b, half_width):
    """
    Dirección de 8 sectores comparando pendientes (sin funciones angulares inversas)

    Un vector es cardinal si su componente transversal no supera
    tan(half_width) veces su componente sobre el eje.
    """
    dx = b.x - a.x
    dy = b.y - a.y
    if dx == 0 and dy == 0:
        raise ValueError("puntos idénticos")
    slope = math.tan(math.radians(half_width))
    if abs(dy) <= abs(dx) * slope:
        return OracleResult('right' if dx > 0 else 'left', SCALAR_MATH)
    if abs(dx) <= abs(dy) * slope:
        return OracleResult('top' if dy > 0 else 'bottom', SCALAR_MATH)
    return OracleResult(_quadrant_name(dx, dy), SCALAR_MATH)


def monte_carlo_sector_freq(cfg, samples=MC_MIN_SAMPLES, seed=0, canvas=1000):
    """
    Frecuencias empíricas de las 8 etiquetas para pares de puntos uniformes

    Args:
        cfg: Objeto con cardinal_half_width (grados)
        samples: Número de pares (>= 10^6)
        seed: Semilla del generador propio
    """
    if samples < MC_MIN_SAMPLES:
        raise ValueError(f"Se requieren al menos {MC_MIN_SAMPLES} muestras")
    rng = np.random.default_rng(seed)
    coords = rng.integers(0, canvas + 1, size=(samples, 4))
    dx = coords[:, 2] - coords[:, 0]
    dy = coords[:, 3] - coords[:, 1]
    keep = (dx != 0) | (dy != 0)
    dx, dy = dx[keep], dy[keep]

    angle = np.degrees(np.arctan2(dy, dx)) % 360.0
    half_width = cfg.cardinal_half_width

    def near(axis):
        diff = np.abs(angle - axis) % 360.0
        return np.minimum(diff, 360.0 - diff) <= half_width

    quadrants = np.array(['bottom-left', 'bottom-right', 'top-left', 'top-right'])
    labels = quadrants[(dy > 0).astype(int) * 2 + (dx > 0).astype(int)]
    for axis, name in ((0.0, 'right'), (90.0, 'top'), (180.0, 'left'), (270.0, 'bottom')):
        labels[near(axis)] = name

    names, counts = np.unique(labels, return_counts=True)
    total = counts.sum()
    table = {str(name): float(count / total) for name, count in zip(names, counts)}
    for name in ('top', 'bottom', 'left', 'right', 'top-left', 'top-right', 'bottom-left', 'bottom-right'):
        table.setdefault(name, 0.0)
    return OracleResult(table, MONTE_CARLO)


def region_area_shares(lower=0.4, upper=0.6):
    """Proporción de área de cada región para puntos uniformes en el lienzo"""
    bands = {'low': lower, 'mid': upper - lower, 'high': 1.0 - upper}
    vertical = {'low': 'bottom', 'mid': None, 'high': 'top'}
    horizontal = {'low': 'left', 'mid': None, 'high': 'right'}
    shares = {}
    for v_band, v_share in bands.items():
        for h_band, h_share in bands.items():
            parts = [name for name in (vertical[v_band], horizontal[h_band]) if name]
            shares['-'.join(parts) or 'center'] = v_share * h_share
    return OracleResult(shares, SCALAR_MATH)
