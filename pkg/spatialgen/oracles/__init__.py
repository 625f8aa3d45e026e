"""
Oráculos de fuerza bruta y suite de verificación
"""

from spatialgen.oracles.bruteforce import (
    OracleResult,
    brute_tsp,
    enumerate_shortest_paths,
    enumerate_simple_paths,
    monte_carlo_sector_freq,
    region_area_shares,
    sector_by_slopes
)
from spatialgen.oracles.suite import CheckResult, render_verification, run_verification

__all__ = [
    'OracleResult',
    'brute_tsp',
    'enumerate_shortest_paths',
    'enumerate_simple_paths',
    'monte_carlo_sector_freq',
    'region_area_shares',
    'sector_by_slopes',
    'CheckResult',
    'render_verification',
    'run_verification'
]
