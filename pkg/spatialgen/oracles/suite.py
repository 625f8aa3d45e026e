"""
Suite de verificación: compara los caminos rápidos con los oráculos
"""
import logging
import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np
from tabulate import tabulate

from spatialgen.evaluation.agents import PHRASING_STYLES, AgentSpec, respond
from spatialgen.evaluation.parsing import parse_response
from spatialgen.evaluation.scoring import aggregate, score_item, score_spp
from spatialgen.generation.instructions import build_eval_mcq, build_spp_prompt, build_tsp_prompt, image_ref_for
from spatialgen.generation.scenes import sample_batch
from spatialgen.geometry.core import direction_sector, region_of
from spatialgen.models.geometry import Point, SectorConfig
from spatialgen.models.items import MCQ_CAPABILITIES, SppItem, TspItem
from spatialgen.models.responses import ParsedResponse
from spatialgen.models.tasks import SppInstance
from spatialgen.oracles.bruteforce import (
    brute_tsp, enumerate_shortest_paths, enumerate_simple_paths, monte_carlo_sector_freq,
    region_area_shares, sector_by_slopes
)
from spatialgen.tasks.spp import gen_spp, grid_cells, solve_spp
from spatialgen.tasks.tsp import gen_tsp, solve_tsp

logger = logging.getLogger(__name__)

VERIFY_SEED = 20240601

DIAGONAL_RANGE = (0.17, 0.21)
CARDINAL_RANGE = (0.045, 0.08)
REGION_TOLERANCE = 0.015


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_held_karp(per_size):
    mismatches = 0
    for n in (5, 6, 7, 8):
        for index in range(per_size):
            instance = gen_tsp(VERIFY_SEED, n, index=index)
            fast = solve_tsp(instance).tour_length
            if not math.isclose(fast, brute_tsp(instance).value, rel_tol=1e-9):
                mismatches += 1
    return CheckResult('held-karp vs permutaciones', mismatches == 0,
                       f'{4 * per_size} instancias, {mismatches} diferencias')


def check_bfs_manhattan():
    failures = 0
    checked = 0
    for n in (4, 5):
        cells = grid_cells(n)
        for start, end in permutations(cells, 2):
            solution = solve_spp(SppInstance('check', n, start, end))
            dc, dr = abs(start[0] - end[0]), abs(start[1] - end[1])
            checked += 1
            if solution.optimal_length != dc + dr or solution.optimal_path_count != math.comb(dc + dr, dc):
                failures += 1
    return CheckResult('bfs vs manhattan', failures == 0, f'{checked} pares, {failures} fallos')


def _spp_sample(count):
    return [gen_spp(VERIFY_SEED, n, index=i) for n in (4, 5) for i in range(count)]


def check_path_counts(count):
    failures = 0
    instances = _spp_sample(count)
    for instance in instances:
        paths = enumerate_shortest_paths(instance).value
        if len(paths) != solve_spp(instance).optimal_path_count:
            failures += 1
    return CheckResult('conteo de caminos vs enumeración', failures == 0,
                       f'{len(instances)} instancias, {failures} fallos')


def check_scorer(count):
    failures = 0
    instances = _spp_sample(count)
    for instance in instances:
        solution = solve_spp(instance)
        optimal = enumerate_shortest_paths(instance).value
        detours = enumerate_simple_paths(instance, solution.optimal_length + 2)[:20]
        for path in optimal:
            if not score_spp(instance, solution, ParsedResponse.path(path)).is_correct:
                failures += 1
        for path in detours:
            if score_spp(instance, solution, ParsedResponse.path(path)).is_correct:
                failures += 1
    return CheckResult('score_spp vs conjunto óptimo', failures == 0,
                       f'{len(instances)} instancias, {failures} fallos')


def check_sectors(samples, scenes):
    cfg = SectorConfig()
    table = monte_carlo_sector_freq(cfg, samples, seed=VERIFY_SEED).value
    in_range = all(
        DIAGONAL_RANGE[0] <= share <= DIAGONAL_RANGE[1] if '-' in label
        else CARDINAL_RANGE[0] <= share <= CARDINAL_RANGE[1]
        for label, share in table.items()
    )
    disagreements = 0
    for scene in scenes:
        for a, b in permutations(scene.labels, 2):
            p, q = scene.point(a), scene.point(b)
            if direction_sector(p, q, 8, cfg).value != sector_by_slopes(p, q, cfg.cardinal_half_width).value:
                disagreements += 1
    shares = ', '.join(f'{label}={share:.3f}' for label, share in sorted(table.items()))
    return CheckResult('sectores (monte carlo + pendientes)', in_range and disagreements == 0,
                       f'{shares}; {disagreements} desacuerdos')


def check_regions(samples):
    expected = region_area_shares().value
    rng = np.random.default_rng(VERIFY_SEED)
    coords = rng.integers(0, 1001, size=(samples, 2))
    counts = {}
    for x, y in coords:
        label = region_of(Point(int(x), int(y))).value
        counts[label] = counts.get(label, 0) + 1
    worst = max(abs(counts.get(label, 0) / samples - share) for label, share in expected.items())
    return CheckResult('áreas de región', worst <= REGION_TOLERANCE, f'desvío máximo {worst:.4f}')


def check_oracle_closure(scenes, count):
    items = []
    for index, scene in enumerate(scenes):
        items.append(build_eval_mcq(scene, MCQ_CAPABILITIES[index % 3], VERIFY_SEED))
    for n in (4, 5):
        for index in range(count):
            instance = gen_spp(VERIFY_SEED, n, index=index)
            items.append(SppItem(instance.instance_id, build_spp_prompt(instance),
                                 image_ref_for(instance.instance_id), instance, solve_spp(instance)))
            tsp = gen_tsp(VERIFY_SEED, n, index=index)
            items.append(TspItem(tsp.instance_id, build_tsp_prompt(tsp),
                                 image_ref_for(tsp.instance_id), tsp, solve_tsp(tsp)))

    records = []
    for style in range(PHRASING_STYLES):
        agent = AgentSpec('oracle', seed=VERIFY_SEED, phrasing_style=style)
        for item in items:
            records.append(score_item(item, parse_response(item, respond(agent, item))))
    report = aggregate(records)
    worst = min(row.accuracy for row in report.rows)
    return CheckResult('agente oracle extremo a extremo', worst == 1.0,
                       f'{len(records)} respuestas, exactitud mínima {worst:.4f}')


def run_verification(quick=False):
    """
    Ejecuta todas las verificaciones

    Args:
        quick: Tamaños reducidos (para pruebas y CI)

    Returns:
        Lista de CheckResult
    """
    scale = 0.1 if quick else 1.0
    scenes = sample_batch(VERIFY_SEED, max(30, int(2000 * scale)))
    checks = [
        lambda: check_held_karp(max(5, int(200 * scale))),
        check_bfs_manhattan,
        lambda: check_path_counts(max(5, int(50 * scale))),
        lambda: check_scorer(max(5, int(50 * scale))),
        lambda: check_sectors(10 ** 6, scenes),
        lambda: check_regions(max(20000, int(100000 * scale))),
        lambda: check_oracle_closure(scenes[:max(30, int(300 * scale))], max(5, int(100 * scale))),
    ]
    results = []
    for check in checks:
        result = check()
        log = logger.info if result.passed else logger.error
        log(f"{result.name}: {'OK' if result.passed else 'FALLO'} ({result.detail})")
        results.append(result)
    return results


def render_verification(results):
    rows = [[r.name, 'ok' if r.passed else 'FAIL', r.detail] for r in results]
    return tabulate(rows, headers=['check', 'status', 'detail'], tablefmt='simple') + '\n'
