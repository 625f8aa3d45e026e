"""
Calificación de respuestas parseadas y agregación por (tarea, configuración)
"""
import logging
import math
from collections import Counter, OrderedDict

from spatialgen.extensions import EmptyRun, TaskMismatch
from spatialgen.models.evaluation import (
    CORRECT, INCORRECT, INVALID, LENGTH_OPTIMAL, SCORING_MODES, STRICT, UNPARSEABLE,
    EvalRecord, ReportRow, RunReport
)
from spatialgen.models.items import TASK_MCQ, TASK_SPP, TASK_TSP
from spatialgen.models.responses import CELL_PATH, MCQ_CHOICE, VISIT_ORDER
from spatialgen.tasks.spp import check_path
from spatialgen.tasks.tsp import tour_length

logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 1e-6


def _expect(parsed, kind, task):
    if parsed.is_unparseable:
        return False
    if parsed.kind != kind:
        raise TaskMismatch(f"Respuesta {parsed.kind} no corresponde a la tarea {task}")
    return True


def score_mcq(item, parsed):
    """Correcta si la letra coincide con answer_key"""
    config = (('capability', item.capability),)
    if not _expect(parsed, MCQ_CHOICE, TASK_MCQ):
        return EvalRecord(item.item_id, TASK_MCQ, UNPARSEABLE, parsed.diagnostics, config)
    verdict = CORRECT if parsed.choice == item.answer_key else INCORRECT
    return EvalRecord(item.item_id, TASK_MCQ, verdict, f'{parsed.choice} vs {item.answer_key}', config)


def score_spp(instance, solution, parsed, item_id=None):
    """
    Inválida si el camino no es un recorrido 4-conexo simple de inicio a fin
    sin obstáculos; si es válido, correcta iff su longitud es la óptima
    """
    item_id = item_id or instance.instance_id
    config = (('grid_n', instance.grid_n),)
    if not _expect(parsed, CELL_PATH, TASK_SPP):
        return EvalRecord(item_id, TASK_SPP, UNPARSEABLE, parsed.diagnostics, config)

    check = check_path(instance, parsed.cells)
    if not check.valid:
        return EvalRecord(item_id, TASK_SPP, INVALID, check.reason, config)
    verdict = CORRECT if check.steps == solution.optimal_length else INCORRECT
    return EvalRecord(item_id, TASK_SPP, verdict, f'{check.steps} pasos (óptimo {solution.optimal_length})', config)


def score_tsp(instance, solution, parsed, mode=STRICT, item_id=None, tolerance=RELATIVE_TOLERANCE):
    """
    strict: correcta iff el orden coincide con el canónico del solver
    length-optimal: correcta iff la longitud del tour es la óptima (tolerancia relativa)
    """
    if mode not in SCORING_MODES:
        raise ValueError(f"Modo de calificación desconocido: {mode}")
    item_id = item_id or instance.instance_id
    config = (('n_objects', len(instance.objects)),)
    if not _expect(parsed, VISIT_ORDER, TASK_TSP):
        return EvalRecord(item_id, TASK_TSP, UNPARSEABLE, parsed.diagnostics, config)

    order = list(parsed.order)
    labels = instance.labels
    if sorted(order) != sorted(labels) or len(order) != len(labels):
        return EvalRecord(item_id, TASK_TSP, INVALID, 'no es una permutación de todas las etiquetas', config)
    if order[0] != instance.start_label:
        return EvalRecord(item_id, TASK_TSP, INVALID, f'no empieza en {instance.start_label}', config)

    if mode == STRICT:
        ok = tuple(order) == tuple(solution.order)
        detail = 'orden exacto' if ok else 'orden distinto al canónico'
    else:
        length = tour_length(instance, order)
        ok = math.isclose(length, solution.tour_length, rel_tol=tolerance)
        detail = f'longitud {length:.3f} (óptima {solution.tour_length:.3f})'
    return EvalRecord(item_id, TASK_TSP, CORRECT if ok else INCORRECT, detail, config)


def score_item(item, parsed, mode=STRICT, tolerance=RELATIVE_TOLERANCE):
    """Despacha por tipo de ítem"""
    if item.task == TASK_MCQ:
        return score_mcq(item, parsed)
    if item.task == TASK_SPP:
        return score_spp(item.instance, item.solution, parsed, item.item_id)
    if item.task == TASK_TSP:
        return score_tsp(item.instance, item.solution, parsed, mode, item.item_id, tolerance)
    raise ValueError(f"Tarea desconocida: {item.task}")


def aggregate(records, scoring_mode=STRICT):
    """
    Exactitud e histograma de veredictos por (tarea, configuración)

    Raises:
        EmptyRun si no hay registros
    """
    records = list(records)
    if not records:
        raise EmptyRun("No hay registros para agregar")

    groups = OrderedDict()
    for record in sorted(records, key=lambda r: (r.task, r.config_label)):
        groups.setdefault((record.task, record.config_label), Counter())[record.verdict] += 1

    rows = tuple(
        ReportRow(task=task, config=config, total=sum(counts.values()), breakdown=dict(counts))
        for (task, config), counts in groups.items()
    )
    report = RunReport(rows=rows, scoring_mode=scoring_mode)
    for row in rows:
        logger.info(f"{row.task} [{row.config}]: {row.correct}/{row.total} = {row.accuracy:.3f}")
    return report
