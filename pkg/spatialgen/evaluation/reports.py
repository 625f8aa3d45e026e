"""
Salida de reportes: JSON estable y tabla de texto alineada (tabulate)
"""
import logging
import os

from tabulate import tabulate

from spatialgen.models.evaluation import VERDICTS
from spatialgen.models.items import DIRECTION, DISTANCE_COMPARE, LOCALIZATION_REGION, TASK_MCQ, TASK_SPP, TASK_TSP
from spatialgen.utils.helpers import atomic_write

logger = logging.getLogger(__name__)

# Columnas de la tabla resumen: (título, tarea, configuración)
BENCHMARK_COLUMNS = (
    ('Dir', TASK_MCQ, f'capability={DIRECTION}'),
    ('Dist', TASK_MCQ, f'capability={DISTANCE_COMPARE}'),
    ('Loc', TASK_MCQ, f'capability={LOCALIZATION_REGION}'),
    ('SPP 4Grid', TASK_SPP, 'grid_n=4'),
    ('SPP 5Grid', TASK_SPP, 'grid_n=5'),
    ('TSP 4Obj', TASK_TSP, 'n_objects=4'),
    ('TSP 5Obj', TASK_TSP, 'n_objects=5'),
)


def report_to_json(report):
    return report.to_json()


def summary_row(report):
    """Exactitud en % por columna del resumen ('-' si no hay datos)"""
    values = []
    for _, task, config in BENCHMARK_COLUMNS:
        try:
            values.append(f'{report.row(task, config).accuracy * 100:.1f}')
        except KeyError:
            values.append('-')
    return values


def render_report_table(report):
    """Tabla por (tarea, configuración) seguida del resumen en columnas"""
    headers = ['task', 'config', 'total', 'accuracy', *VERDICTS]
    rows = [
        [row.task, row.config, row.total, f'{row.accuracy:.4f}', *(row.breakdown.get(v, 0) for v in VERDICTS)]
        for row in report.rows
    ]
    detail = tabulate(rows, headers=headers, tablefmt='simple')
    summary = tabulate([summary_row(report)], headers=[title for title, _, _ in BENCHMARK_COLUMNS], tablefmt='simple')
    return f'scoring mode: {report.scoring_mode}\n\n{detail}\n\n{summary}\n'


def write_report(report, path):
    """
    Escribe report.json y report.txt

    Args:
        path: Ruta del JSON; el texto va al mismo nombre con extensión .txt
    """
    base, ext = os.path.splitext(os.fspath(path))
    json_path = path if ext == '.json' else f'{base}.json'
    text_path = f'{base}.txt'
    atomic_write(json_path, report_to_json(report))
    atomic_write(text_path, render_report_table(report).encode('utf-8'))
    logger.info(f"Reporte escrito en {json_path} y {text_path}")
    return json_path, text_path
