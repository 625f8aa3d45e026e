"""
Veredictos por ítem y reporte agregado de una corrida de evaluación
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

import orjson

CORRECT = 'correct'
INCORRECT = 'incorrect'
INVALID = 'invalid'
UNPARSEABLE = 'unparseable'

VERDICTS = (CORRECT, INCORRECT, INVALID, UNPARSEABLE)

STRICT = 'strict'
LENGTH_OPTIMAL = 'length-optimal'
SCORING_MODES = (STRICT, LENGTH_OPTIMAL)


@dataclass(frozen=True)
class EvalRecord:
    item_id: str
    task: str
    verdict: str
    detail: str = ''
    config: Tuple[Tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"Veredicto desconocido: {self.verdict}")

    @property
    def config_label(self):
        """Etiqueta estable de la configuración ('grid_n=4', ...)"""
        return ','.join(f'{key}={value}' for key, value in self.config) or '-'

    @property
    def is_correct(self):
        return self.verdict == CORRECT

    def to_dict(self):
        return {
            'item_id': self.item_id,
            'task': self.task,
            'verdict': self.verdict,
            'detail': self.detail,
            'config': dict(self.config),
        }


@dataclass(frozen=True)
class ReportRow:
    """Una fila por (tarea, configuración)"""
    task: str
    config: str
    total: int
    breakdown: Dict[str, int] = field(default_factory=dict)

    @property
    def correct(self):
        return self.breakdown.get(CORRECT, 0)

    @property
    def accuracy(self):
        return self.correct / self.total if self.total else 0.0

    def to_dict(self):
        return {
            'task': self.task,
            'config': self.config,
            'total': self.total,
            'correct': self.correct,
            'accuracy': self.accuracy,
            'breakdown': {verdict: self.breakdown.get(verdict, 0) for verdict in VERDICTS},
        }


@dataclass(frozen=True)
class RunReport:
    rows: Tuple[ReportRow, ...]
    scoring_mode: str = STRICT

    def row(self, task, config=None):
        for row in self.rows:
            if row.task == task and (config is None or row.config == config):
                return row
        raise KeyError((task, config))

    def accuracy(self, task):
        """Exactitud de una tarea sumando todas sus configuraciones"""
        rows = [row for row in self.rows if row.task == task]
        total = sum(row.total for row in rows)
        if not total:
            raise KeyError(task)
        return sum(row.correct for row in rows) / total

    @property
    def total(self):
        return sum(row.total for row in self.rows)

    def to_dict(self):
        return {
            'scoring_mode': self.scoring_mode,
            'total': self.total,
            'rows': [row.to_dict() for row in self.rows],
        }

    def to_json(self):
        return orjson.dumps(self.to_dict(), option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2) + b'\n'
