"""
Respuesta estructurada extraída del texto libre de un modelo
"""
from dataclasses import dataclass
from typing import Optional, Tuple

MCQ_CHOICE = 'mcq_choice'
CELL_PATH = 'cell_path'
VISIT_ORDER = 'visit_order'
UNPARSEABLE = 'unparseable'


@dataclass(frozen=True)
class ParsedResponse:
    kind: str
    choice: Optional[str] = None
    cells: Optional[Tuple[Tuple[int, int], ...]] = None
    order: Optional[Tuple[str, ...]] = None
    diagnostics: str = ''

    def __post_init__(self):
        payloads = {
            MCQ_CHOICE: self.choice,
            CELL_PATH: self.cells,
            VISIT_ORDER: self.order,
        }
        if self.kind == UNPARSEABLE:
            if any(value is not None for value in payloads.values()):
                raise ValueError("Una respuesta no parseable no lleva payload")
            if not self.diagnostics:
                raise ValueError("Una respuesta no parseable requiere diagnóstico")
            return
        if self.kind not in payloads:
            raise ValueError(f"Tipo de respuesta desconocido: {self.kind}")
        populated = [kind for kind, value in payloads.items() if value is not None]
        if populated != [self.kind]:
            raise ValueError(f"Payload inconsistente para {self.kind}")

    @classmethod
    def mcq(cls, choice, diagnostics=''):
        return cls(kind=MCQ_CHOICE, choice=choice, diagnostics=diagnostics)

    @classmethod
    def path(cls, cells, diagnostics=''):
        return cls(kind=CELL_PATH, cells=tuple(tuple(cell) for cell in cells), diagnostics=diagnostics)

    @classmethod
    def visit(cls, order, diagnostics=''):
        return cls(kind=VISIT_ORDER, order=tuple(order), diagnostics=diagnostics)

    @classmethod
    def unparseable(cls, diagnostics):
        return cls(kind=UNPARSEABLE, diagnostics=diagnostics)

    @property
    def is_unparseable(self):
        return self.kind == UNPARSEABLE
