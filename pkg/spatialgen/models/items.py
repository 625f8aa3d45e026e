"""
Ítems de instrucción (entrenamiento) y de evaluación
"""
from dataclasses import dataclass, field
from typing import Optional, Tuple

from spatialgen.models.scene import Scene
from spatialgen.models.tasks import SppInstance, SppSolution, TspInstance, TspSolution

# Capacidades del bundle de entrenamiento
DIRECTION = 'direction'
DISTANCE_COMPARE = 'distance-compare'
DISTANCE_NUMERIC = 'distance-numeric'
LOCALIZATION_REGION = 'localization-region'
LOCALIZATION_COORDINATE = 'localization-coordinate'
SCENE_DESCRIPTION = 'scene-description'

CAPABILITIES = (
    DIRECTION,
    DISTANCE_COMPARE,
    DISTANCE_NUMERIC,
    LOCALIZATION_REGION,
    LOCALIZATION_COORDINATE,
    SCENE_DESCRIPTION,
)
MCQ_CAPABILITIES = (DIRECTION, DISTANCE_COMPARE, LOCALIZATION_REGION)

# Tareas de evaluación
TASK_MCQ = 'basic-mcq'
TASK_SPP = 'spp'
TASK_TSP = 'tsp'

OPTION_LETTERS = ('A', 'B', 'C', 'D')


@dataclass(frozen=True)
class InstructionItem:
    item_id: str
    scene_id: str
    capability: str
    prompt: str
    answer: str
    image_ref: str
    meta: dict = field(default_factory=dict, compare=False)
    scene: Optional[Scene] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.capability not in CAPABILITIES:
            raise ValueError(f"Capacidad desconocida: {self.capability}")


@dataclass(frozen=True)
class McqItem:
    """Pregunta de opción múltiple con exactamente 4 opciones"""
    item_id: str
    scene_id: str
    capability: str
    prompt: str
    answer: str
    image_ref: str
    options: Tuple[str, ...]
    answer_key: str
    meta: dict = field(default_factory=dict, compare=False)
    scene: Optional[Scene] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.capability not in MCQ_CAPABILITIES:
            raise ValueError(f"Capacidad no soportada para MCQ: {self.capability}")
        if len(self.options) != 4:
            raise ValueError("Se requieren exactamente 4 opciones")
        if len(set(self.options)) != 4:
            raise ValueError("Opciones repetidas")
        if self.answer_key not in OPTION_LETTERS:
            raise ValueError(f"answer_key inválida: {self.answer_key}")
        if self.options[OPTION_LETTERS.index(self.answer_key)] != self.answer:
            raise ValueError("answer_key no apunta a la respuesta correcta")

    @property
    def task(self):
        return TASK_MCQ

    def option_for(self, letter):
        return self.options[OPTION_LETTERS.index(letter)]


@dataclass(frozen=True)
class SppItem:
    item_id: str
    prompt: str
    image_ref: str
    instance: SppInstance
    solution: SppSolution

    @property
    def task(self):
        return TASK_SPP


@dataclass(frozen=True)
class TspItem:
    item_id: str
    prompt: str
    image_ref: str
    instance: TspInstance
    solution: TspSolution

    @property
    def task(self):
        return TASK_TSP
