"""
Modelos de dominio de spatialgen
Centraliza todos los tipos para facilitar imports
"""
from spatialgen.models.geometry import (
    Point, DirectionLabel, RegionLabel, SectorConfig,
    DIAGONAL_LABELS, CARDINAL_LABELS
)

from spatialgen.models.scene import Scene, SceneObject, GenConfig

from spatialgen.models.tasks import (
    SppInstance, SppSolution, TspInstance, TspSolution
)

from spatialgen.models.items import (
    InstructionItem, McqItem, SppItem, TspItem
)

from spatialgen.models.responses import ParsedResponse

from spatialgen.models.evaluation import EvalRecord, ReportRow, RunReport

# Exportar todos los modelos
__all__ = [
    # Geometría
    'Point', 'DirectionLabel', 'RegionLabel', 'SectorConfig',
    'DIAGONAL_LABELS', 'CARDINAL_LABELS',

    # Escenas
    'Scene', 'SceneObject', 'GenConfig',

    # Tareas compuestas
    'SppInstance', 'SppSolution', 'TspInstance', 'TspSolution',

    # Ítems
    'InstructionItem', 'McqItem', 'SppItem', 'TspItem',

    # Evaluación
    'ParsedResponse', 'EvalRecord', 'ReportRow', 'RunReport'
]
