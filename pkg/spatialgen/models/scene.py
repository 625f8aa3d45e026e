"""
Escenas: conjuntos de objetos etiquetados sobre el lienzo
"""
from dataclasses import dataclass, field
from typing import Tuple

from spatialgen.models.geometry import Point, SectorConfig

CANVAS = (1000, 1000)


@dataclass(frozen=True)
class SceneObject:
    label: str
    point: Point

    def to_list(self):
        return [self.label, self.point.x, self.point.y]

    @classmethod
    def from_list(cls, data):
        label, x, y = data
        return cls(label=label, point=Point(int(x), int(y)))


@dataclass(frozen=True)
class Scene:
    """
    Conjunto de objetos etiquetados (A, B, C...) muestreado con semilla

    El linaje (seed, index) permite regenerar la escena de forma aislada.
    """
    scene_id: str
    seed: int
    index: int
    objects: Tuple[SceneObject, ...]
    canvas: Tuple[int, int] = CANVAS

    def __post_init__(self):
        labels = self.labels
        if len(set(labels)) != len(labels):
            raise ValueError(f"Etiquetas duplicadas en {self.scene_id}")

    @property
    def labels(self):
        return [obj.label for obj in self.objects]

    def point(self, label):
        """Coordenadas de un objeto por etiqueta"""
        for obj in self.objects:
            if obj.label == label:
                return obj.point
        raise KeyError(f"Objeto {label} no existe en {self.scene_id}")

    def pairs(self):
        """Pares no ordenados (i < j) en orden de muestreo"""
        labels = self.labels
        return [
            (labels[i], labels[j])
            for i in range(len(labels))
            for j in range(i + 1, len(labels))
        ]

    def to_dict(self):
        return {
            'scene_id': self.scene_id,
            'seed': self.seed,
            'index': self.index,
            'objects': [obj.to_list() for obj in self.objects],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            scene_id=data['scene_id'],
            seed=int(data['seed']),
            index=int(data['index']),
            objects=tuple(SceneObject.from_list(item) for item in data['objects']),
        )

    def __repr__(self):
        return f'<Scene {self.scene_id} n={len(self.objects)}>'


@dataclass(frozen=True)
class GenConfig:
    """Parámetros del generador de escenas"""
    n_objects: Tuple[int, int] = (5, 5)
    min_separation: float = 80.0
    region_margin: int = 5
    tie_tolerance: float = 1.0
    sector: SectorConfig = field(default_factory=SectorConfig)
    region_lower: float = 0.4
    region_upper: float = 0.6
    max_attempts: int = 1000

    def __post_init__(self):
        low, high = self.n_objects
        if low < 2 or high < low:
            raise ValueError(f"Rango de objetos inválido: {self.n_objects}")
        if high > 26:
            raise ValueError("Máximo 26 objetos (etiquetas A-Z)")
        if self.min_separation <= 0:
            raise ValueError("min_separation debe ser positivo")
        if self.max_attempts < 1:
            raise ValueError("max_attempts debe ser >= 1")
        if not 0 < self.region_lower < self.region_upper < 1:
            raise ValueError("Umbrales de región inválidos")

    @property
    def regions(self):
        return self.region_lower, self.region_upper

    @classmethod
    def from_config(cls, settings, **overrides):
        """Construye GenConfig desde la configuración de la app"""
        values = dict(
            n_objects=tuple(settings.get('N_OBJECTS', (5, 5))),
            min_separation=settings.get('MIN_SEPARATION', 80.0),
            region_margin=settings.get('REGION_MARGIN', 5),
            tie_tolerance=settings.get('TIE_TOLERANCE', 1.0),
            sector=SectorConfig(
                cardinal_half_width=settings.get('SECTOR_HALF_WIDTH', 11.25),
                epsilon_exclusion=settings.get('SECTOR_EPSILON', 1.0),
            ),
            region_lower=settings.get('REGION_LOWER', 0.4),
            region_upper=settings.get('REGION_UPPER', 0.6),
            max_attempts=settings.get('MAX_ATTEMPTS', 1000),
        )
        values.update(overrides)
        return cls(**values)
