"""
Instancias y soluciones de las tareas compuestas (SPP y TSP)
"""
from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from spatialgen.models.scene import SceneObject

Cell = Tuple[int, int]  # (col, row), filas de abajo hacia arriba


@dataclass(frozen=True)
class SppInstance:
    """Rejilla n x n con celdas de inicio y fin"""
    instance_id: str
    grid_n: int
    start: Cell
    end: Cell
    obstacles: FrozenSet[Cell] = field(default_factory=frozenset)
    seed: int = 0

    def __post_init__(self):
        if self.grid_n < 2:
            raise ValueError("grid_n debe ser >= 2")
        for cell in (self.start, self.end, *self.obstacles):
            if not self.in_grid(cell):
                raise ValueError(f"Celda {cell} fuera de la rejilla {self.grid_n}x{self.grid_n}")
        if tuple(self.start) == tuple(self.end):
            raise ValueError("start y end deben ser distintos")
        if self.start in self.obstacles or self.end in self.obstacles:
            raise ValueError("start/end no pueden ser obstáculos")

    def in_grid(self, cell):
        col, row = cell
        return 0 <= col < self.grid_n and 0 <= row < self.grid_n

    def neighbors(self, cell):
        """Vecinos 4-conexos transitables"""
        col, row = cell
        for dc, dr in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            nxt = (col + dc, row + dr)
            if self.in_grid(nxt) and nxt not in self.obstacles:
                yield nxt

    def to_dict(self):
        return {
            'instance_id': self.instance_id,
            'grid_n': self.grid_n,
            'start': list(self.start),
            'end': list(self.end),
            'obstacles': sorted([list(cell) for cell in self.obstacles]),
            'seed': self.seed,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            instance_id=data['instance_id'],
            grid_n=int(data['grid_n']),
            start=tuple(data['start']),
            end=tuple(data['end']),
            obstacles=frozenset(tuple(cell) for cell in data.get('obstacles', [])),
            seed=int(data.get('seed', 0)),
        )


@dataclass(frozen=True)
class SppSolution:
    optimal_length: int
    one_optimal_path: Tuple[Cell, ...]
    optimal_path_count: int

    def to_dict(self):
        return {
            'optimal_length': self.optimal_length,
            'one_optimal_path': [list(cell) for cell in self.one_optimal_path],
            'optimal_path_count': self.optimal_path_count,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            optimal_length=int(data['optimal_length']),
            one_optimal_path=tuple(tuple(cell) for cell in data['one_optimal_path']),
            optimal_path_count=int(data['optimal_path_count']),
        )


@dataclass(frozen=True)
class TspInstance:
    """Objetos etiquetados con objeto de inicio fijo"""
    instance_id: str
    objects: Tuple[SceneObject, ...]
    start_label: str
    seed: int = 0

    def __post_init__(self):
        if len(self.objects) < 3:
            raise ValueError("TSP requiere al menos 3 objetos")
        labels = self.labels
        if len(set(labels)) != len(labels):
            raise ValueError("Etiquetas duplicadas")
        points = [obj.point for obj in self.objects]
        if len(set(points)) != len(points):
            raise ValueError("Puntos repetidos")
        if self.start_label not in labels:
            raise ValueError(f"start_label {self.start_label} no existe")

    @property
    def labels(self):
        return [obj.label for obj in self.objects]

    def point(self, label):
        for obj in self.objects:
            if obj.label == label:
                return obj.point
        raise KeyError(label)

    def to_dict(self):
        return {
            'instance_id': self.instance_id,
            'objects': [obj.to_list() for obj in self.objects],
            'start_label': self.start_label,
            'seed': self.seed,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            instance_id=data['instance_id'],
            objects=tuple(SceneObject.from_list(item) for item in data['objects']),
            start_label=data['start_label'],
            seed=int(data.get('seed', 0)),
        )


@dataclass(frozen=True)
class TspSolution:
    order: Tuple[str, ...]
    tour_length: float

    def to_dict(self):
        return {'order': list(self.order), 'tour_length': self.tour_length}

    @classmethod
    def from_dict(cls, data):
        return cls(order=tuple(data['order']), tour_length=float(data['tour_length']))
