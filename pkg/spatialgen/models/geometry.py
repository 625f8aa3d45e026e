"""
Tipos geométricos básicos: puntos, etiquetas de dirección y de región
"""
from dataclasses import dataclass
from enum import Enum

CANVAS_MIN = 0
CANVAS_MAX = 1000


@dataclass(frozen=True, order=True)
class Point:
    """Punto entero del lienzo 1000x1000 (eje y hacia arriba)"""
    x: int
    y: int

    def __post_init__(self):
        for name in ('x', 'y'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"Coordenada {name} debe ser entera: {value!r}")
            if not CANVAS_MIN <= value <= CANVAS_MAX:
                raise ValueError(f"Coordenada {name}={value} fuera del lienzo")

    def to_list(self):
        return [self.x, self.y]

    def __str__(self):
        return f'({self.x}, {self.y})'


class DirectionLabel(str, Enum):
    TOP = 'top'
    BOTTOM = 'bottom'
    LEFT = 'left'
    RIGHT = 'right'
    TOP_LEFT = 'top-left'
    TOP_RIGHT = 'top-right'
    BOTTOM_LEFT = 'bottom-left'
    BOTTOM_RIGHT = 'bottom-right'

    @property
    def is_diagonal(self):
        return '-' in self.value

    @property
    def text(self):
        """Forma legible ('top left') usada en opciones y prompts"""
        return self.value.replace('-', ' ')

    def reflected(self):
        """Reflexión puntual (top-left <-> bottom-right, etc.)"""
        swap = {'top': 'bottom', 'bottom': 'top', 'left': 'right', 'right': 'left'}
        return DirectionLabel('-'.join(swap[part] for part in self.value.split('-')))


DIAGONAL_LABELS = (
    DirectionLabel.TOP_LEFT,
    DirectionLabel.TOP_RIGHT,
    DirectionLabel.BOTTOM_LEFT,
    DirectionLabel.BOTTOM_RIGHT,
)
CARDINAL_LABELS = (
    DirectionLabel.TOP,
    DirectionLabel.BOTTOM,
    DirectionLabel.LEFT,
    DirectionLabel.RIGHT,
)


class RegionLabel(str, Enum):
    CENTER = 'center'
    TOP = 'top'
    BOTTOM = 'bottom'
    LEFT = 'left'
    RIGHT = 'right'
    TOP_LEFT = 'top-left'
    TOP_RIGHT = 'top-right'
    BOTTOM_LEFT = 'bottom-left'
    BOTTOM_RIGHT = 'bottom-right'

    @property
    def text(self):
        return self.value.replace('-', ' ')

    @property
    def kind(self):
        """corner, edge o center (para tablas de frecuencia)"""
        if self is RegionLabel.CENTER:
            return 'center'
        return 'corner' if '-' in self.value else 'edge'


@dataclass(frozen=True)
class SectorConfig:
    """Ancho de los sectores cardinales y franja de exclusión (grados)"""
    cardinal_half_width: float = 11.25
    epsilon_exclusion: float = 1.0

    def __post_init__(self):
        if not 0 < self.cardinal_half_width < 45:
            raise ValueError("cardinal_half_width debe estar en (0, 45)")
        if self.epsilon_exclusion < 0:
            raise ValueError("epsilon_exclusion no puede ser negativo")

    def boundaries(self, mode=8):
        """Ángulos (grados, [0, 360)) donde cambia la etiqueta"""
        axes = [0.0, 90.0, 180.0, 270.0]
        if mode == 4:
            return axes
        hw = self.cardinal_half_width
        return sorted(
            (axis + sign * hw) % 360.0
            for axis in axes
            for sign in (-1, 1)
        )
