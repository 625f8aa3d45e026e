"""
Logger raíz y excepciones de spatialgen
Centralizado para evitar imports circulares
"""
import logging

# Logger
logger = logging.getLogger('spatialgen')


# Excepciones personalizadas
class SpatialGenError(Exception):
    """Excepción base para la aplicación"""
    code = 'SpatialGenError'

    def __init__(self, message='', **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self):
        """Representación de una línea para la CLI"""
        data = {'error': self.code, 'message': self.message}
        data.update({key: value for key, value in self.context.items() if value is not None})
        return data


class DegenerateInput(SpatialGenError):
    """Dos puntos iguales donde se requiere un vector"""
    code = 'DegenerateInput'


class AmbiguousAxis(SpatialGenError):
    """Vector exactamente sobre un eje en modo de 4 direcciones"""
    code = 'AmbiguousAxis'


class TieDetected(SpatialGenError):
    """Dos distancias demasiado parecidas para ordenarlas"""
    code = 'TieDetected'


class GenerationExhausted(SpatialGenError):
    """Se agotaron los intentos de muestreo por rechazo"""
    code = 'GenerationExhausted'

    def __init__(self, message='', index=None, attempts=None):
        super().__init__(message, index=index, attempts=attempts)
        self.index = index
        self.attempts = attempts


class Unreachable(SpatialGenError):
    """Los obstáculos desconectan inicio y fin"""
    code = 'Unreachable'


class TooLarge(SpatialGenError):
    """Instancia fuera del rango del solver exacto"""
    code = 'TooLarge'


class TaskMismatch(SpatialGenError):
    """Respuesta parseada de un tipo que no corresponde a la tarea"""
    code = 'TaskMismatch'


class EmptyRun(SpatialGenError):
    """Agregación sin registros"""
    code = 'EmptyRun'


class IoFailure(SpatialGenError):
    """Error de lectura/escritura con contexto de ruta"""
    code = 'IoFailure'

    def __init__(self, message='', path=None):
        super().__init__(message, path=str(path) if path is not None else None)
        self.path = path


class ManifestError(SpatialGenError):
    """Registro de manifiesto inválido o inconsistente"""
    code = 'ManifestError'
