"""
spatialgen
Generación de datasets de razonamiento espacial 2D, tareas compuestas
(camino más corto en rejilla, TSP) y evaluación de respuestas de modelos.

Factory pattern para crear el contexto de la aplicación
"""
import os
import sys
import logging
from logging.handlers import RotatingFileHandler

from pythonjsonlogger import jsonlogger

from config import config
from spatialgen.extensions import logger

__version__ = '1.0.0'


class SpatialApp:
    """Contexto de aplicación: configuración efectiva + logger"""

    def __init__(self, name, settings):
        self.name = name
        self.config = settings
        self.logger = logger

    @property
    def testing(self):
        return bool(self.config.get('TESTING'))

    @property
    def debug(self):
        return bool(self.config.get('DEBUG'))

    def output_path(self, *parts):
        """Ruta dentro de OUTPUT_ROOT"""
        return os.path.join(self.config['OUTPUT_ROOT'], *parts)

    def __repr__(self):
        return f'<SpatialApp {self.name}>'


def create_app(config_name=None, **overrides):
    """
    Factory function para crear el contexto de la aplicación

    Args:
        config_name: Nombre de la configuración a usar
        overrides: Valores que reemplazan los de la configuración

    Returns:
        SpatialApp configurada
    """
    if config_name is None:
        config_name = os.environ.get('SPATIALGEN_ENV', 'default')

    config_class = config.get(config_name, config['default'])
    settings = {
        key: getattr(config_class, key)
        for key in dir(config_class)
        if key.isupper()
    }
    settings.update(overrides)

    app = SpatialApp(config_name, settings)
    configure_logging(app)
    create_directories(app)
    return app


def configure_logging(app):
    """Configura el sistema de logging"""
    level = getattr(logging, str(app.config.get('LOG_LEVEL', 'INFO')).upper(), logging.INFO)
    app.logger.setLevel(level)

    # Evitar handlers duplicados si create_app se llama varias veces
    for handler in list(app.logger.handlers):
        app.logger.removeHandler(handler)
        handler.close()

    if app.config.get('LOG_FORMAT') == 'json':
        formatter = jsonlogger.JsonFormatter(
            '%(asctime)s %(levelname)s %(name)s %(message)s'
        )
    else:
        formatter = logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s')

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    stream_handler.setLevel(level)
    app.logger.addHandler(stream_handler)

    log_file = app.config.get('LOG_FILE')
    if log_file and not app.testing:
        os.makedirs(os.path.dirname(log_file) or '.', exist_ok=True)

        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=app.config.get('LOG_MAX_BYTES', 10 * 1024 * 1024),
            backupCount=app.config.get('LOG_BACKUP_COUNT', 10)
        )
        if app.config.get('LOG_FORMAT') == 'json':
            file_handler.setFormatter(formatter)
        else:
            file_handler.setFormatter(logging.Formatter(
                '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
            ))
        file_handler.setLevel(logging.INFO)
        app.logger.addHandler(file_handler)

    app.logger.propagate = False
    app.logger.debug(f'spatialgen {__version__} iniciado ({app.name})')


def create_directories(app):
    """Crea directorios necesarios (no en tests: cada test usa tmp_path)"""
    if app.testing:
        return
    os.makedirs(app.config['OUTPUT_ROOT'], exist_ok=True)


# Variable global para mantener referencia a la app
_app = None


def get_app():
    """Obtiene la instancia de la aplicación (singleton)"""
    global _app
    if _app is None:
        _app = create_app()
    return _app
