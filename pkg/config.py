"""
Configuración para spatialgen
Parámetros de generación, renderizado, evaluación y logging
"""
import os
from dotenv import load_dotenv

# Cargar variables de entorno
basedir = os.path.abspath(os.path.dirname(__file__))
load_dotenv(os.path.join(basedir, '.env'))


class Config:
    """Configuración base"""
    # Salidas (única variable de entorno para la raíz de salida)
    OUTPUT_ROOT = os.environ.get('SPATIALGEN_OUTPUT_ROOT', os.path.join(os.getcwd(), 'output'))

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_FILE = os.environ.get('LOG_FILE', 'logs/spatialgen.log')
    LOG_FORMAT = os.environ.get('LOG_FORMAT', 'text')  # text | json
    LOG_MAX_BYTES = 10 * 1024 * 1024  # 10MB
    LOG_BACKUP_COUNT = 10

    # Paralelismo de generación
    WORKERS = int(os.environ.get('SPATIALGEN_WORKERS', 1))

    # Lienzo y geometría
    CANVAS_SIZE = 1000
    SECTOR_HALF_WIDTH = 11.25  # grados
    SECTOR_EPSILON = 1.0  # grados
    REGION_LOWER = 0.4
    REGION_UPPER = 0.6
    REGION_MARGIN = 5
    MIN_SEPARATION = 80
    TIE_TOLERANCE = 1.0
    MAX_ATTEMPTS = 1000
    N_OBJECTS = (5, 5)

    # Renderizado
    IMAGE_SIZE = 512
    IMAGE_MARGIN = 32
    MARKER_RADIUS = 8
    FONT_SIZE = 14

    # Tareas compuestas
    TSP_MAX_OBJECTS = 12
    TSP_TOLERANCE = 1e-6

    # Evaluación
    EVAL_COUNT = 2000


class DevelopmentConfig(Config):
    """Configuración de desarrollo"""
    DEBUG = True
    TESTING = False
    LOG_LEVEL = 'DEBUG'


class ProductionConfig(Config):
    """Configuración de producción (generación a escala completa)"""
    DEBUG = False
    TESTING = False
    WORKERS = int(os.environ.get('SPATIALGEN_WORKERS', os.cpu_count() or 1))


class TestingConfig(Config):
    """Configuración para tests"""
    TESTING = True
    DEBUG = True
    WORKERS = 1
    LOG_FILE = None


# Mapeo de configuraciones
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config():
    """Obtiene la configuración según el entorno"""
    env = os.environ.get('SPATIALGEN_ENV', 'default')
    return config.get(env, config['default'])
