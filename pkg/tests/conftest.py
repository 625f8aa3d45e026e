import pytest
from click.testing import CliRunner

from spatialgen import create_app
from spatialgen.generation.scenes import sample_batch
from tests.factories import SceneFactory, SppInstanceFactory, TspInstanceFactory


@pytest.fixture
def app(tmp_path):
    """App de pruebas con salidas en un directorio temporal"""
    return create_app('testing', OUTPUT_ROOT=str(tmp_path / 'output'))


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(scope='session')
def sample_scenes():
    """Escenas válidas del generador (semilla fija)"""
    return sample_batch(7, 20)


@pytest.fixture
def scene():
    """Escena fija sin empates de distancia; A-B mide 500"""
    return SceneFactory()


@pytest.fixture
def corner_instance():
    """4x4 de (0,0) a (3,3)"""
    return SppInstanceFactory()


@pytest.fixture
def square_instance():
    """Cuadrado de lado 100 con inicio en A"""
    return TspInstanceFactory()
