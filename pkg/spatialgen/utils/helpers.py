"""
Funciones de ayuda para spatialgen
Semillas derivadas, identificadores y escritura atómica de archivos
"""
import hashlib
import os
import random
import re
import tempfile
from typing import NamedTuple, Optional

from spatialgen.extensions import IoFailure

SEED_MASK = (1 << 64) - 1


def derive_seed(master_seed: int, index: int, salt: str = '') -> int:
    """
    Semilla de 64 bits derivada de (master_seed, index, salt)

    Args:
        master_seed: Semilla maestra de la corrida
        index: Índice del ítem dentro del lote
        salt: Espacio de nombres (scene, spp, tsp, mcq...)

    Returns:
        Entero de 64 bits, estable entre plataformas y versiones
    """
    text = f'{int(master_seed) & SEED_MASK}:{int(index)}:{salt}'.encode('utf-8')
    return int.from_bytes(hashlib.sha256(text).digest()[:8], 'big')


def make_rng(master_seed: int, index: int = 0, salt: str = '') -> random.Random:
    """RNG propio por ítem; la determinación no depende del orden de ejecución"""
    return random.Random(derive_seed(master_seed, index, salt))


def scene_id_for(master_seed: int, index: int) -> str:
    return f'scene-{master_seed}-{index:06d}'


def spp_id_for(master_seed: int, index: int, grid_n: int, obstacles: int = 0) -> str:
    size = f'{grid_n}o{obstacles}' if obstacles else f'{grid_n}'
    return f'spp{size}-{master_seed}-{index:06d}'


def tsp_id_for(master_seed: int, index: int, n_objects: int) -> str:
    return f'tsp{n_objects}-{master_seed}-{index:06d}'


class Lineage(NamedTuple):
    kind: str
    size: Optional[int]
    seed: int
    index: int
    obstacles: int = 0


SIZE_PREFIX = re.compile(r'^(spp|tsp)(\d+)(?:o(\d+))?$')


def parse_lineage(identifier: str) -> Lineage:
    """
    Decodifica un id generado (scene-7-000003, spp4-7-000003, spp4o3-7-000003,
    tsp5-7-000003)

    Returns:
        Lineage(tipo, tamaño o None, master_seed, index, obstáculos)
    """
    try:
        prefix, seed, index = identifier.rsplit('-', 2)
        seed, index = int(seed), int(index)
    except ValueError:
        raise ValueError(f"Identificador no reconocido: {identifier}")

    if prefix == 'scene':
        return Lineage('scene', None, seed, index)
    match = SIZE_PREFIX.match(prefix)
    if match is None or (match.group(1) == 'tsp' and match.group(3) is not None):
        raise ValueError(f"Identificador no reconocido: {identifier}")
    return Lineage(match.group(1), int(match.group(2)), seed, index, int(match.group(3) or 0))


def object_labels(count: int):
    """Etiquetas A, B, C... en orden de muestreo"""
    if not 1 <= count <= 26:
        raise ValueError(f"Número de objetos fuera de rango: {count}")
    return [chr(ord('A') + i) for i in range(count)]


def format_cell(cell) -> str:
    return f'({cell[0]}, {cell[1]})'


def format_point(point) -> str:
    return f'({point.x}, {point.y})'


def atomic_write(path, data, mode='wb'):
    """
    Escribe un archivo de forma atómica (temporal + rename)

    Args:
        path: Ruta destino
        data: bytes o str según mode
        mode: 'wb' o 'w'
    """
    path = os.fspath(path)
    directory = os.path.dirname(path) or '.'
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(prefix='.tmp-', dir=directory)
        try:
            with os.fdopen(fd, mode, **({'encoding': 'utf-8'} if 'b' not in mode else {})) as handle:
                handle.write(data)
            os.replace(tmp_path, path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
    except OSError as e:
        raise IoFailure(f"No se pudo escribir: {e.strerror or e}", path=path)
    return path
