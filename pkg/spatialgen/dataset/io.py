"""
Lectura y escritura del manifiesto JSONL y de las imágenes
Bytes reproducibles: claves ordenadas, UTF-8, una línea por registro
"""
import logging
import math
import os

import orjson
from marshmallow import ValidationError

from spatialgen.dataset.schemas import RECORD_TRAIN, ManifestRecordSchema, ResponseRecordSchema
from spatialgen.extensions import IoFailure, ManifestError
from spatialgen.generation.instructions import mcq_correct_options, recompute_answer
from spatialgen.models.items import TASK_MCQ, TASK_SPP, TASK_TSP, InstructionItem, McqItem, SppItem, TspItem
from spatialgen.models.scene import GenConfig, Scene
from spatialgen.models.tasks import SppInstance, SppSolution, TspInstance, TspSolution
from spatialgen.rendering.diagrams import save_diagram
from spatialgen.tasks.spp import check_path, solve_spp
from spatialgen.tasks.tsp import solve_tsp
from spatialgen.utils.helpers import atomic_write, parse_lineage

logger = logging.getLogger(__name__)

MANIFEST_NAME = 'manifest.jsonl'
IMAGES_DIR = 'images'

_record_schema = ManifestRecordSchema()
_response_schema = ResponseRecordSchema()


def dumps_line(data):
    return orjson.dumps(data, option=orjson.OPT_SORT_KEYS) + b'\n'


# ---------------------------------------------------------------------------
# Ítem <-> registro
# ---------------------------------------------------------------------------

def item_to_record(item):
    """Registro serializable de un ítem, con escena o instancia embebida"""
    if isinstance(item, (InstructionItem, McqItem)):
        scene = item.scene
        record = {
            'record_type': TASK_MCQ if isinstance(item, McqItem) else RECORD_TRAIN,
            'item_id': item.item_id,
            'scene_id': item.scene_id,
            'capability': item.capability,
            'prompt': item.prompt,
            'answer': item.answer,
            'image': item.image_ref,
            'meta': item.meta,
            'scene': scene.to_dict(),
            'lineage': {'seed': scene.seed, 'index': scene.index},
        }
        if isinstance(item, McqItem):
            record['options'] = list(item.options)
            record['answer_key'] = item.answer_key
        return record

    lineage = parse_lineage(item.instance.instance_id)
    return {
        'record_type': item.task,
        'item_id': item.item_id,
        'instance_id': item.instance.instance_id,
        'prompt': item.prompt,
        'image': item.image_ref,
        'instance': item.instance.to_dict(),
        'solution': item.solution.to_dict(),
        'lineage': {'seed': lineage.seed, 'index': lineage.index},
    }


def record_to_item(record):
    """Inverso de item_to_record (el registro ya fue validado por el esquema)"""
    record_type = record['record_type']
    if record_type in (RECORD_TRAIN, TASK_MCQ):
        common = dict(
            item_id=record['item_id'],
            scene_id=record['scene_id'],
            capability=record['capability'],
            prompt=record['prompt'],
            answer=record['answer'],
            image_ref=record['image'],
            meta=record.get('meta') or {},
            scene=Scene.from_dict(record['scene']),
        )
        if record_type == RECORD_TRAIN:
            return InstructionItem(**common)
        return McqItem(options=tuple(record['options']), answer_key=record['answer_key'], **common)

    if record_type == TASK_SPP:
        return SppItem(
            item_id=record['item_id'],
            prompt=record['prompt'],
            image_ref=record['image'],
            instance=SppInstance.from_dict(record['instance']),
            solution=SppSolution.from_dict(record['solution']),
        )
    return TspItem(
        item_id=record['item_id'],
        prompt=record['prompt'],
        image_ref=record['image'],
        instance=TspInstance.from_dict(record['instance']),
        solution=TspSolution.from_dict(record['solution']),
    )


# ---------------------------------------------------------------------------
# Escritura / lectura
# ---------------------------------------------------------------------------

def write_dataset(items, images, out_dir, manifest_name=MANIFEST_NAME):
    """
    Escribe el manifiesto y las imágenes de forma atómica

    Args:
        items: Ítems en orden final
        images: Diagramas a guardar en out_dir/images
        out_dir: Directorio de salida

    Returns:
        Ruta del manifiesto

    Raises:
        IoFailure con la ruta afectada
    """
    out_dir = os.fspath(out_dir)
    images_dir = os.path.join(out_dir, IMAGES_DIR)
    count = 0
    for diagram in images:
        save_diagram(diagram, images_dir)
        count += 1

    lines = [dumps_line(item_to_record(item)) for item in items]
    manifest_path = atomic_write(os.path.join(out_dir, manifest_name), b''.join(lines))
    logger.info(f"Manifiesto escrito: {manifest_path} ({len(lines)} registros, {count} imágenes)")
    return manifest_path


def _read_lines(path):
    try:
        with open(path, 'rb') as handle:
            return [line for line in handle.read().splitlines() if line.strip()]
    except OSError as e:
        raise IoFailure(f"No se pudo leer: {e.strerror or e}", path=path)


def read_records(path):
    """Registros validados por esquema, en orden de archivo"""
    records = []
    for number, line in enumerate(_read_lines(path), start=1):
        try:
            data = orjson.loads(line)
            records.append(_record_schema.load(data))
        except orjson.JSONDecodeError as e:
            raise ManifestError(f"Línea {number}: JSON inválido ({e})", path=str(path), line=number)
        except ValidationError as e:
            raise ManifestError(f"Línea {number}: registro inválido {e.messages}", path=str(path), line=number)
    return records


def read_manifest(path, check_images=False):
    """
    Lee un manifiesto escrito por write_dataset

    Args:
        path: Ruta del manifest.jsonl
        check_images: Verificar que exista cada imagen referenciada

    Returns:
        Lista de ítems
    """
    base = os.path.dirname(os.fspath(path))
    items = []
    for record in read_records(path):
        if check_images and not os.path.exists(os.path.join(base, record['image'])):
            raise ManifestError(f"Imagen inexistente: {record['image']}", path=str(path), item_id=record['item_id'])
        try:
            items.append(record_to_item(record))
        except (KeyError, TypeError, ValueError) as e:
            raise ManifestError(f"{record['item_id']}: {e}", path=str(path), item_id=record['item_id'])
    logger.info(f"Manifiesto leído: {path} ({len(items)} ítems)")
    return items


def read_responses(path):
    """Respuestas {item_id: texto} de un archivo JSONL de agente"""
    responses = {}
    for number, line in enumerate(_read_lines(path), start=1):
        try:
            data = _response_schema.load(orjson.loads(line))
        except (orjson.JSONDecodeError, ValidationError) as e:
            raise ManifestError(f"Línea {number} de respuestas inválida: {e}", path=str(path), line=number)
        responses[data['item_id']] = data['response']
    return responses


def write_responses(pairs, path, agent=None):
    """pairs: iterable de (item_id, texto)"""
    payload = b''.join(
        dumps_line({'item_id': item_id, 'response': text, 'agent': agent})
        for item_id, text in pairs
    )
    return atomic_write(path, payload)


# ---------------------------------------------------------------------------
# Validación
# ---------------------------------------------------------------------------

def validate_record(item, cfg=None):
    """
    Recalcula la respuesta o solución de un ítem desde su escena/instancia

    Args:
        item: Ítem leído del manifiesto
        cfg: GenConfig con el que se generó (sectores y umbrales de región)

    Raises:
        ManifestError si algo no coincide
    """
    cfg = cfg or GenConfig()
    if isinstance(item, McqItem):
        correct = mcq_correct_options(item, item.scene, cfg.sector, cfg.regions)
        if correct != [item.answer_key]:
            raise ManifestError(f"{item.item_id}: opciones correctas {correct}, clave {item.answer_key}",
                                item_id=item.item_id)
        return True

    if isinstance(item, InstructionItem):
        expected = recompute_answer(item, item.scene, cfg.sector, cfg.regions)
        if expected != item.answer:
            raise ManifestError(f"{item.item_id}: respuesta {item.answer!r}, esperada {expected!r}",
                                item_id=item.item_id)
        return True

    if isinstance(item, SppItem):
        solution = solve_spp(item.instance)
        check = check_path(item.instance, item.solution.one_optimal_path)
        if solution != item.solution or not check.valid:
            raise ManifestError(f"{item.item_id}: solución SPP inconsistente", item_id=item.item_id)
        return True

    solution = solve_tsp(item.instance)
    if solution.order != item.solution.order or not math.isclose(
        solution.tour_length, item.solution.tour_length, rel_tol=1e-9
    ):
        raise ManifestError(f"{item.item_id}: solución TSP inconsistente", item_id=item.item_id)
    return True
