"""
Línea de comandos de spatialgen
Uso: python run.py <subcomando> [opciones]
"""
import math
import os
import sys
from functools import partial

import click
import orjson

from spatialgen import create_app
from spatialgen.dataset.io import (
    dumps_line, read_manifest, read_records, read_responses, validate_record, write_dataset, write_responses
)
from spatialgen.dataset.stats import compute_stats, render_stats_table
from spatialgen.error_handlers import run_with_error_handling
from spatialgen.evaluation.agents import AGENT_KINDS, AgentSpec, HttpAgent, ReferenceAgent
from spatialgen.evaluation.parsing import parse_response
from spatialgen.evaluation.reports import render_report_table, write_report
from spatialgen.evaluation.scoring import aggregate, score_item
from spatialgen.extensions import ManifestError
from spatialgen.generation.instructions import (
    VARIANTS, build_eval_mcq, build_spp_prompt, build_training_bundle, build_tsp_prompt,
    image_ref_for, items_per_scene
)
from spatialgen.generation.scenes import sample_batch, sample_scene
from spatialgen.models.evaluation import SCORING_MODES, STRICT
from spatialgen.models.items import (
    DIRECTION, DISTANCE_COMPARE, LOCALIZATION_REGION, MCQ_CAPABILITIES, SppItem, TspItem
)
from spatialgen.models.scene import GenConfig, Scene
from spatialgen.models.tasks import SppInstance, TspInstance
from spatialgen.oracles.suite import render_verification, run_verification
from spatialgen.rendering.diagrams import DiagramSpec, render_scene, render_spp, render_tsp, save_diagram
from spatialgen.tasks.spp import gen_spp, solve_spp
from spatialgen.tasks.tsp import gen_tsp, solve_tsp
from spatialgen.utils.helpers import parse_lineage
from spatialgen.utils.performance import batch_process

CAPABILITY_CHOICES = {
    'direction': DIRECTION,
    'distance': DISTANCE_COMPARE,
    'localization': LOCALIZATION_REGION,
}


def _echo_json(data):
    click.echo(orjson.dumps(data, option=orjson.OPT_SORT_KEYS).decode('utf-8'))


def _out_dir(app, out, default):
    return out or app.output_path(default)


@click.group()
@click.option('--env', default=None, help='Configuración: development, production o testing')
@click.pass_context
def main(ctx, env):
    """Generación de datasets espaciales, tareas compuestas y evaluación"""
    if ctx.obj is None:
        ctx.obj = create_app(env)


# ---------------------------------------------------------------------------
# Generación
# ---------------------------------------------------------------------------

@main.command('gen-train')
@click.option('--scenes', type=click.IntRange(min=1), default=None, help='Número de escenas')
@click.option('--seed', type=int, required=True, help='Semilla maestra')
@click.option('--out', type=click.Path(file_okay=False), default=None, help='Directorio de salida')
@click.option('--variant', type=click.Choice(sorted(VARIANTS)), default='full', show_default=True)
@click.option('--items', type=click.IntRange(min=1), default=None,
              help='Total de ítems; fija el número de escenas y trunca el manifiesto')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Procesos de generación')
@click.pass_obj
def gen_train(app, scenes, seed, out, variant, items, workers):
    """Dataset de entrenamiento (17 ítems por escena en la variante full)"""
    if scenes is None and items is None:
        raise click.UsageError('Se requiere --scenes o --items', ctx=click.get_current_context())
    per_scene = items_per_scene(variant)
    if items is not None:
        scenes = math.ceil(items / per_scene)
    workers = workers or app.config['WORKERS']
    cfg = GenConfig.from_config(app.config)

    scene_list = sample_batch(seed, scenes, cfg, workers=workers)
    bundle = [
        item
        for scene in scene_list
        for item in build_training_bundle(scene, variant, cfg.sector, regions=cfg.regions)
    ]
    if items is not None:
        bundle = bundle[:items]

    used = {item.scene_id for item in bundle}
    spec = DiagramSpec.from_config(app.config, kind='scene')
    diagrams = batch_process([s for s in scene_list if s.scene_id in used], partial(render_scene, spec=spec), workers)

    out_dir = _out_dir(app, out, 'train')
    manifest = write_dataset(bundle, diagrams, out_dir)
    _echo_json({'manifest': manifest, 'items': len(bundle), 'scenes': len(used), 'variant': variant})


def _basic_items(app, count, seed, capability, workers):
    cfg = GenConfig.from_config(app.config)
    scenes = sample_batch(seed, count, cfg, workers=workers)
    items = []
    for index, scene in enumerate(scenes):
        chosen = MCQ_CAPABILITIES[index % len(MCQ_CAPABILITIES)] if capability == 'all' else CAPABILITY_CHOICES[capability]
        items.append(build_eval_mcq(scene, chosen, seed, cfg.sector, regions=cfg.regions))
    spec = DiagramSpec.from_config(app.config, kind='scene')
    return items, batch_process(scenes, partial(render_scene, spec=spec), workers)


def _spp_item(instance):
    return SppItem(
        item_id=instance.instance_id,
        prompt=build_spp_prompt(instance),
        image_ref=image_ref_for(instance.instance_id),
        instance=instance,
        solution=solve_spp(instance),
    )


def _tsp_item(instance, max_objects):
    return TspItem(
        item_id=instance.instance_id,
        prompt=build_tsp_prompt(instance),
        image_ref=image_ref_for(instance.instance_id),
        instance=instance,
        solution=solve_tsp(instance, max_objects),
    )


@main.command('gen-eval')
@click.option('--task', type=click.Choice(['basic', 'spp', 'tsp']), required=True)
@click.option('--count', type=click.IntRange(min=1), default=None, help='Número de ítems')
@click.option('--grid-n', 'grid_n', type=click.IntRange(min=2), default=4, show_default=True)
@click.option('--objects', type=click.IntRange(min=3, max=12), default=4, show_default=True)
@click.option('--seed', type=int, required=True)
@click.option('--out', type=click.Path(file_okay=False), default=None)
@click.option('--capability', type=click.Choice(['all', *CAPABILITY_CHOICES]), default='all', show_default=True)
@click.option('--obstacles', type=click.IntRange(min=0), default=0, show_default=True,
              help='Celdas bloqueadas por instancia SPP')
@click.option('--workers', type=click.IntRange(min=1), default=None)
@click.pass_obj
def gen_eval(app, task, count, grid_n, objects, seed, out, capability, obstacles, workers):
    """Conjunto de evaluación: opción múltiple, SPP o TSP"""
    count = count or app.config['EVAL_COUNT']
    workers = workers or app.config['WORKERS']

    if task == 'basic':
        items, diagrams = _basic_items(app, count, seed, capability, workers)
        default_dir = 'eval-basic'
    elif task == 'spp':
        instances = [gen_spp(seed, grid_n, index=i, obstacles=obstacles) for i in range(count)]
        items = [_spp_item(instance) for instance in instances]
        spec = DiagramSpec.from_config(app.config, kind='spp')
        diagrams = batch_process(instances, partial(render_spp, spec=spec), workers)
        default_dir = f'eval-spp{grid_n}'
    else:
        cfg = GenConfig.from_config(app.config)
        instances = [gen_tsp(seed, objects, index=i, cfg=cfg) for i in range(count)]
        items = [_tsp_item(instance, app.config['TSP_MAX_OBJECTS']) for instance in instances]
        spec = DiagramSpec.from_config(app.config, kind='tsp')
        diagrams = batch_process(instances, partial(render_tsp, spec=spec), workers)
        default_dir = f'eval-tsp{objects}'

    manifest = write_dataset(items, diagrams, _out_dir(app, out, default_dir))
    _echo_json({'manifest': manifest, 'items': len(items), 'task': task})


# ---------------------------------------------------------------------------
# Solución, agentes y calificación
# ---------------------------------------------------------------------------

def _load_instances(path, task):
    """Instancias desde un JSON, un JSONL de instancias o un manifiesto"""
    with open(path, 'rb') as handle:
        raw = handle.read()
    try:
        documents = [orjson.loads(raw)]
    except orjson.JSONDecodeError:
        documents = [orjson.loads(line) for line in raw.splitlines() if line.strip()]

    model = SppInstance if task == 'spp' else TspInstance
    instances = []
    for document in documents:
        for entry in document if isinstance(document, list) else [document]:
            data = entry.get('instance', entry)
            try:
                instances.append(model.from_dict(data))
            except (KeyError, TypeError, ValueError) as e:
                raise ManifestError(f"Instancia inválida: {e}", path=str(path))
    return instances


@main.command('solve')
@click.option('--task', type=click.Choice(['spp', 'tsp']), required=True)
@click.option('--in', 'in_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.pass_obj
def solve(app, task, in_path):
    """Resuelve instancias y escribe una solución JSON por línea"""
    for instance in _load_instances(in_path, task):
        if task == 'spp':
            solution = solve_spp(instance)
        else:
            solution = solve_tsp(instance, app.config['TSP_MAX_OBJECTS'])
        sys.stdout.write(dumps_line({'instance_id': instance.instance_id, **solution.to_dict()}).decode('utf-8'))


@main.command('run-agent')
@click.option('--agent', type=click.Choice([*AGENT_KINDS, 'http']), required=True)
@click.option('--manifest', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--out', type=click.Path(dir_okay=False), required=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--style', type=click.IntRange(min=0), default=0, show_default=True, help='Plantilla de fraseo')
@click.option('--url', default=None, help='Endpoint del modelo (agente http)')
@click.option('--timeout', type=float, default=60.0, show_default=True)
@click.pass_obj
def run_agent(app, agent, manifest, out, seed, style, url, timeout):
    """Respuestas en texto libre de un agente para cada ítem del manifiesto"""
    if agent == 'http':
        if not url:
            raise click.UsageError('--url es obligatorio con --agent http', ctx=click.get_current_context())
        responder = HttpAgent(url, timeout=timeout)
    else:
        responder = ReferenceAgent(AgentSpec(agent, seed=seed, phrasing_style=style))

    base = os.path.dirname(os.path.abspath(manifest))
    items = read_manifest(manifest)
    pairs = [(item.item_id, responder(item, os.path.join(base, item.image_ref))) for item in items]
    path = write_responses(pairs, out, agent=agent)
    app.logger.info(f"{len(pairs)} respuestas de {agent} en {path}")
    _echo_json({'responses': path, 'items': len(pairs), 'agent': agent})


@main.command('score')
@click.option('--manifest', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--responses', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--mode', type=click.Choice(SCORING_MODES), default=STRICT, show_default=True)
@click.option('--report', 'report_path', type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def score(app, manifest, responses, mode, report_path):
    """Califica respuestas y escribe report.json y report.txt"""
    items = read_manifest(manifest)
    texts = read_responses(responses)
    records = [
        score_item(item, parse_response(item, texts.get(item.item_id, '')), mode, app.config['TSP_TOLERANCE'])
        for item in items
    ]
    report = aggregate(records, scoring_mode=mode)
    report_path = report_path or os.path.join(os.path.dirname(os.path.abspath(responses)), 'report.json')
    write_report(report, report_path)
    click.echo(render_report_table(report), nl=False)


@main.command('stats')
@click.option('--manifest', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--json', 'as_json', is_flag=True, help='Salida JSON en lugar de tabla')
@click.option('--validate', is_flag=True, help='Recalcular y verificar cada registro')
@click.pass_obj
def stats(app, manifest, as_json, validate):
    """Tablas de frecuencias recalculadas desde el manifiesto"""
    items = read_manifest(manifest, check_images=validate)
    cfg = GenConfig.from_config(app.config)
    if validate:
        for item in items:
            validate_record(item, cfg)
    report = compute_stats(items, cfg)
    if as_json:
        _echo_json(report.to_dict())
    else:
        click.echo(render_stats_table(report), nl=False)


# ---------------------------------------------------------------------------
# Renderizado y verificación
# ---------------------------------------------------------------------------

def _subject_from_manifest(manifest, identifier):
    for record in read_records(manifest):
        if identifier in (record.get('scene_id'), record.get('instance_id')):
            kind = record['record_type']
            if kind in ('spp', 'tsp'):
                model = SppInstance if kind == 'spp' else TspInstance
                return kind, model.from_dict(record['instance'])
            return 'scene', Scene.from_dict(record['scene'])
    raise ManifestError(f"{identifier} no está en el manifiesto", path=str(manifest))


def _subject_from_id(app, identifier):
    lineage = parse_lineage(identifier)
    cfg = GenConfig.from_config(app.config)
    if lineage.kind == 'scene':
        return 'scene', sample_scene(lineage.seed, lineage.index, cfg)
    if lineage.kind == 'spp':
        return 'spp', gen_spp(lineage.seed, lineage.size, index=lineage.index, obstacles=lineage.obstacles)
    return 'tsp', gen_tsp(lineage.seed, lineage.size, index=lineage.index, cfg=cfg)


@main.command('render')
@click.option('--scene-id', 'identifier', required=True, help='Id de escena o instancia')
@click.option('--manifest', type=click.Path(exists=True, dir_okay=False), default=None)
@click.option('--out', type=click.Path(file_okay=False), default=None)
@click.pass_obj
def render(app, identifier, manifest, out):
    """Dibuja una escena o instancia a partir de su id"""
    if manifest:
        kind, subject = _subject_from_manifest(manifest, identifier)
    else:
        kind, subject = _subject_from_id(app, identifier)
    spec = DiagramSpec.from_config(app.config, kind=kind)
    renderer = {'scene': render_scene, 'spp': render_spp, 'tsp': render_tsp}[kind]
    svg_path, png_path = save_diagram(renderer(subject, spec), _out_dir(app, out, 'renders'))
    _echo_json({'svg': svg_path, 'png': png_path})


@main.command('verify')
@click.option('--quick', is_flag=True, help='Tamaños reducidos')
@click.pass_obj
def verify(app, quick):
    """Compara solvers y geometría con los oráculos de fuerza bruta"""
    results = run_verification(quick=quick)
    click.echo(render_verification(results), nl=False)
    return 0 if all(result.passed for result in results) else 1


def cli(argv=None):
    """Punto de entrada: devuelve el código de salida"""
    return run_with_error_handling(main, sys.argv[1:] if argv is None else argv)
