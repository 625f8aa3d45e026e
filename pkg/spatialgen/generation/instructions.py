"""
Constructor de instrucciones
Bundle de 17 pares instrucción-respuesta por escena (entrenamiento),
preguntas de opción múltiple (evaluación) y prompts de SPP/TSP
"""
import logging
from itertools import permutations

from spatialgen.generation import templates
from spatialgen.geometry.core import (
    direction_sector, euclidean_distance, format_distance, rank_pairs_by_distance, region_of
)
from spatialgen.models.geometry import DIAGONAL_LABELS, RegionLabel
from spatialgen.models.items import (
    DIRECTION, DISTANCE_COMPARE, DISTANCE_NUMERIC, LOCALIZATION_COORDINATE,
    LOCALIZATION_REGION, SCENE_DESCRIPTION, MCQ_CAPABILITIES, OPTION_LETTERS,
    InstructionItem, McqItem
)
from spatialgen.utils.helpers import format_cell, format_point, make_rng

logger = logging.getLogger(__name__)

COMPARE_PHRASINGS = ('shortest', 'shorter', 'longer', 'longest')

# Umbrales (inferior, superior) de la rejilla 3x3 de regiones
REGION_BOUNDS = (0.4, 0.6)

# Pesos de fraseo en evaluación: shortest/longest más frecuentes
EVAL_PHRASING_WEIGHTS = {'shortest': 0.35, 'longest': 0.35, 'shorter': 0.15, 'longer': 0.15}

# Variantes del dataset de entrenamiento (subconjuntos del bundle completo)
VARIANTS = {
    'full': None,
    'no-numeric': (DIRECTION, DISTANCE_COMPARE, LOCALIZATION_REGION, SCENE_DESCRIPTION),
    'direction': (DIRECTION,),
    'distance': (DISTANCE_COMPARE, DISTANCE_NUMERIC),
    'localization': (LOCALIZATION_REGION, LOCALIZATION_COORDINATE),
}

BUNDLE_LAYOUT = {
    DIRECTION: 3,
    DISTANCE_COMPARE: 4,
    DISTANCE_NUMERIC: 3,
    LOCALIZATION_REGION: 3,
    LOCALIZATION_COORDINATE: 3,
    SCENE_DESCRIPTION: 1,
}


def image_ref_for(identifier):
    return f'images/{identifier}.png'


def items_per_scene(variant='full'):
    capabilities = VARIANTS[variant]
    if capabilities is None:
        return sum(BUNDLE_LAYOUT.values())
    return sum(BUNDLE_LAYOUT[capability] for capability in capabilities)


# ---------------------------------------------------------------------------
# Ground truth (compartido por el constructor y la validación del manifiesto)
# ---------------------------------------------------------------------------

def direction_answer(scene, a, b, cfg=None):
    return direction_sector(scene.point(a), scene.point(b), 8, cfg).value


def compare_answer(scene, phrasing, meta, tolerance=1.0):
    """Respuesta de un ítem distance-compare a partir de su meta"""
    if phrasing in ('shortest', 'longest'):
        ref = meta['ref']
        candidates = [label for label in scene.labels if label != ref]
        ranking = rank_pairs_by_distance(scene, [(ref, label) for label in candidates], tolerance)
        pair = ranking.argmin if phrasing == 'shortest' else ranking.argmax
        return pair[1]

    first, second = (tuple(pair) for pair in meta['pairs'])
    ranking = rank_pairs_by_distance(scene, [first, second], tolerance)
    pair = ranking.argmin if phrasing == 'shorter' else ranking.argmax
    return templates.pair_text(pair)


def numeric_answer(scene, a, b):
    return format_distance(euclidean_distance(scene.point(a), scene.point(b)))


def region_answer(scene, a, lower=0.4, upper=0.6):
    return region_of(scene.point(a), lower, upper).value


def coordinate_answer(scene, a):
    return format_point(scene.point(a))


def describe_scene(scene, cfg=None, regions=REGION_BOUNDS):
    """
    Descripción determinista: región de cada objeto y dirección (8 sectores)
    de cada par ordenado
    """
    sentences = []
    for label in scene.labels:
        region = region_of(scene.point(label), *regions)
        where = 'the center' if region is RegionLabel.CENTER else f'the {region.text} region'
        sentences.append(f'Object {label} is in {where} of the image.')

    for a, b in permutations(scene.labels, 2):
        label = direction_sector(scene.point(a), scene.point(b), 8, cfg)
        sentences.append(f'{b} is {templates.RELATION_PHRASES[label.value]} {a}.')
    return ' '.join(sentences)


def recompute_answer(item, scene, cfg=None, regions=REGION_BOUNDS):
    """Recalcula la respuesta de un InstructionItem desde la escena"""
    meta = item.meta
    capability = item.capability
    if capability == DIRECTION:
        return direction_answer(scene, *meta['objects'], cfg=cfg)
    if capability == DISTANCE_COMPARE:
        return compare_answer(scene, meta['phrasing'], meta)
    if capability == DISTANCE_NUMERIC:
        return numeric_answer(scene, *meta['objects'])
    if capability == LOCALIZATION_REGION:
        return region_answer(scene, meta['objects'][0], *regions)
    if capability == LOCALIZATION_COORDINATE:
        return coordinate_answer(scene, meta['objects'][0])
    if capability == SCENE_DESCRIPTION:
        return describe_scene(scene, cfg, regions)
    raise ValueError(f"Capacidad desconocida: {capability}")


# ---------------------------------------------------------------------------
# Bundle de entrenamiento
# ---------------------------------------------------------------------------

def build_training_bundle(scene, variant='full', cfg=None, regions=REGION_BOUNDS):
    """
    Construye los pares instrucción-respuesta de una escena

    Args:
        scene: Escena válida
        variant: full (17 ítems), no-numeric, direction, distance, localization
        cfg: SectorConfig
        regions: Umbrales (inferior, superior) de las regiones

    Returns:
        Lista de InstructionItem (17 para full: 3/4/3/3/3/1)
    """
    if variant not in VARIANTS:
        raise ValueError(f"Variante desconocida: {variant}")

    rng = make_rng(scene.seed, scene.index, 'bundle')
    image_ref = image_ref_for(scene.scene_id)
    pairs = scene.pairs()
    labels = scene.labels
    drafts = []

    def add(capability, template, answer, meta, **slots):
        meta = dict(meta, template=template[1])
        drafts.append((capability, template[0].format(**slots), answer, meta))

    def pick(options):
        index = rng.randrange(len(options))
        return options[index], index

    # Dirección: 3 pares distintos, orientación al azar
    for pair in rng.sample(pairs, 3):
        a, b = pair if rng.random() < 0.5 else pair[::-1]
        answer = direction_answer(scene, a, b, cfg)
        text, index = pick(templates.DIRECTION)
        add(DIRECTION, (f'{text} Answer with one of: {templates.DIRECTION_CHOICES}.', index),
            answer, {'objects': [a, b], 'label': answer}, a=a, b=b)

    # Comparación de distancias: un ítem por fraseo
    for phrasing in COMPARE_PHRASINGS:
        options = templates.DISTANCE_COMPARE[phrasing]
        text, index = pick(options)
        if phrasing in ('shortest', 'longest'):
            ref = rng.choice(labels)
            meta = {'phrasing': phrasing, 'ref': ref, 'objects': [ref]}
            slots = {'ref': ref}
        else:
            first, second = rng.sample(pairs, 2)
            meta = {'phrasing': phrasing, 'pairs': [list(first), list(second)],
                    'objects': sorted(set(first) | set(second))}
            slots = {'a': first[0], 'b': first[1], 'c': second[0], 'd': second[1]}
        add(DISTANCE_COMPARE, (text, index), compare_answer(scene, phrasing, meta), meta, **slots)

    # Distancias numéricas
    for a, b in rng.sample(pairs, 3):
        text, index = pick(templates.DISTANCE_NUMERIC)
        add(DISTANCE_NUMERIC,
            (f'{text} {templates.FRAME_NOTE} Give the distance in canvas units with one decimal.', index),
            numeric_answer(scene, a, b), {'objects': [a, b]}, a=a, b=b)

    # Localización por región
    for a in rng.sample(labels, 3):
        text, index = pick(templates.LOCALIZATION_REGION)
        answer = region_answer(scene, a, *regions)
        add(LOCALIZATION_REGION, (f'{text} Answer with one of: {templates.REGION_CHOICES}.', index),
            answer, {'objects': [a], 'label': answer}, a=a)

    # Localización por coordenadas
    for a in rng.sample(labels, 3):
        text, index = pick(templates.LOCALIZATION_COORDINATE)
        add(LOCALIZATION_COORDINATE, (f'{text} {templates.FRAME_NOTE}', index),
            coordinate_answer(scene, a), {'objects': [a]}, a=a)

    # Descripción general
    text, index = pick(templates.SCENE_DESCRIPTION)
    add(SCENE_DESCRIPTION, (text, index), describe_scene(scene, cfg, regions), {'objects': list(labels)})

    keep = VARIANTS[variant]
    items = []
    for position, (capability, prompt, answer, meta) in enumerate(drafts):
        if keep is not None and capability not in keep:
            continue
        items.append(InstructionItem(
            item_id=f'{scene.scene_id}-{position:02d}',
            scene_id=scene.scene_id,
            capability=capability,
            prompt=prompt,
            answer=answer,
            image_ref=image_ref,
            meta=meta,
            scene=scene,
        ))
    return items


# ---------------------------------------------------------------------------
# Opción múltiple (evaluación)
# ---------------------------------------------------------------------------

def _finish_mcq(rng, scene, capability, question, correct, distractors, meta):
    options = [correct, *distractors]
    rng.shuffle(options)
    answer_key = OPTION_LETTERS[options.index(correct)]
    lines = [question, 'Options:']
    lines.extend(f'{letter}. {text}' for letter, text in zip(OPTION_LETTERS, options))
    lines.append(templates.MCQ_FOOTER)
    return McqItem(
        item_id=f'{scene.scene_id}-mcq-{capability}',
        scene_id=scene.scene_id,
        capability=capability,
        prompt='\n'.join(lines),
        answer=correct,
        image_ref=image_ref_for(scene.scene_id),
        options=tuple(options),
        answer_key=answer_key,
        meta=meta,
        scene=scene,
    )


def _direction_mcq(rng, scene, cfg):
    by_label = {label: [] for label in DIAGONAL_LABELS}
    fallback = {label: [] for label in DIAGONAL_LABELS}
    for a, b in permutations(scene.labels, 2):
        quadrant = direction_sector(scene.point(a), scene.point(b), 4, cfg)
        fallback[quadrant].append((a, b))
        if direction_sector(scene.point(a), scene.point(b), 8, cfg).is_diagonal:
            by_label[quadrant].append((a, b))

    # Preferir pares claramente diagonales; etiqueta objetivo uniforme
    pool = by_label if any(by_label.values()) else fallback
    present = [label for label in DIAGONAL_LABELS if pool[label]]
    target = rng.choice(present)
    a, b = rng.choice(pool[target])

    distractors = [label.text for label in DIAGONAL_LABELS if label is not target]
    meta = {'objects': [a, b], 'label': target.value}
    question = templates.MCQ_DIRECTION.format(a=a, b=b)
    return _finish_mcq(rng, scene, DIRECTION, question, target.text, distractors, meta)


def _region_mcq(rng, scene, regions=REGION_BOUNDS):
    a = rng.choice(scene.labels)
    region = region_of(scene.point(a), *regions)
    others = [label for label in RegionLabel if label is not region]
    distractors = [label.text for label in rng.sample(others, 3)]
    meta = {'objects': [a], 'label': region.value}
    question = templates.MCQ_REGION.format(a=a)
    return _finish_mcq(rng, scene, LOCALIZATION_REGION, question, region.text, distractors, meta)


def _distance_mcq(rng, scene, phrasing=None):
    pairs = scene.pairs()
    if len(pairs) < 4:
        raise ValueError("distance MCQ requiere al menos 4 objetos")
    if phrasing is None:
        names = list(EVAL_PHRASING_WEIGHTS)
        phrasing = rng.choices(names, weights=[EVAL_PHRASING_WEIGHTS[n] for n in names])[0]

    ranked = rank_pairs_by_distance(scene, pairs).pairs
    meta = {'phrasing': phrasing}

    if phrasing in ('shortest', 'longest'):
        chosen = rng.sample(ranked, 4)
        order = sorted(chosen, key=ranked.index)
        correct = order[0] if phrasing == 'shortest' else order[-1]
        distractors = [pair for pair in chosen if pair != correct]
        question = templates.MCQ_DISTANCE[phrasing]
    else:
        # Referencia con exactamente una opción que cumple la comparación
        size = len(ranked)
        if phrasing == 'shorter':
            ref_rank = rng.randint(1, size - 4)
            correct = rng.choice(ranked[:ref_rank])
            distractors = rng.sample(ranked[ref_rank + 1:], 3)
        else:
            ref_rank = rng.randint(3, size - 2)
            correct = rng.choice(ranked[ref_rank + 1:])
            distractors = rng.sample(ranked[:ref_rank], 3)
        reference = ranked[ref_rank]
        meta['reference'] = list(reference)
        question = templates.MCQ_DISTANCE[phrasing].format(a=reference[0], b=reference[1])

    meta['candidates'] = [list(correct)] + [list(pair) for pair in distractors]
    return _finish_mcq(
        rng, scene, DISTANCE_COMPARE, question,
        templates.pair_text(correct),
        [templates.pair_text(pair) for pair in distractors],
        meta,
    )


def build_eval_mcq(scene, capability, seed, cfg=None, phrasing=None, regions=REGION_BOUNDS):
    """
    Pregunta de opción múltiple sobre una escena

    Args:
        scene: Escena válida
        capability: direction, distance-compare o localization-region
        seed: Semilla que fija el orden de opciones y las elecciones
        cfg: SectorConfig
        phrasing: Fraseo forzado para distance-compare (opcional)
        regions: Umbrales (inferior, superior) de las regiones

    Returns:
        McqItem con exactamente una opción correcta
    """
    if capability not in MCQ_CAPABILITIES:
        raise ValueError(f"Capacidad no soportada para MCQ: {capability}")
    rng = make_rng(seed, scene.index, f'mcq:{capability}:{scene.scene_id}')
    if capability == DIRECTION:
        return _direction_mcq(rng, scene, cfg)
    if capability == LOCALIZATION_REGION:
        return _region_mcq(rng, scene, regions)
    return _distance_mcq(rng, scene, phrasing)


def mcq_correct_options(item, scene, cfg=None, regions=REGION_BOUNDS):
    """
    Evalúa por fuerza bruta las 4 opciones contra la escena

    Returns:
        Lista de letras cuyas opciones son correctas
    """
    meta = item.meta
    correct = []
    for letter, option in zip(OPTION_LETTERS, item.options):
        if item.capability == DIRECTION:
            a, b = meta['objects']
            ok = direction_sector(scene.point(a), scene.point(b), 4, cfg).text == option
        elif item.capability == LOCALIZATION_REGION:
            ok = region_of(scene.point(meta['objects'][0]), *regions).text == option
        else:
            pair = tuple(option.split(' and '))
            distance = euclidean_distance(scene.point(pair[0]), scene.point(pair[1]))
            others = [
                euclidean_distance(scene.point(p[0]), scene.point(p[1]))
                for p in (tuple(o.split(' and ')) for o in item.options if o != option)
            ]
            phrasing = meta['phrasing']
            if phrasing == 'shortest':
                ok = all(distance < other for other in others)
            elif phrasing == 'longest':
                ok = all(distance > other for other in others)
            else:
                ref = meta['reference']
                ref_distance = euclidean_distance(scene.point(ref[0]), scene.point(ref[1]))
                ok = distance < ref_distance if phrasing == 'shorter' else distance > ref_distance
        if ok:
            correct.append(letter)
    return correct


# ---------------------------------------------------------------------------
# Prompts de tareas compuestas
# ---------------------------------------------------------------------------

def build_spp_prompt(instance):
    """Prompt determinista para una instancia SPP"""
    return templates.SPP_PROMPT.format(
        n=instance.grid_n,
        last=instance.grid_n - 1,
        start=format_cell(instance.start),
        end=format_cell(instance.end),
        obstacles=templates.SPP_OBSTACLES if instance.obstacles else '',
    )


def build_tsp_prompt(instance):
    """Prompt determinista para una instancia TSP; el inicio es obligatorio"""
    return templates.TSP_PROMPT.format(
        n=len(instance.objects),
        labels=', '.join(instance.labels),
        start=instance.start_label,
    )
