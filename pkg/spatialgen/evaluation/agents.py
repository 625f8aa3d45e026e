"""
Agentes de referencia (oracle, random, adversarial) y adaptador HTTP
Todos hablan texto libre para que el parser quede en el camino probado
"""
import logging
from dataclasses import dataclass
from typing import Protocol

import requests

from spatialgen.models.items import OPTION_LETTERS, TASK_MCQ, TASK_SPP, TASK_TSP
from spatialgen.utils.helpers import format_cell, make_rng

logger = logging.getLogger(__name__)

ORACLE = 'oracle'
RANDOM = 'random'
ADVERSARIAL = 'adversarial'
AGENT_KINDS = (ORACLE, RANDOM, ADVERSARIAL)

PHRASING_STYLES = 3


@dataclass(frozen=True)
class AgentSpec:
    kind: str
    seed: int = 0
    phrasing_style: int = 0

    def __post_init__(self):
        if self.kind not in AGENT_KINDS:
            raise ValueError(f"Tipo de agente desconocido: {self.kind}")
        if self.phrasing_style < 0:
            raise ValueError("phrasing_style debe ser >= 0")


class Responder(Protocol):
    """Interfaz común: prompt + ruta de imagen -> texto"""

    def __call__(self, item, image_path=None) -> str:
        ...


# ---------------------------------------------------------------------------
# Plantillas de fraseo
# ---------------------------------------------------------------------------

def phrase_choice(letter, option_text, style):
    style %= PHRASING_STYLES
    if style == 0:
        return f'The answer is ({letter}).'
    if style == 1:
        return f'Answer: {letter}'
    return (
        f'Looking at the image, the best match is "{option_text}". '
        f'Final answer: {letter}'
    )


def phrase_path(cells, style):
    style %= PHRASING_STYLES
    texts = [format_cell(cell) for cell in cells]
    if style == 0:
        return 'Start at ' + ', then '.join(texts) + '.'
    if style == 1:
        return ' -> '.join(texts)
    return '[' + ', '.join(texts) + ']'


def phrase_order(order, style):
    style %= PHRASING_STYLES
    order = list(order)
    if style == 0:
        middle = ''.join(f', then {label}' for label in order[1:])
        return f'Start at {order[0]}{middle}, and return to {order[0]}.'
    if style == 1:
        return ' -> '.join(order + order[:1])
    return '[' + ', '.join(order) + ']'


# ---------------------------------------------------------------------------
# Respuestas por tipo de agente
# ---------------------------------------------------------------------------

def _oracle(item, rng, style):
    if item.task == TASK_MCQ:
        return phrase_choice(item.answer_key, item.answer, style)
    if item.task == TASK_SPP:
        return phrase_path(item.solution.one_optimal_path, style)
    return phrase_order(item.solution.order, style)


def _random_walk(instance, rng):
    cells = [instance.start]
    visited = {instance.start}
    limit = instance.grid_n * instance.grid_n
    while cells[-1] != instance.end and len(cells) < limit:
        options = [cell for cell in sorted(instance.neighbors(cells[-1])) if cell not in visited]
        if not options:
            break
        step = rng.choice(options)
        cells.append(step)
        visited.add(step)
    return cells


def _random(item, rng, style):
    if item.task == TASK_MCQ:
        letter = rng.choice(OPTION_LETTERS)
        return phrase_choice(letter, item.option_for(letter), style)
    if item.task == TASK_SPP:
        return phrase_path(_random_walk(item.instance, rng), style)
    instance = item.instance
    rest = [label for label in instance.labels if label != instance.start_label]
    rng.shuffle(rest)
    return phrase_order([instance.start_label] + rest, style)


def _adversarial(item, rng, style):
    variant = rng.randrange(3)
    if item.task == TASK_MCQ:
        return 'I cannot determine that.' if variant < 2 else ''

    if item.task == TASK_SPP:
        instance = item.instance
        if variant == 2:
            return ''
        col, row = instance.start
        if variant == 0:
            diagonals = [
                (col + dc, row + dr) for dc in (-1, 1) for dr in (-1, 1)
                if instance.in_grid((col + dc, row + dr))
            ]
            return phrase_path([instance.start, rng.choice(diagonals)], style)
        return phrase_path([instance.start, (instance.grid_n, instance.grid_n)], style)

    order = list(item.solution.order)
    if variant == 0:
        return phrase_order(order[:-1], style)
    if variant == 1:
        return ' -> '.join(order[1:] + order[:1])
    return ' -> '.join(order + order[1:2])


RESPONDERS = {ORACLE: _oracle, RANDOM: _random, ADVERSARIAL: _adversarial}


def respond(agent, item):
    """
    Respuesta en texto libre de un agente de referencia

    Determinista dado (kind, seed, item): cada ítem usa su propio RNG.
    """
    if item.task not in (TASK_MCQ, TASK_SPP, TASK_TSP):
        raise ValueError(f"Tarea desconocida: {item.task}")
    rng = make_rng(agent.seed, 0, f'{agent.kind}:{item.item_id}')
    return RESPONDERS[agent.kind](item, rng, agent.phrasing_style)


class ReferenceAgent:
    """Adapta un AgentSpec a la interfaz Responder"""

    def __init__(self, spec):
        self.spec = spec

    def __call__(self, item, image_path=None):
        return respond(self.spec, item)


class HttpAgent:
    """
    Cliente HTTP genérico para un modelo real

    Envía JSON {item_id, prompt, image_path} y espera {"response": texto}
    (o texto plano). Los fallos de red se registran y devuelven texto vacío,
    que se califica como unparseable.
    """

    def __init__(self, url, timeout=60, session=None):
        self.url = url
        self.timeout = timeout
        self.session = session or requests.Session()

    def __call__(self, item, image_path=None):
        payload = {
            'item_id': item.item_id,
            'prompt': item.prompt,
            'image_path': str(image_path) if image_path else None,
        }
        try:
            response = self.session.post(self.url, json=payload, timeout=self.timeout)
            response.raise_for_status()
        except requests.RequestException as e:
            logger.error(f"Error consultando {self.url} para {item.item_id}: {e}")
            return ''

        if 'application/json' in response.headers.get('Content-Type', ''):
            try:
                data = response.json()
            except ValueError:
                logger.warning(f"JSON inválido desde {self.url} para {item.item_id}")
                return ''
            if not isinstance(data, dict):
                logger.warning(f"JSON sin objeto desde {self.url} para {item.item_id}: {type(data).__name__}")
                return ''
            return str(data.get('response', ''))
        return response.text
