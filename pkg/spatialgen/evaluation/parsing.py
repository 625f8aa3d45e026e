"""
Extracción determinista de respuestas estructuradas desde texto libre
Toda entrada produce un ParsedResponse (nunca se lanza excepción)
"""
import logging
import re

from spatialgen.models.items import OPTION_LETTERS, TASK_MCQ, TASK_SPP, TASK_TSP
from spatialgen.models.responses import ParsedResponse

logger = logging.getLogger(__name__)

EXPLICIT_ANSWER = re.compile(
    r'(?i:answer)\s*(?:(?i:is)\s*:?|:)\s*'
    r'(?:\(\s*([A-Da-d])\s*\)|([A-D])\b|([a-d])(?=\s*(?:[.,;!)]|$)))'
)
LETTER_TOKEN = re.compile(r'\(([A-Da-d])\)|\b([A-D])\b')
BARE_LETTER = re.compile(r'^\(?\s*([A-Da-d])\s*\)?\s*[.!]?$')

CELL_TUPLE = re.compile(r'[(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*[)\]]')
PATH_SEPARATOR = re.compile(
    r'^(?:\s|,|;|\.|->|=>|→|-|\bthen\b|\bto\b|\band\b|\bnext\b)*$',
    re.IGNORECASE,
)

LABEL_TOKEN = re.compile(r'\b([A-Za-z])\b')
ORDER_SEPARATORS = ('->', '=>', '→', ',', '[', ']', '-')
ORDER_GAP = re.compile(
    r'^(?:\s|,|;|\.|->|=>|→|-|\[|\]|\bthen\b|\bto\b|\band\b|\bnext\b|\breturn\b|\bback\b|\bfinally\b)*$',
    re.IGNORECASE,
)


def _normalize(text):
    return (text or '').strip()


def parse_mcq(text, options=None):
    """
    Letra elegida en una respuesta de opción múltiple

    Precedencia: (1) última forma explícita "answer is (X)" / "answer: X";
    (2) última letra suelta "(X)" o "X" mayúscula; (3) texto único de una
    opción; si nada aplica, unparseable. Una respuesta que es solo la letra
    ("b", "(b)", "b.") se acepta en cualquier caja.
    """
    text = _normalize(text)
    if not text:
        return ParsedResponse.unparseable('respuesta vacía')

    bare = BARE_LETTER.match(text)
    if bare:
        return ParsedResponse.mcq(bare.group(1).upper(), 'letra sola')

    explicit = list(EXPLICIT_ANSWER.finditer(text))
    if explicit:
        letter = next(group for group in explicit[-1].groups() if group)
        return ParsedResponse.mcq(letter.upper(), 'forma explícita')

    tokens = list(LETTER_TOKEN.finditer(text))
    if tokens:
        letter = next(group for group in tokens[-1].groups() if group)
        return ParsedResponse.mcq(letter.upper(), 'letra suelta')

    if options:
        lowered = text.lower()
        hits = [
            index for index, option in enumerate(options)
            if re.search(rf'\b{re.escape(option.lower())}\b', lowered)
        ]
        # Una opción contenida en otra que también aparece no cuenta
        hits = [
            index for index in hits
            if not any(
                other != index and options[index].lower() in options[other].lower()
                for other in hits
            )
        ]
        if len(hits) == 1:
            return ParsedResponse.mcq(OPTION_LETTERS[hits[0]], 'texto de opción')
        if len(hits) > 1:
            return ParsedResponse.unparseable(f'{len(hits)} opciones mencionadas')

    return ParsedResponse.unparseable('sin letra de opción')


def parse_path(text, grid_n):
    """
    Secuencia de celdas (col, row) más larga bien formada

    Tuplas "(c,r)" o "[c,r]" separadas por espacios, comas, flechas o
    palabras de enlace forman una corrida; gana la más larga (la última en
    caso de empate). Cualquier celda fuera de la rejilla, esté o no en la
    corrida ganadora, invalida la respuesta.
    """
    text = _normalize(text)
    matches = list(CELL_TUPLE.finditer(text))
    if not matches:
        return ParsedResponse.unparseable('sin celdas')

    for match in matches:
        col, row = int(match.group(1)), int(match.group(2))
        if not (0 <= col < grid_n and 0 <= row < grid_n):
            return ParsedResponse.unparseable(f'celda ({col}, {row}) fuera de la rejilla {grid_n}x{grid_n}')

    runs = [[matches[0]]]
    for prev, match in zip(matches, matches[1:]):
        gap = text[prev.end():match.start()]
        if PATH_SEPARATOR.match(gap):
            runs[-1].append(match)
        else:
            runs.append([match])

    best = runs[0]
    for run in runs[1:]:
        if len(run) >= len(best):
            best = run

    cells = [(int(m.group(1)), int(m.group(2))) for m in best]
    return ParsedResponse.path(cells, f'{len(runs)} corridas')


def _near_separator(text, match):
    before = text[:match.start()].rstrip()
    after = text[match.end():].lstrip()
    return before.endswith(ORDER_SEPARATORS) or after.startswith(ORDER_SEPARATORS)


def parse_order(text, labels, start_label=None):
    """
    Orden de visita: etiquetas conocidas en orden de aparición

    Las etiquetas unidas por separadores o palabras de enlace ("A -> B",
    "A, then B") forman una corrida; gana la más larga (la última en caso de
    empate). Si ninguna corrida tiene al menos 2 etiquetas se usan todas las
    sueltas. Las minúsculas solo cuentan junto a un separador ("a -> b").
    Se colapsan repeticiones inmediatas y se descarta la vuelta final al
    inicio.
    """
    text = _normalize(text)
    known = set(labels)
    candidates = []
    for match in LABEL_TOKEN.finditer(text):
        token = match.group(1)
        if token.isupper():
            label = token
        elif _near_separator(text, match):
            label = token.upper()
        else:
            continue
        if label in known:
            candidates.append((match, label))

    if not candidates:
        return ParsedResponse.unparseable('sin etiquetas conocidas')

    runs = [[candidates[0]]]
    for prev, current in zip(candidates, candidates[1:]):
        if ORDER_GAP.match(text[prev[0].end():current[0].start()]):
            runs[-1].append(current)
        else:
            runs.append([current])

    best = runs[0]
    for run in runs[1:]:
        if len(run) >= len(best):
            best = run
    chosen = best if len(best) >= 2 else candidates

    order = []
    for _, label in chosen:
        if order and order[-1] == label:
            continue
        order.append(label)

    closing = start_label or order[0]
    if len(order) > 1 and order[-1] == closing:
        order.pop()
    return ParsedResponse.visit(order)


def parse_response(item, text, extractor=None):
    """
    Despacha al parser de la tarea del ítem

    Args:
        item: McqItem, SppItem o TspItem
        text: Respuesta en texto libre
        extractor: Callable(item, text) -> ParsedResponse externo (opcional)
    """
    if extractor is not None:
        try:
            parsed = extractor(item, text)
        except Exception as e:
            logger.warning(f"Extractor externo falló en {item.item_id}: {e}")
            return ParsedResponse.unparseable(f'extractor externo: {e}')
        if not isinstance(parsed, ParsedResponse):
            return ParsedResponse.unparseable('extractor externo sin ParsedResponse')
        return parsed

    if item.task == TASK_MCQ:
        return parse_mcq(text, item.options)
    if item.task == TASK_SPP:
        return parse_path(text, item.instance.grid_n)
    if item.task == TASK_TSP:
        return parse_order(text, item.instance.labels, item.instance.start_label)
    raise ValueError(f"Tarea desconocida: {item.task}")
