"""
Plantillas de prompts (inglés) con varias paráfrasis por capacidad
La paráfrasis se elige con el RNG del ítem
"""

DIRECTION_CHOICES = 'top, bottom, left, right, top-left, top-right, bottom-left or bottom-right'
REGION_CHOICES = 'center, top, bottom, left, right, top-left, top-right, bottom-left or bottom-right'
FRAME_NOTE = (
    'Coordinates range from 0 to 1000 on both axes, with the origin at the '
    'bottom-left corner of the image.'
)

DIRECTION = (
    'What is the direction of {b} relative to {a}?',
    'In the image, where is object {b} located with respect to object {a}?',
    'Looking from {a}, in which direction is {b}?',
)

DISTANCE_COMPARE = {
    'shortest': (
        'Which object is closest to {ref}?',
        'Which object is nearest to {ref}?',
        'Among the other objects, which one has the shortest distance to {ref}?',
    ),
    'longest': (
        'Which object is farthest from {ref}?',
        'Which object is the most distant from {ref}?',
        'Among the other objects, which one has the longest distance to {ref}?',
    ),
    'shorter': (
        'Which is shorter: the distance between {a} and {b}, or the distance between {c} and {d}?',
        'Is {a} closer to {b} than {c} is to {d}? Name the pair with the shorter distance.',
    ),
    'longer': (
        'Which is longer: the distance between {a} and {b}, or the distance between {c} and {d}?',
        'Is {a} farther from {b} than {c} is from {d}? Name the pair with the longer distance.',
    ),
}

DISTANCE_NUMERIC = (
    'What is the distance between {a} and {b}?',
    'How far apart are {a} and {b}?',
    'Estimate the Euclidean distance from {a} to {b}.',
)

LOCALIZATION_REGION = (
    'In which region of the image is {a} located?',
    'Which part of the image contains object {a}?',
    'Where in the image is {a}?',
)

LOCALIZATION_COORDINATE = (
    'What are the coordinates of {a}?',
    'Give the exact position of object {a}.',
    'Where exactly is {a}? Answer with its (x, y) coordinates.',
)

SCENE_DESCRIPTION = (
    'Describe the spatial layout of all objects in the image.',
    'Explain how the objects in the image are arranged relative to each other.',
)

# Evaluación (opción múltiple)
MCQ_DIRECTION = 'What is the direction of {b} relative to {a}?'
MCQ_REGION = 'In which region of the image is object {a} located?'
MCQ_DISTANCE = {
    'shortest': 'Which pair of objects is the closest together?',
    'longest': 'Which pair of objects is the farthest apart?',
    'shorter': 'Which pair of objects is closer together than {a} and {b}?',
    'longer': 'Which pair of objects is farther apart than {a} and {b}?',
}
MCQ_FOOTER = "Answer with the option's letter."

# Frases de dirección para la descripción de escena
RELATION_PHRASES = {
    'top': 'above',
    'bottom': 'below',
    'left': 'to the left of',
    'right': 'to the right of',
    'top-left': 'to the top left of',
    'top-right': 'to the top right of',
    'bottom-left': 'to the bottom left of',
    'bottom-right': 'to the bottom right of',
}

SPP_PROMPT = (
    'The image shows a {n}x{n} grid. Cells are written as (column, row): columns are '
    'numbered 0 to {last} from left to right and rows 0 to {last} from bottom to top. '
    'The start cell S is {start} and the end cell E is {end}.{obstacles} '
    'Find the shortest path from S to E, moving one cell at a time up, down, left or right. '
    'Answer with the sequence of cells from start to end separated by arrows, '
    'in the format (column, row) -> (column, row) -> ...'
)
SPP_OBSTACLES = ' Dark cells are obstacles and cannot be entered.'

TSP_PROMPT = (
    'The image shows {n} labeled points: {labels}. Starting from point {start}, find the '
    'shortest route that visits every point exactly once and returns to {start}. '
    'You must start at {start}. Answer with the visiting order as labels separated by '
    'arrows, beginning with {start}, in the format {start} -> ... -> ...'
)


def pair_text(pair):
    """Texto de un par de objetos ('A and B')"""
    return f'{pair[0]} and {pair[1]}'
