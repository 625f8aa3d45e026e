"""
Esquemas marshmallow de los registros del manifiesto y de las respuestas
"""
from marshmallow import RAISE, Schema, ValidationError, fields, validate, validates_schema

from spatialgen.models.items import CAPABILITIES, MCQ_CAPABILITIES, OPTION_LETTERS, TASK_MCQ, TASK_SPP, TASK_TSP

RECORD_TRAIN = 'train'
RECORD_TYPES = (RECORD_TRAIN, TASK_MCQ, TASK_SPP, TASK_TSP)


class LineageSchema(Schema):
    class Meta:
        unknown = RAISE

    seed = fields.Int(required=True)
    index = fields.Int(required=True, validate=validate.Range(min=0))


class SceneSchema(Schema):
    class Meta:
        unknown = RAISE

    scene_id = fields.Str(required=True)
    seed = fields.Int(required=True)
    index = fields.Int(required=True)
    objects = fields.List(fields.Raw(), required=True, validate=validate.Length(min=1))

    @validates_schema
    def validate_objects(self, data, **kwargs):
        for entry in data['objects']:
            if not (isinstance(entry, (list, tuple)) and len(entry) == 3):
                raise ValidationError('cada objeto es [etiqueta, x, y]', 'objects')


class ManifestRecordSchema(Schema):
    """Un registro del manifiesto; los campos requeridos dependen del tipo"""

    class Meta:
        unknown = RAISE

    record_type = fields.Str(required=True, validate=validate.OneOf(RECORD_TYPES))
    item_id = fields.Str(required=True)
    prompt = fields.Str(required=True)
    image = fields.Str(required=True)
    lineage = fields.Nested(LineageSchema, required=True)

    # Entrenamiento y opción múltiple
    scene_id = fields.Str()
    capability = fields.Str(validate=validate.OneOf(CAPABILITIES))
    answer = fields.Str()
    meta = fields.Dict()
    scene = fields.Nested(SceneSchema)
    options = fields.List(fields.Str())
    answer_key = fields.Str(validate=validate.OneOf(OPTION_LETTERS))

    # SPP y TSP
    instance_id = fields.Str()
    instance = fields.Dict()
    solution = fields.Dict()

    @validates_schema
    def validate_shape(self, data, **kwargs):
        record_type = data['record_type']
        if record_type in (RECORD_TRAIN, TASK_MCQ):
            required = ('scene_id', 'capability', 'answer', 'scene')
        else:
            required = ('instance_id', 'instance', 'solution')
        missing = [name for name in required if name not in data]
        if missing:
            raise ValidationError(f'faltan campos para {record_type}: {", ".join(missing)}')

        if record_type == TASK_MCQ:
            if data['capability'] not in MCQ_CAPABILITIES:
                raise ValidationError('capacidad no soportada para MCQ', 'capability')
            if len(data.get('options') or []) != 4 or 'answer_key' not in data:
                raise ValidationError('MCQ requiere 4 opciones y answer_key')


class ResponseRecordSchema(Schema):
    """Una línea del archivo de respuestas de un agente"""

    class Meta:
        unknown = RAISE

    item_id = fields.Str(required=True)
    response = fields.Str(required=True)
    agent = fields.Str(load_default=None, allow_none=True)
