"""
Generación de escenas e instrucciones
"""

from spatialgen.generation.scenes import (
    sample_points,
    sample_valid_points,
    sample_scene,
    sample_batch,
    violation
)

from spatialgen.generation.instructions import (
    VARIANTS,
    build_training_bundle,
    build_eval_mcq,
    build_spp_prompt,
    build_tsp_prompt,
    describe_scene,
    image_ref_for,
    items_per_scene,
    mcq_correct_options,
    recompute_answer
)

__all__ = [
    # Escenas
    'sample_points',
    'sample_valid_points',
    'sample_scene',
    'sample_batch',
    'violation',

    # Instrucciones
    'VARIANTS',
    'build_training_bundle',
    'build_eval_mcq',
    'build_spp_prompt',
    'build_tsp_prompt',
    'describe_scene',
    'image_ref_for',
    'items_per_scene',
    'mcq_correct_options',
    'recompute_answer'
]
