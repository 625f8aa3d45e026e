"""
Evaluación: parser, agentes de referencia, calificación y reportes
"""

from spatialgen.evaluation.parsing import parse_mcq, parse_order, parse_path, parse_response
from spatialgen.evaluation.scoring import aggregate, score_item, score_mcq, score_spp, score_tsp
from spatialgen.evaluation.agents import (
    AGENT_KINDS,
    AgentSpec,
    HttpAgent,
    ReferenceAgent,
    Responder,
    respond
)
from spatialgen.evaluation.reports import render_report_table, report_to_json, write_report

__all__ = [
    # Parser
    'parse_mcq',
    'parse_order',
    'parse_path',
    'parse_response',

    # Calificación
    'aggregate',
    'score_item',
    'score_mcq',
    'score_spp',
    'score_tsp',

    # Agentes
    'AGENT_KINDS',
    'AgentSpec',
    'HttpAgent',
    'ReferenceAgent',
    'Responder',
    'respond',

    # Reportes
    'render_report_table',
    'report_to_json',
    'write_report'
]
