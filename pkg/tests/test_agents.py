import pytest
import requests

from spatialgen.evaluation.agents import (
    PHRASING_STYLES, AgentSpec, HttpAgent, ReferenceAgent, phrase_choice, phrase_order, phrase_path, respond
)
from spatialgen.evaluation.parsing import parse_response
from spatialgen.evaluation.scoring import aggregate, score_item
from spatialgen.generation.instructions import build_eval_mcq, build_spp_prompt, build_tsp_prompt, image_ref_for
from spatialgen.models.evaluation import CORRECT, INVALID, UNPARSEABLE
from spatialgen.models.items import MCQ_CAPABILITIES, TASK_MCQ, SppItem, TspItem
from spatialgen.tasks.spp import gen_spp, solve_spp
from spatialgen.tasks.tsp import gen_tsp, solve_tsp


def _spp_items(count, grid_n=4, obstacles=0):
    items = []
    for index in range(count):
        instance = gen_spp(13, grid_n, index=index, obstacles=obstacles)
        items.append(SppItem(instance.instance_id, build_spp_prompt(instance),
                             image_ref_for(instance.instance_id), instance, solve_spp(instance)))
    return items


def _tsp_items(count, n_objects=4):
    items = []
    for index in range(count):
        instance = gen_tsp(13, n_objects, index=index)
        items.append(TspItem(instance.instance_id, build_tsp_prompt(instance),
                             image_ref_for(instance.instance_id), instance, solve_tsp(instance)))
    return items


@pytest.fixture(scope='module')
def eval_items(sample_scenes):
    mcq = [
        build_eval_mcq(scene, capability, seed=2)
        for scene in sample_scenes
        for capability in MCQ_CAPABILITIES
    ]
    return mcq + _spp_items(10) + _spp_items(10, 5, obstacles=4) + _tsp_items(10) + _tsp_items(5, 5)


def _verdicts(agent, items):
    return [score_item(item, parse_response(item, respond(agent, item))).verdict for item in items]


@pytest.mark.parametrize('style', range(PHRASING_STYLES))
def test_oracle_always_correct(eval_items, style):
    """Test the oracle scores 100% through parse and score in every phrasing"""
    agent = AgentSpec('oracle', seed=4, phrasing_style=style)
    assert set(_verdicts(agent, eval_items)) == {CORRECT}


@pytest.mark.parametrize('style', range(PHRASING_STYLES))
def test_adversarial_never_correct(eval_items, style):
    """Test adversarial answers are always invalid or unparseable"""
    agent = AgentSpec('adversarial', seed=4, phrasing_style=style)
    assert set(_verdicts(agent, eval_items)) <= {INVALID, UNPARSEABLE}


def test_random_mcq_near_chance(sample_scenes):
    """Test the random agent is near 25% on 4-option questions"""
    items = [
        build_eval_mcq(scene, capability, seed)
        for scene in sample_scenes
        for capability in MCQ_CAPABILITIES
        for seed in range(6)
    ]
    records = [
        score_item(item, parse_response(item, respond(AgentSpec('random', seed=1), item)))
        for item in items
    ]
    assert 0.17 <= aggregate(records).accuracy(TASK_MCQ) <= 0.33


def test_random_spp_answers_are_parseable():
    for item in _spp_items(10):
        parsed = parse_response(item, respond(AgentSpec('random', seed=2), item))
        assert not parsed.is_unparseable
        assert parsed.cells[0] == item.instance.start


def test_agents_are_deterministic(eval_items):
    for kind in ('oracle', 'random', 'adversarial'):
        agent = AgentSpec(kind, seed=9, phrasing_style=1)
        assert [respond(agent, item) for item in eval_items] == [respond(agent, item) for item in eval_items]


def test_reference_agent_matches_respond(eval_items):
    spec = AgentSpec('random', seed=3)
    agent = ReferenceAgent(spec)
    item = eval_items[0]
    assert agent(item, 'images/x.png') == respond(spec, item)


def test_phrasings():
    assert phrase_choice('B', 'top left', 0) == 'The answer is (B).'
    assert phrase_choice('B', 'top left', 1) == 'Answer: B'
    assert phrase_path([(0, 0), (0, 1)], 1) == '(0, 0) -> (0, 1)'
    assert phrase_order(['A', 'C', 'B'], 1) == 'A -> C -> B -> A'
    assert phrase_order(['A', 'C', 'B'], 2) == '[A, C, B]'


def test_agent_spec_validation():
    with pytest.raises(ValueError):
        AgentSpec('genius')
    with pytest.raises(ValueError):
        AgentSpec('oracle', phrasing_style=-1)


# ---------------------------------------------------------------------------
# Adaptador HTTP
# ---------------------------------------------------------------------------

class FakeResponse:
    def __init__(self, body, content_type='application/json', status=200):
        self.body = body
        self.headers = {'Content-Type': content_type}
        self.status = status

    @property
    def text(self):
        return self.body if isinstance(self.body, str) else str(self.body)

    def json(self):
        if isinstance(self.body, str):
            raise ValueError('no JSON')
        return self.body

    def raise_for_status(self):
        if self.status >= 400:
            raise requests.HTTPError(f'{self.status}')


class FakeSession:
    def __init__(self, response=None, error=None):
        self.response = response
        self.error = error
        self.calls = []

    def post(self, url, json=None, timeout=None):
        self.calls.append((url, json, timeout))
        if self.error:
            raise self.error
        return self.response


def test_http_agent_json(eval_items):
    """Test the adapter posts the prompt and reads the JSON response"""
    session = FakeSession(FakeResponse({'response': 'Answer: C'}))
    agent = HttpAgent('http://model.local/infer', timeout=5, session=session)
    item = eval_items[0]
    assert agent(item, '/data/images/x.png') == 'Answer: C'
    url, payload, timeout = session.calls[0]
    assert url == 'http://model.local/infer'
    assert payload == {'item_id': item.item_id, 'prompt': item.prompt, 'image_path': '/data/images/x.png'}
    assert timeout == 5


def test_http_agent_plain_text(eval_items):
    session = FakeSession(FakeResponse('The answer is (A).', content_type='text/plain'))
    assert HttpAgent('http://model.local', session=session)(eval_items[0]) == 'The answer is (A).'


def test_http_agent_failures(eval_items):
    """Test network and HTTP errors become empty text"""
    item = eval_items[0]
    down = HttpAgent('http://model.local', session=FakeSession(error=requests.ConnectionError('down')))
    assert down(item) == ''
    broken = HttpAgent('http://model.local', session=FakeSession(FakeResponse({}, status=500)))
    assert broken(item) == ''
    assert parse_response(item, down(item)).is_unparseable


@pytest.mark.parametrize('body', [['Answer: C'], 'not json', 3])
def test_http_agent_json_without_object(eval_items, body):
    """Test a JSON body that is not an object gives empty text"""
    agent = HttpAgent('http://model.local', session=FakeSession(FakeResponse(body)))
    assert agent(eval_items[0]) == ''
