import copy
import json

import pytest

from conftest import FIXTURES, fixture_path
from weilrep.errors import ValidationError
from weilrep.problem import (decode_int, emit_problem, encode_int,
                             load_problem, parse_problem, validate_problem)


def test_load_and_validate_fixtures():
    for name in ("picard72.json", "picard216.json", "chain24.json"):
        prob = load_problem(fixture_path(name))
        summary = validate_problem(prob)
        assert summary["ok"]


def test_roundtrip_identity():
    prob = load_problem(fixture_path("picard72.json"))
    doc = emit_problem(prob)
    again = parse_problem(doc, base_dir=FIXTURES)
    doc2 = emit_problem(again)
    assert doc == doc2
    # the models agree element-for-element
    a = prob.model.orbits[0].component
    b = again.model.orbits[0].component
    assert a.f == b.f and a.n == b.n
    # and the groups have the same order
    assert prob.build_group().order() == again.build_group().order()


def test_roundtrip_multi_component():
    prob = load_problem(fixture_path("chain24.json"))
    again = parse_problem(emit_problem(prob), base_dir=FIXTURES)
    assert emit_problem(prob) == emit_problem(again)
    for x, y in zip(prob.generators["tau1"].maps,
                    again.generators["tau1"].maps):
        assert x.normalized_key() == y.normalized_key()


def test_big_integer_convention():
    assert encode_int(2 ** 52) == 2 ** 52
    assert encode_int(2 ** 60) == str(2 ** 60)
    assert decode_int(str(2 ** 60)) == 2 ** 60
    assert decode_int(7) == 7
    with pytest.raises(ValidationError):
        decode_int(1.5)


def test_missing_keys_rejected():
    with pytest.raises(ValidationError):
        parse_problem({"p": 2})


def test_exponent_divisible_by_p_rejected():
    doc = {"p": 2, "base_degree": 1,
           "components": [{"n": 2, "f": [0, 1, 1]}]}
    prob = parse_problem(doc)
    from weilrep.errors import ExponentDivisibleByP
    with pytest.raises(ExponentDivisibleByP):
        validate_problem(prob)


def test_mismatched_field_degree_rejected():
    with open(fixture_path("picard72.json")) as fh:
        doc = json.load(fh)
    doc = copy.deepcopy(doc)
    doc["components"][0]["degree"] = 3  # component no longer over the base
    with pytest.raises(ValidationError):
        validate_problem(parse_problem(doc, base_dir=FIXTURES))


def test_bad_element_vector_rejected():
    doc = {"p": 2, "base_degree": 1,
           "components": [{"n": 3, "f": [[0, 1], 1]}]}
    with pytest.raises(ValidationError):
        parse_problem(doc)


def test_degraded_mode_no_group():
    doc = {"p": 2, "base_degree": 1,
           "components": [{"n": 3, "f": [0, 1, 0, 0, 1]}]}
    prob = parse_problem(doc)
    assert validate_problem(prob)["ok"]
    with pytest.raises(ValidationError):
        prob.build_group()
