import json

import pytest

from wigentropy.errors import SpecError
from wigentropy.statespec import parse_state, parse_states, split_tokens


@pytest.fixture(scope="module")
def axis(grid):
    return grid.x_axis


def test_split_tokens_respects_brackets():
    assert split_tokens('fock:0, {"a": [1, 2]},mix:default') == ["fock:0", '{"a": [1, 2]}', "mix:default"]


def test_short_tokens(axis):
    labels = [lab for lab, _ in parse_states("fock:2,mix:default,mix:0.25*0+0.75*3,gauss,gauss:1.5/0.3,bump:-1/1",
                                              axis)]
    assert labels == ["fock:2", "mix:default", "mix:0.25*0+0.75*3", "gauss", "gauss:1.5/0.3", "bump:-1/1"]
    _, rho = parse_state("mix:0.25*0+0.75*3", axis)
    assert [round(w, 12) for w, _ in rho.components] == [0.25, 0.75]


def test_json_forms(axis, tmp_path):
    one = '{"schema": 1, "kind": "squeezed", "s": 1.5, "phi": 0.3}'
    assert parse_state(one, axis)[1].is_pure
    doc = {"schema": 1, "states": {"b": {"kind": "fock", "n": 1},
                                   "a": {"kind": "mixture", "weights": [0.5, 0.5],
                                         "components": [{"kind": "fock", "n": 0}, {"kind": "fock", "n": 2}]}}}
    p = tmp_path / "states.json"
    p.write_text(json.dumps(doc))
    assert [lab for lab, _ in parse_states(f"@{p}", axis)] == ["a", "b"]
    lst = json.dumps([{"schema": 1, "kind": "fock", "n": 0}, {"schema": 1, "kind": "bump", "support": [-1, 1]}])
    assert len(parse_states(lst, axis)) == 2


@pytest.mark.parametrize("bad", ["fock:x", "mix:0.5*a", "gauss:0/0", "nope:1", "bump:1", "{not json",
                                 '{"kind": "fock", "n": 1}', '{"schema": 1, "kind": "fock"}',
                                 '{"schema": 1, "kind": "weird"}', "@/nonexistent/file.json", ""])
def test_malformed_specs(axis, bad):
    with pytest.raises(SpecError):
        parse_states(bad, axis)


def test_parse_state_wants_one(axis):
    with pytest.raises(SpecError):
        parse_state("fock:0,fock:1", axis)
