import json
from fractions import Fraction

import pytest

from helpers import F, S1, S2, chain, cls
from torslice.io import (
    FormatError,
    chain_from_json,
    chain_to_json,
    distance_csv,
    lattice_to_dot,
    lattice_to_json,
    nerve_to_json,
    parse_rational,
    wsc_from_json,
    wsc_to_json,
)
from torslice.lattice import torsion_lattice
from torslice.slices import nerve
from torslice.stability import CentralCharge, ChainOmega


def test_chain_round_trip(c_s2):
    obj = chain_to_json(c_s2)
    assert obj == {"n": 2, "classes": [["[1,1]", "[1,2]", "[2,2]"], ["[2,2]"], []], "breakpoints": ["1/3", "2/3"]}
    assert chain_from_json(json.loads(json.dumps(obj))) == c_s2
    flagged = chain(2, [7, cls(2, S2), 0], ["1/3", "2/3"], [True, False])
    assert chain_from_json(chain_to_json(flagged)) == flagged


@pytest.mark.parametrize(
    "patch, path",
    [
        ({"n": 0}, "n"),
        ({"classes": "x"}, "classes"),
        ({"classes": [["[1,1]", "[1,2]", "[2,2]"], ["[2,2]", "[5,5]"], []]}, "classes[1][1]"),
        ({"classes": [["[1,1]", "[1,2]", "[2,2]"], ["[1,1]", "[2,2]"], []]}, "classes[1]"),
        ({"breakpoints": ["1/3", 0.5]}, "breakpoints[1]"),
        ({"breakpoints": ["1/3", "a/b"]}, "breakpoints[1]"),
        ({"lower_at": [1, 0]}, "lower_at"),
    ],
)
def test_chain_errors_name_the_field(c_s2, patch, path):
    obj = chain_to_json(c_s2) | patch
    with pytest.raises(FormatError) as info:
        chain_from_json(obj)
    assert info.value.path == path


def test_parse_rational():
    assert parse_rational("2/3") == F("2/3")
    assert parse_rational(1) == 1
    with pytest.raises(FormatError):
        parse_rational(True)


def test_wsc_round_trip(c_s2):
    for phi in (CentralCharge((1, -1), (1, 2)), ChainOmega(c_s2)):
        assert wsc_from_json(wsc_to_json(phi)) == phi
    with pytest.raises(FormatError):
        wsc_from_json({"kind": "nope"})
    with pytest.raises(FormatError):
        wsc_from_json({"kind": "central_charge", "theta": [1], "delta": [0]})


def test_lattice_exports():
    lat = torsion_lattice(2)
    obj = lattice_to_json(lat)
    assert obj["n"] == 2 and obj["classes"][0] == {"id": 0, "members": []}
    assert {"upper": 4, "lower": 3, "brick": "[2,2]"} in obj["hasse"]
    dot = lattice_to_dot(lat)
    assert dot.startswith("digraph") and dot.count("->") == 5 and 'label="[2,2]"' in dot


def test_nerve_and_csv():
    obj = nerve_to_json(nerve(torsion_lattice(2)))
    assert obj["f_vector"] == [1, 3, 1]
    text = distance_csv(["a", "b"], [[F(0), F("1/6")], [F("1/6"), F(0)]])
    assert text == ",a,b\na,0,1/6\nb,1/6,0\n"
