import json
from fractions import Fraction
from pathlib import Path

import pytest

from hopfcurrents.config import ConfigError, dump_context, load_context, read_context
from hopfcurrents.foundations import builtin_context

CONFIGS = Path(__file__).resolve().parent.parent / "configs"
FILES = {"C1": "c1_abelian_z4.json", "C2": "c2_heisenberg.json", "C3": "c3_sl2_s3.json", "C4": "c4_so3_trivial.json"}


@pytest.mark.parametrize("name", sorted(FILES))
def test_shipped_configs_match_builtins(name):
    from_file = read_context(str(CONFIGS / FILES[name]))
    assert from_file.describe() == builtin_context(name).describe()


def test_builtin_prefix():
    assert read_context("builtin:C2").name == "C2"


def test_dump_round_trip():
    ctx = builtin_context("C1")
    again = load_context(json.loads(json.dumps(dump_context(ctx))))
    assert again.describe() == ctx.describe()


def _doc(**over):
    doc = {
        "name": "t",
        "algebra": {"dim": 3, "basis": ["e1", "e2", "e3"], "brackets": [{"i": "e1", "j": "e2", "value": [0, 0, 1]}]},
        "group": {"kind": "cayley", "cyclic": 2},
        "representation": {"kind": "trivial"},
    }
    doc.update(over)
    return doc


def test_minimal_document_loads():
    ctx = load_context(_doc())
    assert ctx.algebra.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert len(ctx.group.elements()) == 2


def test_rational_entries():
    doc = _doc(algebra={"dim": 2, "brackets": [{"i": 0, "j": 1, "value": ["1/2", 0]}]})
    ctx = load_context(doc)
    assert ctx.algebra.bracket((1, 0), (0, 1))[0] == Fraction(1, 2)


@pytest.mark.parametrize("doc", [
    _doc(algebra={"dim": 0}),
    _doc(algebra={"dim": 2, "brackets": [{"i": "e1", "j": "e7", "value": [0, 0]}]}),
    _doc(algebra={"dim": 2, "brackets": [{"i": 0, "j": 1, "value": [0.5, 0]}]}),
    _doc(algebra={"dim": 3, "brackets": [{"i": 0, "j": 1, "value": [0, 0, 1]}, {"i": 1, "j": 2, "value": [1, 0, 0]},
                                          {"i": 2, "j": 0, "value": [0, 0, 1]}]}),
    _doc(group={"kind": "lattice"}),
    _doc(group={"kind": "cayley", "table": [[0, 1], [0, 1]]}),
    _doc(representation={"kind": "table", "matrices": {"g1": [[2, 0, 0], [0, 1, 0], [0, 0, 1]]}}),
    _doc(representation={"kind": "adjoint", "realization": [[[1]]]}),
    _doc(named={"e1": "g1"}),
    [],
])
def test_invalid_documents_rejected(doc):
    with pytest.raises(ConfigError):
        load_context(doc)


def test_unreadable_files(tmp_path):
    with pytest.raises(ConfigError):
        read_context(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  \"algebra\": ,\n}")
    with pytest.raises(ConfigError) as info:
        read_context(str(bad))
    assert "line 2" in str(info.value)
