from pathlib import Path

import pytest

from friendly_ioco import (demonic_complete, fixture_names, friendly_compose, hide, load_fixture,
                           parallel_compose, validate, write_iolts)
from friendly_ioco.errors import UnknownFixtureError
from friendly_ioco.fixtures import file_name, provenance, write_models
from friendly_ioco.suspension import after

from conftest import ALL_FIXTURES, SIGMA

MODELS = Path(__file__).resolve().parent.parent / "models"


def test_table_sizes():
    assert load_fixture("vending/S1").size() == (7, 9)
    assert load_fixture("altbit/A").size() == (6, 10)
    assert load_fixture("altbit/B").size() == (6, 10)
    assert demonic_complete(load_fixture("altbit/A")).size() == (9, 31)
    assert demonic_complete(load_fixture("altbit/B")).size() == (9, 28)
    assert load_fixture("altbit/composite-drawn").size() == (12, 24)


def test_named_shapes():
    S2 = load_fixture("uioco-ce/S2")
    assert S2.transitions == {("A", "x", "B"), ("B", "x", "C")}
    assert S2.init == "A" and S2.outputs == {"x"}


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_every_fixture_is_well_formed(name):
    A = load_fixture(name)
    r = validate(A)
    assert r.strongly_convergent and not r.unreachable_states
    assert provenance(name)


def test_implementations_are_receptive():
    for name in ("vending/I1", "vending/I2", "vending/I1par2", "uioco-ce/I1", "uioco-ce/I2", "hide-ce/I"):
        assert validate(load_fixture(name)).receptive, name


def test_behavioural_anchors():
    S12 = parallel_compose(load_fixture("vending/S1"), load_fixture("vending/S2"))
    assert after(S12, ("coin", "utee")) == {"(3,A)"}
    assert after(hide(S12, SIGMA), ("coin", "ucoffee")) == {"(4,A)", "(6,B)"}


def test_altbit_pair_is_incompatible_at_start():
    out = friendly_compose(load_fixture("altbit/A"), load_fixture("altbit/B"))
    assert not out.compatible
    assert "(0,5)" in {p.state for p in out.report.ambiguous_pairs}


def test_fresh_copies():
    assert load_fixture("vending/S1") is not load_fixture("vending/S1")


def test_unknown_name_lists_catalog():
    with pytest.raises(UnknownFixtureError) as exc:
        load_fixture("vending/S9")
    assert "vending/S1" in str(exc.value)
    with pytest.raises(KeyError):
        provenance("nope")


def test_shipped_models_match_catalog(tmp_path):
    for name in fixture_names():
        shipped = MODELS / file_name(name)
        assert shipped.read_text(encoding="utf-8") == write_iolts(load_fixture(name)), name
    written = write_models(tmp_path)
    assert sorted(p.name for p in written) == sorted(p.name for p in MODELS.glob("*.iolts"))
