import copy

import pytest

from trilie.bundled import BUNDLED, bundled_names, get_bundled
from trilie.documents import (
    ConfigError,
    parse_document,
    render_document,
    validate_document,
)


def minimal_quotient_doc(p=3):
    return {
        "version": 1,
        "name": "t",
        "description": "",
        "field": {"kind": "prime", "p": p},
        "carrier": {"shape": "quotient-laurent", "p": p},
        "maps": {},
        "bracket": {"form": "quotient-parity"},
        "basis": {"kind": "carrier"},
        "campaigns": [{"name": "fi", "check": "fundamental-identity"}],
        "meta": {"construction": "", "expect": "all-pass"},
    }


# ---------------------------------------------------------------------------
# round trips
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("name", bundled_names())
def test_bundled_round_trip(name):
    doc = get_bundled(name)
    assert parse_document(render_document(doc)) == doc


def test_render_is_canonical():
    doc = get_bundled("laurent-quotient-p3")
    assert render_document(doc) == render_document(copy.deepcopy(doc))


def test_bundled_registry_copying():
    doc = get_bundled("cyclic-group-f3")
    doc["name"] = "clobbered"
    assert BUNDLED["cyclic-group-f3"]["name"] == "cyclic-group-f3"


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

def test_zero_flip_scale_rejected_at_parse():
    doc = minimal_quotient_doc()
    doc["carrier"] = {"shape": "laurent"}
    doc["bracket"] = {"form": "laurent-flip", "lambdas": ["0"]}
    doc["basis"] = {"kind": "window", "bound": 2, "tabulate": False}
    with pytest.raises(ConfigError, match="lambda != 0"):
        parse_document(render_document(doc))


def test_quotient_p2_rejected_at_parse():
    doc = minimal_quotient_doc(p=2)
    with pytest.raises(ConfigError, match="p > 2"):
        parse_document(render_document(doc))


def test_char2_flip_rejected_at_parse():
    doc = minimal_quotient_doc()
    doc["field"] = {"kind": "prime", "p": 2}
    doc["carrier"] = {"shape": "laurent"}
    doc["bracket"] = {"form": "laurent-flip", "lambdas": ["1"]}
    doc["basis"] = {"kind": "window", "bound": 2, "tabulate": False}
    with pytest.raises(ConfigError, match="characteristic != 2"):
        parse_document(render_document(doc))


def test_unknown_bracket_form():
    doc = minimal_quotient_doc()
    doc["bracket"] = {"form": "mystery"}
    with pytest.raises(ConfigError, match="unknown bracket form"):
        validate_document(doc)


def test_unknown_check_name():
    doc = minimal_quotient_doc()
    doc["campaigns"] = [{"name": "x", "check": "mystery"}]
    with pytest.raises(ConfigError, match="unknown check"):
        validate_document(doc)


def test_unresolved_map_reference():
    doc = minimal_quotient_doc()
    doc["campaigns"] = [{"name": "x", "check": "anticommute",
                         "omega": "ghost", "delta": "ghost"}]
    with pytest.raises(ConfigError, match="unresolved map reference"):
        validate_document(doc)


def test_window_bound_must_be_integer():
    doc = minimal_quotient_doc()
    doc["carrier"] = {"shape": "laurent"}
    doc["basis"] = {"kind": "window", "bound": "lots"}
    with pytest.raises(ConfigError, match="finite integer bound"):
        validate_document(doc)


def test_version_is_checked():
    doc = minimal_quotient_doc()
    doc["version"] = 99
    with pytest.raises(ConfigError, match="unsupported version"):
        validate_document(doc)


def test_json_syntax_error_carries_location():
    with pytest.raises(ConfigError, match="line"):
        parse_document("{not json")


def test_duplicate_campaign_names_rejected():
    doc = minimal_quotient_doc()
    doc["campaigns"] = [{"name": "fi", "check": "fundamental-identity"},
                        {"name": "fi", "check": "skew"}]
    with pytest.raises(ConfigError, match="duplicate campaign name"):
        validate_document(doc)


def test_algebra_only_bracket_refuses_carrier():
    doc = minimal_quotient_doc()
    doc["bracket"] = {"form": "gamma"}
    with pytest.raises(ConfigError, match="builds its own algebra"):
        validate_document(doc)


def test_structure_checks_need_tabulation():
    doc = minimal_quotient_doc()
    doc["carrier"] = {"shape": "laurent"}
    doc["bracket"] = {"form": "laurent-parity", "shift": 0}
    doc["basis"] = {"kind": "window", "bound": 2}   # tabulation escapes
    doc["campaigns"] = [{"name": "s", "check": "simplicity"}]
    with pytest.raises(ConfigError, match="needs structure constants"):
        parse_document(render_document(doc))


def test_explicit_basis_indices_parse():
    doc = minimal_quotient_doc()
    doc["basis"] = {"kind": "explicit",
                    "indices": ["t^-2", "t^-1", "1", "t^1", "t^2", "t^3"]}
    parsed = parse_document(render_document(doc))
    assert parsed["basis"]["indices"][0] == "t^-2"
