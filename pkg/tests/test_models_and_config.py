"""
Tests for the JSON documents and settings loading.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from conftest import points
from pydantic import ValidationError

from starcover.config import COORDINATE_LIMIT, Settings
from starcover.core.geometry import Color, DirectedLine
from starcover.core.partition import ThreeCut, TwoCut
from starcover.coverings import Covering, Star, cover_driver
from starcover.generators import gen_double_chain, gen_random, read_double_chain, read_point_set
from starcover.models import (
    CertificateDoc,
    CoveringDocument,
    CuttingDoc,
    HalfplaneDoc,
    PointSetDocument,
    decode_rational,
    encode_rational,
)


# ---------------------------------------------------------------------------
# Point sets
# ---------------------------------------------------------------------------
def test_point_set_document_parses_colors():
    doc = PointSetDocument.model_validate(
        {"points": [{"id": 4, "x": 3, "y": -7, "color": "R"}, {"id": 9, "x": 0, "y": 2, "color": "B"}]}
    )
    s = doc.to_point_set()

    assert sorted(s.ids) == [4, 9]
    assert s.color(9) is Color.BLUE


@pytest.mark.parametrize(
    "points_json",
    [
        [{"id": 0, "x": 0, "y": 0, "color": "R"}, {"id": 0, "x": 1, "y": 1, "color": "B"}],
        [{"id": 0, "x": COORDINATE_LIMIT + 1, "y": 0, "color": "R"}],
        [{"id": 0, "x": 0, "y": 0, "color": "G"}],
        [{"id": -1, "x": 0, "y": 0, "color": "R"}],
    ],
    ids=["duplicate-id", "coordinate-range", "color", "negative-id"],
)
def test_point_set_document_rejects_bad_input(points_json):
    with pytest.raises(ValidationError):
        PointSetDocument.model_validate({"points": points_json})


def test_point_set_file_keeps_ids(points_file):
    s = gen_random(4, 3, seed=2).without([1, 5])
    loaded = read_point_set(points_file(s))

    assert sorted(loaded.ids) == sorted(s.ids)
    assert all(loaded.xy(i) == s.xy(i) for i in s.ids)


def test_double_chain_file(tmp_path):
    from starcover.generators import write_double_chain

    dc = gen_double_chain("RRRB", "BBBR", seed=1)
    path = tmp_path / "dc.json"
    write_double_chain(dc, path)
    loaded = read_double_chain(path)

    assert loaded.chain1 == dc.chain1
    assert loaded.chain2 == dc.chain2
    loaded.validate()


# ---------------------------------------------------------------------------
# Coverings
# ---------------------------------------------------------------------------
def test_covering_document_carries_the_certificate():
    s = gen_random(10, 4, seed=0)
    covering = cover_driver(s)
    doc = CoveringDocument.from_covering(covering, strategy="driver")
    parsed = CoveringDocument.model_validate_json(doc.model_dump_json()).to_covering()

    assert doc.strategy == "driver"
    assert doc.certificate.bound == "68/7"
    assert doc.certificate.bound_ceil == 10
    assert parsed.certificate.bound == Fraction(68, 7)
    assert parsed.stars == covering.stars
    assert parsed.uncovered == sorted(covering.uncovered)


def test_covering_document_without_certificate(one_star):
    doc = CoveringDocument.from_covering(Covering(stars=[Star(0, (1, 2, 3))]))
    assert doc.certificate is None
    assert doc.model_dump()["stars"] == [{"center": 0, "leaves": [1, 2, 3]}]


def test_star_doc_needs_three_leaves():
    with pytest.raises(ValidationError):
        CoveringDocument.model_validate({"stars": [{"center": 0, "leaves": [1, 2]}]})


def test_certificate_bound_must_be_rational():
    with pytest.raises(ValidationError):
        CertificateDoc(branch="general-t", bound="two", bound_ceil=2)


# ---------------------------------------------------------------------------
# Lines and cuttings
# ---------------------------------------------------------------------------
@pytest.mark.parametrize("value, encoded", [(7, 7), (Fraction(-3, 4), "-3/4"), (Fraction(8, 2), 4)])
def test_rational_encoding(value, encoded):
    assert encode_rational(value) == encoded
    assert decode_rational(encoded) == value


def test_halfplane_doc_keeps_fraction_anchors():
    line = DirectedLine((Fraction(1, 3), 5), (2, -1))
    doc = HalfplaneDoc.from_line(line)

    assert doc.anchor == ("1/3", 5)
    restored = doc.to_line()
    assert restored.side((0, 100)) == line.side((0, 100))


def test_halfplane_doc_rejects_zero_direction():
    with pytest.raises(ValidationError):
        HalfplaneDoc(anchor=(0, 0), direction=(0, 0))


def test_cutting_doc_round_trips_both_kinds():
    two = CuttingDoc.from_cutting(TwoCut(DirectedLine((0, 0), (1, 1))))
    three = CuttingDoc.from_cutting(ThreeCut((Fraction(1, 2), 0), ((1, 0), (-1, 2), (-1, -3)), (2, 0, 1)))

    assert two.kind == "2cut" and isinstance(two.to_cutting(), TwoCut)
    cut = three.to_cutting()
    assert isinstance(cut, ThreeCut)
    assert cut.apex == (Fraction(1, 2), 0)
    assert cut.assignment == (2, 0, 1)


@pytest.mark.parametrize(
    "payload",
    [{"kind": "2cut"}, {"kind": "3cut", "apex": [0, 0], "rays": [[1, 0], [0, 1]]}],
)
def test_cutting_doc_requires_its_geometry(payload):
    with pytest.raises(ValidationError):
        CuttingDoc.model_validate(payload)


# ---------------------------------------------------------------------------
# Settings
# ---------------------------------------------------------------------------
def test_settings_ignores_unknown_env_keys(tmp_path):
    """An .env with extra keys must not prevent startup."""
    env_file = tmp_path / ".env"
    env_file.write_text(
        "STARCOVER_CONVEX_DP_MAX_POINTS=16\n"
        "STARCOVER_SOME_FUTURE_OPTION=whatever\n"
        "ANOTHER_UNKNOWN=1\n"
    )

    assert Settings(_env_file=str(env_file)).convex_dp_max_points == 16


def test_environment_beats_the_env_file(tmp_path, monkeypatch):
    env_file = tmp_path / ".env"
    env_file.write_text("STARCOVER_SVG_SIZE=300\n")
    monkeypatch.setenv("STARCOVER_SVG_SIZE", "640")

    assert Settings(_env_file=str(env_file)).svg_size == 640


def test_settings_strips_inline_comments(tmp_path, monkeypatch):
    monkeypatch.delenv("STARCOVER_LOG_LEVEL", raising=False)
    env_file = tmp_path / ".env"
    env_file.write_text("STARCOVER_LOG_LEVEL=debug  # verbose\n")

    assert Settings(_env_file=str(env_file)).log_level == "DEBUG"


@pytest.mark.parametrize(
    "line",
    [
        "STARCOVER_CONVEX_DP_MAX_POINTS=0",
        "STARCOVER_SVG_MARGIN=-1",
        "STARCOVER_COORDINATE_LIMIT=2147483648",
        "STARCOVER_CUT_APEX_TRIPLE_LIMIT=-5",
    ],
)
def test_settings_rejects_out_of_range_values(tmp_path, line):
    env_file = tmp_path / ".env"
    env_file.write_text(line + "\n")

    with pytest.raises(ValidationError):
        Settings(_env_file=str(env_file))


def test_generator_radius_must_fit_the_kernel(monkeypatch):
    monkeypatch.setenv("STARCOVER_GENERATOR_RADIUS", str(COORDINATE_LIMIT))
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_example_env_file_loads(tmp_path):
    """The shipped .env.example must be a valid configuration."""
    import shutil

    example = Path(__file__).resolve().parents[1] / ".env.example"
    target = tmp_path / ".env"
    shutil.copy(example, target)

    settings = Settings(_env_file=str(target))
    assert settings.app_name == "starcover"
    assert settings.convex_dp_max_points == 24
    assert settings.bench_workers == 1


def test_points_builder_matches_the_document(one_star):
    doc = PointSetDocument.from_point_set(one_star)
    assert doc.to_point_set().ids == points((0, 0, "R"), (10, 1, "B"), (-6, 9, "B"), (-5, -11, "B")).ids
