"""Tests for matrix file parsing and writing."""

import json

import pytest

from ghsimplex.core.exceptions import AsymmetricMatrix, MatrixParseError
from ghsimplex.core.matrix_io import (
    dumps_csv,
    dumps_json,
    format_real,
    json_real,
    load_space,
    loads_space,
)


class TestParsing:
    """Test CSV and JSON parsing."""

    def test_csv(self):
        space = loads_space("0,1.5\n1.5,0\n")
        assert space.dist == ((0.0, 1.5), (1.5, 0.0))

    def test_csv_with_blank_lines_and_spaces(self):
        space = loads_space("\n0, 2\n\n2 ,0\n")
        assert space.n == 2

    def test_json(self):
        text = json.dumps({"n": 2, "dist": [[0, 3], [3, 0]], "label": "pair"})
        space = loads_space(text)
        assert space.label == "pair"
        assert space.dist[0][1] == 3

    def test_empty_input(self):
        with pytest.raises(MatrixParseError) as exc_info:
            loads_space("   \n")
        assert exc_info.value.exit_code == 1

    def test_non_numeric(self):
        with pytest.raises(MatrixParseError, match="line 2"):
            loads_space("0,1\n1,x\n")

    def test_ragged_csv(self):
        with pytest.raises(MatrixParseError):
            loads_space("0,1\n1\n")

    def test_non_finite_csv(self):
        with pytest.raises(MatrixParseError, match="non-finite"):
            loads_space("0,nan\nnan,0\n")

    def test_json_shape_mismatch(self):
        with pytest.raises(MatrixParseError):
            loads_space(json.dumps({"n": 3, "dist": [[0, 1], [1, 0]]}))

    def test_malformed_json(self):
        with pytest.raises(MatrixParseError):
            loads_space('{"n": 2, "dist": ')

    def test_metric_error_is_not_parse_error(self):
        with pytest.raises(AsymmetricMatrix) as exc_info:
            loads_space("0,1\n2,0\n")
        assert exc_info.value.exit_code == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatrixParseError, match="cannot read file"):
            load_space(tmp_path / "missing.csv")

    def test_load_file_label(self, matrix_file):
        space = load_space(matrix_file)
        assert space.label == "three_regime"
        assert space.n == 4


class TestWriting:
    """Test serialization."""

    def test_format_real(self):
        assert format_real(6.0) == "6"
        assert format_real(6.5) == "6.5"
        assert format_real(0.1) == "0.1"
        assert format_real(float("inf")) == "inf"

    def test_json_real(self):
        assert json_real(float("inf")) == "inf"
        assert json_real(2.5) == 2.5

    def test_dumps_csv(self, flat_bottom_space):
        assert dumps_csv(flat_bottom_space).splitlines()[0] == "0,2,3,5"

    def test_round_trip(self, three_regime_space, random_spaces):
        for space in [three_regime_space, *random_spaces]:
            assert loads_space(dumps_csv(space)).dist == space.dist
            assert loads_space(dumps_json(space)) == space
