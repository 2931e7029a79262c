"""Responses and their json, csv and text renderings."""

import json
import math

import numpy as np
import pytest

from conebound.core import Regime
from conebound.report import Response, format_number, plain, render


@pytest.fixture
def table():
    response = Response(Response.CONVERGE, "Convergence study")
    response.add_field("family", "tail-power alpha=2 t=1")
    response.add_field("target", 9.0)
    response.add_row({"size": 10, "lambda_pow_q": 0.1, "gap": math.nan})
    response.add_row({"size": 100, "lambda_pow_q": 1 / 3, "gap": -math.inf})
    return response


class TestResponse:

    def test_fields_keep_their_order(self):
        response = Response(Response.BOUND, "Sharp bound")
        response.add_field("b", 1)
        response.add_field("a", 2)
        assert list(response.fields) == ["b", "a"]
        assert not response.is_table

    def test_violation_status(self):
        assert Response(Response.VERIFY, "Oracle verification", exit_code=1).is_violation
        assert not Response(Response.VERIFY, "Oracle verification").is_violation


class TestPlain:

    def test_conversions(self):
        assert plain(Regime.LOWER) == "lower"
        assert plain(np.float64(0.5)) == 0.5
        assert plain(np.int64(3)) == 3 and isinstance(plain(np.int64(3)), int)
        assert plain(np.bool_(True)) is True
        assert plain(np.array([1.0, 2.0])) == [1.0, 2.0]
        assert plain({"v": (np.int32(1),)}) == {"v": [1]}

    @pytest.mark.parametrize("value, text", [
        (0.1, "0.10000000000000001"), (math.inf, "inf"), (-math.inf, "-inf"), (math.nan, "nan"), (2.0, "2"),
    ])
    def test_format_number(self, value, text):
        assert format_number(value) == text


class TestRender:

    def test_json_round_trips(self, table):
        text = render(table, "json")
        assert text.endswith("}\n")
        document = json.loads(text)
        assert list(document) == ["family", "target", "rows"]
        assert document["rows"][1]["lambda_pow_q"] == 1 / 3
        assert document["rows"][0]["gap"] == "nan"
        assert document["rows"][1]["gap"] == "-inf"

    def test_json_layout(self):
        response = Response(Response.CONSTANT, "Published constant")
        response.add_field("value", 9.0)
        response.add_field("citation", None)
        response.add_field("covered", True)
        assert render(response, "json") == '{\n  "value": 9,\n  "citation": null,\n  "covered": true\n}\n'

    def test_csv_repeats_scalars(self, table):
        lines = render(table, "csv").splitlines()
        assert lines[0] == "family,target,size,lambda_pow_q,gap"
        assert lines[1] == "tail-power alpha=2 t=1,9,10,0.10000000000000001,nan"
        assert len(lines) == 3

    def test_csv_without_rows(self):
        response = Response(Response.BOUND, "Sharp bound")
        response.add_field("lambda", 1.5)
        response.add_field("worst_vector", np.array([1.0, 0.5]))
        assert render(response, "csv") == "lambda,worst_vector\n1.5,1 0.5\n"

    def test_text(self, table):
        lines = render(table, "text").splitlines()
        assert lines[0] == "Convergence study"
        assert lines[1] == "=" * len("Convergence study")
        assert lines[2] == "family: tail-power alpha=2 t=1"
        assert lines[3] == "target: 9"
        assert lines[5].split() == ["size", "lambda_pow_q", "gap"]
        assert lines[6].split() == ["10", "0.10000000000000001", "nan"]

    def test_unknown_format(self, table):
        with pytest.raises(ValueError):
            render(table, "xml")
