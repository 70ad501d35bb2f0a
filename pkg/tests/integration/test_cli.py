"""End-to-end runs of the sos-formulas command line."""
from pathlib import Path

import pytest

from apps.cli.codec import (
    dump_doc,
    formula_from_doc,
    formula_to_doc,
    ideal_from_doc,
    ideal_to_doc,
    read_doc,
)
from apps.cli.exit_codes import ExitCode
from apps.cli.main import main
from apps.cli.schemas import FormulaDoc, IdealDoc


def write_ideal(tmp_path: Path, r: int, s: int, n: int, *extra: str) -> str:
    path = tmp_path / f"ideal-{r}{s}{n}.json"
    code = main(["ideal", "--r", str(r), "--s", str(s), "--n", str(n), *extra, "--out", str(path)])
    assert code == ExitCode.OK
    return str(path)


def write_catalog(tmp_path: Path, n: int) -> str:
    path = tmp_path / f"catalog-{n}.json"
    assert main(["catalog", "--n", str(n), "--out", str(path)]) == ExitCode.OK
    return str(path)


class TestIdeal:
    def test_one_two_one(self, run_cli):
        code, doc = run_cli("ideal", "--r", "1", "--s", "2", "--n", "1")
        assert code == ExitCode.OK
        assert doc["kind"] == "ideal"
        assert doc["field"] == {"kind": "q"}
        assert len(doc["variables"]) == 2
        assert len(doc["generators"]) == 3

    def test_over_prime_field(self, run_cli):
        code, doc = run_cli("ideal", "--r", "1", "--s", "1", "--n", "1", "--field", "fp", "--p", "5")
        assert code == ExitCode.OK
        assert doc["field"] == {"kind": "fp", "p": "5"}

    def test_rejects_zero_type(self, run_cli):
        code, doc = run_cli("ideal", "--r", "0", "--s", "1", "--n", "1")
        assert code == ExitCode.USAGE
        assert doc == {}

    def test_missing_type_flag(self, run_cli):
        code, _ = run_cli("ideal", "--r", "1", "--s", "1")
        assert code == ExitCode.USAGE

    def test_prime_field_needs_p(self, run_cli):
        code, _ = run_cli("ideal", "--r", "1", "--s", "1", "--n", "1", "--field", "fp")
        assert code == ExitCode.USAGE


class TestGroebner:
    def test_improper_over_rationals(self, tmp_path, run_cli):
        code, doc = run_cli("groebner", "--input", write_ideal(tmp_path, 1, 2, 1))
        assert code == ExitCode.NEGATIVE
        assert doc["proper"] is False

    def test_proper_over_rationals(self, tmp_path, run_cli):
        code, doc = run_cli("groebner", "--input", write_ideal(tmp_path, 1, 1, 1))
        assert code == ExitCode.OK
        assert doc["proper"] is True
        assert doc["type"] == {"r": 1, "s": 1, "n": 1}

    def test_target_field(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 2, 2, 1)
        code, doc = run_cli("groebner", "--input", ideal, "--field", "fp", "--p", "7")
        assert code == ExitCode.NEGATIVE
        assert doc["field"] == {"kind": "fp", "p": "7"}

    def test_compare_mod_p(self, tmp_path, run_cli):
        code, doc = run_cli("groebner", "--input", write_ideal(tmp_path, 1, 1, 1), "--compare-p", "5")
        assert code == ExitCode.OK
        assert doc["agrees_mod_p"] is True

    def test_step_cap_is_undecided(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 1, 2, 1)
        code, doc = run_cli("groebner", "--input", ideal, "--max-steps", "1")
        assert code == ExitCode.UNDECIDED
        assert doc == {}

    def test_missing_input_file(self, tmp_path, run_cli):
        code, _ = run_cli("groebner", "--input", str(tmp_path / "absent.json"))
        assert code == ExitCode.USAGE

    def test_malformed_input(self, write_json, run_cli):
        code, _ = run_cli("groebner", "--input", write_json("bad.json", {"kind": "ideal"}))
        assert code == ExitCode.USAGE


class TestSearch:
    def test_found(self, run_cli):
        code, doc = run_cli("search", "--r", "2", "--s", "2", "--n", "2", "--p", "3")
        assert code == ExitCode.OK
        assert doc["status"] == "found"
        assert len(doc["formulas"]) == 1

    def test_exhausted(self, run_cli):
        code, doc = run_cli("search", "--r", "1", "--s", "2", "--n", "1", "--p", "3")
        assert code == ExitCode.NEGATIVE
        assert doc["status"] == "exhausted-none"
        assert doc["complete"] is True

    def test_count(self, run_cli):
        code, doc = run_cli(
            "search", "--r", "1", "--s", "1", "--n", "1", "--p", "5", "--emit", "count"
        )
        assert code == ExitCode.OK
        assert doc["count"] == 2
        assert doc["formulas"] == []

    def test_naive_strategy_agrees(self, run_cli):
        code, doc = run_cli(
            "search", "--r", "1", "--s", "1", "--n", "1", "--p", "5",
            "--strategy", "naive", "--emit", "count",
        )
        assert code == ExitCode.OK
        assert doc["count"] == 2

    def test_characteristic_two(self, run_cli):
        code, _ = run_cli("search", "--r", "1", "--s", "1", "--n", "1", "--p", "2")
        assert code == ExitCode.USAGE

    def test_node_budget(self, run_cli):
        code, doc = run_cli(
            "search", "--r", "2", "--s", "2", "--n", "2", "--p", "5",
            "--emit", "count", "--node-budget", "10",
        )
        assert code == ExitCode.UNDECIDED
        assert doc["status"] == "budget-exceeded"

    def test_tower(self, run_cli):
        code, doc = run_cli("search", "--r", "2", "--s", "2", "--n", "2", "--p", "3", "--kmax", "2")
        assert code == ExitCode.OK
        assert doc["kind"] == "tower"
        assert doc["first_k"] == 1


class TestZeta:
    def test_two_points_from_ideal(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 1, 1, 1)
        code, doc = run_cli(
            "zeta", "--input", ideal, "--p", "5", "--kmax", "4", "--d1", "0", "--d2", "2"
        )
        assert code == ExitCode.OK
        assert doc["counts"] == ["2", "2", "2", "2"]
        assert doc["r1"] == ["1"]
        assert doc["r2"] == ["1", "-2", "1"]
        assert doc["bombieri"] == "289"
        assert doc["within_bombieri"] is True

    def test_saved_counts_reproduce(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 1, 1, 1)
        counts = str(tmp_path / "counts.json")
        _, direct = run_cli(
            "zeta", "--input", ideal, "--p", "5", "--kmax", "4", "--d1", "0", "--d2", "2",
            "--save-counts", counts,
        )
        code, again = run_cli("zeta", "--counts", counts, "--d1", "0", "--d2", "2")
        assert code == ExitCode.OK
        assert again == direct

    def test_all_zero_counts(self, write_json, run_cli):
        counts = write_json(
            "zero.json", {"format": 1, "kind": "counts", "p": "3", "nvars": 2, "counts": ["0"] * 3}
        )
        code, doc = run_cli("zeta", "--counts", counts, "--d1", "1", "--d2", "2")
        assert code == ExitCode.OK
        assert doc["r1"] == ["1"]
        assert doc["r2"] == ["1"]

    def test_non_integral_series(self, write_json, run_cli):
        counts = write_json(
            "odd.json", {"format": 1, "kind": "counts", "p": "5", "nvars": 1, "counts": ["1", "2"]}
        )
        code, _ = run_cli("zeta", "--counts", counts, "--d1", "1", "--d2", "1")
        assert code == ExitCode.INCONSISTENT

    @pytest.mark.parametrize("values", [["2", "1"], ["0", "26"]])
    def test_impossible_counts(self, write_json, run_cli, values):
        counts = write_json(
            "bad.json", {"format": 1, "kind": "counts", "p": "5", "nvars": 1, "counts": values}
        )
        code, _ = run_cli("zeta", "--counts", counts, "--d1", "1", "--d2", "1")
        assert code == ExitCode.INCONSISTENT

    def test_kmax_below_degree_sum(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 1, 1, 1)
        code, _ = run_cli(
            "zeta", "--input", ideal, "--p", "5", "--kmax", "2", "--d1", "1", "--d2", "2"
        )
        assert code == ExitCode.USAGE

    def test_count_budget(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 1, 1, 1)
        code, _ = run_cli(
            "zeta", "--input", ideal, "--p", "5", "--kmax", "2", "--d1", "0", "--d2", "2",
            "--count-budget", "10",
        )
        assert code == ExitCode.UNDECIDED


class TestBounds:
    def test_one_one_one(self, run_cli):
        code, doc = run_cli("bounds", "--r", "1", "--s", "1", "--n", "1")
        assert code == ExitCode.OK
        assert doc["field_degree"] == {"tier": "exact", "payload": "578"}
        assert doc["q"] == {"tier": "exact", "payload": "17"}
        assert doc["step_bound"] == {"tier": "exact", "payload": "9"}
        assert doc["charp_threshold"]["tier"] == "log2-exact"
        assert doc["bombieri"] == "289"

    def test_two_two_two_field_degree(self, run_cli):
        code, doc = run_cli("bounds", "--r", "2", "--s", "2", "--n", "2")
        assert code == ExitCode.OK
        assert doc["field_degree"] == {"tier": "exact", "payload": str(2 * 17**24)}

    def test_small_bit_cap(self, run_cli):
        code, doc = run_cli("--bit-cap", "64", "bounds", "--r", "2", "--s", "2", "--n", "2")
        assert code == ExitCode.OK
        assert doc["field_degree"]["tier"] == "loglog2-approx"

    def test_mode(self, run_cli):
        code, doc = run_cli("bounds", "--r", "1", "--s", "2", "--n", "1", "--mode", "dube-consistent")
        assert code == ExitCode.OK
        assert doc["exponent"] == 2
        assert doc["degree"] == {"tier": "exact", "payload": "32"}

    def test_needs_a_type(self, run_cli):
        code, _ = run_cli("bounds")
        assert code == ExitCode.USAGE

    def test_bit_cap_below_minimum(self, run_cli):
        code, _ = run_cli("--bit-cap", "8", "bounds", "--r", "1", "--s", "1", "--n", "1")
        assert code == ExitCode.USAGE


class TestVerify:
    def test_catalog_formula(self, tmp_path, run_cli):
        code, doc = run_cli("verify", "--formula", write_catalog(tmp_path, 2))
        assert code == ExitCode.OK
        assert doc["passed"] is True

    def test_sign_flipped_formula(self, tmp_path, run_cli):
        doc = read_doc(write_catalog(tmp_path, 2), FormulaDoc)
        row = doc.alpha[0][0]
        index = next(k for k, c in enumerate(row) if not c.startswith("0"))
        row[index] = row[index][1:] if row[index].startswith("-") else "-" + row[index]
        flipped = tmp_path / "flipped.json"
        flipped.write_text(dump_doc(doc), encoding="utf-8")

        code, out = run_cli("verify", "--formula", str(flipped))
        assert code == ExitCode.NEGATIVE
        assert out["passed"] is False

    def test_reduced_mod_p(self, tmp_path, run_cli):
        code, doc = run_cli("verify", "--formula", write_catalog(tmp_path, 4), "--p", "11")
        assert code == ExitCode.OK
        assert doc["field"] == {"kind": "fp", "p": "11"}

    def test_malformed_json(self, tmp_path, run_cli):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _ = run_cli("verify", "--formula", str(path))
        assert code == ExitCode.USAGE


class TestCatalog:
    def test_restricted(self, run_cli):
        code, doc = run_cli("catalog", "--n", "4", "--r", "2", "--s", "3")
        assert code == ExitCode.OK
        assert (doc["r"], doc["s"], doc["n"]) == (2, 3, 4)

    def test_unsupported_size(self, run_cli):
        code, _ = run_cli("catalog", "--n", "3")
        assert code == ExitCode.USAGE


class TestPipeline:
    def test_ideal_groebner_bounds(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 1, 1, 1)
        trace = str(tmp_path / "trace.json")
        code, basis = run_cli("groebner", "--input", ideal, "--trace", trace)
        assert code == ExitCode.OK

        code, report = run_cli("bounds", "--input", ideal, "--trace", trace)
        assert code == ExitCode.OK
        assert report["type"] == basis["type"]
        assert all(row["within"] for row in report["observed"])

    def test_type_from_trace_alone(self, tmp_path, run_cli):
        ideal = write_ideal(tmp_path, 1, 1, 1)
        trace = str(tmp_path / "trace.json")
        run_cli("groebner", "--input", ideal, "--trace", trace)
        code, report = run_cli("bounds", "--trace", trace)
        assert code == ExitCode.OK
        assert report["type"] == {"r": 1, "s": 1, "n": 1}


class TestDocuments:
    @pytest.mark.parametrize("field_args", [(), ("--field", "fp", "--p", "7")])
    def test_ideal_rewrites_identically(self, tmp_path, field_args):
        path = write_ideal(tmp_path, 1, 2, 2, *field_args)
        text = Path(path).read_text(encoding="utf-8")
        ring, generators, t = ideal_from_doc(read_doc(path, IdealDoc))
        assert dump_doc(ideal_to_doc(ring, generators, t)) == text

    def test_formula_rewrites_identically(self, tmp_path):
        path = write_catalog(tmp_path, 4)
        text = Path(path).read_text(encoding="utf-8")
        formula = formula_from_doc(read_doc(path, FormulaDoc))
        assert dump_doc(formula_to_doc(formula)) == text
