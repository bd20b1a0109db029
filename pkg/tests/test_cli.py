"""命令行：输出格式、退出码与 golden 文件"""

import json

import pandas as pd
import pytest

from reluctant.core.config import settings
from reluctant.models.domain import AlgorithmId, BenchRow, CountCase
from reluctant.services import bench_service
from reluctant.services.growth_service import closed_form_series


class TestRun:

    def test_two_elements(self, cli):
        code, out, _ = cli("run", "--alg", "exposort", stdin="2 1")
        payload = json.loads(out)
        assert code == 0
        assert payload["output"] == [1, 2]
        assert payload["counters"]["comparisons"] == 1
        assert payload["counters"]["swaps"] == 1

    def test_budget_exceeded(self, cli):
        code, out, _ = cli("run", "--alg", "exposort", "--budget", "3", stdin="5 4 3 2 1")
        payload = json.loads(out)
        assert code == 2
        assert payload["error"] == "budget_exceeded"
        assert payload["counters"]["comparisons"] == 3
        assert "output" not in payload

    def test_bogosort_is_byte_identical(self, cli):
        first = cli("run", "--alg", "bogosort", "--seed", "42", stdin="4 2 5 1 3")
        second = cli("run", "--alg", "bogosort", "--seed", "42", stdin="4 2 5 1 3")
        assert first == second
        assert json.loads(first[1])["seed"] == 42

    def test_seed_falls_back_to_settings(self, cli, monkeypatch):
        monkeypatch.setattr(settings, "seed", 9)
        _, out, _ = cli("run", "--alg", "bogosort", stdin="3 1 2")
        assert json.loads(out)["seed"] == 9

    def test_reads_input_file(self, cli, tmp_path):
        path = tmp_path / "input.txt"
        path.write_text("3\n1\n2\n")
        _, out, _ = cli("run", "--alg", "cubesort", str(path))
        assert json.loads(out)["output"] == [1, 2, 3]

    @pytest.mark.parametrize("stdin", ["1 two 3", "1.5", str(2 ** 63)])
    def test_parse_error(self, cli, stdin):
        code, out, err = cli("run", "--alg", "insertionsort", stdin=stdin)
        assert code == 1
        assert out == ""
        assert err.startswith("error:")

    def test_unknown_algorithm(self, cli):
        code, _, err = cli("run", "--alg", "quicksort", stdin="1")
        assert code == 1
        assert "quicksort" in err

    def test_guard(self, cli):
        code, _, _ = cli("run", "--alg", "exposort", stdin=" ".join(map(str, range(30))))
        assert code == 1

    def test_missing_argument_is_usage_error(self, cli):
        code, _, err = cli("run", stdin="1")
        assert code == 1
        assert "error" in err


class TestTrace:

    def test_golden(self, cli, golden):
        code, out, _ = cli("trace", "--alg", "insertionsort", stdin="3 2 1")
        assert code == 0
        assert out == golden("trace_insertionsort_321.json")

    def test_exposort_has_identical_events(self, cli):
        _, expo, _ = cli("trace", "--alg", "exposort", stdin="3 2 1")
        _, insertion, _ = cli("trace", "--alg", "insertionsort", stdin="3 2 1")
        assert json.loads(expo)["events"] == json.loads(insertion)["events"]

    def test_sorted_input(self, cli):
        _, out, _ = cli("trace", "--alg", "cubesort", stdin="1 2 3")
        assert '"events": []' in out

    def test_schema_keys(self, cli):
        _, out, _ = cli("trace", "--alg", "exposort", stdin="2 1")
        payload = json.loads(out)
        assert list(payload) == ["algorithm", "n", "seed", "input", "events", "counters"]
        assert list(payload["events"][0]) == ["step", "left", "larger", "smaller"]
        assert list(payload["counters"]) == ["comparisons", "swaps", "invocations", "shuffles"]

    def test_non_adjacent_swaps_carry_right(self, cli):
        _, out, _ = cli("trace", "--alg", "stoogesort", stdin="2 3 1")
        assert json.loads(out)["events"][0] == {"step": 1, "left": 1, "larger": 2, "smaller": 1, "right": 3}


class TestBench:

    def test_golden(self, cli, golden):
        code, out, _ = cli("bench", "--alg", "cubesort", "--case", "sorted",
                           "--n-min", "2", "--n-max", "6", "--no-timing")
        assert code == 0
        assert out == golden("bench_cubesort_sorted_2_6.csv")

    def test_exposort_random_is_input_independent(self, cli, tmp_path):
        _, out, _ = cli("bench", "--alg", "exposort", "--case", "random",
                        "--n-min", "4", "--n-max", "4", "--trials", "3")
        path = tmp_path / "bench.csv"
        path.write_text(out)
        df = pd.read_csv(path)
        assert list(df["comparisons"]) == [7, 7, 7]
        assert list(df["trial"]) == [0, 1, 2]

    def test_guard(self, cli):
        code, out, err = cli("bench", "--alg", "exposort", "--n-max", "30")
        assert code == 1
        assert out == ""
        assert "--i-have-time" in err

    def test_same_seed_same_csv(self, cli):
        args = ("bench", "--alg", "insertionsort", "--case", "random", "--n-min", "3",
                "--n-max", "7", "--trials", "2", "--seed", "5", "--no-timing")
        assert cli(*args) == cli(*args)

    def test_min_last_case(self, cli, tmp_path):
        _, out, _ = cli("bench", "--alg", "cubesort", "--case", "min-last",
                        "--n-min", "2", "--n-max", "8", "--no-timing")
        path = tmp_path / "bench.csv"
        path.write_text(out)
        df = pd.read_csv(path)
        assert list(df["comparisons"]) == [n * (n - 1) // 2 for n in range(2, 9)]

    def test_workers_keep_row_order(self, cli):
        args = ("bench", "--alg", "slowsort", "--case", "random", "--n-min", "2",
                "--n-max", "6", "--trials", "2", "--no-timing")
        assert cli(*args, "--workers", "2") == cli(*args)


class TestFit:

    def test_golden(self, cli, golden, tmp_path):
        _, csv, _ = cli("bench", "--alg", "exposort", "--n-min", "4", "--n-max", "8", "--no-timing")
        path = tmp_path / "expo.csv"
        path.write_text(csv)
        code, out, _ = cli("fit", "--input", str(path))
        assert code == 0
        assert out == golden("fit_exposort_4_8.json")

    def _write(self, tmp_path, algorithm, case, series):
        rows = [
            BenchRow(algorithm.value, n, case.value, 0, count, 0, 0, 0, 0)
            for n, count in series
        ]
        path = tmp_path / "series.csv"
        path.write_text(bench_service.to_csv(rows))
        return path

    def test_exposort_selects_exponential(self, cli, tmp_path):
        series = closed_form_series(AlgorithmId.EXPO_SORT, CountCase.RANDOM, range(10, 23))
        path = self._write(tmp_path, AlgorithmId.EXPO_SORT, CountCase.RANDOM, series)
        _, out, _ = cli("fit", "--input", str(path))
        assert json.loads(out)["selected"] == "exponential"

    def test_cubesort_reverse_selects_cubic(self, cli, tmp_path):
        series = closed_form_series(AlgorithmId.CUBE_SORT, CountCase.REVERSE, range(50, 401))
        path = self._write(tmp_path, AlgorithmId.CUBE_SORT, CountCase.REVERSE, series)
        _, out, _ = cli("fit", "--input", str(path))
        assert json.loads(out)["selected"] == "cubic"

    def test_two_rows_are_degenerate(self, cli, tmp_path):
        path = self._write(tmp_path, AlgorithmId.CUBE_SORT, CountCase.SORTED, [(2, 1), (3, 2)])
        code, out, err = cli("fit", "--input", str(path))
        assert code == 1
        assert out == ""
        assert "at least 4 points" in err

    def test_median_of_trials(self, tmp_path):
        rows = [
            BenchRow("bogosort", n, "random", trial, 0, 0, 1, shuffles, 0)
            for n, values in ((3, (1, 5, 9)), (4, (2, 40, 8)))
            for trial, shuffles in enumerate(values)
        ]
        path = tmp_path / "bogo.csv"
        path.write_text(bench_service.to_csv(rows))
        assert bench_service.load_series(path, metric="shuffles") == [(3, 5.0), (4, 8.0)]

    def test_bad_header(self, cli, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("n,count\n1,2\n")
        code, _, err = cli("fit", "--input", str(path))
        assert code == 1
        assert "header" in err

    def test_missing_input_file(self, cli, tmp_path):
        code, out, err = cli("fit", "--input", str(tmp_path / "absent.csv"))
        assert code == 1
        assert out == ""
        assert err.startswith("error:")
        assert "not found" in err

    def test_directory_as_input(self, cli, tmp_path):
        code, _, err = cli("fit", "--input", str(tmp_path))
        assert code == 1
        assert err.startswith("error:")

    @pytest.mark.parametrize("alg", ["cubesort", "insertionsort", "exposort"])
    def test_default_bench_range_is_fittable(self, cli, tmp_path, alg):
        _, csv, _ = cli("bench", "--alg", alg, "--n-max", "8", "--no-timing")
        path = tmp_path / "bench.csv"
        path.write_text(csv)
        assert pd.read_csv(path)["n"].min() == 2
        code, out, _ = cli("fit", "--input", str(path))
        assert code == 0
        assert json.loads(out)["series"][0][0] == 2

    def test_ratios(self, cli, tmp_path):
        series = closed_form_series(AlgorithmId.EXPO_SORT, CountCase.RANDOM, range(10, 16))
        path = self._write(tmp_path, AlgorithmId.EXPO_SORT, CountCase.RANDOM, series)
        _, out, _ = cli("fit", "--input", str(path), "--ratios")
        payload = json.loads(out)
        assert list(payload) == ["series", "models", "selected", "ratios"]
        assert [n for n, _ in payload["ratios"]] == list(range(11, 16))


class TestVerify:

    def test_small_run_passes(self, cli):
        code, out, _ = cli("verify", "--max-n", "3", "--random-inputs", "5")
        assert code == 0
        assert "FAIL" not in out
        assert out.splitlines()[0].split() == ["suite", "cases", "status", "detail"]

    def test_max_n_guard(self, cli):
        code, _, _ = cli("verify", "--max-n", "11")
        assert code == 1

    def test_random_expo_max_n(self, cli):
        code, out, _ = cli("verify", "--max-n", "3", "--random-inputs", "3", "--random-expo-max-n", "6")
        assert code == 0
        assert "FAIL" not in out

    @pytest.mark.parametrize("value", ["0", "27"])
    def test_random_expo_max_n_guard(self, cli, value):
        code, out, err = cli("verify", "--max-n", "3", "--random-expo-max-n", value)
        assert code == 1
        assert out == ""
        assert "--random-expo-max-n" in err
