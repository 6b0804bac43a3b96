import json

import pytest
from click.testing import CliRunner

from apportion.cli import main
from apportion.data import parse_population_file, render_dataset_csv
from apportion.datasets import eu27
from apportion.errors import DatasetParseError
from helpers import EU27_SEATS

SMALL_CSV = "name,population\nA,600\nB,300\nC,300\n"


class TestParsing:
    def test_basic_file(self):
        ds = parse_population_file("name,population\nA,1000\nB,500\n")
        assert [s.name for s in ds.states] == ["A", "B"]
        assert ds.states[0].population == 1000
        assert ds.status_quo_seats == {}

    def test_now_seats_and_separators(self):
        ds = parse_population_file(
            'name,population,now_seats\nA,"81,802,257",99\nB,1_000_000,\n'
        )
        assert ds.states[0].population == 81802257
        assert ds.status_quo_seats == {"A": 99}

    def test_round_trip(self):
        ds = eu27()
        again = parse_population_file(render_dataset_csv(ds))
        assert again.states == ds.states
        assert again.status_quo_seats == ds.status_quo_seats

    @pytest.mark.parametrize("text,line", [
        ("name,population\nA,1000\nA,500\n", 3),       # duplicate name
        ("name,population\nA,0\n", 2),                  # non-positive
        ("name,population\nA,12x4\n", 2),               # malformed number
        ("name,population\n,1000\n", 2),                # empty name
        ("state,pop\nA,1000\n", 1),                     # bad header
    ])
    def test_error_line_numbers(self, text, line):
        with pytest.raises(DatasetParseError) as err:
            parse_population_file(text)
        assert err.value.line == line

    def test_empty_file(self):
        with pytest.raises(DatasetParseError):
            parse_population_file("")
        with pytest.raises(DatasetParseError):
            parse_population_file("name,population\n")


class TestCli:
    def run(self, *args, **kwargs):
        return CliRunner().invoke(main, list(args), **kwargs)

    def test_preset_table(self):
        result = self.run("allocate", "--preset", "eu27")
        assert result.exit_code == 0
        assert "Germany" in result.output
        assert "96" in result.output

    def test_preset_json_matches_reference(self):
        result = self.run("allocate", "--preset", "eu27", "--format", "json")
        assert result.exit_code == 0
        body = json.loads(result.output)
        seats = tuple(e["seats"] for e in body["entries"])
        assert seats == EU27_SEATS

    def test_csv_file_input(self, tmp_path):
        path = tmp_path / "states.csv"
        path.write_text(SMALL_CSV)
        result = self.run("allocate", str(path), "--base", "1", "--max", "0",
                          "--house", "7", "--format", "csv")
        assert result.exit_code == 0
        assert result.output.splitlines()[0].startswith("rank,")

    def test_infeasible_exit_code(self):
        result = self.run("allocate", "--preset", "eu27", "--house", "100")
        assert result.exit_code == 2
        assert "INFEASIBLE" in result.output

    def test_tie_exit_code(self, tmp_path):
        path = tmp_path / "tie.csv"
        path.write_text("name,population\nA,100\nB,100\n")
        result = self.run("allocate", str(path), "--base", "0", "--max", "0",
                          "--house", "3")
        assert result.exit_code == 3
        assert "TIE" in result.output

    def test_tie_policy_resolves(self, tmp_path):
        path = tmp_path / "tie.csv"
        path.write_text("name,population\nA,100\nB,100\n")
        result = self.run("allocate", str(path), "--base", "0", "--max", "0",
                          "--house", "3", "--tie-policy", "lexicographic",
                          "--format", "json")
        assert result.exit_code == 0
        body = json.loads(result.output)
        assert body["total_seats"] == 3

    def test_parse_exit_code(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("name,population\nA,notanumber\n")
        result = self.run("allocate", str(path))
        assert result.exit_code == 4
        assert "line 2" in result.output

    def test_base_validation(self):
        result = self.run("allocate", "--preset", "eu27", "--base", "5.25")
        assert result.exit_code != 0
        result = self.run("allocate", "--preset", "eu27", "--base", "5.25",
                          "--allow-general-base")
        assert result.exit_code == 0
        result = self.run("allocate", "--preset", "eu27", "--base", "5.5",
                          "--rounding", "standard")
        assert result.exit_code == 0

    def test_house_and_divisor_exclusive(self):
        result = self.run("allocate", "--preset", "eu27", "--house", "751",
                          "--divisor", "819000")
        assert result.exit_code != 0

    def test_fixed_divisor(self):
        result = self.run("allocate", "--preset", "eu27", "--divisor", "819000",
                          "--format", "json")
        assert result.exit_code == 0
        body = json.loads(result.output)
        assert body["total_seats"] == 751

    def test_accession_option(self):
        result = self.run("allocate", "--preset", "eu27",
                          "--accede", "Croatia=4425747", "--format", "json")
        assert result.exit_code == 0
        body = json.loads(result.output)
        seats = {e["name"]: e["seats"] for e in body["entries"]}
        assert seats["Croatia"] == 11

    def test_deterministic_output(self):
        a = self.run("allocate", "--preset", "eu27", "--format", "json").output
        b = self.run("allocate", "--preset", "eu27", "--format", "json").output
        assert a == b
