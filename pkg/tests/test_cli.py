import json

import pytest

from coverlattice.cli import main

from conftest import FIVE_VERTEX_TEXT, FOUR_CYCLE_TEXT


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


class TestCheck:
    def test_mixed_graph(self, write, capsys):
        assert main(["check", write("g.txt", FIVE_VERTEX_TEXT)]) == 0
        assert capsys.readouterr().out.strip() == "bipartite=yes unmixed=no covers=3"

    def test_four_cycle(self, write, capsys):
        assert main(["check", write("g.txt", FOUR_CYCLE_TEXT)]) == 0
        assert capsys.readouterr().out.strip() == "bipartite=yes unmixed=yes covers=2 cm=no"

    def test_two_disjoint_edges(self, write, capsys):
        assert main(["check", write("g.txt", "1 2\n3 4\n")]) == 0
        out = capsys.readouterr().out
        assert "unmixed=yes" in out and "cm=yes" in out

    def test_triangle_not_bipartite(self, write, capsys):
        assert main(["check", write("g.txt", "1 2\n2 3\n1 3\n")]) == 0
        assert "bipartite=no" in capsys.readouterr().out

    def test_json(self, write, capsys):
        assert main(["check", "--format", "json", write("g.txt", FOUR_CYCLE_TEXT)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "bipartite": True,
            "unmixed": True,
            "covers": 2,
            "cohen_macaulay": False,
        }

    def test_parse_error_exits_2(self, write, capsys):
        assert main(["check", write("g.txt", "1 1\n")]) == 2
        assert "loop" in capsys.readouterr().err

    def test_missing_file_exits_2(self, capsys):
        assert main(["check", "/nonexistent/file.txt"]) == 2


class TestCovers:
    def test_lists_all(self, write, capsys):
        assert main(["covers", write("g.txt", FIVE_VERTEX_TEXT)]) == 0
        assert capsys.readouterr().out == "2 4\n1 3 4\n1 3 5\n"

    def test_cap_override(self, write, capsys):
        edges = "\n".join(f"{2 * i + 1} {2 * i + 2}" for i in range(13))
        path = write("g.txt", edges + "\n")
        assert main(["covers", path]) == 2
        assert main(["covers", "--max-vertices", "26", path]) == 0


class TestDim:
    def test_four_cycle(self, write, capsys):
        assert main(["dim", write("g.txt", FOUR_CYCLE_TEXT)]) == 0
        out = capsys.readouterr().out
        assert "dimension=2" in out
        assert "lattice_rank=1" in out

    def test_two_disjoint_edges(self, write, capsys):
        assert main(["dim", write("g.txt", "1 2\n3 4\n")]) == 0
        out = capsys.readouterr().out
        assert "dimension=3" in out and "lattice_rank=2" in out

    def test_single_edge(self, write, capsys):
        assert main(["dim", write("g.txt", "1 2\n")]) == 0
        assert "dimension=2" in capsys.readouterr().out

    def test_mixed_graph_exits_2(self, write, capsys):
        assert main(["dim", write("g.txt", FIVE_VERTEX_TEXT)]) == 2
        assert "not unmixed" in capsys.readouterr().err

    def test_non_bipartite_exits_2(self, write, capsys):
        assert main(["dim", write("g.txt", "1 2\n2 3\n1 3\n")]) == 2
        assert "not bipartite" in capsys.readouterr().err

    def test_json_payload(self, write, capsys):
        assert main(["dim", "--format", "json", write("g.txt", "1 2\n3 4\n")]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["dimension"] == 3
        assert payload["cohen_macaulay"] is True
        assert "rank_full_mod2" in payload


class TestLattice:
    def test_emits_lattice_file(self, write, capsys):
        assert main(["lattice", write("g.txt", "1 2\n3 4\n")]) == 0
        assert capsys.readouterr().out == "n=2\n{}\n1\n2\n1,2\n"

    def test_dot_export(self, write, tmp_path, capsys):
        dot = tmp_path / "hasse.dot"
        assert main(["lattice", "--dot", str(dot), write("g.txt", FOUR_CYCLE_TEXT)]) == 0
        text = dot.read_text()
        assert text.startswith("digraph hasse {")
        assert '"{}" -> "{1,2}";' in text


class TestFromLattice:
    def test_two_element_lattice(self, write, capsys):
        assert main(["from-lattice", write("l.txt", "n=2\n{}\n1,2\n")]) == 0
        captured = capsys.readouterr()
        assert captured.out == "n=2\n1 1\n1 2\n2 1\n2 2\n"
        assert "round-trip=ok" in captured.err

    def test_boolean_lattice_gives_matching(self, write, capsys):
        assert main(["from-lattice", write("l.txt", "n=2\n{}\n1\n2\n1,2\n")]) == 0
        assert capsys.readouterr().out == "n=2\n1 1\n2 2\n"

    def test_open_family_exits_2_with_certificate(self, write, capsys):
        assert main(["from-lattice", write("l.txt", "n=2\n{}\n1\n2\n")]) == 2
        err = capsys.readouterr().err
        assert "certificate" in err
        assert "{1} | {2} = {1,2}" in err


class TestVerify:
    def test_exhaustive_n2(self, capsys):
        assert main(["verify", "--n", "2"]) == 0
        out = capsys.readouterr().out
        assert "instances=4" in out and "failures=0" in out

    def test_exhaustive_n1(self, capsys):
        assert main(["verify", "--n", "1"]) == 0
        assert "instances=1" in capsys.readouterr().out

    def test_random_sweep_json(self, capsys):
        assert main(["verify", "--random", "25", "7", "--format", "json"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        records = [json.loads(line) for line in lines]
        assert len(records) == 26  # 25 instances plus the summary
        summary = records[-1]["summary"]
        assert summary["instances"] == 25 and summary["failures"] == 0
        for record in records[:-1]:
            assert record["dimension"] == record["lattice_rank"] + 1

    def test_random_deterministic(self, capsys):
        assert main(["verify", "--random", "10", "3", "--format", "json"]) == 0
        first = capsys.readouterr().out
        assert main(["verify", "--random", "10", "3", "--format", "json"]) == 0
        assert capsys.readouterr().out == first

    def test_size_limit(self, capsys):
        assert main(["verify", "--random", "1", "1", "--size", "9"]) == 2

    def test_exhaustive_limit(self, capsys):
        assert main(["verify", "--n", "5"]) == 2


class TestExitCodes:
    def test_inconsistency_maps_to_exit_1(self, write, capsys, monkeypatch):
        from coverlattice import InconsistencyError
        from coverlattice import cli as cli_module

        def boom(*args, **kwargs):
            raise InconsistencyError("forced for the exit-code contract", details={"n": 1})

        monkeypatch.setattr(cli_module, "analyze_graph", boom)
        assert main(["dim", write("g.txt", FOUR_CYCLE_TEXT)]) == 1
        err = capsys.readouterr().err
        assert "INCONSISTENCY" in err

    def test_no_growth_flag(self, capsys):
        assert main(["verify", "--n", "2", "--no-growth"]) == 0
        out = capsys.readouterr().out
        assert "growth_skipped=4" in out


class TestGen:
    def test_no_generators(self, capsys):
        assert main(["gen", "--n", "2", "--generators", "0"]) == 0
        assert capsys.readouterr().out == "n=2\n{}\n1,2\n"

    def test_gen_output_is_valid_sublattice(self, tmp_path, capsys):
        out = tmp_path / "lat.txt"
        assert main(["gen", "--n", "3", "--generators", "2", "--seed", "1", "--out", str(out)]) == 0
        from coverlattice import is_sublattice, parse_lattice

        lat = parse_lattice(out.read_text())
        ok, _ = is_sublattice(lat.elements, lat.n)
        assert ok

    def test_gen_from_lattice_dim_pipeline(self, tmp_path, capsys):
        lat_file = tmp_path / "lat.txt"
        graph_file = tmp_path / "graph.txt"
        assert main(["gen", "--n", "4", "--generators", "3", "--seed", "9", "--out", str(lat_file)]) == 0
        assert main(["from-lattice", str(lat_file), "--out", str(graph_file)]) == 0
        assert main(["dim", str(graph_file)]) == 0
        out = capsys.readouterr().out
        assert "dim_matches_lattice_rank=yes" in out

    def test_gen_graph_out(self, tmp_path, capsys):
        graph_file = tmp_path / "graph.txt"
        assert main(["gen", "--n", "3", "--generators", "5", "--seed", "4", "--graph-out", str(graph_file)]) == 0
        from coverlattice import parse_labeled

        lg = parse_labeled(graph_file.read_text())
        assert lg.n == 3
