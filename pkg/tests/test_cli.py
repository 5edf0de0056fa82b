import pytest

from mvmatch import (
    DisjointnessViolation,
    EmptyPattern,
    FormatError,
    UnknownSymbol,
    parse_pattern_string,
    parse_text_file,
    serialize_pattern,
    serialize_text,
)
from mvmatch.cli import main

from helpers import char_pattern, char_registry, char_text

BABB_FILE = b"word\ttag\n" + b"".join(
    f"{w}\t{t}\n".encode() for w, t in zip("cabbaabc", "BABABACB")
)


def write_babb(tmp_path):
    path = tmp_path / "text.tsv"
    path.write_bytes(BABB_FILE)
    return str(path)


class TestParseTextFile:
    def test_paper_example_file(self):
        registry, text = parse_text_file(BABB_FILE)
        assert registry.k == 2
        assert text.n == 8
        assert registry.view_names == ("word", "tag")
        tokens = [registry.token_of(s) for s in text.views[0]]
        assert "".join(tokens) == "cabbaabc"

    def test_header_only(self):
        registry, text = parse_text_file(b"word\ttag\n")
        assert registry.k == 2 and text.n == 0

    def test_disjointness_violation(self):
        data = b"w\tt\nrun\trun\n"
        with pytest.raises(DisjointnessViolation):
            parse_text_file(data)

    def test_wrong_field_count(self):
        with pytest.raises(FormatError) as exc:
            parse_text_file(b"w\tt\na\n")
        assert exc.value.line == 2

    def test_empty_token(self):
        with pytest.raises(FormatError):
            parse_text_file(b"w\tt\na\t\n")

    def test_empty_file(self):
        with pytest.raises(FormatError):
            parse_text_file(b"")

    def test_round_trip(self):
        registry, text = parse_text_file(BABB_FILE)
        assert serialize_text(text) == BABB_FILE
        reg2, text2 = parse_text_file(serialize_text(text))
        assert reg2.view_names == registry.view_names
        assert text2.views == text.views


class TestParsePatternString:
    def test_basic(self):
        reg = char_registry()
        p = parse_pattern_string("B A b B", reg)
        assert p.tokens() == ("B", "A", "b", "B")

    def test_mixed_whitespace(self):
        reg = char_registry()
        assert parse_pattern_string("B  A\tb B", reg).tokens() == ("B", "A", "b", "B")

    def test_unknown_symbol(self):
        reg = char_registry()
        with pytest.raises(UnknownSymbol):
            parse_pattern_string("B Q", reg)

    def test_empty(self):
        with pytest.raises(EmptyPattern):
            parse_pattern_string("   ", char_registry())

    def test_serialize_pattern(self):
        reg = char_registry()
        assert serialize_pattern(char_pattern(reg, "BAbB")) == b"B A b B\n"


class TestCmdSearch:
    def test_match_base0(self, tmp_path, capsys):
        code = main(["search", "--text", write_babb(tmp_path), "--pattern", "B A b B"])
        assert code == 0
        assert capsys.readouterr().out == "4\n"

    def test_match_base1(self, tmp_path, capsys):
        code = main(["search", "--text", write_babb(tmp_path),
                     "--pattern", "B A b B", "--base", "1"])
        assert code == 0
        assert capsys.readouterr().out == "5\n"

    def test_output_independent_of_algorithm(self, tmp_path, capsys):
        path = write_babb(tmp_path)
        outs = []
        for alg in ("horspool", "naive"):
            code = main(["search", "--text", path, "--pattern", "B A b B",
                         "--algorithm", alg])
            assert code == 0
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1]

    def test_no_match_exit_1(self, tmp_path, capsys):
        code = main(["search", "--text", write_babb(tmp_path),
                     "--pattern", "A A A A A"])
        assert code == 1
        assert capsys.readouterr().out == ""

    def test_missing_file_exit_2(self, tmp_path, capsys):
        code = main(["search", "--text", str(tmp_path / "nope.tsv"), "--pattern", "a"])
        assert code == 2
        assert "mvmatch:" in capsys.readouterr().err

    def test_unknown_pattern_token_exit_2(self, tmp_path, capsys):
        code = main(["search", "--text", write_babb(tmp_path), "--pattern", "Z"])
        assert code == 2
        assert "Z" in capsys.readouterr().err

    def test_count_flag(self, tmp_path, capsys):
        code = main(["search", "--text", write_babb(tmp_path),
                     "--pattern", "B A b B", "--count"])
        assert code == 0
        assert capsys.readouterr().out == "1\n"

    def test_stats_to_stderr(self, tmp_path, capsys):
        code = main(["search", "--text", write_babb(tmp_path),
                     "--pattern", "B A b B", "--stats"])
        assert code == 0
        captured = capsys.readouterr()
        assert captured.out == "4\n"
        assert "alignments=3" in captured.err


class TestCmdGen:
    def test_round_trip_through_files(self, tmp_path, capsys):
        text_path = str(tmp_path / "t.tsv")
        pat_path = str(tmp_path / "p.txt")
        code = main(["gen", "--k", "3", "--n", "500", "--sigma", "10", "--m", "10",
                     "--seed", "1", "--mode", "planted",
                     "--out-text", text_path, "--out-pattern", pat_path])
        assert code == 0
        with open(text_path, "rb") as fh:
            registry, text = parse_text_file(fh.read())
        assert registry.k == 3 and text.n == 500
        with open(pat_path) as fh:
            pattern = parse_pattern_string(fh.read(), registry)
        assert pattern.m == 10

    def test_planted_gen_then_search_exits_0(self, tmp_path, capsys):
        text_path = str(tmp_path / "t.tsv")
        pat_path = str(tmp_path / "p.txt")
        assert main(["gen", "--k", "2", "--n", "200", "--sigma", "4", "--m", "6",
                     "--seed", "7", "--mode", "planted",
                     "--out-text", text_path, "--out-pattern", pat_path]) == 0
        with open(pat_path) as fh:
            pattern_str = fh.read().strip()
        code = main(["search", "--text", text_path, "--pattern", pattern_str])
        assert code == 0
        assert capsys.readouterr().out.strip() != ""

    def test_invalid_config_exit_2(self, tmp_path, capsys):
        code = main(["gen", "--k", "1", "--n", "10", "--sigma", "0", "--m", "2",
                     "--seed", "0",
                     "--out-text", str(tmp_path / "t"), "--out-pattern", str(tmp_path / "p")])
        assert code == 2
        assert capsys.readouterr().err


class TestCmdBench:
    def test_counts_only_deterministic(self, tmp_path, capsys):
        paths = [str(tmp_path / f"b{i}.csv") for i in range(2)]
        for path in paths:
            code = main(["bench", "--k", "2", "--n", "300", "--sigma", "4",
                         "--m-list", "2", "4", "--instances", "3", "--seed", "5",
                         "--csv", path, "--counts-only"])
            assert code == 0
        blobs = [open(p, "rb").read() for p in paths]
        assert blobs[0] == blobs[1]
        capsys.readouterr()

    def test_row_count_matches_grid(self, tmp_path, capsys):
        path = str(tmp_path / "b.csv")
        code = main(["bench", "--k", "2", "--n", "200", "--sigma", "3",
                     "--m-min", "2", "--m-max", "5", "--instances", "2",
                     "--seed", "0", "--csv", path, "--counts-only"])
        assert code == 0
        with open(path) as fh:
            lines = fh.read().splitlines()
        assert len(lines) == 1 + 4 * 2
        out = capsys.readouterr().out
        assert "read ratio" in out

    def test_single_m_two_rows(self, tmp_path, capsys):
        path = str(tmp_path / "b.csv")
        code = main(["bench", "--k", "1", "--n", "100", "--sigma", "2",
                     "--m-list", "4", "--instances", "1", "--seed", "2",
                     "--csv", path, "--counts-only"])
        assert code == 0
        with open(path) as fh:
            assert len(fh.read().splitlines()) == 3
        capsys.readouterr()

    def test_invalid_config_exit_2(self, tmp_path, capsys):
        code = main(["bench", "--k", "0", "--n", "100", "--sigma", "2",
                     "--m-list", "4", "--instances", "1", "--seed", "2",
                     "--csv", str(tmp_path / "b.csv"), "--counts-only"])
        assert code == 2
        assert capsys.readouterr().err
