import json

import pytest

from kdcfg.cli import build_parser, main
from kdcfg.parser import tree_from_dict

RANK_MISMATCH = "alphabet a\nk 1\nstart S\nnonterm S 0\nnonterm T 1\nrule S -> T\nrule T -> 1\n"


@pytest.fixture
def g1_path(grammar_dir):
    return str(grammar_dir / "g1.dcfg")


@pytest.fixture
def g2_path(grammar_dir):
    return str(grammar_dir / "g2.dcfg")


@pytest.fixture
def invalid_path(tmp_path):
    path = tmp_path / "invalid.dcfg"
    path.write_text(RANK_MISMATCH, encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


class TestValidate:
    def test_valid(self, capsys, g2_path):
        assert run_cli(capsys, "validate", g2_path) == (0, {"valid": True, "violations": []})

    def test_rank_mismatch(self, capsys, invalid_path):
        code, payload = run_cli(capsys, "validate", invalid_path)
        assert code == 1
        assert payload["valid"] is False
        assert len(payload["violations"]) == 1

    def test_missing_file(self, capsys, tmp_path):
        code, payload = run_cli(capsys, "validate", str(tmp_path / "absent.dcfg"))
        assert code == 2
        assert "error" in payload

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "broken.dcfg"
        path.write_text("alphabet a\nk x\n", encoding="utf-8")
        code, payload = run_cli(capsys, "validate", str(path))
        assert code == 2
        assert payload["error"].startswith("line 2")


class TestCnf:
    def test_output_is_parseable(self, capsys, tmp_path, g1_path):
        out = str(tmp_path / "g1_cnf.dcfg")
        code, payload = run_cli(capsys, "cnf", g1_path, "-o", out)
        assert code == 0
        assert payload["nonterminals"] > 2 and payload["rules"] > 5
        code, payload = run_cli(capsys, "parse", out, "abab")
        assert code == 0 and payload["member"] is True

    def test_converting_twice_keeps_the_language(self, capsys, tmp_path, g1_path):
        once, twice = str(tmp_path / "once.dcfg"), str(tmp_path / "twice.dcfg")
        run_cli(capsys, "cnf", g1_path, "-o", once)
        run_cli(capsys, "cnf", once, "-o", twice)
        _, expected = run_cli(capsys, "generate", g1_path, "--max-len", "8")
        _, found = run_cli(capsys, "generate", twice, "--max-len", "8")
        assert found == expected

    def test_invalid_grammar(self, capsys, tmp_path, invalid_path):
        code, payload = run_cli(capsys, "cnf", invalid_path, "-o", str(tmp_path / "out.dcfg"))
        assert code == 2
        assert payload["violations"]
        assert not (tmp_path / "out.dcfg").exists()

    def test_output_flag_is_required(self, g1_path):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["cnf", g1_path])


class TestParse:
    def test_member(self, capsys, g2_path):
        code, payload = run_cli(capsys, "parse", g2_path, "abaabaaba")
        assert code == 0
        assert payload["member"] is True
        tree = payload["trees"][0]
        assert tree["word"] == "abaabaaba"
        assert tree_from_dict(tree).word.plain() == "abaabaaba"

    def test_non_member(self, capsys, g1_path):
        assert run_cli(capsys, "parse", g1_path, "aba") == (1, {"member": False, "trees": []})

    def test_empty_word(self, capsys, g1_path):
        code, payload = run_cli(capsys, "parse", g1_path, "eps")
        assert code == 1 and payload["member"] is False

    def test_unknown_symbol(self, capsys, g1_path):
        code, payload = run_cli(capsys, "parse", g1_path, "ax")
        assert code == 2
        assert "x" in payload["error"]

    def test_all_trees(self, capsys, g1_path):
        code, payload = run_cli(capsys, "parse", g1_path, "abab", "--all", "4")
        assert code == 0
        assert len(payload["trees"]) == 1

    def test_one_tree_is_enough_for_membership(self, capsys, g1_path):
        code, payload = run_cli(capsys, "parse", g1_path, "abab", "--all", "1")
        assert code == 0
        assert payload["member"] is True and len(payload["trees"]) == 1

    @pytest.mark.parametrize("count", ["0", "-3"])
    def test_tree_count_must_be_positive(self, capsys, g1_path, count):
        code, payload = run_cli(capsys, "parse", g1_path, "abab", "--all", count)
        assert code == 2
        assert "--all" in payload["error"]


class TestGenerate:
    def test_g1(self, capsys, g1_path):
        code, payload = run_cli(capsys, "generate", g1_path, "--max-len", "4")
        assert code == 0
        assert payload["words"] == ["aa", "aaaa", "abab", "baba", "bb", "bbbb"]

    def test_g2(self, capsys, g2_path):
        assert run_cli(capsys, "generate", g2_path, "--max-len", "3")[1] == {"words": ["aaa", "bbb"]}

    def test_bound_zero(self, capsys, g1_path):
        assert run_cli(capsys, "generate", g1_path, "--max-len", "0")[1] == {"words": []}


class TestPump:
    def test_all_powers_verified(self, capsys, g1_path):
        code, payload = run_cli(capsys, "pump", g1_path, "a" * 16, "--power", "0", "2", "3")
        assert code == 0
        assert payload["found"] is True
        assert payload["verified_powers"] == {"0": True, "2": True, "3": True}
        assert payload["l"] == 2
        assert payload["selected_hit"] is None
        assert "".join(
            s + y + u + z
            for s, y, u, z in zip(payload["s"], payload["y"], payload["u"], payload["z"])
        ) + payload["s"][-1] == "a" * 16

    def test_not_member(self, capsys, g1_path):
        code, payload = run_cli(capsys, "pump", g1_path, "aba")
        assert code == 1
        assert "not in the language" in payload["error"]

    def test_selected_position(self, capsys, g1_path):
        code, payload = run_cli(capsys, "pump", g1_path, "a" * 16, "--select", "0")
        assert code == 0
        assert payload["selected_hit"] == 0

    def test_selected_position_out_of_range(self, capsys, g1_path):
        code, _ = run_cli(capsys, "pump", g1_path, "a" * 16, "--select", "16")
        assert code == 2

    def test_negative_power(self, capsys, g1_path):
        code, payload = run_cli(capsys, "pump", g1_path, "a" * 16, "--power", "2", "-1")
        assert code == 2
        assert "nonnegative" in payload["error"]

    @pytest.mark.parametrize("i", ["0", "5", "15"])
    def test_nodes_are_reported_only_for_unmoved_windows(self, capsys, g1_path, i):
        code, payload = run_cli(capsys, "pump", g1_path, "a" * 16, "--select", i)
        assert code == 0
        if payload["realigned"]:
            assert payload["top"] is None and payload["bottom"] is None
        else:
            assert isinstance(payload["top"], list) and isinstance(payload["bottom"], list)

    def test_none_found(self, capsys, g1_path):
        code, payload = run_cli(capsys, "pump", g1_path, "aa")
        assert code == 1
        assert payload["found"] is False
        assert payload["reason"]


class TestGeometry:
    def test_g1(self, capsys, g1_path):
        code, payload = run_cli(capsys, "geometry", g1_path, "abab")
        assert code == 0
        assert payload["unclassifiable"] == 0
        assert payload["corollary_violations"] == []
        assert len(payload["constituent_table"]) == len(payload["constituents"]) * (
            len(payload["constituents"]) - 1
        ) // 2

    def test_non_member(self, capsys, g1_path):
        assert run_cli(capsys, "geometry", g1_path, "abb")[0] == 1

    def test_order_two(self, capsys, g2_path):
        code, payload = run_cli(capsys, "geometry", g2_path, "aaa")
        assert code == 2
        assert "order" in payload["error"]


def test_text_output(capsys, g1_path):
    assert main(["--no-json", "generate", g1_path, "--max-len", "2"]) == 0
    assert capsys.readouterr().out.strip() == "words: ['aa', 'bb']"


def test_payloads_are_deterministic(capsys, g1_path):
    main(["pump", g1_path, "abbabb"])
    first = capsys.readouterr().out
    main(["pump", g1_path, "abbabb"])
    assert capsys.readouterr().out == first
