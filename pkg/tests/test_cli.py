import pytest

from dyckgen.cli import main
from dyckgen.oracle import brute_force_all


def run_cli(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse reports its own errors this way
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enum_bits(capsys):
    code, out, err = run_cli(["enum", "--n", "2", "--format", "bits"], capsys)
    assert (code, out) == (0, "1010\n1100\n")


def test_enum_int_with_limit(capsys):
    code, out, _ = run_cli(["enum", "--n", "4", "--format", "int", "--limit", "1"], capsys)
    assert (code, out) == (0, "170\n")


def test_enum_parens(capsys):
    code, out, _ = run_cli(["enum", "--n", "1", "--format", "parens"], capsys)
    assert (code, out) == (0, "()\n")


def test_enum_custom_symbols(capsys):
    code, out, _ = run_cli(["enum", "--n", "2", "--format", "custom:ab"], capsys)
    assert (code, out) == (0, "abab\naabb\n")


def test_enum_limit_zero(capsys):
    code, out, _ = run_cli(["enum", "--n", "3", "--limit", "0"], capsys)
    assert (code, out) == (0, "")


@pytest.mark.parametrize("n", ["0", "33", "-2"])
def test_enum_rejects_bad_sizes(n, capsys):
    code, out, err = run_cli(["enum", "--n", n], capsys)
    assert code == 2
    assert out == ""
    assert err != ""


def test_enum_output_has_no_trailing_whitespace(capsys):
    _, out, _ = run_cli(["enum", "--n", "3"], capsys)
    assert out.endswith("\n")
    for line in out.splitlines():
        assert line == line.strip()
    again = run_cli(["enum", "--n", "3"], capsys)[1]
    assert again == out  # stable across runs


def test_next_bits(capsys):
    assert run_cli(["next", "10111000"], capsys)[:2] == (0, "11001010\n")
    assert run_cli(["next", "1010"], capsys)[:2] == (0, "1100\n")


def test_next_int_format(capsys):
    assert run_cli(["next", "170", "--format", "int"], capsys)[:2] == (0, "172\n")


def test_next_at_maximum_prints_nothing(capsys):
    code, out, _ = run_cli(["next", "(())", "--format", "parens"], capsys)
    assert (code, out) == (1, "")


def test_next_rejects_garbage(capsys):
    assert run_cli(["next", "10x0"], capsys)[0] == 2
    assert run_cli(["next", "1001"], capsys)[0] == 2
    assert run_cli(["next", "", "--format", "int"], capsys)[0] == 2


def test_count(capsys):
    assert run_cli(["count", "--n", "4"], capsys)[:2] == (0, "14\n")
    assert run_cli(["count", "--n", "0"], capsys)[:2] == (0, "1\n")
    assert run_cli(["count", "--n", "14"], capsys)[:2] == (0, "2674440\n")


def test_count_range(capsys):
    assert run_cli(["count", "--n", "35"], capsys)[0] == 2
    assert run_cli(["count", "--n", "-1"], capsys)[0] == 2


def test_validate_valid(capsys):
    assert run_cli(["validate", "10101010"], capsys)[0] == 0


def test_validate_prefix_violation(capsys):
    code, _, err = run_cli(["validate", "1001"], capsys)
    assert code == 1
    assert "prefix violation at position 3" in err


def test_validate_unparseable(capsys):
    assert run_cli(["validate", "10x0"], capsys)[0] == 2


def test_validate_odd_length(capsys):
    code, _, err = run_cli(["validate", "101"], capsys)
    assert code == 1
    assert "odd length" in err


def test_validate_unbalanced(capsys):
    code, _, err = run_cli(["validate", "1011"], capsys)
    assert code == 1
    assert "unbalanced" in err


def test_validate_int_format(capsys):
    assert run_cli(["validate", "170", "--format", "int"], capsys)[0] == 0
    assert run_cli(["validate", "9", "--format", "int"], capsys)[0] == 1
    assert run_cli(["validate", "-4", "--format", "int"], capsys)[0] == 2


def test_render_writes_svg(tmp_path, capsys):
    target = tmp_path / "grid.svg"
    code, out, err = run_cli(["render", "--n", "4", "-o", str(target)], capsys)
    assert code == 0
    assert "14" in err  # tile count goes to stderr
    data = target.read_bytes()
    assert data.startswith(b"<?xml")
    assert data.count(b'class="tile"') == 14


def test_render_guards_size(tmp_path, capsys):
    code, _, _ = run_cli(["render", "--n", "9", "-o", str(tmp_path / "x.svg")], capsys)
    assert code == 2


def test_render_io_failure(tmp_path, capsys):
    target = tmp_path / "missing" / "grid.svg"
    code, _, err = run_cli(["render", "--n", "2", "-o", str(target)], capsys)
    assert code == 3
    assert err != ""


def test_oracle_subcommand_matches_brute_force(capsys):
    code, out, _ = run_cli(["oracle", "--n", "3", "--format", "int"], capsys)
    assert code == 0
    assert [int(line) for line in out.split()] == brute_force_all(3)


def test_oracle_subcommand_is_hidden(capsys):
    code, out, _ = run_cli(["--help"], capsys)
    assert code == 0
    assert "oracle" not in out
    assert "render" in out


def test_oracle_subcommand_rejects_large_n(capsys):
    assert run_cli(["oracle", "--n", "13"], capsys)[0] == 2


def test_unknown_format_is_rejected(capsys):
    assert run_cli(["enum", "--n", "2", "--format", "weird"], capsys)[0] == 2
    assert run_cli(["enum", "--n", "2", "--format", "custom:aa"], capsys)[0] == 2
    assert run_cli(["enum", "--n", "2", "--format", "custom:abc"], capsys)[0] == 2


def test_next_word_too_wide_for_the_bit_core(capsys):
    wide = "10" * 33  # valid Dyck text, but 66 bits
    assert run_cli(["next", wide], capsys)[0] == 2


def test_enum_then_next_round_trip(capsys):
    # Feeding each enum line back through `next` replays the sequence.
    for n in range(1, 7):
        code, out, _ = run_cli(["enum", "--n", str(n)], capsys)
        assert code == 0
        words = out.split()
        for current, expected in zip(words, words[1:]):
            code, out, _ = run_cli(["next", current], capsys)
            assert (code, out.strip()) == (0, expected)
        assert run_cli(["next", words[-1]], capsys)[:2] == (1, "")
