"""Text parsing and rendering of matrices."""

import pytest

import pcmkit as pk

TRIAD_A = [[1, 1 / 2, 1 / 4], [2, 1, 1 / 3], [4, 3, 1]]


def test_roundtrip_is_bitwise():
    for n in (3, 4, 6):
        m = pk.random_pcm(n, 55 + n)
        again = pk.parse_matrix(pk.render_matrix(m))
        assert again == m


def test_rational_tokens_are_exact():
    m = pk.parse_matrix("1 1/2 1/4\n2 1 1/3\n4 3 1\n")
    assert m.entries[0, 1] == 0.5
    assert m.entries[1, 2] == 1 / 3
    assert m == pk.Pcm(TRIAD_A)


def test_comments_blanks_and_commas():
    text = """
    # pinned example
    1, 1/2, 1/4   # trailing note
    2, 1, 1/3

    4, 3, 1
    """
    assert pk.parse_matrix(text) == pk.Pcm(TRIAD_A)


def test_file_roundtrip(tmp_path):
    path = tmp_path / "m.txt"
    m = pk.random_pcm(5, 2)
    pk.save_matrix(m, path)
    assert pk.load_matrix(path) == m


def test_parse_error_positions():
    with pytest.raises(pk.MatrixParseError) as exc:
        pk.parse_matrix("1 1/2 1/4\n2 oops 1/3\n4 3 1\n")
    assert exc.value.line == 2
    assert exc.value.column == 3

    with pytest.raises(pk.MatrixParseError) as exc:
        pk.parse_matrix("1 2 4\n1/2 1\n1/4 1/2 1\n")
    assert exc.value.line == 2


def test_parse_rejects_structure():
    with pytest.raises(pk.MatrixParseError):
        pk.parse_matrix("")
    with pytest.raises(pk.MatrixParseError):
        pk.parse_matrix("# only comments\n")
    with pytest.raises(pk.MatrixParseError):
        pk.parse_matrix("1 2 3\n1/2 1 2\n")  # 2 rows of 3


def test_parse_rejects_bad_tokens():
    for token in ("1/0", "0/3", "-1/2", "nan", "inf", "1e999"):
        text = f"1 {token} 4\n2 1 2\n1/4 1/2 1\n"
        with pytest.raises(pk.MatrixParseError):
            pk.parse_matrix(text)


def test_parse_propagates_validation():
    with pytest.raises(pk.ReciprocityViolationError):
        pk.parse_matrix("1 2 3\n0.4 1 2\n1/3 1/2 1\n")
    with pytest.raises(pk.OrderTooSmallError):
        pk.parse_matrix("1 2\n1/2 1\n")


def test_render_matrix_full_precision():
    m = pk.random_pcm(4, 77)
    text = pk.render_matrix(m)
    lines = text.strip().split("\n")
    assert len(lines) == 4
    assert all(len(line.split()) == 4 for line in lines)
    assert pk.parse_matrix(text).entries.tobytes() == m.entries.tobytes()
