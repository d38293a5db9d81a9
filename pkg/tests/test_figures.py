"""Figure rendering smoke tests: files exist and are real PNGs."""

from atomata import as_nfa
from atomata.figures import draw_automaton, duality_scatter

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def png_ok(path):
    data = path.read_bytes()
    return data.startswith(PNG_MAGIC) and len(data) > 1000


def test_draw_nfa(tmp_path, ex2_atm_expected):
    out = tmp_path / "atm.png"
    draw_automaton(ex2_atm_expected, out, title="atomaton")
    assert png_ok(out)


def test_draw_dfa(tmp_path, ex2_dfa):
    out = tmp_path / "dfa.png"
    draw_automaton(as_nfa(ex2_dfa), out)
    assert png_ok(out)


def test_draw_single_state(tmp_path, ex1_atm_expected):
    out = tmp_path / "two.png"
    draw_automaton(ex1_atm_expected, out)
    assert png_ok(out)


def test_duality_scatter(tmp_path):
    rows = [
        (1, 4, 6, 3, True, True, True),
        (2, 5, 9, 9, False, False, True),
        (3, 3, 4, 4, True, False, False),
    ]
    out = tmp_path / "scatter.png"
    duality_scatter(rows, out)
    assert png_ok(out)
