"""Line-oriented automaton text format: round trips and diagnostics."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomata import (
    AutomatonSyntaxError,
    as_nfa,
    determinize,
    format_automaton,
    parse_automaton,
)
from atomata.testkit import GenParams, random_nfa

EX2_TEXT = """\
# three-state example
alphabet: a b
states: 1 2 3
initial: 1
final: 2
trans:
1 a 2
1 b 1
2 a 3
2 b 1
3 a 3
3 b 2
"""


def test_parse_example_file(ex2_dfa):
    n = parse_automaton(EX2_TEXT)
    assert n == as_nfa(ex2_dfa)


def test_format_parse_round_trip(ex1_nfa, ex2_dfa, ex2_atm_expected):
    for m in (ex1_nfa, as_nfa(ex2_dfa), ex2_atm_expected):
        assert parse_automaton(format_automaton(m)) == m


def test_round_trip_keeps_subset_labels_as_text(ex1_nfa):
    d = determinize(ex1_nfa)
    n = as_nfa(d)
    back = parse_automaton(format_automaton(d))
    assert back.labels == n.labels
    assert back.transitions == n.transitions


def test_sections_in_any_order():
    shuffled = (
        "trans:\n0 a 0\nfinal: 0\ninitial: 0\nstates: 0\nalphabet: a\n"
    )
    n = parse_automaton(shuffled)
    assert n.state_count == 1 and (0, 0, 0) in n.transitions


def test_comments_and_blank_lines():
    text = "# header\n\nalphabet: a\nstates: x\ninitial: x\nfinal:\ntrans:\nx a x # loop\n"
    n = parse_automaton(text)
    assert n.final == frozenset()
    assert n.labels == ("x",)


def test_parse_errors():
    with pytest.raises(AutomatonSyntaxError):
        parse_automaton("alphabet: a\nstates: x\n")  # missing sections
    with pytest.raises(AutomatonSyntaxError):
        parse_automaton(EX2_TEXT + "alphabet: a\n")  # duplicate section
    with pytest.raises(AutomatonSyntaxError):
        parse_automaton(EX2_TEXT.replace("1 a 2", "1 c 2"))  # unknown symbol
    with pytest.raises(AutomatonSyntaxError):
        parse_automaton(EX2_TEXT.replace("1 a 2", "1 a"))  # short triple


def test_error_reports_line_number():
    bad = EX2_TEXT.replace("2 a 3", "2 a")
    with pytest.raises(AutomatonSyntaxError) as exc:
        parse_automaton(bad)
    assert "(at 9)" in str(exc.value)


def test_default_labels_collapse_to_none():
    text = "alphabet: a\nstates: 0 1\ninitial: 0\nfinal: 1\ntrans:\n0 a 1\n"
    assert parse_automaton(text).labels is None


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=100_000))
def test_round_trip_random(seed):
    n = random_nfa(GenParams(seed=seed))
    assert parse_automaton(format_automaton(n)) == n
