"""Shared fixtures: two worked examples used throughout the suite.

Example 1 is a 3-state NFA for (b|ab)* whose reversal accepts (b|ba)*;
its determinization has 5 states, the minimal DFA 3, and the atomaton of
the reversed language 2 states. Example 2 is a 3-state minimal DFA
(language b*a(aa*b|bb*a)*) with the full 2^3-2 non-final atoms plus the
final one, 6 in total.
"""

import pytest

from atomata import Alphabet, Dfa, Nfa

AB = Alphabet.of("ab")

# the acceptance tests append one verdict line each; printed when the run ends
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)


@pytest.fixture
def ex1_nfa() -> Nfa:
    return Nfa.build(
        3,
        AB,
        [(0, 1, 1), (1, 0, 0), (1, 1, 1), (1, 1, 2), (2, 0, 0), (2, 1, 2)],
        initial=[0, 2],
        final=[1, 2],
        labels=["1", "2", "3"],
    )


@pytest.fixture
def ex1_det_expected() -> Dfa:
    # subset construction of ex1_nfa in BFS order:
    # {1,3}, {1}, {2,3}, {}, {2}
    subsets = [
        frozenset({0, 2}),
        frozenset({0}),
        frozenset({1, 2}),
        frozenset(),
        frozenset({1}),
    ]
    return Dfa(
        AB,
        ((1, 2), (3, 4), (1, 2), (3, 3), (1, 2)),
        0,
        frozenset({0, 2, 4}),
        tuple(subsets),
        ("{1,3}", "{1}", "{2,3}", "{}", "{2}"),
    )


@pytest.fixture
def ex1_min_expected() -> Dfa:
    # classes P = {1,3} (initial, final), R = {1}, E = dead
    return Dfa(
        AB,
        ((1, 0), (2, 0), (2, 2)),
        0,
        frozenset({0}),
        None,
        ("{1,3}", "{1}", "{}"),
    )


@pytest.fixture
def ex1_atm_expected() -> Nfa:
    # atomaton of the reversed language (b|ba)*: P -b-> P|R, R -a-> P
    return Nfa.build(
        2,
        AB,
        [(0, 1, 0), (0, 1, 1), (1, 0, 0)],
        initial=[0],
        final=[0],
        labels=["P", "R"],
    )


@pytest.fixture
def ex2_dfa() -> Dfa:
    return Dfa(
        AB,
        ((1, 0), (2, 0), (2, 1)),
        0,
        frozenset({1}),
        None,
        ("1", "2", "3"),
    )


@pytest.fixture
def ex2_atm_expected() -> Nfa:
    # states by signature: 123, -123, 12-3, -1-23, 1-2-3, -12-3
    return Nfa.build(
        6,
        AB,
        [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 2),
            (1, 0, 3), (2, 1, 4), (3, 1, 1), (3, 1, 5),
            (4, 0, 2), (4, 0, 5),
        ],
        initial=[0, 2, 4],
        final=[5],
        labels=["123", "-123", "12-3", "-1-23", "1-2-3", "-12-3"],
    )


EX2_SIGNATURES = [
    frozenset({0, 1, 2}),
    frozenset({1, 2}),
    frozenset({0, 1}),
    frozenset({2}),
    frozenset({0}),
    frozenset({1}),
]
