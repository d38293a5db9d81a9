"""Core automaton operations against the worked examples plus properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomata import (
    Alphabet,
    Dfa,
    EmptyLanguageError,
    Nfa,
    accepts,
    as_nfa,
    determinize,
    dfa_to_idfa,
    equivalent,
    idfa_to_dfa,
    is_bideterministic,
    is_empty,
    is_isomorphic,
    is_minimal,
    is_trim,
    left_language,
    minimize,
    minimize_idfa,
    minimize_with_map,
    parse_word,
    product,
    reverse,
    right_language,
    right_quotient,
    shortest_accepted,
    shortest_distinguishing,
    subset_of,
    trim,
    trim_with_map,
    try_as_dfa,
    NotTrimError,
)
from atomata.testkit import GenParams, enumerate_words, random_nfa

AB = Alphabet.of("ab")


def words(alphabet, n):
    return list(enumerate_words(alphabet, n))


# ---------------------------------------------------------------- determinize

def test_determinize_example1(ex1_nfa, ex1_det_expected):
    d = determinize(ex1_nfa)
    assert d.state_count == 5
    assert d.subset_labels == ex1_det_expected.subset_labels
    assert d.next == ex1_det_expected.next
    assert d.start == 0
    assert d.final == ex1_det_expected.final


def test_determinize_preserves_language(ex1_nfa):
    d = determinize(ex1_nfa)
    for w in words(AB, 7):
        assert accepts(d, w) == accepts(ex1_nfa, w)


def test_determinize_keeps_reachable_empty_subset(ex1_nfa):
    d = determinize(ex1_nfa)
    assert frozenset() in d.subset_labels


# ------------------------------------------------------------------- minimize

def test_minimize_example1(ex1_nfa, ex1_min_expected):
    m = minimize(determinize(ex1_nfa))
    assert m.state_count == 3
    assert is_isomorphic(m, ex1_min_expected) is not None
    assert m.labels == ("{1,3}", "{1}", "{}")


def test_minimize_idempotent(ex1_nfa):
    m = minimize(determinize(ex1_nfa))
    again, merge = minimize_with_map(m)
    assert again.next == m.next
    assert merge == {q: q for q in range(m.state_count)}


def test_minimize_merge_map(ex1_nfa):
    d = determinize(ex1_nfa)
    m, merge = minimize_with_map(d)
    # the three accepting subsets collapse into one class
    assert merge[0] == merge[2] == merge[4]
    assert len(set(merge.values())) == m.state_count


def test_is_minimal(ex2_dfa):
    assert is_minimal(ex2_dfa)
    doubled = Dfa(AB, ex2_dfa.next + ((1, 0),), 3, frozenset({1}))
    assert minimize(doubled).state_count == 3
    assert not is_minimal(doubled)


# ------------------------------------------------------------- reverse / trim

def test_reverse_swaps_ends(ex1_nfa):
    r = reverse(ex1_nfa)
    assert r.initial == ex1_nfa.final
    assert r.final == ex1_nfa.initial
    assert (1, 1, 0) in r.transitions


def test_reverse_involution(ex1_nfa):
    assert reverse(reverse(ex1_nfa)) == ex1_nfa


def test_reverse_language(ex2_dfa):
    r = reverse(as_nfa(ex2_dfa))
    for w in words(AB, 6):
        assert accepts(r, w) == accepts(ex2_dfa, tuple(reversed(w)))


def test_trim_reverse_min_is_atomaton_shape(ex1_nfa, ex1_atm_expected):
    m = minimize(determinize(ex1_nfa))
    t = trim(reverse(as_nfa(m)))
    assert t.state_count == 2
    assert is_isomorphic(t, ex1_atm_expected) is not None


def test_trim_reports_dropped_states(ex1_nfa):
    d = as_nfa(determinize(ex1_nfa))
    t, kept = trim_with_map(d)
    assert t.state_count == 4  # only the dead subset goes
    assert 3 not in kept


def test_trim_empty_language_raises():
    dead = Nfa.build(1, AB, [], initial=[0], final=[])
    with pytest.raises(EmptyLanguageError):
        trim(dead)


def test_is_trim(ex1_nfa, ex1_atm_expected):
    assert is_trim(ex1_nfa)
    assert is_trim(ex1_atm_expected)
    assert not is_trim(as_nfa(determinize(ex1_nfa)))


# -------------------------------------------------------- language operations

def test_product_modes(ex2_dfa):
    both = product(ex2_dfa, ex2_dfa, "and")
    assert equivalent(both, ex2_dfa)
    neither = product(ex2_dfa, ex2_dfa, "andnot")
    assert is_empty(neither)


def test_subset_and_equivalence(ex1_nfa, ex1_min_expected):
    assert equivalent(ex1_nfa, ex1_min_expected)
    assert subset_of(ex1_nfa, ex1_min_expected)
    smaller = Nfa.build(1, AB, [(0, 1, 0)], initial=[0], final=[0])  # b*
    assert subset_of(smaller, ex1_min_expected)
    assert not subset_of(ex1_min_expected, smaller)


def test_shortest_distinguishing(ex1_min_expected):
    b_star = Nfa.build(1, AB, [(0, 1, 0)], initial=[0], final=[0])
    w = shortest_distinguishing(ex1_min_expected, b_star)
    assert w == parse_word(AB, "ab")
    assert shortest_distinguishing(b_star, b_star) is None


def test_shortest_accepted(ex2_dfa):
    assert shortest_accepted(ex2_dfa) == parse_word(AB, "a")
    dead = Nfa.build(1, AB, [], initial=[0], final=[])
    assert shortest_accepted(dead) is None


def test_right_language_and_quotient(ex2_dfa):
    r1 = right_language(as_nfa(ex2_dfa), 1)
    assert equivalent(r1, ex2_dfa.with_start(1))
    # L a^-1 = words x with xa in L = words driving the start to a state
    # whose a-successor is final
    quo = right_quotient(ex2_dfa, parse_word(AB, "a"))
    pre = {q for q in range(3) if ex2_dfa.next[q][0] in ex2_dfa.final}
    assert equivalent(quo, ex2_dfa.with_final(pre))


def test_left_language_is_reversed_view(ex2_dfa):
    ll = left_language(as_nfa(ex2_dfa), 1)
    assert ll.reversed
    # words reaching state 2 of example 2: shortest is "a", reversed "a"
    assert accepts(ll.dfa, parse_word(AB, "a"))
    assert not accepts(ll.dfa, ())


# -------------------------------------------------------------- conversions

def test_idfa_round_trip(ex2_dfa):
    i = dfa_to_idfa(ex2_dfa)
    back = idfa_to_dfa(i)
    assert equivalent(back, ex2_dfa)
    assert minimize_idfa(i).state_count == i.state_count


def test_try_as_dfa(ex1_nfa, ex2_dfa):
    assert try_as_dfa(ex1_nfa) is None
    view = try_as_dfa(as_nfa(ex2_dfa))
    assert view is not None and view.next == ex2_dfa.next


# ----------------------------------------------------------- bideterminism

def test_bideterministic_examples(ex1_atm_expected, ex2_atm_expected):
    # one initial, one final, deterministic both ways
    ab_star = Nfa.build(2, AB, [(0, 0, 1), (1, 1, 0)], initial=[0], final=[0])
    assert is_bideterministic(ab_star)
    assert not is_bideterministic(ex1_atm_expected)  # two b-successors of P
    assert not is_bideterministic(ex2_atm_expected)  # three initial states


def test_bideterministic_needs_trim(ex1_nfa):
    with pytest.raises(NotTrimError):
        is_bideterministic(as_nfa(determinize(ex1_nfa)))


# ------------------------------------------------------------- property tests

def seeded_nfas(lo, hi):
    return [trim(random_nfa(GenParams(seed=s))) for s in range(lo, hi)]


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_determinize_minimize_agree_with_nfa(seed):
    n = random_nfa(GenParams(seed=seed))
    m = minimize(determinize(n))
    for w in words(AB, 5):
        assert accepts(m, w) == accepts(n, w)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_reverse_reverse_identity_random(seed):
    n = random_nfa(GenParams(seed=seed))
    assert reverse(reverse(n)) == n


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_minimal_dfa_unique_up_to_iso(seed):
    n = random_nfa(GenParams(seed=seed))
    m1 = minimize(determinize(n))
    m2 = minimize(determinize(reverse(reverse(n))))
    assert is_isomorphic(m1, m2) is not None


def test_trim_preserves_language_on_corpus():
    for n in seeded_nfas(200, 240):
        t = trim(n)
        assert equivalent(t, n)
        assert is_trim(t)
