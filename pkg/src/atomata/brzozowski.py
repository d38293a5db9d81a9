"""Double-reversal minimization and the minimality/atomicity duality.

Brzozowski's algorithm minimizes an NFA by reversing, determinizing,
reversing, determinizing. Its correctness generalizes to a duality for
any trim NFA: the determinization is minimal exactly when the reverse is
atomic. check_duality evaluates both sides independently so the
equivalence is genuinely tested rather than assumed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from .automata import (
    Dfa,
    Idfa,
    Nfa,
    as_nfa,
    determinize,
    dfa_to_idfa,
    is_minimal,
    is_trim,
    minimize_idfa,
    reverse,
    trim,
)
from .classify import AtomicityReport, is_atomic
from .errors import EmptyLanguageError, NotTrimError, VerificationError

log = logging.getLogger(__name__)


def brzozowski_minimize(n: Nfa, *, partial: bool = False) -> Union[Dfa, Idfa]:
    """Minimal complete DFA by double reversal; no minimize() call involved.

    With partial=True the reachable empty subset is dropped and the result
    is the minimal partial automaton instead (undefined for the empty
    language, which has no trim acceptor).
    """
    d = determinize(reverse(as_nfa(determinize(reverse(as_nfa(n))))))
    if partial:
        return dfa_to_idfa(d)
    return d


@dataclass(frozen=True)
class DualityVerdict:
    """Both sides of the duality for one NFA, plus the artifacts behind them.

    nd_minimal judges the determinization as a complete DFA and
    nd_minimal_partial as a partial one; the two readings provably agree
    on trim inputs and are both reported rather than assumed equal.
    agree = (nd_minimal == nr_atomic) must hold for every trim input; a
    False value indicates a defect, not a valid outcome.
    """

    nd_minimal: bool
    nr_atomic: bool
    agree: bool
    nd_minimal_partial: bool
    auto_trimmed: bool
    nd: Dfa
    atomicity: AtomicityReport


def check_duality(n: Nfa) -> DualityVerdict:
    """Evaluate is_minimal(determinize(n)) and is_atomic(reverse(n))
    independently. Non-trim input is trimmed first (the equivalence is
    stated for trim NFAs) and the verdict records that it happened."""
    nn = as_nfa(n)
    auto_trimmed = not is_trim(nn)
    if auto_trimmed:
        before = nn.state_count
        nn = trim(nn)
        log.warning("input not trim; trimmed %d states to %d", before, nn.state_count)
    if nn.state_count == 0:
        raise EmptyLanguageError("the duality concerns non-empty languages")
    nd = determinize(nn)
    nd_minimal = is_minimal(nd)
    idfa = dfa_to_idfa(nd)
    nd_minimal_partial = minimize_idfa(idfa).state_count == idfa.state_count
    report = is_atomic(reverse(nn))
    return DualityVerdict(
        nd_minimal=nd_minimal,
        nr_atomic=report.atomic,
        agree=nd_minimal == report.atomic,
        nd_minimal_partial=nd_minimal_partial,
        auto_trimmed=auto_trimmed,
        nd=nd,
        atomicity=report,
    )


def reverse_is_atomic(d: Union[Dfa, Idfa]) -> bool:
    """Atomicity of the reverse of a trim deterministic automaton.

    False whenever d is non-minimal: a deterministic automaton is a
    residual NFA, so by the duality a non-minimal one has a non-atomic
    reverse. Complete DFAs with a sink are not trim; pass them through
    trim (or dfa_to_idfa) first.
    """
    nn = as_nfa(d)
    if not is_trim(nn):
        raise NotTrimError("the corollary applies to trim automata only")
    return is_atomic(reverse(nn)).atomic


def standard_form_check(n: Nfa) -> bool:
    """Whether determinize(reverse(n)) is minimal, i.e. n is in standard
    form in Sengoku's sense. A True verdict is cross-validated against
    atomicity of n, which the duality makes equivalent."""
    nn = as_nfa(n)
    if not is_trim(nn):
        raise NotTrimError("standard form is defined for trim NFAs")
    if nn.state_count == 0:
        raise EmptyLanguageError("standard form concerns non-empty languages")
    ok = is_minimal(determinize(reverse(nn)))
    if ok and not is_atomic(nn).atomic:
        raise VerificationError(
            "standard form without atomicity contradicts the reversal duality"
        )
    return ok
