"""Atoms of regular languages, atomatons, and the reversal duality.

The package computes the atoms of any non-empty regular language, builds
the atomaton (the NFA whose states are the atoms) by two independent
routes, classifies arbitrary NFAs as atomic or residual, constructs the
universal automaton from the language's factorizations, and verifies
that determinization yields a minimal DFA exactly when the reversed
automaton is atomic.
"""

from .automata import (
    EPSILON,
    Alphabet,
    AnyAutomaton,
    Dfa,
    Idfa,
    LeftLanguage,
    Nfa,
    Word,
    accepts,
    as_nfa,
    determinize,
    dfa_to_idfa,
    equivalent,
    format_word,
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
    try_as_idfa,
)
from .atoms import (
    AtomSet,
    AtomSignature,
    Atomaton,
    atom_of_word,
    atom_quotient,
    atom_recognizer,
    atomaton_direct,
    atomaton_reverse_route,
    check_bideterministic_characterization,
    compute_atoms,
    quotient_as_atoms,
    symmetric_shortcut,
    union_of_atoms,
)
from .brzozowski import (
    DualityVerdict,
    brzozowski_minimize,
    check_duality,
    reverse_is_atomic,
    standard_form_check,
)
from .classify import (
    AtomicityReport,
    Factorization,
    ResidualityReport,
    StateAtomicity,
    StateResiduality,
    build_universal,
    factorizations,
    is_atomic,
    is_residual,
)
from .dot import export_dot
from .equations import EquationSystem, from_equations, render, to_equations
from .errors import (
    AlphabetMismatchError,
    AtomataError,
    AutomatonSyntaxError,
    DerivativeBlowupError,
    EmptyLanguageError,
    NotMinimalError,
    NotSymmetricError,
    NotTrimError,
    RegexSyntaxError,
    StateBlowupError,
    SyntaxPosError,
    UnknownSymbolError,
    VerificationError,
)
from .regex import (
    Regex,
    derivative,
    format_regex,
    infer_alphabet,
    parse_regex,
    quotient_by_word,
    quotient_dfa,
    thompson_nfa,
)
from .textfmt import format_automaton, parse_automaton

__version__ = "0.1.0"

__all__ = [
    "EPSILON",
    "Alphabet",
    "AnyAutomaton",
    "Dfa",
    "Idfa",
    "LeftLanguage",
    "Nfa",
    "Word",
    "accepts",
    "as_nfa",
    "determinize",
    "dfa_to_idfa",
    "equivalent",
    "format_word",
    "idfa_to_dfa",
    "is_bideterministic",
    "is_empty",
    "is_isomorphic",
    "is_minimal",
    "is_trim",
    "left_language",
    "minimize",
    "minimize_idfa",
    "minimize_with_map",
    "parse_word",
    "product",
    "reverse",
    "right_language",
    "right_quotient",
    "shortest_accepted",
    "shortest_distinguishing",
    "subset_of",
    "trim",
    "trim_with_map",
    "try_as_dfa",
    "try_as_idfa",
    "AtomSet",
    "AtomSignature",
    "Atomaton",
    "atom_of_word",
    "atom_quotient",
    "atom_recognizer",
    "atomaton_direct",
    "atomaton_reverse_route",
    "check_bideterministic_characterization",
    "compute_atoms",
    "quotient_as_atoms",
    "symmetric_shortcut",
    "union_of_atoms",
    "DualityVerdict",
    "brzozowski_minimize",
    "check_duality",
    "reverse_is_atomic",
    "standard_form_check",
    "AtomicityReport",
    "Factorization",
    "ResidualityReport",
    "StateAtomicity",
    "StateResiduality",
    "build_universal",
    "factorizations",
    "is_atomic",
    "is_residual",
    "export_dot",
    "EquationSystem",
    "from_equations",
    "render",
    "to_equations",
    "AlphabetMismatchError",
    "AtomataError",
    "AutomatonSyntaxError",
    "DerivativeBlowupError",
    "EmptyLanguageError",
    "NotMinimalError",
    "NotSymmetricError",
    "NotTrimError",
    "RegexSyntaxError",
    "StateBlowupError",
    "SyntaxPosError",
    "UnknownSymbolError",
    "VerificationError",
    "Regex",
    "derivative",
    "format_regex",
    "infer_alphabet",
    "parse_regex",
    "quotient_by_word",
    "quotient_dfa",
    "thompson_nfa",
    "format_automaton",
    "parse_automaton",
    "__version__",
]
