"""Exception hierarchy for the package.

Every domain error derives from AtomataError so callers (and the CLI)
can distinguish "the math said no" from genuine bugs.
"""


class AtomataError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyLanguageError(AtomataError):
    """An operation that is only defined for non-empty languages got one."""


class AlphabetMismatchError(AtomataError):
    """Two automata over different alphabets were combined."""


class NotTrimError(AtomataError):
    """An operation requiring a trim automaton received a non-trim one."""


class NotMinimalError(AtomataError):
    """Strict mode: the given DFA is not minimal."""


class NotSymmetricError(AtomataError):
    """The reversal shortcut needs a language equal to its own reversal."""


class StateBlowupError(AtomataError):
    """A subset enumeration would exceed the configured bound."""


class DerivativeBlowupError(AtomataError):
    """Derivative exploration produced more canonical forms than allowed."""


class SyntaxPosError(AtomataError):
    """Parse failure in one of the textual front ends; carries a position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at {pos})")
        self.pos = pos


class RegexSyntaxError(SyntaxPosError):
    """Regex text does not conform to the grammar."""


class UnknownSymbolError(RegexSyntaxError):
    """Regex uses a character outside the declared alphabet."""


class AutomatonSyntaxError(SyntaxPosError):
    """Automaton text file does not conform to the line format."""


class VerificationError(AtomataError):
    """An internal cross-check failed; indicates a library defect, not bad input."""
