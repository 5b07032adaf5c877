"""Exception hierarchy shared by all reslat modules."""

from __future__ import annotations


class ReslatError(Exception):
    """Base class for all errors raised by this package."""


class MalformedSpec(ReslatError):
    """A ring expression violates a structural invariant (n < 2, empty product, ...)."""


class SizeCapExceeded(ReslatError):
    """A requested structure would exceed the configured size cap."""


class CapExceeded(ReslatError):
    """An enumeration request exceeds the supported order range."""


class RingMismatch(ReslatError):
    """Two ideals of different rings were combined."""


class MalformedTable(ReslatError):
    """A lattice table is structurally broken (bad dimensions, ids out of range)."""


class NotResiduated(ReslatError):
    """No residuum exists for some pair: the candidate set has no maximum.

    Carries the offending pair and its incomparable maximal candidates.
    """

    def __init__(self, x: int, y: int, maximal_candidates: tuple[int, ...]):
        self.x = x
        self.y = y
        self.maximal_candidates = maximal_candidates
        super().__init__(
            f"no residuum for ({x},{y}): maximal candidates {maximal_candidates}"
        )


class NotInvolutive(ReslatError):
    """Double negation is not the identity; carries a witness element."""

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"not involutive: x** != x at element {witness}")


class ParseError(ReslatError):
    """Expression syntax error with position and the expected-token set."""

    def __init__(self, position: int, expected: tuple[str, ...], found: str):
        self.position = position
        self.expected = expected
        self.found = found
        exp = " | ".join(expected)
        super().__init__(f"parse error at position {position}: expected {exp}, found {found!r}")


class FormatError(ReslatError):
    """Serialized lattice file is malformed; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ResiduumMismatch(ReslatError):
    """A declared implication table disagrees with the derived residuum."""

    def __init__(self, x: int, y: int, declared: int, derived: int):
        self.x = x
        self.y = y
        self.declared = declared
        self.derived = derived
        super().__init__(
            f"implication table mismatch at ({x},{y}): declared {declared}, derived {derived}"
        )


class InternalCheckError(ReslatError):
    """A cross-check that must hold by construction failed; indicates a bug."""
