"""Exception hierarchy shared across the toolkit.

Errors split into three families: bad user input (specs, parameters),
resource caps, and internal cross-check failures.  The last family signals a
bug somewhere, never a property of the input group.
"""


class CommhierError(Exception):
    """Base class for all toolkit errors."""


# --- user input ---

class InvalidSpec(CommhierError):
    """Group constructor parameters are out of range or malformed."""


class ParseError(InvalidSpec):
    """Group-spec text failed to parse."""

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.expected = tuple(expected)


class BadAction(InvalidSpec):
    """Semidirect action matrices are not automorphisms of the right order."""


class IndexOutOfRange(CommhierError, IndexError):
    """Element index not in 0..|G|-1."""


class NotNormal(CommhierError):
    """Quotient requested by a non-normal subgroup."""


class NotComparable(CommhierError):
    """Moebius query on a non-interval pair of poset members."""


class NotCoprime(CommhierError):
    """Coprime-only formula invoked with gcd(|A|, |B|) > 1."""


class NotCyclic(CommhierError):
    """Cyclic-quotient formula invoked with a non-cyclic acting group."""


class HypothesisFails(CommhierError):
    """A closed-form shortcut's structural hypothesis does not hold."""


class AbelianGroup(CommhierError):
    """Spectrum operations are defined only for non-abelian groups."""


class SingularMatrix(CommhierError):
    """Exact linear solve on a matrix with zero determinant."""


class PoleHit(CommhierError):
    """Series evaluated at one of its poles."""


class NotEnoughData(CommhierError):
    """Sequence too short for the Hankel rank to stabilize."""


class NonSpectralSequence(CommhierError):
    """Sequence is not generated by any finite abelian-index spectrum."""


# --- resource caps ---

class OrderCap(CommhierError):
    """Requested construction or enumeration exceeds a size cap."""


class Infeasible(OrderCap):
    """Brute-force enumeration exceeds its tuple-count cap."""


# --- internal cross-check failures (bug signals) ---

class InternalInconsistency(CommhierError):
    """Two routes that must agree exactly disagreed."""


class FormulaMismatch(InternalInconsistency):
    """Closed-form stats disagree with direct lattice enumeration."""


class SpectrumMismatch(InternalInconsistency):
    """Stratified spectrum disagrees with the Moebius route."""


class SpectrumStatsMismatch(InternalInconsistency):
    """First-pole data disagrees with abelian subgroup statistics."""
