"""Exception hierarchy shared by all modules.

Every semantic failure has a named exception class; the CLI reports the
class name verbatim in the "error" field of its JSON output.
"""


class LSpaceError(Exception):
    """Base class for all semantic errors raised by this package."""

    @property
    def name(self):
        return type(self).__name__


# --- manifold record validation ---

class NonTorsionLongitude(LSpaceError):
    """iota(l) has a nonzero free part, so l is not a homological longitude."""


class ZeroInComplement(LSpaceError):
    """The zero class appears in the torsion-complement support."""


class NegativePhiInComplement(LSpaceError):
    """Some torsion-complement class has negative free part."""


class BadMeridianFreePart(LSpaceError):
    """iota(m) does not have free part equal to the order of iota(l)."""


class Lemma73Violation(LSpaceError):
    """The reduced Alexander polynomial fails the cyclic congruence forced
    on every rational homology S^1 x D^2; the record is inconsistent."""


class MissingWitness(LSpaceError):
    """The operation needs an interior L-space slope but none was supplied."""


# --- slope / witness problems ---

class NotFloerSimpleSlope(LSpaceError):
    """Torsion coefficient differences at this slope are not all 0 or 1,
    so the core of the filling is not a Floer simple knot."""


class WitnessOnLongitude(LSpaceError):
    """The supplied witness slope is the homological longitude."""


class WitnessOnIntervalBoundary(LSpaceError):
    """The witness sits on the boundary of the L-space interval
    (some lift of the difference set has residue 0); an interior
    slope is required."""


class LongitudeFilling(LSpaceError):
    """The requested filling slope is the homological longitude."""


# --- linear algebra / gluing ---

class DeterminantError(LSpaceError):
    """A gluing matrix does not have determinant -1."""


class HypothesisNotMet(LSpaceError):
    """The interval-overlap hypothesis of the gluing criterion fails;
    no verdict is possible along this route."""


class NotRationalHomologySphere(LSpaceError):
    """The glued manifold has positive first Betti number (q* = 0), hence
    is definitely not an L-space."""


# --- Seifert data ---

class IntegerFiberSlope(LSpaceError):
    """An exceptional fiber was given an integer filling slope."""


# --- bordered invariants ---

class NotGeneralizedSolidTorus(LSpaceError):
    """The record fails deg(reduced Alexander polynomial) < g, so the
    twist-invariance comparison is not expected to succeed."""
