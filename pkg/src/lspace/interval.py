"""L-space filling predicates and the L-space interval.

Fix a witness slope mu_L = p*m + q*l from the interior of the L-space
interval.  Every element of the positive difference set, written as
delta*iota(m) + gamma*iota(l), contributes the residue

    b_plus = [p*gamma - q*delta] mod p*g,      b_minus = b_plus - p*g,

and a filling mu is an L-space filling exactly when its surgery label
(mu_L . mu)/(mu . l) lies in [b_minus/delta, b_plus/delta] for every such
element.  When the positive difference set is empty, every filling except
the longitude is an L-space.  The interval endpoints lift back to honest
slopes; the resulting closed interval is independent of the witness.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .abelian import LONGITUDE, Slope, pairing_and_label
from .errors import (MissingWitness, WitnessOnIntervalBoundary,
                     WitnessOnLongitude)
from .projline import ProjInterval
from .torsion import dtau, hfk_support, milnor_invariants, validate_manifold


@dataclass(frozen=True)
class LSpaceIntervalResult:
    kind: str                  # "all-but-longitude" | "closed" | "complement-of-point"
    interval: ProjInterval     # the set of L-space filling slopes
    lo: Slope = None           # closed-interval endpoints (lifts of the
    hi: Slope = None           # difference set), when applicable
    label_bounds: tuple = None # (max b_minus/delta, min b_plus/delta)
    achieving: tuple = None    # difference-set elements attaining the bounds


def _witness_or_default(Y, mu_L):
    if mu_L is None:
        mu_L = Y.witness
    if mu_L is None:
        raise MissingWitness("an interior L-space slope is required")
    return mu_L


def residue_pair(Y, mu_L, d):
    """(b_minus, b_plus) for one difference-set element at this witness."""
    rep = validate_manifold(Y)
    p, q = mu_L.a, mu_L.b
    pg = p * rep.g
    b_plus = (p * d.gamma - q * d.delta) % pg
    return b_plus - pg, b_plus


@lru_cache(maxsize=None)
def validate_witness(Y, mu_L=None):
    """Check that mu_L can serve as an interior witness.

    Requires mu_L . l != 0 and a nonzero residue for every positive
    difference-set element; when the free part of iota(mu_L) exceeds the
    Thurston norm, also checks knot-Floer coherence at mu_L (this is the
    regime where a genuine interior witness must be coherent).
    """
    mu_L = _witness_or_default(Y, mu_L)
    rep = validate_manifold(Y)
    if mu_L.dot_l == 0:
        raise WitnessOnLongitude("the longitude is never an interior L-space slope")
    for d in dtau(Y).positive:
        b_minus, b_plus = residue_pair(Y, mu_L, d)
        if b_plus == 0:
            raise WitnessOnIntervalBoundary(
                "residue vanishes at delta=%d, gamma=%d; supply a strictly "
                "interior slope" % (d.delta, d.gamma))
    norm = milnor_invariants(Y).norm
    if mu_L.a * rep.g > norm:
        hfk_support(Y, mu_L)  # raises NotFloerSimpleSlope on incoherence
    return mu_L


def is_lspace_slope(Y, mu_L, mu):
    """Is the filling along mu an L-space?  Decided from the witness mu_L."""
    mu_L = validate_witness(Y, mu_L)
    positive = dtau(Y).positive
    beta, n, label = pairing_and_label(mu_L, mu)
    if not positive:
        return n != 0
    if n == 0:
        return False
    for d in positive:
        b_minus, b_plus = residue_pair(Y, mu_L, d)
        if not (Fraction(b_minus, d.delta) <= label <= Fraction(b_plus, d.delta)):
            return False
    return True


def _floor_div(a, b):
    return a // b


def _ceil_div(a, b):
    return -((-a) // b)


def endpoint_lifts(Y, mu_L, d):
    """The two lifts of a positive difference-set element adjacent to the
    witness, as slopes: (lift below, lift above)."""
    rep = validate_manifold(Y)
    p, q, g = mu_L.a, mu_L.b, rep.g
    up = _ceil_div(q * d.delta, p)
    dn = _floor_div(q * d.delta, p)
    hi = Slope(d.delta, up + (d.gamma - up) % g)
    lo = Slope(d.delta, dn - (dn - d.gamma) % g)
    return lo, hi


def lspace_interval(Y, mu_L=None):
    """The set of L-space filling slopes, as an interval with endpoints in
    the lifted difference set.

    With empty positive difference set, every slope but the longitude is
    an L-space slope.  Otherwise the surgery labels are pinched between
    max(b_minus/delta) and min(b_plus/delta); the achieving elements lift
    to the closed interval's endpoints.  Should the two endpoint slopes
    coincide, the interval degenerates to the complement of that point.
    """
    mu_L = validate_witness(Y, mu_L)
    positive = dtau(Y).positive
    if not positive:
        return LSpaceIntervalResult(
            kind="all-but-longitude",
            interval=ProjInterval.complement_of_point(LONGITUDE))
    best_lo = best_hi = None
    ach_lo = ach_hi = None
    for d in positive:
        b_minus, b_plus = residue_pair(Y, mu_L, d)
        lo_val = Fraction(b_minus, d.delta)
        hi_val = Fraction(b_plus, d.delta)
        if best_lo is None or lo_val > best_lo:
            best_lo, ach_lo = lo_val, d
        if best_hi is None or hi_val < best_hi:
            best_hi, ach_hi = hi_val, d
    slope_lo = endpoint_lifts(Y, mu_L, ach_lo)[0]
    slope_hi = endpoint_lifts(Y, mu_L, ach_hi)[1]
    if slope_lo == slope_hi:
        return LSpaceIntervalResult(
            kind="complement-of-point",
            interval=ProjInterval.complement_of_point(slope_lo),
            lo=slope_lo, hi=slope_hi,
            label_bounds=(best_lo, best_hi), achieving=(ach_lo, ach_hi))
    interval = ProjInterval.arc_through(slope_lo, slope_hi, via=mu_L)
    return LSpaceIntervalResult(
        kind="closed", interval=interval,
        lo=interval.lo, hi=interval.hi,
        label_bounds=(best_lo, best_hi), achieving=(ach_lo, ach_hi))


def nls_detected(Y, mu_L=None):
    """Closure of the complement of the L-space interval: the slopes whose
    fillings are detected as non-L-spaces."""
    result = lspace_interval(Y, mu_L)
    return result.interval.complement().closure()


def canonical_longitude(mu_L):
    """The unique longitude lambda_L = q* m + p* l with mu_L . lambda_L = 1
    and 0 <= q* < p, for a witness mu_L = p m + q l with p > 0."""
    p, q = mu_L.a, mu_L.b
    # need p*p_star - q*q_star = 1, i.e. q*q_star = -1 (mod p)
    if p == 1:
        q_star = 0
    else:
        q_star = (-pow(q, -1, p)) % p
    p_star = (1 + q * q_star) // p
    assert p * p_star - q * q_star == 1
    return Slope(q_star, p_star), q_star, p_star


def check_corollary_consistency(Y, mu_L, mu):
    """Evaluate the interval criterion along three routes and compare.

    Route one is the surgery-label inequality.  Route two rewrites mu as
    alpha*mu_L + beta*lambda_L for the canonical longitude and tests
    alpha/beta against the lifted endpoints' coordinates (the side of the
    inequality is picked by the sign of the label).  Route three tests the
    filling coordinates n/n' against the per-element closed intervals that
    exclude the longitude.  Returns True iff all three verdicts agree.
    """
    mu_L = validate_witness(Y, mu_L)
    rep = validate_manifold(Y)
    positive = dtau(Y).positive
    verdict_thm = is_lspace_slope(Y, mu_L, mu)

    p, q, g = mu_L.a, mu_L.b, rep.g
    beta, n, label = pairing_and_label(mu_L, mu)
    lam, q_star, p_star = canonical_longitude(mu_L)

    # surgery-coefficient route
    if n == 0:
        verdict_surgery = False
    elif not positive:
        verdict_surgery = True
    else:
        alpha, rem = divmod(n - beta * q_star, p)
        assert rem == 0
        verdict_surgery = True
        for d in positive:
            b_minus, b_plus = residue_pair(Y, mu_L, d)
            a_plus, rem = divmod(d.delta - b_plus * q_star, p)
            assert rem == 0
            a_minus = a_plus + q_star * g
            if beta == 0:
                continue
            if label < 0:
                ok = Fraction(alpha, beta) <= Fraction(a_minus, b_minus)
            else:
                ok = Fraction(a_plus, b_plus) <= Fraction(alpha, beta)
            if not ok:
                verdict_surgery = False
                break

    # filling-coordinate route
    if n == 0:
        verdict_filling = False
    elif not positive:
        verdict_filling = True
    else:
        verdict_filling = True
        for d in positive:
            lo, hi = endpoint_lifts(Y, mu_L, d)
            window = ProjInterval.arc_through(lo, hi, via=mu_L) if lo != hi else None
            if window is None or not window.contains(mu):
                verdict_filling = False
                break

    return verdict_thm == verdict_surgery == verdict_filling
