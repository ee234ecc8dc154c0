"""Seifert fibered spaces over the two-sphere.

A space M(e0; r1/s1, ..., rn/sn) is the Dehn filling of a circle bundle
over the n+1 punctured sphere: slope e0 on the distinguished boundary and
noninteger slopes ri/si on the others.  Normal form puts every ri/si in
(0, 1) with integer parts absorbed into e0.

The classifier evaluates, over x in {1, ..., s-1} with s = lcm(si),

    A(x) = -(1/x)(-1 + sum ceil(ri x / si)),
    B(x) = -(1/x)( 1 + sum floor(ri x / si)),

and declares M not an L-space exactly when the Euler number
e = e0 + sum ri/si vanishes or min A - e0 < 0 < max B - e0.  An
equivalent form brackets the Euler number by remainder sums; both are
computed and must agree.  The difference set of the regular-fiber
complement is carried along explicitly, which lets the surgery-label
criterion re-derive every verdict by an independent route.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from .errors import IntegerFiberSlope


@dataclass(frozen=True)
class SeifertData:
    e0: int
    fibers: tuple  # pairs (r, s)

    def __post_init__(self):
        fibers = tuple((int(r), int(s)) for r, s in self.fibers)
        for r, s in fibers:
            if s == 0:
                raise IntegerFiberSlope("fiber slope with zero denominator")
            if r % s == 0:
                raise IntegerFiberSlope("fiber slope %d/%d is an integer" % (r, s))
        object.__setattr__(self, "e0", int(self.e0))
        object.__setattr__(self, "fibers", fibers)

    @property
    def n(self):
        return len(self.fibers)

    def euler(self):
        return self.e0 + sum(Fraction(r, s) for r, s in self.fibers)

    def is_normalized(self):
        return all(s > 0 and 0 < r < s and gcd(r, s) == 1 for r, s in self.fibers)


def sfs_from_json(doc):
    return SeifertData(e0=doc["e0"], fibers=tuple((r, s) for r, s in doc["fibers"]))


def sfs_to_json(d):
    return {"e0": d.e0, "fibers": [[r, s] for r, s in d.fibers]}


def sfs_normalize(d):
    """Reduce every fiber slope into (0, 1), absorbing integer parts into
    e0, and return (normalized data, transcript of the shifts applied)."""
    transcript = []
    e0 = d.e0
    fibers = []
    for r, s in d.fibers:
        if s < 0:
            r, s = -r, -s
        g = gcd(abs(r), s)
        r, s = r // g, s // g
        z = r // s
        if z:
            transcript.append("shifted %d/%d by %d into e0" % (r, s, -z))
        e0 += z
        fibers.append((r - z * s, s))
    if e0 != d.e0:
        transcript.append("e0: %d -> %d" % (d.e0, e0))
    return SeifertData(e0=e0, fibers=tuple(fibers)), transcript


def sfs_flip(d):
    """The orientation reversal M(-e0; -r1/s1, ...), renormalized."""
    flipped = SeifertData(e0=-d.e0, fibers=tuple((-r, s) for r, s in d.fibers))
    return sfs_normalize(flipped)[0]


class SfsVerdict(NamedTuple):
    lspace: bool
    reason: str              # "euler-zero" | "interval-criterion" | "criterion"
    euler: Fraction
    theorem_not_lspace: bool
    orbifold_not_lspace: bool
    min_side: Fraction       # min A(x) - e0  (None when n = 0)
    max_side: Fraction       # max B(x) - e0


def _minmax_sides(e0, fibers, s):
    min_a = max_b = None
    for x in range(1, s):
        ceil_sum = sum(-((-r * x) // sd) for r, sd in fibers)
        floor_sum = sum((r * x) // sd for r, sd in fibers)
        a = Fraction(-(-1 + ceil_sum), x)
        b = Fraction(-(1 + floor_sum), x)
        if min_a is None or a < min_a:
            min_a = a
        if max_b is None or b > max_b:
            max_b = b
    return min_a, max_b


def sfs_is_lspace(d):
    """Classify M(e0; r1/s1, ..., rn/sn), evaluating both criterion forms.

    Data is normalized first.  With no exceptional fibers the space is a
    lens-space-like filling and is an L-space iff e0 != 0.
    """
    d, _ = sfs_normalize(d)
    e = d.euler()
    if d.n == 0:
        lspace = d.e0 != 0
        return SfsVerdict(lspace=lspace,
                          reason="criterion" if lspace else "euler-zero",
                          euler=Fraction(d.e0),
                          theorem_not_lspace=not lspace,
                          orbifold_not_lspace=not lspace,
                          min_side=None, max_side=None)
    s = lcm(*[sd for _, sd in d.fibers])
    min_a, max_b = _minmax_sides(d.e0, d.fibers, s)
    min_side = min_a - d.e0
    max_side = max_b - d.e0
    thm_not = (e == 0) or (min_side < 0 < max_side)
    # remainder-sum form bracketing the Euler number
    lo = min(Fraction(1, x) * (1 - sum(Fraction((-r * x) % sd, sd) for r, sd in d.fibers))
             for x in range(1, s))
    hi = max(Fraction(1, x) * (-1 + sum(Fraction((r * x) % sd, sd) for r, sd in d.fibers))
             for x in range(1, s))
    orb_not = (e == 0) or (lo < e < hi)
    if thm_not != orb_not:
        raise AssertionError("criterion forms disagree on %r" % (d,))
    if e == 0:
        reason = "euler-zero"
    elif thm_not:
        reason = "interval-criterion"
    else:
        reason = "criterion"
    return SfsVerdict(lspace=not thm_not, reason=reason, euler=e,
                      theorem_not_lspace=thm_not, orbifold_not_lspace=orb_not,
                      min_side=min_side, max_side=max_side)


def sfs_over_rp2_is_lspace():
    """Oriented Seifert fibrations over the projective plane are all
    L-spaces; constant verdict."""
    return True


def sfs_higher_genus_is_lspace():
    """No Seifert fibration over a base of positive genus is an L-space;
    constant verdict."""
    return False


# --- the fiber-complement difference set ----------------------------------

class SfsDtauEntry(NamedTuple):
    j: int
    x: int
    delta: int
    a_minus: int
    b_minus: int
    a_plus: int
    b_plus: int


class SfsDtau(NamedTuple):
    entries: tuple
    p: int
    q_star: int
    g: int
    s: int


def sfs_dtau(d):
    """Parameterized difference set of the regular-fiber complement.

    In the surgery basis given by the distinguished boundary, the
    complement of a regular fiber has difference-set elements indexed by
    j in {1..n-1} and x in {1..s-1}:

        delta(j, x) = (s/g) (-j + sum [ri x]_{si} / si),

    kept when the value is a nonnegative integer (it always is an integer),
    with coordinates a- = x, b- = -j - sum floor(ri x / si), and the
    opposite lift a+ = a- - q* g = -(s - x), b+ = b- + p g.  Here
    g = gcd(sum ri s / si, s), p = (s/g) sum ri/si, q* = s/g.
    """
    if not d.is_normalized():
        d, _ = sfs_normalize(d)
    if d.n == 0:
        return SfsDtau(entries=(), p=0, q_star=1, g=1, s=1)
    s = lcm(*[sd for _, sd in d.fibers])
    total = sum(r * (s // sd) for r, sd in d.fibers)
    g = gcd(total, s)
    p = total // g
    q_star = s // g
    entries = []
    for j in range(1, d.n):
        for x in range(1, s):
            val = Fraction(s, g) * (-j + sum(Fraction((r * x) % sd, sd)
                                             for r, sd in d.fibers))
            assert val.denominator == 1
            delta = int(val)
            if delta < 0:
                continue
            b_minus = -j - sum((r * x) // sd for r, sd in d.fibers)
            a_minus = x
            b_plus = b_minus + p * g
            a_plus = a_minus - q_star * g
            assert a_minus * p + b_minus * q_star == delta
            assert 0 < -b_minus < p * g
            entries.append(SfsDtauEntry(j, x, delta, a_minus, b_minus,
                                        a_plus, b_plus))
    return SfsDtau(entries=tuple(entries), p=p, q_star=q_star, g=g, s=s)


def sfs_is_lspace_via_dtau(d):
    """Independent verdict through the fiber-complement difference set.

    The space is the filling with surgery coefficients (alpha, beta) =
    (1, e0) relative to the distinguished fiber basis; the surgery-label
    inequalities over the positive entries decide L-space-ness.
    """
    if not d.is_normalized():
        d, _ = sfs_normalize(d)
    if d.n == 0:
        return d.e0 != 0
    data = sfs_dtau(d)
    n_pairing = data.q_star * d.e0 + data.p  # mu_0 . l = (s/g) * euler
    if n_pairing == 0:
        return False
    alpha, beta = 1, d.e0
    if beta == 0:
        return True
    label_positive = (Fraction(beta, n_pairing) > 0)
    for e in data.entries:
        if e.delta <= 0:
            continue
        if label_positive:
            ok = Fraction(e.a_plus, e.b_plus) <= Fraction(alpha, beta)
        else:
            ok = Fraction(alpha, beta) <= Fraction(e.a_minus, e.b_minus)
        if not ok:
            return False
    return True


class FiberInterval(NamedTuple):
    t_lower: Fraction
    t_upper: Fraction

    def lspace_given(self, r, s, euler):
        """Verdict for the space with this fiber filled along r/s."""
        if euler == 0:
            return False
        v = Fraction(r, s)
        return v <= self.t_lower or v >= self.t_upper


def sfs_fiber_interval(d, j):
    """Threshold pair controlling L-space-ness as the j-th fiber varies.

    For the other fibers fixed (normalized), the space is an L-space iff
    the Euler number is nonzero and rj/sj <= first threshold or
    rj/sj >= second threshold, where the thresholds are the min/max sides
    evaluated without the j-th fiber (s = lcm of the other denominators).
    """
    if not d.is_normalized():
        d, _ = sfs_normalize(d)
    others = tuple(f for i, f in enumerate(d.fibers) if i != j)
    if not others:
        raise ValueError("need at least two exceptional fibers")
    s = lcm(*[sd for _, sd in others])
    if s == 1:
        raise IntegerFiberSlope("remaining fibers must be noninteger")
    min_a, max_b = _minmax_sides(d.e0, others, s)
    return FiberInterval(t_lower=min_a - d.e0, t_upper=max_b - d.e0)
