from fractions import Fraction

import pytest

from lspace.abelian import LONGITUDE, Slope
from lspace.corpus import n_g, negative_trefoil, solid_torus, t25, trefoil
from lspace.errors import (LSpaceError, WitnessOnIntervalBoundary,
                           WitnessOnLongitude)
from lspace.interval import (check_corollary_consistency, is_lspace_slope,
                             lspace_interval, nls_detected, validate_witness)
from lspace.projline import ProjInterval
from lspace.torsion import retwist, slope_after_retwist


def all_slopes(bound):
    out = [Slope(0, 1)]
    for a in range(1, bound + 1):
        for b in range(-bound, bound + 1):
            try:
                s = Slope(a, b)
            except ValueError:
                continue
            if (s.a, s.b) == (a, b):
                out.append(s)
    return out


def valid_witnesses(Y, bound=12):
    out = []
    for s in all_slopes(bound):
        try:
            validate_witness(Y, s)
        except LSpaceError:
            continue
        out.append(s)
    return out


def test_validate_witness_examples():
    Y = trefoil()
    validate_witness(Y, Slope(3, 1))
    with pytest.raises(WitnessOnIntervalBoundary):
        validate_witness(Y, Slope(1, 1))
    with pytest.raises(WitnessOnLongitude):
        validate_witness(Y, Slope(0, 1))


def test_is_lspace_trefoil():
    Y = trefoil()
    w = Slope(3, 1)
    assert is_lspace_slope(Y, w, Slope(2, 1))
    assert not is_lspace_slope(Y, w, Slope(-1, 1))
    # the trefoil interval is [1, oo]: slope >= 2g(K) - 1 = 1
    for a in range(-12, 13):
        for b in range(-12, 13):
            if (a, b) == (0, 0):
                continue
            s = Slope(a, b)
            expect = (s.b == 0) or (s.b != 0 and s.a != 0 and Fraction(s.a, s.b) >= 1)
            assert is_lspace_slope(Y, w, s) == expect, s


def test_is_lspace_longitude_false():
    assert not is_lspace_slope(solid_torus(), Slope(1, 0), Slope(0, 1))


def test_interval_trefoil():
    r = lspace_interval(trefoil())
    assert r.kind == "closed"
    assert {r.lo, r.hi} == {Slope(1, 1), Slope(1, 0)}
    assert r.label_bounds == (Fraction(-1), Fraction(2))
    assert r.interval.contains(Slope(3, 1))
    assert not r.interval.contains(Slope(0, 1))


def test_interval_negative_trefoil():
    r = lspace_interval(negative_trefoil())
    assert r.kind == "closed"
    assert {r.lo, r.hi} == {Slope(1, -1), Slope(1, 0)}
    assert r.interval.contains(Slope(3, -1))
    assert not r.interval.contains(Slope(1, 1))


def test_interval_t25():
    r = lspace_interval(t25())
    assert r.kind == "closed"
    assert {r.lo, r.hi} == {Slope(3, 1), Slope(1, 0)}


def test_interval_trivial_cases():
    assert lspace_interval(solid_torus()).kind == "all-but-longitude"
    for g in (2, 3, 4, 5):
        r = lspace_interval(n_g(g), Slope(2, 1))
        assert r.kind == "all-but-longitude"


def test_membership_coherence_exhaustive():
    """is_lspace_slope agrees with interval membership for |a|,|b| <= 50."""
    cases = [(trefoil(), Slope(3, 1)), (t25(), Slope(4, 1)),
             (n_g(2), Slope(1, 0)), (solid_torus(), Slope(1, 0)),
             (trefoil(), Slope(7, 2)), (t25(), Slope(7, 2))]
    for Y, w in cases:
        r = lspace_interval(Y, w)
        for s in all_slopes(50):
            assert is_lspace_slope(Y, w, s) == r.interval.contains(s), (Y, w, s)


def test_witness_independence():
    # any valid witness in the interior of the computed interval gives the
    # same interval back
    for Y in (trefoil(), t25(), n_g(2), n_g(3), solid_torus()):
        first = lspace_interval(Y, Y.witness)
        interior = first.interval.interior()
        checked = 0
        for w in valid_witnesses(Y, 8):
            if not interior.contains(w):
                continue
            r = lspace_interval(Y, w)
            assert r.kind == first.kind
            assert r.interval.same_points(first.interval)
            checked += 1
        assert checked >= 2


def test_interval_endpoints_lift_to_dtau():
    from lspace.torsion import dtau, iota_coordinates
    for Y, w in ((trefoil(), Slope(3, 1)), (t25(), Slope(4, 1)),
                 (t25(), Slope(7, 2))):
        r = lspace_interval(Y, w)
        positive = {(d.delta, d.gamma) for d in dtau(Y).positive}
        for end in (r.lo, r.hi):
            # some integer multiple of the endpoint is a lift of a
            # positive difference-set element
            found = False
            for k in range(1, 8):
                coords = iota_coordinates(Y, Y.iota(Slope(end.a * k, end.b * k))
                                          if False else
                                          Y.group.add(Y.group.scale(end.a * k, Y.iota_m),
                                                      Y.group.scale(end.b * k, Y.iota_l)))
                if coords and coords in positive:
                    found = True
                    break
            assert found, (Y, end)


def test_basis_covariance():
    for Y in (trefoil(), t25(), n_g(2)):
        w = Y.witness
        for k in (-2, -1, 1, 2):
            Yk = retwist(Y, k)
            wk = slope_after_retwist(w, k)
            for s in all_slopes(10):
                sk = slope_after_retwist(s, k)
                assert is_lspace_slope(Y, w, s) == is_lspace_slope(Yk, wk, sk)


def test_corollary_consistency_examples():
    Y = trefoil()
    w = Slope(3, 1)
    assert check_corollary_consistency(Y, w, Slope(2, 1))
    assert check_corollary_consistency(Y, w, Slope(1, -1))
    assert check_corollary_consistency(n_g(2), Slope(1, 0), Slope(0, 1))


def test_corollary_consistency_sweep():
    for Y, w in ((trefoil(), Slope(3, 1)), (t25(), Slope(4, 1)),
                 (t25(), Slope(7, 2)), (n_g(3), Slope(2, 1)),
                 (solid_torus(), Slope(1, 0))):
        for s in all_slopes(12):
            assert check_corollary_consistency(Y, w, s), (Y, w, s)


def test_nls_detected():
    # trefoil: closure of the complement of [1, oo] is the arc through 0
    # with endpoints oo and 1, both included
    r = nls_detected(trefoil())
    assert r.contains(Slope(1, 1)) and r.contains(Slope(1, 0))
    assert r.contains(Slope(0, 1)) and r.contains(Slope(-1, 1))
    assert not r.contains(Slope(2, 1))
    # solid torus and the N_g family: just the longitude
    for Y in (solid_torus(), n_g(2)):
        r = nls_detected(Y, Slope(1, 0))
        assert r.same_points(ProjInterval.point(LONGITUDE))
