from fractions import Fraction
from itertools import product
from math import gcd

import pytest

from lspace.errors import IntegerFiberSlope
from lspace.seifert import (SeifertData, sfs_dtau, sfs_fiber_interval,
                            sfs_flip, sfs_higher_genus_is_lspace,
                            sfs_is_lspace, sfs_is_lspace_via_dtau,
                            sfs_normalize, sfs_over_rp2_is_lspace)


def M(e0, *fibers):
    return SeifertData(e0=e0, fibers=tuple(fibers))


def test_normalize_examples():
    d, _ = sfs_normalize(M(0, (5, 3)))
    assert d == M(1, (2, 3))
    d, _ = sfs_normalize(M(0, (-1, 2), (1, 3)))
    assert d == M(-1, (1, 2), (1, 3))
    # negative denominators and common factors reduce away
    d, _ = sfs_normalize(M(2, (-2, -4)))
    assert d == M(2, (1, 2))


def test_normalize_rejects_integer_slope():
    with pytest.raises(IntegerFiberSlope):
        M(0, (4, 2))


def test_orientation_flip():
    d = sfs_flip(M(0, (2, 3)))
    assert d == M(-1, (1, 3))
    # flipping twice returns the normalized original
    assert sfs_flip(sfs_flip(M(-1, (1, 2), (1, 3), (1, 7)))) == M(-1, (1, 2), (1, 3), (1, 7))


def test_named_verdicts():
    assert not sfs_is_lspace(M(-1, (1, 2), (1, 2))).lspace        # Euler number zero
    assert sfs_is_lspace(M(-1, (1, 2), (1, 2))).reason == "euler-zero"
    assert sfs_is_lspace(M(0, (1, 2), (1, 3), (1, 5))).lspace
    v = sfs_is_lspace(M(-1, (1, 2), (1, 3), (1, 7)))
    assert not v.lspace
    assert v.euler == Fraction(-1, 42)


def test_orbifold_bracketing_values():
    # the bracketing form attains -43/42 at x=1 and 37/210 at x=5
    d = M(-1, (1, 2), (1, 3), (1, 7))
    lo = min(Fraction(1, x) * (1 - sum(Fraction((-r * x) % sd, sd) for r, sd in d.fibers))
             for x in range(1, 42))
    hi = max(Fraction(1, x) * (-1 + sum(Fraction((r * x) % sd, sd) for r, sd in d.fibers))
             for x in range(1, 42))
    assert lo == Fraction(-43, 42)
    assert hi == Fraction(37, 210)
    assert lo < Fraction(-1, 42) < hi


def test_no_exceptional_fibers():
    assert sfs_is_lspace(SeifertData(e0=3, fibers=())).lspace
    assert not sfs_is_lspace(SeifertData(e0=0, fibers=())).lspace


def test_lens_spaces_always_lspaces():
    for e0 in range(-3, 4):
        v = sfs_is_lspace(M(e0, (1, 2)))
        assert v.lspace


def test_constant_verdict_stubs():
    assert sfs_over_rp2_is_lspace() is True
    assert sfs_higher_genus_is_lspace() is False


def test_dtau_single_fiber_empty():
    assert sfs_dtau(M(0, (1, 2))).entries == ()


def test_dtau_n2_shape():
    data = sfs_dtau(M(0, (1, 2), (1, 2)))
    assert len(data.entries) == 1
    e = data.entries[0]
    assert (e.j, e.x, e.delta, e.b_minus, e.a_minus) == (1, 1, 0, -1, 1)
    assert all(x.delta <= 0 for x in data.entries)  # positive part empty


def test_dtau_235():
    data = sfs_dtau(M(0, (1, 2), (1, 3), (1, 5)))
    assert (data.s, data.g) == (30, 1)
    assert data.p == sum(Fraction(r, s) for r, s in ((1, 2), (1, 3), (1, 5))) * 30
    # frozen regression for the retained entries
    retained = {(e.j, e.x, e.delta) for e in data.entries}
    assert all(e.delta >= 0 for e in data.entries)
    positive = sorted((e.j, e.x, e.delta) for e in data.entries if e.delta > 0)
    assert positive
    max_delta = max(e.delta for e in data.entries)
    # classifier agreement: the 0-filling here is an L-space, and indeed
    # the via-dtau route agrees
    assert sfs_is_lspace_via_dtau(M(0, (1, 2), (1, 3), (1, 5)))
    assert (1, 29, 29) in retained
    assert max_delta == 29


def test_fiber_interval_thresholds():
    iv = sfs_fiber_interval(M(-1, (1, 2), (1, 3), (1, 5)), 2)
    assert iv.t_lower == 0
    assert iv.t_upper == Fraction(1, 5)
    e_15 = Fraction(-1) + Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 5)
    assert iv.lspace_given(1, 5, e_15)
    assert sfs_is_lspace(M(-1, (1, 2), (1, 3), (1, 5))).lspace
    # 2/7 exceeds the upper threshold, so the filling is an L-space; this
    # agrees with the classifier on M(-1; 1/2, 1/3, 2/7)
    e_27 = Fraction(-1) + Fraction(1, 2) + Fraction(1, 3) + Fraction(2, 7)
    assert iv.lspace_given(2, 7, e_27)
    assert sfs_is_lspace(M(-1, (1, 2), (1, 3), (2, 7))).lspace
    # Euler number zero at 1/6
    e_16 = Fraction(-1) + Fraction(1, 2) + Fraction(1, 3) + Fraction(1, 6)
    assert e_16 == 0
    assert not iv.lspace_given(1, 6, e_16)
    assert not sfs_is_lspace(M(-1, (1, 2), (1, 3), (1, 6))).lspace


def normalized_fibers(max_s):
    out = []
    for s in range(2, max_s + 1):
        for r in range(1, s):
            if gcd(r, s) == 1:
                out.append((r, s))
    return out


def enumerate_sfs(max_n, max_s, max_e0):
    fibers = normalized_fibers(max_s)
    for n in range(1, max_n + 1):
        for combo in product(fibers, repeat=n):
            for e0 in range(-max_e0, max_e0 + 1):
                yield SeifertData(e0=e0, fibers=combo)


def test_classifier_coherence_small_sample():
    # reduced version of the exhaustive acceptance sweep
    count = 0
    for d in enumerate_sfs(2, 4, 2):
        v = sfs_is_lspace(d)
        assert v.theorem_not_lspace == v.orbifold_not_lspace
        assert sfs_is_lspace_via_dtau(d) == v.lspace, d
        if d.n >= 2:
            for j in range(d.n):
                iv = sfs_fiber_interval(d, j)
                r, s = d.fibers[j]
                assert iv.lspace_given(r, s, d.euler()) == v.lspace, (d, j)
        count += 1
    assert count == 150


def test_orientation_duality_sample():
    for d in enumerate_sfs(2, 4, 2):
        assert sfs_is_lspace(d).lspace == sfs_is_lspace(sfs_flip(d)).lspace, d


def test_reparameterization_invariance():
    # shifting integer parts between fibers and e0 leaves verdicts alone
    base = M(-1, (1, 2), (2, 3))
    v = sfs_is_lspace(base).lspace
    assert sfs_is_lspace(M(-2, (3, 2), (2, 3))).lspace == v
    assert sfs_is_lspace(M(0, (-1, 2), (2, 3))).lspace == v
    assert sfs_is_lspace(M(-3, (3, 2), (5, 3))).lspace == v
