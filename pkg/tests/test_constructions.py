import itertools
import random
import warnings

import pytest

from quandlehom.core import (is_connected, is_medial, product, quandle_type,
                             validate)
from quandlehom.identities import Word, parse_word, satisfies
from quandlehom.constructions import (PolyRing, alexander_poly, alexander_zn,
                                      are_isomorphic, burnside_family,
                                      canonical_form, conjugation, dihedral,
                                      enumerate_connected,
                                      generalized_alexander, make,
                                      repetition_polynomial, ring_element,
                                      affine_satisfies, trivial)
from quandlehom.errors import (CapExceeded, NotAnAutomorphism, NotAUnit,
                               NotPrime, PNotGreaterThanN,
                               ReducibleModulusAllowed)


def test_dihedral_table():
    assert dihedral(3).rows == ((0, 2, 1), (2, 1, 0), (1, 0, 2))


def test_every_construction_validates():
    tables = [trivial(4), dihedral(5), alexander_zn(7, 3),
              alexander_poly(2, (1, 1, 1), (0, 1)), burnside_family(1, 2, 3)]
    for X in tables:
        rep = validate(X.rows, mode="quandle")
        assert rep.is_quandle


def test_alexander_poly_order8(oct_a, oct_b):
    assert oct_a.order == 8 and is_connected(oct_a)
    assert quandle_type(oct_a) == 7
    assert satisfies(oct_a, parse_word("aabbaba")).satisfied
    assert not satisfies(oct_a, parse_word("aababba")).satisfied
    assert satisfies(oct_b, parse_word("aababba")).satisfied


def test_alexander_zn_examples(az52):
    assert is_connected(az52) and quandle_type(az52) == 4
    assert satisfies(az52, parse_word("abab")).satisfied


def test_construction_errors():
    with pytest.raises(NotAUnit):
        alexander_zn(4, 2)
    with pytest.raises(NotAUnit):
        alexander_poly(2, (1, 1, 1), (0,))     # zero is not a unit
    with pytest.raises(NotPrime):
        burnside_family(1, 2, 4)
    with pytest.raises(PNotGreaterThanN):
        burnside_family(1, 3, 3)
    with pytest.raises(NotPrime):
        PolyRing(6, (1, 1))


def test_reducible_modulus_warns():
    with pytest.warns(ReducibleModulusAllowed):
        PolyRing(2, (1, 0, 1))                 # t^2 + 1 = (t+1)^2 mod 2
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        PolyRing(2, (1, 1, 1))                 # irreducible: no warning


def test_polyring_arithmetic():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ring = PolyRing(5, repetition_polynomial(2, 3))
    assert ring.size == 625
    t = ring.t
    assert ring.pow(t, 6) == ring.one            # t^6 = 1 in the quotient
    assert ring.is_unit(ring.sub(ring.one, t))
    x = ring_element(ring, (1, 2, 3, 4))
    assert ring.mul(x, ring.one) == x
    assert ring.add(x, ring.zero) == x
    assert ring.element(ring.index(x)) == x


def test_repetition_polynomial():
    assert repetition_polynomial(1, 2) == [1, 1]
    assert repetition_polynomial(2, 2) == [1, 0, 1]
    assert repetition_polynomial(1, 3) == [1, 1, 1]
    assert repetition_polynomial(2, 3) == [1, 0, 1, 0, 1]


def test_burnside_small_members():
    B = burnside_family(1, 2, 3)
    assert B.rows == dihedral(3).rows
    assert satisfies(B, parse_word("aa")).satisfied
    B = burnside_family(2, 2, 3)
    assert B.order == 9 and is_connected(B)
    assert satisfies(B, parse_word("abab")).satisfied
    B = burnside_family(1, 3, 5)
    assert B.order == 25 and is_connected(B)
    assert satisfies(B, parse_word("aaa")).satisfied


def test_affine_closed_form_matches_product(oct_a):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ring = PolyRing(2, (1, 0, 1, 1))
    rng = random.Random(9)
    t = ring.t
    for _ in range(50):
        k = rng.randint(1, 7)
        x = rng.randrange(8)
        ys = [rng.randrange(8) for _ in range(k)]
        # t^k x + (1-t)(t^(k-1) y1 + ... + yk)
        acc = ring.mul(ring.pow(t, k), ring.element(x))
        coef = ring.sub(ring.one, t)
        for i, y in enumerate(ys, start=1):
            acc = ring.add(acc, ring.mul(coef, ring.mul(ring.pow(t, k - i),
                                                        ring.element(y))))
        assert product(oct_a, x, ys) == ring.index(acc)


def test_affine_satisfies_agrees_with_scan(oct_a):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ring = PolyRing(2, (1, 0, 1, 1))
    rng = random.Random(17)
    for _ in range(40):
        k = rng.randint(1, 7)
        m = rng.randint(1, min(2, k))
        w = Word.canonical([0] + [rng.randrange(m) for _ in range(k - 1)])
        assert affine_satisfies(ring, ring.t, w) == \
            satisfies(oct_a, w).satisfied


def test_alexander_always_medial():
    for X in (alexander_zn(9, 2), alexander_poly(3, (1, 0, 1), (0, 1)),
              burnside_family(2, 2, 3)):
        assert is_medial(X) is True


def test_enumerate_connected_counts():
    assert [len(enumerate_connected(n)) for n in range(1, 7)] == \
        [1, 0, 1, 1, 3, 2]
    with pytest.raises(CapExceeded):
        enumerate_connected(7)


def test_enumerate_connected_members_are_connected_quandles():
    for n in (3, 4, 5, 6):
        for X in enumerate_connected(n):
            assert X.is_quandle and is_connected(X)


def test_enumerate_no_isomorphic_pairs():
    got = enumerate_connected(5)
    forms = [canonical_form(X) for X in got]
    assert len(set(forms)) == len(forms)


def test_enumeration_covers_known_order5(az52, az53):
    got = enumerate_connected(5)
    assert any(are_isomorphic(X, az52) for X in got)
    assert any(are_isomorphic(X, az53) for X in got)
    assert any(are_isomorphic(X, dihedral(5)) for X in got)


def test_order4_connected_is_gf4(gf4):
    got = enumerate_connected(4)
    assert len(got) == 1 and are_isomorphic(got[0], gf4)


def test_burnside_1_2_3_isomorphic_to_dihedral3(dih3):
    assert are_isomorphic(burnside_family(1, 2, 3), dih3)


def test_conjugation_and_generalized_alexander():
    z4 = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    GA = generalized_alexander(z4, [0, 3, 2, 1])
    assert GA.is_quandle and quandle_type(GA) == 2
    with pytest.raises(NotAnAutomorphism):
        generalized_alexander(z4, [0, 2, 1, 3])
    perms = sorted(itertools.permutations(range(3)))
    perms.remove((0, 1, 2))
    perms = [(0, 1, 2)] + perms
    idx = {p: i for i, p in enumerate(perms)}
    cayley = [[idx[tuple(p[q[i]] for i in range(3))] for q in perms]
              for p in perms]
    CQ = conjugation(cayley)
    assert CQ.order == 6 and CQ.is_quandle
    assert not is_connected(CQ)       # identity element is a fixed orbit


def test_make_dispatch(dih3):
    assert make("dihedral", 3) == dih3
    assert make("trivial", 2).rows == ((0, 0), (1, 1))
    assert make("alexander_zn", 5, 2).order == 5
    with pytest.raises(ValueError):
        make("nope", 3)
