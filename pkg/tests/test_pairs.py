"""Pair construction, the membership criterion, order and meet laws."""
import pytest
from hypothesis import given, settings, strategies as st

from homposet.errors import InvalidPair, RingMismatch
from homposet.pairs import (
    TOP,
    HomPair,
    hom_pair,
    least_pair,
    leq,
    meet,
    pair_of_morphism,
    radical_translation_holds,
    raw_pair,
    saturation_defect,
    validate_pair,
)
from homposet.poset import hom_poset
from homposet.rings import (
    enumerate_ideals,
    ideal_generated_by,
    make_finite_field,
    make_matrix_ring,
    make_product,
    make_quotient,
    make_zmod,
    units,
)


def test_pair_structural_validation():
    z6 = make_zmod(6)
    HomPair(z6, frozenset({0, 2, 4}), frozenset({1, 3, 5}))
    with pytest.raises(InvalidPair):
        HomPair(z6, frozenset({0, 2}), frozenset({1}))  # not an ideal
    with pytest.raises(InvalidPair):
        HomPair(z6, frozenset({0}), frozenset({1, 3}))  # 3*3=3 fine, but misses unit 5
    with pytest.raises(InvalidPair):
        HomPair(z6, frozenset({0, 3}), frozenset({1, 3, 5}))  # 3 in both


def test_validate_pair_accepts_realized():
    z6 = make_zmod(6)
    report = validate_pair(z6, {0, 2, 4}, {1, 3, 5})
    assert report.ok
    assert [c.key for c in report.clauses] == [
        "submonoid", "units_included", "translation_stable", "regular_in_quotient",
    ]
    assert "realizable" in report.render_text()


def test_validate_pair_translation_witness():
    z6 = make_zmod(6)
    report = validate_pair(z6, {0, 2, 4}, {1, 5})
    assert not report.ok
    failed = report.failed()
    assert [c.key for c in failed] == ["translation_stable"]
    assert failed[0].witness == "1+2=3 not in M"


def test_validate_pair_regularity_witness():
    z6 = make_zmod(6)
    # {1,2,4,5} is multiplicatively closed and contains the units, but 2 is a
    # zero divisor mod (0)
    report = validate_pair(z6, {0}, {1, 2, 4, 5})
    assert not report.ok
    failed = report.failed()
    assert [c.key for c in failed] == ["regular_in_quotient"]
    assert "zero divisor" in failed[0].witness


def test_validate_pair_submonoid_witness():
    z6 = make_zmod(6)
    report = validate_pair(z6, {0}, {1, 2, 5})
    bad = {c.key for c in report.failed()}
    assert "submonoid" in bad


def test_validate_pair_improper_ideal():
    z6 = make_zmod(6)
    report = validate_pair(z6, set(range(6)), {1, 5})
    assert not report.ok


def test_pair_of_morphism_and_raw():
    z6, z2 = make_zmod(6), make_zmod(2)
    from homposet.morphisms import enumerate_morphisms

    f = enumerate_morphisms(z6, z2)[0]
    p = pair_of_morphism(f)
    assert p.ideal == frozenset({0, 2, 4})
    assert p.mset == frozenset({1, 3, 5})
    assert raw_pair(f) == (p.ideal, p.mset)


def test_least_pair():
    z6 = make_zmod(6)
    p = least_pair(z6)
    assert p.ideal == frozenset({0})
    assert p.mset == units(z6).members
    for q in hom_poset(z6).elements:
        assert leq(p, q)


def test_leq_and_top():
    z6 = make_zmod(6)
    a = least_pair(z6)
    assert leq(a, TOP) and not leq(TOP, a)
    assert leq(TOP, TOP)
    z4 = make_zmod(4)
    with pytest.raises(RingMismatch):
        leq(a, least_pair(z4))


def test_meet_with_top_and_mismatch():
    z6 = make_zmod(6)
    a = least_pair(z6)
    assert meet(a, TOP) == a and meet(TOP, a) == a
    with pytest.raises(RingMismatch):
        meet(a, least_pair(make_zmod(4)))


def test_meet_is_glb_over_z12():
    z12 = make_zmod(12)
    els = hom_poset(z12).elements
    for p in els:
        for q in els:
            m = meet(p, q)
            assert leq(m, p) and leq(m, q)
            for r in els:
                if leq(r, p) and leq(r, q):
                    assert leq(r, m)


def test_multiplicative_set_need_not_cancel():
    # the multiplicative component is a monoid but not cancellative:
    # 3*1 = 3*3 mod 6 while 1 != 3
    z6 = make_zmod(6)
    m = frozenset({1, 3, 5})
    assert z6.mul_table[3][1] == z6.mul_table[3][3]
    p = HomPair(z6, frozenset({0, 2, 4}), m)
    assert 1 in p.mset and 3 in p.mset


def test_saturation_defect_reports_outside_factors():
    z6 = make_zmod(6)
    p = hom_pair(z6, ideal_generated_by(z6, (2,)), {1, 3, 5})
    assert saturation_defect(z6, p) == ()
    q = least_pair(make_zmod(4))
    # 3*3 = 1 mod 4 with 3 a unit: no defect for units either
    assert saturation_defect(make_zmod(4), q) == ()


def test_radical_translation():
    z4 = make_zmod(4)
    p = least_pair(z4)  # ({0}, {1,3}); J = {0,2}; 1+0+2 = 3 stays in M
    assert radical_translation_holds(z4, p)


def test_hom_pair_accepts_wrappers():
    z6 = make_zmod(6)
    p = hom_pair(z6, ideal_generated_by(z6, (3,)), units(make_zmod(6)).members | {2, 4})
    assert p.ideal == frozenset({0, 3})


def test_pair_equality_and_hash():
    z6 = make_zmod(6)
    a = HomPair(z6, frozenset({0}), frozenset({1, 5}))
    b = least_pair(z6)
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


@settings(deadline=None)
@given(st.integers(2, 24))
def test_all_quotient_pairs_validate(n):
    ring = make_zmod(n)
    for ideal in enumerate_ideals(ring):
        if not ideal.is_proper:
            continue
        q, pi = make_quotient(ring, ideal)
        report = validate_pair(ring, pi.kernel_members, pi.unit_preimage_members)
        assert report.ok


@settings(deadline=None)
@given(st.integers(2, 16), st.integers(2, 16))
def test_meet_componentwise_matches_pairwise_order(n, m):
    ring = make_zmod(n * m) if n * m <= 64 else make_zmod(n)
    els = hom_poset(ring).elements
    for p in els[:4]:
        for q in els[:4]:
            mm = meet(p, q)
            assert mm.ideal == p.ideal & q.ideal
            assert mm.mset == p.mset & q.mset


def test_validate_pair_on_noncommutative():
    m2 = make_matrix_ring(make_zmod(2), 2)
    report = validate_pair(m2, {0}, m2.unit_indices)
    assert report.ok


def test_validate_pair_product_ring():
    p = make_product(make_zmod(2), make_zmod(3))
    # ideal 0 x Z/3 = {0,1,2}, mset = preimage of units of Z/2 side
    report = validate_pair(p, {0, 1, 2}, {3, 4, 5})
    assert report.ok
    report2 = validate_pair(p, {0, 1, 2}, {4, 5})
    assert not report2.ok  # misses 3, which is 1 mod the ideal
