"""Table rings: constructors, structural sets, and invariants."""
import math

import pytest
from hypothesis import given, settings, strategies as st

from homposet.config import Caps
from homposet.errors import (
    BaseNotField,
    CapExceeded,
    ImproperIdeal,
    NotAnIdeal,
    NotASubmonoid,
    NotPrime,
    RingMismatch,
    ZeroRingExcluded,
)
from homposet.rings import (
    FiniteRing,
    Ideal,
    MultiplicativeSet,
    RingMorphism,
    check_table_axioms,
    compose,
    enumerate_ideals,
    ideal_generated_by,
    identity_morphism,
    is_completely_prime,
    is_directly_finite,
    is_field,
    is_prime_ideal,
    is_saturated,
    jacobson_radical,
    kernel,
    make_finite_field,
    make_matrix_ring,
    make_product,
    make_quotient,
    make_zmod,
    product_injections,
    product_projections,
    proper_ideals,
    regenerate,
    regular_elements,
    ring_from_tables,
    subring,
    subring_closure,
    unit_preimage,
    units,
)

zmods = st.integers(2, 32).map(make_zmod)


def test_zmod_basics():
    z6 = make_zmod(6)
    assert z6.size == 6 and z6.zero == 0 and z6.one == 1
    assert z6.characteristic == 6
    assert z6.is_commutative
    assert sorted(units(z6).members) == [1, 5]
    assert z6.neg_table == (0, 5, 4, 3, 2, 1)
    assert z6.additive_orders == (1, 6, 3, 2, 3, 6)


def test_zmod_rejects_degenerate_and_capped():
    with pytest.raises(ZeroRingExcluded):
        make_zmod(1)
    with pytest.raises(ZeroRingExcluded):
        make_zmod(0)
    with pytest.raises(CapExceeded):
        make_zmod(65)
    make_zmod(65, Caps(table_size=65))  # explicit cap lifts the bound


@settings(deadline=None)
@given(zmods)
def test_zmod_satisfies_axioms(ring):
    assert check_table_axioms(ring) == []


@settings(deadline=None)
@given(zmods)
def test_units_are_exactly_coprime_residues(ring):
    n = ring.size
    assert units(ring).members == frozenset(x for x in range(n) if math.gcd(x, n) == 1)


@settings(deadline=None)
@given(zmods)
def test_regular_equals_units_in_zmod(ring):
    assert regular_elements(ring) == ring.unit_indices


def test_finite_field_smallest_modulus():
    f4 = make_finite_field(2, 2)
    # x^2 + x + 1: coefficients low degree first, trailing leading 1
    assert f4.provenance[3] == (1, 1, 1)
    assert is_field(f4)
    f8 = make_finite_field(2, 3)
    # low-degree-first comparison puts 1 + x^2 + x^3 before 1 + x + x^3
    assert f8.provenance[3] == (1, 0, 1, 1)
    assert is_field(f8)
    f9 = make_finite_field(3, 2)
    assert is_field(f9) and f9.characteristic == 3


def test_finite_field_order_one_matches_zmod():
    assert make_finite_field(5, 1).mul_table == make_zmod(5).mul_table
    assert make_finite_field(5, 1) == make_zmod(5)


def test_finite_field_rejects_composite_base():
    with pytest.raises(NotPrime):
        make_finite_field(4, 2)
    with pytest.raises(CapExceeded):
        make_finite_field(2, 7)


@settings(deadline=None)
@given(st.sampled_from([(2, 2), (2, 3), (2, 4), (3, 2), (5, 1), (7, 1), (3, 3)]))
def test_finite_fields_satisfy_axioms(pk):
    ring = make_finite_field(*pk)
    assert check_table_axioms(ring) == []
    assert is_field(ring)
    assert len(units(ring).members) == ring.size - 1


def test_product_layout_and_units():
    p = make_product(make_zmod(2), make_zmod(3))
    assert p.size == 6 and p.zero == 0 and p.one == 1 * 3 + 1
    assert sorted(units(p).members) == [4, 5]
    pr1, pr2 = product_projections(p)
    assert pr1.images == (0, 0, 0, 1, 1, 1)
    assert pr2.images == (0, 1, 2, 0, 1, 2)
    in1, in2 = product_injections(p)
    assert in1 == (0, 3) and in2 == (0, 1, 2)


def test_product_rejects_trivial_factor_and_cap():
    with pytest.raises(CapExceeded):
        make_product(make_zmod(16), make_zmod(16))


def test_quotient_of_z6_by_two():
    z6 = make_zmod(6)
    q, pi = make_quotient(z6, ideal_generated_by(z6, (2,)))
    assert q.size == 2
    assert pi.images == (0, 1, 0, 1, 0, 1)
    assert q == make_zmod(2)  # same tables after min-rep relabeling
    assert kernel(pi).members == frozenset({0, 2, 4})
    assert unit_preimage(pi).members == frozenset({1, 3, 5})


def test_quotient_rejects_improper():
    z6 = make_zmod(6)
    with pytest.raises(ImproperIdeal):
        make_quotient(z6, ideal_generated_by(z6, (1,)))


def test_matrix_ring_m2_f2():
    m2 = make_matrix_ring(make_zmod(2), 2)
    assert m2.size == 16
    assert not m2.is_commutative
    assert check_table_axioms(m2) == []
    # |GL_2(F_2)| = 6, re-derived by a determinant scan
    det_units = set()
    for i in range(16):
        a, b, c, d = i & 1, (i >> 1) & 1, (i >> 2) & 1, (i >> 3) & 1
        if (a * d - b * c) % 2 == 1:
            det_units.add(i)
    assert m2.unit_indices == frozenset(det_units)
    assert len(m2.unit_indices) == 6
    # simple: only ideals are 0 and the whole ring
    assert [sorted(i.members) for i in enumerate_ideals(m2)] == [[0], sorted(range(16))]


def test_matrix_ring_needs_field_base():
    with pytest.raises(BaseNotField):
        make_matrix_ring(make_zmod(4), 2)


def test_jacobson_radical_values():
    assert jacobson_radical(make_zmod(4)).members == frozenset({0, 2})
    assert jacobson_radical(make_zmod(6)).members == frozenset({0})
    assert jacobson_radical(make_zmod(8)).members == frozenset({0, 2, 4, 6})
    assert jacobson_radical(make_matrix_ring(make_zmod(2), 2)).members == frozenset({0})


@settings(deadline=None)
@given(zmods)
def test_radical_of_zmod_is_product_of_primes(ring):
    n = ring.size
    rad = 1
    m = n
    for p in range(2, n + 1):
        if m % p == 0:
            rad *= p
            while m % p == 0:
                m //= p
    assert jacobson_radical(ring).members == frozenset(range(0, n, rad))


def test_ideal_count_of_z6_is_divisor_count():
    assert len(enumerate_ideals(make_zmod(6))) == 4
    assert len(enumerate_ideals(make_zmod(12))) == 6
    assert len(proper_ideals(make_zmod(12))) == 5


@settings(deadline=None)
@given(zmods)
def test_ideals_of_zmod_are_divisor_generated(ring):
    n = ring.size
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    expected = {frozenset(range(0, n, d)) for d in divisors}
    assert {i.members for i in enumerate_ideals(ring)} == expected


def test_ideal_generated_closure():
    z12 = make_zmod(12)
    assert ideal_generated_by(z12, (8,)).members == frozenset({0, 4, 8})
    assert ideal_generated_by(z12, (4, 6)).members == frozenset({0, 2, 4, 6, 8, 10})
    m2 = make_matrix_ring(make_zmod(2), 2)
    # any nonzero matrix generates everything in a simple ring
    assert len(ideal_generated_by(m2, (1,)).members) == 16


def test_ideal_wrapper_validates():
    z6 = make_zmod(6)
    with pytest.raises(NotAnIdeal):
        Ideal(z6, frozenset({0, 1}))
    with pytest.raises(NotASubmonoid):
        MultiplicativeSet(z6, frozenset({1, 2}))  # 2*2=4 missing
    MultiplicativeSet(z6, frozenset({1, 2, 4}))


def test_saturation_and_direct_finiteness():
    z6 = make_zmod(6)
    assert is_saturated(z6, units(z6))
    # odd residues mod 6: products of elements outside never land inside
    assert is_saturated(z6, frozenset({1, 3, 5}))
    # {1,4}: 4 = 2*2 with 2 outside, so not saturated
    assert not is_saturated(z6, frozenset({1, 4}))
    assert is_directly_finite(z6)
    assert is_directly_finite(make_matrix_ring(make_zmod(2), 2))


def test_completely_prime_and_prime():
    z6 = make_zmod(6)
    two = Ideal(z6, frozenset({0, 2, 4}))
    three = Ideal(z6, frozenset({0, 3}))
    zero = Ideal(z6, frozenset({0}))
    assert is_completely_prime(z6, two) and is_prime_ideal(z6, two)
    assert is_completely_prime(z6, three)
    assert not is_completely_prime(z6, zero)  # 2*3 = 0
    z4 = make_zmod(4)
    assert not is_completely_prime(z4, Ideal(z4, frozenset({0})))
    assert is_completely_prime(z4, Ideal(z4, frozenset({0, 2})))


def test_subring_closure_and_materialization():
    f4 = make_finite_field(2, 2)
    assert subring_closure(f4, ()) == frozenset({0, 1})
    assert subring_closure(f4, (2,)) == frozenset(range(4))
    sub, carrier = subring(f4, {0, 1})
    assert sub.size == 2 and carrier == (0, 1)
    assert sub == make_zmod(2)


def test_regenerate_round_trips():
    samples = [
        make_zmod(9),
        make_finite_field(3, 2),
        make_product(make_zmod(2), make_zmod(4)),
        make_matrix_ring(make_zmod(2), 2),
        make_quotient(make_zmod(12), ideal_generated_by(make_zmod(12), (4,)))[0],
    ]
    for r in samples:
        assert regenerate(r) == r


def test_ring_from_tables_derives_identities():
    z3 = make_zmod(3)
    r = ring_from_tables(z3.add_table, z3.mul_table)
    assert r == z3
    bad_mul = tuple(tuple(0 for _ in range(3)) for _ in range(3))
    with pytest.raises(ValueError):
        ring_from_tables(z3.add_table, bad_mul)


def test_equality_ignores_provenance():
    a = make_zmod(4)
    b = make_quotient(make_zmod(8), ideal_generated_by(make_zmod(8), (4,)))[0]
    assert a == b and hash(a) == hash(b)
    assert a.provenance != b.provenance


def test_element_sugar_and_mismatch():
    z6 = make_zmod(6)
    z4 = make_zmod(4)
    x = z6.element(2)
    assert (x + z6.element(5)).index == 1
    assert (x * z6.element(4)).index == 2
    assert (-x).index == 4
    assert (x - z6.element(3)).index == 5
    with pytest.raises(RingMismatch):
        x + z4.element(1)


def test_morphism_validation():
    z6, z2 = make_zmod(6), make_zmod(2)
    f = RingMorphism(z6, z2, (0, 1, 0, 1, 0, 1))
    assert f.is_surjective and not f.is_injective
    with pytest.raises(ValueError):
        RingMorphism(z6, z2, (0, 1, 1, 1, 0, 1))
    with pytest.raises(ValueError):
        RingMorphism(z6, z2, (1, 1, 0, 1, 0, 1))


def test_compose_and_identity():
    z12, z6, z2 = make_zmod(12), make_zmod(6), make_zmod(2)
    f = RingMorphism(z12, z6, tuple(i % 6 for i in range(12)))
    g = RingMorphism(z6, z2, tuple(i % 2 for i in range(6)))
    gf = compose(g, f)
    assert gf.images == tuple(i % 2 for i in range(12))
    assert compose(identity_morphism(z6), f).images == f.images
    from homposet.errors import NotComposable

    with pytest.raises(NotComposable):
        compose(f, g)


@settings(deadline=None)
@given(st.integers(2, 12), st.integers(2, 12))
def test_random_product_axioms(n, m):
    p = make_product(make_zmod(n), make_zmod(m), Caps(table_size=144))
    assert check_table_axioms(p) == []
    assert len(units(p).members) == len(units(make_zmod(n)).members) * len(
        units(make_zmod(m)).members
    )
