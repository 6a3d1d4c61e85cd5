"""Universal pair-inverting morphisms in the decidable cases.

For a realized pair over a finite ring the universal morphism killing the
ideal and inverting the multiplicative set is the quotient projection
itself: classes of the set are regular in the quotient, and regular
elements of a finite ring are already invertible.  Over Z the zero-kernel
pairs localize to explicit subrings of Q and the modular pairs to Z/n.

factor_through and canonical_factorization provide the universal-property
side: existence and uniqueness of the induced morphism are checked against
exhaustive search rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import Caps, DEFAULT_CAPS
from .errors import CapExceeded, InvalidPair, NoFactorization, NotComposable
from .morphisms import enumerate_morphisms, is_ring_epimorphism
from .pairs import HomPair, pair_of_morphism, validate_pair
from .rings import (
    FiniteRing,
    Ideal,
    RingMorphism,
    identity_morphism,
    compose,
    make_quotient,
    make_zmod,
    ring_label,
    subring,
)
from .zhom import PrimeSet, ZHomElement, prime_divisors


@dataclass(frozen=True)
class FiniteLocalization:
    """Universal pair-inverting morphism out of a finite ring."""

    ring: FiniteRing
    canonical: RingMorphism


def universal_inverting_finite(ring: FiniteRing, pair: HomPair,
                               caps: Caps = DEFAULT_CAPS) -> FiniteLocalization:
    """The universal morphism for a realized pair over a finite ring.

    Raises InvalidPair when the pair fails the realizability criterion.
    The returned morphism is the quotient projection; its own pair is
    asserted to be exactly the input.
    """
    report = validate_pair(ring, pair.ideal, pair.mset)
    if not report.ok:
        keys = ", ".join(c.key for c in report.failed())
        raise InvalidPair(f"pair fails: {keys}")
    quotient, proj = make_quotient(ring, Ideal(ring, pair.ideal))
    assert proj.kernel_members == pair.ideal
    assert proj.unit_preimage_members == pair.mset, (
        "projection must invert exactly the multiplicative component"
    )
    return FiniteLocalization(quotient, proj)


@dataclass(frozen=True)
class RationalSubring:
    """The subring of Q whose reduced denominators avoid a prime set."""

    avoided: PrimeSet

    def contains(self, q: Fraction) -> bool:
        q = Fraction(q)
        return all(p not in self.avoided for p in prime_divisors(q.denominator))

    def is_unit(self, q: Fraction) -> bool:
        q = Fraction(q)
        if q == 0:
            return False
        return self.contains(q) and all(
            p not in self.avoided for p in prime_divisors(q.numerator)
        )

    def label(self) -> str:
        ps = self.avoided
        if ps.cofinite:
            if not ps.members:
                return "Z"
            inverted = ",".join(f"1/{p}" for p in sorted(ps.members))
            return f"Z[{inverted}]"
        if not ps.members:
            return "Q"
        kept = ",".join(map(str, sorted(ps.members)))
        return f"Z[1/p for p outside {{{kept}}}]"

    def __repr__(self):
        return f"RationalSubring({self.label()})"


def localize_integer_pair(x: ZHomElement, caps: Caps = DEFAULT_CAPS):
    """Universal pair-inverting target over Z.

    Zero-kernel elements localize inside Q: the subring of fractions whose
    denominators avoid the prime set.  Modular elements localize to Z/n,
    where the multiplicative component is already inverted.
    """
    if x.is_modular:
        if x.modulus > caps.table_size:
            raise CapExceeded(f"{x.modulus} > table cap {caps.table_size}")
        return make_zmod(x.modulus, caps)
    return RationalSubring(x.primes)


# ---------------------------------------------------------------------------
# factoring through a localization


def factor_through(psi: RingMorphism, f: RingMorphism,
                   caps: Caps = DEFAULT_CAPS) -> RingMorphism:
    """The morphism g with g o psi = f, when psi's pair lies below f's.

    Raises NoFactorization when the pair condition fails or no such g
    exists.  When psi is surjective the factoring morphism is forced on
    images and its uniqueness is additionally confirmed by exhaustive
    search, so the return value is the unique factorization.
    """
    if psi.source != f.source:
        raise NotComposable("psi and f must share their source")
    if not (psi.kernel_members <= f.kernel_members
            and psi.unit_preimage_members <= f.unit_preimage_members):
        raise NoFactorization("pair of psi does not lie below pair of f")
    candidates = tuple(
        g for g in enumerate_morphisms(psi.target, f.target, caps)
        if compose(g, psi) == f
    )
    if not candidates:
        raise NoFactorization(
            f"no morphism {ring_label(psi.target)} -> {ring_label(f.target)} factors f"
        )
    if psi.is_surjective:
        assert len(candidates) == 1, "factorization through a surjection must be unique"
    return candidates[0]


@dataclass(frozen=True)
class Factorization:
    """Stages of a morphism between finite rings.

      start     quotient projection onto source/kernel
      invert    universal inverting step; the identity here, because the
                multiplicative component is already invertible mod the kernel
      collapse  onto the image subring; a surjection, hence an epimorphism
      embed     inclusion of the image into the target

    The composite of the stages equals the original morphism.
    """

    morphism: RingMorphism
    quotient: FiniteRing
    start: RingMorphism
    invert: RingMorphism
    image_ring: FiniteRing
    image_carrier: tuple
    collapse: RingMorphism
    embed: RingMorphism

    def composite(self) -> RingMorphism:
        return compose(self.embed, compose(self.collapse, compose(self.invert, self.start)))


def canonical_factorization(f: RingMorphism) -> Factorization:
    """Split f through its pair's localization and its image subring."""
    quotient, start = make_quotient(f.source, Ideal(f.source, f.kernel_members))
    invert = identity_morphism(quotient)
    image_ring, carrier = subring(f.target, f.image_members)
    local = {x: i for i, x in enumerate(carrier)}
    # images of quotient elements: push any representative through f
    collapse_images = [None] * quotient.size
    for r in range(f.source.size):
        q = start.images[r]
        y = local[f.images[r]]
        assert collapse_images[q] in (None, y), "collapse must be well defined"
        collapse_images[q] = y
    collapse = RingMorphism(quotient, image_ring, tuple(collapse_images))
    embed = RingMorphism(image_ring, f.target, carrier)
    fact = Factorization(f, quotient, start, invert, image_ring, carrier,
                         collapse, embed)
    assert fact.composite() == f, "stages must compose to the original morphism"
    assert collapse.is_surjective and is_ring_epimorphism(collapse)
    assert embed.is_injective
    return fact


@dataclass(frozen=True)
class Corestriction:
    """A morphism retargeted onto its image subring."""

    morphism: RingMorphism
    image_ring: FiniteRing
    image_carrier: tuple
    corestriction: RingMorphism
    is_epi: bool


def epimorphic_corestriction(f: RingMorphism) -> Corestriction:
    """Retarget f onto its image; the result is a surjection, hence epi.

    The pair is unchanged: over finite rings an element of the image that
    is invertible in the big ring is already invertible in the subring, so
    unit preimages agree, and kernels agree trivially.
    """
    image_ring, carrier = subring(f.target, f.image_members)
    local = {x: i for i, x in enumerate(carrier)}
    g = RingMorphism(f.source, image_ring, tuple(local[y] for y in f.images))
    assert g.kernel_members == f.kernel_members
    assert g.unit_preimage_members == f.unit_preimage_members, (
        "corestriction must preserve the unit preimage"
    )
    epi = is_ring_epimorphism(g)
    assert epi, "a surjective morphism must be an epimorphism"
    return Corestriction(f, image_ring, carrier, g, epi)


def localization_pair(loc: FiniteLocalization) -> HomPair:
    """The pair realized by the canonical morphism of a finite localization."""
    return pair_of_morphism(loc.canonical)
