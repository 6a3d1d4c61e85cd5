"""The poset of realized pairs over a finite ring, and its structure maps.

Over a finite ring every element that is regular mod an ideal is already a
unit mod that ideal, so each realized pair is (a, preimage of units of R/a)
and the poset is in order-preserving bijection with the proper two-sided
ideals.  hom_poset materializes it that way: one quotient per ideal.

join_ext adjoins TOP to make the bounded lattice; joins are computed order
theoretically as least common upper bounds, with TOP when no pair bounds
both arguments.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .config import Caps, DEFAULT_CAPS
from .errors import NotCommutative, RingMismatch
from .morphisms import direct_limit_chain, enumerate_morphisms
from .pairs import TOP, HomPair, leq, pair_of_morphism
from .rings import (
    FiniteRing,
    Ideal,
    RingMorphism,
    is_completely_prime,
    is_prime,
    jacobson_radical,
    make_finite_field,
    make_quotient,
    product_factors,
    proper_ideals,
    ring_label,
)


@dataclass(frozen=True, eq=False)
class HomPoset:
    """All realized pairs over one ring, in a fixed canonical order."""

    ring: FiniteRing
    elements: tuple
    top_adjoined: bool = False

    def __eq__(self, other):
        if not isinstance(other, HomPoset):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.elements == other.elements
            and self.top_adjoined == other.top_adjoined
        )

    def __hash__(self):
        return hash((hash(self.ring), self.elements, self.top_adjoined))

    def __len__(self):
        return len(self.elements) + (1 if self.top_adjoined else 0)

    def __iter__(self):
        yield from self.elements
        if self.top_adjoined:
            yield TOP

    @cached_property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def leq_matrix(self) -> tuple:
        els = self.elements
        return tuple(
            tuple(leq(p, q) for q in els) for p in els
        )

    def leq_by_index(self, i: int, j: int) -> bool:
        return self.leq_matrix[i][j]

    @property
    def least(self) -> HomPair:
        return self.elements[0]

    def __repr__(self):
        bar = " bar" if self.top_adjoined else ""
        return f"HomPoset({ring_label(self.ring)},{bar} {len(self.elements)} pairs)"


@lru_cache(maxsize=None)
def _hom_poset_cached(ring: FiniteRing, adjoin_top: bool) -> HomPoset:
    pairs = []
    for ideal in proper_ideals(ring):
        quotient, proj = make_quotient(ring, ideal)
        pairs.append(HomPair(ring, ideal.members, proj.unit_preimage_members))
    pairs.sort(key=lambda p: p.sort_key())
    poset = HomPoset(ring, tuple(pairs), adjoin_top)
    assert poset.elements[0].ideal == frozenset({ring.zero}), "least pair must be (0, U)"
    return poset


def hom_poset(ring: FiniteRing, adjoin_top: bool = False) -> HomPoset:
    """Materialize every realized pair over the ring.

    With adjoin_top=True the result is the bounded-lattice completion whose
    greatest element is the TOP sentinel.
    """
    return _hom_poset_cached(ring, adjoin_top)


def clear_poset_cache():
    _hom_poset_cached.cache_clear()


def join_ext(p, q, poset: HomPoset):
    """Least upper bound of two pairs inside the completed poset.

    Returns TOP when no realized pair dominates both arguments; otherwise
    the unique least common upper bound, whose existence is asserted rather
    than assumed.
    """
    if p is TOP or q is TOP:
        return TOP
    uppers = [x for x in poset.elements if leq(p, x) and leq(q, x)]
    if not uppers:
        return TOP
    least = [x for x in uppers if all(leq(x, y) for y in uppers)]
    assert len(least) == 1, f"common upper bounds of {p} and {q} have no minimum"
    return least[0]


def max_elements(poset: HomPoset) -> tuple:
    """Maximal pairs of the plain poset (the completion has TOP on top)."""
    if poset.top_adjoined:
        raise ValueError("maximal elements are asked of the poset without TOP")
    els = poset.elements
    out = []
    for i, p in enumerate(els):
        if not any(j != i and poset.leq_matrix[i][j] for j in range(len(els))):
            out.append(p)
    return tuple(out)


def has_greatest(poset: HomPoset):
    """The greatest pair if one exists, else None."""
    mx = max_elements(hom_poset(poset.ring)) if poset.top_adjoined else max_elements(poset)
    if len(mx) == 1:
        return mx[0]
    return None


def least_of_fiber(ring: FiniteRing, ideal) -> HomPair:
    """The least pair whose first component is the given proper ideal.

    Over a finite ring the fiber over an ideal is this single pair.
    """
    imembers = frozenset(getattr(ideal, "members", ideal))
    quotient, proj = make_quotient(ring, Ideal(ring, imembers))
    return HomPair(ring, imembers, proj.unit_preimage_members)


# ---------------------------------------------------------------------------
# functoriality: a morphism R -> S pulls pairs over S back to pairs over R


@dataclass(frozen=True)
class PosetMap:
    """Order-preserving map Hom(S) -> Hom(R) induced by f: R -> S."""

    morphism: RingMorphism
    domain: HomPoset
    codomain: HomPoset
    images: tuple  # codomain indices aligned with domain.elements

    def apply(self, x):
        if x is TOP:
            return TOP
        return self.codomain.elements[self.images[self.domain.index[x]]]


def hom_functor(f: RingMorphism) -> PosetMap:
    """Pull back each pair over the target along f.

    The preimage pair is realized over the source by the composite of f
    with any morphism realizing the target pair, so the map lands in
    hom_poset(source) with no search.
    """
    dom = hom_poset(f.target)
    cod = hom_poset(f.source)
    images = []
    for p in dom.elements:
        pre_ideal = frozenset(i for i, y in enumerate(f.images) if y in p.ideal)
        pre_mset = frozenset(i for i, y in enumerate(f.images) if y in p.mset)
        pulled = HomPair(f.source, pre_ideal, pre_mset)
        images.append(cod.index[pulled])
    return PosetMap(f, dom, cod, tuple(images))


def is_local_morphism(f: RingMorphism) -> bool:
    """Whether f reflects units: f(x) invertible only when x is.

    Equivalent over finite rings to ker f lying inside the radical; both
    criteria are computed and must agree.
    """
    direct = f.unit_preimage_members == f.source.unit_indices
    radical = f.kernel_members <= jacobson_radical(f.source).members
    assert direct == radical, "unit-reflection and radical criteria disagree"
    return direct


# ---------------------------------------------------------------------------
# products: the completed poset splits along the factors


@dataclass(frozen=True)
class PosetIso:
    """Order isomorphism between the completed poset of a product ring and
    the product of the completed posets of its factors."""

    product_ring: FiniteRing
    factor1: FiniteRing
    factor2: FiniteRing
    forward: dict  # element of bar(R1 x R2) -> (x1, x2) with TOP sentinels
    backward: dict


def product_decompose_poset(prod: FiniteRing) -> PosetIso:
    """Split each pair over R1 x R2 into a pair-or-TOP per factor.

    Each ideal of the product is a product ideal I1 x I2; an improper
    factor corresponds to TOP on that side.  The map is verified to be an
    order isomorphism before it is returned.
    """
    r1, r2 = product_factors(prod)
    n2 = r2.size
    bar = hom_poset(prod, adjoin_top=True)
    p1bar = hom_poset(r1, adjoin_top=True)
    p2bar = hom_poset(r2, adjoin_top=True)
    forward = {TOP: (TOP, TOP)}
    for p in bar.elements:
        i1 = frozenset(i // n2 for i in p.ideal)
        i2 = frozenset(i % n2 for i in p.ideal)
        assert len(p.ideal) == len(i1) * len(i2), "product ideal must split"
        x1 = TOP if r1.one in i1 else least_of_fiber(r1, i1)
        x2 = TOP if r2.one in i2 else least_of_fiber(r2, i2)
        forward[p] = (x1, x2)
    backward = {v: k for k, v in forward.items()}
    assert len(backward) == len(forward), "factor split must be injective"
    assert len(forward) == len(p1bar) * len(p2bar), "factor split must be onto"

    def pair_leq(a, b):
        return leq(a[0], b[0]) and leq(a[1], b[1])

    for x in bar:
        for y in bar:
            assert leq(x, y) == pair_leq(forward[x], forward[y]), (
                f"order not preserved at {x}, {y}"
            )
    return PosetIso(prod, r1, r2, forward, backward)


# ---------------------------------------------------------------------------
# maximal elements, complete primes, and division pairs


@dataclass(frozen=True)
class MaximalityReport:
    ring: FiniteRing
    division_pairs: tuple
    completely_prime_pairs: tuple
    maximal_pairs: tuple
    field_orders_scanned: tuple

    @property
    def chain_holds(self) -> bool:
        dv, cp, mx = (set(self.division_pairs),
                      set(self.completely_prime_pairs),
                      set(self.maximal_pairs))
        return dv <= cp <= mx


def maximality_chain(ring: FiniteRing, field_bound: int | None = None,
                     caps: Caps = DEFAULT_CAPS) -> MaximalityReport:
    """Division pairs, completely prime pairs, and maximal pairs, in one scan.

    Division pairs come from morphisms into finite fields (finite division
    rings are fields); a kernel supports one exactly when the quotient is a
    field, so scanning field orders up to the ring size is complete.  The
    chain division <= completely prime <= maximal is asserted.
    """
    limit = min(field_bound or ring.size, caps.morphism_search, caps.table_size)
    division = set()
    orders = []
    for q in range(2, limit + 1):
        p, k = _prime_power(q)
        if p is None:
            continue
        orders.append(q)
        target = make_finite_field(p, k, caps)
        for f in enumerate_morphisms(ring, target, caps):
            division.add(pair_of_morphism(f))
    cpr = set()
    for ideal in proper_ideals(ring):
        if is_completely_prime(ring, ideal):
            cpr.add(least_of_fiber(ring, ideal))
            # complement is exactly the unit preimage for a complete prime
            assert least_of_fiber(ring, ideal).mset == (
                frozenset(range(ring.size)) - ideal.members
            )
    mx = max_elements(hom_poset(ring))
    report = MaximalityReport(
        ring,
        tuple(sorted(division, key=HomPair.sort_key)),
        tuple(sorted(cpr, key=HomPair.sort_key)),
        tuple(sorted(mx, key=HomPair.sort_key)),
        tuple(orders),
    )
    assert report.chain_holds, f"containment chain fails over {ring_label(ring)}"
    return report


def _prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None, None
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else (None, None)
    return None, None


def spec_correspondence(ring: FiniteRing) -> tuple:
    """Prime ideals paired with the maximal elements they induce.

    Commutative rings only.  Each prime P maps to (P, complement of P) and
    the collection is exactly the set of maximal pairs; both directions are
    asserted.
    """
    if not ring.is_commutative:
        raise NotCommutative(ring_label(ring))
    table = []
    carrier = frozenset(range(ring.size))
    for ideal in proper_ideals(ring):
        if is_completely_prime(ring, ideal):
            pair = least_of_fiber(ring, ideal)
            assert pair.mset == carrier - ideal.members
            table.append((ideal, pair))
    mx = set(max_elements(hom_poset(ring)))
    assert {p for _, p in table} == mx, "primes and maximal pairs must agree"
    table.sort(key=lambda t: t[1].sort_key())
    return tuple(table)


# ---------------------------------------------------------------------------
# finite chains: the poset of the last stage is the limit of the stages


@dataclass(frozen=True)
class LimitExchangeReport:
    rings: tuple
    compatible_count: int
    is_bijection: bool
    is_order_iso: bool

    @property
    def ok(self) -> bool:
        return self.is_bijection and self.is_order_iso


def limit_exchange_check(rings, maps, caps: Caps = DEFAULT_CAPS) -> LimitExchangeReport:
    """Check Hom(last stage) against the inverse limit of the stage posets.

    A chain R0 -> ... -> Rn induces restriction maps between the pair
    posets; the tuples compatible with every restriction form the limit.
    Sending a pair over Rn to its pullbacks along the stage composites must
    be a bijection onto the compatible tuples and an order isomorphism for
    the componentwise order.
    """
    import itertools

    last, composites = direct_limit_chain(rings, maps)
    stage_posets = [hom_poset(r) for r in rings]
    stage_maps = [hom_functor(f) for f in maps]  # Hom(R_{i+1}) -> Hom(R_i)

    compatible = []
    for combo in itertools.product(*(p.elements for p in stage_posets)):
        if all(
            stage_maps[i].apply(combo[i + 1]) == combo[i]
            for i in range(len(maps))
        ):
            compatible.append(combo)

    functors = [hom_functor(f) for f in composites]
    image = []
    for x in hom_poset(last).elements:
        image.append(tuple(functors[i].apply(x) for i in range(len(rings))))

    bij = set(image) == set(compatible) and len(set(image)) == len(image)

    def tup_leq(a, b):
        return all(leq(x, y) for x, y in zip(a, b))

    els = hom_poset(last).elements
    order_iso = all(
        leq(els[i], els[j]) == tup_leq(image[i], image[j])
        for i in range(len(els))
        for j in range(len(els))
    )
    return LimitExchangeReport(tuple(rings), len(compatible), bij, order_iso)


# ---------------------------------------------------------------------------
# presentation


def hasse(poset: HomPoset) -> tuple:
    """Cover relations as index pairs (i, j) with element i covered by j.

    TOP, when adjoined, takes index len(elements).
    """
    els = poset.elements
    n = len(els)
    lt = [[i != j and poset.leq_matrix[i][j] for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n)):
                edges.append((i, j))
    if poset.top_adjoined:
        maximal = [i for i in range(n) if not any(lt[i][j] for j in range(n))]
        edges.extend((i, n) for i in maximal)
    return tuple(sorted(edges))
