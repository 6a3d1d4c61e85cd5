"""Brute-force verification battery.

Everything the constructive modules claim is re-checked here by exhaustive
search over a catalog of small rings.  The battery never trusts the
construction under test: poset membership is re-derived by enumerating all
morphisms into catalog targets, meets are re-realized through product
morphisms, factorizations are re-found by exhaustive search, and so on.
A claim that fails carries a concrete witness.

The catalog is deterministic for a given bound, every claim iterates in
canonical order, and reports render byte-identically across runs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .config import Caps, DEFAULT_CAPS
from .errors import CapExceeded, NoFactorization
from .localization import (
    canonical_factorization,
    epimorphic_corestriction,
    factor_through,
    universal_inverting_finite,
)
from .morphisms import (
    decompose_product_morphism,
    denominator_analysis,
    enumerate_morphisms,
    rebuild_product_morphism,
)
from .pairs import (
    TOP,
    HomPair,
    leq,
    meet,
    pair_of_morphism,
    radical_translation_holds,
    raw_pair,
    validate_pair,
)
from .poset import (
    has_greatest,
    hasse,
    hom_functor,
    hom_poset,
    is_local_morphism,
    join_ext,
    least_of_fiber,
    limit_exchange_check,
    max_elements,
    maximality_chain,
    product_decompose_poset,
    spec_correspondence,
)
from .rings import (
    FiniteRing,
    Ideal,
    RingMorphism,
    check_table_axioms,
    compose,
    ideal_generated_by,
    is_completely_prime,
    is_directly_finite,
    is_saturated,
    make_finite_field,
    make_matrix_ring,
    make_product,
    make_quotient,
    make_zmod,
    proper_ideals,
    regular_elements,
    ring_label,
    units,
)


@dataclass(frozen=True)
class Catalog:
    bound: int
    rings: tuple


def build_catalog(bound: int = 16, caps: Caps = DEFAULT_CAPS) -> Catalog:
    """Deterministic list of pairwise table-distinct rings of size <= bound.

    Stages: Z/n, finite fields, binary products of those, one matrix ring,
    then quotients closed to a fixed point.  Later table-identical rings
    are dropped, keeping the first construction.
    """
    seen = set()
    rings = []

    def put(r):
        if r not in seen:
            seen.add(r)
            rings.append(r)

    for n in range(2, bound + 1):
        put(make_zmod(n, caps))
    for p in (2, 3, 5, 7, 11, 13):
        k = 2
        while p**k <= bound:
            put(make_finite_field(p, k, caps))
            k += 1
    base = list(rings)
    for i, r1 in enumerate(base):
        for r2 in base[i:]:
            if r1.size * r2.size <= bound:
                put(make_product(r1, r2, caps))
    if 16 <= bound:
        put(make_matrix_ring(make_zmod(2, caps), 2, caps))
    # close under quotients so every search can land in the catalog
    frontier = list(rings)
    while frontier:
        fresh = []
        for r in frontier:
            for ideal in proper_ideals(r):
                if len(ideal) == 1:
                    continue
                q, _ = make_quotient(r, ideal)
                if q not in seen:
                    seen.add(q)
                    rings.append(q)
                    fresh.append(q)
        frontier = fresh
    return Catalog(bound, tuple(rings))


def realized_pairs(ring: FiniteRing, catalog: Catalog,
                   caps: Caps = DEFAULT_CAPS) -> tuple:
    """Every pair realized by some morphism into a catalog ring.

    Pure search: enumerates morphisms and collects (kernel, unit preimage)
    member sets, never consulting the constructive poset.
    """
    found = set()
    for target in catalog.rings:
        for f in enumerate_morphisms(ring, target, caps):
            found.add(raw_pair(f))
    return tuple(sorted(found, key=lambda t: (len(t[0]), sorted(t[0]), sorted(t[1]))))


def verify_hom_construction(ring: FiniteRing, catalog: Catalog,
                            caps: Caps = DEFAULT_CAPS):
    """Search-realized pairs vs constructed poset; returns (ok, missing, extra)."""
    searched = set(realized_pairs(ring, catalog, caps))
    constructed = {(p.ideal, p.mset) for p in hom_poset(ring).elements}
    missing = tuple(sorted(searched - constructed, key=lambda t: sorted(t[0])))
    extra = tuple(sorted(constructed - searched, key=lambda t: sorted(t[0])))
    return (not missing and not extra), missing, extra


# ---------------------------------------------------------------------------
# battery context and claim registry


class _Ctx:
    def __init__(self, catalog: Catalog, caps: Caps, inject_pairs: tuple):
        self.catalog = catalog
        self.caps = caps
        self.inject_pairs = inject_pairs

    @cached_property
    def rings(self):
        return self.catalog.rings

    @cached_property
    def small_rings(self):
        return tuple(r for r in self.rings if r.size <= 9)

    @cached_property
    def commutative_rings(self):
        return tuple(r for r in self.rings if r.is_commutative)

    @cached_property
    def product_rings(self):
        return tuple(r for r in self.rings if r.provenance[0] == "product")

    def morphisms(self, src, tgt):
        return enumerate_morphisms(src, tgt, self.caps)

    def all_morphisms(self):
        for src in self.rings:
            for tgt in self.rings:
                yield from self.morphisms(src, tgt)


def _claim_ring_axioms(ctx):
    checked = 0
    for r in ctx.rings:
        checked += 1
        bad = check_table_axioms(r)
        if bad:
            return checked, f"{ring_label(r)}: {bad[0]}"
    return checked, None


def _claim_regular_units(ctx):
    checked = 0
    for r in ctx.rings:
        checked += 1
        if regular_elements(r) != r.unit_indices:
            return checked, f"{ring_label(r)}: regular set differs from unit group"
    return checked, None


def _claim_directly_finite(ctx):
    checked = 0
    for r in ctx.rings:
        checked += 1
        if not is_directly_finite(r):
            return checked, f"{ring_label(r)}: one-sided inverse is not two-sided"
    return checked, None


def _claim_units_saturated(ctx):
    checked = 0
    for r in ctx.rings:
        checked += 1
        if not is_saturated(r, units(r)):
            return checked, f"{ring_label(r)}: unit group is not saturated"
    return checked, None


def _claim_pair_invariants(ctx):
    checked = 0
    for f in ctx.all_morphisms():
        checked += 1
        report = validate_pair(f.source, f.kernel_members, f.unit_preimage_members)
        if not report.ok:
            key = report.failed()[0].key
            return checked, f"pair of {f!r} fails {key}"
        if not radical_translation_holds(f.source, pair_of_morphism(f)):
            return checked, f"pair of {f!r} not stable under radical translation"
    for ring, imembers, mmembers in ctx.inject_pairs:
        checked += 1
        report = validate_pair(ring, imembers, mmembers)
        if not report.ok:
            key = report.failed()[0].key
            return checked, (
                f"claimed pair ({sorted(imembers)}, {sorted(mmembers)}) over "
                f"{ring_label(ring)} fails {key}"
            )
        realized = {(p.ideal, p.mset) for p in hom_poset(ring).elements}
        if (frozenset(imembers), frozenset(mmembers)) not in realized:
            return checked, (
                f"claimed pair ({sorted(imembers)}, {sorted(mmembers)}) over "
                f"{ring_label(ring)} is not realized"
            )
    return checked, None


def _claim_poset_search(ctx):
    checked = 0
    for r in ctx.rings:
        checked += 1
        ok, missing, extra = verify_hom_construction(r, ctx.catalog, ctx.caps)
        if not ok:
            what = "missing" if missing else "unrealized"
            sets = (missing or extra)[0]
            return checked, (
                f"{ring_label(r)}: {what} pair with ideal {sorted(sets[0])}"
            )
    return checked, None


def _claim_compose_order(ctx):
    checked = 0
    for r in ctx.small_rings:
        for s in ctx.small_rings:
            fs = ctx.morphisms(r, s)
            if not fs:
                continue
            for t in ctx.small_rings:
                for g in ctx.morphisms(s, t):
                    for f in fs:
                        checked += 1
                        if not leq(pair_of_morphism(f), pair_of_morphism(compose(g, f))):
                            return checked, (
                                f"pair of composite dropped below pair of {f!r}"
                            )
    return checked, None


def _claim_meet_product(ctx):
    checked = 0
    for r in ctx.rings:
        poset = hom_poset(r)
        for p in poset.elements:
            for q in poset.elements:
                m = meet(p, q)
                if m not in poset.index:
                    return checked, f"meet of pairs over {ring_label(r)} not realized"
                qp, jp = make_quotient(r, Ideal(r, p.ideal))
                qq, jq = make_quotient(r, Ideal(r, q.ideal))
                if qp.size * qq.size > ctx.caps.table_size:
                    continue
                checked += 1
                prod = make_product(qp, qq, ctx.caps)
                images = tuple(
                    jp.images[x] * qq.size + jq.images[x] for x in range(r.size)
                )
                h = RingMorphism(r, prod, images)
                if raw_pair(h) != (m.ideal, m.mset):
                    return checked, (
                        f"product morphism over {ring_label(r)} realizes a different meet"
                    )
    return checked, None


def _claim_functor_laws(ctx):
    from .rings import identity_morphism

    checked = 0
    for r in ctx.small_rings:
        fm = hom_functor(identity_morphism(r))
        for p in fm.domain.elements:
            checked += 1
            if fm.apply(p) != p:
                return checked, f"identity functor moves a pair over {ring_label(r)}"
    for r in ctx.small_rings:
        for s in ctx.small_rings:
            for f in ctx.morphisms(r, s):
                fmap = hom_functor(f)
                dom = fmap.domain
                for a in dom.elements:
                    for b in dom.elements:
                        if leq(a, b):
                            checked += 1
                            if not leq(fmap.apply(a), fmap.apply(b)):
                                return checked, f"pullback along {f!r} breaks order"
            for t in ctx.small_rings:
                for f in ctx.morphisms(r, s):
                    for g in ctx.morphisms(s, t):
                        gf = compose(g, f)
                        m1 = hom_functor(gf)
                        m2f, m2g = hom_functor(f), hom_functor(g)
                        for p in m1.domain.elements:
                            checked += 1
                            if m1.apply(p) != m2f.apply(m2g.apply(p)):
                                return checked, (
                                    "pullback along a composite differs from "
                                    f"composed pullbacks at {p!r}"
                                )
    return checked, None


def _claim_corner_split(ctx):
    checked = 0
    for prod in ctx.product_rings:
        for s in ctx.rings:
            for f in ctx.morphisms(prod, s):
                checked += 1
                dec = decompose_product_morphism(f)
                if rebuild_product_morphism(dec) != f:
                    return checked, f"corner rebuild differs from {f!r}"
                e = dec.idempotent
                if s.mul_table[e][e] != e:
                    return checked, f"split element of {f!r} is not idempotent"
    return checked, None


def _claim_product_poset(ctx):
    checked = 0
    for prod in ctx.product_rings:
        checked += 1
        try:
            product_decompose_poset(prod)
        except AssertionError as e:
            return checked, f"{ring_label(prod)}: {e}"
    return checked, None


def _claim_prime_pairs_maximal(ctx):
    checked = 0
    for r in ctx.rings:
        mx = set(max_elements(hom_poset(r)))
        for ideal in proper_ideals(r):
            if is_completely_prime(r, ideal):
                checked += 1
                pair = least_of_fiber(r, ideal)
                if pair not in mx:
                    return checked, (
                        f"complete prime {sorted(ideal.members)} of {ring_label(r)} "
                        "gives a non-maximal pair"
                    )
    return checked, None


def _claim_max_spec(ctx):
    checked = 0
    for r in ctx.rings:
        checked += 1
        try:
            maximality_chain(r, caps=ctx.caps)
            if r.is_commutative:
                spec_correspondence(r)
        except AssertionError as e:
            return checked, f"{ring_label(r)}: {e}"
    return checked, None


def _claim_greatest_unique_prime(ctx):
    checked = 0
    for r in ctx.commutative_rings:
        checked += 1
        primes = [i for i in proper_ideals(r) if is_completely_prime(r, i)]
        greatest = has_greatest(hom_poset(r))
        if (greatest is not None) != (len(primes) == 1):
            return checked, (
                f"{ring_label(r)}: greatest pair vs unique prime disagree "
                f"({len(primes)} primes)"
            )
    return checked, None


def _claim_max_nonempty(ctx):
    checked = 0
    for r in ctx.rings:
        checked += 1
        if not max_elements(hom_poset(r)):
            return checked, f"{ring_label(r)}: no maximal pair"
    return checked, None


def _claim_bar_lattice(ctx):
    checked = 0
    for r in ctx.rings:
        bar = hom_poset(r, adjoin_top=True)
        els = list(bar)
        for x in els:
            for y in els:
                checked += 1
                mxy = meet(x, y)
                jxy = join_ext(x, y, bar)
                if meet(y, x) != mxy or join_ext(y, x, bar) != jxy:
                    return checked, f"lattice operations not commutative over {ring_label(r)}"
                # absorption
                if meet(x, jxy) != x or join_ext(x, mxy, bar) != x:
                    return checked, f"absorption fails over {ring_label(r)}"
        if len(els) <= 12:
            for x in els:
                for y in els:
                    for z in els:
                        checked += 1
                        if meet(meet(x, y), z) != meet(x, meet(y, z)):
                            return checked, f"meet not associative over {ring_label(r)}"
                        if join_ext(join_ext(x, y, bar), z, bar) != join_ext(
                            x, join_ext(y, z, bar), bar
                        ):
                            return checked, f"join not associative over {ring_label(r)}"
    return checked, None


def _claim_join_quotient(ctx):
    checked = 0
    for r in ctx.rings:
        poset = hom_poset(r)
        bar = hom_poset(r, adjoin_top=True)
        for p in poset.elements:
            for q in poset.elements:
                checked += 1
                summed = ideal_generated_by(r, p.ideal | q.ideal)
                j = join_ext(p, q, bar)
                if summed.is_proper:
                    if j is TOP or j != least_of_fiber(r, summed):
                        return checked, (
                            f"join over {ring_label(r)} differs from the pair of "
                            "the summed ideal"
                        )
                elif j is not TOP:
                    return checked, (
                        f"join over {ring_label(r)} should be absent: summed ideal "
                        "is improper"
                    )
    return checked, None


def _claim_universal_contract(ctx):
    checked = 0
    for r in ctx.rings:
        for p in hom_poset(r).elements:
            checked += 1
            loc = universal_inverting_finite(r, p, ctx.caps)
            if pair_of_morphism(loc.canonical) != p:
                return checked, (
                    f"universal morphism for a pair over {ring_label(r)} has the "
                    "wrong pair"
                )
            if not loc.canonical.is_surjective:
                return checked, f"universal morphism over {ring_label(r)} not onto"
    return checked, None


def _claim_universal_factor(ctx):
    checked = 0
    for r in ctx.small_rings:
        poset = hom_poset(r)
        for s in ctx.small_rings:
            for f in ctx.morphisms(r, s):
                fp = pair_of_morphism(f)
                for p in poset.elements:
                    loc = universal_inverting_finite(r, p, ctx.caps)
                    if leq(p, fp):
                        checked += 1
                        try:
                            g = factor_through(loc.canonical, f, ctx.caps)
                        except NoFactorization:
                            return checked, (
                                f"no factorization of {f!r} through the universal "
                                f"morphism of a pair below it"
                            )
                        if compose(g, loc.canonical) != f:
                            return checked, f"factorization of {f!r} does not compose back"
                    else:
                        checked += 1
                        try:
                            factor_through(loc.canonical, f, ctx.caps)
                            return checked, (
                                f"factorization of {f!r} through an unrelated pair "
                                "should not exist"
                            )
                        except NoFactorization:
                            pass
    return checked, None


def _claim_corestriction_epi(ctx):
    checked = 0
    for r in ctx.small_rings:
        for s in ctx.small_rings:
            for f in ctx.morphisms(r, s):
                checked += 1
                try:
                    co = epimorphic_corestriction(f)
                except AssertionError as e:
                    return checked, f"{f!r}: {e}"
                if not co.is_epi:
                    return checked, f"corestriction of {f!r} is not epi"
    return checked, None


def _claim_factor_stages(ctx):
    checked = 0
    for r in ctx.small_rings:
        for s in ctx.small_rings:
            for f in ctx.morphisms(r, s):
                checked += 1
                try:
                    canonical_factorization(f)
                except AssertionError as e:
                    return checked, f"{f!r}: {e}"
    return checked, None


def _claim_fiber_least(ctx):
    checked = 0
    for r in ctx.rings:
        by_ideal = {}
        for ideal, mset in realized_pairs(r, ctx.catalog, ctx.caps):
            by_ideal.setdefault(ideal, set()).add(mset)
        for ideal in proper_ideals(r):
            checked += 1
            fiber = by_ideal.get(ideal.members, set())
            if len(fiber) != 1:
                return checked, (
                    f"fiber over {sorted(ideal.members)} in {ring_label(r)} has "
                    f"{len(fiber)} members"
                )
            expected = least_of_fiber(r, ideal)
            if fiber != {expected.mset}:
                return checked, (
                    f"fiber over {sorted(ideal.members)} in {ring_label(r)} is not "
                    "the projection pair"
                )
    return checked, None


def _claim_local_criterion(ctx):
    checked = 0
    for f in ctx.all_morphisms():
        checked += 1
        try:
            is_local_morphism(f)
        except AssertionError as e:
            return checked, f"{f!r}: {e}"
    return checked, None


def _claim_limit_exchange(ctx):
    checked = 0
    try:
        f2 = make_finite_field(2, 1, ctx.caps)
        f4 = make_finite_field(2, 2, ctx.caps)
        f16 = make_finite_field(2, 4, ctx.caps)
        z4, z2 = make_zmod(4, ctx.caps), make_zmod(2, ctx.caps)
    except CapExceeded:
        return checked, None
    chains = [
        ([f2, f4, f16], [ctx.morphisms(f2, f4)[0], ctx.morphisms(f4, f16)[0]]),
        ([z4, z2], [ctx.morphisms(z4, z2)[0]]),
    ]
    for rings, maps in chains:
        checked += 1
        report = limit_exchange_check(rings, maps, ctx.caps)
        if not report.ok:
            labels = " -> ".join(ring_label(r) for r in rings)
            return checked, f"poset of the last stage is not the limit along {labels}"
    return checked, None


def _claim_fraction_pairs(ctx):
    checked = 0
    for r in ctx.commutative_rings:
        if r.size > 10:
            continue
        others = [x for x in range(r.size) if x != r.one]
        for mask in itertools.product((False, True), repeat=len(others)):
            members = frozenset(
                [r.one] + [x for x, keep in zip(others, mask) if keep]
            )
            if any(
                r.mul_table[a][b] not in members for a in members for b in members
            ):
                continue
            rep = denominator_analysis(r, members)
            if not rep.is_left_denominator or rep.fraction_ring is None:
                continue
            checked += 1
            realized = hom_poset(r).index
            frac_pair = pair_of_morphism(rep.fraction_map)
            if frac_pair not in realized:
                return checked, (
                    f"fraction pair of T={sorted(members)} over {ring_label(r)} "
                    "is not realized"
                )
            if not members <= frac_pair.mset:
                return checked, (
                    f"T={sorted(members)} escapes the unit preimage of its own "
                    f"fraction ring over {ring_label(r)}"
                )
    return checked, None


CLAIMS = (
    ("ring-axioms", "catalog tables satisfy the ring axioms", _claim_ring_axioms),
    ("regular-units", "regular elements coincide with units", _claim_regular_units),
    ("directly-finite", "one-sided inverses are two-sided", _claim_directly_finite),
    ("units-saturated", "the unit group is a saturated set", _claim_units_saturated),
    ("pair-invariants", "kernel/unit-preimage pairs satisfy the membership criterion",
     _claim_pair_invariants),
    ("poset-search", "constructed posets equal exhaustive morphism search",
     _claim_poset_search),
    ("compose-order", "post-composition never lowers a pair", _claim_compose_order),
    ("meet-product", "componentwise meets are realized by product morphisms",
     _claim_meet_product),
    ("functor-laws", "pullback respects identities, composites and order",
     _claim_functor_laws),
    ("corner-split", "morphisms out of products split through corner rings",
     _claim_corner_split),
    ("product-poset", "the completed poset of a product splits by factor",
     _claim_product_poset),
    ("prime-pairs-maximal", "completely prime ideals give maximal pairs",
     _claim_prime_pairs_maximal),
    ("max-spec", "division, complete-prime and maximal pairs chain up; "
     "commutative maximal pairs are the primes", _claim_max_spec),
    ("greatest-unique-prime", "a greatest pair exists iff the prime is unique",
     _claim_greatest_unique_prime),
    ("max-nonempty", "every catalog ring has a maximal pair", _claim_max_nonempty),
    ("bar-lattice", "the completed poset is a lattice", _claim_bar_lattice),
    ("join-quotient", "joins agree with the pair of the summed ideal",
     _claim_join_quotient),
    ("universal-contract", "universal inverting morphisms realize their pair",
     _claim_universal_contract),
    ("universal-factor", "morphisms factor uniquely through dominated pairs",
     _claim_universal_factor),
    ("corestriction-epi", "corestriction to the image is an epimorphism",
     _claim_corestriction_epi),
    ("factor-stages", "the stage factorization composes back and is epi-then-mono",
     _claim_factor_stages),
    ("fiber-least", "each ideal carries exactly one realized pair",
     _claim_fiber_least),
    ("local-criterion", "unit reflection matches the radical criterion",
     _claim_local_criterion),
    ("limit-exchange", "the poset of a chain's last stage is the limit of the stages",
     _claim_limit_exchange),
    ("fraction-pairs", "denominator sets give realized fraction pairs",
     _claim_fraction_pairs),
)


@dataclass(frozen=True)
class ClaimResult:
    key: str
    title: str
    ok: bool
    checked: int
    witness: str | None = None


@dataclass(frozen=True)
class OracleReport:
    bound: int
    ring_count: int
    degenerate: bool
    claims: tuple

    @property
    def ok(self) -> bool:
        return not self.degenerate and all(c.ok for c in self.claims)

    def render_text(self) -> str:
        if self.degenerate:
            return f"oracle: degenerate catalog (bound {self.bound}), nothing to check"
        lines = [f"oracle battery over {self.ring_count} rings (bound {self.bound})"]
        for c in self.claims:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"{mark} {c.key}: {c.title} [{c.checked} checked]")
            if c.witness:
                lines.append(f"     witness: {c.witness}")
        good = sum(1 for c in self.claims if c.ok)
        lines.append(f"{good}/{len(self.claims)} claims hold")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "bound": self.bound,
            "rings": self.ring_count,
            "degenerate": self.degenerate,
            "ok": self.ok,
            "claims": [
                {
                    "key": c.key,
                    "title": c.title,
                    "ok": c.ok,
                    "checked": c.checked,
                    "witness": c.witness,
                }
                for c in self.claims
            ],
        }


def verify_theorems(catalog: Catalog, only: str | None = None,
                    inject_pairs: tuple = (),
                    caps: Caps = DEFAULT_CAPS) -> OracleReport:
    """Run the battery; only restricts to claims whose key contains it."""
    if not catalog.rings:
        return OracleReport(catalog.bound, 0, True, ())
    ctx = _Ctx(catalog, caps, tuple(inject_pairs))
    results = []
    for key, title, fn in CLAIMS:
        if only is not None and only not in key:
            continue
        checked, witness = fn(ctx)
        results.append(ClaimResult(key, title, witness is None, checked, witness))
    return OracleReport(catalog.bound, len(catalog.rings), False, tuple(results))
