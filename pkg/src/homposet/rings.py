"""Finite rings as explicit operation tables.

A FiniteRing stores full addition and multiplication tables over carrier
indices 0..size-1 and is immutable, so values can be shared and hashed
freely.  Equality and hashing look only at the tables (and the designated
zero/one), never at provenance: two constructions that produce identical
tables are the same ring for every purpose downstream.

Elements are plain ints; the RingElement wrapper adds operator sugar for
interactive use.  All rings here have 1 != 0.  The one-element ring is
rejected by every public constructor; only corner extraction (see
morphisms.decompose_product_morphism) may build it, via _from_tables with
allow_trivial=True.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .config import Caps, DEFAULT_CAPS
from .errors import (
    BaseNotField,
    CapExceeded,
    ImproperIdeal,
    NotAnIdeal,
    NotASubmonoid,
    NotPrime,
    RingMismatch,
    ZeroRingExcluded,
)


@dataclass(frozen=True, eq=False)
class FiniteRing:
    size: int
    add_table: tuple
    mul_table: tuple
    zero: int
    one: int
    provenance: tuple = ("raw",)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (
            self.size == other.size
            and self.zero == other.zero
            and self.one == other.one
            and self.add_table == other.add_table
            and self.mul_table == other.mul_table
        )

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.size, self.zero, self.one, self.add_table, self.mul_table))
            self.__dict__["_hash"] = h
        return h

    def __repr__(self):
        return f"FiniteRing({ring_label(self)}, size={self.size})"

    # elementwise operations on carrier indices
    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def element(self, index: int) -> "RingElement":
        if not 0 <= index < self.size:
            raise IndexError(index)
        return RingElement(self, index)

    def elements(self):
        return range(self.size)

    @cached_property
    def neg_table(self) -> tuple:
        zero = self.zero
        return tuple(row.index(zero) for row in self.add_table)

    @cached_property
    def unit_indices(self) -> frozenset:
        one = self.one
        mul = self.mul_table
        out = []
        for a in range(self.size):
            row = mul[a]
            for b in range(self.size):
                if row[b] == one and mul[b][a] == one:
                    out.append(a)
                    break
        return frozenset(out)

    @cached_property
    def additive_orders(self) -> tuple:
        add = self.add_table
        zero = self.zero
        orders = []
        for a in range(self.size):
            k, x = 1, a
            while x != zero:
                x = add[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def characteristic(self) -> int:
        return self.additive_orders[self.one]

    @cached_property
    def is_commutative(self) -> bool:
        mul = self.mul_table
        return all(
            mul[a][b] == mul[b][a]
            for a in range(self.size)
            for b in range(a + 1, self.size)
        )

    def inverse(self, a: int):
        """Two-sided inverse index of a, or None."""
        one = self.one
        mul = self.mul_table
        row = mul[a]
        for b in range(self.size):
            if row[b] == one and mul[b][a] == one:
                return b
        return None


@dataclass(frozen=True)
class RingElement:
    """Operator sugar over a carrier index; mixed-ring arithmetic is rejected."""

    ring: FiniteRing
    index: int

    def _peer(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch("elements of different rings")
            return other.index
        if isinstance(other, int):
            # integer n acts as n * 1
            r, n = self.ring, other % max(self.ring.characteristic, 1)
            x = r.zero
            for _ in range(n):
                x = r.add(x, r.one)
            return x
        return NotImplemented

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add(self.index, self._peer(other)))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.sub(self.index, self._peer(other)))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul(self.index, self._peer(other)))

    def __rmul__(self, other):
        return RingElement(self.ring, self.ring.mul(self._peer(other), self.index))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.index))

    def __repr__(self):
        return f"<{element_label(self.ring, self.index)} in {ring_label(self.ring)}>"


# ---------------------------------------------------------------------------
# member-set wrappers


def _is_ideal(ring: FiniteRing, members: frozenset) -> bool:
    if ring.zero not in members:
        return False
    add, mul = ring.add_table, ring.mul_table
    for a in members:
        for b in members:
            if add[a][b] not in members:
                return False
        for r in range(ring.size):
            if mul[r][a] not in members or mul[a][r] not in members:
                return False
    return True


def _is_submonoid(ring: FiniteRing, members: frozenset) -> bool:
    if ring.one not in members:
        return False
    mul = ring.mul_table
    return all(mul[a][b] in members for a in members for b in members)


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        if not _is_ideal(self.ring, self.members):
            raise NotAnIdeal(sorted(self.members))

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.members == other.members

    def __hash__(self):
        return hash((hash(self.ring), self.members))

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self):
        return len(self.members)

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.members

    def __repr__(self):
        return f"Ideal({sorted(self.members)} of {ring_label(self.ring)})"


@dataclass(frozen=True, eq=False)
class MultiplicativeSet:
    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        if not _is_submonoid(self.ring, self.members):
            raise NotASubmonoid(sorted(self.members))

    def __eq__(self, other):
        if not isinstance(other, MultiplicativeSet):
            return NotImplemented
        return self.ring == other.ring and self.members == other.members

    def __hash__(self):
        return hash((hash(self.ring), self.members))

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return f"MultiplicativeSet({sorted(self.members)} of {ring_label(self.ring)})"


# ---------------------------------------------------------------------------
# morphisms (data type; enumeration and heavier machinery live in morphisms.py)


@dataclass(frozen=True, eq=False)
class RingMorphism:
    """Unit-preserving ring morphism stored as an image tuple.

    images[i] is the target index of source element i.  Construction checks
    preservation of 0, 1, + and x unless check=False is passed by internal
    callers that compose already-validated morphisms.
    """

    source: FiniteRing
    target: FiniteRing
    images: tuple

    def __init__(self, source, target, images, check: bool = True):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", tuple(images))
        if check:
            self._validate()

    def _validate(self):
        src, tgt, f = self.source, self.target, self.images
        if len(f) != src.size:
            raise ValueError("image tuple length disagrees with source size")
        if any(not 0 <= y < tgt.size for y in f):
            raise ValueError("image index out of range")
        if f[src.zero] != tgt.zero or f[src.one] != tgt.one:
            raise ValueError("morphism must preserve 0 and 1")
        sadd, smul = src.add_table, src.mul_table
        tadd, tmul = tgt.add_table, tgt.mul_table
        for a in range(src.size):
            fa = f[a]
            for b in range(src.size):
                fb = f[b]
                if f[sadd[a][b]] != tadd[fa][fb]:
                    raise ValueError(f"addition not preserved at ({a},{b})")
                if f[smul[a][b]] != tmul[fa][fb]:
                    raise ValueError(f"multiplication not preserved at ({a},{b})")

    def __call__(self, index: int) -> int:
        return self.images[index]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingMorphism):
            return NotImplemented
        return (
            self.images == other.images
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((hash(self.source), hash(self.target), self.images))
            self.__dict__["_hash"] = h
        return h

    @cached_property
    def kernel_members(self) -> frozenset:
        z = self.target.zero
        return frozenset(i for i, y in enumerate(self.images) if y == z)

    @cached_property
    def unit_preimage_members(self) -> frozenset:
        units = self.target.unit_indices
        return frozenset(i for i, y in enumerate(self.images) if y in units)

    @cached_property
    def image_members(self) -> frozenset:
        return frozenset(self.images)

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.size

    def __repr__(self):
        return f"RingMorphism({ring_label(self.source)} -> {ring_label(self.target)}, {list(self.images)})"


def identity_morphism(ring: FiniteRing) -> RingMorphism:
    return RingMorphism(ring, ring, tuple(range(ring.size)), check=False)


def compose(outer: RingMorphism, inner: RingMorphism) -> RingMorphism:
    """outer after inner.  Targets and sources must chain up to table equality."""
    from .errors import NotComposable

    if inner.target != outer.source:
        raise NotComposable("inner target differs from outer source")
    images = tuple(outer.images[y] for y in inner.images)
    # composite of valid morphisms needs no re-validation
    return RingMorphism(inner.source, outer.target, images, check=False)


def kernel(f: RingMorphism) -> Ideal:
    return Ideal(f.source, f.kernel_members)


def unit_preimage(f: RingMorphism) -> MultiplicativeSet:
    return MultiplicativeSet(f.source, f.unit_preimage_members)


# ---------------------------------------------------------------------------
# constructors


def _freeze(table) -> tuple:
    return tuple(tuple(row) for row in table)


def _from_tables(add, mul, zero, one, provenance, allow_trivial=False) -> FiniteRing:
    size = len(add)
    if size < 2 and not allow_trivial:
        raise ZeroRingExcluded("rings here have 1 != 0")
    return FiniteRing(size, _freeze(add), _freeze(mul), zero, one, provenance)


def ring_from_tables(add, mul, caps: Caps = DEFAULT_CAPS, validate: bool = True) -> FiniteRing:
    """Build a ring from raw tables, deriving zero and one.

    Axioms are checked exhaustively unless validate=False; raw inputs are the
    one place where tables are untrusted.
    """
    size = len(add)
    if size > caps.table_size:
        raise CapExceeded(f"{size} > table cap {caps.table_size}")
    add_t, mul_t = _freeze(add), _freeze(mul)
    zero = _find_identity(add_t, size)
    one = _find_identity(mul_t, size)
    if zero is None or one is None:
        raise ValueError("tables have no additive or multiplicative identity")
    ring = _from_tables(add_t, mul_t, zero, one, ("raw",))
    if validate:
        problems = check_table_axioms(ring)
        if problems:
            raise ValueError("; ".join(problems[:3]))
    return ring


def _find_identity(table, size):
    for e in range(size):
        if all(table[e][b] == b and table[b][e] == b for b in range(size)):
            return e
    return None


def check_table_axioms(ring: FiniteRing) -> list:
    """Exhaustive ring-axiom scan; returns human-readable violations."""
    n, add, mul = ring.size, ring.add_table, ring.mul_table
    zero, one = ring.zero, ring.one
    bad = []
    if any(add[zero][b] != b for b in range(n)):
        bad.append("0 is not an additive identity")
    if any(mul[one][b] != b or mul[b][one] != b for b in range(n)):
        bad.append("1 is not a multiplicative identity")
    for a in range(n):
        if all(add[a][b] != zero for b in range(n)):
            bad.append(f"{a} has no additive inverse")
            break
    for a in range(n):
        for b in range(a + 1, n):
            if add[a][b] != add[b][a]:
                bad.append(f"addition not commutative at ({a},{b})")
                break
        else:
            continue
        break
    for a in range(n):
        for b in range(n):
            ab_add = add[a][b]
            ab_mul = mul[a][b]
            for c in range(n):
                if add[ab_add][c] != add[a][add[b][c]]:
                    bad.append(f"addition not associative at ({a},{b},{c})")
                    return bad
                if mul[ab_mul][c] != mul[a][mul[b][c]]:
                    bad.append(f"multiplication not associative at ({a},{b},{c})")
                    return bad
                if mul[a][add[b][c]] != add[ab_mul][mul[a][c]]:
                    bad.append(f"left distributivity fails at ({a},{b},{c})")
                    return bad
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    bad.append(f"right distributivity fails at ({a},{b},{c})")
                    return bad
    return bad


def make_zmod(n: int, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """Integers modulo n, carrier 0..n-1."""
    if n <= 1:
        raise ZeroRingExcluded(f"zmod needs n >= 2, got {n}")
    if n > caps.table_size:
        raise CapExceeded(f"{n} > table cap {caps.table_size}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return _from_tables(add, mul, 0, 1, ("zmod", n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_mul_mod(f, g, modulus, p):
    """Product of coefficient tuples (low degree first) reduced mod (modulus, p)."""
    k = len(modulus) - 1
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    # reduce by the monic modulus
    for d in range(len(out) - 1, k - 1, -1):
        c = out[d]
        if c:
            out[d] = 0
            for i in range(k):
                out[d - k + i] = (out[d - k + i] - c * modulus[i]) % p
    return tuple(out[:k]) + (0,) * max(0, k - len(out))


def _poly_divides(d, f, p):
    """Whether monic d divides f over Z/p (coefficients low degree first)."""
    f = list(f)
    dd = len(d) - 1
    while len(f) - 1 >= dd:
        lead = f[-1]
        if lead:
            shift = len(f) - 1 - dd
            for i, c in enumerate(d):
                f[shift + i] = (f[shift + i] - lead * c) % p
        f.pop()
    return all(c == 0 for c in f)


def _smallest_irreducible(p: int, k: int) -> tuple:
    """Monic irreducible of degree k over Z/p, minimal in low-degree-first lex order."""
    if k == 1:
        return (0, 1)
    monics = {1: [tuple(c) + (1,) for c in itertools.product(range(p), repeat=1)]}
    for low in itertools.product(range(p), repeat=k):
        cand = low + (1,)
        ok = True
        d = 1
        while d * 2 <= k and ok:
            if d not in monics:
                monics[d] = [tuple(c) + (1,) for c in itertools.product(range(p), repeat=d)]
            for g in monics[d]:
                if _poly_divides(g, cand, p):
                    ok = False
                    break
            d += 1
        if ok:
            return cand
    raise AssertionError("no irreducible found")  # cannot happen


def make_finite_field(p: int, k: int, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """Field of order p**k as Z/p[x] modulo its least monic irreducible.

    Elements are encoded base p, low coefficient in the least significant
    digit, so index i is the polynomial sum(digit_j * x^j).  For k = 1 the
    tables coincide with make_zmod(p).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    q = p**k
    if q > caps.table_size:
        raise CapExceeded(f"{q} > table cap {caps.table_size}")
    modulus = _smallest_irreducible(p, k)

    def digits(i):
        out = []
        for _ in range(k):
            out.append(i % p)
            i //= p
        return tuple(out)

    def undigits(c):
        v = 0
        for d in reversed(c):
            v = v * p + d
        return v

    polys = [digits(i) for i in range(q)]
    add = [
        [undigits(tuple((a + b) % p for a, b in zip(polys[i], polys[j]))) for j in range(q)]
        for i in range(q)
    ]
    mul = [
        [undigits(_poly_mul_mod(polys[i], polys[j], modulus, p)) for j in range(q)]
        for i in range(q)
    ]
    return _from_tables(add, mul, 0, 1, ("gf", p, k, modulus))


def make_product(r1: FiniteRing, r2: FiniteRing, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """Componentwise ring on the cartesian carrier; index (a, b) = a*|R2| + b."""
    if r1.size < 2 or r2.size < 2:
        raise ZeroRingExcluded("product factors must have 1 != 0")
    size = r1.size * r2.size
    if size > caps.table_size:
        raise CapExceeded(f"{size} > table cap {caps.table_size}")
    n2 = r2.size
    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    for a1 in range(r1.size):
        for a2 in range(n2):
            i = a1 * n2 + a2
            arow, mrow = add[i], mul[i]
            aa, ma = r1.add_table[a1], r1.mul_table[a1]
            ab, mb = r2.add_table[a2], r2.mul_table[a2]
            for b1 in range(r1.size):
                for b2 in range(n2):
                    j = b1 * n2 + b2
                    arow[j] = aa[b1] * n2 + ab[b2]
                    mrow[j] = ma[b1] * n2 + mb[b2]
    zero = r1.zero * n2 + r2.zero
    one = r1.one * n2 + r2.one
    return _from_tables(add, mul, zero, one, ("product", r1, r2))


def product_factors(ring: FiniteRing):
    if ring.provenance[0] != "product":
        from .errors import NotAProduct

        raise NotAProduct(ring_label(ring))
    return ring.provenance[1], ring.provenance[2]


def product_projections(ring: FiniteRing):
    """The two unit-preserving coordinate projections of a product ring."""
    r1, r2 = product_factors(ring)
    n2 = r2.size
    p1 = RingMorphism(ring, r1, tuple(i // n2 for i in range(ring.size)), check=False)
    p2 = RingMorphism(ring, r2, tuple(i % n2 for i in range(ring.size)), check=False)
    return p1, p2


def product_injections(ring: FiniteRing):
    """Coordinate injections a -> (a, 0) and b -> (0, b) as raw index maps.

    These are not unit-preserving ring morphisms (they send 1 to an
    idempotent, not to 1), hence plain tuples rather than RingMorphism.
    """
    r1, r2 = product_factors(ring)
    n2 = r2.size
    inj1 = tuple(a * n2 + r2.zero for a in range(r1.size))
    inj2 = tuple(r1.zero * n2 + b for b in range(r2.size))
    return inj1, inj2


def make_quotient(ring: FiniteRing, ideal: Ideal):
    """Quotient by a proper two-sided ideal, plus the projection morphism.

    Coset representatives are the least member indices; quotient elements
    are those representatives sorted, so the construction is deterministic.
    """
    if ideal.ring != ring:
        raise RingMismatch("ideal lives over a different ring")
    if not ideal.is_proper:
        raise ImproperIdeal("cannot quotient by the whole ring")
    members = ideal.members
    add = ring.add_table
    rep = {}
    for x in range(ring.size):
        if x in rep:
            continue
        coset = sorted(add[x][m] for m in members)
        r = coset[0]
        for y in coset:
            rep[y] = r
    reps = sorted(set(rep.values()))
    qidx = {r: i for i, r in enumerate(reps)}
    qsize = len(reps)
    qadd = [[qidx[rep[add[reps[i]][reps[j]]]] for j in range(qsize)] for i in range(qsize)]
    qmul = [
        [qidx[rep[ring.mul_table[reps[i]][reps[j]]]] for j in range(qsize)]
        for i in range(qsize)
    ]
    quotient = _from_tables(
        qadd, qmul, qidx[rep[ring.zero]], qidx[rep[ring.one]],
        ("quotient", ring, tuple(sorted(members))),
    )
    projection = RingMorphism(
        ring, quotient, tuple(qidx[rep[x]] for x in range(ring.size)), check=False
    )
    return quotient, projection


def is_field(ring: FiniteRing) -> bool:
    return ring.is_commutative and len(ring.unit_indices) == ring.size - 1


def make_matrix_ring(base: FiniteRing, k: int, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """k x k matrices over a finite field, row-major base-q digit encoding."""
    if not is_field(base):
        raise BaseNotField(ring_label(base))
    if k < 1:
        raise ValueError("k must be >= 1")
    q = base.size
    size = q ** (k * k)
    if size > caps.table_size:
        raise CapExceeded(f"{size} > table cap {caps.table_size}")
    nn = k * k

    def digits(i):
        out = []
        for _ in range(nn):
            out.append(i % q)
            i //= q
        return tuple(out)

    def undigits(c):
        v = 0
        for d in reversed(c):
            v = v * q + d
        return v

    mats = [digits(i) for i in range(size)]
    badd, bmul = base.add_table, base.mul_table
    add = [
        [undigits(tuple(badd[x][y] for x, y in zip(mats[i], mats[j]))) for j in range(size)]
        for i in range(size)
    ]
    mul = []
    for i in range(size):
        A = mats[i]
        row = []
        for j in range(size):
            B = mats[j]
            out = []
            for r in range(k):
                for c in range(k):
                    acc = base.zero
                    for t in range(k):
                        acc = badd[acc][bmul[A[r * k + t]][B[t * k + c]]]
                    out.append(acc)
            row.append(undigits(tuple(out)))
        mul.append(row)
    zero = undigits((base.zero,) * nn)
    one = undigits(tuple(base.one if r == c else base.zero for r in range(k) for c in range(k)))
    return _from_tables(add, mul, zero, one, ("matrix", k, base))


def subring(parent: FiniteRing, members, one: int | None = None, allow_trivial: bool = False):
    """Materialize a subset closed under the operations as its own ring.

    Returns (ring, carrier) where carrier[i] is the parent index of local
    element i.  one defaults to the parent identity; corner rings pass their
    idempotent instead.
    """
    carrier = tuple(sorted(set(members)))
    local = {x: i for i, x in enumerate(carrier)}
    if one is None:
        one = parent.one
    if parent.zero not in local or one not in local:
        raise ValueError("subring must contain its zero and identity")
    add = [[local[parent.add_table[a][b]] for b in carrier] for a in carrier]
    mul = [[local[parent.mul_table[a][b]] for b in carrier] for a in carrier]
    ring = _from_tables(
        add, mul, local[parent.zero], local[one],
        ("subring", parent, carrier), allow_trivial=allow_trivial,
    )
    return ring, carrier


def subring_closure(ring: FiniteRing, seed) -> frozenset:
    """Least subset containing seed, 0 and 1, closed under +, -, x."""
    add, mul, neg = ring.add_table, ring.mul_table, ring.neg_table
    known = {ring.zero, ring.one}
    work = list(known | set(seed))
    known |= set(seed)
    while work:
        a = work.pop()
        for b in list(known):
            for c in (add[a][b], mul[a][b], mul[b][a]):
                if c not in known:
                    known.add(c)
                    work.append(c)
        na = neg[a]
        if na not in known:
            known.add(na)
            work.append(na)
    return frozenset(known)


# ---------------------------------------------------------------------------
# structural sets and predicates


def units(ring: FiniteRing) -> MultiplicativeSet:
    """Group of two-sided invertible elements."""
    return MultiplicativeSet(ring, ring.unit_indices)


def regular_elements(ring: FiniteRing) -> frozenset:
    """Elements that are neither left nor right zero divisors."""
    n, mul, zero = ring.size, ring.mul_table, ring.zero
    out = []
    for x in range(n):
        row = mul[x]
        ok = True
        for r in range(n):
            if r != zero and (row[r] == zero or mul[r][x] == zero):
                ok = False
                break
        if ok:
            out.append(x)
    return frozenset(out)


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """Largest ideal of quasi-regular elements.

    x belongs iff 1 + r*x*s is a unit for every r, s; the resulting set is
    verified to be an ideal by the Ideal constructor.
    """
    n = ring.size
    mul, add = ring.mul_table, ring.add_table
    one = ring.one
    is_unit = [i in ring.unit_indices for i in range(n)]
    members = []
    for x in range(n):
        ok = True
        for r in range(n):
            rx = mul[r][x]
            for s in range(n):
                if not is_unit[add[one][mul[rx][s]]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            members.append(x)
    return Ideal(ring, frozenset(members))


def ideal_generated_by(ring: FiniteRing, gens) -> Ideal:
    """Least two-sided ideal containing gens, by fixed-point closure."""
    add, mul, neg = ring.add_table, ring.mul_table, ring.neg_table
    known = {ring.zero} | set(gens)
    work = list(known)
    while work:
        a = work.pop()
        for c in (neg[a],):
            if c not in known:
                known.add(c)
                work.append(c)
        for b in list(known):
            c = add[a][b]
            if c not in known:
                known.add(c)
                work.append(c)
        for r in range(ring.size):
            for c in (mul[r][a], mul[a][r]):
                if c not in known:
                    known.add(c)
                    work.append(c)
    return Ideal(ring, frozenset(known))


@lru_cache(maxsize=None)
def enumerate_ideals(ring: FiniteRing) -> tuple:
    """All two-sided ideals, sorted by size then member order.

    Seeds with the principal ideals and closes under pairwise sums; every
    ideal is a finite sum of principal ones, so the closure is complete.
    """
    add = ring.add_table
    seeds = {ideal_generated_by(ring, (x,)).members for x in range(ring.size)}
    ideals = set(seeds)
    frontier = set(seeds)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in ideals:
                s = frozenset(add[x][y] for x in a for y in b)
                if s not in ideals and s not in fresh:
                    fresh.add(s)
        ideals |= fresh
        frontier = fresh
    ordered = sorted(ideals, key=lambda m: (len(m), sorted(m)))
    return tuple(Ideal(ring, m) for m in ordered)


def proper_ideals(ring: FiniteRing) -> tuple:
    return tuple(i for i in enumerate_ideals(ring) if i.is_proper)


def is_saturated(ring: FiniteRing, members) -> bool:
    """Whether xy in M forces both x and y into M, scanned over all of R."""
    mset = members.members if isinstance(members, MultiplicativeSet) else frozenset(members)
    mul = ring.mul_table
    for x in range(ring.size):
        row = mul[x]
        for y in range(ring.size):
            if row[y] in mset and (x not in mset or y not in mset):
                return False
    return True


def is_directly_finite(ring: FiniteRing) -> bool:
    """Whether every one-sided inverse is two-sided: xy = 1 forces yx = 1."""
    mul, one = ring.mul_table, ring.one
    for x in range(ring.size):
        row = mul[x]
        for y in range(ring.size):
            if row[y] == one and mul[y][x] != one:
                return False
    return True


def is_completely_prime(ring: FiniteRing, ideal: Ideal) -> bool:
    """Proper, with multiplicatively closed complement."""
    if not ideal.is_proper:
        return False
    members = ideal.members
    mul = ring.mul_table
    for x in range(ring.size):
        if x in members:
            continue
        row = mul[x]
        for y in range(ring.size):
            if y not in members and row[y] in members:
                return False
    return True


def is_prime_ideal(ring: FiniteRing, ideal: Ideal) -> bool:
    """Prime ideal test for commutative rings (xy in P => x or y in P)."""
    from .errors import NotCommutative

    if not ring.is_commutative:
        raise NotCommutative(ring_label(ring))
    return is_completely_prime(ring, ideal)


# ---------------------------------------------------------------------------
# display labels


def ring_label(ring: FiniteRing) -> str:
    prov = ring.provenance
    tag = prov[0]
    if tag == "zmod":
        return f"Z/{prov[1]}"
    if tag == "gf":
        return f"GF({prov[1] ** prov[2]})"
    if tag == "product":
        return f"{ring_label(prov[1])} x {ring_label(prov[2])}"
    if tag == "matrix":
        return f"M{prov[1]}({ring_label(prov[2])})"
    if tag == "quotient":
        return f"{ring_label(prov[1])}/({','.join(map(str, prov[2]))})"
    if tag == "subring":
        return f"sub[{len(prov[2])}]({ring_label(prov[1])})"
    if tag == "corner":
        return f"corner[{ring.size}]({ring_label(prov[1])})"
    return f"ring{ring.size}"


def element_label(ring: FiniteRing, index: int) -> str:
    prov = ring.provenance
    tag = prov[0]
    if tag == "zmod":
        return str(index)
    if tag == "gf":
        p, k = prov[1], prov[2]
        if k == 1:
            return str(index)
        digits = []
        i = index
        for _ in range(k):
            digits.append(i % p)
            i //= p
        terms = []
        for d, c in enumerate(digits):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            elif d == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{d}" if c == 1 else f"{c}x^{d}")
        return "+".join(terms) if terms else "0"
    if tag == "product":
        n2 = prov[2].size
        return f"({element_label(prov[1], index // n2)},{element_label(prov[2], index % n2)})"
    if tag == "matrix":
        k, base = prov[1], prov[2]
        q = base.size
        digits = []
        i = index
        for _ in range(k * k):
            digits.append(i % q)
            i //= q
        rows = [
            "[" + ",".join(element_label(base, digits[r * k + c]) for c in range(k)) + "]"
            for r in range(k)
        ]
        return "[" + ",".join(rows) + "]"
    if tag == "quotient":
        base = prov[1]
        # quotient carrier indices are sorted coset representatives
        reps = _quotient_reps(base, prov[2])
        return element_label(base, reps[index])
    if tag == "subring":
        return element_label(prov[1], prov[2][index])
    return str(index)


def _quotient_reps(base: FiniteRing, members) -> tuple:
    add = base.add_table
    rep = {}
    for x in range(base.size):
        if x in rep:
            continue
        coset = sorted(add[x][m] for m in members)
        for y in coset:
            rep[y] = coset[0]
    return tuple(sorted(set(rep.values())))


def regenerate(ring: FiniteRing) -> FiniteRing:
    """Rebuild a ring from its structural provenance.

    The result must be table-identical to the input; raw-table rings are
    returned unchanged.
    """
    prov = ring.provenance
    tag = prov[0]
    wide = Caps(table_size=max(DEFAULT_CAPS.table_size, ring.size),
                morphism_search=DEFAULT_CAPS.morphism_search)
    if tag == "zmod":
        return make_zmod(prov[1], wide)
    if tag == "gf":
        return make_finite_field(prov[1], prov[2], wide)
    if tag == "product":
        return make_product(prov[1], prov[2], wide)
    if tag == "matrix":
        return make_matrix_ring(prov[2], prov[1], wide)
    if tag == "quotient":
        q, _ = make_quotient(prov[1], Ideal(prov[1], frozenset(prov[2])))
        return q
    if tag == "subring":
        s, _ = subring(prov[1], prov[2], allow_trivial=True)
        return s
    return ring
