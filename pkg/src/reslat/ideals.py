"""Exhaustive ideal computation for finite commutative rings.

Ideals are bitsets over element ids.  ``all_ideals`` collects every distinct
principal ideal and closes the collection under sums; completeness follows
because every ideal of a finite ring is a finite sum of principal ideals.
A subgroup-filtering brute-force oracle is provided for small rings so the
fast path can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Report, ResLattice, check_div, check_prel, derive_residuum, scan_bl_identity, validate
from .errors import InternalCheckError, RingMismatch
from .rings import FinRing

BRUTEFORCE_LIMIT = 64


@dataclass(frozen=True)
class Ideal:
    """A subset of a ring closed under + and under multiplication by the ring.

    ``members`` is an int bitmask over element ids.  ``gens`` is an optional
    generating set recorded by the construction path; it never affects
    equality and is only used to speed up quotients and products.
    """

    ring: FinRing
    members: int
    gens: tuple[int, ...] | None = field(default=None, compare=False)

    def __contains__(self, a: int) -> bool:
        return bool(self.members >> a & 1)

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def member_ids(self) -> tuple[int, ...]:
        return tuple(_bits(self.members))

    def issubset(self, other: "Ideal") -> bool:
        return self.members & ~other.members == 0

    def label(self) -> str:
        """Deterministic name: smallest generating tuple, greedily chosen."""
        gens = minimal_generators(self.ring, self.members)
        if not gens:
            return f"({self.ring.label(self.ring.zero)})"
        return "(" + ",".join(self.ring.label(g) for g in gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self.label()}[{self.size}]"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(ids) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def principal_ideal(ring: FinRing, a: int) -> Ideal:
    """{r*a : r in ring}; an ideal since the ring is commutative and unital."""
    return Ideal(ring, _mask(ring.mul(r, a) for r in range(ring.size)), gens=(a,))


def zero_ideal(ring: FinRing) -> Ideal:
    return Ideal(ring, 1 << ring.zero, gens=())


def unit_ideal(ring: FinRing) -> Ideal:
    return Ideal(ring, (1 << ring.size) - 1, gens=(ring.one,))


def _check_same_ring(i: Ideal, j: Ideal) -> FinRing:
    if i.ring != j.ring:
        raise RingMismatch("ideals belong to different rings")
    return i.ring


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    """I + J = {a + b : a in I, b in J}; already an ideal elementwise."""
    ring = _check_same_ring(i, j)
    if i.issubset(j):
        return j
    if j.issubset(i):
        return i
    add = ring.add
    members = 0
    bj = list(_bits(j.members))
    for a in _bits(i.members):
        for b in bj:
            members |= 1 << add(a, b)
    gens = None
    if i.gens is not None and j.gens is not None:
        gens = tuple(dict.fromkeys(i.gens + j.gens))
    return Ideal(ring, members, gens=gens)


def ideal_intersection(i: Ideal, j: Ideal) -> Ideal:
    _check_same_ring(i, j)
    return Ideal(i.ring, i.members & j.members)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """I (x) J: additive closure of the pairwise products.

    Equivalently the ideal generated by products of generators; both routes
    are available, saving work when generator sets are known.
    """
    ring = _check_same_ring(i, j)
    mul = ring.mul
    gi = i.gens if i.gens is not None else tuple(_bits(i.members))
    gj = j.gens if j.gens is not None else tuple(_bits(j.members))
    seeds = sorted({mul(a, b) for a in gi for b in gj})
    out = zero_ideal(ring)
    for s in seeds:
        p = principal_ideal(ring, s)
        if not p.issubset(out):
            out = ideal_sum(out, p)
    return Ideal(ring, out.members, gens=tuple(seeds))


def ideal_quotient(i: Ideal, j: Ideal) -> Ideal:
    """(I : J) = {x : x*J inside I}; membership tested on J's generators."""
    ring = _check_same_ring(i, j)
    mul = ring.mul
    gens = j.gens if j.gens is not None else tuple(_bits(j.members))
    members = 0
    for x in range(ring.size):
        if all(i.members >> mul(x, g) & 1 for g in gens):
            members |= 1 << x
    return Ideal(ring, members)


def annihilator(i: Ideal) -> Ideal:
    """Ann(I) = ({0} : I)."""
    return ideal_quotient(zero_ideal(i.ring), i)


def minimal_generators(ring: FinRing, members: int) -> tuple[int, ...]:
    """Deterministic small generating tuple: the least single generator when
    the ideal is principal, otherwise a greedy ascending-id tuple.  The
    result determines the ideal, so distinct ideals get distinct tuples."""
    zero_only = 1 << ring.zero
    if members == zero_only:
        return ()
    for a in _bits(members & ~zero_only):
        if principal_ideal(ring, a).members == members:
            return (a,)
    span = zero_only
    gens: list[int] = []
    for a in _bits(members & ~zero_only):
        if members == span:
            break
        if span >> a & 1:
            continue
        gens.append(a)
        grown = ideal_sum(
            Ideal(ring, span, gens=tuple(gens[:-1])), principal_ideal(ring, a)
        )
        span = grown.members
    return tuple(gens)


def _canonical_sort(ideals) -> list[Ideal]:
    return sorted(ideals, key=lambda i: (i.size, i.member_ids()))


_IDEAL_CACHE: dict[FinRing, tuple[Ideal, ...]] = {}


def all_ideals(ring: FinRing) -> list[Ideal]:
    """Every ideal, in canonical order (cardinality, then member-id lex).

    Distinct principal ideals are collected first and then closed under sums
    to a fixpoint.  Results are cached per ring (Ideal objects are frozen).
    """
    cached = _IDEAL_CACHE.get(ring)
    if cached is not None:
        return list(cached)
    principals: dict[int, Ideal] = {}
    for a in range(ring.size):
        p = principal_ideal(ring, a)
        principals.setdefault(p.members, p)
    plist = [principals[m] for m in sorted(principals)]

    found: dict[int, Ideal] = dict(principals)
    queue = list(plist)
    while queue:
        base = queue.pop(0)
        for p in plist:
            if p.issubset(base):
                continue
            s = ideal_sum(base, p)
            if s.members not in found:
                found[s.members] = s
                queue.append(s)
    result = _canonical_sort(found.values())
    _IDEAL_CACHE[ring] = tuple(result)
    return result


def all_ideals_bruteforce(ring: FinRing, limit: int = BRUTEFORCE_LIMIT) -> list[Ideal]:
    """Independent oracle: enumerate every additive subgroup, keep the ones
    closed under multiplication by the whole ring.  Exponential in general,
    so callers must raise ``limit`` deliberately for larger rings."""
    if ring.size > limit:
        raise InternalCheckError(
            f"brute-force ideal oracle capped at {limit} elements"
        )
    add = ring.add

    def subgroup_closure(mask: int) -> int:
        gens = list(_bits(mask))
        closed = 1 << ring.zero
        frontier = [ring.zero]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = add(x, g)
                if not closed >> y & 1:
                    closed |= 1 << y
                    frontier.append(y)
        return closed

    subgroups = {1 << ring.zero}
    frontier = [1 << ring.zero]
    while frontier:
        s = frontier.pop()
        for a in range(ring.size):
            if s >> a & 1:
                continue
            t = subgroup_closure(s | 1 << a)
            if t not in subgroups:
                subgroups.add(t)
                frontier.append(t)

    out = []
    for s in subgroups:
        elems = list(_bits(s))
        if all(s >> ring.mul(r, x) & 1 for x in elems for r in range(ring.size)):
            out.append(Ideal(ring, s))
    return _canonical_sort(out)


# --- the residuated lattice of ideals ---------------------------------------


@dataclass
class IdealLatticeMeta:
    """All ideals of a ring plus the induced residuated lattice.

    The carrier order is canonical ({0} first, the whole ring last); flags
    mark maximal/minimal ideals per the usual inclusion definitions.
    """

    ring: FinRing
    ideals: list[Ideal]
    maximal_flags: list[bool]
    minimal_flags: list[bool]
    is_local: bool
    lattice: ResLattice


def classify_ideals(ideals: list[Ideal]) -> tuple[list[bool], list[bool], bool]:
    """Maximal/minimal flags by pairwise inclusion scan, plus locality.

    Maximal: proper ideal contained in no other proper ideal.  Minimal:
    nonzero ideal containing no other nonzero ideal.  Local: exactly one
    maximal ideal.
    """
    k = len(ideals)
    whole = max(range(k), key=lambda i: ideals[i].size)
    zero = min(range(k), key=lambda i: ideals[i].size)
    maximal = []
    minimal = []
    for i, ideal in enumerate(ideals):
        is_max = i != whole and not any(
            j != i and j != whole and ideal.issubset(ideals[j]) for j in range(k)
        )
        is_min = i != zero and not any(
            j != i and j != zero and ideals[j].issubset(ideal) for j in range(k)
        )
        maximal.append(is_max)
        minimal.append(is_min)
    return maximal, minimal, sum(maximal) == 1


def ideal_lattice(ring: FinRing) -> IdealLatticeMeta:
    """(Id(A), intersection, +, (x), quotient, {0}, A) as a ResLattice.

    The implication table is the ideal quotient I -> J = (J : I); it is
    cross-checked against the residuum derived from the order and product,
    and the result must pass full validation.
    """
    ideals = all_ideals(ring)
    k = len(ideals)
    index = {i.members: idx for idx, i in enumerate(ideals)}
    names = [i.label() for i in ideals]

    leq = [[ideals[a].issubset(ideals[b]) for b in range(k)] for a in range(k)]
    odot = [[0] * k for _ in range(k)]
    imp = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            prod = ideal_product(ideals[a], ideals[b])
            odot[a][b] = odot[b][a] = index[prod.members]
    for a in range(k):
        for b in range(k):
            quot = ideal_quotient(ideals[b], ideals[a])
            imp[a][b] = index[quot.members]

    derived = derive_residuum(leq, odot)
    for a in range(k):
        for b in range(k):
            if derived[a][b] != imp[a][b]:
                raise InternalCheckError(
                    f"ideal quotient table disagrees with derived residuum at ({a},{b})"
                )
    lattice = ResLattice(names, leq, odot, imp)
    rep = validate(lattice)
    if not rep.ok("residuated_lattice"):
        raise InternalCheckError("ideal lattice failed validation: " + repr(rep.verdicts))

    maximal, minimal, is_local = classify_ideals(ideals)
    return IdealLatticeMeta(
        ring=ring,
        ideals=ideals,
        maximal_flags=maximal,
        minimal_flags=minimal,
        is_local=is_local,
        lattice=lattice,
    )


def check_blring(ring: FinRing) -> Report:
    """Decide whether the ideal lattice is a BL-algebra, two independent ways.

    Route one scans prelinearity and divisibility on the lattice; route two
    scans the single identity (K : [I (x) (J : I)]) = (K : I) + (K : J) over
    all ideal triples, via the cross-checked lattice tables.  The verdicts
    provably agree; disagreement is a fatal internal error.
    """
    meta = ideal_lattice(ring)
    lat = meta.lattice
    r = Report()
    r.merge(check_prel(lat))
    r.merge(check_div(lat))
    r.merge(scan_bl_identity(lat))
    lattice_route = r.verdicts["prel"] and r.verdicts["div"]
    identity_route = r.verdicts["bl_identity"]
    r.verdicts["lattice_route_bl"] = lattice_route
    r.verdicts["identity_route_bl"] = identity_route
    r.verdicts["bl_ring"] = lattice_route
    if lattice_route != identity_route:
        raise InternalCheckError("BL-ring routes disagree")
    r.notes = "ideals: " + " ".join(lat.names)
    return r
