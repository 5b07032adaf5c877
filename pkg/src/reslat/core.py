"""Finite residuated lattices as explicit tables, with exhaustive law checking.

A residuated lattice is held as a carrier 0..n-1 with a boolean order matrix
``leq``, a monoid table ``odot`` and an implication table ``imp``.  Everything
here is a pure function of those tables; every predicate that can fail returns
a Report with witness tuples that re-fail the law when replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import InternalCheckError, MalformedTable, NotInvolutive, NotResiduated

MAX_WITNESSES = 5


@dataclass
class Report:
    """Outcome of a batch of checks.

    ``verdicts`` maps law/predicate names to booleans.  ``witnesses`` holds
    (law name, element tuple) pairs, at most MAX_WITNESSES per law, collected
    in lexicographic tuple order.  Witnesses attach to primitive law names;
    aggregate verdicts (e.g. ``residuated_lattice``) are conjunctions of
    primitive ones.
    """

    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    notes: str = ""

    def ok(self, key: str | None = None) -> bool:
        if key is None:
            return all(self.verdicts.values())
        return self.verdicts[key]

    def witnesses_for(self, law: str) -> list[tuple[int, ...]]:
        return [t for name, t in self.witnesses if name == law]

    def merge(self, other: "Report") -> None:
        self.verdicts.update(other.verdicts)
        self.witnesses.extend(other.witnesses)
        if other.notes:
            self.notes = self.notes + other.notes if not self.notes else self.notes + "\n" + other.notes


class ResLattice:
    """Immutable table-backed algebra (L, <=, odot, imp, bot, top).

    The constructor only checks structural well-formedness and locates the
    global bounds; whether the tables actually satisfy the residuated-lattice
    axioms is decided by :func:`validate`.  Meet and join tables are computed
    once from ``leq``; cells without a greatest lower / least upper bound are
    None (validate reports them).
    """

    __slots__ = ("n", "names", "leq", "odot", "imp", "bot", "top", "meet", "join")

    def __init__(
        self,
        names: Sequence[str],
        leq: Sequence[Sequence[bool]],
        odot: Sequence[Sequence[int]],
        imp: Sequence[Sequence[int]],
    ):
        n = len(names)
        if n < 2:
            raise MalformedTable(f"carrier must have at least 2 elements, got {n}")
        for label, table in (("leq", leq), ("odot", odot), ("imp", imp)):
            if len(table) != n or any(len(row) != n for row in table):
                raise MalformedTable(f"{label} table is not {n}x{n}")
        for label, table in (("odot", odot), ("imp", imp)):
            for row in table:
                for v in row:
                    if not (0 <= v < n):
                        raise MalformedTable(f"{label} entry {v} out of range 0..{n - 1}")
        self.n = n
        self.names = tuple(str(s) for s in names)
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.odot = tuple(tuple(row) for row in odot)
        self.imp = tuple(tuple(row) for row in imp)

        bots = [x for x in range(n) if all(self.leq[x][y] for y in range(n))]
        tops = [x for x in range(n) if all(self.leq[y][x] for y in range(n))]
        if len(bots) != 1 or len(tops) != 1:
            raise MalformedTable("order must have a unique global bottom and top")
        self.bot = bots[0]
        self.top = tops[0]
        self.meet = tuple(
            tuple(self._bound(x, y, lower=True) for y in range(n)) for x in range(n)
        )
        self.join = tuple(
            tuple(self._bound(x, y, lower=False) for y in range(n)) for x in range(n)
        )

    def _bound(self, x: int, y: int, lower: bool) -> int | None:
        leq = self.leq
        if lower:
            cands = [z for z in range(self.n) if leq[z][x] and leq[z][y]]
            best = [m for m in cands if all(leq[z][m] for z in cands)]
        else:
            cands = [z for z in range(self.n) if leq[x][z] and leq[y][z]]
            best = [m for m in cands if all(leq[m][z] for z in cands)]
        return best[0] if len(best) == 1 else None

    def neg(self, x: int) -> int:
        """x* = x -> bot."""
        return self.imp[x][self.bot]

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResLattice):
            return NotImplemented
        return (
            self.names == other.names
            and self.leq == other.leq
            and self.odot == other.odot
            and self.imp == other.imp
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ResLattice(n={self.n}, names={list(self.names)})"


def derive_residuum(
    leq: Sequence[Sequence[bool]], odot: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], ...]:
    """Compute imp(x,y) = max{z : x odot z <= y}; the residuum is forced.

    Raises NotResiduated when some candidate set has several maximal elements
    and hence no maximum.
    """
    n = len(leq)
    imp = []
    for x in range(n):
        row = []
        for y in range(n):
            cands = [z for z in range(n) if leq[odot[x][z]][y]]
            best = [m for m in cands if all(leq[z][m] for z in cands)]
            if len(best) != 1:
                maximal = tuple(
                    m for m in cands if not any(m != z and leq[m][z] for z in cands)
                )
                raise NotResiduated(x, y, maximal)
            row.append(best[0])
        imp.append(tuple(row))
    return tuple(imp)


# --- law scans -------------------------------------------------------------
#
# Each scan walks tuples in lexicographic order and records up to
# MAX_WITNESSES violating tuples, so witness lists are deterministic.


def _scan(
    report: Report,
    law: str,
    tuples: Iterable[tuple[int, ...]],
    holds: Callable[[tuple[int, ...]], bool],
) -> bool:
    ok = True
    count = 0
    for t in tuples:
        if not holds(t):
            ok = False
            if count < MAX_WITNESSES:
                report.witnesses.append((law, t))
                count += 1
    report.verdicts[law] = ok
    return ok


def _pairs(n: int):
    return ((x, y) for x in range(n) for y in range(n))


def _triples(n: int):
    return ((x, y, z) for x in range(n) for y in range(n) for z in range(n))


def validate(rl: ResLattice) -> Report:
    """Exhaustively check LR1 (bounded lattice), LR2 (ordered commutative
    monoid with the top as identity) and LR3 (adjunction).

    The aggregate verdict is ``residuated_lattice``.
    """
    n, leq, odot, imp = rl.n, rl.leq, rl.odot, rl.imp
    r = Report()

    _scan(r, "reflexive", ((x,) for x in range(n)), lambda t: leq[t[0]][t[0]])
    _scan(r, "antisymmetric", _pairs(n), lambda t: not (leq[t[0]][t[1]] and leq[t[1]][t[0]] and t[0] != t[1]))
    _scan(r, "transitive", _triples(n), lambda t: not (leq[t[0]][t[1]] and leq[t[1]][t[2]]) or leq[t[0]][t[2]])
    _scan(r, "bot_least", ((x,) for x in range(n)), lambda t: leq[rl.bot][t[0]])
    _scan(r, "top_greatest", ((x,) for x in range(n)), lambda t: leq[t[0]][rl.top])
    _scan(r, "meets_exist", _pairs(n), lambda t: rl.meet[t[0]][t[1]] is not None)
    _scan(r, "joins_exist", _pairs(n), lambda t: rl.join[t[0]][t[1]] is not None)

    _scan(r, "odot_commutative", _pairs(n), lambda t: odot[t[0]][t[1]] == odot[t[1]][t[0]])
    _scan(
        r,
        "odot_associative",
        _triples(n),
        lambda t: odot[odot[t[0]][t[1]]][t[2]] == odot[t[0]][odot[t[1]][t[2]]],
    )
    _scan(r, "odot_identity", ((x,) for x in range(n)), lambda t: odot[rl.top][t[0]] == t[0])
    _scan(
        r,
        "odot_monotone",
        _triples(n),
        lambda t: not leq[t[0]][t[1]] or leq[odot[t[0]][t[2]]][odot[t[1]][t[2]]],
    )
    _scan(
        r,
        "adjunction",
        _triples(n),
        lambda t: leq[t[2]][imp[t[0]][t[1]]] == leq[odot[t[0]][t[2]]][t[1]],
    )

    lr1 = all(
        r.verdicts[k]
        for k in (
            "reflexive",
            "antisymmetric",
            "transitive",
            "bot_least",
            "top_greatest",
            "meets_exist",
            "joins_exist",
        )
    )
    lr2 = all(
        r.verdicts[k]
        for k in ("odot_commutative", "odot_associative", "odot_identity", "odot_monotone")
    )
    r.verdicts["lr1_bounded_lattice"] = lr1
    r.verdicts["lr2_ordered_monoid"] = lr2
    r.verdicts["lr3_adjunction"] = r.verdicts["adjunction"]
    r.verdicts["residuated_lattice"] = lr1 and lr2 and r.verdicts["adjunction"]
    return r


def _join_or_fail(rl: ResLattice, x: int, y: int) -> int | None:
    return rl.join[x][y]


def check_prel(rl: ResLattice) -> Report:
    """(x -> y) v (y -> x) = 1 over all pairs."""
    r = Report()

    def holds(t):
        j = _join_or_fail(rl, rl.imp[t[0]][t[1]], rl.imp[t[1]][t[0]])
        return j == rl.top

    _scan(r, "prel", _pairs(rl.n), holds)
    return r


def check_div(rl: ResLattice) -> Report:
    """x odot (x -> y) = x ^ y over all pairs."""
    r = Report()

    def holds(t):
        x, y = t
        return rl.odot[x][rl.imp[x][y]] == rl.meet[x][y]

    _scan(r, "div", _pairs(rl.n), holds)
    return r


def is_chain(rl: ResLattice) -> bool:
    return all(rl.leq[x][y] or rl.leq[y][x] for x in range(rl.n) for y in range(x + 1, rl.n))


def is_involutive(rl: ResLattice) -> bool:
    return all(rl.neg(rl.neg(x)) == x for x in range(rl.n))


def is_bl(rl: ResLattice) -> bool:
    """Prelinearity plus divisibility.  Assumes a validated lattice."""
    return check_prel(rl).ok("prel") and check_div(rl).ok("div")


def is_mv(rl: ResLattice) -> Report:
    """(x -> y) -> y = (y -> x) -> x over all pairs."""
    r = Report()

    def holds(t):
        x, y = t
        return rl.imp[rl.imp[x][y]][y] == rl.imp[rl.imp[y][x]][x]

    _scan(r, "mv", _pairs(rl.n), holds)
    return r


def scan_bl_identity(rl: ResLattice) -> Report:
    """[x odot (x -> y)] -> z = (x -> z) v (y -> z) over all triples.

    Raw scan without the equivalence cross-check; usable on arbitrary tables.
    """
    r = Report()

    def holds(t):
        x, y, z = t
        lhs = rl.imp[rl.odot[x][rl.imp[x][y]]][z]
        rhs = _join_or_fail(rl, rl.imp[x][z], rl.imp[y][z])
        return lhs == rhs

    _scan(r, "bl_identity", _triples(rl.n), holds)
    return r


def check_bl_identity(rl: ResLattice) -> Report:
    """Triple-scan the single-identity BL characterization.

    On a validated lattice its verdict provably equals prel+div; the two are
    evaluated independently and any disagreement is a fatal internal error.
    """
    r = scan_bl_identity(rl)
    bl = is_bl(rl)
    r.verdicts["prel_and_div"] = bl
    if r.verdicts["bl_identity"] != bl:
        raise InternalCheckError(
            f"bl identity scan ({r.verdicts['bl_identity']}) disagrees with prel+div ({bl})"
        )
    return r


# Equivalent reformulations, each scanned independently of the law it mirrors.


def check_prel_meet_identity(rl: ResLattice) -> Report:
    """(x ^ y) -> z = (x -> z) v (y -> z); equivalent to prelinearity."""
    r = Report()

    def holds(t):
        x, y, z = t
        return rl.imp[rl.meet[x][y]][z] == _join_or_fail(rl, rl.imp[x][z], rl.imp[y][z])

    _scan(r, "prel_meet_identity", _triples(rl.n), holds)
    return r


def check_prel_implication_form(rl: ResLattice) -> Report:
    """x ^ y <= z implies (x -> z) v (y -> z) = 1; equivalent to prelinearity."""
    r = Report()

    def holds(t):
        x, y, z = t
        if not rl.leq[rl.meet[x][y]][z]:
            return True
        return _join_or_fail(rl, rl.imp[x][z], rl.imp[y][z]) == rl.top

    _scan(r, "prel_implication_form", _triples(rl.n), holds)
    return r


def check_div_implication_form(rl: ResLattice) -> Report:
    """x odot (x -> y) <= z implies x ^ y <= z; equivalent to divisibility."""
    r = Report()

    def holds(t):
        x, y, z = t
        if not rl.leq[rl.odot[x][rl.imp[x][y]]][z]:
            return True
        return rl.leq[rl.meet[x][y]][z]

    _scan(r, "div_implication_form", _triples(rl.n), holds)
    return r


def check_bl_implication_form(rl: ResLattice) -> Report:
    """x odot (x -> y) <= z implies (x -> z) v (y -> z) = 1; equivalent to BL."""
    r = Report()

    def holds(t):
        x, y, z = t
        if not rl.leq[rl.odot[x][rl.imp[x][y]]][z]:
            return True
        return _join_or_fail(rl, rl.imp[x][z], rl.imp[y][z]) == rl.top

    _scan(r, "bl_implication_form", _triples(rl.n), holds)
    return r


def check_product_below_meet(rl: ResLattice) -> Report:
    """x odot (x -> y) <= x ^ y; holds in every residuated lattice."""
    r = Report()

    def holds(t):
        x, y = t
        return rl.leq[rl.odot[x][rl.imp[x][y]]][rl.meet[x][y]]

    _scan(r, "product_below_meet", _pairs(rl.n), holds)
    return r


def classify(rl: ResLattice) -> Report:
    """Full structural validation plus every classification predicate."""
    r = validate(rl)
    if r.ok("residuated_lattice"):
        r.merge(check_prel(rl))
        r.merge(check_div(rl))
        r.merge(is_mv(rl))
        r.merge(check_bl_identity(rl))
        r.verdicts["bl"] = r.verdicts["prel"] and r.verdicts["div"]
        r.verdicts["chain"] = is_chain(rl)
        r.verdicts["involutive"] = is_involutive(rl)
    return r


# --- witness replay --------------------------------------------------------

_LAWS: dict[str, Callable[[ResLattice, tuple[int, ...]], bool]] = {
    "reflexive": lambda rl, t: rl.leq[t[0]][t[0]],
    "antisymmetric": lambda rl, t: not (rl.leq[t[0]][t[1]] and rl.leq[t[1]][t[0]] and t[0] != t[1]),
    "transitive": lambda rl, t: not (rl.leq[t[0]][t[1]] and rl.leq[t[1]][t[2]]) or rl.leq[t[0]][t[2]],
    "bot_least": lambda rl, t: rl.leq[rl.bot][t[0]],
    "top_greatest": lambda rl, t: rl.leq[t[0]][rl.top],
    "meets_exist": lambda rl, t: rl.meet[t[0]][t[1]] is not None,
    "joins_exist": lambda rl, t: rl.join[t[0]][t[1]] is not None,
    "odot_commutative": lambda rl, t: rl.odot[t[0]][t[1]] == rl.odot[t[1]][t[0]],
    "odot_associative": lambda rl, t: rl.odot[rl.odot[t[0]][t[1]]][t[2]]
    == rl.odot[t[0]][rl.odot[t[1]][t[2]]],
    "odot_identity": lambda rl, t: rl.odot[rl.top][t[0]] == t[0],
    "odot_monotone": lambda rl, t: not rl.leq[t[0]][t[1]]
    or rl.leq[rl.odot[t[0]][t[2]]][rl.odot[t[1]][t[2]]],
    "adjunction": lambda rl, t: rl.leq[t[2]][rl.imp[t[0]][t[1]]]
    == rl.leq[rl.odot[t[0]][t[2]]][t[1]],
    "prel": lambda rl, t: rl.join[rl.imp[t[0]][t[1]]][rl.imp[t[1]][t[0]]] == rl.top,
    "div": lambda rl, t: rl.odot[t[0]][rl.imp[t[0]][t[1]]] == rl.meet[t[0]][t[1]],
    "mv": lambda rl, t: rl.imp[rl.imp[t[0]][t[1]]][t[1]] == rl.imp[rl.imp[t[1]][t[0]]][t[0]],
    "bl_identity": lambda rl, t: rl.imp[rl.odot[t[0]][rl.imp[t[0]][t[1]]]][t[2]]
    == rl.join[rl.imp[t[0]][t[2]]][rl.imp[t[1]][t[2]]],
    "product_below_meet": lambda rl, t: rl.leq[rl.odot[t[0]][rl.imp[t[0]][t[1]]]][
        rl.meet[t[0]][t[1]]
    ],
}


def replay_law(rl: ResLattice, law: str, elems: tuple[int, ...]) -> bool:
    """Return True iff the named law holds at the given element tuple."""
    return _LAWS[law](rl, elems)


# --- MV conversion ---------------------------------------------------------


@dataclass(frozen=True)
class MVTables:
    """An MV-algebra as explicit (oplus, star) tables over a named carrier."""

    names: tuple[str, ...]
    oplus: tuple[tuple[int, ...], ...]
    star: tuple[int, ...]
    zero: int

    @property
    def n(self) -> int:
        return len(self.names)


def mv_from_bl(rl: ResLattice) -> MVTables:
    """Extract (oplus, star) via x (+) y = (x* odot y*)*.

    Requires an involutive BL-algebra; raises NotInvolutive otherwise.
    """
    if not is_bl(rl):
        raise InternalCheckError("mv_from_bl requires a BL-algebra")
    for x in range(rl.n):
        if rl.neg(rl.neg(x)) != x:
            raise NotInvolutive(x)
    star = tuple(rl.neg(x) for x in range(rl.n))
    oplus = tuple(
        tuple(star[rl.odot[star[x]][star[y]]] for y in range(rl.n)) for x in range(rl.n)
    )
    return MVTables(names=rl.names, oplus=oplus, star=star, zero=rl.bot)


def bl_from_mv(mv: MVTables) -> ResLattice:
    """Rebuild the residuated-lattice tables from (oplus, star, 0).

    x odot y = (x* (+) y*)*, x -> y = x* (+) y, 1 = 0*, and the order is
    x <= y iff x -> y = 1.
    """
    n = mv.n
    star, oplus = mv.star, mv.oplus
    one = star[mv.zero]
    imp = tuple(tuple(oplus[star[x]][y] for y in range(n)) for x in range(n))
    odot = tuple(tuple(star[oplus[star[x]][star[y]]] for y in range(n)) for x in range(n))
    leq = tuple(tuple(imp[x][y] == one for y in range(n)) for x in range(n))
    return ResLattice(mv.names, leq, odot, imp)


def check_mv_axioms(mv: MVTables) -> Report:
    """MV1 (abelian monoid), MV2 (involution), MV3 (absorbing 0*), MV4."""
    n, oplus, star, zero = mv.n, mv.oplus, mv.star, mv.zero
    one = star[zero]
    r = Report()
    _scan(r, "mv1_commutative", _pairs(n), lambda t: oplus[t[0]][t[1]] == oplus[t[1]][t[0]])
    _scan(
        r,
        "mv1_associative",
        _triples(n),
        lambda t: oplus[oplus[t[0]][t[1]]][t[2]] == oplus[t[0]][oplus[t[1]][t[2]]],
    )
    _scan(r, "mv1_identity", ((x,) for x in range(n)), lambda t: oplus[zero][t[0]] == t[0])
    _scan(r, "mv2_involution", ((x,) for x in range(n)), lambda t: star[star[t[0]]] == t[0])
    _scan(r, "mv3_absorbing", ((x,) for x in range(n)), lambda t: oplus[t[0]][one] == one)
    _scan(
        r,
        "mv4",
        _pairs(n),
        lambda t: oplus[star[oplus[star[t[0]]][t[1]]]][t[1]]
        == oplus[star[oplus[star[t[1]]][t[0]]]][t[0]],
    )
    return r


# --- direct products -------------------------------------------------------


def direct_product(lats: Sequence[ResLattice]) -> ResLattice:
    """Componentwise direct product; order, odot and imp are all pointwise."""
    if not lats:
        raise MalformedTable("direct product needs at least one factor")
    if len(lats) == 1:
        return lats[0]
    sizes = [l.n for l in lats]
    n = 1
    for s in sizes:
        n *= s

    def decode(i: int) -> tuple[int, ...]:
        out = []
        for s in reversed(sizes):
            i, r = divmod(i, s)
            out.append(r)
        return tuple(reversed(out))

    def encode(t: Sequence[int]) -> int:
        i = 0
        for s, c in zip(sizes, t):
            i = i * s + c
        return i

    coords = [decode(i) for i in range(n)]
    names = ["(" + ",".join(l.names[c] for l, c in zip(lats, t)) + ")" for t in coords]
    leq = [
        [all(l.leq[a][b] for l, a, b in zip(lats, coords[x], coords[y])) for y in range(n)]
        for x in range(n)
    ]
    odot = [
        [encode([l.odot[a][b] for l, a, b in zip(lats, coords[x], coords[y])]) for y in range(n)]
        for x in range(n)
    ]
    imp = [
        [encode([l.imp[a][b] for l, a, b in zip(lats, coords[x], coords[y])]) for y in range(n)]
        for x in range(n)
    ]
    return ResLattice(names, leq, odot, imp)


def render_report(report: Report, names: Sequence[str] | None = None) -> str:
    """Stable text rendering: one PASS/FAIL line per verdict, witnesses named."""

    def fmt(t: tuple[int, ...]) -> str:
        if names is None:
            return "(" + ",".join(str(i) for i in t) + ")"
        return "(" + ",".join(names[i] for i in t) + ")"

    lines = []
    for law, ok in report.verdicts.items():
        if ok:
            lines.append(f"PASS {law}")
        else:
            wit = " ".join(fmt(t) for l, t in report.witnesses if l == law)
            lines.append(f"FAIL {law}" + (f" witnesses: {wit}" if wit else ""))
    if report.notes:
        lines.append(report.notes)
    return "\n".join(lines)
