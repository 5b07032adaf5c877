"""Isomorphism machinery and the two independent small-order enumerations.

One generator builds every BL-algebra of order n recursively from MV-algebras
and ordinal products of smaller BL-chains with smaller BL-algebras.  The
other is a from-scratch oracle: enumerate every bounded lattice order on n
points, then backtrack over all commutative monoid tables admitting residua.
Both deduplicate by a permutation-minimal canonical key, so agreement of the
two key sets is a meaningful cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .core import (
    ResLattice,
    derive_residuum,
    direct_product,
    is_bl,
    is_chain,
    is_mv,
    validate,
)
from .errors import CapExceeded, InternalCheckError, NotResiduated
from .ordinal import ordinal_product

ORACLE_CAP = 6
ORDINAL_CAP = 7
KEY_CAP = 8


# --- canonical forms and isomorphism ----------------------------------------


def relabel(rl: ResLattice, perm: tuple[int, ...]) -> ResLattice:
    """Apply a carrier permutation (old id -> new id) to every table."""
    n = rl.n
    names = [""] * n
    leq = [[False] * n for _ in range(n)]
    odot = [[0] * n for _ in range(n)]
    imp = [[0] * n for _ in range(n)]
    for x in range(n):
        names[perm[x]] = rl.names[x]
        for y in range(n):
            leq[perm[x]][perm[y]] = rl.leq[x][y]
            odot[perm[x]][perm[y]] = perm[rl.odot[x][y]]
            imp[perm[x]][perm[y]] = perm[rl.imp[x][y]]
    return ResLattice(names, leq, odot, imp)


def canonical_key(rl: ResLattice) -> bytes:
    """Lexicographically minimal byte serialization of (leq, odot) over all
    carrier permutations.  Keys are equal iff the algebras are isomorphic."""
    n = rl.n
    if n > KEY_CAP:
        raise CapExceeded(f"canonical key is permutation-minimal; capped at {KEY_CAP} elements")
    best: bytes | None = None
    for perm in permutations(range(n)):  # perm[old] = new
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        buf = bytearray([n])
        for x in range(n):
            row = rl.leq[inv[x]]
            for y in range(n):
                buf.append(1 if row[inv[y]] else 0)
        for x in range(n):
            row = rl.odot[inv[x]]
            for y in range(n):
                buf.append(perm[row[inv[y]]])
        b = bytes(buf)
        if best is None or b < best:
            best = b
    assert best is not None
    return best


def _color_refine(rl: ResLattice) -> list[int]:
    n = rl.n
    colors = [
        (
            sum(rl.leq[y][x] for y in range(n)),
            sum(rl.leq[x][y] for y in range(n)),
            rl.odot[x][x] == x,
        )
        for x in range(n)
    ]
    ids = _normalize(colors)
    for _ in range(n):
        sig = [
            (
                ids[x],
                tuple(sorted((ids[y], ids[rl.odot[x][y]], rl.leq[x][y], rl.leq[y][x]) for y in range(n))),
            )
            for x in range(n)
        ]
        nxt = _normalize(sig)
        if nxt == ids:
            break
        ids = nxt
    return ids


def _normalize(keys) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys), key=repr))}
    return [order[k] for k in keys]


def are_isomorphic(a: ResLattice, b: ResLattice) -> list[int] | None:
    """Bijection preserving leq and odot (hence meet, join, imp, bounds), or
    None.  Backtracking with color-refinement pruning."""
    if a.n != b.n:
        return None
    n = a.n
    ca, cb = _color_refine(a), _color_refine(b)
    if sorted(ca) != sorted(cb):
        return None
    cand = [[y for y in range(n) if cb[y] == ca[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cand[x]))
    mapping = [-1] * n
    used = [False] * n

    def verify() -> bool:
        for x in range(n):
            for y in range(n):
                if a.leq[x][y] != b.leq[mapping[x]][mapping[y]]:
                    return False
                if mapping[a.odot[x][y]] != b.odot[mapping[x]][mapping[y]]:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return verify()
        x = order[k]
        for y in cand[x]:
            if used[y]:
                continue
            ok = True
            for xx in order[:k]:
                yy = mapping[xx]
                if a.leq[x][xx] != b.leq[y][yy] or a.leq[xx][x] != b.leq[yy][y]:
                    ok = False
                    break
                px, py = a.odot[x][xx], b.odot[y][yy]
                if mapping[px] != -1 and mapping[px] != py:
                    ok = False
                    break
                qx, qy = a.odot[x][x], b.odot[y][y]
                if mapping[qx] != -1 and mapping[qx] != qy:
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used[y] = True
            if extend(k + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if not extend(0):
        return None
    return mapping


# --- multiplicative partitions ----------------------------------------------


@lru_cache(maxsize=None)
def _factorizations(n: int, min_factor: int) -> tuple[tuple[int, ...], ...]:
    """All multisets of factors >= min_factor (each >= 2) with product n,
    including the singleton (n,), as nondecreasing tuples."""
    out = [(n,)] if n >= min_factor else []
    f = min_factor
    while f * f <= n:
        if n % f == 0:
            out.extend((f,) + rest for rest in _factorizations(n // f, f))
        f += 1
    return tuple(sorted(out))


def multiplicative_partition_list(n: int) -> list[tuple[int, ...]]:
    """Nontrivial unordered factorizations: multisets of >= 2 factors, each
    >= 2, with product n."""
    if n < 2:
        raise CapExceeded(f"need n >= 2, got {n}")
    return [t for t in _factorizations(n, 2) if len(t) >= 2]


def multiplicative_partitions(n: int) -> int:
    """Count of nontrivial unordered factorizations; 0 for primes."""
    return len(multiplicative_partition_list(n))


# --- standard chains and MV enumeration -------------------------------------


def lukasiewicz_chain(k: int) -> ResLattice:
    """The k-element chain with x odot y = max(0, x+y-(k-1)) and
    x -> y = min(k-1, k-1-x+y)."""
    if k < 2:
        raise CapExceeded(f"chain needs k >= 2, got {k}")
    top = k - 1
    names = ["0"] + [f"{i}/{top}" for i in range(1, top)] + ["1"]
    leq = [[x <= y for y in range(k)] for x in range(k)]
    odot = [[max(0, x + y - top) for y in range(k)] for x in range(k)]
    imp = [[min(top, top - x + y) for y in range(k)] for x in range(k)]
    return ResLattice(names, leq, odot, imp)


def enumerate_mv(n: int) -> list[ResLattice]:
    """One representative per isomorphism class of n-element MV-algebras:
    the n-chain plus one direct product of chains per nontrivial
    factorization of n.  Count is always partitions(n) + 1.

    Classes arising from distinct factorizations are non-isomorphic (chain
    decompositions of finite MV-algebras are unique), so the canonical-key
    dedup is only run where the key is computable.
    """
    out = [lukasiewicz_chain(n)]
    for parts in multiplicative_partition_list(n):
        out.append(direct_product([lukasiewicz_chain(k) for k in parts]))
    if n <= KEY_CAP:
        keys = [canonical_key(rl) for rl in out]
        if len(set(keys)) != len(keys):
            raise InternalCheckError("duplicate MV classes generated")
    return out


# --- generator route: ordinal products --------------------------------------


def enumerate_bl_ordinal(n: int) -> list[ResLattice]:
    """Every BL-algebra of order n, up to isomorphism: the MV-algebras plus
    ordinal products of a BL-chain of order i with a BL-algebra of order j,
    i + j = n + 1, i, j >= 2.  Deduplicated by canonical key, sorted by key."""
    if not 2 <= n <= ORDINAL_CAP:
        raise CapExceeded(f"ordinal-product enumeration supports 2..{ORDINAL_CAP}, got {n}")
    return list(_bl_ordinal(n))


@lru_cache(maxsize=None)
def _bl_ordinal(n: int) -> list[ResLattice]:
    found: dict[bytes, ResLattice] = {}
    for rl in enumerate_mv(n):
        found.setdefault(canonical_key(rl), rl)
    for i in range(2, n):
        j = n + 1 - i
        if j < 2:
            continue
        chains = [c for c in _bl_ordinal(i) if is_chain(c)]
        for c in chains:
            for b in _bl_ordinal(j):
                rl = ordinal_product(c, b)
                found.setdefault(canonical_key(rl), rl)
    return [found[k] for k in sorted(found)]


# --- oracle route: from-scratch search --------------------------------------


def _bounded_lattice_orders(n: int):
    """All bounded lattice orders on 0..n-1 whose labeling is a linear
    extension with bottom 0 and top n-1.  Every lattice is isomorphic to at
    least one of these, so nothing is lost before canonicalization."""
    mids = list(range(1, n - 1))
    pairs = [(i, j) for i in mids for j in mids if i < j]
    for bits in product((False, True), repeat=len(pairs)):
        leq = [[x == y for y in range(n)] for x in range(n)]
        for y in range(n):
            leq[0][y] = True
            leq[y][n - 1] = True
        for (i, j), b in zip(pairs, bits):
            leq[i][j] = b
        ok = True
        for x in range(n):
            for y in range(n):
                if not leq[x][y]:
                    continue
                for z in range(n):
                    if leq[y][z] and not leq[x][z]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        meet = _bounds_table(leq, lower=True)
        join = _bounds_table(leq, lower=False)
        if meet is None or join is None:
            continue
        yield leq, meet, join


def _bounds_table(leq, lower: bool):
    n = len(leq)
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if lower:
                cands = [z for z in range(n) if leq[z][x] and leq[z][y]]
                best = [m for m in cands if all(leq[z][m] for z in cands)]
            else:
                cands = [z for z in range(n) if leq[x][z] and leq[y][z]]
                best = [m for m in cands if all(leq[m][z] for z in cands)]
            if len(best) != 1:
                return None
            table[x][y] = best[0]
    return table


def _monoid_tables(leq, meet):
    """Backtrack over commutative, monotone, associative odot tables with the
    top as identity, yielding only those where every residuum exists.

    Cells (i, j) with i <= j strictly between the bounds are filled in
    row-major order; the bottom annihilates and the top is the identity.
    """
    n = len(leq)
    bot, top = 0, n - 1
    odot = [[0] * n for _ in range(n)]
    for x in range(n):
        odot[top][x] = odot[x][top] = x
        odot[bot][x] = odot[x][bot] = bot
    cells = [(i, j) for i in range(1, n - 1) for j in range(i, n - 1)]
    assigned = [[x in (bot, top) or y in (bot, top) for y in range(n)] for x in range(n)]

    def consistent(i: int, j: int) -> bool:
        v = odot[i][j]
        for a in range(n):
            for b in range(n):
                if not assigned[a][b]:
                    continue
                w = odot[a][b]
                if leq[a][i] and leq[b][j] and not leq[w][v]:
                    return False
                if leq[i][a] and leq[j][b] and not leq[v][w]:
                    return False
        for a in range(n):
            for b in range(n):
                if not assigned[a][b]:
                    continue
                ab = odot[a][b]
                for c in range(n):
                    if not assigned[b][c]:
                        continue
                    bc = odot[b][c]
                    if assigned[ab][c] and assigned[a][bc] and odot[ab][c] != odot[a][bc]:
                        return False
        return True

    def residuated() -> bool:
        for x in range(n):
            for y in range(n):
                cands = [z for z in range(n) if leq[odot[x][z]][y]]
                if not any(all(leq[z][m] for z in cands) for m in cands):
                    return False
        return True

    def fill(idx: int):
        if idx == len(cells):
            if residuated():
                yield [row[:] for row in odot]
            return
        i, j = cells[idx]
        for v in range(n):
            if not leq[v][meet[i][j]]:
                continue
            odot[i][j] = odot[j][i] = v
            assigned[i][j] = assigned[j][i] = True
            if consistent(i, j):
                yield from fill(idx + 1)
            assigned[i][j] = assigned[j][i] = False
        odot[i][j] = odot[j][i] = 0

    yield from fill(0)


_FILTERS = ("all", "bl", "mv", "chain", "bl-chain", "mv-chain")


def enumerate_reslat_oracle(n: int, filt: str = "all") -> list[ResLattice]:
    """From-scratch enumeration of all residuated lattices of order n, up to
    isomorphism, optionally filtered.  Uses no ring or ordinal-product input.
    """
    if filt not in _FILTERS:
        raise ValueError(f"unknown filter {filt!r}; expected one of {_FILTERS}")
    if not 2 <= n <= ORACLE_CAP:
        raise CapExceeded(f"oracle enumeration supports 2..{ORACLE_CAP}, got {n}")
    found: dict[bytes, ResLattice] = {}
    for leq, meet, join in _bounded_lattice_orders(n):
        for odot in _monoid_tables(leq, meet):
            try:
                imp = derive_residuum(leq, odot)
            except NotResiduated:
                continue
            rl = ResLattice([f"e{i}" for i in range(n)], leq, odot, imp)
            if not validate(rl).ok("residuated_lattice"):
                raise InternalCheckError("oracle emitted an invalid table")
            found.setdefault(canonical_key(rl), rl)
    out = [found[k] for k in sorted(found)]
    return [rl for rl in out if _passes(rl, filt)]


def _passes(rl: ResLattice, filt: str) -> bool:
    if filt == "all":
        return True
    if filt == "chain":
        return is_chain(rl)
    if filt == "bl":
        return is_bl(rl)
    if filt == "mv":
        return is_mv(rl).ok("mv")
    if filt == "bl-chain":
        return is_bl(rl) and is_chain(rl)
    if filt == "mv-chain":
        return is_mv(rl).ok("mv") and is_chain(rl)
    raise ValueError(filt)


# --- the census table --------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    """Per-order counts from both enumeration routes.

    Oracle columns are None when the oracle was not run; ``keys_match`` says
    whether the two routes produced identical canonical-key sets for both the
    BL and MV families.
    """

    n: int
    pi: int
    mv_algebras: int
    mv_chains: int
    bl_algebras: int
    bl_chains: int
    oracle_mv_algebras: int | None = None
    oracle_mv_chains: int | None = None
    oracle_bl_algebras: int | None = None
    oracle_bl_chains: int | None = None
    keys_match: bool | None = None


def census_table(n_max: int = 5, oracle: bool = True) -> list[CensusRow]:
    """Counts of MV-algebras, MV-chains, BL-algebras and BL-chains for
    n = 2..n_max, from the ordinal-product generator and the from-scratch
    oracle side by side.  Oracle columns are only available for n <= 5."""
    rows = []
    for n in range(2, n_max + 1):
        gen_bl = enumerate_bl_ordinal(n)
        gen_mv = [rl for rl in gen_bl if is_mv(rl).ok("mv")]
        row = dict(
            n=n,
            pi=multiplicative_partitions(n),
            mv_algebras=len(gen_mv),
            mv_chains=sum(is_chain(rl) for rl in gen_mv),
            bl_algebras=len(gen_bl),
            bl_chains=sum(is_chain(rl) for rl in gen_bl),
        )
        if oracle and n <= 5:
            orc_bl = enumerate_reslat_oracle(n, "bl")
            orc_mv = [rl for rl in orc_bl if is_mv(rl).ok("mv")]
            row.update(
                oracle_mv_algebras=len(orc_mv),
                oracle_mv_chains=sum(is_chain(rl) for rl in orc_mv),
                oracle_bl_algebras=len(orc_bl),
                oracle_bl_chains=sum(is_chain(rl) for rl in orc_bl),
                keys_match={canonical_key(rl) for rl in gen_bl}
                == {canonical_key(rl) for rl in orc_bl}
                and {canonical_key(rl) for rl in gen_mv}
                == {canonical_key(rl) for rl in orc_mv},
            )
        rows.append(CensusRow(**row))
    return rows
