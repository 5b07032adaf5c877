"""Shared hand-built reference algebras.

These are constructed table-by-table, independently of the package's own
generators, so they can serve as oracles for the construction code.
"""

from __future__ import annotations

import pytest

from reslat import ResLattice


def chain_leq(n: int) -> list[list[bool]]:
    return [[x <= y for y in range(n)] for x in range(n)]


@pytest.fixture(scope="session")
def godel3() -> ResLattice:
    """Three-element chain with idempotent product (odot = min)."""
    odot = [[min(x, y) for y in range(3)] for x in range(3)]
    imp = [[2 if x <= y else y for y in range(3)] for x in range(3)]
    return ResLattice(["0", "a", "1"], chain_leq(3), odot, imp)


@pytest.fixture(scope="session")
def luk3_manual() -> ResLattice:
    """Three-element chain with x odot y = max(0, x+y-2), built by hand."""
    odot = [[max(0, x + y - 2) for y in range(3)] for x in range(3)]
    imp = [[min(2, 2 - x + y) for y in range(3)] for x in range(3)]
    return ResLattice(["0", "a", "1"], chain_leq(3), odot, imp)


@pytest.fixture(scope="session")
def nilpotent4() -> ResLattice:
    """Chain 0 < a < b < 1 with x odot y = 0 whenever x, y < 1.

    A residuated lattice that satisfies prelinearity but not divisibility.
    """
    n = 4
    odot = [[min(x, y) if max(x, y) == 3 else 0 for y in range(n)] for x in range(n)]
    imp = []
    for x in range(n):
        row = []
        for y in range(n):
            cands = [z for z in range(n) if odot[x][z] <= y]
            row.append(max(cands))
        imp.append(row)
    return ResLattice(["0", "a", "b", "1"], chain_leq(n), odot, imp)


@pytest.fixture(scope="session")
def boolean4_manual() -> ResLattice:
    """Four-element Boolean algebra: order is divisibility of {1,2,3,6}-style
    two-bit masks, odot is meet, imp is complement-join."""
    n = 4  # elements are bitmasks 0..3, order is bit inclusion
    leq = [[x & y == x for y in range(n)] for x in range(n)]
    odot = [[x & y for y in range(n)] for x in range(n)]
    imp = [[(x ^ 3) | y for y in range(n)] for x in range(n)]
    return ResLattice(["0", "p", "q", "1"], leq, odot, imp)


@pytest.fixture(scope="session")
def m3_tables():
    """Order and meet-product of the non-residuable five-element lattice with
    three incomparable midpoints."""
    n = 5  # 0 bottom, 1..3 atoms, 4 top
    leq = [[x == y or x == 0 or y == 4 for y in range(n)] for x in range(n)]
    meet = [[x if leq[x][y] else (y if leq[y][x] else 0) for y in range(n)] for x in range(n)]
    return leq, meet
