"""Ordinal product of residuated lattices: stack L2 on top of L1.

The top of L1 is identified with the bottom of L2; everything in L1 sits
below everything in L2, and the two operations act by cases.  Disjointness
is guaranteed by index renaming, so no side conditions are needed.
"""

from __future__ import annotations

from .core import ResLattice, validate
from .errors import InternalCheckError


def ordinal_product(l1: ResLattice, l2: ResLattice) -> ResLattice:
    """Glued algebra of size n1 + n2 - 1; validated before being returned.

    Case table: within either factor the original order/operations apply;
    across factors x <= y for x in L1, y in L2; x odot y = x for
    x in L1 minus its top; x -> y = y for incomparable x in L2, y in L1.
    A validation failure here is a bug, never a value.
    """
    n1, n2 = l1.n, l2.n
    n = n1 + n2 - 1
    glued = l1.top

    # ids: L1 keeps 0..n1-1, the non-bottom part of L2 gets n1.. in order
    to_new = {}
    nxt = n1
    for y in range(n2):
        if y == l2.bot:
            to_new[y] = glued
        else:
            to_new[y] = nxt
            nxt += 1
    from_new = {v: k for k, v in to_new.items() if v >= n1}
    from_new[glued] = l2.bot

    def in2(x: int) -> bool:
        return x >= n1 or x == glued

    names = []
    for x in range(n1):
        names.append(l1.names[x] if x == glued else "l:" + l1.names[x])
    for y in range(n2):
        if y != l2.bot:
            names.append("r:" + l2.names[y])
    # deep nesting can re-prefix into a clash; '~' stays serializable
    seen: dict[str, int] = {}
    for i, s in enumerate(names):
        seen[s] = seen.get(s, 0) + 1
        if seen[s] > 1:
            names[i] = f"{s}~{seen[s]}"

    leq = [[False] * n for _ in range(n)]
    odot = [[0] * n for _ in range(n)]
    imp = [[0] * n for _ in range(n)]
    top = to_new[l2.top]

    for x in range(n):
        for y in range(n):
            if x < n1 and y < n1:
                leq[x][y] = l1.leq[x][y]
            elif in2(x) and in2(y):
                leq[x][y] = l2.leq[from_new[x]][from_new[y]]
            else:
                leq[x][y] = x < n1  # L1 below L2

    for x in range(n):
        for y in range(n):
            if x < n1 and y < n1:
                odot[x][y] = l1.odot[x][y]
            elif in2(x) and in2(y):
                odot[x][y] = to_new[l2.odot[from_new[x]][from_new[y]]]
            else:
                odot[x][y] = min(x, y)  # the L1 operand, which has the lower id

    for x in range(n):
        for y in range(n):
            if leq[x][y]:
                imp[x][y] = top
            elif x < n1 and y < n1:
                imp[x][y] = l1.imp[x][y]
            elif in2(x) and in2(y):
                imp[x][y] = to_new[l2.imp[from_new[x]][from_new[y]]]
            else:
                # x in L2 above, y strictly inside L1
                imp[x][y] = y

    out = ResLattice(names, leq, odot, imp)
    rep = validate(out)
    if not rep.ok("residuated_lattice"):
        raise InternalCheckError(
            "ordinal product failed validation: "
            + ", ".join(k for k, v in rep.verdicts.items() if not v)
        )
    return out
