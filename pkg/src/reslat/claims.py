"""Closed-form predictions about ideal lattices, audited against computation.

Several ring families come with published closed-form descriptions of their
ideal lattices (counts, unique minimal ideals, chain shapes).  This module
evaluates each prediction that applies to a given ring expression and reports
PASS/FAIL against the exhaustively computed ideals; computation is never
adjusted to match a prediction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import Ideal, all_ideals, classify_ideals, ideal_lattice, principal_ideal
from .core import check_div, check_prel
from .rings import FinRing, PolyQuot, Product, RingExpr, Zn, build_ring


@dataclass(frozen=True)
class ClaimResult:
    name: str
    claimed: str
    computed: str
    ok: bool

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"CLAIM {self.name}: claimed {self.claimed}, computed {self.computed} -> {status}"


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _prime_power_product_exponents(expr: RingExpr) -> list[int] | None:
    """Exponents alpha_i when the ring is Z_n or a product of Z_{p^a} with
    pairwise distinct primes; None when the shape does not apply."""
    if isinstance(expr, Zn):
        return [e for _, e in factorize(expr.n)]
    if isinstance(expr, Product):
        seen = []
        exps = []
        for f in expr.factors:
            if not isinstance(f, Zn):
                return None
            fac = factorize(f.n)
            if len(fac) != 1:
                return None
            p, e = fac[0]
            if p in seen:
                return None
            seen.append(p)
            exps.append(e)
        return exps
    return None


def ring_claims(
    expr: RingExpr,
    ring: FinRing,
    ideals: list[Ideal],
    minimal_flags: list[bool],
    size_cap: int,
) -> list[ClaimResult]:
    """Every applicable closed-form prediction, compared against the computed
    ideal list.  Empty when no known family matches the expression."""
    out: list[ClaimResult] = []
    count = len(ideals)

    exps = _prime_power_product_exponents(expr)
    if exps is not None:
        expected = 1
        for a in exps:
            expected *= a + 1
        out.append(
            ClaimResult(
                "ideal_count_product_of_exponents",
                f"{expected} (= prod(alpha_i + 1))",
                str(count),
                count == expected,
            )
        )
        return out

    if isinstance(expr, PolyQuot) and isinstance(expr.base, Zn) and expr.k == 2:
        n = expr.base.n
        fac = factorize(n)
        r = len(fac)
        squarefree = all(e == 1 for _, e in fac)

        if r >= 2:
            crt = 1
            for p, e in fac:
                crt *= len(all_ideals(build_ring(PolyQuot(Zn(p**e), 2), size_cap=size_cap)))
            out.append(
                ClaimResult(
                    "crt_factor_count_crosscheck",
                    f"{crt} (= product over prime-power factors)",
                    str(count),
                    count == crt,
                )
            )

        if squarefree and r >= 2:
            out.append(
                ClaimResult(
                    "ideal_count_2^r_plus_1",
                    f"{2**r + 1} (= 2^{r} + 1)",
                    str(count),
                    count == 2**r + 1,
                )
            )
            # the element X has id n: coefficient vector (0, 1) base-n
            x_ideal = principal_ideal(ring, expr.base.n)
            minimals = [i for i, f in zip(ideals, minimal_flags) if f]
            computed = "{" + ", ".join(i.label() for i in minimals) + "}"
            ok = len(minimals) == 1 and minimals[0].members == x_ideal.members
            out.append(
                ClaimResult(
                    "unique_minimal_ideal_(X)",
                    "{(X)}",
                    computed,
                    ok,
                )
            )
            meta = ideal_lattice(ring)
            bl = check_prel(meta.lattice).ok("prel") and check_div(meta.lattice).ok("div")
            out.append(
                ClaimResult(
                    "ideal_lattice_is_bl",
                    "true",
                    str(bl).lower(),
                    bl,
                )
            )

        if r == 1 and fac[0][1] >= 2:
            rr = fac[0][1]
            leq_total = all(
                ideals[a].issubset(ideals[b]) or ideals[b].issubset(ideals[a])
                for a in range(count)
                for b in range(count)
            )
            out.append(
                ClaimResult(
                    "chain_of_length_r_plus_2",
                    f"chain with {rr + 2} ideals",
                    f"{'chain' if leq_total else 'not a chain'} with {count} ideals",
                    leq_total and count == rr + 2,
                )
            )
    return out
