"""Finite commutative unital rings built from expressions.

Supported shapes: Z_n, finite direct products, and truncated polynomial
quotients base[X]/(X^k).  Element ids are dense integers 0..size-1; all
arithmetic is computed on demand from the encoding, so no size^2 tables are
ever stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .core import Report, _pairs, _scan, _triples
from .errors import MalformedSpec, SizeCapExceeded

DEFAULT_SIZE_CAP = 4096


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class Product:
    factors: tuple["RingExpr", ...]


@dataclass(frozen=True)
class PolyQuot:
    """base[X]/(X^k): polynomials over the base ring truncated at X^k = 0."""

    base: "RingExpr"
    k: int


RingExpr = Union[Zn, Product, PolyQuot]


def expr_size(expr: RingExpr) -> int:
    """Carrier size of the denoted ring; raises MalformedSpec on bad shapes."""
    if isinstance(expr, Zn):
        if expr.n < 2:
            raise MalformedSpec(f"Z_n requires n >= 2, got {expr.n}")
        return expr.n
    if isinstance(expr, Product):
        if not expr.factors:
            raise MalformedSpec("product requires at least one factor")
        size = 1
        for f in expr.factors:
            size *= expr_size(f)
        return size
    if isinstance(expr, PolyQuot):
        if expr.k < 2:
            raise MalformedSpec(f"polynomial quotient requires k >= 2, got {expr.k}")
        return expr_size(expr.base) ** expr.k
    raise MalformedSpec(f"not a ring expression: {expr!r}")


class FinRing:
    """Concrete finite commutative ring with unit.

    Subclasses provide total add/mul/neg on element ids plus human labels.
    Instances are immutable and compare equal iff built from equal
    expressions.
    """

    expr: RingExpr
    size: int
    zero: int
    one: int

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def label(self, a: int) -> str:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinRing):
            return NotImplemented
        return self.expr == other.expr

    def __hash__(self) -> int:
        return hash(self.expr)

    def __repr__(self) -> str:
        from .expr import format_ring_expr

        return f"FinRing({format_ring_expr(self.expr)}, size={self.size})"


class _ZnRing(FinRing):
    def __init__(self, expr: Zn):
        self.expr = expr
        self.n = expr.n
        self.size = expr.n
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def label(self, a):
        return str(a)


class _ProductRing(FinRing):
    def __init__(self, expr: Product, factors: list[FinRing]):
        self.expr = expr
        self.factors = factors
        self.sizes = [f.size for f in factors]
        size = 1
        for s in self.sizes:
            size *= s
        self.size = size
        self._coords: list[tuple[int, ...]] | None = None
        self.zero = self.encode([f.zero for f in factors])
        self.one = self.encode([f.one for f in factors])

    def decode(self, i: int) -> tuple[int, ...]:
        # O(size) id->coordinate table, built once on first use
        if self._coords is None:
            coords = []
            for x in range(self.size):
                out = []
                for s in reversed(self.sizes):
                    x, r = divmod(x, s)
                    out.append(r)
                coords.append(tuple(reversed(out)))
            self._coords = coords
        return self._coords[i]

    def encode(self, t) -> int:
        i = 0
        for s, c in zip(self.sizes, t):
            i = i * s + c
        return i

    def add(self, a, b):
        ta, tb = self.decode(a), self.decode(b)
        return self.encode([f.add(x, y) for f, x, y in zip(self.factors, ta, tb)])

    def mul(self, a, b):
        ta, tb = self.decode(a), self.decode(b)
        return self.encode([f.mul(x, y) for f, x, y in zip(self.factors, ta, tb)])

    def neg(self, a):
        return self.encode([f.neg(x) for f, x in zip(self.factors, self.decode(a))])

    def label(self, a):
        return "(" + ",".join(f.label(x) for f, x in zip(self.factors, self.decode(a))) + ")"


class _PolyQuotRing(FinRing):
    """Coefficient vectors digit-encoded base-|base|, little-endian in X."""

    def __init__(self, expr: PolyQuot, base: FinRing):
        self.expr = expr
        self.base = base
        self.k = expr.k
        self.size = base.size ** expr.k
        self.zero = 0
        self.one = base.one  # constant polynomial 1 is digit 0
        self._coeffs: list[tuple[int, ...]] | None = None

    def decode(self, i: int) -> tuple[int, ...]:
        # O(size) id->coefficient table, built once on first use
        if self._coeffs is None:
            table = []
            for x in range(self.size):
                out = []
                for _ in range(self.k):
                    x, r = divmod(x, self.base.size)
                    out.append(r)
                table.append(tuple(out))
            self._coeffs = table
        return self._coeffs[i]

    def encode(self, coeffs) -> int:
        i = 0
        for c in reversed(coeffs):
            i = i * self.base.size + c
        return i

    def add(self, a, b):
        ta, tb = self.decode(a), self.decode(b)
        return self.encode([self.base.add(x, y) for x, y in zip(ta, tb)])

    def neg(self, a):
        return self.encode([self.base.neg(x) for x in self.decode(a)])

    def mul(self, a, b):
        base = self.base
        ta, tb = self.decode(a), self.decode(b)
        out = [base.zero] * self.k
        for i, x in enumerate(ta):
            if x == base.zero:
                continue
            for j, y in enumerate(tb):
                if i + j >= self.k:
                    break
                out[i + j] = base.add(out[i + j], base.mul(x, y))
        return self.encode(out)

    def label(self, a):
        base = self.base
        terms = []
        for i, c in enumerate(self.decode(a)):
            if c == base.zero:
                continue
            cl = base.label(c)
            if "+" in cl or "X" in cl:
                cl = f"({cl})"  # keep nested indeterminates unambiguous
            if i == 0:
                terms.append(cl)
                continue
            power = "X" if i == 1 else f"X^{i}"
            terms.append(power if c == base.one else cl + power)
        return "+".join(terms) if terms else base.label(base.zero)


def build_ring(expr: RingExpr, size_cap: int = DEFAULT_SIZE_CAP) -> FinRing:
    """Construct the ring a RingExpr denotes.

    Raises MalformedSpec on structural problems and SizeCapExceeded when the
    carrier would exceed ``size_cap``.
    """
    size = expr_size(expr)
    if size > size_cap:
        raise SizeCapExceeded(f"ring has {size} elements, cap is {size_cap}")
    return _build(expr)


def _build(expr: RingExpr) -> FinRing:
    if isinstance(expr, Zn):
        return _ZnRing(expr)
    if isinstance(expr, Product):
        return _ProductRing(expr, [_build(f) for f in expr.factors])
    if isinstance(expr, PolyQuot):
        return _PolyQuotRing(expr, _build(expr.base))
    raise MalformedSpec(f"not a ring expression: {expr!r}")


def ring_units(ring: FinRing) -> set[int]:
    """Exactly {a : some b has a*b = 1}, found by exhaustive search."""
    units = set()
    for a in range(ring.size):
        for b in range(ring.size):
            if ring.mul(a, b) == ring.one:
                units.add(a)
                break
    return units


def euler_totient(n: int) -> int:
    """Count of 1 <= x <= n with gcd(x, n) = 1; the independent unit count for Z_n."""
    return sum(1 for x in range(1, n + 1) if gcd(x, n) == 1)


def ring_axiom_report(ring: FinRing) -> Report:
    """Exhaustive O(size^3) scan of the commutative-unital-ring axioms."""
    n = ring.size
    r = Report()
    _scan(r, "add_commutative", _pairs(n), lambda t: ring.add(t[0], t[1]) == ring.add(t[1], t[0]))
    _scan(
        r,
        "add_associative",
        _triples(n),
        lambda t: ring.add(ring.add(t[0], t[1]), t[2]) == ring.add(t[0], ring.add(t[1], t[2])),
    )
    _scan(r, "add_identity", ((x,) for x in range(n)), lambda t: ring.add(ring.zero, t[0]) == t[0])
    _scan(
        r,
        "add_inverse",
        ((x,) for x in range(n)),
        lambda t: ring.add(t[0], ring.neg(t[0])) == ring.zero,
    )
    _scan(r, "mul_commutative", _pairs(n), lambda t: ring.mul(t[0], t[1]) == ring.mul(t[1], t[0]))
    _scan(
        r,
        "mul_associative",
        _triples(n),
        lambda t: ring.mul(ring.mul(t[0], t[1]), t[2]) == ring.mul(t[0], ring.mul(t[1], t[2])),
    )
    _scan(r, "mul_identity", ((x,) for x in range(n)), lambda t: ring.mul(ring.one, t[0]) == t[0])
    _scan(
        r,
        "distributive",
        _triples(n),
        lambda t: ring.mul(t[0], ring.add(t[1], t[2]))
        == ring.add(ring.mul(t[0], t[1]), ring.mul(t[0], t[2])),
    )
    r.verdicts["zero_ne_one"] = ring.zero != ring.one
    return r
