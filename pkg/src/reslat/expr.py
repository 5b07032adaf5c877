"""Expression language for rings and algebras, plus the evaluator.

Grammar (whitespace-insensitive; INT >= 2):

    ring  := "Z" INT | ring "x" ring | ring "[X]/(X^" INT ")" | "(" ring ")"
    alg   := "Id(" ring ")" | "L" INT | "ord(" alg "," alg ")"
           | "prod(" alg {"," alg} ")" | "load(" QUOTED_PATH ")" | "(" alg ")"

The postfix quotient binds tighter than "x"; product chains parse into a
single flat factor list.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .census import lukasiewicz_chain
from .core import ResLattice, direct_product
from .errors import ParseError, SizeCapExceeded
from .ideals import ideal_lattice
from .ordinal import ordinal_product
from .rings import DEFAULT_SIZE_CAP, PolyQuot, Product, RingExpr, Zn, build_ring, expr_size


@dataclass(frozen=True)
class IdOf:
    ring: RingExpr


@dataclass(frozen=True)
class Luk:
    k: int


@dataclass(frozen=True)
class Ord:
    left: "AlgebraExpr"
    right: "AlgebraExpr"


@dataclass(frozen=True)
class ProductAlg:
    factors: tuple["AlgebraExpr", ...]


@dataclass(frozen=True)
class Load:
    path: str


AlgebraExpr = Union[IdOf, Luk, Ord, ProductAlg, Load]


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def take(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            self.fail(literal)

    def fail(self, *expected: str) -> None:
        self.skip_ws()
        found = self.text[self.pos : self.pos + 8] or "end of input"
        raise ParseError(self.pos, expected, found)

    def integer(self, minimum: int = 2) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail(f"integer >= {minimum}")
        value = int(self.text[start : self.pos])
        if value < minimum:
            self.pos = start
            self.fail(f"integer >= {minimum}")
        return value

    def quoted(self) -> str:
        self.skip_ws()
        if not self.take('"'):
            self.fail('"'
                      )
        start = self.pos
        end = self.text.find('"', start)
        if end < 0:
            self.fail('closing "')
        self.pos = end + 1
        return self.text[start:end]

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_ring(c: _Cursor) -> RingExpr:
    factors = [_parse_ring_postfix(c)]
    while c.take("x"):
        factors.append(_parse_ring_postfix(c))
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def _parse_ring_postfix(c: _Cursor) -> RingExpr:
    expr = _parse_ring_atom(c)
    while c.peek("["):
        c.expect("[X]/(X^")
        k = c.integer(2)
        c.expect(")")
        expr = PolyQuot(expr, k)
    return expr


def _parse_ring_atom(c: _Cursor) -> RingExpr:
    if c.take("Z"):
        return Zn(c.integer(2))
    if c.take("("):
        inner = _parse_ring(c)
        c.expect(")")
        return inner
    c.fail("Z<int>", "(")
    raise AssertionError  # unreachable


def parse_ring_expr(text: str) -> RingExpr:
    c = _Cursor(text)
    expr = _parse_ring(c)
    if not c.at_end():
        c.fail("end of input")
    return expr


def _parse_alg(c: _Cursor) -> AlgebraExpr:
    if c.take("Id("):
        ring = _parse_ring(c)
        c.expect(")")
        return IdOf(ring)
    if c.take("ord("):
        left = _parse_alg(c)
        c.expect(",")
        right = _parse_alg(c)
        c.expect(")")
        return Ord(left, right)
    if c.take("prod("):
        factors = [_parse_alg(c)]
        while c.take(","):
            factors.append(_parse_alg(c))
        c.expect(")")
        return ProductAlg(tuple(factors))
    if c.take("load("):
        path = c.quoted()
        c.expect(")")
        return Load(path)
    if c.take("L"):
        return Luk(c.integer(2))
    if c.take("("):
        inner = _parse_alg(c)
        c.expect(")")
        return inner
    c.fail("Id(", "L<int>", "ord(", "prod(", "load(", "(")
    raise AssertionError  # unreachable


def parse_expr(text: str) -> AlgebraExpr:
    c = _Cursor(text)
    ast = _parse_alg(c)
    if not c.at_end():
        c.fail("end of input")
    return ast


def format_ring_expr(expr: RingExpr) -> str:
    if isinstance(expr, Zn):
        return f"Z{expr.n}"
    if isinstance(expr, Product):
        parts = []
        for f in expr.factors:
            s = format_ring_expr(f)
            parts.append(f"({s})" if isinstance(f, Product) else s)
        return " x ".join(parts)
    if isinstance(expr, PolyQuot):
        base = format_ring_expr(expr.base)
        if isinstance(expr.base, Product):
            base = f"({base})"
        return f"{base}[X]/(X^{expr.k})"
    raise TypeError(f"not a ring expression: {expr!r}")


def format_algebra_expr(ast: AlgebraExpr) -> str:
    if isinstance(ast, IdOf):
        return f"Id({format_ring_expr(ast.ring)})"
    if isinstance(ast, Luk):
        return f"L{ast.k}"
    if isinstance(ast, Ord):
        return f"ord({format_algebra_expr(ast.left)}, {format_algebra_expr(ast.right)})"
    if isinstance(ast, ProductAlg):
        return "prod(" + ", ".join(format_algebra_expr(f) for f in ast.factors) + ")"
    if isinstance(ast, Load):
        return f'load("{ast.path}")'
    raise TypeError(f"not an algebra expression: {ast!r}")


def eval_expr(
    ast: AlgebraExpr,
    size_cap: int = DEFAULT_SIZE_CAP,
    base_dir: str | Path | None = None,
) -> ResLattice:
    """Evaluate an algebra expression to a concrete ResLattice.

    The cap applies to ring carriers and to every intermediate lattice.
    Load paths resolve against ``base_dir`` (default: the process cwd).
    """
    if isinstance(ast, IdOf):
        return ideal_lattice(build_ring(ast.ring, size_cap=size_cap)).lattice
    if isinstance(ast, Luk):
        if ast.k > size_cap:
            raise SizeCapExceeded(f"chain of {ast.k} elements exceeds cap {size_cap}")
        return lukasiewicz_chain(ast.k)
    if isinstance(ast, Ord):
        left = eval_expr(ast.left, size_cap, base_dir)
        right = eval_expr(ast.right, size_cap, base_dir)
        _check_lattice_cap(left.n + right.n - 1, size_cap)
        return ordinal_product(left, right)
    if isinstance(ast, ProductAlg):
        factors = [eval_expr(f, size_cap, base_dir) for f in ast.factors]
        size = 1
        for f in factors:
            size *= f.n
        _check_lattice_cap(size, size_cap)
        return direct_product(factors)
    if isinstance(ast, Load):
        from .serialization import deserialize

        path = Path(ast.path)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return deserialize(path.read_text(encoding="utf-8"))
    raise TypeError(f"not an algebra expression: {ast!r}")


def _check_lattice_cap(size: int, cap: int) -> None:
    if size > cap:
        raise SizeCapExceeded(f"lattice would have {size} elements, cap is {cap}")


def ring_expr_size(expr: RingExpr) -> int:
    return expr_size(expr)
