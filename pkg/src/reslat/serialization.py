"""Bit-exact text format for residuated lattices.

Layout (LF line endings, '#' starts a comment anywhere, blank lines ignored):

    reslat <n>
    names <n whitespace-separated unique labels>
    leq
    <n rows of n 0/1 entries>
    odot
    <n rows of n labels>
    imp            # optional block
    <n rows of n labels>

On load the residuum is derived from (leq, odot); a declared imp block must
match it exactly or the load fails with ResiduumMismatch.  The relaxed loader
used by fixture audits records mismatches instead of failing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ResLattice, derive_residuum
from .errors import FormatError, MalformedTable, NotResiduated, ResiduumMismatch


def serialize(rl: ResLattice) -> str:
    """Render a lattice in the reslat format; exact inverse of deserialize."""
    for name in rl.names:
        if not name or any(ch.isspace() for ch in name) or "#" in name:
            raise FormatError(2, f"label {name!r} not serializable (whitespace or '#')")
    if len(set(rl.names)) != rl.n:
        raise FormatError(2, "labels must be unique")
    lines = [f"reslat {rl.n}", "names " + " ".join(rl.names)]
    lines.append("leq")
    for row in rl.leq:
        lines.append(" ".join("1" if v else "0" for v in row))
    lines.append("odot")
    for row in rl.odot:
        lines.append(" ".join(rl.names[v] for v in row))
    lines.append("imp")
    for row in rl.imp:
        lines.append(" ".join(rl.names[v] for v in row))
    return "\n".join(lines) + "\n"


@dataclass
class LoadedLattice:
    """Relaxed load result: the lattice with its declared implication table,
    the list of (x, y, declared, derived) residuum disagreements, and a note
    when the residuum could not be derived at all."""

    lattice: ResLattice
    mismatches: list[tuple[int, int, int, int]]
    residuum_error: str | None


def _tokenized_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _load(text: str):
    lines = _tokenized_lines(text)
    if not lines:
        raise FormatError(1, "empty file")
    pos = 0

    def next_line(what: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise FormatError(lines[-1][0] if lines else 1, f"unexpected end of file, wanted {what}")
        item = lines[pos]
        pos += 1
        return item

    lineno, toks = next_line("header")
    if len(toks) != 2 or toks[0] != "reslat" or not toks[1].isdigit():
        raise FormatError(lineno, "expected header 'reslat <n>'")
    n = int(toks[1])
    if n < 2:
        raise FormatError(lineno, "n must be at least 2")

    lineno, toks = next_line("names")
    if toks[0] != "names" or len(toks) != n + 1:
        raise FormatError(lineno, f"expected 'names' followed by {n} labels")
    names = toks[1:]
    if len(set(names)) != n:
        raise FormatError(lineno, "labels must be unique")
    index = {s: i for i, s in enumerate(names)}

    lineno, toks = next_line("leq")
    if toks != ["leq"]:
        raise FormatError(lineno, "expected 'leq' block")
    leq = []
    for _ in range(n):
        lineno, toks = next_line("leq row")
        if len(toks) != n or any(t not in ("0", "1") for t in toks):
            raise FormatError(lineno, f"expected {n} 0/1 entries")
        leq.append([t == "1" for t in toks])

    def label_block(header: str):
        lineno, toks = next_line(header)
        if toks != [header]:
            raise FormatError(lineno, f"expected '{header}' block")
        table = []
        for _ in range(n):
            rowno, row = next_line(f"{header} row")
            if len(row) != n:
                raise FormatError(rowno, f"expected {n} labels")
            try:
                table.append([index[t] for t in row])
            except KeyError as e:
                raise FormatError(rowno, f"unknown label {e.args[0]!r}") from None
        return table

    odot = label_block("odot")
    imp = None
    if pos < len(lines) and lines[pos][1] == ["imp"]:
        imp = label_block("imp")
    if pos < len(lines):
        raise FormatError(lines[pos][0], "trailing content")
    return names, leq, odot, imp


def deserialize(text: str) -> ResLattice:
    """Strict load: any declared imp must equal the derived residuum."""
    names, leq, odot, imp = _load(text)
    derived = derive_residuum(leq, odot)
    if imp is not None:
        for x in range(len(names)):
            for y in range(len(names)):
                if imp[x][y] != derived[x][y]:
                    raise ResiduumMismatch(x, y, imp[x][y], derived[x][y])
    try:
        return ResLattice(names, leq, odot, imp if imp is not None else derived)
    except MalformedTable as e:
        raise FormatError(1, str(e)) from None


def deserialize_relaxed(text: str) -> LoadedLattice:
    """Load for auditing: keep the declared imp, report residuum problems."""
    names, leq, odot, imp = _load(text)
    mismatches: list[tuple[int, int, int, int]] = []
    residuum_error = None
    derived = None
    error: NotResiduated | None = None
    try:
        derived = derive_residuum(leq, odot)
    except NotResiduated as e:
        residuum_error = str(e)
        error = e
    if imp is None:
        if derived is None:
            assert error is not None
            raise error
        imp = derived
    elif derived is not None:
        for x in range(len(names)):
            for y in range(len(names)):
                if imp[x][y] != derived[x][y]:
                    mismatches.append((x, y, imp[x][y], derived[x][y]))
    try:
        rl = ResLattice(names, leq, odot, imp)
    except MalformedTable as e:
        raise FormatError(1, str(e)) from None
    return LoadedLattice(lattice=rl, mismatches=mismatches, residuum_error=residuum_error)
