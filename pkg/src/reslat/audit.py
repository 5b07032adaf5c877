"""Fixture audits: load a serialized table verbatim and check every law.

Fixtures transcribe published operation tables exactly as printed, defects
included; this layer carries the verdicts.  A small registry records what
each bundled fixture is claimed to be, and the audit prints PASS/CONFIRMED/
DISCREPANCY lines against the computed truth.  Reports are pure functions of
the file contents, so repeated audits are byte-identical.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .core import (
    Report,
    check_div,
    check_prel,
    is_chain,
    is_involutive,
    is_mv,
    scan_bl_identity,
    validate,
)
from .serialization import deserialize_relaxed

# claimed classification of each bundled fixture, keyed by file stem
FIXTURE_CLAIMS: dict[str, dict[str, bool]] = {
    "example3": {"bl": True, "mv": False, "chain": False},
    "example5_order3": {"bl": True, "mv": False, "chain": True},
    "example12": {"bl": True},
    "example13": {"bl": True},
    "example14": {"bl": True, "chain": True},
    "example15": {"bl": True, "chain": True},
}

_STRUCTURE_LAWS = (
    "reflexive",
    "antisymmetric",
    "transitive",
    "bot_least",
    "top_greatest",
    "meets_exist",
    "joins_exist",
    "odot_commutative",
    "odot_associative",
    "odot_identity",
    "odot_monotone",
    "adjunction",
)


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture (stem or filename)."""
    if not name.endswith(".reslat"):
        name += ".reslat"
    return Path(str(resources.files("reslat") / "fixtures" / name))


def bundled_fixtures() -> list[str]:
    return sorted(FIXTURE_CLAIMS)


def audit_fixture(path: str | Path) -> Report:
    """Load with relaxed residuum checking, run every law scan, and compare
    the outcome with the registered claims (when the fixture is known)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    loaded = deserialize_relaxed(text)
    rl = loaded.lattice

    report = Report()
    report.verdicts["loaded"] = True
    report.verdicts["residuum_matches_declared"] = (
        not loaded.mismatches and loaded.residuum_error is None
    )
    for x, y, declared, derived in loaded.mismatches[:5]:
        report.witnesses.append(("residuum_matches_declared", (x, y)))

    report.merge(validate(rl))
    structural = report.verdicts["lr1_bounded_lattice"]
    report.merge(check_prel(rl))
    report.merge(check_div(rl))
    report.merge(is_mv(rl))
    report.merge(scan_bl_identity(rl))
    report.verdicts["bl"] = (
        report.verdicts["residuated_lattice"]
        and report.verdicts["prel"]
        and report.verdicts["div"]
    )
    report.verdicts["mv_algebra"] = report.verdicts["residuated_lattice"] and report.verdicts["mv"]
    report.verdicts["chain"] = is_chain(rl)
    report.verdicts["involutive"] = is_involutive(rl)

    notes = []
    if loaded.residuum_error:
        notes.append(f"residuum not derivable: {loaded.residuum_error}")
    for x, y, declared, derived in loaded.mismatches[:5]:
        notes.append(
            "residuum mismatch at "
            f"({rl.names[x]},{rl.names[y]}): declared {rl.names[declared]}, derived {rl.names[derived]}"
        )
    if len(loaded.mismatches) > 5:
        notes.append(f"... {len(loaded.mismatches) - 5} more residuum mismatches")
    if not structural:
        notes.append("order is not a bounded lattice; law scans read the tables as given")

    claims = FIXTURE_CLAIMS.get(path.stem if path.suffix == ".reslat" else path.name)
    if claims:
        for prop, claimed in sorted(claims.items()):
            computed = report.verdicts["mv_algebra" if prop == "mv" else prop]
            status = "CONFIRMED" if computed == claimed else "DISCREPANCY"
            notes.append(
                f"claim {prop}={'true' if claimed else 'false'}: "
                f"computed {'true' if computed else 'false'} -> {status}"
            )
        report.verdicts["claims_confirmed"] = all(
            report.verdicts["mv_algebra" if prop == "mv" else prop] == claimed
            for prop, claimed in claims.items()
        )
    report.notes = "\n".join(notes)
    return report


def render_audit(name: str, report: Report, names: tuple[str, ...]) -> str:
    """Deterministic multi-line rendering of an audit report."""

    def fmt(t: tuple[int, ...]) -> str:
        return "(" + ",".join(names[i] for i in t) + ")"

    lines = [f"audit {name}"]
    order = (
        ["loaded", "residuum_matches_declared"]
        + list(_STRUCTURE_LAWS)
        + ["residuated_lattice", "prel", "div", "bl_identity", "bl", "mv", "mv_algebra",
           "chain", "involutive"]
    )
    for key in order:
        if key not in report.verdicts:
            continue
        ok = report.verdicts[key]
        wit = " ".join(fmt(t) for law, t in report.witnesses if law == key)
        lines.append(f"{'PASS' if ok else 'FAIL'} {key}" + (f" witnesses: {wit}" if wit else ""))
    if report.notes:
        lines.extend(report.notes.split("\n"))
    verdict = "ok" if audit_ok(report) else "violations found"
    lines.append(f"audit result: {verdict}")
    return "\n".join(lines)


def audit_ok(report: Report) -> bool:
    """True when the tables are a genuine residuated lattice, the declared
    implication matches the derived one, and every registered claim holds."""
    return (
        report.verdicts["residuated_lattice"]
        and report.verdicts["residuum_matches_declared"]
        and report.verdicts.get("claims_confirmed", True)
    )
