"""Text reports for thread validation, solver results and property batteries."""

from descol.models import ChiResult, Obstruction
from descol.seqspace import format_lasso


def _banner(title: str) -> list[str]:
    return ["=" * 60, title, "=" * 60]


def format_thread_report(result: dict) -> str:
    """Format validate_thread output as text."""
    lines = _banner("THREAD VALIDATION REPORT")
    if result["valid"]:
        lines.append(
            f"\nRESULT: VALID (dense up to length {result['achievable_length']})"
        )
    else:
        problems = len(result["errors"]) + len(result["undominated"])
        lines.append(f"\nRESULT: INVALID ({problems} violations)")

    if result["errors"]:
        lines.append(f"\n--- ERRORS ({len(result['errors'])}) ---")
        for e in result["errors"]:
            lines.append(f"  ERROR: {e}")

    if result["undominated"]:
        lines.append(f"\n--- UNDOMINATED ({len(result['undominated'])}) ---")
        for a in result["undominated"]:
            lines.append(f"  ERROR: no row extends {a or '(empty)'!r}")

    if result["pending"]:
        lines.append(
            f"\n{len(result['pending'])} longer strings need more depth to be dominated"
        )
    return "\n".join(lines)


def format_chi_report(result: ChiResult, oracle: int | None = None) -> str:
    lines = [f"chi {result.chi}"]
    if result.lower_bound_certificate is not None:
        clique = " ".join(str(v + 1) for v in result.lower_bound_certificate)
        lines.append(f"clique {clique}")
    lines.append("witness " + " ".join(str(c) for c in result.witness.colours))
    if oracle is not None:
        verdict = "agrees" if oracle == result.chi else "DISAGREES"
        lines.append(f"oracle {oracle} ({verdict})")
    return "\n".join(lines)


def format_verify_report(bad_edges: list[tuple[int, int]], colours_used: int) -> str:
    if not bad_edges:
        return f"proper ({colours_used} colours)"
    lines = [f"improper: {len(bad_edges)} monochromatic edges"]
    lines.extend(f"  edge {u + 1} {v + 1}" for u, v in bad_edges)
    return "\n".join(lines)


def format_sweep_report(result: dict) -> str:
    """One line per alphabet, then the verdict."""
    lines = []
    for alphabet, counts in result["details"]["alphabets"].items():
        lines.append(
            f"alphabet {alphabet}: {counts['lassos']} lassos, {counts['pairs']} pairs"
        )
    if result["ok"]:
        lines.append(f"proper on all {result['checked']} pairs")
    else:
        lines.append(f"FAILED on {len(result['failures'])} pairs")
        lines.extend(f"  {f}" for f in result["failures"])
    return "\n".join(lines)


def format_battery_report(results: list[dict]) -> str:
    lines = _banner("PROPERTY CHECKS")
    for r in results:
        status = "ok" if r["ok"] else "FAIL"
        lines.append(f"  {r['name']:<12} {status:<5} {r['checked']} checked")
    failed = [r for r in results if not r["ok"]]
    for r in failed:
        lines.append(f"\n--- {r['name'].upper()} FAILURES ({len(r['failures'])}) ---")
        lines.extend(f"  {f}" for f in r["failures"])
    if failed:
        lines.append(f"\nRESULT: {len(failed)} of {len(results)} checks failed")
    else:
        lines.append(f"\nRESULT: all {len(results)} checks passed")
    return "\n".join(lines)


def format_obstruction(w: Obstruction, holds: bool) -> str:
    if w.family == "g1":
        first, second = format_lasso(w.first), format_lasso(w.second)
        where = "G_1"
    else:
        first, second = w.first, w.second
        where = f"level {w.level}"
    verdict = "adjacent, same prefix" if holds else "NOT a valid witness"
    return "\n".join([
        f"family {w.family}, depth {w.depth}, {w.colours} colours",
        f"first  {first}",
        f"second {second}",
        f"{where}: {verdict}",
    ])
