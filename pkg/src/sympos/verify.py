"""Self-verification suite: every invariant the library promises, run as a
batch with a machine-readable summary."""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import LieType, epsilon_realization, highest_root, positive_roots
from .spaces import EXCEPTIONAL_FAMILIES, Family, make_space
from .svalue import (
    EXCEPTION_LEDGER,
    closed_form_s,
    discrepancy_report,
    iter_spaces,
    restricted_multiplicities,
    s_value,
    s_vector,
)

# Per-family s_k vectors computed case by case in the source derivation.
S_K_ORACLES: dict[Family, tuple[int, ...]] = {
    Family.EI: (26, 21, 17, 13, 17, 26),
    Family.EII: (16, 19, 9, 11),
    Family.EIII: (8, 11),
    Family.EIV: (10, 10),
    Family.EV: (37, 28, 23, 17, 20, 28, 43),
    Family.EVI: (31, 17, 11, 22),
    Family.EVII: (21, 12, 27),
    Family.EVIII: (50, 36, 30, 22, 24, 31, 45, 71),
    Family.EIX: (34, 15, 29, 55),
    Family.FI: (13, 8, 8, 13),
    Family.G: (3, 3),
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _classical_types(max_rank: int):
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 2)):
        for l in range(lo, max_rank + 1):
            yield LieType(fam, l)


def _exceptional_types():
    yield from (LieType("E", 6), LieType("E", 7), LieType("E", 8),
                LieType("F", 4), LieType("G", 2))


def check_root_counts(max_rank: int) -> CheckResult:
    bad = [str(t) for t in list(_classical_types(max_rank)) + list(_exceptional_types())
           if len(positive_roots(t)) != t.positive_root_count]
    return CheckResult("root_counts", not bad, ",".join(bad))


def check_generator_equivalence(max_rank: int) -> CheckResult:
    types = [t for t in _classical_types(min(max_rank, 8))] + [LieType("E", 6)]
    bad = [str(t) for t in types
           if epsilon_realization(t) != frozenset(positive_roots(t).positive_roots)]
    return CheckResult("generator_equivalence", not bad, ",".join(bad))


def check_highest_root_dominance(max_rank: int) -> CheckResult:
    bad = []
    for t in list(_classical_types(max_rank)) + list(_exceptional_types()):
        if not t.is_irreducible:
            continue
        mu = highest_root(t)
        roots = positive_roots(t).positive_roots
        if mu not in roots or any(any(m > c for m, c in zip(r, mu)) for r in roots):
            bad.append(str(t))
    return CheckResult("highest_root_dominance", not bad, ",".join(bad))


def _parametric_sweep(max_rank: int):
    """All parametric instances whose ambient rank is at most max_rank."""
    ranges = {
        Family.AI: max_rank + 1,           # ambient rank n - 1
        Family.AII: (max_rank + 1) // 2,   # ambient rank 2n - 1
        Family.AIII: max_rank + 1,         # ambient rank p + q - 1
        Family.BDI: 2 * max_rank + 1,      # ambient rank about (p + q)/2
        Family.DIII: max_rank,             # ambient rank n
        Family.CI: max_rank,               # ambient rank n
        Family.CII: max_rank,              # ambient rank p + q
    }
    for fam, hi in ranges.items():
        for space in iter_spaces(fam, 1, hi):
            if space.ambient.rank <= max_rank:
                yield space


def check_dimension_law(max_rank: int) -> CheckResult:
    spaces = list(_parametric_sweep(max_rank))
    spaces += [make_space(f) for f in sorted(EXCEPTIONAL_FAMILIES, key=lambda f: f.value)]
    bad = [str(sp) for sp in spaces
           if sp.r + sum(restricted_multiplicities(sp).values()) != sp.dimension]
    return CheckResult("dimension_law", not bad, ",".join(bad))


def check_s_k_oracles() -> CheckResult:
    bad = []
    for fam, expected in S_K_ORACLES.items():
        got = s_vector(make_space(fam))
        if got != expected:
            bad.append(f"{fam.value}: {got} != {expected}")
    if s_value(make_space(Family.FII)) != 1:
        bad.append("FII: s != 1")
    return CheckResult("s_k_oracles", not bad, "; ".join(bad))


def check_closed_form_agreement(max_rank: int) -> CheckResult:
    bad = [f"{sp}: {s_value(sp)} != {closed_form_s(sp, 'corrected')}"
           for sp in _parametric_sweep(max_rank)
           if s_value(sp) != closed_form_s(sp, "corrected")]
    return CheckResult("closed_form_agreement", not bad, "; ".join(bad))


def check_discrepancy_scan(max_rank: int) -> CheckResult:
    found = set()
    seen_families = set()
    for sp in _parametric_sweep(max_rank):
        seen_families.add(sp.family)
        if s_value(sp) != closed_form_s(sp, "table"):
            found.add((sp.family, sp.params))
    expected = {key for key in EXCEPTION_LEDGER if key[0] in seen_families}
    ok = found == expected
    detail = "" if ok else f"found {sorted(found)} expected {sorted(expected)}"
    return CheckResult("discrepancy_scan", ok, detail)


def run_verification(max_rank: int = 10) -> list[CheckResult]:
    return [
        check_root_counts(max_rank),
        check_generator_equivalence(max_rank),
        check_highest_root_dominance(max_rank),
        check_dimension_law(max_rank),
        check_s_k_oracles(),
        check_closed_form_agreement(max_rank),
        check_discrepancy_scan(max_rank),
    ]
