"""Catalog of the irreducible symmetric spaces of compact type.

Each of the 19 families (BDI covers both odd and even p+q) is encoded as
data: its ambient simple Lie algebra, restricted rank r, dimension, and the
projection of simple-root indices onto restricted indices.  The projection
sends node i to a restricted label in 1..r, or to 0 when the node restricts
to zero; applying it to a root's coefficient vector yields the restricted
coefficient vector.

The maps are catalog data, not derived from involutions.  Their correctness
is checked downstream by the dimension law r + #{positive roots with
nonzero restriction} = dim.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .rootsys import LieType, Root


class Family(enum.Enum):
    AI = "AI"
    AII = "AII"
    AIII = "AIII"
    BDI = "BDI"
    DIII = "DIII"
    CI = "CI"
    CII = "CII"
    EI = "EI"
    EII = "EII"
    EIII = "EIII"
    EIV = "EIV"
    EV = "EV"
    EVI = "EVI"
    EVII = "EVII"
    EVIII = "EVIII"
    EIX = "EIX"
    FI = "FI"
    FII = "FII"
    G = "G"

    def __str__(self) -> str:
        return self.value


# Families parametrized by a single n, by a pair (p, q), or by nothing.
N_FAMILIES = frozenset({Family.AI, Family.AII, Family.DIII, Family.CI})
PQ_FAMILIES = frozenset({Family.AIII, Family.BDI, Family.CII})
EXCEPTIONAL_FAMILIES = frozenset(Family) - N_FAMILIES - PQ_FAMILIES


class ParameterError(ValueError):
    """Raised when family parameters violate the catalog constraints."""


@dataclass(frozen=True)
class RestrictionMap:
    """proj[i-1] = j > 0 maps simple root i to restricted root j; 0 kills it."""

    l: int
    r: int
    proj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.proj) != self.l:
            raise ValueError("proj length must equal the ambient rank")
        if self.r > self.l:
            raise ValueError("restricted rank exceeds ambient rank")
        hit = set(self.proj) - {0}
        if hit != set(range(1, self.r + 1)):
            raise ValueError("every restricted index 1..r must be attained")


@dataclass(frozen=True)
class SymmetricSpace:
    family: Family
    params: tuple[int, ...]
    ambient: LieType
    r: int
    dimension: int
    label: str
    rmap: RestrictionMap

    def __str__(self) -> str:
        return f"{self.family}{self.params or ''}"


def _identity_map(l: int) -> RestrictionMap:
    return RestrictionMap(l, l, tuple(range(1, l + 1)))


def _even_nodes_map(l: int, r: int) -> RestrictionMap:
    """Node 2i -> i for i <= r, everything else -> 0."""
    proj = [0] * l
    for i in range(1, r + 1):
        proj[2 * i - 1] = i
    return RestrictionMap(l, r, tuple(proj))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def make_space(family: Family | str, n: int | None = None,
               p: int | None = None, q: int | None = None) -> SymmetricSpace:
    """Build a fully populated SymmetricSpace from family parameters.

    For (p, q) families the parameters are normalized so that p <= q.
    """
    fam = Family(family) if not isinstance(family, Family) else family
    if fam in N_FAMILIES:
        _require(n is not None, f"{fam} requires parameter n")
        _require(p is None and q is None, f"{fam} takes n, not (p, q)")
    elif fam in PQ_FAMILIES:
        _require(p is not None and q is not None, f"{fam} requires parameters p and q")
        _require(n is None, f"{fam} takes (p, q), not n")
        if p > q:
            p, q = q, p
    else:
        _require(n is None and p is None and q is None, f"{fam} takes no parameters")

    if fam is Family.AI:
        _require(n >= 2, "AI requires n >= 2")
        l = n - 1
        return SymmetricSpace(fam, (n,), LieType("A", l), l,
                              (n - 1) * (n + 2) // 2, f"SU({n})/SO({n})",
                              _identity_map(l))
    if fam is Family.AII:
        _require(n >= 2, "AII requires n >= 2")
        l = 2 * n - 1
        return SymmetricSpace(fam, (n,), LieType("A", l), n - 1,
                              (n - 1) * (2 * n + 1), f"SU({2 * n})/Sp({n})",
                              _even_nodes_map(l, n - 1))
    if fam is Family.AIII:
        _require(p >= 1, "AIII requires p >= 1")
        l, r = p + q - 1, p
        proj = [0] * l
        for i in range(1, r + 1):
            proj[i - 1] = i
            proj[l - i] = i
        return SymmetricSpace(fam, (p, q), LieType("A", l), r, 2 * p * q,
                              f"SU({p + q})/S(U_{p}xU_{q})",
                              RestrictionMap(l, r, tuple(proj)))
    if fam is Family.BDI:
        _require(p + q >= 4 and p >= 2, "BDI requires p, q >= 2 (ambient rank >= 2)")
        r = p
        if (p + q) % 2 == 1:
            l = (p + q - 1) // 2
            ambient = LieType("B", l)
            proj = tuple(i if i <= r else 0 for i in range(1, l + 1))
        else:
            l = (p + q) // 2
            ambient = LieType("D", l)
            if r == l:
                proj = tuple(range(1, l + 1))
            elif r == l - 1:
                proj = tuple(list(range(1, l - 1)) + [l - 1, l - 1])
            else:
                proj = tuple(i if i <= r else 0 for i in range(1, l + 1))
        return SymmetricSpace(fam, (p, q), ambient, r, p * q,
                              f"SO({p + q})/SO({p})xSO({q})",
                              RestrictionMap(l, r, proj))
    if fam is Family.DIII:
        _require(n >= 3, "DIII requires n >= 3")
        l, r = n, n // 2
        if l % 2 == 0:
            rmap = _even_nodes_map(l, r)
        else:
            proj = [0] * l
            for i in range(1, (l - 3) // 2 + 1):
                proj[2 * i - 1] = i
            proj[l - 2] = proj[l - 1] = r
            rmap = RestrictionMap(l, r, tuple(proj))
        return SymmetricSpace(fam, (n,), LieType("D", l), r, n * (n - 1),
                              f"SO({2 * n})/U({n})", rmap)
    if fam is Family.CI:
        _require(n >= 2, "CI requires n >= 2")
        return SymmetricSpace(fam, (n,), LieType("C", n), n, n * (n + 1),
                              f"Sp({n})/U({n})", _identity_map(n))
    if fam is Family.CII:
        _require(p >= 1, "CII requires p >= 1")
        l, r = p + q, p
        return SymmetricSpace(fam, (p, q), LieType("C", l), r, 4 * p * q,
                              f"Sp({p + q})/Sp({p})xSp({q})",
                              _even_nodes_map(l, r))

    exceptional = {
        Family.EI: (LieType("E", 6), 6, 42, "(e6(-78), sp(4))", None),
        Family.EII: (LieType("E", 6), 4, 40, "(e6(-78), su(6)+su(2))",
                     (1, 2, 3, 4, 3, 1)),
        Family.EIII: (LieType("E", 6), 2, 32, "(e6(-78), so(10)+R)",
                      (1, 2, 0, 0, 0, 1)),
        Family.EIV: (LieType("E", 6), 2, 26, "(e6(-78), f4)",
                     (1, 0, 0, 0, 0, 2)),
        Family.EV: (LieType("E", 7), 7, 70, "(e7(-133), su(8))", None),
        Family.EVI: (LieType("E", 7), 4, 64, "(e7(-133), so(12)+su(2))",
                     (1, 0, 2, 3, 0, 4, 0)),
        Family.EVII: (LieType("E", 7), 3, 54, "(e7(-133), e6+R)",
                      (1, 0, 0, 0, 0, 2, 3)),
        Family.EVIII: (LieType("E", 8), 8, 128, "(e8(-248), so(16))", None),
        Family.EIX: (LieType("E", 8), 4, 112, "(e8(-248), e7+su(2))",
                     (1, 0, 0, 0, 0, 2, 3, 4)),
        Family.FI: (LieType("F", 4), 4, 28, "(f4(-52), sp(3)+su(2))", None),
        # The r=1 map is degenerate: s = r = 1 regardless of its content.
        # Node 4 -> 1 is the choice validated by the dimension law.
        Family.FII: (LieType("F", 4), 1, 16, "(f4(-52), so(9))",
                     (0, 0, 0, 1)),
        Family.G: (LieType("G", 2), 2, 8, "(g2(-14), su(2)+su(2))", None),
    }
    ambient, r, dim, label, proj = exceptional[fam]
    rmap = _identity_map(ambient.rank) if proj is None else RestrictionMap(ambient.rank, r, proj)
    return SymmetricSpace(fam, (), ambient, r, dim, label, rmap)


def restrict(space: SymmetricSpace, root: Root) -> tuple[int, ...]:
    """Project an ambient coefficient vector onto restricted coefficients."""
    if len(root) != space.rmap.l:
        raise ValueError(f"root length {len(root)} != ambient rank {space.rmap.l}")
    out = [0] * space.r
    for m, j in zip(root, space.rmap.proj):
        if j:
            out[j - 1] += m
    return tuple(out)


def is_zero_restriction(space: SymmetricSpace, root: Root) -> bool:
    return not any(restrict(space, root))


@dataclass(frozen=True)
class CatalogEntry:
    family: Family
    constraints: str
    label: str
    proj_rule: str


def catalog() -> tuple[CatalogEntry, ...]:
    """One entry per Table row (19 rows; BDI merges the B and D ambients)."""
    return (
        CatalogEntry(Family.AI, "n >= 2", "SU(n)/SO(n)", "identity"),
        CatalogEntry(Family.AII, "n >= 2", "SU(2n)/Sp(n)",
                     "even nodes 2i -> i, odd nodes -> 0"),
        CatalogEntry(Family.AIII, "1 <= p <= q", "SU(p+q)/S(U_pxU_q)",
                     "i and l+1-i -> i for i <= p, middle -> 0"),
        CatalogEntry(Family.BDI, "2 <= p <= q", "SO(p+q)/SO(p)xSO(q)",
                     "i -> i for i <= p, rest -> 0 (fork merged when p = l-1)"),
        CatalogEntry(Family.DIII, "n >= 3", "SO(2n)/U(n)",
                     "even nodes 2i -> i (fork merged for odd n)"),
        CatalogEntry(Family.CI, "n >= 2", "Sp(n)/U(n)", "identity"),
        CatalogEntry(Family.CII, "1 <= p <= q", "Sp(p+q)/Sp(p)xSp(q)",
                     "even nodes 2i -> i for i <= p, rest -> 0"),
        CatalogEntry(Family.EI, "fixed", "(e6(-78), sp(4))", "identity"),
        CatalogEntry(Family.EII, "fixed", "(e6(-78), su(6)+su(2))", "(1,2,3,4,3,1)"),
        CatalogEntry(Family.EIII, "fixed", "(e6(-78), so(10)+R)", "(1,2,0,0,0,1)"),
        CatalogEntry(Family.EIV, "fixed", "(e6(-78), f4)", "(1,0,0,0,0,2)"),
        CatalogEntry(Family.EV, "fixed", "(e7(-133), su(8))", "identity"),
        CatalogEntry(Family.EVI, "fixed", "(e7(-133), so(12)+su(2))", "(1,0,2,3,0,4,0)"),
        CatalogEntry(Family.EVII, "fixed", "(e7(-133), e6+R)", "(1,0,0,0,0,2,3)"),
        CatalogEntry(Family.EVIII, "fixed", "(e8(-248), so(16))", "identity"),
        CatalogEntry(Family.EIX, "fixed", "(e8(-248), e7+su(2))", "(1,0,0,0,0,2,3,4)"),
        CatalogEntry(Family.FI, "fixed", "(f4(-52), sp(3)+su(2))", "identity"),
        CatalogEntry(Family.FII, "fixed", "(f4(-52), so(9))", "r = 1"),
        CatalogEntry(Family.G, "fixed", "(g2(-14), su(2)+su(2))", "identity"),
    )


def catalog_json() -> list[dict]:
    """Machine-readable catalog mirroring the table columns."""
    return [
        {
            "family": entry.family.value,
            "label": entry.label,
            "constraints": entry.constraints,
            "proj_rule": entry.proj_rule,
        }
        for entry in catalog()
    ]
