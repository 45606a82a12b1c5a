"""Positive root systems of the simple complex Lie algebras.

Roots are represented as integer coefficient vectors over a fixed simple
system, so every computation downstream is exact integer arithmetic.  Two
independent generators are provided: closure generation from the Cartan
matrix (the workhorse) and an explicit Euclidean-coordinate enumeration
(the cross-check oracle for the classical families and E6).

Node numbering follows the classical Dynkin diagrams: for B the last node
is short, for C the last node is long, for F4 the last two nodes are short,
for G2 the first node is short, and the E-series branch node (labelled 2)
is attached to node 4 of the chain 1-3-4-5-6(-7)(-8).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

Root = tuple[int, ...]

FAMILIES = frozenset("ABCDEFG")

# |positive roots| for each family as a function of the rank.
_COUNTS = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


@dataclass(frozen=True, order=True)
class LieType:
    """A simple Lie algebra family tag with its rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        l = self.rank
        ok = {
            "A": l >= 1,
            "B": l >= 2,
            "C": l >= 2,
            # D2 and D3 are degenerate but valid; low-rank BDI needs them.
            "D": l >= 2,
            "E": l in (6, 7, 8),
            "F": l == 4,
            "G": l == 2,
        }[self.family]
        if not ok:
            raise ValueError(f"rank {l} is not valid for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse a string like ``A3``, ``E6`` or ``G2``."""
        text = text.strip().upper()
        if len(text) < 2 or text[0] not in FAMILIES or not text[1:].isdigit():
            raise ValueError(f"cannot parse Lie type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def positive_root_count(self) -> int:
        return _COUNTS[self.family](self.rank)

    @property
    def is_irreducible(self) -> bool:
        return not (self.family == "D" and self.rank == 2)


@dataclass(frozen=True)
class RootSystem:
    """All positive roots of a simple Lie algebra, in canonical order.

    The order is by height, then lexicographically on coefficients, so
    repeated generation is byte-for-byte reproducible.
    """

    type: LieType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.positive_roots)

    def __contains__(self, root: Root) -> bool:
        return root in set(self.positive_roots)


def height(root: Root) -> int:
    return sum(root)


def cartan_matrix(lie_type: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix a_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)."""
    fam, l = lie_type.family, lie_type.rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if fam == "A":
        for i in range(l - 1):
            bond(i, i + 1)
    elif fam == "B":
        for i in range(l - 2):
            bond(i, i + 1)
        bond(l - 2, l - 1, -2, -1)  # alpha_l short
    elif fam == "C":
        for i in range(l - 2):
            bond(i, i + 1)
        bond(l - 2, l - 1, -1, -2)  # alpha_l long
    elif fam == "D":
        if l == 2:
            pass  # two orthogonal nodes
        else:
            for i in range(l - 3):
                bond(i, i + 1)
            bond(l - 3, l - 2)
            bond(l - 3, l - 1)
    elif fam == "E":
        # chain 1-3-4-5-..., branch node 2 attached to node 4
        chain = [0] + list(range(2, l))
        for u, v in zip(chain, chain[1:]):
            bond(u, v)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)  # alpha_3, alpha_4 short
        bond(2, 3)
    elif fam == "G":
        bond(0, 1, -1, -3)  # alpha_1 short
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def positive_roots(lie_type: LieType) -> RootSystem:
    """Generate all positive roots by height-by-height string closure.

    Starting from the simple roots, a candidate beta + alpha_i is admitted
    iff q = p - <beta, alpha_i^v> > 0, where p is the largest integer with
    beta - p*alpha_i still a root.
    """
    l = lie_type.rank
    cartan = cartan_matrix(lie_type)
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    found: set[Root] = set(simple)
    layer: list[Root] = list(simple)
    while layer:
        nxt: set[Root] = set()
        for beta in layer:
            for i in range(l):
                pairing = sum(m * cartan[j][i] for j, m in enumerate(beta))
                p = 0
                down = beta
                while True:
                    down = tuple(m - int(j == i) for j, m in enumerate(down))
                    if down in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    nxt.add(tuple(m + int(j == i) for j, m in enumerate(beta)))
        nxt -= found
        found |= nxt
        layer = sorted(nxt)
    ordered = tuple(sorted(found, key=lambda r: (height(r), r)))
    return RootSystem(lie_type, cartan, ordered)


def highest_root(lie_type: LieType) -> Root:
    """The unique positive root dominating all others coefficient-wise."""
    if not lie_type.is_irreducible:
        raise ValueError(f"{lie_type} is reducible; no highest root")
    roots = positive_roots(lie_type).positive_roots
    top = roots[-1]
    assert all(all(m <= t for m, t in zip(r, top)) for r in roots)
    return top


# ---------------------------------------------------------------------------
# Euclidean-coordinate realization (independent oracle)
# ---------------------------------------------------------------------------

_EPSILON_FAMILIES = frozenset("ABCD") | {"E"}


def _simple_roots_euclidean(lie_type: LieType) -> list[tuple[Fraction, ...]]:
    fam, l = lie_type.family, lie_type.rank

    def e(*idx: int) -> tuple[Fraction, ...]:
        dim = l + 1 if fam == "A" else l
        v = [Fraction(0)] * dim
        for i in idx:
            v[i] += 1
        return tuple(v)

    def diff(i: int, j: int) -> tuple[Fraction, ...]:
        v = list(e(i))
        v[j] -= 1
        return tuple(v)

    if fam == "A":
        return [diff(i, i + 1) for i in range(l)]
    if fam == "B":
        return [diff(i, i + 1) for i in range(l - 1)] + [e(l - 1)]
    if fam == "C":
        return [diff(i, i + 1) for i in range(l - 1)] + [e(l - 1, l - 1)]
    if fam == "D":
        if l == 2:
            return [diff(0, 1), e(0, 1)]
        return [diff(i, i + 1) for i in range(l - 1)] + [e(l - 2, l - 1)]
    if fam == "E" and l == 6:
        # chain nodes 1,3,4,5,6 are e_i - e_{i+1}; branch node 2 is
        # e_4 + e_5 + e_6 (the embedding of E6 into R^6).
        return [diff(0, 1), e(3, 4, 5), diff(1, 2), diff(2, 3), diff(3, 4), diff(4, 5)]
    raise ValueError(f"no Euclidean realization encoded for {lie_type}")


def _positive_roots_euclidean(lie_type: LieType) -> list[tuple[Fraction, ...]]:
    fam, l = lie_type.family, lie_type.rank
    dim = l + 1 if fam == "A" else l

    def vec(plus: tuple[int, ...] = (), minus: tuple[int, ...] = ()) -> tuple[Fraction, ...]:
        v = [Fraction(0)] * dim
        for i in plus:
            v[i] += 1
        for i in minus:
            v[i] -= 1
        return tuple(v)

    out: list[tuple[Fraction, ...]] = []
    if fam == "A":
        out = [vec((i,), (j,)) for i, j in combinations(range(dim), 2)]
    elif fam == "B":
        out = [vec((i,)) for i in range(l)]
        out += [vec((i,), (j,)) for i, j in combinations(range(l), 2)]
        out += [vec((i, j)) for i, j in combinations(range(l), 2)]
    elif fam == "C":
        out = [vec((i, i)) for i in range(l)]
        out += [vec((i,), (j,)) for i, j in combinations(range(l), 2)]
        out += [vec((i, j)) for i, j in combinations(range(l), 2)]
    elif fam == "D":
        out = [vec((i,), (j,)) for i, j in combinations(range(l), 2)]
        out += [vec((i, j)) for i, j in combinations(range(l), 2)]
    elif fam == "E" and l == 6:
        out = [vec((i,), (j,)) for i, j in combinations(range(6), 2)]
        out += [vec((i, j, k)) for i, j, k in combinations(range(6), 3)]
        out.append(vec(tuple(range(6))))
    else:
        raise ValueError(f"no Euclidean realization encoded for {lie_type}")
    return out


def _solve_exact(columns: list[tuple[Fraction, ...]], target: tuple[Fraction, ...]) -> Root:
    """Solve sum_j x_j * columns[j] = target exactly; x must be integral."""
    n = len(columns)
    dim = len(target)
    aug = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(dim)]
    row = 0
    pivots: list[int] = []
    for col in range(n):
        piv = next((r for r in range(row, dim) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular simple-root matrix")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(dim):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(row)
        row += 1
    if any(aug[r][n] != 0 for r in range(row, dim)):
        raise ValueError("target not in the span of the simple roots")
    coeffs = [aug[pivots[j]][n] for j in range(n)]
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError("non-integral coefficients")
    return tuple(int(c) for c in coeffs)


def epsilon_realization(lie_type: LieType) -> frozenset[Root]:
    """Positive roots via explicit Euclidean coordinates, as coefficient
    vectors over the simple roots.

    Supported for the classical families A, B, C, D and for E6.  Serves as
    an oracle independent of the Cartan-matrix closure generator.
    """
    if lie_type.family not in "ABCD" and (lie_type.family, lie_type.rank) != ("E", 6):
        raise ValueError(f"epsilon realization not supported for {lie_type}")
    simple = _simple_roots_euclidean(lie_type)
    out = set()
    for v in _positive_roots_euclidean(lie_type):
        coeffs = _solve_exact(simple, v)
        if not all(c >= 0 for c in coeffs):
            raise AssertionError(f"negative coefficients for {v}")
        out.add(coeffs)
    return frozenset(out)
