"""Tour of the root-system layer.

Generates positive roots by Cartan-matrix closure, cross-checks the result
against the independent Euclidean-coordinate construction, and shows the
highest root of each exceptional system.
"""

from sympos import (
    LieType,
    cartan_matrix,
    epsilon_realization,
    height,
    highest_root,
    positive_roots,
)


def main() -> None:
    g2 = LieType("G", 2)
    print("Cartan matrix of G2:")
    for row in cartan_matrix(g2):
        print("  ", row)
    print("Positive roots of G2 (by height):")
    for root in positive_roots(g2).positive_roots:
        print(f"   height {height(root)}: {root}")
    print()

    print("Counts for the classical families, rank 2..8:")
    for fam in "ABCD":
        counts = [len(positive_roots(LieType(fam, l))) for l in range(2, 9)]
        print(f"   {fam}: {counts}")
    print()

    print("Closure generation vs Euclidean realization (must agree):")
    for t in [LieType("A", 5), LieType("B", 4), LieType("C", 4),
              LieType("D", 5), LieType("E", 6)]:
        closure = frozenset(positive_roots(t).positive_roots)
        euclid = epsilon_realization(t)
        print(f"   {t}: {len(closure)} roots, sets equal: {closure == euclid}")
    print()

    print("Highest roots of the exceptional systems:")
    for t in [LieType("E", 6), LieType("E", 7), LieType("E", 8),
              LieType("F", 4), LieType("G", 2)]:
        print(f"   {t}: {highest_root(t)}")


if __name__ == "__main__":
    main()
