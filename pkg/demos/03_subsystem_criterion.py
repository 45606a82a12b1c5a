"""The corank-one maximality criterion.

A subsystem obtained by killing the k-th simple-root coefficient is a
maximal closed subsystem exactly when the highest root has coefficient 1
at position k.  This demo reads the answer off the highest root and then
confirms one positive and one negative instance by explicit closure.
"""

from sympos import LieType, highest_root, l1_maximal_indices, positive_roots


def closure(seed, ambient):
    closed = set(seed) | {tuple(-m for m in r) for r in seed}
    frontier = list(closed)
    while frontier:
        a = frontier.pop()
        for b in list(closed):
            c = tuple(x + y for x, y in zip(a, b))
            if c in ambient and c not in closed:
                closed.add(c)
                closed.add(tuple(-m for m in c))
                frontier.append(c)
    return closed


def main() -> None:
    for t in [LieType("A", 4), LieType("B", 3), LieType("D", 4),
              LieType("E", 6), LieType("F", 4), LieType("G", 2)]:
        mu = highest_root(t)
        print(f"{t}: highest root {mu}, maximal indices {sorted(l1_maximal_indices(t))}")

    print()
    t = LieType("B", 3)
    pos = set(positive_roots(t).positive_roots)
    ambient = pos | {tuple(-m for m in r) for r in pos}
    for k in (1, 3):
        sub = {r for r in ambient if r[k - 1] == 0}
        outside = ambient - sub
        regenerates = all(closure(sub | {beta}, ambient) == ambient
                          for beta in outside)
        verdict = "maximal" if regenerates else "not maximal"
        print(f"B3, coefficient {k} killed: {len(sub)} roots survive, "
              f"subsystem is {verdict} (highest-root coefficient "
              f"{highest_root(t)[k - 1]})")


if __name__ == "__main__":
    main()
