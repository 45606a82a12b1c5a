"""Reproduce the summary table of s-values for all nineteen families.

For each family the partial-positivity index s is computed two independent
ways: by enumerating restricted roots, and from the closed-form column.
At the sample parameters below the two agree everywhere.
"""

from sympos import Family, closed_form_s, make_space, report

SAMPLE_PARAMS = {
    Family.AI: {"n": 5},
    Family.AII: {"n": 4},
    Family.AIII: {"p": 3, "q": 4},
    Family.BDI: {"p": 3, "q": 4},
    Family.DIII: {"n": 7},
    Family.CI: {"n": 4},
    Family.CII: {"p": 2, "q": 3},
}


def main() -> None:
    header = f"{'family':8}{'label':28}{'r':>3}{'dim':>5}{'s':>5}{'closed form':>13}"
    print(header)
    print("-" * len(header))
    for family in Family:
        space = make_space(family, **SAMPLE_PARAMS.get(family, {}))
        rep = report(space)
        closed = closed_form_s(space, "corrected")
        print(f"{family.value:8}{space.label:28}{space.r:>3}"
              f"{space.dimension:>5}{rep.s:>5}{closed:>13}")
        assert rep.s == closed

    print()
    print("One case in full detail (EII):")
    rep = report(make_space(Family.EII))
    print(f"   s_k vector: {rep.s_k}")
    print(f"   maximized at k = {list(rep.argmax)}, s = {rep.s}")
    print(f"   restricted multiplicities: {dict(sorted(rep.multiplicities.items()))}")


if __name__ == "__main__":
    main()
