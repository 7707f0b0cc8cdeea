"""Print sequences, sign vectors and counts for the two classic fixtures.

    python scripts/worked_examples.py
"""

from sturmroots import (
    DegenerateEndpointError,
    EndpointPolicy,
    Interval,
    V,
    count_roots_half_open,
    parse_expression,
    sign_sequence,
    sturm_sequence,
)


def show(expr, points, intervals):
    f = parse_expression(expr)
    seq = sturm_sequence(f)
    print(f"f = {f}")
    for i, p in enumerate(seq.padded()):
        print(f"  p{i} = {p}")
    for c in points:
        print(f"  sigma(P_f({c})) = {sign_sequence(seq, c, padded=True)}   V = {V(f, c)}")
    for a, b in intervals:
        for policy in EndpointPolicy:
            try:
                n = count_roots_half_open(f, Interval(a, b), policy)
            except DegenerateEndpointError as exc:
                n = f"refused ({exc.endpoint} = {exc.value} is a multiple root)"
            print(f"  roots in ({a}, {b}] [{policy.value}]: {n}")
    print()


if __name__ == "__main__":
    show("x^4-2x^2+1", [-2, 0, 1], [(-2, 0), (-2, 1)])
    show("x^3-5x^2+7x-3", [1, 2, 3], [(2, 3), (1, 3)])
