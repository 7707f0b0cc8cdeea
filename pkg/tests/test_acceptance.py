"""Exit criteria.  Everything is exact: no tolerances beyond the stated widths."""

import json
import random
from fractions import Fraction
from math import isqrt

import pytest

from sturmroots.cli import main
from sturmroots.isolation import isolate_roots, refine_root
from sturmroots.oracle import RootSpec, generate_instance, local_epsilon, min_root_gap, oracle_count, random_rational
from sturmroots.parsing import parse_coeffs
from sturmroots.poly import Polynomial, derivative, evaluate, poly_from_coeffs
from sturmroots.sturm import (
    V,
    DegenerateEndpointError,
    EndpointPolicy,
    Interval,
    count_roots_half_open,
    generalized_sequence,
    is_multiple_root,
    sign,
    sign_sequence,
    sturm_sequence,
)

F1 = poly_from_coeffs([1, 0, -2, 0, 1])
F2 = poly_from_coeffs([-3, 7, -5, 1])
F2_ROOTS = RootSpec.of([(1, 2), (3, 1)])
STRICT, SQUAREFREE = EndpointPolicy.STRICT, EndpointPolicy.SQUAREFREE
BUDGET = 8


def seeded(n, *, min_degree=1, start=0, max_budget=BUDGET, **kwargs):
    """First ``n`` generated instances of degree >= ``min_degree``."""
    out, seed = [], start
    while len(out) < n:
        budget = 2 + seed % (max_budget - 1)
        spec, f = generate_instance(seed, budget, **kwargs)
        if f.degree >= min_degree:
            out.append((seed, spec, f))
        seed += 1
    return out


def random_poly(rng, degree):
    return Polynomial(tuple(random_rational(rng) for _ in range(degree + 1)))


def test_ac1_golden_example_one(criterion):
    seq = sturm_sequence(F1)
    checks = [
        seq.polys == (F1, poly_from_coeffs([0, -4, 0, 4]), poly_from_coeffs([-1, 0, 1])),
        len(seq.padded()) == 5,
        sign_sequence(seq, -2, padded=True) == (1, -1, 1, 0, 0),
        sign_sequence(seq, 0, padded=True) == (1, 0, -1, 0, 0),
        V(F1, -2) == 2,
        V(F1, 0) == 1,
    ]
    assert criterion("AC1 golden example 1 (x^4 - 2x^2 + 1)", all(checks), f"{sum(checks)}/{len(checks)} checks")


def test_ac2_golden_example_two(criterion):
    checks = [
        sturm_sequence(F2).polys[2] == poly_from_coeffs([Fraction(-8, 9), Fraction(8, 9)]),
        (V(F2, 1), V(F2, 2), V(F2, 3)) == (0, 1, 0),
        count_roots_half_open(F2, Interval(2, 3), STRICT) == 1,
        count_roots_half_open(F2, Interval(1, 3), SQUAREFREE) == 1 == oracle_count(F2_ROOTS, Interval(1, 3)),
    ]
    try:
        count_roots_half_open(F2, Interval(1, 3), STRICT)
        checks.append(False)
    except DegenerateEndpointError as exc:
        checks.append(exc.endpoint == "a")
    assert criterion("AC2 golden example 2 (x^3 - 5x^2 + 7x - 3)", all(checks), f"{sum(checks)}/{len(checks)} checks")


def test_ac3_variations_vanish_at_multiple_roots(criterion):
    instances = seeded(200, require_multiple=True)
    checked = failures = 0
    for _, spec, f in instances:
        for r in spec.multiple:
            checked += 1
            failures += not (is_multiple_root(f, r) and V(f, r) == 0)
    ok = failures == 0 and len(instances) == 200
    assert criterion("AC3 V(f, r) = 0 at multiple roots", ok, f"{len(instances)} instances, {checked} roots, {failures} failures")


def _endpoint(rng, spec):
    if spec.values and rng.random() < 0.4:
        return rng.choice(spec.values)
    return random_rational(rng)


def test_ac4_oracle_equivalence(criterion):
    rng = random.Random(4)
    cases = mismatches = 0
    for _, spec, f in seeded(500):
        for _ in range(5):
            a, b = sorted((_endpoint(rng, spec), _endpoint(rng, spec)))
            iv = Interval(a, b)
            cases += 1
            mismatches += count_roots_half_open(f, iv, SQUAREFREE) != oracle_count(spec, iv)
            while is_multiple_root(f, a) or is_multiple_root(f, b):
                a, b = sorted((_endpoint(rng, spec), _endpoint(rng, spec)))
            iv = Interval(a, b)
            cases += 1
            mismatches += count_roots_half_open(f, iv, STRICT) != oracle_count(spec, iv)
    assert criterion("AC4 oracle equivalence, both policies", mismatches == 0, f"{cases} counts, {mismatches} mismatches")


def test_ac5_lemma_suite(criterion):
    results = {}

    # recurrence conformance, degree 2..10
    instances = seeded(200, min_degree=2, start=10_000, max_budget=10)
    ok = True
    for _, _, f in instances:
        polys = sturm_sequence(f).polys
        for i in range(len(polys) - 2):
            q, r = divmod(polys[i], polys[i + 1])
            ok &= r == -polys[i + 2] and polys[i] == q * polys[i + 1] - polys[i + 2]
        ok &= 2 <= f.degree <= 10
    results["recurrence"] = ok

    # propagation of zeroes at every constructed root
    ok = True
    for _, spec, f in seeded(200, start=20_000, require_multiple=True):
        polys = sturm_sequence(f).polys
        for c in spec.values:
            vals = [evaluate(p, c) for p in polys]
            for i in range(len(vals) - 1):
                if vals[i] == 0 and vals[i + 1] == 0:
                    ok &= all(v == 0 for v in vals[i + 2 :])
    results["propagation"] = ok

    # node identity: polynomial congruence for every node, pointwise at rational zeros of p_1
    ok = True
    for _, _, f in seeded(200, min_degree=2, start=30_000):
        polys = sturm_sequence(f).polys + (Polynomial(),)
        for i in range(1, len(polys) - 1):
            ok &= ((polys[i - 1] + polys[i + 1]) % polys[i]).is_zero()
    rng = random.Random(5)
    pointwise = 0
    for _ in range(200):
        crit = list({random_rational(rng) for _ in range(rng.randint(1, 4))})
        fprime = Polynomial.constant(random_rational(rng) or 1)
        for s in crit:
            fprime = fprime * Polynomial((-s, 1))
        f = Polynomial((random_rational(rng),) + tuple(c / (i + 1) for i, c in enumerate(fprime.coeffs)))
        polys = sturm_sequence(f).polys + (Polynomial(),)
        for s in crit:
            if evaluate(polys[1], s) == 0 and evaluate(polys[2], s) != 0:
                pointwise += 1
                ok &= evaluate(polys[0], s) == -evaluate(polys[2], s)
    results["node identity"] = ok and pointwise > 0

    # simple-root alternation with a certified epsilon
    ok = True
    count = 0
    for _, spec, f in seeded(400, start=40_000):
        if not spec.simple:
            continue
        count += 1
        p0, p1 = sturm_sequence(f).polys[:2]
        for zeta in spec.simple:
            eps = local_epsilon(spec, f, zeta)
            ok &= eps <= min_root_gap(spec) / 2
            ok &= sign(evaluate(p0, zeta - eps)) == -sign(evaluate(p1, zeta - eps)) != 0
            ok &= sign(evaluate(p0, zeta + eps)) == sign(evaluate(p1, zeta + eps)) != 0
    results["simple-root alternation"] = ok and count >= 200

    failed = [k for k, v in results.items() if not v]
    detail = ", ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in results.items())
    assert criterion("AC5 lemma suite", not failed, detail + f"; {pointwise} pointwise nodes, {count} simple-root instances")


def test_ac6_scaling_laws(criterion):
    rng = random.Random(6)
    _, spec, f = seeded(1, start=7)[0]
    points = [random_rational(rng) for _ in range(10)] + spec.values
    lam_ok = True
    for _ in range(50):
        lam = Fraction(rng.randint(1, 50), rng.randint(1, 12))
        lam_ok &= all(V(f * lam, c) == V(f, c) for c in points)
    gen_ok = True
    for _ in range(100):
        a, b, g = random_poly(rng, rng.randint(0, 4)), random_poly(rng, rng.randint(0, 4)), random_poly(rng, rng.randint(0, 3))
        if b.is_zero() or g.is_zero():
            b, g = b + 1, g + 1
        lhs = generalized_sequence(g * a, g * b)
        rhs = generalized_sequence(a, b)
        gen_ok &= lhs.polys == tuple(g * p for p in rhs.polys)
    assert criterion("AC6 scaling laws", lam_ok and gen_ok, f"positive scalar: {lam_ok}, common factor: {gen_ok}")


def test_ac7_isolation(criterion):
    eps = Fraction(1, 10**6)
    ok = True
    for _, spec, f in seeded(200, start=50_000):
        reports = isolate_roots(f)
        ok &= len(reports) == len(spec.roots)
        ok &= all(u.b <= v.a for u, v in zip(reports, reports[1:]))
        for r in spec.values:
            ok &= sum(r in rep.interval for rep in reports) == 1
        for rep in reports:
            fine = refine_root(f, rep, eps)
            ok &= fine.interval.width <= eps and fine.variations_left - fine.variations_right == 1
            ok &= rep.a <= fine.a and fine.b <= rep.b
            ok &= sum(r in fine.interval for r in spec.values) == 1
    sqrt2 = poly_from_coeffs([-2, 0, 1])
    fine = refine_root(sqrt2, isolate_roots(sqrt2)[1], eps)
    digits = 12
    lo = Fraction(isqrt(2 * 10 ** (2 * digits)), 10**digits)
    brackets = fine.a < lo + Fraction(1, 10**digits) and lo < fine.b and fine.interval.width <= eps
    brackets &= fine.a < Fraction(141421356, 10**8) + Fraction(1, 10**8) and Fraction(141421356, 10**8) < fine.b
    assert criterion("AC7 isolation soundness/completeness and refinement", ok and brackets, f"sqrt(2) in ({fine.a}, {fine.b}]")


def _cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


def test_ac8_cli(criterion, capsys):
    checks = {}
    code, out = _cli(capsys, "seq", "--expr", "x^4-2x^2+1", "--padded")
    lines = out.splitlines()
    checks["seq padded"] = code == 0 and len(lines) == 5 and lines[3].startswith("p3 = 0 ") and lines[4].startswith("p4 = 0 ")
    code, out = _cli(capsys, "seq", "--expr", "x^3-5x^2+7x-3")
    checks["seq 8/9x - 8/9"] = code == 0 and out.splitlines()[2].startswith("p2 = 8/9x - 8/9")
    code, out = _cli(capsys, "count", "--expr", "x^3-5x^2+7x-3", "-a", "2", "-b", "3", "--policy", "strict")
    checks["count (2,3]"] = code == 0 and out.strip() == "1"
    code, out = _cli(capsys, "count", "--expr", "x^3-5x^2+7x-3", "-a", "1", "-b", "3", "--policy", "strict")
    checks["count (1,3] exit 4"] = code == 4
    code, out = _cli(capsys, "eval", "--expr", "x^4-2x^2+1", "-c", "0")
    checks["eval c=0"] = code == 0 and "signs = (1, 0, -1)" in out and "V = 1" in out

    round_trip = True
    for expr in ("x^4-2x^2+1", "x^3-5x^2+7x-3", "x", "x^2-2"):
        _, out = _cli(capsys, "seq", "--expr", expr, "--padded", "--format", "json")
        doc = json.loads(out)
        seq = sturm_sequence(parse_coeffs(",".join(doc["input"])))
        round_trip &= tuple(parse_coeffs(",".join(cs)) if cs else Polynomial() for cs in doc["sequence"]) == seq.padded()
        _, again = _cli(capsys, "seq", "--coeffs", ",".join(doc["input"]), "--padded", "--format", "json")
        round_trip &= json.loads(again) == doc
    checks["json round trip"] = round_trip
    failed = [k for k, v in checks.items() if not v]
    assert criterion("AC8 CLI conformance", not failed, "failed: " + ", ".join(failed) if failed else f"{len(checks)} checks")
