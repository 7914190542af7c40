"""Acceptance criteria, one test per criterion, each under its time limit.

Every criterion prints one PASS/FAIL line (collected in the terminal summary
under pytest, or printed directly by ``python tests/test_acceptance.py``).
"""

import time

import pytest

from hlnet import extra, group, topology, verify
from hlnet.graph import check_isomorphism_by_map, classify_induced, neighborhood
from golden_cases import CASES, GOLDEN_DIR, run

RESULTS: list[str] = []
SEEDS = (1, 2, 3)


def criterion(number, title, limit_s):
    def wrap(fn):
        def test():
            t0 = time.perf_counter()
            try:
                detail = fn()
            except AssertionError as exc:
                RESULTS.append(f"FAIL criterion {number:>2}: {title} ({exc})")
                raise
            elapsed = time.perf_counter() - t0
            if elapsed >= limit_s:
                RESULTS.append(f"FAIL criterion {number:>2}: {title} took {elapsed:.1f}s, limit {limit_s}s")
                pytest.fail(f"took {elapsed:.1f}s, limit {limit_s}s")
            RESULTS.append(f"PASS criterion {number:>2}: {title} [{elapsed:.2f}s < {limit_s}s] {detail or ''}".rstrip())

        test.__name__ = fn.__name__
        test.criterion = number
        return test

    return wrap


@criterion(1, "f-formula anchors", 1)
def test_f_formula_anchors():
    for n in range(3, 21):
        assert extra.f_value(n, 0) == n
        assert extra.f_value(n, 1) == 2 * n - 2
        assert extra.f_value(n, 2) == 3 * n - 5
        assert extra.f_value(n, 3) == 4 * n - 9
        assert extra.f_value(n, n - 2) == n * (n - 1) // 2 + 1
    return "n = 3..20"


@criterion(2, "exact oracle matches kappa_0(Q4)=4, kappa_1(Q3)=kappa_1(G84)=4, kappa_1(Q4)=6, kappa_2(Q5)=10", 600)
def test_exact_oracle():
    timings = []
    for G, g, value in [(topology.hypercube(4), 0, 4), (topology.hypercube(3), 1, 4), (topology.g84(), 1, 4),
                        (topology.hypercube(4), 1, 6)]:
        t0 = time.perf_counter()
        cert = extra.exact_extra_connectivity(G, g)
        took = time.perf_counter() - t0
        assert cert.value == value, (g, cert.value)
        assert took < 10, f"small case took {took:.1f}s"
        timings.append(took)
    q5 = topology.hypercube(5)
    cert = extra.exact_extra_connectivity(q5, 2)
    assert cert.value == 10 and cert.search_budget["maxCardinality"] >= 10
    assert extra.is_rg_cutset(q5, cert.cutset, 2)
    return f"slowest small case {max(timings):.2f}s"


@criterion(3, "small-side witnesses reach 3n-5 (g=2, n=5..8) and 4n-9 (g=3, n=6..8)", 60 * 36)
def test_witness_upper_bounds():
    instances = 0
    for n in range(5, 9):
        graphs = [topology.hypercube(n)] + [topology.random_hl(n, s) for s in SEEDS]
        for G in graphs:
            for g, want in [(2, 3 * n - 5), (3, 4 * n - 9)]:
                if g == 3 and n < 6:
                    continue
                t0 = time.perf_counter()
                cert = extra.upper_bound_by_small_side(G, g)
                assert time.perf_counter() - t0 < 60
                assert cert.value == want, (n, g, cert.value)
                assert extra.is_rg_cutset(G, cert.cutset, g)
                instances += 1
    return f"{instances} instance/g pairs"


@criterion(4, "tight connected sets of Q4 with |U| <= 5 are stars", 60)
def test_star_lemma():
    report = verify.verify_star_lemma(4, 4)
    assert report.ok, report.counterwitness
    return f"{sum(report.witness['tightSetsBySize'].values())} tight sets"


@criterion(5, "minimum vertex cuts of L_3 members and 5 seeded L_4 members isolate one vertex", 300)
def test_hyper_kappa():
    specs = [topology.parse_spec(t) for t in ("hypercube:n=3", "g84")]
    specs += [topology.parse_spec(f"random-hl:n=4,seed={s}") for s in (1, 2, 3, 4, 5)]
    report = verify.verify_hyper_kappa(specs)
    assert report.ok, report.counterwitness
    return f"{report.checks} minimum cuts"


@criterion(6, "unique common neighbours on Gamma(1,0), (1,1), (1,2), (2,0)", 60)
def test_unique_common_neighbor():
    for k, l in [(1, 0), (1, 1), (1, 2), (2, 0)]:
        report = verify.verify_unique_common_neighbor(k, l)
        assert report.ok, report.counterwitness
        assert report.witness["uniquePairs"] > 0
    return ""


@criterion(7, "tight connected sets of Gamma(2,0) for g <= 2 are stars", 300)
def test_component_lemma():
    report = verify.verify_component_lemma(2, 0, 2)
    assert report.ok, report.counterwitness
    return f"tight sets by g {report.witness['tightSetsByG']}"


@criterion(8, "Delta_n = VQ_n under the exponent map (n=1..10); rule = recursion (n=1..12)", 60)
def test_isomorphism():
    for n in range(1, 11):
        assert check_isomorphism_by_map(topology.delta(n), topology.vq_recursive(n), topology.vq_iso_map(n)), n
    for n in range(1, 13):
        assert topology.vq_by_rule(n).edges() == topology.vq_recursive(n).edges(), n
    return ""


@criterion(9, "{e} plus an Omega' prefix has |N| = f_n(g) in Delta_n", 60)
def test_varietal_construction():
    for n, g_max in [(9, 6), (10, 7), (11, 8)]:
        G = topology.delta(n)
        names = verify.varietal_leaves(n)
        s, t = divmod(n, 3)
        gens = group.generating_set(s, t)
        leaves = [gens.elements[gens.index_of(x)].index() for x in names]
        for g in range(g_max + 1):
            V = G.vertex_set([0] + leaves[:g])
            assert len(neighborhood(G, V)) == extra.f_value(n, g), (n, g)
            assert classify_induced(G, V).is_star
    return ""


@criterion(10, "all 1365 star leaf sets of Gamma(5,0) at g=11 have |N| >= 104", 600)
def test_counterexample():
    report = verify.verify_counterexample(5)
    assert report.ok, report.counterwitness
    w = report.witness
    assert w["leafSets"] == 1365 and w["minimum"] >= 104 == extra.f_value(15, 11) + 1
    return f"minimum {w['minimum']}"


@criterion(11, "inequality sweep for n <= 12", 1)
def test_inequality_sweep():
    report = extra.f_sum_inequality_check(12)
    assert report.ok, report.counterwitness
    return f"{report.checks} triples"


@criterion(12, "reruns reproduce the golden CLI outputs byte for byte", 300)
def test_determinism():
    for name, argv in CASES.items():
        first = run(argv)[1]
        assert first == (GOLDEN_DIR / name).read_text(), name
        assert run(argv)[1] == first, name
    return f"{len(CASES)} commands"


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(list(globals().items())):
        if name.startswith("test_") and hasattr(fn, "criterion"):
            try:
                fn()
            except Exception:
                failed += 1
    for line in sorted(RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        print(line)
    sys.exit(1 if failed else 0)
