import networkx as nx
import pytest

from hlnet import topology
from hlnet.graph import CompactGraph, check_isomorphism_by_map, girth
from hlnet.topology import Matching, SpecError, parse_spec


def _nx(G):
    H = nx.Graph(G.edges())
    H.add_nodes_from(range(G.order))
    return H


def test_hypercube_shapes():
    assert topology.hypercube(1).edges() == [(0, 1)]
    assert topology.hypercube(3).size == 12
    assert topology.hypercube(4).size == 32
    assert topology.hypercube(3).label(5) == "101"
    with pytest.raises(ValueError):
        topology.hypercube(0)


def test_compose_small_cases():
    k1 = topology.trivial()
    k2 = topology.compose_hl(k1, k1, Matching.identity(1))
    assert k2.edges() == [(0, 1)]
    c4 = topology.compose_hl(k2, k2, Matching.explicit([1, 0]))
    assert c4.regular_degree() == 2 and nx.is_isomorphic(_nx(c4), nx.cycle_graph(4))
    q2 = topology.hypercube(2)
    assert topology.compose_hl(q2, q2, Matching.identity(4)) == topology.hypercube(3)
    assert topology.compose_hl(q2, q2, Matching.explicit(topology.TWISTED_C4)) == topology.g84()


def test_compose_rejects_order_mismatch():
    with pytest.raises(ValueError):
        topology.compose_hl(topology.hypercube(1), topology.hypercube(2), Matching.identity(2))


def test_compose_restricts_to_inputs():
    G0, G1 = topology.random_hl(3, 1), topology.g84()
    G = topology.compose_hl(G0, G1, Matching.seeded(8, 4))
    assert G.induced(range(8)).edges() == G0.edges()
    assert G.induced(range(8, 16)).edges() == G1.edges()
    assert all(sum(1 for w in G.neighbors(v) if (w >= 8) != (v >= 8)) == 1 for v in range(16))


def test_g84_is_not_q3():
    assert not nx.is_isomorphic(_nx(topology.g84()), _nx(topology.hypercube(3)))
    assert nx.is_isomorphic(_nx(topology.g84()), _nx(topology.vq_recursive(3)))


def test_random_hl_is_deterministic_and_regular():
    assert topology.random_hl(6, 42) == topology.random_hl(6, 42)
    for n in range(1, 7):
        G = topology.random_hl(n, 7)
        assert G.order == 2 ** n and G.regular_degree() == n
    assert girth(topology.random_hl(5, 3)) == 4
    assert nx.is_isomorphic(_nx(topology.random_hl(2, 99)), nx.cycle_graph(4))


def test_random_hl_three_dimensional_members():
    q3, g84 = _nx(topology.hypercube(3)), _nx(topology.g84())
    seen = set()
    for seed in range(100):
        H = _nx(topology.random_hl(3, seed))
        if nx.is_isomorphic(H, q3):
            seen.add("q3")
        else:
            assert nx.is_isomorphic(H, g84)
            seen.add("g84")
    assert seen == {"q3", "g84"}


def test_vq_examples():
    assert topology.vq_recursive(1).edges() == [(0, 1)]
    assert topology.vq_recursive(2).regular_degree() == 2
    vq3 = topology.vq_recursive(3)
    assert vq3.has_edge(vq3.index_of("010"), vq3.index_of("111"))
    rule = topology.vq_by_rule(3)
    assert sorted(rule.label(v) for v in rule.neighbors(rule.index_of("000"))) == ["001", "010", "100"]
    assert "011" in [rule.label(v) for v in rule.neighbors(rule.index_of("110"))]


def test_vq_rule_equals_recursive():
    for n in range(1, 13):
        assert topology.vq_by_rule(n).edges() == topology.vq_recursive(n).edges()


def test_delta_and_gamma():
    assert topology.delta_shape(9) == (3, 0)
    assert topology.delta(9).order == 512 and topology.delta(9).regular_degree() == 9
    assert topology.gamma(5, 0).order == 32768
    assert check_isomorphism_by_map(topology.gamma(0, 4), topology.hypercube(4), list(range(16)))


def test_iso_map():
    m = topology.vq_iso_map(3)
    labels = topology.delta(3).labels
    vq = topology.vq_recursive(3)
    assert vq.label(m[labels.index("e")]) == "000"
    assert vq.label(m[labels.index("a1b1")]) == "100"
    for n in range(1, 11):
        assert check_isomorphism_by_map(topology.delta(n), topology.vq_recursive(n), topology.vq_iso_map(n))


@pytest.mark.parametrize("text,canonical", [
    ("gamma:k=5,l=0", "gamma:k=5,l=0"),
    ("gamma:l=0,k=5", "gamma:k=5,l=0"),
    ("random-hl:seed=42,n=6", "random-hl:n=6,seed=42"),
    ("vq-rule:n=4", "vq:n=4"),
    ("vq-recursive:n=4", "vq:n=4"),
    ("g84", "g84"),
    ("compose(hypercube:n=2,hypercube:n=2,explicit:0.1.3.2)", "compose(hypercube:n=2,hypercube:n=2,explicit:0.1.3.2)"),
])
def test_spec_canonical_form(text, canonical):
    spec = parse_spec(text)
    assert spec.canonical() == canonical
    assert parse_spec(spec.canonical()).build() == spec.build()


def test_compose_spec_builds_g84():
    assert parse_spec("compose(hypercube:n=2,hypercube:n=2,explicit:0.1.3.2)").build() == topology.g84()
    assert parse_spec("compose(g84,hypercube:n=3,random:seed=5)").dimension == 4


@pytest.mark.parametrize("text", ["hypercube", "hypercube:n=0", "hypercube:n=21", "gamma:k=0,l=0", "torus:n=3",
                                  "hypercube:m=3", "hypercube:n=x", "random-hl:n=3,seed=-1",
                                  "compose(hypercube:n=2,hypercube:n=3,identity)",
                                  "compose(hypercube:n=2,hypercube:n=2,explicit:0.1)"])
def test_bad_specs(text):
    with pytest.raises(SpecError):
        parse_spec(text)


@pytest.mark.parametrize("k,l,b,half", [(1, 0, None, (0, 2)), (1, 2, None, (0, 4)), (2, 0, None, (1, 2)),
                                         (0, 3, None, (0, 2)), (2, 1, "b1", (1, 3)), (2, 0, "a1b1", (1, 2))])
def test_hl_decompose(k, l, b, half):
    report = topology.hl_decompose(k, l, b)
    assert report.ok, report.counterwitness
    assert report.witness["subgroupOrder"] * 2 == report.witness["groupOrder"]
    assert (report.witness["halfShape"]["k"], report.witness["halfShape"]["l"]) == half
    assert report.witness["crossEdges"] == report.witness["subgroupOrder"]


def test_hl_decompose_rejects_rotation_square():
    with pytest.raises(ValueError):
        topology.hl_decompose(1, 0, "a1^2")


def test_every_family_is_regular():
    for text in ["hypercube:n=5", "vq:n=5", "vq-rule:n=6", "gamma:k=1,l=2", "delta:n=7", "random-hl:n=5,seed=1", "g84"]:
        spec = parse_spec(text)
        G = spec.build()
        assert G.order == 2 ** spec.dimension and G.regular_degree() == spec.dimension


def test_prefix_tracking():
    for text in ["hypercube:n=6", "vq:n=6", "random-hl:n=6,seed=3", "compose(g84,hypercube:n=3,identity)"]:
        spec = parse_spec(text)
        assert spec.prefix_tracked
        G = spec.build()
        for d in range(1, spec.dimension):
            assert G.induced(range(2 ** d)).regular_degree() == d
    assert not parse_spec("delta:n=6").prefix_tracked


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching.explicit([0, 0])
    assert Matching.seeded(8, 3) == Matching.seeded(8, 3)
    assert Matching.seeded(8, 3).canonical() == "random:seed=3"
