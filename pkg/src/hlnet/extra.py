"""g-extra connectivity: the f_n(g) benchmark, exact and witness-based searches.

An R_g-cutset is a vertex set whose removal leaves at least two components,
each with at least g+1 vertices; kappa_g is the least size of one.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterator

from . import _kernels, group
from .graph import CompactGraph, VertexSet, components, iter_bits, neighborhood
from .report import REFUTED, VERIFIED, Stopwatch, VerificationReport

log = logging.getLogger(__name__)

EXACT_ORDER_LIMIT = 64


class SearchRefused(ValueError):
    """Exact search requested on a graph above the size guard without force."""


def f_value(n: int, g: int) -> int:
    """n(g+1) - g(g+3)/2; ``g(g+3)`` is always even."""
    if n < 1 or g < 0:
        raise ValueError("need n >= 1 and g >= 0")
    return n * (g + 1) - g * (g + 3) // 2


def f_monotonicity_check(n: int) -> VerificationReport:
    """Strict increase on ``0..n-2``, the maximum, and the tail chain of f_n."""
    if n < 4:
        raise ValueError("need n >= 4")
    f = [f_value(n, g) for g in range(n + 1)]
    failures = []
    for g in range(n - 2):
        if not f[g] < f[g + 1]:
            failures.append(f"f({g}) < f({g + 1})")
    if max(f) != f[n - 2] or f[n - 2] != n * (n - 1) // 2 + 1:
        failures.append("max f = f(n-2) = n(n-1)/2 + 1")
    if f[n - 1] != f[n - 2]:
        failures.append("f(n-1) = f(n-2)")
    if not f[n - 2] > f[n]:
        failures.append("f(n-2) > f(n)")
    if f[n] != f[n - 3]:
        failures.append("f(n) = f(n-3)")
    if not all(f[n - 3] > f[g] for g in range(n - 3)):
        failures.append("f(n-3) > f(g) for g <= n-4")
    return VerificationReport(
        "prop-f", {"n": n}, REFUTED if failures else VERIFIED,
        witness={"values": f, "max": f[n - 2]}, counterwitness=failures or None, checks=2 * n)


def f_sum_inequality_check(n_max: int) -> VerificationReport:
    """f_{n-1}(g1) + f_{n-1}(g2) >= f_n(g) + 1 whenever g1 + g2 + 2 > g + 1."""
    if n_max < 4:
        raise ValueError("need n_max >= 4")
    checked, skipped = 0, 0
    for n in range(4, n_max + 1):
        for g1 in range(n - 1):
            for g2 in range(n - 1):
                for g in range(n - 2):
                    if not g1 + g2 + 2 > g + 1:
                        skipped += 1
                        continue
                    checked += 1
                    if f_value(n - 1, g1) + f_value(n - 1, g2) < f_value(n, g) + 1:
                        return VerificationReport(
                            "lemma-inequation", {"nMax": n_max}, REFUTED, checks=checked,
                            counterwitness={"n": n, "g1": g1, "g2": g2, "g": g})
    return VerificationReport("lemma-inequation", {"nMax": n_max}, VERIFIED, checks=checked,
                              witness={"triples": checked, "excludedByHypothesis": skipped})


def is_rg_cutset(G: CompactGraph, S: VertexSet, g: int) -> bool:
    parts = components(G, S)
    return len(parts) >= 2 and all(len(p) >= g + 1 for p in parts)


@dataclass
class CutsetCertificate:
    """Outcome of a kappa_g search.

    ``kind`` is ``exact`` or ``upper-bound`` (``star-upper`` for the Cayley
    star sweep).  ``status`` is ``definitive`` or ``bounded``; a bounded
    outcome found nothing within ``search_budget`` and carries no value.
    """

    kind: str
    g: int
    value: int | None
    cutset: VertexSet | None = None
    small_side: VertexSet | None = None
    component_sizes: list[int] = field(default_factory=list)
    search_budget: dict[str, Any] = field(default_factory=dict)
    status: str = "definitive"
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def bounded(self) -> bool:
        return self.status == "bounded"

    def to_dict(self, G: CompactGraph | None = None) -> dict[str, Any]:
        def names(vs: VertexSet | None):
            if vs is None:
                return None
            return [G.label(v) for v in vs] if G is not None else vs.to_list()

        doc = {
            "schema": "hlnet/certificate/v1",
            "kind": self.kind,
            "g": self.g,
            "value": self.value,
            "status": self.status,
            "cutset": names(self.cutset),
            "smallSide": names(self.small_side),
            "componentSizes": self.component_sizes,
            "searchBudget": self.search_budget,
        }
        doc.update(self.extra)
        return doc


def _lex_key(vs: VertexSet) -> tuple[int, ...]:
    return tuple(vs.to_list())


def _certify(G: CompactGraph, S: VertexSet, g: int, kind: str, budget: dict) -> CutsetCertificate:
    sizes = [len(p) for p in components(G, S)]
    return CutsetCertificate(kind, g, len(S), cutset=S, component_sizes=sizes, search_budget=budget)


def exact_extra_connectivity(G: CompactGraph, g: int, max_cardinality: int | None = None,
                             threads: int | None = None, force: bool = False,
                             engine: str = "auto") -> CutsetCertificate:
    """Least R_g-cutset by enumeration in ascending cardinality.

    Within a cardinality subsets are visited in lexicographic order of their
    sorted index tuples, and the returned witness is the least hit.
    ``engine`` is ``kernel`` (compiled, order <= 64), ``python`` (reference)
    or ``auto``.
    """
    if g < 0:
        raise ValueError("g must be non-negative")
    if G.order > EXACT_ORDER_LIMIT and not force:
        raise SearchRefused(f"exact search on {G.order} vertices needs force (limit {EXACT_ORDER_LIMIT})")
    if max_cardinality is None:
        max_cardinality = G.order
    if engine == "auto":
        engine = "kernel" if G.order <= EXACT_ORDER_LIMIT else "python"
    if engine == "kernel" and G.order > EXACT_ORDER_LIMIT:
        raise ValueError("compiled kernel handles at most 64 vertices")
    budget = {"maxCardinality": max_cardinality, "engine": engine}
    adj = _kernels.adjacency_array(G.rows) if engine == "kernel" else None
    for k in range(1, max_cardinality + 1):
        log.info("exact search: g=%d cardinality %d", g, k)
        if engine == "kernel":
            mask = _kernels.first_cutset(adj, G.order, k, g, threads)
            hit = VertexSet(mask, G.order) if mask is not None else None
        else:
            hit = _first_cutset_python(G, k, g)
        if hit is not None:
            return _certify(G, hit, g, "exact", budget)
    return CutsetCertificate("exact", g, None, search_budget=budget, status="bounded")


def _first_cutset_python(G: CompactGraph, k: int, g: int) -> VertexSet | None:
    for combo in combinations(range(G.order), k):
        S = G.vertex_set(combo)
        if is_rg_cutset(G, S, g):
            return S
    return None


def all_rg_cutsets(G: CompactGraph, g: int, cardinality: int, threads: int | None = None,
                   engine: str = "auto") -> list[VertexSet]:
    """Every R_g-cutset of the given cardinality, lexicographically ordered."""
    if engine == "auto":
        engine = "kernel" if G.order <= EXACT_ORDER_LIMIT else "python"
    if engine == "kernel":
        masks = _kernels.all_cutsets(_kernels.adjacency_array(G.rows), G.order, cardinality, g, threads)
        return [VertexSet(m, G.order) for m in masks]
    out = []
    for combo in combinations(range(G.order), cardinality):
        S = G.vertex_set(combo)
        if is_rg_cutset(G, S, g):
            out.append(S)
    return out


def connected_sets(G: CompactGraph, min_size: int, max_size: int) -> Iterator[VertexSet]:
    """Every connected vertex set with ``min_size <= |A| <= max_size``, once each.

    Rooted extension: a set is grown only from its least vertex, and only by
    vertices above that root that are not yet adjacent to the set.
    """
    rows = G.rows
    full = (1 << G.order) - 1

    def extend(sub: int, closed: int, ext: int, size: int, above: int) -> Iterator[int]:
        if size >= min_size:
            yield sub
        if size == max_size:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            grown = ext | (rows[w] & ~closed & above)
            yield from extend(sub | low, closed | rows[w], grown, size + 1, above)

    for v in range(G.order):
        above = full & ~((1 << (v + 1)) - 1)
        for bits in extend(1 << v, (1 << v) | rows[v], rows[v] & above, 1, above):
            yield VertexSet(bits, G.order)


def upper_bound_by_small_side(G: CompactGraph, g: int, size_cap: int | None = None) -> CutsetCertificate:
    """Least |N(A)| over connected A, g+1 <= |A| <= size_cap, with N(A) an R_g-cutset.

    Ties go to the lexicographically least A.  The value bounds kappa_g from
    above only.
    """
    if size_cap is None:
        size_cap = g + 1
    if not g + 1 <= size_cap <= G.order // 2:
        raise ValueError(f"need g+1 <= size_cap <= |V|/2, got size_cap={size_cap}")
    best: tuple[int, tuple[int, ...]] | None = None
    best_sets = None
    examined = 0
    for A in connected_sets(G, g + 1, size_cap):
        examined += 1
        S = neighborhood(G, A)
        key = (len(S), _lex_key(A))
        if best is not None and key >= best:
            continue
        rest = components(G, A | S)
        if rest and all(len(p) >= g + 1 for p in rest):
            best, best_sets = key, (A, S)
    budget = {"sizeCap": size_cap, "connectedSetsExamined": examined}
    if best_sets is None:
        return CutsetCertificate("upper-bound", g, None, search_budget=budget, status="bounded")
    A, S = best_sets
    cert = _certify(G, S, g, "upper-bound", budget)
    cert.small_side = A
    return cert


@dataclass
class StarSweep:
    """Result of sweeping star leaf sets around the identity of a Cayley graph."""

    minimum: int | None
    leaves: tuple[str, ...]
    leaf_sets: int
    star_leaf_sets: int
    histogram: dict[int, int]


def min_star_neighborhood(G: CompactGraph, k: int, l: int, g: int) -> StarSweep:
    """min |N({e} u L)| over g-subsets L of the generators inducing a star.

    ``G`` must be ``cayley_graph(k, l)``; vertex 0 is the identity and the
    generator ``s`` sits at the index of ``s * e``.  Vertex-transitivity makes
    the identity centre stand for every centre.
    """
    gens = group.generating_set(k, l)
    if G.order != group.group_order(k, l) or G.regular_degree() != len(gens):
        raise ValueError("graph does not match cayley_graph(k, l)")
    if not 0 <= g <= len(gens):
        raise ValueError("need 0 <= g <= number of generators")
    leaf_idx = [s.index() for s in gens]
    nbr = [set(G.neighbors(v)) for v in leaf_idx]
    centre = set(G.neighbors(0))
    best = None
    best_leaves: tuple[str, ...] = ()
    hist: dict[int, int] = {}
    total = stars = 0
    for combo in combinations(range(len(gens)), g):
        total += 1
        if any(leaf_idx[q] in nbr[p] for p, q in combinations(combo, 2)):
            continue
        stars += 1
        members = {0} | {leaf_idx[p] for p in combo}
        union = set(centre)
        for p in combo:
            union |= nbr[p]
        size = len(union - members)
        hist[size] = hist.get(size, 0) + 1
        if best is None or size < best:
            best, best_leaves = size, tuple(gens.names[p] for p in combo)
    return StarSweep(best, best_leaves, total, stars, dict(sorted(hist.items())))


def big_component_check(G: CompactGraph, S: VertexSet, g: int, k01: int, n: int) -> bool:
    """Largest component of G - S has >= 2^n - |S| - (g + 1 - k01) vertices."""
    if n < 5 or not 0 <= g <= n - 3 or k01 not in (0, 1):
        raise ValueError("need n >= 5, 0 <= g <= n-3 and k01 in {0, 1}")
    if G.order != 1 << n:
        raise ValueError("graph order is not 2^n")
    if len(S) > f_value(n, g) - k01:
        raise ValueError(f"|S| = {len(S)} exceeds f_n(g) - k01 = {f_value(n, g) - k01}")
    parts = components(G, S)
    largest = len(parts[0]) if parts else 0
    return largest >= (1 << n) - len(S) - (g + 1 - k01)


def hyper_kg_check(G: CompactGraph, g: int, S: VertexSet) -> VerificationReport:
    """G - S has exactly two components and one of them has exactly g+1 vertices."""
    sizes = [len(p) for p in components(G, S)]
    ok = len(sizes) == 2 and g + 1 in sizes
    cut = [G.label(v) for v in S]
    return VerificationReport("hyper-kappa-g", {"g": g}, VERIFIED if ok else REFUTED, checks=1,
                              witness={"cutset": cut, "componentSizes": sizes} if ok else None,
                              counterwitness=None if ok else {"cutset": cut, "componentSizes": sizes})


def neighborhood_bound_check(G: CompactGraph, n: int, g_max: int, exhaustive_size_cap: int,
                             sample_count: int, seed: int = 0) -> VerificationReport:
    """min |N(U)| over |U| = g+1 against f_n(g), for g = 0..g_max.

    All subsets up to ``exhaustive_size_cap`` vertices, then ``sample_count``
    seeded random subsets per larger size.
    """
    with Stopwatch() as sw:
        rng = random.Random(seed)
        rows = G.rows
        per_size = []
        counter = None
        checks = 0
        for g in range(g_max + 1):
            if n < math.ceil((g + 2) / 2):
                raise ValueError(f"n = {n} too small for g = {g}")
            size = g + 1
            if size <= exhaustive_size_cap:
                subsets = combinations(range(G.order), size)
                mode = "exhaustive"
            else:
                subsets = (rng.sample(range(G.order), size) for _ in range(sample_count))
                mode = "sampled"
            low = None
            low_set = None
            examined = 0
            for U in subsets:
                examined += 1
                ubits = 0
                for v in U:
                    ubits |= 1 << v
                nb = 0
                for v in U:
                    nb |= rows[v]
                count = (nb & ~ubits).bit_count()
                if low is None or count < low:
                    low, low_set = count, sorted(U)
            checks += examined
            bound = f_value(n, g)
            per_size.append({"size": size, "f": bound, "min": low, "mode": mode, "examined": examined})
            if low is not None and low < bound and counter is None:
                counter = {"U": [G.label(v) for v in low_set], "neighborhood": low, "f": bound}
    report = VerificationReport("prop-basic", {"n": n, "gMax": g_max, "exhaustiveSizeCap": exhaustive_size_cap,
                                               "sampleCount": sample_count},
                                REFUTED if counter else VERIFIED, witness={"perSize": per_size},
                                counterwitness=counter, checks=checks, seeds=[seed])
    report.elapsed_ms = sw.ms
    return report


def mask_from(G: CompactGraph, bits: int) -> VertexSet:
    return VertexSet(bits, G.order)


def members(vs: VertexSet) -> list[int]:
    return list(iter_bits(vs.bits))
