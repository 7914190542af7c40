"""Generators for hypercube-like networks and the Cayley families.

Bit positions of vertex labels are numbered 1 (rightmost) to n (leftmost);
vertex index ``v`` carries position ``i`` in bit ``i - 1``.  Every graph built
by composition keeps its first half at the low indices, so the vertices
``0 .. 2^d - 1`` always induce a d-dimensional sub-network.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from . import group
from .graph import CompactGraph, check_isomorphism_by_map
from .report import REFUTED, VERIFIED, Stopwatch, VerificationReport

FAMILIES = ("hypercube", "vq", "vq-recursive", "vq-rule", "gamma", "delta", "random-hl", "g84", "compose")
_PARAMS = {
    "hypercube": ("n",),
    "vq": ("n",),
    "vq-recursive": ("n",),
    "vq-rule": ("n",),
    "gamma": ("k", "l"),
    "delta": ("n",),
    "random-hl": ("n", "seed"),
    "g84": (),
}

# both VQ constructions give the same edge set, so they share one canonical name
_CANONICAL_FAMILY = {"vq-recursive": "vq", "vq-rule": "vq"}

# C4 = Q2 is 0-1-3-2-0; swapping 2 and 3 is not an automorphism of it
TWISTED_C4 = (0, 1, 3, 2)


class SpecError(ValueError):
    """Malformed or out-of-range topology description."""


@dataclass(frozen=True)
class Matching:
    bijection: tuple[int, ...]
    policy: str = "explicit"
    seed: int | None = None

    def __post_init__(self):
        if sorted(self.bijection) != list(range(len(self.bijection))):
            raise ValueError("matching is not a bijection")

    @classmethod
    def identity(cls, m: int) -> Matching:
        return cls(tuple(range(m)), "identity")

    @classmethod
    def seeded(cls, m: int, seed: int) -> Matching:
        perm = list(range(m))
        random.Random(seed).shuffle(perm)
        return cls(tuple(perm), "random", seed)

    @classmethod
    def explicit(cls, targets: Sequence[int]) -> Matching:
        return cls(tuple(targets), "explicit")

    def __len__(self) -> int:
        return len(self.bijection)

    def canonical(self) -> str:
        if self.policy == "identity":
            return "identity"
        if self.policy == "random":
            return f"random:seed={self.seed}"
        return "explicit:" + ".".join(map(str, self.bijection))


@dataclass(frozen=True)
class TopologySpec:
    family: str
    params: dict = field(default_factory=dict, hash=False)
    parts: tuple = ()  # (left spec, right spec, matching text) for compose

    def canonical(self) -> str:
        if self.family == "compose":
            left, right, matching = self.parts
            return f"compose({left.canonical()},{right.canonical()},{matching})"
        if not self.params:
            return self.family
        return _CANONICAL_FAMILY.get(self.family, self.family) + ":" + ",".join(f"{k}={self.params[k]}" for k in _PARAMS[self.family])

    def __str__(self) -> str:
        return self.canonical()

    @property
    def dimension(self) -> int:
        if self.family == "gamma":
            return 3 * self.params["k"] + self.params["l"]
        if self.family == "g84":
            return 3
        if self.family == "compose":
            return self.parts[0].dimension + 1
        return self.params["n"]

    @property
    def prefix_tracked(self) -> bool:
        """Whether index prefixes ``0..2^d-1`` induce d-dimensional sub-networks."""
        if self.family == "compose":
            return self.parts[0].prefix_tracked
        return self.family in ("hypercube", "vq", "vq-recursive", "vq-rule", "random-hl", "g84")

    def build(self) -> CompactGraph:
        f, p = self.family, self.params
        if f == "hypercube":
            return hypercube(p["n"])
        if f in ("vq", "vq-recursive"):
            return vq_recursive(p["n"])
        if f == "vq-rule":
            return vq_by_rule(p["n"])
        if f == "gamma":
            return gamma(p["k"], p["l"])
        if f == "delta":
            return delta(p["n"])
        if f == "random-hl":
            return random_hl(p["n"], p["seed"])
        if f == "g84":
            return g84()
        left, right, mtext = self.parts
        G0, G1 = left.build(), right.build()
        return compose_hl(G0, G1, parse_matching(mtext, G0.order))


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [s.strip() for s in parts]


def parse_matching(text: str, m: int) -> Matching:
    if text == "identity":
        return Matching.identity(m)
    if text.startswith("random:seed="):
        return Matching.seeded(m, int(text.split("=", 1)[1]))
    if text.startswith("explicit:"):
        match = Matching.explicit([int(t) for t in text.split(":", 1)[1].split(".")])
        if len(match) != m:
            raise SpecError(f"explicit matching has {len(match)} entries, need {m}")
        return match
    raise SpecError(f"unknown matching {text!r}")


def parse_spec(text: str) -> TopologySpec:
    """Parse the canonical textual form, e.g. ``gamma:k=5,l=0``."""
    text = text.strip()
    if text.startswith("compose(") and text.endswith(")"):
        pieces = _split_top(text[len("compose("):-1])
        if len(pieces) != 3:
            raise SpecError("compose needs (left,right,matching)")
        left, right = parse_spec(pieces[0]), parse_spec(pieces[1])
        if left.dimension != right.dimension:
            raise SpecError("compose operands differ in dimension")
        parse_matching(pieces[2], 2 ** left.dimension)
        return TopologySpec("compose", {}, (left, right, pieces[2]))
    family, _, rest = text.partition(":")
    if family not in _PARAMS:
        raise SpecError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    params = {}
    if rest:
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            key = key.strip()
            if not eq or key not in _PARAMS[family]:
                raise SpecError(f"bad parameter {item!r} for {family}")
            try:
                params[key] = int(val)
            except ValueError:
                raise SpecError(f"parameter {key} must be an integer") from None
    missing = set(_PARAMS[family]) - set(params)
    if missing:
        raise SpecError(f"{family} is missing {', '.join(sorted(missing))}")
    spec = TopologySpec(family, params)
    _validate(spec)
    return spec


def _validate(spec: TopologySpec) -> None:
    p = spec.params
    limits = {"hypercube": 20, "vq": 16, "vq-recursive": 16, "vq-rule": 16, "delta": 20, "random-hl": 16}
    if spec.family in limits and not 1 <= p["n"] <= limits[spec.family]:
        raise SpecError(f"{spec.family} needs 1 <= n <= {limits[spec.family]}")
    if spec.family == "gamma":
        if p["k"] < 0 or p["l"] < 0 or 3 * p["k"] + p["l"] < 1 or 3 * p["k"] + p["l"] > 20:
            raise SpecError("gamma needs k, l >= 0 and 1 <= 3k + l <= 20")
    if spec.family == "random-hl" and not 0 <= p["seed"] < 2**64:
        raise SpecError("seed must be a 64-bit unsigned integer")


def _bits(v: int, n: int) -> str:
    return format(v, f"0{n}b") if n else ""


def trivial() -> CompactGraph:
    """K_1, the single 0-dimensional network."""
    return CompactGraph(1, [[]], [""])


def hypercube(n: int) -> CompactGraph:
    if not 1 <= n <= 20:
        raise SpecError("hypercube needs 1 <= n <= 20")
    size = 1 << n
    nbrs = [[v ^ (1 << i) for i in range(n)] for v in range(size)]
    return CompactGraph(size, nbrs, [_bits(v, n) for v in range(size)])


def compose_hl(G0: CompactGraph, G1: CompactGraph, m: Matching) -> CompactGraph:
    """Disjoint union of ``G0`` and ``G1`` plus the edges ``{v, m(v)}``.

    ``G1`` is shifted to indices ``order .. 2*order - 1``.
    """
    if G0.order != G1.order:
        raise ValueError(f"orders differ: {G0.order} vs {G1.order}")
    if len(m) != G0.order:
        raise ValueError("matching size does not match graph order")
    half = G0.order
    nbrs = [list(G0.neighbors(v)) + [half + m.bijection[v]] for v in range(half)]
    inv = [0] * half
    for v, w in enumerate(m.bijection):
        inv[w] = v
    nbrs += [[half + w for w in G1.neighbors(v)] + [inv[v]] for v in range(half)]
    labels = None
    if G0.labels is not None and G1.labels is not None:
        labels = ["0" + s for s in G0.labels] + ["1" + s for s in G1.labels]
    return CompactGraph(2 * half, nbrs, labels)


def g84() -> CompactGraph:
    """The 3-dimensional HL-network that is not Q_3 (C4 + C4, twisted matching)."""
    return compose_hl(hypercube(2), hypercube(2), Matching.explicit(TWISTED_C4))


def random_hl(n: int, seed: int) -> CompactGraph:
    """Random member of L_n: two independent halves and a shuffled matching.

    One ``random.Random(seed)`` stream drives the whole recursion (left half
    first, then right half, then the matching shuffle).
    """
    if not 1 <= n <= 16:
        raise SpecError("random-hl needs 1 <= n <= 16")
    rng = random.Random(seed)

    def build(d: int) -> CompactGraph:
        if d == 0:
            return trivial()
        G0 = build(d - 1)
        G1 = build(d - 1)
        perm = list(range(G0.order))
        rng.shuffle(perm)
        return compose_hl(G0, G1, Matching(tuple(perm), "random", seed))

    return build(n)


def _vq_cross(n: int) -> Matching:
    half = 1 << (n - 1)
    if n % 3:
        return Matching.identity(half)
    # (x_{n-1} x_{n-2}) -> (x_{n-1}, x_{n-1} + x_{n-2})
    return Matching.explicit([v ^ ((v >> (n - 2) & 1) << (n - 3)) for v in range(half)])


def vq_recursive(n: int) -> CompactGraph:
    if not 1 <= n <= 16:
        raise SpecError("vq-recursive needs 1 <= n <= 16")
    G = CompactGraph(2, [[1], [0]], ["0", "1"])
    for m in range(2, n + 1):
        G = compose_hl(G, G, _vq_cross(m))
    return G


def vq_by_rule(n: int) -> CompactGraph:
    """VQ_n from the closed-form adjacency rule.

    Flipping position ``i`` with ``3 | i`` also sets
    ``y_{i-2} = x_{i-1} + x_{i-2}``.
    """
    if not 1 <= n <= 16:
        raise SpecError("vq-rule needs 1 <= n <= 16")
    size = 1 << n
    nbrs = []
    for u in range(size):
        row = []
        for i in range(1, n + 1):
            v = u ^ (1 << (i - 1))
            if i % 3 == 0:
                v ^= (u >> (i - 2) & 1) << (i - 3)
            row.append(v)
        nbrs.append(row)
    return CompactGraph(size, nbrs, [_bits(v, n) for v in range(size)])


def gamma(k: int, l: int) -> CompactGraph:
    if k < 0 or l < 0 or 3 * k + l < 1:
        raise SpecError("gamma needs k, l >= 0 and 3k + l >= 1")
    return group.cayley_graph(k, l)


def delta_shape(n: int) -> tuple[int, int]:
    return n // 3, n % 3


def delta(n: int) -> CompactGraph:
    if n < 1:
        raise SpecError("delta needs n >= 1")
    return gamma(*delta_shape(n))


def vq_iso_map(n: int) -> list[int]:
    """Index bijection from ``delta(n)`` to ``vq_recursive(n)``.

    The element ``prod_i (a_i^2)^{x_{3i-2}} b_i^{x_{3i-1}} (a_i b_i)^{x_{3i}}``
    times ``prod_j c_j^{x_{3s+j}}`` goes to the label ``x_n ... x_1``.
    """
    if not 1 <= n <= 16:
        raise SpecError("vq_iso_map needs 1 <= n <= 16")
    s, t = delta_shape(n)
    out = [0] * (1 << n)
    sq, bb, ab = (2, 0), (0, 1), (1, 1)
    for x in range(1 << n):
        dih = []
        for i in range(s):
            acc = group.DihedralProductElement(((0, 0),))
            for pos, gen in zip(range(3 * i, 3 * i + 3), (sq, bb, ab)):
                if x >> pos & 1:
                    acc = acc * group.DihedralProductElement((gen,))
            dih.append(acc.dihedral[0])
        cyc = tuple(x >> (3 * s + j) & 1 for j in range(t))
        out[group.DihedralProductElement(tuple(dih), cyc).index()] = x
    return out


def hl_decompose(k: int, l: int, b: str | None = None) -> VerificationReport:
    """Check that Gamma(k, l) splits as Gamma[M] + Gamma[Mb] along a matching.

    ``b`` names the dropped generator (default ``b_k``, or ``c_l`` when
    ``k = 0``).  Checks: M has index 2; every ``u`` in M has exactly one
    neighbour outside M, namely ``b u``; Gamma[M] equals the Cayley graph of
    the smaller shape under the re-indexing; right translation by ``b`` maps
    Gamma[M] onto Gamma[Mb].
    """
    with Stopwatch() as sw:
        report = _hl_decompose(k, l, b)
    report.elapsed_ms = sw.ms
    return report


def _hl_decompose(k: int, l: int, b: str | None) -> VerificationReport:
    gens = group.generating_set(k, l)
    if b is None:
        b = f"b{k}" if k > 0 else f"c{l}"
    params = {"k": k, "l": l, "b": b}
    pos = gens.index_of(b)
    cd = group.coset_decomposition(k, l, pos)
    G = group.cayley_graph(k, l)
    b_elem = gens.elements[pos]
    checks = 0

    def refuted(msg: str, cw) -> VerificationReport:
        return VerificationReport("lemma-hl", params, REFUTED, counterwitness=cw, detail=msg, checks=checks,
                                  population=[f"gamma:k={k},l={l}"])

    # perfect matching between the cosets
    left_table = group.left_multiplication_table(k, l, [b_elem])[0]
    for u in sorted(cd.members):
        outside = [w for w in G.neighbors(u) if w not in cd.members]
        checks += 1
        if outside != [int(left_table[u])]:
            return refuted("cross edges are not the matching u -> b u", {"vertex": G.label(u), "outside": [G.label(w) for w in outside]})

    # Gamma[M] against the Cayley graph of the smaller shape
    if b.startswith("c"):
        k2, l2 = k, l - 1
    else:
        k2, l2 = k - 1, l + 2
    inner = group.cayley_graph(k2, l2, labels=False)
    members = sorted(cd.members)
    where = {v: i for i, v in enumerate(members)}
    induced = G.induced(members)
    phi = [where[_reindex(group.DihedralProductElement.from_index(i, k2, l2), gens, pos, b, k, l).index()]
           for i in range(inner.order)]
    checks += 1
    if not check_isomorphism_by_map(inner, induced, phi):
        return refuted(f"Gamma[M] differs from Gamma({k2},{l2}) under the re-indexing", None)

    # right translation by b carries M onto Mb edge for edge
    rmap = cd.coset_map
    for u, w in induced.edges():
        checks += 1
        x, y = rmap[members[u]], rmap[members[w]]
        if x in cd.members or not G.has_edge(x, y):
            return refuted("right translation does not preserve the half", {"edge": [G.label(members[u]), G.label(members[w])]})

    witness = {
        "subgroupOrder": len(members),
        "groupOrder": G.order,
        "halfShape": {"k": k2, "l": l2},
        "crossEdges": len(members),
        "subgroup": [G.label(v) for v in members] if len(members) <= 64 else None,
    }
    return VerificationReport("lemma-hl", params, VERIFIED, witness=witness, checks=checks,
                              population=[f"gamma:k={k},l={l}"],
                              detail=f"Gamma({k},{l}) = Gamma[M] + Gamma[M{b}] with halves of order {len(members)}")


def _reindex(h: group.DihedralProductElement, gens: group.GeneratingSet, pos: int, b: str,
             k: int, l: int) -> group.DihedralProductElement:
    """Image in G(k, l) of an element of the smaller group under the re-indexing."""
    if b.startswith("c"):
        j = int(b[1:]) - 1
        cyc = list(h.cyclic)
        cyc.insert(j, 0)
        return group.DihedralProductElement(h.dihedral, tuple(cyc))
    i = int(b[1:].split("b")[0].lstrip("a")) - 1 if b.startswith("a") else int(b[1:]) - 1
    # the two surviving generators of factor i become the two new cyclic bits
    survivors = [gens.elements[q] for q in range(3 * i, 3 * i + 3) if q != pos]
    dih = list(h.dihedral)
    dih.insert(i, (0, 0))
    out = group.DihedralProductElement(tuple(dih), h.cyclic[:l])
    for bit, gen in zip(h.cyclic[l:], survivors):
        if bit:
            out = out * gen
    return out
