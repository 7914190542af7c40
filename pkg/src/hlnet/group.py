"""Arithmetic in G(k, l) = D8^k x Z2^l and Cayley graphs over it.

Every dihedral factor element is kept in normal form ``a^x b^y`` with
``x in Z4`` and ``y in Z2``; the defining relation ``b a b^-1 = a^-1`` gives
the product rule

    (x1, y1) * (x2, y2) = (x1 + (-1)^y1 * x2  mod 4,  y1 + y2  mod 2).

Element indices are mixed radix over the digit sequence
``(x_1, y_1, ..., x_k, y_k, z_1, ..., z_l)`` with radices ``(4, 2, ..., 2)``
and the first digit most significant, so index order equals the
lexicographic order of digit tuples and the identity has index 0.

Cayley edges join ``g`` and ``s*g`` (left multiplication).  Coset maps use
right multiplication ``u -> u*b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import CompactGraph


@dataclass(frozen=True)
class DihedralProductElement:
    dihedral: tuple[tuple[int, int], ...]
    cyclic: tuple[int, ...] = ()

    def __post_init__(self):
        for x, y in self.dihedral:
            if not (0 <= x < 4 and 0 <= y < 2):
                raise ValueError(f"dihedral component {(x, y)} not in normal form")
        if any(z not in (0, 1) for z in self.cyclic):
            raise ValueError("cyclic components must be bits")

    @classmethod
    def identity(cls, k: int, l: int) -> DihedralProductElement:
        return cls(((0, 0),) * k, (0,) * l)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.dihedral), len(self.cyclic)

    def __mul__(self, other: DihedralProductElement) -> DihedralProductElement:
        return multiply(self, other)

    def is_identity(self) -> bool:
        return all(x == 0 and y == 0 for x, y in self.dihedral) and not any(self.cyclic)

    def index(self) -> int:
        idx = 0
        for x, y in self.dihedral:
            idx = (idx * 4 + x) * 2 + y
        for z in self.cyclic:
            idx = idx * 2 + z
        return idx

    @classmethod
    def from_index(cls, idx: int, k: int, l: int) -> DihedralProductElement:
        if not 0 <= idx < group_order(k, l):
            raise ValueError(f"index {idx} out of range for G({k},{l})")
        cyc = []
        for _ in range(l):
            cyc.append(idx & 1)
            idx >>= 1
        dih = []
        for _ in range(k):
            y = idx & 1
            idx >>= 1
            dih.append((idx & 3, y))
            idx >>= 2
        return cls(tuple(reversed(dih)), tuple(reversed(cyc)))

    def label(self) -> str:
        parts = []
        for i, (x, y) in enumerate(self.dihedral, 1):
            if x == 1:
                parts.append(f"a{i}")
            elif x > 1:
                parts.append(f"a{i}^{x}")
            if y:
                parts.append(f"b{i}")
        parts += [f"c{j}" for j, z in enumerate(self.cyclic, 1) if z]
        return "".join(parts) or "e"

    def __str__(self) -> str:
        return self.label()


def group_order(k: int, l: int) -> int:
    return 8**k * 2**l


def multiply(g: DihedralProductElement, h: DihedralProductElement) -> DihedralProductElement:
    if g.shape != h.shape:
        raise ValueError(f"shape mismatch {g.shape} vs {h.shape}")
    dih = tuple(((x1 + (x2 if y1 == 0 else -x2)) % 4, (y1 + y2) % 2)
                for (x1, y1), (x2, y2) in zip(g.dihedral, h.dihedral))
    cyc = tuple(z1 ^ z2 for z1, z2 in zip(g.cyclic, h.cyclic))
    return DihedralProductElement(dih, cyc)


def inverse(g: DihedralProductElement) -> DihedralProductElement:
    # a^x b is an involution; a^x inverts to a^-x
    dih = tuple(((-x) % 4, 0) if y == 0 else (x, 1) for x, y in g.dihedral)
    return DihedralProductElement(dih, g.cyclic)


def is_involution(g: DihedralProductElement) -> bool:
    return not g.is_identity() and multiply(g, g).is_identity()


def power(g: DihedralProductElement, e: int) -> DihedralProductElement:
    k, l = g.shape
    out = DihedralProductElement.identity(k, l)
    for _ in range(e):
        out = multiply(out, g)
    return out


def a(i: int, k: int, l: int) -> DihedralProductElement:
    """The rotation generator of dihedral factor ``i`` (1-based)."""
    return _single(i, (1, 0), k, l)


def b(i: int, k: int, l: int) -> DihedralProductElement:
    return _single(i, (0, 1), k, l)


def c(j: int, k: int, l: int) -> DihedralProductElement:
    cyc = [0] * l
    cyc[j - 1] = 1
    return DihedralProductElement(((0, 0),) * k, tuple(cyc))


def _single(i: int, xy: tuple[int, int], k: int, l: int) -> DihedralProductElement:
    dih = [(0, 0)] * k
    dih[i - 1] = xy
    return DihedralProductElement(tuple(dih), (0,) * l)


@dataclass(frozen=True)
class GeneratingSet:
    k: int
    l: int
    elements: tuple[DihedralProductElement, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.elements) != len(self.names):
            raise ValueError("names must parallel elements")
        for g, name in zip(self.elements, self.names):
            if g.shape != (self.k, self.l):
                raise ValueError(f"{name} has shape {g.shape}, expected {(self.k, self.l)}")
            if not is_involution(g):
                raise ValueError(f"{name} is not an involution")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def without(self, position: int) -> GeneratingSet:
        keep = [i for i in range(len(self)) if i != position]
        return GeneratingSet(self.k, self.l, tuple(self.elements[i] for i in keep),
                             tuple(self.names[i] for i in keep))


def generating_set(k: int, l: int) -> GeneratingSet:
    """``a_i^2, b_i, a_i b_i`` for each dihedral factor, then ``c_1..c_l``."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    if 3 * k + l < 1:
        raise ValueError("generating set would be empty (k = l = 0)")
    elems, names = [], []
    for i in range(1, k + 1):
        elems += [_single(i, (2, 0), k, l), _single(i, (0, 1), k, l), _single(i, (1, 1), k, l)]
        names += [f"a{i}^2", f"b{i}", f"a{i}b{i}"]
    for j in range(1, l + 1):
        elems.append(c(j, k, l))
        names.append(f"c{j}")
    return GeneratingSet(k, l, tuple(elems), tuple(names))


# -- vectorized index arithmetic ------------------------------------------------

def _decode_all(k: int, l: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Digit arrays (X, Y, Z) of every element, rows indexed by element index."""
    idx = np.arange(group_order(k, l), dtype=np.int64)
    Z = np.empty((idx.size, l), dtype=np.int64)
    for j in range(l - 1, -1, -1):
        Z[:, j] = idx & 1
        idx = idx >> 1
    X = np.empty((idx.size, k), dtype=np.int64)
    Y = np.empty((idx.size, k), dtype=np.int64)
    for i in range(k - 1, -1, -1):
        Y[:, i] = idx & 1
        idx = idx >> 1
        X[:, i] = idx & 3
        idx = idx >> 2
    return X, Y, Z


def _encode_all(X: np.ndarray, Y: np.ndarray, Z: np.ndarray) -> np.ndarray:
    idx = np.zeros(X.shape[0], dtype=np.int64)
    for i in range(X.shape[1]):
        idx = (idx * 4 + X[:, i]) * 2 + Y[:, i]
    for j in range(Z.shape[1]):
        idx = idx * 2 + Z[:, j]
    return idx


def left_multiplication_table(k: int, l: int, elements: Sequence[DihedralProductElement]) -> np.ndarray:
    """``table[s, g]`` is the index of ``elements[s] * g``."""
    X, Y, Z = _decode_all(k, l)
    out = np.empty((len(elements), X.shape[0]), dtype=np.int64)
    for r, s in enumerate(elements):
        sx = np.array([x for x, _ in s.dihedral], dtype=np.int64)
        sy = np.array([y for _, y in s.dihedral], dtype=np.int64)
        sz = np.array(s.cyclic, dtype=np.int64)
        X2 = (sx + (1 - 2 * sy) * X) % 4
        Y2 = (sy + Y) % 2
        Z2 = Z ^ sz if l else Z
        out[r] = _encode_all(X2, Y2, Z2)
    return out


def right_multiplication_table(k: int, l: int, h: DihedralProductElement) -> np.ndarray:
    """``table[g]`` is the index of ``g * h``."""
    X, Y, Z = _decode_all(k, l)
    hx = np.array([x for x, _ in h.dihedral], dtype=np.int64)
    hy = np.array([y for _, y in h.dihedral], dtype=np.int64)
    hz = np.array(h.cyclic, dtype=np.int64)
    X2 = (X + (1 - 2 * Y) * hx) % 4
    Y2 = (Y + hy) % 2
    Z2 = Z ^ hz if l else Z
    return _encode_all(X2, Y2, Z2)


def element_labels(k: int, l: int) -> list[str]:
    return [DihedralProductElement.from_index(i, k, l).label() for i in range(group_order(k, l))]


def cayley_graph(k: int, l: int, gens: GeneratingSet | None = None, labels: bool = True) -> CompactGraph:
    """Cayley graph on G(k, l) with edges ``{g, s*g}`` for ``s`` in ``gens``.

    Vertex ``i`` is the element with mixed-radix index ``i``.
    """
    if gens is None:
        gens = generating_set(k, l)
    if (gens.k, gens.l) != (k, l):
        raise ValueError("generating set shape does not match (k, l)")
    table = left_multiplication_table(k, l, gens.elements)
    nbrs = table.T.tolist()
    return CompactGraph(group_order(k, l), nbrs, element_labels(k, l) if labels else None)


class NotIndexTwoError(ValueError):
    """Dropping the chosen generator does not give an index-2 subgroup."""


@dataclass(frozen=True)
class CosetDecomposition:
    k: int
    l: int
    removed: str
    members: frozenset[int]
    coset_map: tuple[int, ...]  # index of u * b for every u

    def __contains__(self, idx: int) -> bool:
        return idx in self.members

    @property
    def subgroup_order(self) -> int:
        return len(self.members)


def subgroup_closure(k: int, l: int, gens: Sequence[DihedralProductElement]) -> frozenset[int]:
    """Indices of the subgroup generated by ``gens`` (all involutions)."""
    table = left_multiplication_table(k, l, gens)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in table[:, u].tolist():
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def coset_decomposition(k: int, l: int, b_index: int) -> CosetDecomposition:
    """Split G(k, l) into ``M = <Omega - {b}>`` and the coset ``M b``.

    ``b_index`` is a position in ``generating_set(k, l)``.
    """
    gens = generating_set(k, l)
    if not 0 <= b_index < len(gens):
        raise ValueError(f"generator index {b_index} out of range")
    b_elem = gens.elements[b_index]
    members = subgroup_closure(k, l, gens.without(b_index).elements)
    if 2 * len(members) != group_order(k, l):
        raise NotIndexTwoError(
            f"<Omega - {{{gens.names[b_index]}}}> has order {len(members)}, not {group_order(k, l) // 2}")
    rmap = tuple(right_multiplication_table(k, l, b_elem).tolist())
    return CosetDecomposition(k, l, gens.names[b_index], members, rmap)
