"""Cayley graphs of finite abelian groups and their exact spectra.

Every character psi_a of an abelian group is an eigenvector of X(G, C) with
eigenvalue psi_a(C) = sum of psi_a(c) over c in C, and these |G| eigenvectors
form a basis. ``spectrum`` evaluates all of them exactly and groups characters
by equal eigenvalue. ``wht_spectrum`` is the O(d 2^d) route for Z_2^d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CyclotomicInteger, reduction_matrix
from .errors import ContainsIdentity, NotCubelike, NotInverseClosed, TooLarge
from .groups import CharacterIndex, FiniteAbelianGroup, GroupElement, char_value

__all__ = [
    "ConnectionSet",
    "CayleyGraph",
    "SpectrumEntry",
    "SpectrumTable",
    "connection_set_new",
    "cayley_graph",
    "eigenvalue_for_character",
    "character_sums",
    "spectrum",
    "walsh_hadamard",
    "wht_spectrum",
    "check_cube_identity",
    "complement",
    "max_multiplicity",
    "element_to_json",
    "graph_to_json",
    "MAX_CHARACTER_VERTICES",
]

MAX_CHARACTER_VERTICES = 1 << 22

# rows of the exponent matrix evaluated at once; bounds peak memory
_CHUNK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class ConnectionSet:
    group: FiniteAbelianGroup
    elements: tuple[GroupElement, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return tuple(g) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.elements)

    def as_array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64).reshape(len(self.elements), self.group.rank)


def connection_set_new(G: FiniteAbelianGroup, elements: Iterable[Sequence[int]]) -> ConnectionSet:
    """Validate an inverse-closed subset of G minus the identity.

    Duplicates are dropped; elements are stored in lexicographic order.
    """
    elems = {G.element(e) for e in elements}
    if G.zero() in elems:
        raise ContainsIdentity("connection set contains the identity")
    for c in sorted(elems):
        if G.neg(c) not in elems:
            raise NotInverseClosed(c)
    return ConnectionSet(G, tuple(sorted(elems)))


@dataclass(frozen=True)
class CayleyGraph:
    group: FiniteAbelianGroup
    conn: ConnectionSet
    name: str = ""
    meta: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def degree(self) -> int:
        return len(self.conn)

    @property
    def num_vertices(self) -> int:
        return self.group.order

    def __str__(self):
        return self.name or f"X({self.group}, |C|={self.degree})"


def cayley_graph(G: FiniteAbelianGroup, elements, name: str = "", meta: dict | None = None) -> CayleyGraph:
    conn = elements if isinstance(elements, ConnectionSet) else connection_set_new(G, elements)
    return CayleyGraph(G, conn, name, dict(meta or {}))


def eigenvalue_for_character(X: CayleyGraph, a: CharacterIndex) -> CyclotomicInteger:
    """psi_a(C), summed one exact root of unity at a time."""
    total = CyclotomicInteger.from_int(0, X.group.exponent)
    for c in X.conn:
        total = total + char_value(X.group, a, c)
    return total


def character_sums(X: CayleyGraph, max_vertices: int = MAX_CHARACTER_VERTICES) -> np.ndarray:
    """Canonical coefficient vectors of psi_a(C) for every character, flat-index order.

    Returns an int64 array of shape (|G|, deg Phi_N).
    """
    G = X.group
    if G.order > max_vertices:
        raise TooLarge(f"character enumeration over {G.order} elements exceeds cap {max_vertices}")
    n = G.exponent
    chars = G.element_array
    conn = X.conn.as_array() * G.character_scale  # (|C|, k)
    size = len(X.conn)
    red = reduction_matrix(n)
    if size and size * int(np.abs(red).max()) >= 1 << 62:
        raise OverflowError("character sums may overflow int64")
    out = np.zeros((G.order, red.shape[1]), dtype=np.int64)
    if size == 0:
        return out
    step = max(1, _CHUNK_ENTRIES // size)
    for lo in range(0, G.order, step):
        block = chars[lo:lo + step]
        expo = (block @ conn.T) % n
        if n == 1:
            out[lo:lo + step, 0] = size
        elif n == 2:
            out[lo:lo + step, 0] = size - 2 * expo.sum(axis=1)
        else:
            rows = block.shape[0]
            flat = (np.arange(rows, dtype=np.int64)[:, None] * n + expo).ravel()
            counts = np.bincount(flat, minlength=rows * n).reshape(rows, n)
            out[lo:lo + step] = counts @ red
    return out


@dataclass(frozen=True, eq=False)
class SpectrumEntry:
    group: FiniteAbelianGroup = field(repr=False)
    eigenvalue: CyclotomicInteger
    multiplicity: int
    char_indices: np.ndarray = field(repr=False)

    @property
    def characters(self) -> list[CharacterIndex]:
        return [self.group.element_at(int(i)) for i in self.char_indices]


@dataclass(frozen=True, eq=False)
class SpectrumTable:
    group: FiniteAbelianGroup
    entries: tuple[SpectrumEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def as_dict(self) -> dict:
        """eigenvalue -> multiplicity; keys are ints when every eigenvalue is rational."""
        if all(e.eigenvalue.is_rational() for e in self.entries):
            return {e.eigenvalue.as_integer(): e.multiplicity for e in self.entries}
        return {e.eigenvalue: e.multiplicity for e in self.entries}

    def class_labels(self) -> np.ndarray:
        """Entry number of each character, indexed by flat character index."""
        labels = np.empty(self.group.order, dtype=np.int64)
        for k, e in enumerate(self.entries):
            labels[e.char_indices] = k
        return labels

    def to_json(self) -> list:
        return [{"eigenvalue": e.eigenvalue.to_json(), "multiplicity": e.multiplicity} for e in self.entries]

    def format_spectrum(self) -> str:
        """``{-6^(1), -4^(4), ...}`` in ascending order."""
        parts = []
        for e in self.entries:
            text = str(e.eigenvalue)
            if not e.eigenvalue.is_rational():
                text = f"({text})"
            parts.append(f"{text}^({e.multiplicity})")
        return "{" + ", ".join(parts) + "}"


def spectrum(X: CayleyGraph, max_vertices: int = MAX_CHARACTER_VERTICES) -> SpectrumTable:
    G = X.group
    sums = character_sums(X, max_vertices)
    keys, inverse = np.unique(sums, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(inverse, kind="stable")
    bounds = np.searchsorted(inverse[order], np.arange(len(keys) + 1))
    entries = []
    for k, row in enumerate(keys):
        idx = order[bounds[k]:bounds[k + 1]]
        value = CyclotomicInteger._raw(G.exponent, tuple(int(c) for c in row))
        entries.append(SpectrumEntry(G, value, len(idx), idx))
    entries.sort(key=lambda e: e.eigenvalue.sort_key())
    return SpectrumTable(G, tuple(entries))


def walsh_hadamard(values) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform of a length-2^d vector.

    Natural (Hadamard) ordering: output[a] = sum_x (-1)^popcount(a & x) values[x].
    """
    x = np.array(values, copy=True)
    n = x.shape[0]
    if n & (n - 1):
        raise ValueError(f"length {n} is not a power of two")
    h = 1
    while h < n:
        v = x.reshape(-1, 2, h)
        top = v[:, 0, :].copy()
        v[:, 0, :] += v[:, 1, :]
        v[:, 1, :] = top - v[:, 1, :]
        h *= 2
    return x


def _require_cubelike(X: CayleyGraph):
    if not X.group.is_cubelike():
        raise NotCubelike(f"group {X.group} has exponent {X.group.exponent} > 2")


def indicator_vector(X: CayleyGraph) -> np.ndarray:
    G = X.group
    ind = np.zeros(G.order, dtype=np.int64)
    if len(X.conn):
        ind[X.conn.as_array() @ G.radix] = 1
    return ind


def wht_spectrum(X: CayleyGraph) -> np.ndarray:
    """Eigenvalue psi_a(C) for every character a of Z_2^d, by flat index."""
    _require_cubelike(X)
    return walsh_hadamard(indicator_vector(X))


def check_cube_identity(X: CayleyGraph, table: SpectrumTable | None = None) -> bool:
    """sum_r (n - 2r)^2 m_r == 2^d n, the trace of A^2."""
    _require_cubelike(X)
    if table is None:
        table = spectrum(X)
    total = sum(e.eigenvalue.as_integer() ** 2 * e.multiplicity for e in table)
    return total == X.group.order * X.degree


def complement(X: CayleyGraph) -> CayleyGraph:
    G = X.group
    zero = G.zero()
    rest = [g for g in G.elements() if g != zero and g not in X.conn]
    name = f"complement({X.name})" if X.name else ""
    return CayleyGraph(G, ConnectionSet(G, tuple(rest)), name)


def max_multiplicity(table: SpectrumTable) -> int:
    return max(e.multiplicity for e in table)


def element_to_json(G: FiniteAbelianGroup, g: GroupElement):
    """Bitstring for cubelike groups, coordinate list otherwise."""
    if G.is_cubelike():
        return G.to_bits(g)
    return list(g)


def graph_to_json(X: CayleyGraph) -> dict:
    return {"group": str(X.group), "connectionSet": [element_to_json(X.group, c) for c in X.conn]}
