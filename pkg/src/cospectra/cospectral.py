"""Vertices strongly cospectral to the identity, and the bounds they obey.

In an abelian Cayley graph, 0 and g are strongly cospectral exactly when 2g = 0
and every pair of characters with the same eigenvalue agrees at g. Those g
form a subgroup H (an elementary abelian 2-group), and its cosets are the
maximal strongly cospectral sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .cayley import (
    CayleyGraph,
    SpectrumTable,
    _require_cubelike,
    element_to_json,
    max_multiplicity,
    spectrum,
)
from .groups import FiniteAbelianGroup, GroupElement

__all__ = [
    "CospectralReport",
    "CubelikeVerdict",
    "strongly_cospectral_to_zero",
    "strongly_cospectral_pair",
    "verify_subgroup",
    "subgroup_basis",
    "check_multiplicity_bound",
    "check_cubelike_bounds",
    "build_report",
    "pst_pair",
]

_CHUNK_ENTRIES = 1 << 22


def _involution_array(G: FiniteAbelianGroup) -> np.ndarray:
    invs = G.involutions()
    return np.array(invs, dtype=np.int64).reshape(len(invs), G.rank)


def strongly_cospectral_to_zero(X: CayleyGraph, table: SpectrumTable | None = None) -> list[GroupElement]:
    """All g strongly cospectral to 0 in X, in lexicographic order (0 first)."""
    G = X.group
    if table is None:
        table = spectrum(X)
    labels = table.class_labels()
    perm = np.argsort(labels, kind="stable")
    starts = np.searchsorted(labels[perm], np.arange(len(table)))
    # character values at involutions are +-1; store the exponent's "is N/2" bit
    chars = G.element_array[perm] * G.character_scale
    cands = _involution_array(G)
    n = G.exponent
    keep = np.zeros(len(cands), dtype=bool)
    step = max(1, _CHUNK_ENTRIES // max(1, G.order))
    for lo in range(0, len(cands), step):
        block = cands[lo:lo + step]
        negative = ((block @ chars.T) % n != 0).astype(np.int8)
        hi = np.maximum.reduceat(negative, starts, axis=1)
        low = np.minimum.reduceat(negative, starts, axis=1)
        keep[lo:lo + step] = (hi == low).all(axis=1)
    return [tuple(int(x) for x in g) for g in cands[keep]]


def strongly_cospectral_pair(X: CayleyGraph, u: GroupElement, v: GroupElement,
                             table: SpectrumTable | None = None) -> bool:
    """Translate u to 0: u, v are strongly cospectral iff 0, v - u are."""
    G = X.group
    diff = G.add(G.element(v), G.neg(G.element(u)))
    if not G.is_involution_or_zero(diff):
        return False
    return diff in set(strongly_cospectral_to_zero(X, table))


def verify_subgroup(G: FiniteAbelianGroup, H) -> bool:
    """H contains 0, is closed under addition, and has exponent dividing 2."""
    elems = {G.element(h) for h in H}
    if G.zero() not in elems:
        return False
    if any(not G.is_involution_or_zero(h) for h in elems):
        return False
    return all(G.add(a, b) in elems for a in elems for b in elems)


def subgroup_basis(G: FiniteAbelianGroup, H) -> list[GroupElement]:
    """Reduced row-echelon GF(2) basis of an elementary abelian 2-subgroup.

    Coordinate i of an involution is 0 or m_i/2, which is read as one bit.
    """
    rows = [[1 if a else 0 for a in h] for h in H if any(h)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for row in rows:
        row = row[:]
        for b, p in zip(basis, pivots):
            if row[p]:
                row = [x ^ y for x, y in zip(row, b)]
        if any(row):
            p = row.index(1)
            for i, b in enumerate(basis):
                if b[p]:
                    basis[i] = [x ^ y for x, y in zip(b, row)]
            basis.append(row)
            pivots.append(p)
    basis.sort(reverse=True)
    return [tuple(m // 2 if bit else 0 for bit, m in zip(b, G.orders)) for b in basis]


@dataclass(frozen=True)
class CubelikeVerdict:
    """None marks a check that does not apply to the graph."""
    cube_mult: bool | None
    cube_size: bool | None
    third_bound: bool | None


@dataclass(frozen=True)
class CospectralReport:
    graph: CayleyGraph
    H: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...]
    max_multiplicity: int
    subgroup_ok: bool
    verdicts: dict = field(default_factory=dict)

    @property
    def group(self) -> FiniteAbelianGroup:
        return self.graph.group

    @property
    def h_size(self) -> int:
        return len(self.H)

    def all_ok(self) -> bool:
        return self.subgroup_ok and all(v is not False for v in self.verdicts.values())

    def to_json(self) -> dict:
        G = self.group
        return {
            "group": str(G),
            "degree": self.graph.degree,
            "H": [element_to_json(G, h) for h in self.H],
            "generators": [element_to_json(G, h) for h in self.generators],
            "hSize": self.h_size,
            "maxMultiplicity": self.max_multiplicity,
            "verdicts": {"subgroup": self.subgroup_ok, **self.verdicts},
        }


def check_multiplicity_bound(report: CospectralReport) -> bool:
    return report.h_size * report.max_multiplicity <= report.group.order


def check_cubelike_bounds(report: CospectralReport) -> CubelikeVerdict:
    G = report.group
    h = report.h_size
    cube_mult = cube_size = third = None
    if G.is_cubelike() and G.dimension >= 3:
        d = G.dimension
        m = report.max_multiplicity
        cube_mult = m * m > 2 ** d  # m > 2^(d/2)
        cube_size = h <= 2 ** (math.ceil(d / 2) - 1)
    if G.order >= 5:
        third = 3 * h <= G.order
    return CubelikeVerdict(cube_mult, cube_size, third)


def build_report(X: CayleyGraph, table: SpectrumTable | None = None) -> CospectralReport:
    if table is None:
        table = spectrum(X)
    H = strongly_cospectral_to_zero(X, table)
    G = X.group
    report = CospectralReport(
        graph=X,
        H=tuple(H),
        generators=tuple(subgroup_basis(G, H)),
        max_multiplicity=max_multiplicity(table),
        subgroup_ok=verify_subgroup(G, H),
    )
    cube = check_cubelike_bounds(report)
    return replace(report, verdicts={
        "multBound": check_multiplicity_bound(report),
        "cubeMult": cube.cube_mult,
        "cubeSize": cube.cube_size,
        "thirdBound": cube.third_bound,
    })


def pst_pair(X: CayleyGraph) -> GroupElement | None:
    """sigma = sum of the connection set in Z_2^d, or None when it is zero."""
    _require_cubelike(X)
    sigma = [0] * X.group.rank
    for c in X.conn:
        sigma = [a ^ b for a, b in zip(sigma, c)]
    sigma = tuple(sigma)
    return sigma if any(sigma) else None
