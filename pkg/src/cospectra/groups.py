"""Finite abelian groups written as direct products of cyclic groups.

Elements are plain tuples of residues. Elements (and character indices, which
are also elements) are enumerated in lexicographic coordinate order, so the
element at flat index ``i`` has coordinate 0 as its most significant digit.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterator, Sequence

import numpy as np

from .cyclotomic import CyclotomicInteger
from .errors import InvalidElement, InvalidGroup, ParseError

GroupElement = tuple[int, ...]
CharacterIndex = GroupElement

__all__ = [
    "FiniteAbelianGroup",
    "GroupElement",
    "CharacterIndex",
    "group_new",
    "parse_group",
    "char_value",
    "char_sign",
]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple[int, ...]
    exponent: int = field(init=False)
    order: int = field(init=False)

    def __post_init__(self):
        orders = tuple(int(m) for m in self.orders)
        for m in orders:
            if m < 2:
                raise InvalidGroup(f"cyclic factor orders must be >= 2, got {m}")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "exponent", reduce(math.lcm, orders, 1))
        object.__setattr__(self, "order", math.prod(orders))

    @property
    def rank(self) -> int:
        return len(self.orders)

    def is_cubelike(self) -> bool:
        return self.exponent <= 2

    @property
    def dimension(self) -> int:
        """d for Z_2^d; only meaningful for cubelike groups."""
        return self.rank

    def zero(self) -> GroupElement:
        return (0,) * self.rank

    def element(self, coords: Sequence[int]) -> GroupElement:
        """Validate a coordinate vector and return it as a tuple."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InvalidElement(f"expected {self.rank} coordinates, got {len(coords)}")
        for c, m in zip(coords, self.orders):
            if not 0 <= c < m:
                raise InvalidElement(f"residue {c} out of range for Z{m}")
        return coords

    def add(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.orders))

    def neg(self, g: GroupElement) -> GroupElement:
        return tuple((-a) % m for a, m in zip(g, self.orders))

    def scale(self, k: int, g: GroupElement) -> GroupElement:
        return tuple((k * a) % m for a, m in zip(g, self.orders))

    def element_order(self, g: GroupElement) -> int:
        return reduce(math.lcm, (m // math.gcd(a, m) for a, m in zip(g, self.orders)), 1)

    def is_involution_or_zero(self, g: GroupElement) -> bool:
        return all((2 * a) % m == 0 for a, m in zip(g, self.orders))

    def elements(self) -> Iterator[GroupElement]:
        return itertools.product(*(range(m) for m in self.orders))

    def __iter__(self):
        return self.elements()

    def __len__(self):
        return self.order

    def index(self, g: GroupElement) -> int:
        idx = 0
        for a, m in zip(g, self.orders):
            idx = idx * m + a
        return idx

    def element_at(self, idx: int) -> GroupElement:
        coords = []
        for m in reversed(self.orders):
            idx, a = divmod(idx, m)
            coords.append(a)
        return tuple(reversed(coords))

    @cached_property
    def element_array(self) -> np.ndarray:
        """All elements as an (order, rank) int64 array in lexicographic order."""
        if self.rank == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.indices(self.orders, dtype=np.int64)
        return grids.reshape(self.rank, -1).T.copy()

    @cached_property
    def radix(self) -> np.ndarray:
        """Place values: flat index = coords @ radix."""
        out = np.ones(self.rank, dtype=np.int64)
        for i in range(self.rank - 2, -1, -1):
            out[i] = out[i + 1] * self.orders[i + 1]
        return out

    @cached_property
    def character_scale(self) -> np.ndarray:
        """N / m_i per coordinate: psi_a(g) = zeta_N ** sum(a_i * g_i * scale_i)."""
        return np.array([self.exponent // m for m in self.orders], dtype=np.int64)

    def involutions(self) -> list[GroupElement]:
        """Elements g with 2g = 0, zero included, in lexicographic order."""
        halves = [(0, m // 2) if m % 2 == 0 else (0,) for m in self.orders]
        return list(itertools.product(*halves))

    def to_bits(self, g: GroupElement) -> str:
        return "".join(str(a) for a in g)

    def __str__(self):
        if not self.orders:
            return "Z1"
        parts = []
        for m, run in itertools.groupby(self.orders):
            k = len(list(run))
            parts.append(f"Z{m}" if k == 1 else f"Z{m}^{k}")
        return "x".join(parts)


def group_new(orders: Sequence[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))


_FACTOR = re.compile(r"\s*z\s*(\d+)\s*(?:\^\s*(\d+))?\s*", re.IGNORECASE)


def parse_group(text: str) -> FiniteAbelianGroup:
    """Parse literals like ``Z2^5``, ``Z4^2`` or ``Z2^5xZ3`` (case-insensitive).

    ``Z1`` denotes the trivial group.
    """
    orders: list[int] = []
    pos = 0
    pieces = re.split(r"(x|\*)", text, flags=re.IGNORECASE)
    for i, piece in enumerate(pieces):
        if i % 2 == 1:
            pos += len(piece)
            continue
        m = _FACTOR.fullmatch(piece)
        if not m:
            raise ParseError(f"bad group factor {piece.strip()!r}", pos)
        base = int(m.group(1))
        power = int(m.group(2)) if m.group(2) else 1
        if base == 0:
            raise ParseError("cyclic factor Z0 is not finite", pos)
        if base > 1:
            orders.extend([base] * power)
        pos += len(piece)
    return FiniteAbelianGroup(tuple(orders))


def _char_exponent(G: FiniteAbelianGroup, a: CharacterIndex, g: GroupElement) -> int:
    if len(a) != G.rank or len(g) != G.rank:
        raise InvalidElement(f"expected {G.rank} coordinates, got {len(a)} and {len(g)}")
    n = G.exponent
    return sum(x * y * (n // m) for x, y, m in zip(a, g, G.orders)) % n


def char_value(G: FiniteAbelianGroup, a: CharacterIndex, g: GroupElement) -> CyclotomicInteger:
    """psi_a(g) as an exact root of unity in Z[zeta_N], N the group exponent."""
    return CyclotomicInteger.root_of_unity(G.exponent, _char_exponent(G, a, g))


def char_sign(G: FiniteAbelianGroup, a: CharacterIndex, g: GroupElement) -> int:
    """psi_a(g) as +1/-1 for g with 2g = 0."""
    e = _char_exponent(G, a, g)
    if e == 0:
        return 1
    if 2 * e == G.exponent:
        return -1
    raise InvalidElement(f"{g} is not an involution; character value is not real")
