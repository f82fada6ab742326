"""Explicit graph families with strongly cospectral sets of size four, and parsers.

Index conventions: basis vector e_i (1-based) is coordinate i - 1, and the
Sage-style generator ``fi`` (0-based) is coordinate i. Bitstrings are read left
to right starting at coordinate 0.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .cayley import CayleyGraph, ConnectionSet, cayley_graph, connection_set_new, spectrum
from .cospectral import strongly_cospectral_to_zero
from .errors import BadDimension, EvenCycle, NotCubelike, ParseError
from .groups import FiniteAbelianGroup, GroupElement, parse_group

__all__ = [
    "APPENDIX_A",
    "APPENDIX_A_SPECTRA",
    "construct_odd",
    "construct_even",
    "cycle_product",
    "hypercube",
    "appendix_catalog",
    "appendix_graph",
    "parse_connection_set",
    "parse_graph_spec",
    "graph_from_json",
    "search_random",
]

APPENDIX_A = (
    "[f0, f1, f2, f3, f4, f0*f4, f1*f4, f2*f4, f3*f4, f0*f1*f2*f3]",
    "[f0, f1, f2, f3, f4, f0*f1, f2*f3, f2*f4, f3*f4, f0*f2*f3*f4, f1*f2*f3*f4]",
    "[f0, f1, f2, f3, f4, f0*f4, f1*f4, f2*f3, f2*f4, f3*f4, f0*f1*f2*f3, f0*f1*f2*f3*f4]",
    "[f0, f1, f2, f3, f4, f1*f4, f2*f3, f2*f4, f3*f4, f0*f1*f4, f1*f2*f3, f0*f1*f2*f3, f0*f2*f3*f4]",
    "[f0, f1, f2, f3, f4, f0*f1, f0*f2, f0*f3, f1*f4, f2*f4, f3*f4, f0*f1*f2*f4, f0*f1*f3*f4, f0*f2*f3*f4]",
    "[f0, f1, f2, f3, f4, f0*f1, f0*f2, f0*f3, f0*f4, f1*f2, f1*f3, f1*f4, f2*f3, f2*f4, f0*f1*f2*f3*f4]",
)

# published spectra of the six catalogue graphs: eigenvalue -> multiplicity
APPENDIX_A_SPECTRA = (
    {-6: 1, -4: 4, -2: 8, 0: 8, 2: 6, 4: 4, 10: 1},
    {-5: 3, -3: 6, -1: 8, 1: 8, 3: 4, 5: 2, 11: 1},
    {-6: 2, -4: 3, -2: 8, 0: 8, 2: 6, 4: 4, 12: 1},
    {-5: 4, -3: 5, -1: 8, 1: 8, 3: 4, 5: 2, 13: 1},
    {-6: 2, -4: 4, -2: 7, 0: 8, 2: 6, 4: 4, 14: 1},
    {-5: 4, -3: 6, -1: 7, 1: 8, 3: 4, 5: 2, 15: 1},
)


def _basis_sum(d: int, *indices: int) -> GroupElement:
    """e_i + e_j + ... in Z_2^d with 1-based indices."""
    v = [0] * d
    for i in indices:
        v[i - 1] ^= 1
    return tuple(v)


def _xor(*vs: GroupElement) -> GroupElement:
    out = [0] * len(vs[0])
    for v in vs:
        out = [a ^ b for a, b in zip(out, v)]
    return tuple(out)


def _odd_parts(d: int) -> list[list[GroupElement]]:
    c1 = [_basis_sum(d, i) for i in range(1, d + 1)]
    c2 = [_basis_sum(d, 1, 2), _basis_sum(d, 1, 3), _basis_sum(d, 2, 3)]
    c3 = [_basis_sum(d, i, j) for i in range(4, d + 1) for j in range(i + 1, d + 1)]
    c4 = [_basis_sum(d, 1, 2, 3, i) for i in range(4, d + 1)]
    return [c1, c2, c3, c4]


def _check_odd(d: int):
    if d < 5 or d % 2 == 0:
        raise BadDimension(f"construction needs an odd d >= 5, got {d}")


def construct_odd(d: int) -> CayleyGraph:
    """Connected cubelike graph on 2^d vertices (d odd >= 5) with |H| >= 4.

    ``meta["guaranteed"]`` lists {0, e1+e2+e3, sigma, e1+e2+e3+sigma}.
    """
    _check_odd(d)
    parts = _odd_parts(d)
    elements = [c for part in parts for c in part]
    G = FiniteAbelianGroup((2,) * d)
    g = _basis_sum(d, 1, 2, 3)
    sigma = (1,) * d
    meta = {
        "family": "odd",
        "d": d,
        "sigma": sigma,
        "generator": g,
        "guaranteed": sorted([G.zero(), g, sigma, _xor(g, sigma)]),
    }
    return cayley_graph(G, elements, name=f"odd({d})", meta=meta)


def construct_even(d: int) -> CayleyGraph:
    """Cubelike graph on 2^(d+1) vertices for odd d >= 5.

    The connection set is the odd construction, embedded in Z_2^(d+1), plus
    e_(d+1) and e_1 + ... + e_d.
    """
    _check_odd(d)
    D = d + 1
    base = [c + (0,) for part in _odd_parts(d) for c in part]
    extra = [_basis_sum(D, D), _basis_sum(D, *range(1, d + 1))]
    G = FiniteAbelianGroup((2,) * D)
    sigma = _basis_sum(D, D)
    if D % 4 == 2:
        predicted = _basis_sum(D, 1, 2, 3)
    else:
        predicted = _basis_sum(D, *range(4, d + 1))
    meta = {
        "family": "even",
        "d": d,
        "sigma": sigma,
        "generator": predicted,
        "guaranteed": sorted([G.zero(), sigma, predicted, _xor(sigma, predicted)]),
    }
    return cayley_graph(G, base + extra, name=f"even({D})", meta=meta)


def cycle_product(X: CayleyGraph, m: int) -> CayleyGraph:
    """Cartesian product X with the m-cycle, as a Cayley graph of Z_2^d x Z_m."""
    if not X.group.is_cubelike():
        raise NotCubelike("cycle products are defined for cubelike graphs")
    if m % 2 == 0:
        raise EvenCycle(f"cycle length must be odd, got {m}")
    if m < 3:
        raise BadDimension(f"cycle length must be at least 3, got {m}")
    G = FiniteAbelianGroup(X.group.orders + (m,))
    elements = [c + (0,) for c in X.conn] + [X.group.zero() + (1,), X.group.zero() + (m - 1,)]
    name = f"{X.name or X.group} x C{m}"
    return cayley_graph(G, elements, name=name, meta={"family": "product", "m": m})


def hypercube(d: int) -> CayleyGraph:
    if d < 1:
        raise BadDimension(f"hypercube dimension must be positive, got {d}")
    G = FiniteAbelianGroup((2,) * d)
    return cayley_graph(G, [_basis_sum(d, i) for i in range(1, d + 1)], name=f"Q{d}")


def appendix_graph(k: int) -> CayleyGraph:
    """Catalogue entry k (1-based) on Z_2^5."""
    if not 1 <= k <= len(APPENDIX_A):
        raise ValueError(f"catalogue entries are numbered 1..{len(APPENDIX_A)}, got {k}")
    G = FiniteAbelianGroup((2,) * 5)
    conn = parse_connection_set(G, APPENDIX_A[k - 1])
    return CayleyGraph(G, conn, name=f"appendixA:{k}", meta={"family": "appendixA", "k": k})


def appendix_catalog() -> list[CayleyGraph]:
    return [appendix_graph(k) for k in range(1, len(APPENDIX_A) + 1)]


_TOKEN = re.compile(r"[^\s,\[\]]+")
_GEN = re.compile(r"f(\d+)(?:\^(\d+))?", re.IGNORECASE)


def _parse_product(G: FiniteAbelianGroup, token: str, pos: int) -> GroupElement:
    coords = [0] * G.rank
    offset = 0
    for factor in token.split("*"):
        m = _GEN.fullmatch(factor)
        if not m:
            raise ParseError(f"bad generator product {token!r}", pos + offset)
        i = int(m.group(1))
        if i >= G.rank:
            raise ParseError(f"generator f{i} out of range for a group of rank {G.rank}", pos + offset)
        k = int(m.group(2)) if m.group(2) else 1
        coords[i] = (coords[i] + k) % G.orders[i]
        offset += len(factor) + 1
    return tuple(coords)


def _parse_digits(G: FiniteAbelianGroup, token: str, pos: int) -> GroupElement:
    if len(token) != G.rank:
        raise ParseError(f"element {token!r} has {len(token)} digits, group rank is {G.rank}", pos)
    coords = tuple(int(ch) for ch in token)
    for i, (a, m) in enumerate(zip(coords, G.orders)):
        if a >= m:
            raise ParseError(f"digit {a} out of range for Z{m}", pos + i)
    return coords


def _parse_json_elements(G: FiniteAbelianGroup, items) -> list[GroupElement]:
    out = []
    for item in items:
        if isinstance(item, str):
            out.append(_parse_token(G, item, 0))
        elif isinstance(item, list) and all(isinstance(a, int) for a in item):
            if len(item) != G.rank:
                raise ParseError(f"element {item} has {len(item)} coordinates, group rank is {G.rank}")
            out.append(G.element([a % m for a, m in zip(item, G.orders)]))
        else:
            raise ParseError(f"cannot read element {item!r}")
    return out


def _parse_token(G: FiniteAbelianGroup, token: str, pos: int) -> GroupElement:
    if token[:1] in "fF":
        return _parse_product(G, token, pos)
    if token.isdigit():
        return _parse_digits(G, token, pos)
    raise ParseError(f"unrecognised element {token!r}", pos)


def parse_connection_set(G: FiniteAbelianGroup, text: str) -> ConnectionSet:
    """Read a connection set in one of three formats.

    * generator products ``f0, f1*f4, f2^3`` (``fi`` is coordinate i);
    * digit strings such as bitstrings ``10101`` (leftmost digit is coordinate 0);
    * a JSON array of coordinate lists, e.g. ``[[1, 0], [0, 1]]``.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            # "[f0, f1]" is not JSON but is a valid product list
            if re.match(r"\[\s*[\[\"]", stripped):
                raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
        else:
            if not isinstance(items, list):
                raise ParseError("JSON connection set must be an array")
            return connection_set_new(G, _parse_json_elements(G, items))
    elements = [_parse_token(G, m.group(), m.start()) for m in _TOKEN.finditer(text)]
    return connection_set_new(G, elements)


def graph_from_json(obj: dict) -> CayleyGraph:
    try:
        G = parse_group(obj["group"])
        items = obj["connectionSet"]
    except (KeyError, TypeError):
        raise ParseError("graph JSON needs 'group' and 'connectionSet'") from None
    conn = connection_set_new(G, _parse_json_elements(G, items))
    return CayleyGraph(G, conn, name=str(obj.get("name", "")))


_FAMILIES = {
    "appendixa": appendix_graph,
    "hypercube": hypercube,
    "odd": construct_odd,
    "even": lambda D: construct_even(D - 1),
}


def parse_graph_spec(spec: str) -> CayleyGraph:
    """Graph from ``@file.json``, ``appendixA:k``, ``hypercube:d``, ``odd:d``,
    ``even:D`` (D the ambient dimension) or ``GROUP:CONNSET``."""
    if spec.startswith("@"):
        path = Path(spec[1:])
        try:
            obj = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc.msg}", exc.pos) from None
        return graph_from_json(obj)
    head, sep, tail = spec.partition(":")
    if not sep:
        raise ParseError("graph spec must look like GROUP:CONNSET, appendixA:k or @file")
    family = _FAMILIES.get(head.strip().lower())
    if family is not None:
        try:
            n = int(tail)
        except ValueError:
            raise ParseError(f"expected an integer after {head}:, got {tail!r}", len(head) + 1) from None
        return family(n)
    G = parse_group(head)
    return CayleyGraph(G, parse_connection_set(G, tail), name=spec)


def search_random(d: int, trials: int, target_size: int, seed: int) -> list[tuple[ConnectionSet, int]]:
    """Sample random connection sets in Z_2^d; keep those whose H has >= target_size elements.

    Trial t draws from its own generator spawned from ``numpy.random.SeedSequence(seed)``,
    each nonzero element entering C independently with probability 1/2.
    """
    G = FiniteAbelianGroup((2,) * d)
    found = []
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        mask = rng.random(G.order - 1) < 0.5
        elements = [G.element_at(int(i) + 1) for i in np.flatnonzero(mask)]
        X = CayleyGraph(G, ConnectionSet(G, tuple(elements)))
        h = len(strongly_cospectral_to_zero(X, spectrum(X)))
        if h >= target_size:
            found.append((X.conn, h))
    return found
