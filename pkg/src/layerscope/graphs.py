"""De Bruijn and Kautz digraphs in sequence representation.

A vertex of B(d, D) is a word of D symbols over an alphabet of size d; a vertex
of K(d, D) is a word of D symbols over an alphabet of size d + 1 in which
consecutive symbols differ. In both families v1 v2 ... vD is adjacent to the d
vertices v2 ... vD x (for K, x != vD). Distance has a closed form: d(v, z) is
the smallest k such that the last D - k symbols of v equal the first D - k
symbols of z, and the shortest path between two vertices is unique.

Vertices are plain tuples of ints; symbols are 0 .. alphabet_size - 1.
All functions are pure and all returned collections are in deterministic
(lexicographic / ascending-symbol) order.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Tuple

from .errors import (
    KautzRepeat,
    LengthMismatch,
    SameVertex,
    SymbolOutOfRange,
    TooLarge,
    VertexNotInGraph,
)

Vertex = Tuple[int, ...]

DEFAULT_VERTEX_CAP = 200_000
CAP_ENV_VAR = "LAYERSCOPE_CAP"


class Family(Enum):
    DEBRUIJN = "B"
    KAUTZ = "K"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().upper()
        if key in ("B", "DEBRUIJN", "DE_BRUIJN"):
            return cls.DEBRUIJN
        if key in ("K", "KAUTZ"):
            return cls.KAUTZ
        raise ValueError(f"unknown family {text!r} (expected 'B' or 'K')")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GraphParams:
    """Family plus degree d >= 2 and diameter D >= 1."""

    family: Family
    d: int
    D: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"degree d must be >= 2, got {self.d}")
        if self.D < 1:
            raise ValueError(f"diameter D must be >= 1, got {self.D}")

    @property
    def alphabet_size(self) -> int:
        return self.d if self.family is Family.DEBRUIJN else self.d + 1

    @property
    def vertex_count(self) -> int:
        n = self.d**self.D
        if self.family is Family.KAUTZ:
            n += self.d ** (self.D - 1)
        return n

    def __str__(self) -> str:
        return f"{self.family}({self.d},{self.D})"


def vertex_count_poly(family: Family, D: int):
    """|V| as a polynomial in d: d^D for De Bruijn, d^D + d^(D-1) for Kautz."""
    from .polynomials import IntPolynomial

    p = IntPolynomial.monomial(D)
    if family is Family.KAUTZ:
        p = p + IntPolynomial.monomial(D - 1)
    return p


def validate_vertex(params: GraphParams, raw) -> Vertex:
    """Check length, symbol range and the Kautz no-repeat rule; returns the vertex tuple."""
    v = tuple(int(s) for s in raw)
    if len(v) != params.D:
        raise LengthMismatch(f"expected {params.D} symbols, got {len(v)}")
    size = params.alphabet_size
    for s in v:
        if not 0 <= s < size:
            raise SymbolOutOfRange(f"symbol {s} outside [0, {size})")
    if params.family is Family.KAUTZ:
        for a, b in zip(v, v[1:]):
            if a == b:
                raise KautzRepeat(f"consecutive equal symbols in Kautz vertex {format_vertex(params, v)}")
    return v


def successors(params: GraphParams, v: Vertex) -> List[Vertex]:
    """The d vertices v2 ... vD x, ascending in the appended symbol x."""
    shifted = v[1:]
    if params.family is Family.DEBRUIJN:
        return [shifted + (x,) for x in range(params.alphabet_size)]
    last = v[-1]
    return [shifted + (x,) for x in range(params.alphabet_size) if x != last]


def is_successor(params: GraphParams, v: Vertex, w: Vertex) -> bool:
    if len(w) != params.D or w[: params.D - 1] != v[1:]:
        return False
    if params.family is Family.DEBRUIJN:
        return True
    return w[-1] != v[-1]


def distance(params: GraphParams, v: Vertex, z: Vertex) -> int:
    """Smallest k in [0, D] with v[k:] == z[:D-k].

    k = D (empty overlap) is always a valid stopping point: in B a walk of
    length D exists between any two vertices, and in K the k = D walk needs
    z1 != vD, which holds whenever k = D - 1 did not already match.
    """
    D = params.D
    for k in range(D + 1):
        if v[k:] == z[: D - k]:
            return k
    raise AssertionError("unreachable: k = D always matches")


def shortest_path(params: GraphParams, v: Vertex, z: Vertex) -> List[Vertex]:
    """The unique shortest path v, u_1, ..., u_{k-1}, z between distinct vertices.

    Intermediate vertices are u_i = v_{i+1} ... v_k z_1 ... z_{D-k+i}.
    """
    if v == z:
        raise SameVertex("shortest_path requires two distinct vertices")
    k = distance(params, v, z)
    path = [v]
    for i in range(1, k):
        path.append(v[i:k] + z[: params.D - k + i])
    path.append(z)
    return path


@dataclass(frozen=True, eq=False)
class ExplicitDigraph:
    """Materialized vertex and adjacency lists for one concrete (d, D).

    Immutable after construction; safe for concurrent reads.
    """

    params: GraphParams
    vertices: Tuple[Vertex, ...]
    succ: Tuple[Tuple[int, ...], ...]  # succ[i] lists vertex ids adjacent from vertices[i]
    index: dict  # vertex tuple -> id

    def index_of(self, v: Vertex) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise VertexNotInGraph(f"{v} is not a vertex of {self.params}") from None


def _enumerate_vertices(params: GraphParams) -> Iterator[Vertex]:
    """All valid vertices in lexicographic order."""
    size = params.alphabet_size
    kautz = params.family is Family.KAUTZ
    word = [0] * params.D

    def extend(pos: int) -> Iterator[Vertex]:
        if pos == params.D:
            yield tuple(word)
            return
        for s in range(size):
            if kautz and pos > 0 and s == word[pos - 1]:
                continue
            word[pos] = s
            yield from extend(pos + 1)

    yield from extend(0)


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_VERTEX_CAP


def build_explicit(params: GraphParams, max_vertices: int | None = None) -> ExplicitDigraph:
    """Materialize the digraph; refuses graphs above the vertex cap."""
    cap = default_cap() if max_vertices is None else max_vertices
    n = params.vertex_count
    if n > cap:
        raise TooLarge(f"{params} has {n} vertices, above the cap of {cap}")
    vertices = tuple(_enumerate_vertices(params))
    assert len(vertices) == n
    index = {v: i for i, v in enumerate(vertices)}
    succ = tuple(tuple(index[w] for w in successors(params, v)) for v in vertices)
    return ExplicitDigraph(params=params, vertices=vertices, succ=succ, index=index)


def bfs_distances(g: ExplicitDigraph, source_id: int) -> bytearray:
    """Distances from one source over the explicit adjacency, as a byte per vertex."""
    dist = bytearray(b"\xff" * len(g.vertices))
    dist[source_id] = 0
    queue = deque([source_id])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.succ[u]:
            if dist[w] == 255:
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs_layers(g: ExplicitDigraph, v: Vertex) -> List[frozenset]:
    """Exact distance layers S_0*, ..., S_D* of v; their union is the whole vertex set."""
    src = g.index_of(v)
    dist = bfs_distances(g, src)
    layers = [set() for _ in range(g.params.D + 1)]
    for i, dv in enumerate(dist):
        assert dv <= g.params.D, "BFS exceeded the diameter"
        layers[dv].add(g.vertices[i])
    return [frozenset(layer) for layer in layers]


def format_vertex(params: GraphParams, v: Vertex) -> str:
    """Symbols joined bare for alphabets up to 10 symbols, '.'-separated beyond."""
    if params.alphabet_size <= 10:
        return "".join(str(s) for s in v)
    return ".".join(str(s) for s in v)


def parse_vertex(params: GraphParams, text: str) -> Vertex:
    """Inverse of format_vertex, with full validation."""
    if "." in text:
        raw = [int(p) for p in text.split(".")]
    else:
        raw = [int(ch) for ch in text]
    return validate_vertex(params, raw)
