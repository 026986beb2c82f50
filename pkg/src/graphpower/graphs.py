"""Finite simple graphs: construction, classification, enumeration, IO.

Vertices are always 0..n-1. Graphs are immutable after construction and all
operations are pure, so values can be shared freely.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    IndexOutOfRange,
    InvalidParameter,
    LimitExceeded,
    MalformedGraph6,
    SelfLoopRejected,
    SpecParseError,
)

CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)  # n = 1..8

# branch-and-bound canonical labeling is exponential in the worst case; this
# library only needs it at enumeration scale
_CERTIFICATE_MAX_N = 16


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "labels", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple], labels: Optional[Sequence[str]] = None):
        if n < 1:
            raise InvalidParameter("graphs need at least one vertex")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopRejected(f"self-loop at {u}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(canon)
        self.labels = tuple(labels) if labels is not None else None
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = tuple(sum(1 << w for w in s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def build_graph(n: int, edges: Iterable[tuple], labels=None) -> Graph:
    """Build a graph from explicit edges.

    Duplicate edges are accepted idempotently (the edge set is a set); bad
    indices and self-loops raise.
    """
    return Graph(n, edges, labels)


def closed_neighborhood(g: Graph, v: int) -> frozenset:
    """v together with its neighbors."""
    return g.neighbors(v) | {v}


# -- standard families --------------------------------------------------------

def path(n: int) -> Graph:
    _at_least(n, 1, "path")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _at_least(n, 3, "cycle")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _at_least(n, 1, "complete")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    _at_least(m, 1, "complete_bipartite")
    _at_least(n, 1, "complete_bipartite")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """Star with n leaves (n+1 vertices, hub 0)."""
    _at_least(n, 1, "star")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def hypercube(d: int) -> Graph:
    """d-cube on the d-bit strings in binary order."""
    if d < 0:
        raise InvalidParameter("hypercube needs d >= 0")
    n = 1 << d
    return Graph(max(n, 1), [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def folded_cube(d: int) -> Graph:
    """(d-1)-cube with every pair of antipodal vertices joined."""
    _at_least(d, 2, "folded_cube")
    base = hypercube(d - 1)
    n = base.n
    extra = [(v, v ^ (n - 1)) for v in range(n) if v < v ^ (n - 1)]
    return Graph(n, list(base.edges) + extra)


def wheel(n: int) -> Graph:
    """Wheel on n vertices: hub n-1 joined to the cycle 0..n-2."""
    _at_least(n, 4, "wheel")
    rim = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
    spokes = [(i, n - 1) for i in range(n - 1)]
    return Graph(n, rim + spokes)


def grid(m: int, k: int) -> Graph:
    _at_least(m, 1, "grid")
    _at_least(k, 1, "grid")
    edges = []
    for i in range(m):
        for j in range(k):
            if j + 1 < k:
                edges.append((i * k + j, i * k + j + 1))
            if i + 1 < m:
                edges.append((i * k + j, (i + 1) * k + j))
    return Graph(m * k, edges)


def tadpole(m: int, k: int) -> Graph:
    """Cycle on m vertices with a pendant path of k extra vertices at vertex 0."""
    _at_least(m, 3, "tadpole")
    _at_least(k, 1, "tadpole")
    edges = [(i, (i + 1) % m) for i in range(m)]
    prev = 0
    for t in range(k):
        edges.append((prev, m + t))
        prev = m + t
    return Graph(m + k, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def triangle_strip(n: int) -> Graph:
    """Vertices 0..n-1 with triangles 012, 123, ..., (n-3)(n-2)(n-1)."""
    _at_least(n, 3, "triangle_strip")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    return Graph(n, edges)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "hypercube": (hypercube, 1),
    "folded_cube": (folded_cube, 1),
    "wheel": (wheel, 1),
    "grid": (grid, 2),
    "tadpole": (tadpole, 2),
    "petersen": (petersen, 0),
    "triangle_strip": (triangle_strip, 1),
}


def make_family(family: str, *params: int) -> Graph:
    if family not in FAMILIES:
        raise InvalidParameter(f"unknown family {family!r}")
    fn, arity = FAMILIES[family]
    if len(params) != arity:
        raise InvalidParameter(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def _at_least(value: int, minimum: int, family: str) -> None:
    if value < minimum:
        raise InvalidParameter(f"{family} parameter {value} below minimum {minimum}")


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    connected: bool
    components: tuple
    girth: float  # math.inf for forests
    nbhd_distinguishable: bool
    square_completion: bool
    degree_sequence: tuple

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "components": [list(c) for c in self.components],
            "girth": None if math.isinf(self.girth) else int(self.girth),
            "nbhd_distinguishable": self.nbhd_distinguishable,
            "square_completion": self.square_completion,
            "degree_sequence": list(self.degree_sequence),
        }


def distances(g: Graph, source: int) -> list:
    """BFS distances from source; unreachable vertices get -1."""
    g._check(source)
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g._adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def components(g: Graph) -> tuple:
    seen = [False] * g.n
    out = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = []
        stack = [v]
        seen[v] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle; inf for forests.

    For each edge, the shortest cycle through it is 1 + the distance between
    its endpoints with the edge removed. Quadratic, fine at desk scale.
    """
    best = math.inf
    for u, v in g.edges:
        dist = [-1] * g.n
        dist[u] = 0
        frontier = [u]
        while frontier and dist[v] < 0:
            nxt = []
            for a in frontier:
                for b in g._adj[a]:
                    if a == u and b == v:
                        continue
                    if dist[b] < 0:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        if dist[v] >= 0:
            best = min(best, dist[v] + 1)
    return best


def is_neighborhood_distinguishable(g: Graph) -> bool:
    """No two vertices share a closed neighborhood."""
    seen = set()
    for v in range(g.n):
        key = g._masks[v] | (1 << v)
        if key in seen:
            return False
        seen.add(key)
    return True


def has_square_completion(g: Graph) -> bool:
    """Every 3-vertex path u-v-w extends to a 4-cycle through a vertex
    outside {u, v, w} adjacent to both u and w."""
    for v in range(g.n):
        nbrs = sorted(g._adj[v])
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                u, w = nbrs[a], nbrs[b]
                common = g._masks[u] & g._masks[w] & ~(1 << v)
                if common == 0:
                    return False
    return True


def classify(g: Graph) -> Classification:
    comps = components(g)
    return Classification(
        connected=len(comps) == 1,
        components=comps,
        girth=girth(g),
        nbhd_distinguishable=is_neighborhood_distinguishable(g),
        square_completion=has_square_completion(g),
        degree_sequence=tuple(sorted((len(g._adj[v]) for v in range(g.n)), reverse=True)),
    )


def reduce_indistinguishable(g: Graph) -> Graph:
    """Delete one vertex of each neighborhood-indistinguishable pair until
    none remain. Idempotent; the result's isomorphism class does not depend
    on deletion order."""
    current = g
    while True:
        pair = None
        for u in range(current.n):
            for v in range(u + 1, current.n):
                if current._masks[u] | (1 << u) == current._masks[v] | (1 << v):
                    pair = (u, v)
                    break
            if pair:
                break
        if pair is None:
            return current
        current = delete_vertex(current, pair[1])


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check(v)
    if g.n == 1:
        raise InvalidParameter("cannot delete the last vertex")
    keep = [u for u in range(g.n) if u != v]
    index = {u: i for i, u in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if a != v and b != v]
    return Graph(g.n - 1, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph(a.n + b.n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so that new vertex i is old vertex perm[i]."""
    inv = [0] * g.n
    for i, v in enumerate(perm):
        inv[v] = i
    return Graph(g.n, [(inv[u], inv[v]) for u, v in g.edges])


# -- canonical labeling and isomorph-free enumeration --------------------------

def canonical_form(g: Graph) -> tuple:
    """(certificate, placement) where certificate is the lexicographically
    smallest column-code sequence over all vertex orderings and placement[i]
    is the original vertex put at position i.

    Column code at position j packs the adjacency bits of the new vertex to
    positions 0..j-1, earliest position most significant; comparing code
    sequences equals comparing the packed upper-triangle bit string.
    """
    n = g.n
    if n > _CERTIFICATE_MAX_N:
        raise LimitExceeded(f"canonical labeling capped at {_CERTIFICATE_MAX_N} vertices")
    masks = g._masks
    best: Optional[list] = None
    best_perm: Optional[list] = None
    perm: list = []
    codes: list = []

    def extend(depth: int, tight: bool) -> None:
        nonlocal best, best_perm
        if depth == n:
            if best is None or codes < best:
                best = codes.copy()
                best_perm = perm.copy()
            return
        options = []
        for v in range(n):
            if v in perm:
                continue
            mv = masks[v]
            code = 0
            for u in perm:
                code = (code << 1) | (mv >> u & 1)
            options.append((code, v))
        options.sort()
        for code, v in options:
            if best is not None and tight:
                if code > best[depth]:
                    break  # sorted: everything after is larger too
                child_tight = code == best[depth]
            else:
                child_tight = False
            perm.append(v)
            codes.append(code)
            extend(depth + 1, child_tight if best is not None else True)
            perm.pop()
            codes.pop()

    extend(0, True)
    return (n, tuple(best)), best_perm


def canonical_certificate(g: Graph) -> tuple:
    return canonical_form(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_form(g)[1])


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    return canonical_certificate(a) == canonical_certificate(b)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs
    on n vertices, by vertex augmentation from canonical (n-1)-vertex parents.

    Every connected graph has a non-cut vertex, so augmenting each parent by
    one new vertex with every nonempty neighbor set reaches every class.
    Capped at n = 8 (desk scale)."""
    if n < 1:
        raise InvalidParameter("n must be positive")
    if n > 8:
        raise LimitExceeded("enumeration capped at 8 vertices")
    if n == 1:
        yield Graph(1, [])
        return
    seen = set()
    for parent in enumerate_connected_graphs(n - 1):
        base_edges = list(parent.edges)
        for mask in range(1, 1 << (n - 1)):
            edges = base_edges + [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            child = Graph(n, edges)
            cert, perm = canonical_form(child)
            if cert not in seen:
                seen.add(cert)
                yield relabel(child, perm)


# -- graph6, DOT, JSON --------------------------------------------------------

def _g6_size_bytes(n: int) -> list:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise InvalidParameter("graph too large for graph6")


def graph6_encode(g: Graph) -> str:
    """Encode in graph6: size bytes, then the upper triangle in column order,
    six bits per character, offset 63."""
    bits = []
    for j in range(1, g.n):
        mj = g._masks[j]
        for i in range(j):
            bits.append(mj >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    vals = _g6_size_bytes(g.n)
    for k in range(0, len(bits), 6):
        word = 0
        for b in bits[k:k + 6]:
            word = (word << 1) | b
        vals.append(word)
    return "".join(chr(v + 63) for v in vals)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise MalformedGraph6(f"byte {ch!r} outside graph6 range")
        vals.append(v)
    if vals[0] <= 62:
        n, idx = vals[0], 1
    elif len(vals) >= 4 and vals[1] <= 62:
        n, idx = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        idx = 8
    else:
        raise MalformedGraph6("truncated size field")
    if n < 1:
        raise MalformedGraph6("graph6 with zero vertices unsupported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - idx != need:
        raise MalformedGraph6(f"expected {need} data bytes, got {len(vals) - idx}")
    bits = []
    for v in vals[idx:]:
        bits.extend((v >> s_) & 1 for s_ in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.labels[v] if g.labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def from_json(obj: dict) -> Graph:
    return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])


# -- CLI graph mini-language ---------------------------------------------------

_SPEC_PATTERNS = [
    (re.compile(r"^P(\d+)$"), lambda m: path(int(m.group(1)))),
    (re.compile(r"^C(\d+)$"), lambda m: cycle(int(m.group(1)))),
    (re.compile(r"^K(\d+)$"), lambda m: complete(int(m.group(1)))),
    (re.compile(r"^K(\d+),(\d+)$"), lambda m: complete_bipartite(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^St(\d+)$"), lambda m: star(int(m.group(1)))),
    (re.compile(r"^Q(\d+)$"), lambda m: hypercube(int(m.group(1)))),
    (re.compile(r"^FQ(\d+)$"), lambda m: folded_cube(int(m.group(1)))),
    (re.compile(r"^W(\d+)$"), lambda m: wheel(int(m.group(1)))),
    (re.compile(r"^T(\d+),(\d+)$"), lambda m: tadpole(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"^TS(\d+)$"), lambda m: triangle_strip(int(m.group(1)))),
    (re.compile(r"^grid(\d+)x(\d+)$"), lambda m: grid(int(m.group(1)), int(m.group(2)))),
]


def parse_graph_spec(token: str) -> Graph:
    """Parse the CLI graph mini-language.

    Accepted forms: family shorthands (P5, C4, K5, K2,3, St3, Q3, FQ5, W6,
    T4,1, TS6, grid5x5, petersen), a literal `g6:<chars>` graph6 string, or
    `@path` naming a JSON file {"n": ..., "edges": [[i, j], ...]}.
    """
    tok = token.strip()
    if not tok:
        raise SpecParseError(token, "empty graph spec")
    if tok.lower() == "petersen":
        return petersen()
    if tok.startswith("g6:"):
        try:
            return graph6_decode(tok[3:])
        except MalformedGraph6 as exc:
            raise SpecParseError(tok, f"bad graph6 ({exc})") from exc
    if tok.startswith("@"):
        try:
            with open(tok[1:], "r", encoding="utf-8") as fh:
                return from_json(json.load(fh))
        except OSError as exc:
            raise SpecParseError(tok, f"cannot read file ({exc})") from exc
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecParseError(tok, f"bad graph JSON ({exc})") from exc
    for pattern, builder in _SPEC_PATTERNS:
        m = pattern.match(tok)
        if m:
            try:
                return builder(m)
            except InvalidParameter as exc:
                raise SpecParseError(tok, str(exc)) from exc
    raise SpecParseError(tok, "unrecognized graph spec")
