"""Deciding when a graph is reducible to abelian (RA).

A graph is RA when the coordinatewise commutator subgroup of every graph
power is the full [G,G]^n. That holds exactly when the intersection matrix
(rows: indicator vectors of pairwise closed-neighborhood intersections)
spans the full integer lattice, so the verdict is a Smith normal form
computation, with a cheaper modular-rank scan over the primes dividing the
largest activation divisor as a fast path.

Structural sufficient conditions (girth at least 5, girth-4 shapes, complete
bipartite shapes) are reported as advisory hints; the lattice test stays the
decision procedure.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd, inf
from typing import Optional

from .errors import InvalidParameter, LimitExceeded, NotPrime, PreconditionViolated, UnsupportedFamily
from .graphs import (
    Graph,
    classify,
    closed_neighborhood,
    distances,
    enumerate_connected_graphs,
    graph6_encode,
    is_connected,
    is_neighborhood_distinguishable,
)
from .zlinalg import (
    IntMat,
    divisor_tuple_str,
    is_prime,
    rank_mod_p,
    snf_divisors,
    spans_full_lattice,
)

RA_METHODS = ("snf_full_lattice", "prime_rank_scan", "structural_girth5",
              "structural_girth4", "census_cache")


def activation_matrix(graph: Graph) -> IntMat:
    """Adjacency plus identity; row v is the indicator of the closed
    neighborhood of v."""
    rows = []
    for v in range(graph.n):
        nbhd = closed_neighborhood(graph, v)
        rows.append(tuple(1 if w in nbhd else 0 for w in range(graph.n)))
    return IntMat(rows, cols=graph.n)


def ra_matrix(graph: Graph) -> IntMat:
    """One row per unordered vertex pair (u = v included): the indicator of
    B(u) cap B(v). Empty intersections stay as zero rows, so the shape is
    always n(n+1)/2 by n."""
    nbhds = [closed_neighborhood(graph, v) for v in range(graph.n)]
    rows = []
    for u in range(graph.n):
        for v in range(u, graph.n):
            inter = nbhds[u] & nbhds[v]
            rows.append(tuple(1 if w in inter else 0 for w in range(graph.n)))
    return IntMat(rows, cols=graph.n)


def _prime_factors(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class RAVerdict:
    graph: str          # graph6
    ra: bool
    method: str         # one of RA_METHODS
    witness: str

    def to_json(self) -> dict:
        return {"graph": self.graph, "ra": self.ra,
                "method": self.method, "witness": self.witness}


def is_ra(graph: Graph, method: str = "auto") -> RAVerdict:
    """Decide the RA property for a connected, neighborhood-distinguishable
    graph.

    method: "auto" tries the prime scan and falls back to the full lattice
    test; "fast" and "full" force one path (used for cross-checking).
    """
    if not is_connected(graph):
        raise PreconditionViolated("graph must be connected (reduce components first)")
    if not is_neighborhood_distinguishable(graph):
        raise PreconditionViolated(
            "graph has neighborhood-indistinguishable vertices (reduce first)")
    if method not in ("auto", "fast", "full"):
        raise InvalidParameter(f"unknown method {method!r}")
    g6 = graph6_encode(graph)
    n = graph.n
    C = ra_matrix(graph)
    if method != "full":
        divs_a = snf_divisors(activation_matrix(graph))
        largest = divs_a[-1] if divs_a else 1
        if largest == 1:
            return RAVerdict(g6, True, "prime_rank_scan",
                             "activation divisors all 1; nothing to test")
        if largest > 1:
            primes = _prime_factors(largest)
            failing = None
            for p in primes:
                if rank_mod_p(C, p) < n:
                    failing = p
                    break
            if failing is None:
                return RAVerdict(g6, True, "prime_rank_scan",
                                 "full rank mod " + ",".join(map(str, primes)))
            if method == "fast":
                return RAVerdict(g6, False, "prime_rank_scan", f"prime {failing}")
        elif method == "fast":
            raise InvalidParameter("fast path needs a nonzero largest activation divisor")
    divs_c = snf_divisors(C)
    full = len(divs_c) >= n and all(d == 1 for d in divs_c[:n])
    if full:
        return RAVerdict(g6, True, "snf_full_lattice",
                         f"divisors {divisor_tuple_str(divs_c[:n])}")
    bad = next((d for d in divs_c[:n] if d != 1), 0)
    if bad == 0:
        witness = "zero divisor (rank deficient)"
    else:
        witness = f"prime {_prime_factors(bad)[0]}"
    return RAVerdict(g6, False, "snf_full_lattice", witness)


def heisenberg_ra(graph: Graph, p: int) -> bool:
    """RA over the Heisenberg group of order p^3: full rank of the
    intersection matrix modulo p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return rank_mod_p(ra_matrix(graph), p) == graph.n


def pqr_criterion(graph: Graph, p: int) -> bool:
    """Row-sum obstruction: every degree is -1 mod p, adjacent pairs share
    -2 mod p common neighbors, and distance-2 pairs share 0 mod p. When it
    holds, every row sum of the intersection matrix vanishes mod p, so the
    graph is not RA over the Heisenberg group of order p^3."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    for v in range(graph.n):
        if (graph.degree(v) + 1) % p:
            return False
    dists = [distances(graph, v) for v in range(graph.n)]
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            common = len(graph.neighbors(u) & graph.neighbors(v))
            if graph.has_edge(u, v):
                if (common + 2) % p:
                    return False
            elif dists[u][v] == 2:
                if common % p:
                    return False
    return True


# -- structural hints -----------------------------------------------------------

@dataclass(frozen=True)
class Hint:
    rule: str
    conclusion: str  # "ra" or "strongly_ra"
    detail: str


def _complete_bipartition(graph: Graph) -> Optional[tuple]:
    """(m, n) when the graph is a complete bipartite graph, else None."""
    if not is_connected(graph):
        return None
    color = [-1] * graph.n
    color[0] = 0
    queue = [0]
    while queue:
        u = queue.pop()
        for w in graph.neighbors(u):
            if color[w] < 0:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    left = [v for v in range(graph.n) if color[v] == 0]
    right = [v for v in range(graph.n) if color[v] == 1]
    for u in left:
        if graph.neighbors(u) != frozenset(right):
            return None
    return len(left), len(right)


def structural_ra_hints(graph: Graph) -> list:
    """Sufficient conditions that fire for this graph. Advisory only; the
    lattice test remains the decision procedure."""
    hints = []
    cls = classify(graph)
    if not cls.connected:
        return hints
    girth = cls.girth
    if girth >= 5 and graph.n >= 3:
        tag = "girth >= 5" if girth != inf else "forest"
        hints.append(Hint("girth5", "strongly_ra", tag))
    if girth == 4:
        degs = [graph.degree(v) for v in range(graph.n)]
        if any(d == 1 for d in degs):
            hints.append(Hint("girth4_degree1", "strongly_ra", "pendant vertex"))
        if not cls.square_completion:
            hints.append(Hint("girth4_no_square_completion", "strongly_ra",
                              "a 3-vertex path with a unique middle"))
        if any(d == 2 for d in degs):
            hints.append(Hint("girth4_degree2", "ra", "degree-2 vertex"))
    parts = _complete_bipartition(graph)
    if parts is not None and min(parts) >= 1 and graph.n >= 3:
        m, n = parts
        hints.append(Hint("complete_bipartite", "ra", f"K_{{{m},{n}}}"))
        if gcd(m, n) == 1:
            hints.append(Hint("complete_bipartite_coprime", "strongly_ra",
                              f"gcd({m},{n}) = 1"))
    return hints


# -- closed-form divisor families -------------------------------------------------

def known_family_divisors(family: str, *params: int) -> tuple:
    """Closed-form activation divisor tuples for paths, cycles, complete
    bipartite graphs, and stars."""
    if family == "path":
        (n,) = params
        if n < 1:
            raise InvalidParameter("path needs n >= 1")
        return (1,) * (n - 1) + (0,) if n % 3 == 2 else (1,) * n
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise InvalidParameter("cycle needs n >= 3")
        if n % 3 == 0:
            return (1,) * (n - 2) + (0, 0)
        return (1,) * (n - 1) + (3,)
    if family == "complete_bipartite":
        m, n = params
        if min(m, n) < 1:
            raise InvalidParameter("complete_bipartite needs m, n >= 1")
        return (1,) * (m + n - 1) + (m * n - 1,)
    if family == "star":
        (n,) = params
        if n < 1:
            raise InvalidParameter("star needs n >= 1")
        return (1,) * n + (n - 1,)
    raise UnsupportedFamily(f"no closed form for {family!r}")


# -- census -----------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    n: int
    graph6: str
    divisors: tuple   # activation divisors
    ra: bool
    method: str
    witness: str


@dataclass(frozen=True)
class CensusSummary:
    n: int
    connected_classes: int
    distinguishable: int
    full_lattice: int
    ra_count: int


@dataclass(frozen=True)
class CensusReport:
    rows: tuple
    summaries: tuple

    def nontrivial_rows(self, max_n: Optional[int] = None) -> list:
        out = [r for r in self.rows
               if any(d != 1 for d in r.divisors)]
        if max_n is not None:
            out = [r for r in out if r.n <= max_n]
        return out

    def full_lattice_counts(self) -> tuple:
        return tuple(s.full_lattice for s in self.summaries)

    def distinguishable_counts(self) -> tuple:
        return tuple(s.distinguishable for s in self.summaries)


def census(max_n: int, allow_eight: bool = False,
           progress=None) -> CensusReport:
    """Analyze every connected neighborhood-distinguishable graph with up to
    max_n vertices: activation divisors and the RA verdict."""
    if max_n < 1:
        raise InvalidParameter("max_n must be positive")
    limit = 8 if allow_eight else 7
    if max_n > limit:
        raise LimitExceeded(
            f"census capped at {limit} vertices" +
            ("" if allow_eight else " (pass allow_eight=True to go to 8)"))
    if max_n == 8:
        warnings.warn("census at n = 8 enumerates 11117 graph classes; expect minutes")
    rows = []
    summaries = []
    for n in range(1, max_n + 1):
        connected_classes = 0
        distinguishable = 0
        full = 0
        ra_count = 0
        for g in enumerate_connected_graphs(n):
            connected_classes += 1
            if not is_neighborhood_distinguishable(g):
                continue
            distinguishable += 1
            divs = snf_divisors(activation_matrix(g))
            if spans_full_lattice(activation_matrix(g)):
                full += 1
            verdict = is_ra(g)
            if verdict.ra:
                ra_count += 1
            rows.append(CensusRow(n, verdict.graph, divs, verdict.ra,
                                  verdict.method, verdict.witness))
            if progress is not None:
                progress(n, connected_classes)
        summaries.append(CensusSummary(n, connected_classes, distinguishable,
                                       full, ra_count))
    return CensusReport(tuple(rows), tuple(summaries))
