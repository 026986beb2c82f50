"""Reachable-state groups of group-valued Lights Out.

A click at vertex v with group element g right-multiplies the states of the
closed neighborhood of v by g. Starting from all-identity, the reachable
states form a subgroup of G^n generated by the clicks; more generally any
integer matrix M yields the subgroup generated by the rows' power vectors
g^x = (g^{x_1}, ..., g^{x_n}).

G^n is modelled as permutations on n disjoint copies of G's domain, block v
holding coordinate v, so the subgroup engine provides orders and membership.

For 0/1 matrices, clicking with G's generators suffices: components multiply
coordinatewise there, so a click by an arbitrary g is the product of clicks
by the letters of a word for g. General integer rows lose that identity and
the subgroup is generated by clicks over every element of G, so those
constructions enumerate G (which must be small).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .errors import ConsistencyError, DimensionMismatch, SearchBoundExceeded
from .graphs import Graph, closed_neighborhood
from .groups import FiniteGroup, AbelianInvariants, abelianization, derived_subgroup
from .perm import DEFAULT_MAX_ORDER, Perm, PermGroup, derived_subgroup_of, normal_closure
from .ra import activation_matrix, ra_matrix
from .zlinalg import IntMat, rank_mod_p, snf_divisors

ClickVector = tuple

_ALL_ELEMENT_CLICK_BOUND = 512


@dataclass(frozen=True)
class StateVector:
    """An element of G^n: one group element per vertex."""

    group: FiniteGroup
    components: tuple

    def __post_init__(self):
        for c in self.components:
            if c.degree != self.group.degree:
                raise DimensionMismatch("component degree mismatch")

    @property
    def n(self) -> int:
        return len(self.components)

    def as_perm(self) -> Perm:
        d = self.group.degree
        image = []
        for v, comp in enumerate(self.components):
            off = v * d
            image.extend(off + x for x in comp.image)
        return Perm(image)

    def __mul__(self, other: "StateVector") -> "StateVector":
        if self.group is not other.group or self.n != other.n:
            raise DimensionMismatch("state vectors from different ambients")
        return StateVector(self.group, tuple(a * b for a, b in zip(self.components, other.components)))

    def is_identity(self) -> bool:
        return all(c.is_identity() for c in self.components)


def identity_state(group: FiniteGroup, n: int) -> StateVector:
    e = group.identity()
    return StateVector(group, (e,) * n)


def state_from_perm(group: FiniteGroup, n: int, perm: Perm) -> StateVector:
    """Split a block permutation on n copies of the domain back into
    coordinates."""
    d = group.degree
    if perm.degree != n * d:
        raise DimensionMismatch(f"degree {perm.degree} != {n * d}")
    comps = []
    for v in range(n):
        off = v * d
        block = [perm.image[off + i] - off for i in range(d)]
        if any(x < 0 or x >= d for x in block):
            raise DimensionMismatch("permutation does not preserve coordinate blocks")
        comps.append(Perm(block))
    return StateVector(group, tuple(comps))


def power_click(group: FiniteGroup, g: Perm, clicks: Sequence[int]) -> StateVector:
    """g^x = (g^{x_1}, ..., g^{x_n})."""
    return StateVector(group, tuple(g ** int(x) for x in clicks))


class PowerSubgroup:
    """A subgroup of G^n generated by power vectors."""

    def __init__(self, group: FiniteGroup, n: int, generators: Sequence[StateVector],
                 max_order: Optional[int] = DEFAULT_MAX_ORDER):
        self.group = group
        self.n = n
        self.generators = tuple(generators)
        self.perm_group = PermGroup(
            n * group.degree,
            [s.as_perm() for s in self.generators],
            max_order=max_order,
        )

    def order(self) -> int:
        return self.perm_group.order()

    def contains(self, state) -> bool:
        if isinstance(state, StateVector):
            return self.perm_group.contains(state.as_perm())
        return self.perm_group.contains(state)

    def elements_as_states(self, limit: int = 1 << 20) -> list:
        return [state_from_perm(self.group, self.n, p)
                for p in self.perm_group.elements(limit=limit)]

    def derived(self, max_order: Optional[int] = DEFAULT_MAX_ORDER) -> "PowerSubgroup":
        """Commutator subgroup, via normal closure of generator commutators."""
        sub = derived_subgroup_of(
            self.perm_group.degree,
            [s.as_perm() for s in self.generators],
            max_order=max_order,
        )
        return _wrap_perm_subgroup(self, sub)

    def __repr__(self):
        return f"PowerSubgroup({self.group.name}^{self.n}, order={self.order()})"


class _WrappedPowerSubgroup(PowerSubgroup):
    """PowerSubgroup view over an already-built PermGroup."""

    def __init__(self, group, n, generators, perm_group):
        self.group = group
        self.n = n
        self.generators = tuple(generators)
        self.perm_group = perm_group


def _wrap_perm_subgroup(parent: PowerSubgroup, sub: PermGroup) -> PowerSubgroup:
    gens = [state_from_perm(parent.group, parent.n, p) for p in sub.generators]
    return _WrappedPowerSubgroup(parent.group, parent.n, gens, sub)


def matrix_power(group: FiniteGroup, matrix, *,
                 max_order: Optional[int] = DEFAULT_MAX_ORDER) -> PowerSubgroup:
    """Subgroup of G^n generated by g^row over the rows of an integer matrix.

    0/1 matrices click with G's generators only; general integer matrices
    click with every element of G (the coordinatewise product identity fails
    off 0/1 vectors, and generator clicks can generate a proper subgroup)."""
    rows = matrix._rows if isinstance(matrix, IntMat) else tuple(tuple(r) for r in matrix)
    if not rows:
        raise DimensionMismatch("matrix with no rows")
    n = len(rows[0])
    zero_one = all(x in (0, 1) for row in rows for x in row)
    if zero_one:
        clickers = group.generators
    else:
        if group.order() > _ALL_ELEMENT_CLICK_BOUND:
            raise SearchBoundExceeded(
                f"clicks over all of {group.name} need |G| <= {_ALL_ELEMENT_CLICK_BOUND}")
        clickers = [g for g in group.elements() if not g.is_identity()]
    gens = []
    seen = set()
    for row in rows:
        if not any(row):
            continue
        for g in clickers:
            state = power_click(group, g, row)
            key = tuple(c.image for c in state.components)
            if key not in seen and not state.is_identity():
                seen.add(key)
                gens.append(state)
    return PowerSubgroup(group, n, gens, max_order=max_order)


def graph_power(group: FiniteGroup, graph: Graph, *,
                max_order: Optional[int] = DEFAULT_MAX_ORDER) -> PowerSubgroup:
    """The reachable-state group G^graph (clicks along closed neighborhoods)."""
    return matrix_power(group, activation_matrix(graph), max_order=max_order)


# -- abelian side ---------------------------------------------------------------

def abelian_power_order(invariants, matrix) -> int:
    """|(Z_{r_1} x ... x Z_{r_k})^M| computed factor by factor from the
    divisor chain of M: each cyclic factor Z_r contributes
    prod_i r / gcd(d_i, r). No group enumeration happens."""
    factors = invariants.factors if isinstance(invariants, AbelianInvariants) else tuple(invariants)
    mat = matrix if isinstance(matrix, IntMat) else IntMat(matrix)
    divs = snf_divisors(mat)
    total = 1
    for r in factors:
        r = int(r)
        if r < 1:
            raise DimensionMismatch("moduli must be >= 1")
        for d in divs:
            total *= r // gcd(d, r) if d else 1
    return total


def comm_intersection_order(group: FiniteGroup, graph: Graph, *,
                            max_order: Optional[int] = DEFAULT_MAX_ORDER,
                            power: Optional[PowerSubgroup] = None) -> int:
    """|Comm(G, graph)| = |G^graph| / |(G^Ab)^graph|, exact via the natural
    projection onto the abelianized power."""
    gp = power if power is not None else graph_power(group, graph, max_order=max_order)
    ab = abelian_power_order(abelianization(group), activation_matrix(graph))
    total = gp.order()
    if total % ab:
        raise ConsistencyError(
            f"|G^Gamma| = {total} not divisible by abelian part {ab}")
    return total // ab


# -- commutator subgroups ---------------------------------------------------------

def _indicator(graph: Graph, u: int, v: int) -> tuple:
    inter = closed_neighborhood(graph, u) & closed_neighborhood(graph, v)
    return tuple(1 if w in inter else 0 for w in range(graph.n))


def _comm_generators(group: FiniteGroup, graph: Graph, include_equal: bool,
                     verify: bool) -> list:
    from .groups import commutator_witnesses
    witnesses = {c: pair for c, pair in commutator_witnesses(group).items()
                 if not c.is_identity()}
    act = activation_matrix(graph)
    gens = []
    seen = set()
    for u in range(graph.n):
        vstart = u if include_equal else u + 1
        for v in range(vstart, graph.n):
            ind = _indicator(graph, u, v)
            if not any(ind):
                continue
            for c, (g, h) in witnesses.items():
                state = power_click(group, c, ind)
                if verify:
                    _assert_comm_char(group, g, h, act.row(u), act.row(v), state)
                key = tuple(x.image for x in state.components)
                if key not in seen:
                    seen.add(key)
                    gens.append(state)
    return gens


def _assert_comm_char(group: FiniteGroup, g: Perm, h: Perm, row_u, row_v,
                      expected: StateVector) -> None:
    """[g^u, h^v] must equal [g,h] spread over B(u) cap B(v)."""
    lhs = power_click(group, g, row_u).as_perm().commutator(
        power_click(group, h, row_v).as_perm())
    if lhs != expected.as_perm():
        raise ConsistencyError("basic commutator does not match its indicator pattern")


def comm_d(group: FiniteGroup, graph: Graph, *, verify: bool = True,
           max_order: Optional[int] = DEFAULT_MAX_ORDER) -> PowerSubgroup:
    """Subgroup generated by the basic commutators [g^u, h^v] with u != v."""
    gens = _comm_generators(group, graph, include_equal=False, verify=verify)
    return PowerSubgroup(group, graph.n, gens, max_order=max_order)


def comm_b(group: FiniteGroup, graph: Graph, *, verify: bool = True,
           max_order: Optional[int] = DEFAULT_MAX_ORDER) -> PowerSubgroup:
    """Subgroup generated by all basic commutators [g^u, h^v], u = v allowed."""
    gens = _comm_generators(group, graph, include_equal=True, verify=verify)
    return PowerSubgroup(group, graph.n, gens, max_order=max_order)


def _central_prime_commutator(group: FiniteGroup) -> Optional[int]:
    """If [G, G] is central of prime order p, return p, else None.

    For such groups the basic-commutator subgroups reduce to row lattices
    mod p, so their orders come from a modular rank instead of closure."""
    der = derived_subgroup(group)
    p = der.order()
    from .zlinalg import is_prime
    if not is_prime(p):
        return None
    for d in der.generators:
        for g in group.generators:
            if d.conjugate(g) != d:
                return None
    return p


def _pair_indicator_matrix(graph: Graph, include_equal: bool) -> IntMat:
    rows = []
    for u in range(graph.n):
        vstart = u if include_equal else u + 1
        for v in range(vstart, graph.n):
            rows.append(_indicator(graph, u, v))
    return IntMat(rows, cols=graph.n)


def comm_b_order(group: FiniteGroup, graph: Graph) -> int:
    """|Comm_b(G, graph)|, via modular rank when [G,G] is central of prime
    order, else by closure."""
    p = _central_prime_commutator(group)
    if p is not None:
        return p ** rank_mod_p(ra_matrix(graph), p)
    return comm_b(group, graph, verify=False).order()


def comm_d_order(group: FiniteGroup, graph: Graph) -> int:
    p = _central_prime_commutator(group)
    if p is not None:
        return p ** rank_mod_p(_pair_indicator_matrix(graph, include_equal=False), p)
    return comm_d(group, graph, verify=False).order()


def derived_of_power(group: FiniteGroup, graph: Graph, *,
                     max_order: Optional[int] = DEFAULT_MAX_ORDER,
                     power: Optional[PowerSubgroup] = None) -> PowerSubgroup:
    """[G^graph, G^graph]: the normal closure of the basic commutators under
    conjugation by the clicks."""
    gp = power if power is not None else graph_power(group, graph, max_order=max_order)
    basics = _comm_generators(group, graph, include_equal=True, verify=False)
    sub = normal_closure(
        gp.perm_group.degree,
        [s.as_perm() for s in gp.generators],
        [s.as_perm() for s in basics],
        max_order=max_order,
    )
    return _wrap_perm_subgroup(gp, sub)


# -- RA verdicts for a fixed group ------------------------------------------------

def is_g_ra(group: FiniteGroup, graph: Graph, *,
            max_order: Optional[int] = DEFAULT_MAX_ORDER) -> bool:
    """Whether [G,G]^n is contained in G^graph, decided by order counting:
    Comm(G, graph) sits inside [G,G]^n, so containment is equality of
    orders."""
    return ra_index(group, graph, max_order=max_order) == 1


def ra_index(group: FiniteGroup, graph: Graph, *,
             max_order: Optional[int] = DEFAULT_MAX_ORDER,
             power: Optional[PowerSubgroup] = None) -> int:
    """Index of Comm(G, graph) in [G,G]^n; equals 1 exactly when the graph is
    G-RA."""
    gp = power if power is not None else graph_power(group, graph, max_order=max_order)
    der = derived_subgroup(group)
    ab = abelian_power_order(abelianization(group), activation_matrix(graph))
    numerator = der.order() ** graph.n * ab
    total = gp.order()
    if numerator % total:
        raise ConsistencyError(
            f"RA index {numerator}/{total} is not an integer")
    return numerator // total


@dataclass(frozen=True)
class ChainReport:
    """Orders along Comm_d <= Comm_b <= [G^G, G^G] <= Comm <= [G,G]^n."""

    group: str
    graph_vertices: int
    comm_d: int
    comm_b: int
    derived_power: int
    comm: int
    full_commutator_power: int

    def orders(self) -> tuple:
        return (self.comm_d, self.comm_b, self.derived_power,
                self.comm, self.full_commutator_power)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "vertices": self.graph_vertices,
            "orders": {
                "comm_d": self.comm_d,
                "comm_b": self.comm_b,
                "derived_power": self.derived_power,
                "comm": self.comm,
                "full_commutator_power": self.full_commutator_power,
            },
        }


def chain_report(group: FiniteGroup, graph: Graph, *,
                 max_order: Optional[int] = DEFAULT_MAX_ORDER) -> ChainReport:
    """The five orders of the commutator chain; each divides the next."""
    gp = graph_power(group, graph, max_order=max_order)
    orders = (
        comm_d_order(group, graph),
        comm_b_order(group, graph),
        derived_of_power(group, graph, max_order=max_order, power=gp).order(),
        comm_intersection_order(group, graph, power=gp),
        derived_subgroup(group).order() ** graph.n,
    )
    for a, b in zip(orders, orders[1:]):
        if b % a:
            raise ConsistencyError(f"chain orders {orders} violate divisibility")
    return ChainReport(group.name, graph.n, *orders)


def in_comm(group: FiniteGroup, graph: Graph, state: StateVector, *,
            power: Optional[PowerSubgroup] = None) -> bool:
    """Membership in Comm(G, graph): in the reachable-state group with every
    coordinate a member of [G, G]."""
    gp = power if power is not None else graph_power(group, graph)
    der = derived_subgroup(group)
    return gp.contains(state) and all(der.contains(c) for c in state.components)
