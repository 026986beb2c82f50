"""Constructive solving over abelian state groups.

States over a sum of cyclic groups Z_{r_1} x ... x Z_{r_k} split into
independent single-factor problems. Each factor asks for integer click
multiplicities c with c . A == target (mod r); that is membership of the
target in the row lattice of A extended by r Z^n, decided by Hermite normal
form back substitution. The stacked matrix always has full column rank, so
the candidate solution is unique and each failed exact division names the
first obstructed pivot, which maps to a vertex.

Every returned click vector is re-simulated through power_click before it is
returned; a mismatch is an internal fault, not a solver answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ConsistencyError, DimensionMismatch, InvalidParameter
from .graphs import Graph
from .groups import cyclic
from .power import power_click
from .ra import activation_matrix
from .zlinalg import IntMat, hnf, mat_vec

INTEGERS = "Z"


@dataclass(frozen=True)
class Unsolvable:
    """Witness for an unreachable target: the first pivot whose congruence
    fails, mapped back to a vertex."""

    factor: int            # index into the moduli list (0 for the Z case)
    modulus: Union[int, str]
    vertex: int
    detail: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Solution:
    """Click multiplicities per factor; clicks[alpha][v] clicks vertex v."""

    moduli: tuple
    clicks: tuple   # one click vector per factor

    def __bool__(self):
        return True


@dataclass(frozen=True)
class ReachabilityProfile:
    """Shape of the reachable states, from the permuted echelon basis: the
    first free_count coordinates are freely settable, the constrained ones
    move by multiples of their pivot, the fixed ones are determined."""

    free_count: int
    constrained: tuple        # (vertex, pivot) pairs, pivots ascending
    fixed_count: int
    column_permutation: tuple

    def pivots(self) -> tuple:
        return tuple(p for _, p in self.constrained)


def reachability_profile(graph: Graph) -> ReachabilityProfile:
    dec = hnf(activation_matrix(graph), nice=True)
    pivots = dec.pivots()
    perm = dec.column_permutation
    free = sum(1 for _, _, v in pivots if v == 1)
    constrained = tuple((perm[col], val) for _, col, val in pivots if val > 1)
    fixed = graph.n - free - len(constrained)
    return ReachabilityProfile(free, constrained, fixed, perm)


def _back_substitute(H: IntMat, target: Sequence[int]):
    """Unique candidate y with y . H == target, or the first failing column.

    Returns (y, None) on success, (None, column) on failure. Pivot columns
    determine y exactly (divisibility can fail); non-pivot columns are
    consistency checks.
    """
    n = H.cols
    y = [0] * H.rows
    pivot_of_col = {}
    for i, row in enumerate(H._rows):
        for j, v in enumerate(row):
            if v:
                pivot_of_col[j] = (i, v)
                break
    for j in range(n):
        acc = sum(y[i] * H[i, j] for i in range(H.rows) if y[i])
        rest = target[j] - acc
        if j in pivot_of_col:
            i, p = pivot_of_col[j]
            if rest % p:
                return None, j
            y[i] = rest // p
        else:
            if rest:
                return None, j
    return y, None


def _solve_single(A: IntMat, target: Sequence[int], modulus) -> tuple:
    """(clicks, failing_column). Clicks has length A.rows."""
    n = A.cols
    if modulus == INTEGERS:
        stacked = A
    else:
        r = int(modulus)
        if r < 2:
            raise InvalidParameter("moduli must be >= 2")
        extra = [[r if j == i else 0 for j in range(n)] for i in range(n)]
        stacked = IntMat(list(A.row_list()) + extra, cols=n)
    dec = hnf(stacked)
    ty = [int(t) for t in target]
    y, bad_col = _back_substitute(dec.H, ty)
    if y is None:
        return None, bad_col
    coeffs = mat_vec(tuple(y), dec.U)
    clicks = list(coeffs[:A.rows])
    if modulus != INTEGERS:
        clicks = [c % int(modulus) for c in clicks]
    return tuple(clicks), None


def _normalize_targets(moduli, target, n: int) -> list:
    """Per-factor integer target vectors from an AbelianState."""
    k = len(moduli)
    per_factor = [[0] * n for _ in range(k)]
    if len(target) != n:
        raise DimensionMismatch(f"target length {len(target)} != {n}")
    for v, entry in enumerate(target):
        if isinstance(entry, (int,)):
            if k != 1:
                raise DimensionMismatch("scalar state entries need a single factor")
            per_factor[0][v] = entry
        else:
            if len(entry) != k:
                raise DimensionMismatch(
                    f"state entry at vertex {v} has {len(entry)} coordinates, expected {k}")
            for a, e in enumerate(entry):
                per_factor[a][v] = int(e)
    return per_factor


def _verify_clicks(graph: Graph, modulus, clicks, target) -> None:
    A = activation_matrix(graph)
    if modulus == INTEGERS:
        reached = mat_vec(tuple(clicks), A)
        if tuple(reached) != tuple(int(t) for t in target):
            raise ConsistencyError("integer clicks do not reproduce the target")
        return
    r = int(modulus)
    group = cyclic(r)
    g = group.generators[0]
    state = [group.identity()] * graph.n
    for v, c in enumerate(clicks):
        if c % r == 0:
            continue
        click = power_click(group, g ** int(c), A.row(v))
        state = [s * t for s, t in zip(state, click.components)]
    rotate = {g ** e: e for e in range(r)}
    for v, s in enumerate(state):
        if rotate[s] != int(target[v]) % r:
            raise ConsistencyError(f"clicks do not reproduce the target at vertex {v}")


def solve(graph: Graph, moduli, target) -> Union[Solution, Unsolvable]:
    """Find clicks reaching `target` over the given cyclic factors.

    moduli: a sequence of integers >= 2, or the string "Z" for integer
    states. target: one entry per vertex; an integer for a single factor or
    a k-tuple of exponents for k factors (integers for the "Z" case).

    Factors solve independently. The result is a Solution with one click
    vector per factor, or an Unsolvable naming the first obstructed pivot.
    """
    A = activation_matrix(graph)
    if moduli == INTEGERS or moduli == [INTEGERS] or moduli == (INTEGERS,):
        targets = _normalize_targets((INTEGERS,), target, graph.n)
        clicks, bad = _solve_single(A, targets[0], INTEGERS)
        if clicks is None:
            return Unsolvable(0, INTEGERS, bad,
                              f"no integer combination reaches vertex {bad}")
        _verify_clicks(graph, INTEGERS, clicks, targets[0])
        return Solution((INTEGERS,), (clicks,))
    moduli = tuple(int(r) for r in moduli)
    if not moduli:
        raise InvalidParameter("need at least one modulus")
    targets = _normalize_targets(moduli, target, graph.n)
    out = []
    for alpha, r in enumerate(moduli):
        tvec = [t % r for t in targets[alpha]]
        clicks, bad = _solve_single(A, tvec, r)
        if clicks is None:
            return Unsolvable(alpha, r, bad,
                              f"factor {alpha} (mod {r}): pivot at vertex {bad} obstructed")
        _verify_clicks(graph, r, clicks, tvec)
        out.append(clicks)
    return Solution(moduli, tuple(out))


def solvable_iff_lights_out(graph: Graph, parity_state: Sequence[int],
                            invariants: Sequence[int] = (2,)) -> bool:
    """Solvability of the per-vertex commutator-class picture.

    For puzzles whose position group has abelianization Z_2 (one odd/even
    bit per vertex, as with a permutation puzzle at every vertex), a state is
    simultaneously solvable exactly when this Lights Out instance is, given
    that independent commutator moves exist at every vertex. The caller is
    responsible for that last hypothesis (checked with is_ra / is_g_ra); it
    is not detectable from here.
    """
    state = [tuple(int(p) % r for r in invariants) for p in parity_state]
    return bool(solve(graph, tuple(invariants), state))
