"""Independent oracles for cross-checking the package's main routes.

Nothing here imports the implementation modules under test beyond basic
types: each oracle recomputes its answer from first principles (minors,
plain elimination, exhaustive search) so the two sides genuinely disagree
when one is wrong.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd, factorial


# -- determinants and gcd-of-minors divisors -----------------------------------

def det_exact(rows) -> int:
    """Fraction-based Gaussian elimination; exact for integer input."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    assert det.denominator == 1
    return int(det)


def minors_divisors(rows) -> tuple:
    """Elementary divisors via d_i = gcd of i x i minors, a_i = d_i/d_{i-1}.

    Exponential in the matrix size; keep inputs at most ~5x5.
    """
    m, n = len(rows), len(rows[0]) if rows else 0
    k = min(m, n)
    out = []
    d_prev = 1
    for size in range(1, k + 1):
        g = 0
        for rsel in combinations(range(m), size):
            for csel in combinations(range(n), size):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                g = gcd(g, det_exact(sub))
        if g == 0:
            out.extend([0] * (k - size + 1))
            break
        out.append(g // d_prev)
        d_prev = g
    return tuple(out)


# -- GF(p) elimination ----------------------------------------------------------

def gfp_rank(rows, p: int) -> int:
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    n = len(a[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def gfp_solvable(A_rows, target, p: int) -> bool:
    """Is there c with c . A == target (mod p)? Solved on the transpose."""
    m = len(A_rows)
    n = len(A_rows[0])
    aug = [[A_rows[i][j] % p for i in range(m)] + [target[j] % p] for j in range(n)]
    rank_a = gfp_rank([row[:-1] for row in aug], p)
    rank_aug = gfp_rank(aug, p)
    return rank_a == rank_aug


# -- exhaustive lattice membership ----------------------------------------------

def lattice_member_bruteforce(rows, target, bound: int) -> bool:
    """Search coefficient vectors with entries in [-bound, bound]."""
    m = len(rows)
    n = len(rows[0])
    for coeffs in product(range(-bound, bound + 1), repeat=m):
        vec = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                for j, x in enumerate(row):
                    vec[j] += c * x
        if vec == list(target):
            return True
    return False


# -- labeled-graph census oracles -------------------------------------------------

def _connected_mask(n: int, mask: int) -> bool:
    adj = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        rest = adj[v] & ~seen
        while rest:
            w = (rest & -rest).bit_length() - 1
            seen |= 1 << w
            frontier.append(w)
            rest &= rest - 1
    return seen == (1 << n) - 1


def connected_classes_bruteforce(n: int) -> int:
    """Count connected isomorphism classes by sweeping every labeled graph
    and flooding each isomorphism orbit. Practical through n = 6."""
    if n == 1:
        return 1
    nbits = n * (n - 1) // 2
    pair_index = {}
    bit = 0
    for j in range(1, n):
        for i in range(j):
            pair_index[(i, j)] = bit
            bit += 1
    perms = []
    from itertools import permutations
    for perm in permutations(range(n)):
        mapping = []
        for j in range(1, n):
            for i in range(j):
                a, b = perm[i], perm[j]
                mapping.append(pair_index[(min(a, b), max(a, b))])
        perms.append(mapping)
    seen = bytearray(1 << nbits)
    count = 0
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        orbit = set()
        for mapping in perms:
            img = 0
            for k in range(nbits):
                if mask >> k & 1:
                    img |= 1 << mapping[k]
            orbit.add(img)
        for img in orbit:
            seen[img] = 1
        if _connected_mask(n, mask):
            count += 1
    return count


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    cap = n if largest is None else min(n, largest)
    for first in range(cap, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def unlabeled_graph_counts(max_n: int) -> list:
    """Number of unlabeled simple graphs on n vertices via the cycle index of
    the pair action (Burnside)."""
    out = []
    for n in range(1, max_n + 1):
        total = 0
        for part in _partitions(n):
            # permutations with this cycle type
            size = factorial(n)
            counts = {}
            for c in part:
                counts[c] = counts.get(c, 0) + 1
            for length, mult in counts.items():
                size //= (length ** mult) * factorial(mult)
            # orbits of the induced action on vertex pairs
            orbits = sum(c // 2 for c in part)
            for i in range(len(part)):
                for j in range(i + 1, len(part)):
                    orbits += gcd(part[i], part[j])
            total += size * (1 << orbits)
        out.append(total // factorial(n))
    return out


def connected_counts_by_euler_transform(max_n: int) -> list:
    """Connected unlabeled graph counts from the all-graph counts, through
    the inverse Euler transform."""
    a = unlabeled_graph_counts(max_n)          # a[n-1] = all graphs on n
    c = [0] * (max_n + 1)                      # c[n] = connected graphs on n
    b = [0] * (max_n + 1)                      # b[n] = sum_{d | n} d c[d]
    for n in range(1, max_n + 1):
        s = n * a[n - 1]
        for k in range(1, n):
            s -= b[k] * a[n - k - 1]
        b[n] = s
        total = b[n]
        for d in range(1, n):
            if n % d == 0:
                total -= d * c[d]
        c[n] = total // n
    return c[1:]


# -- plain closure for subgroup orders --------------------------------------------

def closure_order(degree: int, generators, limit: int = 1 << 21) -> int:
    """Breadth-first closure size over raw image tuples."""
    gens = [tuple(g.image) if hasattr(g, "image") else tuple(g) for g in generators]
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    if len(seen) >= limit:
                        raise RuntimeError("closure oracle limit hit")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)
