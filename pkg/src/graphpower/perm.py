"""Permutations and strong-generating-set machinery.

Permutations act on 0..degree-1 and compose left to right: (p * q) sends i to
q[p[i]]. PermGroup keeps a base and stabilizer chain built by an incremental
Schreier-Sims pass (seeded with a few random subproducts, then verified
deterministically), giving exact orders and fast membership for the subgroup
scales this package needs (orders up to ~2^30 on a few hundred points).
"""

from __future__ import annotations

import random
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import CapacityExceeded, DomainMismatch, LimitExceeded

DEFAULT_MAX_ORDER = 1 << 30


def _compose(p: tuple, q: tuple) -> tuple:
    """Apply p, then q."""
    return tuple(map(q.__getitem__, p))


def _inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


class Perm:
    """Immutable permutation in one-line form."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        img = tuple(image)
        if sorted(img) != list(range(len(img))):
            raise ValueError("not a permutation")
        object.__setattr__(self, "image", img)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __getitem__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self.image) != len(other.image):
            raise DomainMismatch("degrees differ")
        return Perm(_compose(self.image, other.image))

    def inverse(self) -> "Perm":
        return Perm(_inverse(self.image))

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = tuple(range(len(self.image)))
        base = self.image
        while k:
            if k & 1:
                result = _compose(result, base)
            base = _compose(base, base)
            k >>= 1
        return Perm(result)

    def conjugate(self, by: "Perm") -> "Perm":
        """by^-1 * self * by."""
        return by.inverse() * self * by

    def commutator(self, other: "Perm") -> "Perm":
        """self * other * self^-1 * other^-1."""
        return self * other * self.inverse() * other.inverse()

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def cycles(self) -> list:
        seen = [False] * len(self.image)
        out = []
        for i in range(len(self.image)):
            if seen[i] or self.image[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.image[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return f"Perm(id/{len(self.image)})"
        return "Perm(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + ")"


class _Level:
    __slots__ = ("point", "gens", "orbit", "inv", "pairs", "ptr")

    def __init__(self, point: int, identity: tuple):
        self.point = point
        self.gens = []
        self.orbit = {point: identity}
        self.inv = {point: identity}
        self.pairs = []
        self.ptr = 0


class PermGroup:
    """Group generated by permutations, with exact order and membership.

    `max_order` aborts construction with CapacityExceeded once the stabilizer
    chain certifies the order exceeds the cap (the chain product is a lower
    bound for the final order throughout construction).
    """

    def __init__(self, degree: int, generators: Iterable = (),
                 max_order: Optional[int] = DEFAULT_MAX_ORDER,
                 seed_rounds: int = 8):
        self.degree = degree
        self._identity = tuple(range(degree))
        self.max_order = max_order
        self._levels: list[_Level] = []
        self._gens: list[tuple] = []
        raw = []
        for g in generators:
            img = g.image if isinstance(g, Perm) else tuple(g)
            if len(img) != degree:
                raise DomainMismatch(f"generator degree {len(img)} != {degree}")
            if img != self._identity and img not in raw:
                raw.append(img)
        for img in raw:
            self._gens.append(img)
            self._add_gen(img)
        if seed_rounds and len(raw) > 1:
            rng = random.Random(0xC0FFEE)
            pool = list(raw)
            for _ in range(seed_rounds * len(raw)):
                a = rng.randrange(len(pool))
                b = rng.randrange(len(pool))
                w = _compose(pool[a], pool[b])
                pool[a] = w
                if w != self._identity:
                    self._add_gen(w)
        self._complete()

    # -- chain construction ----------------------------------------------

    def _strip(self, g: tuple):
        for idx, level in enumerate(self._levels):
            target = g[level.point]
            if target == level.point:
                continue
            t_inv = level.inv.get(target)
            if t_inv is None:
                return g, idx
            g = _compose(g, t_inv)
        return g, len(self._levels)

    def _add_gen(self, g: tuple) -> bool:
        h, j = self._strip(g)
        if h == self._identity:
            return False
        if j == len(self._levels):
            point = next(i for i, x in enumerate(h) if x != i)
            self._levels.append(_Level(point, self._identity))
            j = len(self._levels) - 1
        for lvl in range(j + 1):
            self._extend_level(self._levels[lvl], h)
        self._check_capacity()
        return True

    def _extend_level(self, level: _Level, new_gen: tuple) -> None:
        level.gens.append(new_gen)
        for pt in list(level.orbit):
            level.pairs.append((pt, new_gen))
        queue = list(level.orbit)
        qi = 0
        while qi < len(queue):
            pt = queue[qi]
            qi += 1
            tp = level.orbit[pt]
            for s in level.gens:
                np = s[pt]
                if np not in level.orbit:
                    t = _compose(tp, s)
                    level.orbit[np] = t
                    level.inv[np] = _inverse(t)
                    queue.append(np)
                    for s2 in level.gens:
                        level.pairs.append((np, s2))

    def _check_capacity(self) -> None:
        if self.max_order is None:
            return
        bound = 1
        for level in self._levels:
            bound *= len(level.orbit)
        if bound > self.max_order:
            raise CapacityExceeded(bound, self.max_order)

    def _complete(self) -> None:
        identity = self._identity
        while True:
            idx = None
            for i in range(len(self._levels) - 1, -1, -1):
                lv = self._levels[i]
                if lv.ptr < len(lv.pairs):
                    idx = i
                    break
            if idx is None:
                return
            level = self._levels[idx]
            while level.ptr < len(level.pairs):
                pt, s = level.pairs[level.ptr]
                level.ptr += 1
                u = level.orbit[pt]
                target = s[pt]
                schreier = _compose(_compose(u, s), level.inv[target])
                if schreier == identity:
                    continue
                if self._add_gen(schreier):
                    deeper = any(
                        lv.ptr < len(lv.pairs) for lv in self._levels[idx + 1:]
                    )
                    if deeper:
                        break  # restart at the deepest pending level
            else:
                continue
            # broke out to service a deeper level
            continue

    # -- queries ------------------------------------------------------------

    def order(self) -> int:
        n = 1
        for level in self._levels:
            n *= len(level.orbit)
        return n

    def contains(self, p) -> bool:
        img = p.image if isinstance(p, Perm) else tuple(p)
        if len(img) != self.degree:
            return False
        h, _ = self._strip(img)
        return h == self._identity

    __contains__ = contains

    @property
    def generators(self) -> list:
        return [Perm(g) for g in self._gens]

    def add_generator(self, p) -> None:
        img = p.image if isinstance(p, Perm) else tuple(p)
        if len(img) != self.degree:
            raise DomainMismatch(f"degree {len(img)} != {self.degree}")
        if img == self._identity:
            return
        self._gens.append(img)
        self._add_gen(img)
        self._complete()

    def base_points(self) -> list:
        return [lv.point for lv in self._levels]

    def elements(self, limit: int = 1 << 20) -> list:
        """Full enumeration by breadth-first closure; raises past `limit`."""
        if self.order() > limit:
            raise LimitExceeded(f"order {self.order()} exceeds enumeration limit {limit}")
        seen = {self._identity}
        frontier = [self._identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self._gens:
                    y = _compose(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return [Perm(x) for x in seen]

    def is_trivial(self) -> bool:
        return not self._levels

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"


def closure_elements(degree: int, generators: Iterable, limit: int = 1 << 20) -> set:
    """Plain breadth-first closure, independent of the stabilizer chain.

    Used as a cross-check oracle for PermGroup orders.
    """
    identity = tuple(range(degree))
    gens = []
    for g in generators:
        img = g.image if isinstance(g, Perm) else tuple(g)
        if len(img) != degree:
            raise DomainMismatch("degree mismatch")
        gens.append(img)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    if len(seen) >= limit:
                        raise LimitExceeded(f"closure exceeded {limit} elements")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def normal_closure(degree: int, ambient_gens: Sequence, sub_gens: Sequence,
                   max_order: Optional[int] = DEFAULT_MAX_ORDER) -> PermGroup:
    """Smallest subgroup containing sub_gens and closed under conjugation by
    the ambient generators."""
    amb = [g.image if isinstance(g, Perm) else tuple(g) for g in ambient_gens]
    sub = [g.image if isinstance(g, Perm) else tuple(g) for g in sub_gens]
    group = PermGroup(degree, sub, max_order=max_order)
    work = [g for g in sub if g != tuple(range(degree))]
    wi = 0
    while wi < len(work):
        x = work[wi]
        wi += 1
        for a in amb:
            conj = _compose(_compose(_inverse(a), x), a)
            if not group.contains(conj):
                group.add_generator(conj)
                work.append(conj)
    return group


def derived_subgroup_of(degree: int, generators: Sequence,
                        max_order: Optional[int] = DEFAULT_MAX_ORDER) -> PermGroup:
    """Commutator subgroup of the group generated by `generators`: the normal
    closure of the generator-pair commutators."""
    gens = [g.image if isinstance(g, Perm) else tuple(g) for g in generators]
    comms = []
    for a in gens:
        for b in gens:
            c = _compose(_compose(_compose(a, b), _inverse(a)), _inverse(b))
            if c != tuple(range(degree)) and c not in comms:
                comms.append(c)
    return normal_closure(degree, gens, comms, max_order=max_order)
