"""Small finite groups as explicit multiplication tables.

Elements are dense indices 0..n-1.  A subgroup is canonically a bitmask of
element indices within its parent, so subset tests, hashing, and memoization
are all O(1) on the mask.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from math import gcd

from .errors import BadAction, IndexOutOfRange, InvalidSpec, NotNormal, OrderCap

ORDER_CAP = 20000
# Above this order, associativity is spot-checked on random triples instead of
# exhaustively; constructions below are associative by design, so this is a
# guard against table-assembly bugs, not a proof obligation.
ASSOC_EXHAUSTIVE_CAP = 128
ASSOC_SAMPLES = 100_000
# Default seed for the sampled associativity check; overridable (e.g. by the
# command-line front end) without threading a parameter through every
# constructor.
DEFAULT_ASSOC_SEED = 0


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of a fixed parent group, stored as a bitmask of indices."""

    parent: "FiniteGroup"
    mask: int

    @property
    def members(self) -> list[int]:
        return _mask_elements(self.mask)

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def __le__(self, other: "SubgroupSet") -> bool:
        return self.mask & ~other.mask == 0

    def is_abelian(self) -> bool:
        mul = self.parent.mul
        elems = self.members
        for i, a in enumerate(elems):
            for b in elems[i + 1:]:
                if mul[a][b] != mul[b][a]:
                    return False
        return True

    def is_normal(self) -> bool:
        G = self.parent
        for g in range(G.order):
            for h in self.members:
                if G.conj(g, h) not in self:
                    return False
        return True


def _mask_elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``mul[i][j]`` is the index of the product of elements i and j.  The
    constructor verifies the Latin-square, identity, inverse, and
    associativity axioms (exhaustively up to order 128).
    """

    def __init__(self, mul, labels=None, kind="generic", name=None, seed=None):
        n = len(mul)
        if n == 0:
            raise InvalidSpec("empty multiplication table")
        if n > ORDER_CAP:
            raise OrderCap(f"order {n} exceeds cap {ORDER_CAP}")
        self.order = n
        self.mul = tuple(tuple(row) for row in mul)
        self.kind = kind
        self.labels = list(labels) if labels else [str(i) for i in range(n)]
        self.name = name or f"{kind}#{n}"
        self._validate(seed)
        self.inv = self._build_inverses()
        self._centralizer_masks: list[int] | None = None
        self._abelian_cache: dict[int, bool] = {}

    # --- construction-time checks ---

    def _validate(self, seed) -> None:
        n = self.order
        full = set(range(n))
        for i, row in enumerate(self.mul):
            if set(row) != full:
                raise InvalidSpec(f"row {i} is not a permutation")
        for j in range(n):
            if {self.mul[i][j] for i in range(n)} != full:
                raise InvalidSpec(f"column {j} is not a permutation")
        identities = [e for e in range(n)
                      if all(self.mul[e][x] == x == self.mul[x][e]
                             for x in range(n))]
        if len(identities) != 1:
            raise InvalidSpec("no unique two-sided identity")
        self.identity = identities[0]
        if n <= ASSOC_EXHAUSTIVE_CAP:
            triples = ((a, b, c) for a in range(n) for b in range(n)
                       for c in range(n))
        else:
            rng = random.Random(DEFAULT_ASSOC_SEED if seed is None else seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(ASSOC_SAMPLES))
        mul = self.mul
        for a, b, c in triples:
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise InvalidSpec(f"associativity fails at ({a},{b},{c})")

    def _build_inverses(self) -> tuple[int, ...]:
        e = self.identity
        inv = [0] * self.order
        for a in range(self.order):
            inv[a] = self.mul[a].index(e)
            if self.mul[inv[a]][a] != e:
                raise InvalidSpec(f"one-sided inverse at element {a}")
        return tuple(inv)

    # --- basic queries ---

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.mul[self.mul[g][h]][self.inv[g]]

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def full_subgroup(self) -> SubgroupSet:
        return SubgroupSet(self, self.full_mask)

    def trivial_subgroup(self) -> SubgroupSet:
        return SubgroupSet(self, 1 << self.identity)

    def centralizer_mask(self, g: int) -> int:
        if not 0 <= g < self.order:
            raise IndexOutOfRange(f"element {g} not in 0..{self.order - 1}")
        if self._centralizer_masks is None:
            masks = []
            for x in range(self.order):
                m = 0
                for h in range(self.order):
                    if self.mul[h][x] == self.mul[x][h]:
                        m |= 1 << h
                masks.append(m)
            self._centralizer_masks = masks
        return self._centralizer_masks[g]

    def centralizer(self, g: int) -> SubgroupSet:
        return SubgroupSet(self, self.centralizer_mask(g))

    def set_centralizer_mask(self, mask: int) -> int:
        """Bitmask of elements commuting with every element of ``mask``."""
        result = self.full_mask
        for g in _mask_elements(mask):
            result &= self.centralizer_mask(g)
        return result

    def center(self) -> SubgroupSet:
        return SubgroupSet(self, self.set_centralizer_mask(self.full_mask))

    def is_abelian(self) -> bool:
        return self.center().order == self.order

    def mask_is_abelian(self, mask: int) -> bool:
        cached = self._abelian_cache.get(mask)
        if cached is None:
            cached = self.set_centralizer_mask(mask) & mask == mask
            self._abelian_cache[mask] = cached
        return cached

    def conjugacy_classes(self) -> list[list[int]]:
        seen = 0
        classes = []
        for g in range(self.order):
            if seen >> g & 1:
                continue
            orbit = 0
            for h in range(self.order):
                orbit |= 1 << self.conj(h, g)
            seen |= orbit
            classes.append(_mask_elements(orbit))
        return classes

    def class_count(self) -> int:
        return len(self.conjugacy_classes())

    def subgroup_closure(self, gens) -> SubgroupSet:
        """Smallest subgroup containing ``gens``, by BFS under multiplication."""
        for g in gens:
            if not 0 <= g < self.order:
                raise IndexOutOfRange(f"element {g} not in 0..{self.order - 1}")
        # In a finite group, closure under multiplication alone is a subgroup.
        mask = 1 << self.identity
        for g in gens:
            mask |= 1 << g
        changed = True
        while changed:
            changed = False
            elems = _mask_elements(mask)
            for a in elems:
                for b in elems:
                    p = self.mul[a][b]
                    if not mask >> p & 1:
                        mask |= 1 << p
                        changed = True
        return SubgroupSet(self, mask)

    def quotient(self, N: SubgroupSet) -> "FiniteGroup":
        """G/N as an explicit coset table; N must be normal."""
        if N.parent is not self:
            raise InvalidSpec("subgroup belongs to a different group")
        if not N.is_normal():
            raise NotNormal("subgroup is not normal")
        coset_of = [-1] * self.order
        reps = []
        for g in range(self.order):
            if coset_of[g] != -1:
                continue
            idx = len(reps)
            reps.append(g)
            for h in N.members:
                coset_of[self.mul[g][h]] = idx
        k = len(reps)
        table = [[coset_of[self.mul[reps[i]][reps[j]]] for j in range(k)]
                 for i in range(k)]
        labels = [f"[{self.labels[r]}]" for r in reps]
        return FiniteGroup(table, labels=labels, kind="quotient",
                           name=f"{self.name}/N{N.order}")


# --- constructors ---

def _product_table(orders):
    """Multiplication table of a direct product of cyclic groups (additive)."""
    n = 1
    for d in orders:
        n *= d
    def decode(idx):
        out = []
        for d in reversed(orders):
            idx, r = divmod(idx, d)
            out.append(r)
        return tuple(reversed(out))
    def encode(tup):
        idx = 0
        for v, d in zip(tup, orders):
            idx = idx * d + v
        return idx
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        a = decode(i)
        for j in range(n):
            b = decode(j)
            table[i][j] = encode(tuple((x + y) % d
                                       for x, y, d in zip(a, b, orders)))
    return table, decode, encode


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidSpec(f"cyclic order must be >= 1, got {n}")
    if n > ORDER_CAP:
        raise OrderCap(f"order {n} exceeds cap {ORDER_CAP}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, kind="cyclic", name=f"C{n}")


def abelian(invariant_factors) -> FiniteGroup:
    factors = list(invariant_factors)
    if not factors or any(d < 1 for d in factors):
        raise InvalidSpec(f"bad invariant factors {factors}")
    order = 1
    for d in factors:
        order *= d
    if order > ORDER_CAP:
        raise OrderCap(f"order {order} exceeds cap {ORDER_CAP}")
    table, decode, _ = _product_table(factors)
    labels = ["(" + ",".join(map(str, decode(i))) + ")" for i in range(order)]
    name = "Z" + "x".join(f"Z{d}" for d in factors)
    return FiniteGroup(table, labels=labels, kind="abelian", name=name)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (n >= 3): rotations r^i and reflections r^i s."""
    if n < 3:
        raise InvalidSpec(f"dihedral requires n >= 3, got {n}")
    if 2 * n > ORDER_CAP:
        raise OrderCap(f"order {2 * n} exceeds cap {ORDER_CAP}")
    # index = 2*i + s with s = 0 rotation, s = 1 reflection
    def encode(i, s):
        return 2 * (i % n) + s
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for s in (0, 1):
            for j in range(n):
                for t in (0, 1):
                    # (r^i s^s)(r^j s^t): s r^j = r^-j s
                    k = i + j if s == 0 else i - j
                    table[encode(i, s)][encode(j, t)] = encode(k, s ^ t)
    labels = [None] * (2 * n)
    for i in range(n):
        for s in (0, 1):
            labels[encode(i, s)] = f"r{i}" if s == 0 else f"r{i}s"
    return FiniteGroup(table, labels=labels, kind="dihedral", name=f"D{2 * n}")


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 7:
        raise InvalidSpec(f"symmetric supports 1 <= n <= 7, got {n}")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(n))] for q in perms]
             for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, labels=labels, kind="symmetric", name=f"S{n}")


def quaternion8() -> FiniteGroup:
    """Q8 = {±1, ±i, ±j, ±k}, encoded as i^a j^b with a mod 4, b in {0,1}."""
    def encode(a, b):
        return (a % 4) * 2 + b
    table = [[0] * 8 for _ in range(8)]
    for a in range(4):
        for b in (0, 1):
            for c in range(4):
                for d in (0, 1):
                    if b == 0:
                        x, y = a + c, d
                    elif d == 0:
                        x, y = a - c, 1
                    else:
                        x, y = a - c + 2, 0  # j^2 = i^2
                    table[encode(a, b)][encode(c, d)] = encode(x, y)
    labels = [None] * 8
    for a in range(4):
        for b in (0, 1):
            labels[encode(a, b)] = f"i{a}j" if b else f"i{a}"
    return FiniteGroup(table, labels=labels, kind="quaternion", name="Q8")


def heisenberg(p: int) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over Z/p: extraspecial of order p^3.

    For odd primes this has exponent p.
    """
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise InvalidSpec(f"heisenberg requires a prime, got {p}")
    if p ** 3 > ORDER_CAP:
        raise OrderCap(f"order {p ** 3} exceeds cap {ORDER_CAP}")
    def encode(a, b, c):
        return (a * p + b) * p + c
    n = p ** 3
    table = [[0] * n for _ in range(n)]
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for x in range(p):
                    for y in range(p):
                        for z in range(p):
                            table[encode(a, b, c)][encode(x, y, z)] = encode(
                                (a + x) % p, (b + y) % p, (c + z + a * y) % p)
    labels = [f"({a},{b},{c})" for a in range(p) for b in range(p)
              for c in range(p)]
    return FiniteGroup(table, labels=labels, kind="heisenberg",
                       name=f"Heis{p}")


def product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n = G.order * H.order
    if n > ORDER_CAP:
        raise OrderCap(f"order {n} exceeds cap {ORDER_CAP}")
    table = [[0] * n for _ in range(n)]
    for a in range(G.order):
        for b in range(H.order):
            i = a * H.order + b
            for c in range(G.order):
                for d in range(H.order):
                    table[i][c * H.order + d] = (
                        G.mul[a][c] * H.order + H.mul[b][d])
    labels = [f"({G.labels[a]},{H.labels[b]})"
              for a in range(G.order) for b in range(H.order)]
    return FiniteGroup(table, labels=labels, kind="product",
                       name=f"{G.name}x{H.name}")


class SemidirectProduct:
    """A split extension A ⋊ K with A abelian, assembled from an action.

    A is given by invariant factors (written additively); K by any abelian
    FiniteGroup whose chosen generators carry one integer action matrix each.
    Elements of the embedded group are pairs (a, k) flattened to
    ``a * |K| + k``, so projection onto K is index arithmetic.
    """

    def __init__(self, a_factors, K: FiniteGroup, gen_indices, matrices):
        self.a_factors = list(a_factors)
        self.K = K
        if not K.is_abelian():
            raise BadAction("acting group K must be abelian")
        if len(gen_indices) != len(matrices):
            raise BadAction("need exactly one action matrix per K generator")
        if K.subgroup_closure(gen_indices).order != K.order:
            raise BadAction("given elements do not generate K")
        self.a_order = 1
        for d in self.a_factors:
            self.a_order *= d
        n = self.a_order * K.order
        if n > ORDER_CAP:
            raise OrderCap(f"order {n} exceeds cap {ORDER_CAP}")

        self._a_table, self._a_decode, self._a_encode = _product_table(
            self.a_factors)
        gen_perms = [self._matrix_to_perm(M) for M in matrices]
        self._check_orders(gen_indices, gen_perms)
        self.action = self._expand_action(gen_indices, gen_perms)

        table = [[0] * n for _ in range(n)]
        kn = K.order
        for a in range(self.a_order):
            for k in range(kn):
                i = a * kn + k
                act = self.action[k]
                for a2 in range(self.a_order):
                    moved = act[a2]
                    for k2 in range(kn):
                        table[i][a2 * kn + k2] = (
                            self._a_table[a][moved] * kn + K.mul[k][k2])
        labels = [f"({','.join(map(str, self._a_decode(a)))};{K.labels[k]})"
                  for a in range(self.a_order) for k in range(kn)]
        name = "Z" + "x".join(f"Z{d}" for d in self.a_factors)
        self.group = FiniteGroup(table, labels=labels, kind="semidirect",
                                 name=f"({name}):{K.name}")

    def _matrix_to_perm(self, M) -> list[int]:
        k = len(self.a_factors)
        rows = [list(r) for r in M]
        if len(rows) != k or any(len(r) != k for r in rows):
            raise BadAction(f"action matrix must be {k}x{k}")
        # Well-definedness: the image of generator e_j must have order
        # dividing d_j, i.e. d_i | d_j * M[i][j].
        for i in range(k):
            for j in range(k):
                if (self.a_factors[j] * rows[i][j]) % self.a_factors[i]:
                    raise BadAction(
                        f"matrix entry ({i},{j}) does not define an "
                        "endomorphism of A")
        perm = []
        for a in range(self.a_order):
            vec = self._a_decode(a)
            image = tuple(
                sum(rows[i][j] * vec[j] for j in range(k)) % self.a_factors[i]
                for i in range(k))
            perm.append(self._a_encode(image))
        if len(set(perm)) != self.a_order:
            raise BadAction("action matrix is not invertible on A")
        return perm

    def _check_orders(self, gen_indices, gen_perms) -> None:
        ident = list(range(self.a_order))
        for g, perm in zip(gen_indices, gen_perms):
            # element order of g in K
            order = 1
            acc = g
            while acc != self.K.identity:
                acc = self.K.mul[acc][g]
                order += 1
            power = ident
            for _ in range(order):
                power = [perm[x] for x in power]
            if power != ident:
                raise BadAction(
                    f"action matrix order does not divide the generator "
                    f"order {order}")
        for p1 in gen_perms:
            for p2 in gen_perms:
                if [p1[p2[x]] for x in range(self.a_order)] != \
                        [p2[p1[x]] for x in range(self.a_order)]:
                    raise BadAction("action matrices do not commute")

    def _expand_action(self, gen_indices, gen_perms) -> list[list[int]]:
        """Permutation of A for every element of K, by BFS from the identity."""
        ident = list(range(self.a_order))
        action: dict[int, list[int]] = {self.K.identity: ident}
        frontier = [self.K.identity]
        while frontier:
            new = []
            for k in frontier:
                for g, perm in zip(gen_indices, gen_perms):
                    k2 = self.K.mul[k][g]
                    if k2 not in action:
                        action[k2] = [perm[x] for x in action[k]]
                        new.append(k2)
            frontier = new
        if len(action) != self.K.order:
            raise BadAction("generators do not reach all of K")
        # Consistency: the map k -> action[k] must be a homomorphism.
        for k in range(self.K.order):
            for g, perm in zip(gen_indices, gen_perms):
                composed = [action[k][perm[x]] for x in range(self.a_order)]
                if composed != action[self.K.mul[k][g]]:
                    raise BadAction("action does not respect K's relations")
        return [action[k] for k in range(self.K.order)]

    # --- structural accessors used by the split-extension formulas ---

    def project(self, idx: int) -> int:
        """Projection G -> K on flattened indices."""
        return idx % self.K.order

    def embed_a(self, a: int) -> int:
        """Index in G of the element (a, 1)."""
        return a * self.K.order + self.K.identity

    def a_kernel(self) -> SubgroupSet:
        """The normal subgroup A = ker(projection) inside the embedded group."""
        mask = 0
        for a in range(self.a_order):
            mask |= 1 << self.embed_a(a)
        return SubgroupSet(self.group, mask)


def semidirect(a_factors, k_factors, matrices) -> SemidirectProduct:
    """Build A ⋊ K where K = Z_{c1} x ... x Z_{cl} and the i-th coordinate
    generator of K acts on A via ``matrices[i]``."""
    k_factors = list(k_factors)
    if len(k_factors) == 1:
        K = cyclic(k_factors[0])
    else:
        K = abelian(k_factors)
    # Coordinate generator e_i flattens to the stride of coordinate i.
    gen_indices = []
    stride = 1
    for d in reversed(k_factors):
        gen_indices.append(stride % K.order)
        stride *= d
    gen_indices.reverse()
    ext = SemidirectProduct(a_factors, K, gen_indices, matrices)
    ext.k_factors = k_factors
    return ext
