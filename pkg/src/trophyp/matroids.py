"""Matroid core: basis families, circuits, connectivity, duality, minors,
matroid-polytope faces, non-crossing tests, the positroid decision
procedure, and exhaustive catalog generation for small ground sets.

Ground sets are ``range(n)`` (0-based).  Bases are stored as bitmasks.
Matroid polytopes are generalized permutohedra, so faces are swept via
ordered set partitions (the braid-fan cones); the sweep is vectorized
with integer numpy for the catalog-scale runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

_MAX_GROUND = 12


class ExchangeError(ValueError):
    """Basis-exchange axiom violation; carries a witness."""

    def __init__(self, witness):
        self.witness = witness
        b1, b2, x = witness
        super().__init__(
            f"exchange fails for bases {sorted(b1)} and {sorted(b2)} at element {x}"
        )


def _mask(subset: Iterable[int]) -> int:
    m = 0
    for e in subset:
        m |= 1 << e
    return m


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: frozenset[int]  # bitmasks

    def __post_init__(self):
        if not self.bases:
            raise ValueError("a matroid needs at least one basis")
        sizes = {bin(b).count("1") for b in self.bases}
        if len(sizes) != 1:
            raise ValueError("bases must all have the same size")

    @property
    def rank(self) -> int:
        return bin(next(iter(self.bases))).count("1")

    def basis_list(self) -> list[tuple[int, ...]]:
        return sorted(_bits(b) for b in self.bases)

    def ground(self) -> range:
        return range(self.n)

    def is_basis(self, subset: Iterable[int]) -> bool:
        return _mask(subset) in self.bases

    def rank_of(self, subset: Iterable[int]) -> int:
        m = _mask(subset)
        return max(bin(b & m).count("1") for b in self.bases)

    def is_independent(self, subset: Iterable[int]) -> bool:
        m = _mask(subset)
        return any(b & m == m for b in self.bases)

    def loops(self) -> tuple[int, ...]:
        covered = 0
        for b in self.bases:
            covered |= b
        return tuple(e for e in range(self.n) if not covered & (1 << e))


def exchange_violation(base_masks: Sequence[int]) -> tuple | None:
    """First violating (B1, B2, x) of the basis-exchange axiom, else None."""
    base_set = set(base_masks)
    for b1 in base_masks:
        for b2 in base_masks:
            if b1 == b2:
                continue
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            m = only1
            while m:
                low = m & -m
                m ^= low
                stripped = b1 ^ low
                w = only2
                ok = False
                while w:
                    lw = w & -w
                    w ^= lw
                    if (stripped | lw) in base_set:
                        ok = True
                        break
                if not ok:
                    return (_bits(b1), _bits(b2), low.bit_length() - 1)
    return None


def from_bases(n: int, d: int, bases: Iterable[Iterable[int]], validate: bool = True) -> Matroid:
    """Build and (for n <= 10) validate a matroid from its basis family."""
    if n < 0 or n > _MAX_GROUND:
        raise ValueError(f"ground-set size {n} outside supported range 0..{_MAX_GROUND}")
    masks = set()
    for b in bases:
        t = tuple(b)
        if len(set(t)) != len(t):
            raise ValueError(f"repeated element in basis {t}")
        if any(not 0 <= e < n for e in t):
            raise ValueError(f"element out of range in basis {t}")
        if len(t) != d:
            raise ValueError(f"basis {t} does not have size {d}")
        masks.add(_mask(t))
    if not masks:
        raise ValueError("empty basis family")
    if validate and n <= 10:
        witness = exchange_violation(sorted(masks))
        if witness is not None:
            raise ExchangeError(witness)
    return Matroid(n, frozenset(masks))


def uniform(d: int, n: int) -> Matroid:
    return from_bases(n, d, itertools.combinations(range(n), d), validate=False)


# ---------------------------------------------------------------------------
# circuits, connectivity, standard operations


@lru_cache(maxsize=4096)
def circuits(M: Matroid) -> frozenset[frozenset[int]]:
    """Minimal dependent sets, by a minimality scan over subsets."""
    d = M.rank
    dependent_masks: set[int] = set()
    out: set[frozenset[int]] = set()
    for size in range(1, d + 2):
        for subset in itertools.combinations(range(M.n), size):
            m = _mask(subset)
            if any((m & ~dm) == 0 and dm != m for dm in dependent_masks):
                continue  # contains a smaller dependent set
            if M.rank_of(subset) < size:
                dependent_masks.add(m)
                out.add(frozenset(subset))
    return frozenset(out)


@dataclass(frozen=True)
class CyclicPartition:
    """Disjoint nonempty blocks of [0..n-1], read cyclically."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= set(b)

    def sorted_blocks(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(b)) for b in self.blocks)


def _components_from_masks(n: int, base_masks: Sequence[int]) -> tuple[frozenset[int], ...]:
    """Connected components via basis-exchange edges (union-find).

    Two elements lie in a common circuit exactly when some basis exchange
    swaps one for the other.
    """
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    base_set = set(base_masks)
    full = (1 << n) - 1
    for b in base_masks:
        inside = b
        while inside:
            low = inside & -inside
            inside ^= low
            e = low.bit_length() - 1
            outside = full & ~b
            stripped = b ^ low
            w = outside
            while w:
                lw = w & -w
                w ^= lw
                if (stripped | lw) in base_set:
                    union(e, lw.bit_length() - 1)
    groups: dict[int, set[int]] = {}
    for e in range(n):
        groups.setdefault(find(e), set()).add(e)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


def connected_components(M: Matroid) -> CyclicPartition:
    """Components of the relation "lie in a common circuit"; loops and
    coloops are singletons."""
    return CyclicPartition(M.n, _components_from_masks(M.n, sorted(M.bases)))


def dual(M: Matroid) -> Matroid:
    full = (1 << M.n) - 1
    return Matroid(M.n, frozenset(full ^ b for b in M.bases))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    shift = M1.n
    bases = frozenset(b1 | (b2 << shift) for b1 in M1.bases for b2 in M2.bases)
    return Matroid(M1.n + M2.n, bases)


def restrict(M: Matroid, S: Iterable[int]) -> Matroid:
    """Restriction M|S, relabeled to range(len(S)) preserving order."""
    s = sorted(set(S))
    if any(not 0 <= e < M.n for e in s):
        raise ValueError("subset out of range")
    smask = _mask(s)
    rk = max(bin(b & smask).count("1") for b in M.bases)
    pos = {e: i for i, e in enumerate(s)}
    bases = set()
    for b in M.bases:
        inter = b & smask
        if bin(inter).count("1") == rk:
            bases.add(_mask(pos[e] for e in _bits(inter)))
    return Matroid(len(s), frozenset(bases))


def contract(M: Matroid, S: Iterable[int]) -> Matroid:
    """Contraction M/S, relabeled to the complement of S preserving order."""
    s = sorted(set(S))
    if any(not 0 <= e < M.n for e in s):
        raise ValueError("subset out of range")
    smask = _mask(s)
    rk_s = max(bin(b & smask).count("1") for b in M.bases)
    rest = [e for e in range(M.n) if e not in set(s)]
    pos = {e: i for i, e in enumerate(rest)}
    bases = set()
    for b in M.bases:
        if bin(b & smask).count("1") == rk_s:
            bases.add(_mask(pos[e] for e in _bits(b & ~smask)))
    return Matroid(len(rest), frozenset(bases))


def is_loopless(M: Matroid) -> bool:
    return not M.loops()


def parallelism_class(M: Matroid, e: int) -> frozenset[int]:
    """e together with all elements parallel to it ({e,f} a circuit)."""
    if not 0 <= e < M.n:
        raise ValueError("element out of range")
    cls = {e}
    for c in circuits(M):
        if len(c) == 2 and e in c:
            cls |= set(c)
    return frozenset(cls)


# ---------------------------------------------------------------------------
# non-crossing tests


def _noncrossing_quadruple(n: int, blocks: Sequence[Iterable[int]]) -> bool:
    """Literal quantifier check: no a,b,c,d in cyclic order alternating
    between two distinct blocks.  O(n^4), for n <= 16."""
    if n > 16:
        raise ValueError("quadruple check capped at n = 16")
    owner = {}
    for bi, blk in enumerate(blocks):
        for e in blk:
            owner[e] = bi
    elems = sorted(owner)
    for a, b, c, d in itertools.combinations(elems, 4):
        # linear order a<b<c<d is a cyclic order; alternation means a,c in
        # one block and b,d in another
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return False
    return True


def _noncrossing_stack(n: int, blocks: Sequence[Iterable[int]]) -> bool:
    """Linear-time nesting scan; equivalent to the quadruple check because
    any cyclic alternation rotates to a linear one."""
    owner: dict[int, int] = {}
    last: dict[int, int] = {}
    for bi, blk in enumerate(blocks):
        for e in blk:
            owner[e] = bi
            last[bi] = max(last.get(bi, -1), e)
    stack: list[int] = []
    open_set: set[int] = set()
    closed: set[int] = set()
    for e in range(n):
        bi = owner.get(e)
        if bi is None:
            continue
        if bi in closed:
            return False
        if bi in open_set:
            if stack[-1] != bi:
                return False
        else:
            stack.append(bi)
            open_set.add(bi)
        if last[bi] == e:
            stack.pop()
            open_set.remove(bi)
            closed.add(bi)
    return True


def is_noncrossing_partition(P: CyclicPartition, method: str = "stack") -> bool:
    """Non-crossing test for a cyclic partition of a subset of [0..n-1]."""
    blocks = [sorted(b) for b in P.blocks]
    if method == "stack":
        return _noncrossing_stack(P.n, blocks)
    if method == "quadruple":
        return _noncrossing_quadruple(P.n, blocks)
    raise ValueError(f"unknown method {method!r}")


def crossing_witness(P: CyclicPartition) -> tuple[int, int, int, int] | None:
    """A quadruple a<b<c<d alternating between two blocks, if any."""
    owner = {}
    for bi, blk in enumerate(P.blocks):
        for e in blk:
            owner[e] = bi
    elems = sorted(owner)
    for a, b, c, d in itertools.combinations(elems, 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return (a, b, c, d)
    return None


def is_noncrossing_matroid(M: Matroid) -> bool:
    return is_noncrossing_partition(connected_components(M))


# ---------------------------------------------------------------------------
# matroid-polytope faces


@dataclass(frozen=True)
class FaceMatroid:
    """A face of the matroid polytope, as the matroid of its bases."""

    matroid: Matroid
    defining_weight: tuple
    dimension: int

    def components(self) -> CyclicPartition:
        return connected_components(self.matroid)


def _max_weight_bases(M: Matroid, w: Sequence) -> frozenset[int]:
    best = None
    chosen: list[int] = []
    for b in M.bases:
        s = sum(w[e] for e in _bits(b))
        if best is None or s > best:
            best = s
            chosen = [b]
        elif s == best:
            chosen.append(b)
    return frozenset(chosen)


def face_matroid(M: Matroid, w: Sequence) -> FaceMatroid:
    """Face of the matroid polytope maximizing the linear form w.x."""
    if len(w) != M.n:
        raise ValueError("weight length mismatch")
    face = Matroid(M.n, _max_weight_bases(M, w))
    comps = _components_from_masks(M.n, sorted(face.bases))
    return FaceMatroid(face, tuple(w), M.n - len(comps))


def face_matroid_greedy(M: Matroid, w: Sequence) -> Matroid:
    """Layered direct-sum construction of the same face: restrict and
    contract along descending level sets of w.  Test oracle for
    ``face_matroid``."""
    levels = sorted(set(w), reverse=True)
    done: list[int] = []
    pieces: list[tuple[list[int], Matroid]] = []
    for lv in levels:
        layer = [e for e in range(M.n) if w[e] == lv]
        upto = done + layer
        sub = restrict(M, upto)
        if done:
            local = contract(sub, [sorted(upto).index(e) for e in done])
        else:
            local = sub
        pieces.append((sorted(layer), local))
        done = upto
    # assemble bases in original labels
    result: set[int] = {0}
    for layer, local in pieces:
        new = set()
        for prefix in result:
            for b in local.bases:
                add = _mask(layer[i] for i in _bits(b))
                new.add(prefix | add)
        result = new
    return Matroid(M.n, frozenset(result))


def _ordered_partition_weights(n: int) -> np.ndarray:
    """All ordered set partitions of [0..n-1] as integer weight rows
    (block i of k gets weight k - i)."""
    rows: list[tuple[int, ...]] = []

    def rec(remaining: tuple[int, ...], weights: dict[int, int], level: int):
        if not remaining:
            rows.append(tuple(weights[e] for e in range(n)))
            return
        for r in range(1, len(remaining) + 1):
            for blk in itertools.combinations(remaining, r):
                w2 = dict(weights)
                for e in blk:
                    w2[e] = -level
                blk_set = set(blk)
                rec(tuple(e for e in remaining if e not in blk_set), w2, level + 1)

    rec(tuple(range(n)), {}, 0)
    return np.array(rows, dtype=np.int64)


@lru_cache(maxsize=10)
def _partition_weight_matrix(n: int) -> np.ndarray:
    if n > 8:
        raise ValueError("ordered-set-partition sweep capped at n = 8")
    return _ordered_partition_weights(n)


def _faces_by_sweep(M: Matroid) -> list[FaceMatroid]:
    """All distinct faces of the matroid polytope via the braid-cone sweep."""
    W = _partition_weight_matrix(M.n)
    masks = sorted(M.bases)
    B = np.array([[1 if b >> e & 1 else 0 for e in range(M.n)] for b in masks], dtype=np.int64)
    scores = B @ W.T  # (|bases|, P)
    colmax = scores.max(axis=0)
    attain = (scores == colmax).T  # (P, |bases|)
    packed = np.packbits(attain, axis=1)
    _, idx = np.unique(packed, axis=0, return_index=True)
    out = []
    for pi in sorted(idx):
        sel = attain[pi]
        face_masks = frozenset(m for m, keep in zip(masks, sel) if keep)
        face = Matroid(M.n, face_masks)
        comps = _components_from_masks(M.n, sorted(face_masks))
        out.append(FaceMatroid(face, tuple(int(x) for x in W[pi]), M.n - len(comps)))
    return out


def _faces_by_refinement(M: Matroid) -> list[FaceMatroid]:
    """Face enumeration by iterated indicator-weight refinement (any n)."""
    seen: dict[frozenset[int], tuple] = {}
    start_w = tuple(0 for _ in range(M.n))
    frontier = [(M.bases, start_w)]
    seen[M.bases] = start_w
    subsets = [
        _mask(s)
        for size in range(1, M.n)
        for s in itertools.combinations(range(M.n), size)
    ]
    scale = M.n + 1
    while frontier:
        nxt = []
        for bases, w in frontier:
            sub = Matroid(M.n, bases)
            for smask in subsets:
                ind = [1 if smask >> e & 1 else 0 for e in range(M.n)]
                fb = _max_weight_bases(sub, ind)
                if fb not in seen:
                    w2 = tuple(scale * a + b for a, b in zip(w, ind))
                    seen[fb] = w2
                    nxt.append((fb, w2))
        frontier = nxt
    out = []
    for bases, w in seen.items():
        comps = _components_from_masks(M.n, sorted(bases))
        out.append(FaceMatroid(Matroid(M.n, bases), w, M.n - len(comps)))
    return out


@lru_cache(maxsize=512)
def all_faces(M: Matroid) -> tuple[FaceMatroid, ...]:
    if M.n <= 8:
        return tuple(_faces_by_sweep(M))
    return tuple(_faces_by_refinement(M))


def loopless_faces_of_dim(M: Matroid, k: int) -> list[FaceMatroid]:
    """Every loopless face of the matroid polytope of dimension k.

    Loopless faces only exist in dimensions n - rank .. n - #components;
    asking below that range returns an empty list (such faces all carry
    loops), above it is an error.
    """
    m = len(connected_components(M).blocks)
    if not 0 <= k <= M.n - m:
        raise ValueError(f"dimension {k} outside face range [0, {M.n - m}]")
    return [
        f
        for f in all_faces(M)
        if f.dimension == k and is_loopless(f.matroid)
    ]


# ---------------------------------------------------------------------------
# positroid recognition


@dataclass(frozen=True)
class PositroidVerdict:
    is_positroid: bool
    certificate: FaceMatroid | None = None  # a crossing loopless face on failure

    def __bool__(self) -> bool:
        return self.is_positroid


def _strip_loops(M: Matroid) -> Matroid:
    loops = M.loops()
    if not loops:
        return M
    keep = [e for e in range(M.n) if e not in set(loops)]
    return restrict(M, keep)


def is_positroid(M: Matroid) -> PositroidVerdict:
    """Positroid test via the non-crossing condition on loopless faces.

    Loops are stripped first, keeping the induced cyclic order (adding a
    zero column to a nonnegative representing matrix keeps all maximal
    minors nonnegative, so loops never affect the answer).  For a loopless
    matroid of rank d the test is: every (n-d)-dimensional loopless face
    of the matroid polytope is a non-crossing matroid.
    """
    M0 = _strip_loops(M)
    if M0.rank == 0 or M0.n == 0:
        return PositroidVerdict(True)
    d = M0.rank
    for f in loopless_faces_of_dim(M0, M0.n - d):
        if not is_noncrossing_partition(f.components()):
            return PositroidVerdict(False, f)
    return PositroidVerdict(True)


# ---------------------------------------------------------------------------
# exhaustive catalogs


def matroids_of_rank(n: int, d: int) -> list[Matroid]:
    """All labeled matroids of rank d on [0..n-1], by lexicographic DFS
    over basis families with dead-witness pruning."""
    if d < 0 or d > n:
        return []
    subs = [_mask(c) for c in itertools.combinations(range(n), d)]
    m = len(subs)
    index = {s: i for i, s in enumerate(subs)}
    out: list[Matroid] = []

    def requirements(new_idx: int, chosen: list[int]) -> list[tuple[int, ...]] | None:
        """Unmet exchange requirements created by adding subs[new_idx];
        None when some requirement is already impossible."""
        bnew = subs[new_idx]
        chosen_set = set(chosen)
        reqs: list[tuple[int, ...]] = []
        for ci in chosen:
            b = subs[ci]
            for b1, b2 in ((bnew, b), (b, bnew)):
                only1 = b1 & ~b2
                only2 = b2 & ~b1
                mm = only1
                while mm:
                    low = mm & -mm
                    mm ^= low
                    stripped = b1 ^ low
                    wits = []
                    satisfied = False
                    w = only2
                    while w:
                        lw = w & -w
                        w ^= lw
                        cand = stripped | lw
                        wi = index[cand]
                        if wi in chosen_set or wi == new_idx:
                            satisfied = True
                            break
                        if wi > new_idx:
                            wits.append(wi)
                    if satisfied:
                        continue
                    if not wits:
                        return None
                    reqs.append(tuple(sorted(wits)))
        return reqs

    def dfs(idx: int, chosen: list[int], pending: list[tuple[int, ...]]):
        if idx == m:
            if chosen and not pending:
                out.append(Matroid(n, frozenset(subs[i] for i in chosen)))
            return
        # exclude subs[idx]
        dead = False
        np_pending = []
        for r in pending:
            if idx in r:
                r2 = tuple(x for x in r if x != idx)
                if not r2:
                    dead = True
                    break
                np_pending.append(r2)
            else:
                np_pending.append(r)
        if not dead:
            dfs(idx + 1, chosen, np_pending)
        # include subs[idx]
        newreqs = requirements(idx, chosen)
        if newreqs is None:
            return
        still = [r for r in pending if idx not in r]
        merged = still + newreqs
        chosen.append(idx)
        dfs(idx + 1, chosen, merged)
        chosen.pop()

    dfs(0, [], [])
    return out


def all_matroids(n: int) -> list[Matroid]:
    """Every labeled matroid on [0..n-1], all ranks."""
    out: list[Matroid] = []
    for d in range(n + 1):
        out.extend(matroids_of_rank(n, d))
    return out
