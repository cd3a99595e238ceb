"""Labeled truncations of the C-tree: valuations, reading ω, and its inverse.

Vertices are pairs (i, j): strand i ≥ 1, depth j ≥ 0.  Depth 0 is the strand
root (written i), odd depth j = 2m−1 is the outer vertex i·m, even depth
j = 2m > 0 is the inner vertex i·m⁻.  The level is i + ceil(j/2); the rank-k
truncation keeps the vertices of level ≤ k.

A labeling s assigns a natural number to every vertex (sparse: absent means 0).
The valuation q(v) is the signed prefix sum along the strand — roots and outer
vertices count positively, inner vertices negatively.  Level t of a labeled
tree reads as a column ω_t: outer blocks right to left, then inner blocks left
to right; a valid tree (n-labeling + column conditions + admissibility
conditions) reads as a highest-weight decorated word, one column per level,
and every highest-weight decorated word arises from exactly one valid tree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import crystal as C
from . import insertion as I
from . import words as W
from .words import DomainError


def level(v: tuple) -> int:
    i, j = v
    return i + (j + 1) // 2


def is_inner(v: tuple) -> bool:
    return v[1] > 0 and v[1] % 2 == 0


def is_outer(v: tuple) -> bool:
    """Root or outer vertex (counts positively in the valuation)."""
    return not is_inner(v)


def outer_vertex(i: int, m: int) -> tuple:
    """The outer vertex i·m (the strand root when m = 0)."""
    return (i, 0) if m == 0 else (i, 2 * m - 1)


def inner_vertex(i: int, m: int) -> tuple:
    """The inner vertex i·m⁻ (m ≥ 1)."""
    assert m >= 1
    return (i, 2 * m)


def vertices(k: int) -> list:
    """All vertices of the rank-k truncation, in (level, strand) order."""
    out = []
    for t in range(1, k + 1):
        out.append((t, 0))
        for i in range(1, t):
            out.append(outer_vertex(i, t - i))
            out.append(inner_vertex(i, t - i))
    return sorted(out, key=lambda v: (level(v), v))


@dataclass(frozen=True)
class CTree:
    rank: int
    n: int
    labels: dict = field(default_factory=dict)  # (i, j) -> positive int

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError(f"rank must be >= 1, not {self.rank}")
        clean = {}
        for v, s in self.labels.items():
            if s < 0:
                raise DomainError(f"negative label at {v}")
            if level(v) > self.rank:
                raise DomainError(f"vertex {v} outside rank-{self.rank} truncation")
            if s:
                clean[v] = s
        object.__setattr__(self, "labels", clean)

    def s(self, v: tuple) -> int:
        return self.labels.get(v, 0)

    def __hash__(self):
        return hash((self.rank, self.n, tuple(sorted(self.labels.items()))))

    def __eq__(self, other):
        return (
            isinstance(other, CTree)
            and (self.rank, self.n, self.labels) == (other.rank, other.n, other.labels)
        )


def valuation(T: CTree, v: tuple) -> int:
    """q(v): sum of root/outer labels minus inner labels on the strand up to v."""
    i, j = v
    if not (i >= 1 and j >= 0 and level(v) <= T.rank):
        raise DomainError(f"vertex {v} outside rank-{T.rank} truncation")
    q = 0
    for jj in range(0, j + 1):
        s = T.s((i, jj))
        q += s if is_outer((i, jj)) else -s
    return q


def strand_valuations(T: CTree) -> tuple:
    """(q_1, ..., q_k): valuation at the deepest truncated vertex of each strand."""
    out = []
    for i in range(1, T.rank + 1):
        m = T.rank - i
        v = outer_vertex(i, 0) if m == 0 else inner_vertex(i, m)
        out.append(valuation(T, v))
    return tuple(out)


def _q_before(T: CTree, v: tuple) -> int:
    """Valuation at the strand predecessor of v (0 for a root)."""
    i, j = v
    return valuation(T, (i, j - 1)) if j > 0 else 0


def _level_vertices(t: int):
    """Level-t vertices in reading order: outer right-to-left, inner left-to-right."""
    outers = [outer_vertex(t - l, l) for l in range(0, t)]
    inners = [inner_vertex(l, t - l) for l in range(1, t)]
    return outers, inners


def level_column(T: CTree, t: int) -> tuple:
    """ω_t: the column read off level t (ε when all labels on the level vanish)."""
    outers, inners = _level_vertices(t)
    letters = []
    for v in outers:
        s = T.s(v)
        if s:
            a = _q_before(T, v)
            letters.extend(range(a + 1, a + s + 1))
    for v in inners:
        s = T.s(v)
        if s:
            a = valuation(T, outer_vertex(v[0], v[1] // 2))  # q at the paired outer
            letters.extend(-(a - d) for d in range(s))
    return tuple(letters)


def reading(T: CTree) -> tuple:
    """ω(T) = ω_1 ⋯ ω_k as a decorated word (defined on any labeled tree)."""
    return tuple(level_column(T, t) for t in range(1, T.rank + 1))


def validate(T: CTree) -> list:
    """All violations of the n-labeling, column, and admissibility conditions."""
    out = []
    k, n = T.rank, T.n
    for v in vertices(k):
        q = valuation(T, v)
        if not 0 <= q <= n:
            out.append(f"n-labeling: q{v} = {q} outside 0..{n}")
    # column conditions: for every root/outer vertex v = i·m with i >= 2,
    # q(i·m) <= q((i−1)·m⁻) and q(i·m) <= q((i−1)·(m+1)⁻)
    # (with (i−1)·0⁻ read as the strand-(i−1) root)
    for v in vertices(k):
        if not is_outer(v):
            continue
        i, j = v
        m = (v[1] + 1) // 2
        if i < 2:
            continue
        q = valuation(T, v)
        prev_inner = (i - 1, 0) if m == 0 else inner_vertex(i - 1, m)
        if q > valuation(T, prev_inner):
            out.append(
                f"column: q{v} = {q} > q{prev_inner} = {valuation(T, prev_inner)}"
                f" (level {level(v)} not strictly increasing)"
            )
        nxt_inner = inner_vertex(i - 1, m + 1)
        if level(nxt_inner) <= k and q > valuation(T, nxt_inner):
            out.append(
                f"column: q{v} = {q} > q{nxt_inner} = {valuation(T, nxt_inner)}"
                f" (level {level(v)} not strictly increasing)"
            )
    # admissibility: for each level t and l <= t−1,
    # sum_{i=0..l} s((t−i)·i) + s((t−i)·i⁻) <= q((t−l)·l)
    for t in range(1, k + 1):
        total = 0
        for l in range(0, t):
            total += T.s(outer_vertex(t - l, l))
            if l >= 1:
                total += T.s(inner_vertex(t - l, l))
            if total > valuation(T, outer_vertex(t - l, l)):
                out.append(
                    f"admissibility: level {t}, l={l}: partial label sum {total}"
                    f" > q{outer_vertex(t - l, l)}"
                    f" = {valuation(T, outer_vertex(t - l, l))}"
                    f" (ω_{t} inadmissible)"
                )
    return out


def is_valid(T: CTree) -> bool:
    return not validate(T)


def tree_normal_form(T: CTree) -> tuple:
    """[ω(T)] read off the strand valuations: 𝔠(q_k) 𝔠(q_{k−1}) ⋯ 𝔠(q_1)."""
    if not is_valid(T):
        raise DomainError("tree_normal_form requires a valid tree")
    qs = strand_valuations(T)
    return tuple(W.block(0, q, 0, T.n) for q in reversed(qs))


# --- standard trees, truncation surgery ---------------------------------------

def standard_tree(a: tuple, n: int) -> CTree:
    """T(a₁ ≥ ... ≥ a_k): outer vertex i·m carries a_{k−m} − a_{k−m+1}."""
    k = len(a)
    if any(a[i] < a[i + 1] for i in range(k - 1)) or (a and (a[0] > n or a[-1] < 0)):
        raise DomainError(f"standard tree needs n >= a_1 >= ... >= a_k >= 0, got {a}")
    ext = tuple(a) + (0,)
    labels = {}
    for i in range(1, k + 1):
        for m in range(0, k - i + 1):
            labels[outer_vertex(i, m)] = ext[k - m - 1] - ext[k - m]
    return CTree(k, n, labels)


def truncation(T: CTree, k: int) -> CTree:
    return CTree(k, T.n, {v: s for v, s in T.labels.items() if level(v) <= k})


def standardize_truncation(T: CTree) -> CTree:
    """Replace the (k−1)-truncation of a rank-k tree by the standard tree with
    the same strand valuations, keeping the last level's labels."""
    k = T.rank
    if k < 2:
        raise DomainError("standardize_truncation needs rank >= 2")
    if not is_valid(T):
        raise DomainError("standardize_truncation requires a valid tree")
    inner_qs = strand_valuations(truncation(T, k - 1))
    Q = standard_tree(inner_qs, T.n)
    labels = dict(Q.labels)
    for v, s in T.labels.items():
        if level(v) == k:
            labels[v] = s
    return CTree(k, T.n, labels)


def fold_last_levels(T: CTree) -> CTree:
    """Merge the last two levels of a rank-k tree whose (k−1)-truncation is
    standard: the result reads ω_1 ⋯ ω_{k−2} · [ω_{k−1} ω_k].

    Writing k = K+1 with standard K-truncation T(a): the new level-K outer
    labels are the old level-(K+1) outer labels shifted down one strand, the
    new level-(K+1) outer labels are q_i(T) − q_T((i+1)·(K−i)), and all labels
    of the last two inner diagonals vanish.
    """
    k = T.rank
    if k < 2:
        raise DomainError("fold_last_levels needs rank >= 2")
    K = k - 1
    inner = truncation(T, K)
    qs_inner = strand_valuations(inner)
    if inner != standard_tree(qs_inner, T.n):
        raise DomainError("fold_last_levels requires a standard (k−1)-truncation")
    qs = strand_valuations(T)
    labels = {v: s for v, s in T.labels.items() if level(v) <= K - 1}
    for i in range(1, K + 1):  # level K outer labels ← level K+1, strand i+1
        labels[outer_vertex(i, K - i)] = T.s(outer_vertex(i + 1, K - i))
    for i in range(1, K + 2):  # level K+1 outer labels from valuation defects
        sub = valuation(T, outer_vertex(i + 1, K - i)) if i <= K else 0
        s = qs[i - 1] - sub
        if s < 0:
            raise DomainError(f"fold_last_levels: negative label {s} at strand {i}")
        labels[outer_vertex(i, K + 1 - i)] = s
    out = CTree(k, T.n, labels)
    assert strand_valuations(out) == qs, (T, out)
    return out


# --- the inverse map 𝒯 --------------------------------------------------------

def _grow_candidates(T: CTree, x: int) -> list:
    """Trees obtained from T by placing letter x at each matching vertex of the
    deepest level.

    An unbarred v extends a strand r with q_r = v − 1 at its level-k outer
    vertex (the root for strand k); a barred v̄ increments the level-k inner
    vertex of a strand r < k with q_r = v."""
    k = T.rank
    qs = strand_valuations(T)
    out = []
    for r in range(1, k + 1):
        if x > 0 and qs[r - 1] == x - 1:
            v = outer_vertex(r, k - r)
        elif x < 0 and r < k and qs[r - 1] == -x:
            v = inner_vertex(r, k - r)
        else:
            continue
        labels = dict(T.labels)
        labels[v] = labels.get(v, 0) + 1
        out.append(CTree(k, T.n, labels))
    return out


def encode(u: tuple, n: int) -> CTree:
    """𝒯(u): the unique valid tree with reading u, for highest-weight u.

    Built column by column, letter by letter: each letter has at most a few
    admissible placements; the one whose incremented tree stays valid and
    still reads as the consumed prefix is kept, and is checked to be unique.
    """
    for col in u:
        if not W.is_admissible(col, n):
            raise DomainError(f"{W.format_column(col)} is not admissible at rank {n}")
    if not C.is_highest_weight(u, n):
        raise DomainError(f"{W.format_word(u)} is not of highest weight")
    T = None
    for ci, col in enumerate(u):
        k = ci + 1
        T = CTree(k, n, {} if T is None else dict(T.labels))
        consumed = u[:ci] + (col[:0],)
        for li, x in enumerate(col):
            prefix = u[:ci] + (col[: li + 1],)
            survivors = [
                cand
                for cand in _grow_candidates(T, x)
                if is_valid(cand) and reading(cand) == prefix
            ]
            if len(survivors) != 1:
                raise AssertionError(
                    f"encode: {len(survivors)} placements survive for letter {x}"
                    f" of column {ci} in {W.format_word(u)}"
                )
            T = survivors[0]
    assert reading(T) == u, (u, reading(T))
    return T


# --- enumeration ---------------------------------------------------------------

def enumerate_valid_trees(k: int, n: int):
    """All valid rank-k trees at rank n, by depth-first labeling in level order.

    Prunes on the n-labeling along each strand as soon as a vertex is labeled
    (labels only accumulate along strands, so a violated 0 <= q <= n never
    recovers) and re-validates each completed level.
    """
    order = vertices(k)
    level_end = {t: max(i for i, v in enumerate(order) if level(v) == t) for t in range(1, k + 1)}

    def rec(idx: int, labels: dict):
        if idx == len(order):
            yield CTree(k, n, dict(labels))
            return
        v = order[idx]
        i, j = v
        q_prev = 0
        for jj in range(j):
            s = labels.get((i, jj), 0)
            q_prev += s if is_outer((i, jj)) else -s
        lo, hi = 0, n
        if is_outer(v):
            hi = n - q_prev  # keep q <= n
        else:
            hi = q_prev      # keep q >= 0
        for s in range(lo, hi + 1):
            if s:
                labels[v] = s
            if idx == level_end[level(v)]:
                partial = CTree(k, n, {w: c for w, c in labels.items()})
                # conditions only mention vertices of levels <= the completed
                # one, so a violation here is final
                if any(
                    lvl <= level(v)
                    for lvl in _violated_levels(partial)
                ):
                    labels.pop(v, None)
                    continue
            yield from rec(idx + 1, labels)
            labels.pop(v, None)

    yield from rec(0, {})


def _violated_levels(T: CTree):
    """Levels at which some validity condition fails (cheap pruning helper)."""
    out = set()
    k, n = T.rank, T.n
    for v in vertices(k):
        q = valuation(T, v)
        if not 0 <= q <= n:
            out.add(level(v))
        if is_outer(v) and v[0] >= 2:
            i = v[0]
            m = (v[1] + 1) // 2
            prev_inner = (i - 1, 0) if m == 0 else inner_vertex(i - 1, m)
            if q > valuation(T, prev_inner):
                out.add(level(v))
            nxt_inner = inner_vertex(i - 1, m + 1)
            if level(nxt_inner) <= k and q > valuation(T, nxt_inner):
                out.add(level(v))
    for t in range(1, k + 1):
        total = 0
        for l in range(0, t):
            total += T.s(outer_vertex(t - l, l))
            if l >= 1:
                total += T.s(inner_vertex(t - l, l))
            if total > valuation(T, outer_vertex(t - l, l)):
                out.add(t)
    return out


# --- serialization ---------------------------------------------------------------

def _vertex_key(v: tuple) -> str:
    i, j = v
    if j == 0:
        return f"{i}.0"
    m = (j + 1) // 2
    return f"{i}.{m}+" if j % 2 == 1 else f"{i}.{m}-"


def _parse_vertex_key(key: str) -> tuple:
    try:
        i_text, rest = key.split(".")
        i = int(i_text)
        if rest == "0":
            return (i, 0)
        m = int(rest[:-1])
        if rest.endswith("+"):
            return outer_vertex(i, m)
        if rest.endswith("-"):
            return inner_vertex(i, m)
    except (ValueError, AssertionError):
        pass
    raise DomainError(f"bad vertex key {key!r}")


def to_json(T: CTree) -> str:
    payload = {
        "rank": T.rank,
        "n": T.n,
        "labels": {_vertex_key(v): s for v, s in sorted(T.labels.items())},
    }
    return json.dumps(payload, sort_keys=True)


def from_json(text: str) -> CTree:
    payload = json.loads(text)
    labels = {_parse_vertex_key(k): int(s) for k, s in payload.get("labels", {}).items()}
    return CTree(int(payload["rank"]), int(payload["n"]), labels)
