"""Kashiwara operators e_i, f_i on plain and decorated words.

Plain words are tuples of letters; decorated words are tuples of admissible
columns (ε allowed).  The crystal chain on letters is

    1 → 2 → ... → n → n̄ → ... → 2̄ → 1̄

with edge labels 1, 2, ..., n, n-1, ..., 1: f_i sends i ↦ i+1 and
(i+1)‾ ↦ ī for i < n, and f_n sends n ↦ n̄; e_i is the inverse.

The word action uses the signature (bracket) rule: each letter contributes an
f-mark if f_i is defined on it and an e-mark if e_i is, adjacent
(f-mark, e-mark) pairs cancel iteratively, and e_i/f_i act at the rightmost
surviving e-mark / leftmost surviving f-mark.  (The source text's printed sign
convention is inverted relative to its own tensor rule; this is the repaired
convention, and an independent tensor-rule implementation is kept below for
the exhaustive agreement check.)
"""

from __future__ import annotations

from collections import namedtuple

from . import words as W
from .words import DomainError

Signature = namedtuple("Signature", "p q e_position f_position")
# p = surviving e-marks (ε_i), q = surviving f-marks (φ_i);
# positions are 0-based letter indices, or None.


def f_letter(x: int, i: int, n: int):
    """Image of a single letter under f_i, or None."""
    if not 1 <= i <= n:
        raise DomainError(f"i={i} out of range 1..{n}")
    if i < n:
        if x == i:
            return i + 1
        if x == -(i + 1):
            return -i
    else:
        if x == n:
            return -n
    return None


def e_letter(x: int, i: int, n: int):
    """Image of a single letter under e_i, or None."""
    if not 1 <= i <= n:
        raise DomainError(f"i={i} out of range 1..{n}")
    if i < n:
        if x == i + 1:
            return i
        if x == -i:
            return -(i + 1)
    else:
        if x == -n:
            return n
    return None


def signature(w: tuple, i: int, n: int) -> Signature:
    """Reduced signature of a plain word for index i."""
    marks = []  # (kind, position), kind 'f' or 'e'
    for pos, x in enumerate(w):
        if f_letter(x, i, n) is not None:
            marks.append(("f", pos))
        elif e_letter(x, i, n) is not None:
            marks.append(("e", pos))
    # cancel (f-mark immediately left of e-mark) pairs until none remain
    changed = True
    while changed:
        changed = False
        for j in range(len(marks) - 1):
            if marks[j][0] == "f" and marks[j + 1][0] == "e":
                del marks[j : j + 2]
                changed = True
                break
    es = [pos for kind, pos in marks if kind == "e"]
    fs = [pos for kind, pos in marks if kind == "f"]
    return Signature(
        p=len(es),
        q=len(fs),
        e_position=es[-1] if es else None,
        f_position=fs[0] if fs else None,
    )


def _is_decorated(w) -> bool:
    return bool(w) and all(isinstance(c, tuple) for c in w)


def reading(w: tuple) -> tuple:
    """r(w): concatenate the columns of a decorated word, dropping ε."""
    return tuple(x for col in w for x in col)


def _letter_slot(w: tuple, flat_index: int):
    """Locate letter #flat_index of the reading inside a decorated word."""
    k = flat_index
    for ci, col in enumerate(w):
        if k < len(col):
            return ci, k
        k -= len(col)
    raise IndexError(flat_index)


def apply(w: tuple, op: str, i: int, n: int):
    """e_i (op='e') or f_i (op='f') on a plain or decorated word; None if undefined.

    On decorated words the operator acts through the reading and rewrites the
    affected letter inside its column; the column stays admissible.
    """
    if op not in ("e", "f"):
        raise DomainError(f"op must be 'e' or 'f', not {op!r}")
    decorated = _is_decorated(w)
    plain = reading(w) if decorated else tuple(w)
    sig = signature(plain, i, n)
    pos = sig.e_position if op == "e" else sig.f_position
    if pos is None:
        return None
    step = e_letter if op == "e" else f_letter
    y = step(plain[pos], i, n)
    assert y is not None
    if not decorated:
        return plain[:pos] + (y,) + plain[pos + 1 :]
    ci, k = _letter_slot(w, pos)
    col = w[ci][:k] + (y,) + w[ci][k + 1 :]
    assert W.is_admissible(col, n), (w, op, i, col)
    return w[:ci] + (col,) + w[ci + 1 :]


def phi_eps(w: tuple, i: int, n: int) -> tuple:
    """(φ_i, ε_i) of a plain or decorated word."""
    plain = reading(w) if _is_decorated(w) else tuple(w)
    sig = signature(plain, i, n)
    return (sig.q, sig.p)


def highest_weight(w: tuple, n: int) -> tuple:
    """The fixed point w⁰ under raising: apply the smallest defined e_i, repeat."""
    cur = w
    while True:
        for i in range(1, n + 1):
            nxt = apply(cur, "e", i, n)
            if nxt is not None:
                cur = nxt
                break
        else:
            return cur


def is_highest_weight(w: tuple, n: int) -> bool:
    return all(phi_eps(w, i, n)[1] == 0 for i in range(1, n + 1))


def weight(w: tuple, n: int) -> tuple:
    """Content vector: coords[i-1] = #(unbarred i) − #(barred ī)."""
    plain = reading(w) if _is_decorated(w) else tuple(w)
    coords = [0] * n
    for x in plain:
        W.check_letter(x, n)
        coords[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(coords)


# --- independent tensor-rule implementation (agreement oracle) --------------

def _tensor_stats(w: tuple, i: int, n: int) -> tuple:
    """(φ_i, ε_i) by the recursive tensor rule, no signature involved."""
    if len(w) == 0:
        return (0, 0)
    if len(w) == 1:
        return (
            1 if f_letter(w[0], i, n) is not None else 0,
            1 if e_letter(w[0], i, n) is not None else 0,
        )
    u, v = w[:-1], w[-1:]
    pu, eu = _tensor_stats(u, i, n)
    pv, ev = _tensor_stats(v, i, n)
    return (pv + max(0, pu - ev), eu + max(0, ev - pu))


def apply_tensor(w: tuple, op: str, i: int, n: int):
    """e_i/f_i on a plain word via the tensor-product rule (u ⊗ v = w[:-1] ⊗ w[-1:])."""
    if len(w) == 0:
        return None
    if len(w) == 1:
        step = e_letter if op == "e" else f_letter
        y = step(w[0], i, n)
        return None if y is None else (y,)
    u, v = w[:-1], w[-1:]
    pu, eu = _tensor_stats(u, i, n)
    pv, ev = _tensor_stats(v, i, n)
    if op == "f":
        act_left = pu > ev
    else:
        act_left = pu >= ev
    if act_left:
        res = apply_tensor(u, op, i, n)
        return None if res is None else res + v
    res = apply_tensor(v, op, i, n)
    return None if res is None else u + res


def component(w: tuple, n: int, cap: int = 10**6) -> set:
    """Bounded BFS materialization of the connected crystal component B(w)."""
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, n + 1):
                for op in ("e", "f"):
                    u = apply(v, op, i, n)
                    if u is not None and u not in seen:
                        if len(seen) >= cap:
                            raise DomainError(f"component exceeds cap {cap}")
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return seen
