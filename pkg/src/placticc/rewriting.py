"""The 2-polygraphs on admissible columns: steps, strategies, branchings.

Two presentations share the rule shape c₁c₂ ⇒ (c₁ ← c₂):

- ``acol_bullet``: generators are the nonempty admissible columns; a rule's
  right-hand side keeps only nonempty columns, so steps may shorten the word.
- ``acol``: ε is a generator; right-hand sides are ε-padded to two columns, so
  every step preserves the column count.

A pair (c₁, c₂) is reducible iff ¬(c₂ ⪯ c₁) — i.e. iff it is not already the
reading of a two-column tableau (ε's belong on the left: cε ⇒ εc).
"""

from __future__ import annotations

import os
from collections import namedtuple
from functools import lru_cache

from . import crystal as C
from . import insertion as I
from . import words as W
from .words import DomainError

VARIANTS = ("acol", "acol_bullet")
ENUM_CAP = 4  # largest rank accepted by the exhaustive enumerations

RewriteStep = namedtuple("RewriteStep", "position before after")
Strategy = namedtuple("Strategy", "kind start steps result")
ConfShape = namedtuple("ConfShape", "a_len b_len")


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise DomainError(f"variant must be one of {VARIANTS}, not {variant!r}")


def generators(n: int, variant: str = "acol") -> tuple:
    _check_variant(variant)
    return W.admissible_columns(n, strict=(variant == "acol_bullet"))


@lru_cache(maxsize=None)
def reducible(c1: tuple, c2: tuple, n: int) -> bool:
    """Whether the rule c₁c₂ ⇒ (c₁ ← c₂) applies, i.e. ¬precedes(c₂, c₁)."""
    return not W.precedes(c2, c1, n)


def project(w: tuple) -> tuple:
    """p: drop all ε letters of a decorated word."""
    return tuple(col for col in w if col)


def reducible_positions(w: tuple, n: int) -> list:
    return [i for i in range(len(w) - 1) if reducible(w[i], w[i + 1], n)]


def is_normal(w: tuple, n: int) -> bool:
    return not reducible_positions(w, n)


def rewrite_at(w: tuple, pos: int, n: int, variant: str = "acol") -> tuple:
    """Apply the rule at position pos (pair w[pos], w[pos+1])."""
    _check_variant(variant)
    if not reducible(w[pos], w[pos + 1], n):
        raise DomainError(f"pair at position {pos} is not reducible")
    d = I.insert_pair(w[pos], w[pos + 1], n)
    if variant == "acol_bullet":
        d = tuple(col for col in d if col)
    return w[: pos] + d + w[pos + 2 :]


def step_limit(w: tuple, override=None) -> int:
    """Default rewriting step cap |w|²(3|w|+3); PLACTICC_STEP_LIMIT overrides."""
    if override is not None:
        return override
    env = os.environ.get("PLACTICC_STEP_LIMIT")
    if env is not None:
        return int(env)
    t = len(w)
    return t * t * (3 * t + 3)


def run_strategy(w: tuple, kind: str, n: int, variant: str = "acol",
                 limit=None) -> Strategy:
    """Reduce w to normal form, always rewriting at the least (``leftmost``)
    or greatest (``rightmost``) reducible position.

    On three-column words this realizes the alternating strategies a(w) and
    b(w): right after a rewrite the rewritten pair is standard, so the chosen
    position necessarily alternates whenever the designated slot is reducible.
    """
    if kind not in ("leftmost", "rightmost"):
        raise DomainError(f"kind must be 'leftmost' or 'rightmost', not {kind!r}")
    cap = step_limit(w, limit)
    cur = w
    steps = []
    while True:
        positions = reducible_positions(cur, n)
        if not positions:
            return Strategy(kind, w, tuple(steps), cur)
        if len(steps) >= cap:
            raise RuntimeError(
                f"step limit {cap} exceeded reducing {W.format_word(w)}"
            )
        pos = positions[0] if kind == "leftmost" else positions[-1]
        before = (cur[pos], cur[pos + 1])
        after = I.insert_pair(cur[pos], cur[pos + 1], n)
        if variant == "acol_bullet":
            after = tuple(col for col in after if col)
        steps.append(RewriteStep(pos, before, after))
        cur = cur[: pos] + after + cur[pos + 2 :]


def trace_words(s: Strategy, n: int, variant: str = "acol") -> list:
    """The full word sequence of a strategy run, start included."""
    out = [s.start]
    cur = s.start
    for st in s.steps:
        cur = rewrite_at(cur, st.position, n, variant)
        out.append(cur)
    assert cur == s.result
    return out


def is_branching_source(w: tuple, n: int) -> bool:
    return (
        len(w) == 3
        and reducible(w[0], w[1], n)
        and reducible(w[1], w[2], n)
    )


def conf(w: tuple, n: int, variant: str = "acol") -> ConfShape:
    """conf(w) = (|a(w)|, |b(w)|) for a critical-branching source w = tuv."""
    if not is_branching_source(w, n):
        raise DomainError(f"{W.format_word(w)} is not a critical-branching source")
    return conf_shape(w, n, variant)


def conf_shape(w: tuple, n: int, variant: str = "acol") -> ConfShape:
    a = run_strategy(w, "leftmost", n, variant)
    b = run_strategy(w, "rightmost", n, variant)
    assert a.result == b.result, (w, a.result, b.result)
    return ConfShape(len(a.steps), len(b.steps))


def epsilon_count(s: Strategy) -> int:
    """Number of trace steps of the ε-shuffling form cε ⇒ εc."""
    return sum(1 for st in s.steps if st.before[1] == () and st.before[0] != ())


def check_epsilon_bound(s: Strategy) -> bool:
    """#_ε(s) ≤ t²(3t+1)/4 with t the column count of the start word.

    Compared by cross-multiplication so the bound stays exact when t²(3t+1)
    is not divisible by 4.
    """
    t = len(s.start)
    return 4 * epsilon_count(s) <= t * t * (3 * t + 1)


def enumerate_branchings(n: int, variant: str = "acol"):
    """All critical-branching sources tuv over the variant's generators, in
    lexicographic order of the serialized words."""
    _check_variant(variant)
    if n > ENUM_CAP:
        raise DomainError(f"refusing exhaustive enumeration beyond n={ENUM_CAP}")
    gens = generators(n, variant)
    for t in gens:
        for u in gens:
            if not reducible(t, u, n):
                continue
            for v in gens:
                if reducible(u, v, n):
                    yield (t, u, v)


def _branching_record(args):
    w, n, variant = args
    shape = conf_shape(w, n, variant)
    w0 = C.highest_weight(w, n)
    shape0 = conf_shape(w0, n, variant)
    a = run_strategy(w, "leftmost", n, variant)
    b = run_strategy(w, "rightmost", n, variant)
    ok_nf = a.result == b.result
    ok_shape = shape.a_len <= 4 and shape.b_len <= 3
    ok_conf = shape == shape0
    violations = []
    if not ok_nf:
        violations.append("normal-form mismatch")
    if not ok_shape:
        violations.append(f"shape {tuple(shape)} exceeds (4,3)")
    if not ok_conf:
        violations.append(f"conf {tuple(shape)} != conf(w0) {tuple(shape0)}")
    return (W.format_word(w), tuple(shape), violations)


def verify_coherence(n: int, variant: str = "acol", jobs: int = 1,
                     sources=None) -> dict:
    """Sweep branching sources; report shapes, violations, and the histogram.

    The report is a pure-integer JSON-ready dict with deterministic content,
    independent of the worker count.
    """
    _check_variant(variant)
    if sources is None:
        sources = list(enumerate_branchings(n, variant))
    tasks = [(w, n, variant) for w in sources]
    if jobs > 1 and len(tasks) > 1:
        from multiprocessing import Pool

        chunk = max(1, len(tasks) // (jobs * 8))
        with Pool(jobs) as pool:
            records = pool.map(_branching_record, tasks, chunksize=chunk)
    else:
        records = [_branching_record(t) for t in tasks]
    max_shape = [0, 0]
    histogram = {}
    violations = []
    for word_text, shape, viol in records:
        max_shape[0] = max(max_shape[0], shape[0])
        max_shape[1] = max(max_shape[1], shape[1])
        key = f"({shape[0]},{shape[1]})"
        histogram[key] = histogram.get(key, 0) + 1
        for v in viol:
            violations.append({"word": word_text, "problem": v})
    return {
        "n": n,
        "variant": variant,
        "total": len(records),
        "max_shape": max_shape,
        "violations": violations,
        "shape_histogram": dict(sorted(histogram.items())),
    }
