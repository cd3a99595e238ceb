"""Letters, words, columns, admissibility, block columns, and the ⪯ order.

The alphabet at rank n is 1 < 2 < ... < n < n̄ < ... < 2̄ < 1̄.  A letter is a
plain signed int: the unbarred letter i is ``i`` and the barred letter ī is
``-i``.  Negation reverses the order of the barred half exactly as barring
does, so the serialized form (signed decimal) is bit-exact and trivial to
parse; the total order itself is given by :func:`letter_key`, not by the raw
int values (every unbarred letter is below every barred one).

A column is a strictly increasing tuple of letters; the empty tuple is the
formal empty column ε of the decorated setting.  A word over the decorated
alphabet is a tuple of columns.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

Letter = int
Column = tuple  # tuple of Letter
Word = tuple    # tuple of Column


class DomainError(ValueError):
    """Raised when an argument is outside the operation's stated domain."""


def letter_key(x: Letter):
    """Sort key realizing 1 < ... < n < n̄ < ... < 1̄ on signed ints."""
    return (x < 0, x)


def check_letter(x: Letter, n: int) -> None:
    if not isinstance(x, int) or x == 0 or abs(x) > n:
        raise DomainError(f"letter {x!r} is not in C_{n}")


def letters(n: int) -> list:
    """All letters of C_n in increasing order."""
    return list(range(1, n + 1)) + [-i for i in range(n, 0, -1)]


def is_column(seq) -> bool:
    """A column is a strictly increasing letter sequence (ε included)."""
    ks = [letter_key(x) for x in seq]
    return all(a < b for a, b in zip(ks, ks[1:]))


def check_column(col: Column, n: int) -> None:
    for x in col:
        check_letter(x, n)
    if not is_column(col):
        raise DomainError(f"{col!r} is not a column (not strictly increasing)")


def n_z(col: Column, z: int, n: int) -> int:
    """#Set_z(col) = #{x in col : x <= z or x >= z̄}."""
    if not 1 <= z <= n:
        raise DomainError(f"z={z} out of range 1..{n}")
    return sum(1 for x in col if (x > 0 and x <= z) or (x < 0 and -x <= z))


def is_admissible(col: Column, n: int, strict: bool = False) -> bool:
    """N_z(col) <= z for every z; with ``strict`` the empty column is excluded.

    ε counts as admissible in the decorated setting; ``strict=True`` gives the
    undecorated generator set.
    """
    check_column(col, n)
    if strict and not col:
        return False
    return all(n_z(col, z, n) <= z for z in range(1, n + 1))


def is_almost_admissible(col: Column, n: int) -> bool:
    """Nonadmissible column whose every strict factor is admissible."""
    check_column(col, n)
    if not col or is_admissible(col, n):
        return False
    # every strict factor admissible <=> dropping either end letter is enough,
    # since admissibility is monotone under taking subwords of a column
    return (is_admissible(col[1:], n) and is_admissible(col[:-1], n))


def block(a: int, b: int, c: int, n: int) -> Column:
    """The block column 𝔠(a;b,c) = (a+1)...(a+b) (a+b)‾ ... (a+b−c+1)‾.

    𝔠(a,b) is the c=0 case, 𝔠(ā,c) the b=0 case, and 𝔠(0) = block(0,0,0) = ε.
    """
    if b < 0 or c < 0 or a < 0 or c > a + b or a + b > n:
        raise DomainError(f"block spec (a={a}, b={b}, c={c}) violates c <= a+b <= n={n}")
    top = a + b
    return tuple(range(a + 1, top + 1)) + tuple(-(top - i) for i in range(c))


def block_decompositions(col: Column):
    """Split a column into maximal runs of consecutive unbarred / barred letters.

    Returns the list of blocks (each a column of consecutive letters) or None
    when the column is not a product of blocks with all unbarred blocks first.
    """
    if any(x < 0 for x in col) and any(
        col[i] > 0 and col[i - 1] < 0 for i in range(1, len(col))
    ):
        return None
    blocks = []
    run = []
    for x in col:
        if run and not (
            (x > 0 and run[-1] > 0 and x == run[-1] + 1)
            or (x < 0 and run[-1] < 0 and x == run[-1] + 1)
        ):
            blocks.append(tuple(run))
            run = []
        run.append(x)
    if run:
        blocks.append(tuple(run))
    return blocks


def block_admissible(blocks, n: int) -> bool:
    """Admissibility of a concatenation of block columns via the block criterion.

    Only tests N_z at the largest letter x_i of each unbarred block and at the
    y_j with ȳ_j the smallest letter of each barred block, instead of all z.
    """
    w = tuple(x for b in blocks for x in b)
    check_column(w, n)
    seen_barred = False
    for b in blocks:
        if not b:
            continue
        if any(x < 0 for x in b) and any(x > 0 for x in b):
            raise DomainError(f"{b!r} mixes barred and unbarred letters")
        if all(x > 0 for x in b):
            if seen_barred:
                raise DomainError("unbarred block after a barred block")
            if list(b) != list(range(b[0], b[-1] + 1)):
                raise DomainError(f"{b!r} is not a block column")
        else:
            seen_barred = True
            if list(b) != list(range(b[0], b[-1] + 1)):
                raise DomainError(f"{b!r} is not a block column")
    test_z = set()
    for b in blocks:
        if not b:
            continue
        if b[0] > 0:
            test_z.add(b[-1])       # largest letter of the unbarred block
        else:
            test_z.add(-b[-1])      # ȳ_j = last (smallest barred) letter
    return all(n_z(w, z, n) <= z for z in test_z)


def _has_configuration(xs: Column, ys: Column, n: int) -> bool:
    """(a,b)-configuration test across a column pair.

    Direct quadruple scan over 1-based positions p <= q < r <= s <= len(ys),
    in both quantified patterns, with (s-r)+(q-p) >= b-a.
    """
    l = len(ys)
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            # pattern 1: x_p = a, y_q = b, y_r = b̄, y_s = ā
            ps = [i for i in range(1, min(len(xs), l) + 1) if xs[i - 1] == a]
            qs = [i for i in range(1, l + 1) if ys[i - 1] == b]
            rs = [i for i in range(1, l + 1) if ys[i - 1] == -b]
            ss = [i for i in range(1, l + 1) if ys[i - 1] == -a]
            for p in ps:
                for q in qs:
                    for r in rs:
                        for s in ss:
                            if p <= q < r <= s and (s - r) + (q - p) >= b - a:
                                return True
            # pattern 2: x_p = a, x_q = b, x_r = b̄, y_s = ā
            qs2 = [i for i in range(1, min(len(xs), l) + 1) if xs[i - 1] == b]
            rs2 = [i for i in range(1, min(len(xs), l) + 1) if xs[i - 1] == -b]
            for p in ps:
                for q in qs2:
                    for r in rs2:
                        for s in ss:
                            if p <= q < r <= s and (s - r) + (q - p) >= b - a:
                                return True
    return False


def precedes(c: Column, d: Column, n: int) -> bool:
    """The order c ⪯ d on admissible columns (ε maximal: c ⪯ ε for all c).

    c ⪯ d iff |c| >= |d|, x_i <= y_i entrywise on the first |d| letters, and
    the pair carries no (a,b)-configuration.  A tableau drawn with columns
    C_1 ... C_k left to right satisfies C_i ⪯ C_{i+1}; in reading order
    (rightmost column first) a two-column word c₁c₂ is a normal form iff
    precedes(c₂, c₁).
    """
    if not is_admissible(c, n) or not is_admissible(d, n):
        raise DomainError("precedes is only defined on admissible columns")
    if not d:
        return True
    if len(c) < len(d):
        return False
    if any(letter_key(c[i]) > letter_key(d[i]) for i in range(len(d))):
        return False
    return not _has_configuration(c, d, n)


@lru_cache(maxsize=None)
def admissible_columns(n: int, strict: bool = False) -> tuple:
    """All admissible columns at rank n, sorted by serialization.

    An admissible column has at most n letters (N_n = length <= n), so the
    enumeration is a filter over strictly increasing letter subsets.
    """
    alpha = letters(n)
    cols = []
    if not strict:
        cols.append(())
    for size in range(1, n + 1):
        for combo in combinations(range(len(alpha)), size):
            col = tuple(alpha[i] for i in combo)
            if is_admissible(col, n):
                cols.append(col)
    return tuple(sorted(cols, key=lambda c: format_column(c)))


# --- serialization ----------------------------------------------------------

def format_column(col: Column) -> str:
    return "[" + " ".join(str(x) for x in col) + "]"


def format_word(w: Word) -> str:
    return " ".join(format_column(c) for c in w)


def format_plain(w) -> str:
    return " ".join(str(x) for x in w)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


def _parse_int(text: str, pos: int):
    start = pos
    if pos < len(text) and text[pos] == "-":
        pos += 1
    if pos >= len(text) or not text[pos].isdigit():
        raise ParseError("expected a letter (signed integer)", start)
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    return int(text[start:pos]), pos


def parse_plain(text: str, n: int) -> tuple:
    """Parse a plain word: bare letters separated by whitespace."""
    w = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        x, pos = _parse_int(text, pos)
        if x == 0 or abs(x) > n:
            raise ParseError(f"letter {x} out of range for rank {n}", pos - len(str(x)))
        w.append(x)
    return tuple(w)


def parse_word(text: str, n: int) -> Word:
    """Parse a decorated word: one or more bracketed columns ``[1 2 -2]``."""
    cols = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "[":
            raise ParseError(f"expected '[' but found {ch!r}", pos)
        pos += 1
        col = []
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                raise ParseError("unterminated column (missing ']')", len(text))
            if text[pos] == "]":
                pos += 1
                break
            start = pos
            x, pos = _parse_int(text, pos)
            if x == 0 or abs(x) > n:
                raise ParseError(f"letter {x} out of range for rank {n}", start)
            col.append(x)
        if not is_column(col):
            raise ParseError(f"{format_column(tuple(col))} is not a column", pos - 1)
        cols.append(tuple(col))
    if not cols:
        raise ParseError("empty word (expected at least one column)", 0)
    return tuple(cols)
