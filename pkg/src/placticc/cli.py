"""Command-line front end.

Words are given in the bracketed column format (`[1 2 -2]`, ε as `[]`, columns
juxtaposed), plain words as bare letters `1 2 -2`.  Rank is never inferred:
--n is mandatory everywhere.  Exit codes: 0 success, 1 verification
violations, 2 usage/parse errors.
"""

from __future__ import annotations

import json
import sys

import click

from . import crystal as C
from . import ctree as CT
from . import insertion as I
from . import rewriting as R
from . import words as W
from .words import DomainError, ParseError


def _fail_usage(exc) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


def _parse_word(text: str, n: int):
    try:
        w = W.parse_word(text, n)
        for col in w:
            if not W.is_admissible(col, n):
                raise DomainError(f"column {W.format_column(col)} is not admissible")
        return w
    except (ParseError, DomainError) as exc:
        _fail_usage(exc)


def _parse_any(text: str, n: int):
    """Bracketed input is a decorated word, bare letters a plain word."""
    if "[" in text:
        return _parse_word(text, n)
    try:
        return W.parse_plain(text, n)
    except ParseError as exc:
        _fail_usage(exc)


def _format_any(w) -> str:
    if w and all(isinstance(c, tuple) for c in w):
        return W.format_word(w)
    return W.format_plain(w)


n_option = click.option("--n", "n", type=int, required=True, help="rank of C_n")


@click.group()
def main():
    """Type-C plactic monoid toolbox: insertion, rewriting, crystals, trees."""


@main.command()
@n_option
@click.argument("col_a")
@click.argument("col_b")
def insert(n, col_a, col_b):
    """Column insertion (A ← B), printed as an ε-padded column pair."""
    a = _parse_word(col_a, n)
    b = _parse_word(col_b, n)
    if len(a) != 1 or len(b) != 1:
        _fail_usage("insert expects exactly one column per argument")
    d = I.insert_pair(a[0], b[0], n)
    click.echo(W.format_word(d))


@main.command()
@n_option
@click.argument("word")
def normalize(n, word):
    """Plactic normal form of a decorated word (ε-padded)."""
    w = _parse_word(word, n)
    click.echo(W.format_word(I.normal_form_word(w, n)))


@main.command()
@n_option
@click.argument("word_a")
@click.argument("word_b")
def product(n, word_a, word_b):
    """Normal form of the concatenation of two decorated words."""
    a = _parse_word(word_a, n)
    b = _parse_word(word_b, n)
    click.echo(W.format_word(I.normal_form_word(a + b, n)))


@main.command()
@n_option
@click.option("--op", type=click.Choice(["e", "f"]), required=True)
@click.option("--i", "i", type=int, required=True)
@click.argument("word")
def crystal(n, op, i, word):
    """Apply the Kashiwara operator e_i or f_i; prints `undefined` if absent."""
    w = _parse_any(word, n)
    if not 1 <= i <= n:
        _fail_usage(f"i={i} out of range 1..{n}")
    out = C.apply(w, op, i, n)
    click.echo("undefined" if out is None else _format_any(out))


@main.command()
@n_option
@click.argument("word")
def hw(n, word):
    """Highest-weight word w⁰ (raise by every defined e_i, smallest i first)."""
    w = _parse_any(word, n)
    click.echo(_format_any(C.highest_weight(w, n)))


@main.group()
def tree():
    """C-tree codec: encode a highest-weight word, decode or enumerate trees."""


@tree.command()
@n_option
@click.argument("word")
def encode(n, word):
    """Encode a highest-weight decorated word as a labeled tree (JSON)."""
    w = _parse_word(word, n)
    try:
        T = CT.encode(w, n)
    except DomainError as exc:
        _fail_usage(exc)
    click.echo(CT.to_json(T))


@tree.command()
@click.argument("source", type=click.File("r"), default="-")
def decode(source):
    """Read a tree JSON (file or stdin) and print its reading ω(T)."""
    try:
        T = CT.from_json(source.read())
    except (ValueError, DomainError) as exc:
        _fail_usage(exc)
    click.echo(W.format_word(CT.reading(T)))


@tree.command()
@click.option("--rank", type=int, required=True)
@n_option
def enumerate(rank, n):
    """Print every valid tree of the given rank, one JSON per line."""
    if rank > 4 or n > 4:
        _fail_usage("enumeration is capped at rank <= 4, n <= 4")
    for T in CT.enumerate_valid_trees(rank, n):
        click.echo(CT.to_json(T))


def _emit_report(report: dict, out_path) -> None:
    text = json.dumps(report, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    sys.exit(1 if report["violations"] else 0)


@main.command()
@n_option
@click.option("--variant", type=click.Choice(list(R.VARIANTS)), default="acol")
@click.option("--out", "out_path", type=click.Path(), default=None)
@click.option("--jobs", type=int, default=1)
def branchings(n, variant, out_path, jobs):
    """Sweep all critical branchings and write the coherence report."""
    try:
        report = R.verify_coherence(n, variant, jobs=jobs)
    except DomainError as exc:
        _fail_usage(exc)
    _emit_report(report, out_path)


@main.command()
@click.option("--suite", type=click.Choice(["shapes"]), default="shapes")
@n_option
@click.option("--variant", type=click.Choice(list(R.VARIANTS)), default="acol")
@click.option("--out", "out_path", type=click.Path(), default=None)
@click.option("--jobs", type=int, default=1)
def verify(suite, n, variant, out_path, jobs):
    """Run a verification suite (currently: confluence shapes) and report."""
    try:
        report = R.verify_coherence(n, variant, jobs=jobs)
    except DomainError as exc:
        _fail_usage(exc)
    _emit_report(report, out_path)


if __name__ == "__main__":
    main()
