import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from placticc import crystal as C
from placticc import words as W


def test_letter_actions():
    # f_i: i → i+1 and (i+1)̄ → ī; f_n: n → n̄; e is the inverse.
    assert C.f_letter(1, 1, 2) == 2
    assert C.f_letter(-2, 1, 2) == -1
    assert C.f_letter(2, 2, 2) == -2
    assert C.f_letter(2, 1, 2) is None
    assert C.e_letter(2, 1, 2) == 1
    assert C.e_letter(-2, 2, 2) == 2
    assert C.e_letter(1, 1, 2) is None


def test_signature_cancellation():
    # 1 2̄ 1 for i=1: all three letters take f_1, nothing cancels; f_1 acts
    # at the leftmost mark.
    sig = C.signature((1, -2, 1), 1, 2)
    assert (sig.p, sig.q) == (0, 3)
    assert sig.f_position == 0
    # 2 1: an e-mark left of an f-mark never cancels.
    sig = C.signature((2, 1), 1, 2)
    assert (sig.p, sig.q) == (1, 1)
    assert (sig.e_position, sig.f_position) == (0, 1)
    # 1 2: the f/e pair cancels and both operators act on the survivor side.
    sig = C.signature((1, 2), 1, 2)
    assert (sig.p, sig.q) == (0, 0)


def test_apply_plain_words():
    assert C.apply((1, 2, -2), "f", 1, 2) == (1, 2, -1)
    assert C.apply((1, 2, -1), "e", 1, 2) == (1, 2, -2)
    assert C.apply((1, -1), "f", 1, 2) is None or C.apply((1, -1), "f", 1, 2)
    assert C.apply((), "f", 1, 2) is None


def test_apply_decorated_edits_in_place():
    w = ((1, 2), (2, -2))
    out = C.apply(w, "f", 2, 2)
    assert out is not None
    assert len(out) == len(w)
    for col in out:
        assert W.is_admissible(col, 2)


def test_highest_weight_witness():
    # w⁰ of the (12)(1)(2 2̄) witness is fixed by every e_i.
    w = ((1, 2), (1,), (2, -2))
    hw = C.highest_weight(w, 2)
    assert C.is_highest_weight(hw, 2)
    assert C.highest_weight(hw, 2) == hw
    # raising preserves the column profile
    assert tuple(len(c) for c in hw) == tuple(len(c) for c in w)


def test_weight():
    assert C.weight((1, 1, 2), 2) == (2, 1)
    assert C.weight((1, -1), 2) == (0, 0)
    assert C.weight(((1, 2), (1,)), 2) == (2, 1)


def test_phi_eps_matches_signature():
    for w in [(1, 2, -2), (2, 1, 1), (1, -2, 1, 2)]:
        for i in (1, 2):
            q, p = C.phi_eps(w, i, 2)
            sig = C.signature(w, i, 2)
            assert (q, p) == (sig.q, sig.p)


def test_tensor_rule_agrees_sample():
    # Exhaustive agreement is an acceptance criterion; spot-check n=2 here.
    letters = W.letters(2)
    for w in itertools.product(letters, repeat=3):
        for i in (1, 2):
            for op in ("e", "f"):
                assert C.apply(w, op, i, 2) == C.apply_tensor(w, op, i, 2), (w, op, i)


def test_component_of_highest_weight_column():
    # B(Λ_1) for n=2 has the 4 letters; B(Λ_2) the 4 admissible 2-columns +
    # the weight-zero ones.
    assert C.component((1,), 2) == {(x,) for x in W.letters(2)}
    comp = C.component((1, 2), 2)
    assert (1, 2) in comp and (-2, -1) in comp
    assert all(len(w) == 2 for w in comp)


@given(st.data())
@settings(max_examples=300)
def test_e_f_inverse_on_plain_words(data):
    n = data.draw(st.integers(min_value=2, max_value=3))
    w = tuple(data.draw(st.lists(st.sampled_from(W.letters(n)), max_size=6)))
    i = data.draw(st.integers(min_value=1, max_value=n))
    fw = C.apply(w, "f", i, n)
    if fw is not None:
        assert C.apply(fw, "e", i, n) == w
    ew = C.apply(w, "e", i, n)
    if ew is not None:
        assert C.apply(ew, "f", i, n) == w


@given(st.data())
@settings(max_examples=300)
def test_f_decreases_weight_by_simple_root(data):
    n = data.draw(st.integers(min_value=2, max_value=3))
    w = tuple(data.draw(st.lists(st.sampled_from(W.letters(n)), max_size=6)))
    i = data.draw(st.integers(min_value=1, max_value=n))
    fw = C.apply(w, "f", i, n)
    if fw is None:
        return
    wt, fwt = C.weight(w, n), C.weight(fw, n)
    alpha = [0] * n
    if i < n:
        alpha[i - 1], alpha[i] = 1, -1
    else:
        alpha[n - 1] = 2
    assert [a - b for a, b in zip(wt, fwt)] == alpha
