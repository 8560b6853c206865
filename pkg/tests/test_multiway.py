import random
import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coindex import set_core
from coindex.multiway import (
    ExpressionError,
    chaining,
    coincidence_3,
    composite_jaccard,
    evaluate_expression,
    interiority_3,
    interiority_3_layers,
    interiority_layers,
    jaccard_n,
    parse_expression,
)

sets = st.frozensets(st.integers(0, 9), max_size=8)

NESTED = ({1, 2, 3, 4}, {1, 2, 3}, {1, 2})
CHAIN = (set("abcdefg"), set("efghijk"), set("ijklmno"))


def test_jaccard_n_examples():
    assert jaccard_n([{1, 2}] * 3) == 1
    assert jaccard_n([{1}, {2}, {3}]) == 0
    assert jaccard_n([{1, 2, 3}, {2, 3, 4}, {3, 4, 5}]) == pytest.approx(1 / 5)


@given(sets, sets)
def test_jaccard_n_pairs_match_binary(a, b):
    assert jaccard_n([a, b]) == set_core.jaccard(a, b)


@given(st.lists(sets, min_size=2, max_size=5), sets)
def test_jaccard_n_non_increasing(family, extra):
    if not frozenset().union(*family):
        return
    assert jaccard_n(family + [extra]) <= jaccard_n(family)


def test_layers():
    assert interiority_3_layers(*NESTED) == pytest.approx((1, 2 / 3))
    assert interiority_3_layers({1}, {2}, {3}) == (0, 0)
    a, b, c = {1, 2, 3, 4, 5}, {1, 2, 3}, {1, 2}
    # C ⊂ B ⊂ A: (1, |C|/|B|)
    assert interiority_3_layers(a, b, c) == pytest.approx((1, 2 / 3))


def test_layers_tie_break_by_position():
    # two members of size 2; the first listed is treated as the smallest
    assert interiority_layers([{1, 2}, {1, 3}, {1, 2, 3, 4}]) == (0.5, 0.5)


def test_combined_indices():
    assert interiority_3(*NESTED) == pytest.approx(2 / 3)
    assert coincidence_3(*NESTED) == pytest.approx(1 / 3)
    assert interiority_3({1}, {1}, {1}) == coincidence_3({1}, {1}, {1}) == 1
    assert interiority_3({1}, {2}, {3}) == coincidence_3({1}, {2}, {3}) == 0


@given(sets, sets, sets)
def test_three_way_bounds(a, b, c):
    if not (a and b and c):
        return
    j, i, k = jaccard_n([a, b, c]), interiority_3(a, b, c), coincidence_3(a, b, c)
    assert 0 <= j <= 1 and 0 <= i <= 1 and 0 <= k <= 1
    assert k == pytest.approx(i * j, abs=1e-15)


def test_chaining_worked_example():
    assert chaining(*CHAIN) == pytest.approx(6 / 7, abs=1e-12)


def test_chaining_degenerate():
    a, b, _ = CHAIN
    assert chaining(a, b, a) == 0
    assert chaining({1, 2}, {5, 6}, {3}) == 0


@given(sets, sets, sets)
def test_chaining_swap_symmetry(a, b, c):
    assert chaining(a, b, c) == chaining(c, b, a)
    assert 0 <= chaining(a, b, c) <= 1


def test_chaining_threshold():
    a, b, c = CHAIN
    # J(A,B) = 3/11, J(B,C) = 3/11
    assert chaining(a, b, c, tau=0.2) == pytest.approx(6 / 7)
    assert chaining(a, b, c, tau=0.3) == 0


ENV = {
    "C": {1, 2, 3, 4},
    "D": {2, 3, 5},
    "E": {7, 8},
    "F": {3, 8},
    "G": {1, 9},
}


def test_composite_example():
    # ((C ∩ D) ∪ E) - F = {2, 3, 7, 8} - {3, 8} = {2, 7}
    # C ∪ G = {1, 2, 3, 4, 9}
    a = (set(ENV["C"]) & ENV["D"] | ENV["E"]) - ENV["F"]
    b = set(ENV["C"]) | ENV["G"]
    assert a == {2, 7}
    assert composite_jaccard("((C & D) | E) - F", "C | G", ENV) == pytest.approx(set_core.jaccard(a, b))
    assert composite_jaccard("C | G", "C | G", ENV) == 1
    assert composite_jaccard("E", "C - D", ENV) == 0


def test_precedence():
    # '-' binds tighter than '|': E | (C - D)
    assert evaluate_expression("E | C - D", ENV) == {7, 8, 1, 4}
    assert evaluate_expression("C - D - F", ENV) == {1, 4}


@pytest.mark.parametrize(
    "text, pos",
    [("C & ", 4), ("(C | D", 6), ("C $ D", 2), ("C D", 2), (")", 0)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ExpressionError) as exc:
        parse_expression(text)
    assert exc.value.position == pos


def test_unbound_name():
    with pytest.raises(ExpressionError, match="unbound"):
        evaluate_expression("C | Z", ENV)


def _random_tree(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice("VWXYZ")
    return (rng.choice("&|-"), _random_tree(rng, depth - 1), _random_tree(rng, depth - 1))


def _render(tree):
    if isinstance(tree, str):
        return tree
    op, l, r = tree
    return f"({_render(l)} {op} {_render(r)})"


def _reference(tree, env):
    if isinstance(tree, str):
        return set(env[tree])
    op, l, r = tree
    lhs, rhs = _reference(l, env), _reference(r, env)
    return {"&": lhs & rhs, "|": lhs | rhs, "-": lhs - rhs}[op]


def test_random_expressions_match_reference():
    rng = random.Random(1234)
    for _ in range(200):
        env = {n: set(rng.sample(string.ascii_lowercase[:12], rng.randint(0, 8))) for n in "VWXYZ"}
        tree = _random_tree(rng, 4)
        assert evaluate_expression(_render(tree), env) == _reference(tree, env)
