"""Indices over three or more sets, the chaining index and set expressions."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from functools import reduce

from .set_core import EMPTY_VALUE, SimilarityError, jaccard


def _family(sets: Iterable[Iterable]) -> list[frozenset]:
    fam = [frozenset(s) for s in sets]
    if len(fam) < 2:
        raise SimilarityError("a set family needs at least two members")
    return fam


def jaccard_n(sets: Sequence[Iterable]) -> float:
    """|intersection of all members| / |union of all members|."""
    fam = _family(sets)
    union = frozenset().union(*fam)
    if not union:
        return EMPTY_VALUE
    return len(reduce(frozenset.intersection, fam)) / len(union)


def interiority_layers(sets: Sequence[Iterable]) -> tuple[float, ...]:
    """Layered interiorities ``|common| / |X_k|``.

    ``X_k`` runs over the members sorted by (cardinality, position), skipping
    the largest one. For three sets this gives the pair (smallest-set
    interiority, second-smallest-set interiority).
    """
    fam = _family(sets)
    common = len(reduce(frozenset.intersection, fam))
    order = sorted(range(len(fam)), key=lambda i: (len(fam[i]), i))
    out = []
    for i in order[:-1]:
        size = len(fam[i])
        if size == 0:
            out.append(EMPTY_VALUE if not any(fam) else 0.0)
        else:
            out.append(common / size)
    return tuple(out)


def interiority_3_layers(a, b, c) -> tuple[float, float]:
    return interiority_layers([a, b, c])


def interiority_n(sets: Sequence[Iterable]) -> float:
    p = 1.0
    for v in interiority_layers(sets):
        p *= v
    return p


def interiority_3(a, b, c) -> float:
    return interiority_n([a, b, c])


def coincidence_n(sets: Sequence[Iterable]) -> float:
    # product form, no square root
    return interiority_n(sets) * jaccard_n(sets)


def coincidence_3(a, b, c) -> float:
    return coincidence_n([a, b, c])


def chaining(a, b, c, tau: float = 0.0) -> float:
    """How well B bridges A and C.

    ``J(B, (A∩B) ∪ (B∩C)) * (1 - J(A, C))``. When ``tau > 0`` the index is
    0 unless both ``J(A, B)`` and ``J(B, C)`` reach ``tau``.
    """
    a, b, c = frozenset(a), frozenset(b), frozenset(c)
    if tau > 0 and min(jaccard(a, b), jaccard(b, c)) < tau:
        return 0.0
    bridge = (a & b) | (b & c)
    if not b:
        return 0.0
    return jaccard(b, bridge) * (1.0 - jaccard(a, c))


# -- set expressions -------------------------------------------------------

class ExpressionError(SimilarityError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m.group(1):
            tokens.append(("name", m.group(1), m.start(1)))
        elif m.group(2):
            ch = m.group(2)
            if ch not in "&|-()":
                raise ExpressionError(f"unexpected character {ch!r}", m.start(2))
            tokens.append(("op", ch, m.start(2)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # union binds loosest; '&' and '-' share a level and associate left
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        node = self.union()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected {value!r}", pos)
        return node

    def union(self):
        node = self.term()
        while self.peek()[1] == "|" and self.peek()[0] == "op":
            self.take()
            node = ("|", node, self.term())
        return node

    def term(self):
        node = self.atom()
        while self.peek()[0] == "op" and self.peek()[1] in "&-":
            op = self.take()[1]
            node = (op, node, self.atom())
        return node

    def atom(self):
        kind, value, pos = self.take()
        if kind == "name":
            return ("name", value, pos)
        if (kind, value) == ("op", "("):
            node = self.union()
            kind, value, pos = self.take()
            if (kind, value) != ("op", ")"):
                raise ExpressionError("expected ')'", pos)
            return node
        raise ExpressionError("expected a set name or '('" if kind != "end" else "unexpected end of expression", pos)


def parse_expression(text: str):
    """Parse a set expression into a nested tuple tree.

    Names match ``[A-Za-z_][A-Za-z0-9_]*``; operators are ``&`` (intersection),
    ``|`` (union) and ``-`` (difference), with parentheses for grouping.
    """
    return _Parser(text).parse()


def _evaluate(node, env: Mapping[str, Iterable]) -> frozenset:
    if node[0] == "name":
        _, name, pos = node
        if name not in env:
            raise ExpressionError(f"unbound set name {name!r}", pos)
        return frozenset(env[name])
    op, left, right = node
    lhs, rhs = _evaluate(left, env), _evaluate(right, env)
    if op == "|":
        return lhs | rhs
    if op == "&":
        return lhs & rhs
    return lhs - rhs


def evaluate_expression(text: str, env: Mapping[str, Iterable]) -> frozenset:
    return _evaluate(parse_expression(text), env)


def composite_jaccard(expr_a: str, expr_b: str, env: Mapping[str, Iterable]) -> float:
    """Jaccard index of two sets built from named sets by set operations."""
    return jaccard(evaluate_expression(expr_a, env), evaluate_expression(expr_b, env))
