"""Points of the unital associahedra as labeled binary trees.

A point of ``K^u_n`` is represented by a binary tree with n leaves and some
black corks together with a label in [0, 1] on each inner edge (a point of
the cube ``H_T``).  Points are identified by two families of moves that fire
on zero labels:

* a zero on an edge between internal vertices collapses that edge;
* a zero on a cork edge deletes the cork, and if this leaves a vertex with a
  single child the two edges through it are joined, keeping the larger label
  when both are inner and forgetting the label otherwise.

Rewriting with these moves until no label is zero gives a canonical
representative, :class:`NormalPoint`.  The explicit eight-case table for a
single cork move on a binary tree lives in :func:`r2_case`; it is used by the
characteristic maps and by the relation-pair generators in the test suite.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import trees as tr
from .cube import (
    ONE,
    ZERO,
    apply_connection,
    apply_degeneracy,
    apply_face,
    format_rational,
)
from .trees import BLACK, LEAF, WHITE, Tree


class InvalidPointError(ValueError):
    pass


def _labels(values: Sequence) -> tuple:
    try:
        return tuple(Fraction(v) for v in values)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidPointError(f"bad label: {exc}") from None


def _check_counts(tree: Tree, labels: tuple) -> None:
    if tr.count_symbols(tree)[WHITE]:
        raise InvalidPointError("points carry black corks only")
    expected = tr.n_inner_edges(tree)
    if len(labels) != expected:
        raise InvalidPointError(
            f"tree {tr.serialize_tree(tree)} has {expected} inner edges "
            f"but {len(labels)} labels were given")


@dataclass(frozen=True)
class LabeledPoint:
    """A binary tree with black corks and one label in [0, 1] per inner edge."""

    tree: Tree
    labels: tuple = ()

    def __post_init__(self):
        labels = _labels(self.labels)
        object.__setattr__(self, "labels", labels)
        if not tr.is_binary(self.tree):
            raise InvalidPointError(f"{tr.serialize_tree(self.tree)} is not binary")
        _check_counts(self.tree, labels)
        if any(not ZERO <= x <= ONE for x in labels):
            raise InvalidPointError("labels must lie in [0, 1]")

    @classmethod
    def parse(cls, tree: str, labels: Sequence = ()) -> "LabeledPoint":
        return cls(tr.parse_tree(tree), labels)

    def to_dict(self) -> dict:
        return _to_dict(self)


@dataclass(frozen=True)
class NormalPoint:
    """Canonical representative: no degree-2 vertices and all labels in (0, 1]."""

    tree: Tree
    labels: tuple = ()

    def __post_init__(self):
        labels = _labels(self.labels)
        object.__setattr__(self, "labels", labels)
        if tr.has_degree_two(self.tree):
            raise InvalidPointError("normal points have no degree-2 vertices")
        _check_counts(self.tree, labels)
        if any(not ZERO < x <= ONE for x in labels):
            raise InvalidPointError("normal labels must lie in (0, 1]")

    @classmethod
    def parse(cls, tree: str, labels: Sequence = ()) -> "NormalPoint":
        return cls(tr.parse_tree(tree), labels)

    def to_dict(self) -> dict:
        return _to_dict(self)


UNIT = LabeledPoint(LEAF, ())
EMPTY_CORK = LabeledPoint(BLACK, ())  # the single point of K^u_0 with one cork


def _to_dict(p) -> dict:
    return {"tree": tr.serialize_tree(p.tree),
            "labels": [format_rational(x) for x in p.labels]}


def point_from_dict(data: dict):
    """Read ``{"tree": ..., "labels": [...]}``; binary trees give a LabeledPoint."""
    if not isinstance(data, dict) or "tree" not in data:
        raise InvalidPointError("point JSON needs a 'tree' field")
    labels = data.get("labels", [])
    if not isinstance(labels, list):
        raise InvalidPointError("'labels' must be a list")
    try:
        tree = tr.parse_tree(data["tree"])
    except (tr.TreeSyntaxError, TypeError) as exc:
        raise InvalidPointError(str(exc)) from None
    labels = _labels(str(x) for x in labels)
    if tr.is_binary(tree):
        return LabeledPoint(tree, labels)
    return NormalPoint(tree, labels)


def point_to_json(p) -> str:
    return json.dumps(_to_dict(p))


# ------------------------------------------------------------- rewriting

class _V:
    """Mutable vertex used while rewriting; ``label`` is that of the edge below."""

    __slots__ = ("kind", "label", "children")

    def __init__(self, kind, label, children=None):
        self.kind = kind
        self.label = label
        self.children = children


def _decorate(tree: Tree, labels: Sequence) -> _V:
    it = iter(labels)

    def build(t: Tree, top: bool) -> _V:
        if t == LEAF:
            return _V(LEAF, None)
        label = None if top else next(it)
        if isinstance(t, str):
            return _V(t, label)
        v = _V("node", label)
        v.children = [build(c, False) for c in t]
        return v

    return build(tree, True)


def _undecorate(v: _V) -> tuple:
    labels = []

    def walk(u: _V) -> Tree:
        if u.label is not None:
            labels.append(u.label)
        if u.kind == "node":
            return tuple(walk(c) for c in u.children)
        return u.kind

    tree = walk(v)
    return tree, tuple(labels)


def _zero_edges(root: _V) -> list:
    """(vertex, parent, grandparent) for each zero-labeled inner edge, in path order."""
    out = []

    def walk(u: _V, parent, grand) -> None:
        if u.label is not None and u.label == 0:
            out.append((u, parent, grand))
        if u.kind == "node":
            for c in u.children:
                walk(c, u, parent)

    walk(root, None, None)
    return out


def _fire(root: _V, v: _V, parent: _V, grand: Optional[_V]) -> _V:
    """Apply the move for the zero-labeled edge below ``v``; returns the new top vertex."""
    k = next(idx for idx, c in enumerate(parent.children) if c is v)
    if v.kind == "node":
        parent.children[k:k + 1] = v.children
        return root
    del parent.children[k]
    if len(parent.children) > 1:
        return root
    sibling = parent.children[0]
    if grand is None:
        # parent edge was the root edge: the joined edge is the root edge
        sibling.label = None
        return sibling
    if sibling.kind == LEAF:
        sibling.label = None
    else:
        sibling.label = max(parent.label, sibling.label)
    j = next(idx for idx, c in enumerate(grand.children) if c is parent)
    grand.children[j] = sibling
    return root


def rewrite(tree: Tree, labels: Sequence,
            choose: Optional[Callable[[int], int]] = None) -> tuple:
    """Rewrite ``(tree, labels)`` until no label is zero.

    ``choose(k)`` picks which of the k currently zero-labeled edges fires
    next; by default the first one in path order.
    """
    labels = _labels(labels)
    root = _decorate(tree, labels)
    while True:
        zeros = _zero_edges(root)
        if not zeros:
            break
        pick = zeros[choose(len(zeros)) if choose else 0]
        root = _fire(root, *pick)
    return _undecorate(root)


def normal_form(p, rng: Optional[random.Random] = None) -> NormalPoint:
    """Canonical representative of the class of ``p``.

    With ``rng`` the zero-labeled edges are processed in random order; the
    result must not depend on it.
    """
    choose = (lambda k: rng.randrange(k)) if rng is not None else None
    tree, labels = rewrite(p.tree, p.labels, choose)
    return NormalPoint(tree, labels)


def equivalent(p, q) -> bool:
    return normal_form(p) == normal_form(q)


# ----------------------------------------------------------- composition

def compose_point(p, i: int, q):
    """Operadic composition ``p o_i q`` on points.

    Grafts the trees and labels the newly created inner edge by 1; the
    labels of q are inserted right after it.
    """
    if p.tree == LEAF:
        if i != 1:
            raise IndexError(f"slot {i} out of range for the unit")
        return q
    tree = tr.graft(p.tree, i, q.tree)  # raises on bad slot
    if q.tree == LEAF:
        return p
    slot_path = tr.leaf_paths(p.tree)[i - 1]
    k = tr.inner_edges(tree).index(slot_path) + 1
    labels = p.labels[: k - 1] + (ONE,) + q.labels + p.labels[k - 1:]
    if isinstance(p, LabeledPoint) and isinstance(q, LabeledPoint):
        return LabeledPoint(tree, labels)
    if any(x == 0 for x in labels):
        return compose_point(normal_form(p), i, normal_form(q))
    return NormalPoint(tree, labels)


def degeneracy_map(i: int, p: LabeledPoint) -> LabeledPoint:
    """Associahedral degeneracy ``K_n -> K_{n-1}`` forgetting the i-th leaf."""
    counts = tr.count_symbols(p.tree)
    if counts[BLACK] or counts[WHITE]:
        raise ValueError("degeneracy_map needs a cork-free tree")
    if counts[LEAF] < 3:
        raise ValueError("degeneracy_map needs at least three leaves")
    leaves = tr.leaf_paths(p.tree)
    if not 1 <= i <= len(leaves):
        raise IndexError(f"leaf {i} out of range")
    leaf = leaves[i - 1]
    parent = leaf[:-1]
    sibling = parent + (1 - leaf[-1],)
    inner = tr.inner_edges(p.tree)
    sibling_inner = tr.subtree(p.tree, sibling) != LEAF
    if parent and sibling_inner:
        labels = apply_connection(inner.index(parent) + 1, p.labels)
    elif parent:
        labels = apply_degeneracy(inner.index(parent) + 1, p.labels)
    else:
        labels = apply_degeneracy(1, p.labels)
    return LabeledPoint(tr.remove_at(p.tree, leaf), labels)


# ------------------------------------------------------ the cork table

R2_CASES = ("a", "b", "c", "d", "e", "f", "g", "h")


def r2_case(tree: Tree, e: int) -> tuple:
    """Local case of the cork edge ``e`` (1-based inner edge) of a binary tree.

    Returns ``(letter, target_tree, eps)`` where ``eps`` sends the labels of
    the other inner edges of ``tree`` to labels on ``target_tree``.
    """
    if not tr.is_binary(tree):
        raise ValueError("the cork table is defined for binary trees")
    inner = tr.inner_edges(tree)
    if not 1 <= e <= len(inner):
        raise IndexError(f"inner edge {e} out of range")
    path = inner[e - 1]
    if tr.subtree(tree, path) != BLACK:
        raise ValueError(f"inner edge {e} does not end at a black cork")
    parent, side = path[:-1], path[-1]
    sibling = parent + (1 - side,)
    left = side == 0
    sibling_leaf = tr.subtree(tree, sibling) == LEAF
    target = tr.remove_at(tree, path)
    if parent and not sibling_leaf:
        if left:
            return "a", target, lambda x: apply_connection(e - 1, x)
        j = inner.index(parent) + 1
        return "b", target, lambda x: apply_connection(j, x)
    if parent:
        return ("c" if left else "d"), target, lambda x: apply_degeneracy(e - 1, x)
    if not sibling_leaf:
        return ("e" if left else "f"), target, lambda x: apply_degeneracy(1, x)
    return ("g" if left else "h"), target, lambda x: ()


def r1_partners(tree: Tree, e: int) -> list:
    """Binary trees T' with an edge e' such that T'/e' = T/e, as ``(T', j)`` pairs."""
    inner = tr.inner_edges(tree)
    path = inner[e - 1]
    u = tr.subtree(tree, path)
    if not isinstance(u, tuple):
        raise ValueError("R1 moves need an edge between internal vertices")
    parent_path, k = path[:-1], path[-1]
    v = tr.subtree(tree, parent_path)
    if k == 0:
        other = (u[0], (u[1], v[1]))
        new_path = parent_path + (1,)
    else:
        other = ((v[0], u[0]), u[1])
        new_path = parent_path + (0,)
    partner = tr.replace_subtree(tree, parent_path, other)
    j = tr.inner_edges(partner).index(new_path) + 1
    return [(partner, j)]


# ------------------------------------------------- characteristic maps

def _shuffle_corks(tree: Tree, cork_tree: Tree, x_labels: Sequence, t: Sequence) -> tuple:
    """Merge labels of ``tree`` with cork coordinates t along the inner edges of ``cork_tree``."""
    xs, ts = iter(x_labels), iter(t)
    out = []
    for path in tr.inner_edges(cork_tree):
        out.append(next(ts) if tr.subtree(cork_tree, path) == BLACK else next(xs))
    return tuple(out)


def _check_char_args(places: Sequence, x: LabeledPoint, n_coords: int) -> tuple:
    places = tuple(places)
    if tr.n_corks(x.tree):
        raise ValueError("characteristic maps start from a cork-free tree")
    m = len(places)
    if n_coords != m:
        raise ValueError(f"need {m} cube coordinates, got {n_coords}")
    if tr.n_leaves(x.tree) == 1 and m == 1:
        raise ValueError("the case n = 0, m = 1 is the single point of K^u_{0,1}")
    return places


def char_map_top(places: Sequence[int], x: LabeledPoint, t: Sequence) -> LabeledPoint:
    """Image of ``(x, t)`` in ``H_{T^{.S}}``: t goes to the new cork edges."""
    places = _check_char_args(places, x, len(t))
    t = _labels(t)
    cork_tree = tr.add_corks(x.tree, places)
    return LabeledPoint(cork_tree, _shuffle_corks(x.tree, cork_tree, x.labels, t))


def char_map_boundary(places: Sequence[int], i: int, x: LabeledPoint, t: Sequence) -> NormalPoint:
    """Image of ``(x, d_i^-(t))``, resolved through the cork table.

    The i-th cork of ``S`` sits on an edge of zero length; the table case
    for that edge fixes where the remaining coordinates go.
    """
    places = tuple(places)
    if not 1 <= i <= len(places):
        raise IndexError(f"cork {i} out of range")
    _check_char_args(places, x, len(t) + 1)
    t = _labels(t)
    cork_tree = tr.add_corks(x.tree, places)
    corks = [p for p in tr.inner_edges(cork_tree) if tr.subtree(cork_tree, p) == BLACK]
    e = tr.inner_edges(cork_tree).index(corks[i - 1]) + 1
    full = _shuffle_corks(x.tree, cork_tree, x.labels, apply_face("-", i, t))
    rest = full[: e - 1] + full[e:]
    _, target, eps = r2_case(cork_tree, e)
    return normal_form(LabeledPoint(target, eps(rest)))


# ------------------------------------------------------------- sampling

def random_binary_tree(rng: random.Random, n: int, m: int) -> Tree:
    trees = tr.enumerate_binary(n, m)
    return trees[rng.randrange(len(trees))]


def random_point(rng: random.Random, n: int, m: int,
                 pool: Optional[Sequence] = None) -> LabeledPoint:
    """Uniform tree, labels drawn from ``pool`` (or random rationals in [0, 1])."""
    tree = random_binary_tree(rng, n, m)
    k = tr.n_inner_edges(tree)
    if pool is None:
        labels = tuple(Fraction(rng.randint(0, 12), 12) for _ in range(k))
    else:
        labels = tuple(Fraction(rng.choice(pool)) for _ in range(k))
    return LabeledPoint(tree, labels)
