"""Planted planar trees with leaves and corks.

A tree is stored as a nested immutable value: the strings ``"l"``, ``"b"``
and ``"w"`` are a leaf, a black cork and a white cork, and a tuple of trees
is an internal vertex whose children are listed in planar order.  The root
vertex and the root edge sit implicitly below the outermost value, so
``"l"`` is the unit tree ``|`` and ``"b"`` is the corolla ``C_0``.

Vertices are addressed by *paths*: the tuple of child indices leading from
the top vertex (path ``()``) to the vertex.  Every non-root vertex is the top
of exactly one edge, so the same path also names that edge.  Depth-first
preorder on paths is the path order of the tree; edges and inner edges are
ordered by their top vertex.

All indices exposed to callers (leaf positions, edge numbers) are 1-based,
following the grafting notation ``T o_i U``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence, Union

LEAF = "l"
BLACK = "b"
WHITE = "w"
CORKS = (BLACK, WHITE)

Tree = Union[str, tuple]
Path = tuple


class TreeSyntaxError(ValueError):
    """Raised by :func:`parse_tree` on malformed notation."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# ---------------------------------------------------------------- text form

def parse_tree(text: str) -> Tree:
    """Parse tree notation such as ``"(l ((l b) l))"``.

    Grammar: ``tree := 'l' | 'b' | 'w' | '(' tree (' ' tree)* ')'``.
    Whitespace between tokens is free; a one-child node ``"(l)"`` encodes a
    degree-2 vertex.
    """
    if not text or not text.strip():
        raise TreeSyntaxError("empty input", 0)
    pos = 0
    n = len(text)

    def skip() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse() -> Tree:
        nonlocal pos
        skip()
        if pos >= n:
            raise TreeSyntaxError("unexpected end of input", pos)
        ch = text[pos]
        if ch in (LEAF, BLACK, WHITE):
            pos += 1
            if pos < n and text[pos].isalnum():
                raise TreeSyntaxError(f"unexpected character {text[pos]!r}", pos)
            return ch
        if ch == "(":
            pos += 1
            children = []
            while True:
                skip()
                if pos >= n:
                    raise TreeSyntaxError("unclosed '('", pos)
                if text[pos] == ")":
                    if not children:
                        raise TreeSyntaxError("empty node", pos)
                    pos += 1
                    return tuple(children)
                children.append(parse())
        raise TreeSyntaxError(f"unexpected character {ch!r}", pos)

    tree = parse()
    skip()
    if pos != n:
        raise TreeSyntaxError(f"trailing input {text[pos:]!r}", pos)
    return tree


def serialize_tree(tree: Tree) -> str:
    if isinstance(tree, str):
        return tree
    return "(" + " ".join(serialize_tree(c) for c in tree) + ")"


# --------------------------------------------------------------- structure

def is_node(tree: Tree) -> bool:
    return isinstance(tree, tuple)


def is_cork(tree: Tree) -> bool:
    return tree == BLACK or tree == WHITE


def subtree(tree: Tree, path: Path) -> Tree:
    for k in path:
        tree = tree[k]
    return tree


def replace_subtree(tree: Tree, path: Path, new: Tree) -> Tree:
    if not path:
        return new
    k = path[0]
    return tree[:k] + (replace_subtree(tree[k], path[1:], new),) + tree[k + 1:]


def vertices(tree: Tree) -> list[Path]:
    """Non-root vertices in path order (depth-first preorder)."""
    out: list[Path] = []

    def walk(t: Tree, path: Path) -> None:
        out.append(path)
        if isinstance(t, tuple):
            for k, c in enumerate(t):
                walk(c, path + (k,))

    walk(tree, ())
    return out


def edges(tree: Tree) -> list[Path]:
    """E(T), each edge named by its top vertex; the root edge is ``()``."""
    return vertices(tree)


def inner_edges(tree: Tree) -> list[Path]:
    """I(T): edges whose bottom is not the root and whose top is not a leaf."""
    return [p for p in vertices(tree) if p and subtree(tree, p) != LEAF]


def leaf_paths(tree: Tree) -> list[Path]:
    return [p for p in vertices(tree) if subtree(tree, p) == LEAF]


def cork_paths(tree: Tree) -> list[Path]:
    return [p for p in vertices(tree) if is_cork(subtree(tree, p))]


def count_symbols(tree: Tree) -> dict[str, int]:
    counts = {LEAF: 0, BLACK: 0, WHITE: 0, "nodes": 0}

    def walk(t: Tree) -> None:
        if isinstance(t, str):
            counts[t] += 1
        else:
            counts["nodes"] += 1
            for c in t:
                walk(c)

    walk(tree)
    return counts


def n_leaves(tree: Tree) -> int:
    if isinstance(tree, str):
        return 1 if tree == LEAF else 0
    return sum(n_leaves(c) for c in tree)


def n_corks(tree: Tree) -> int:
    if isinstance(tree, str):
        return 0 if tree == LEAF else 1
    return sum(n_corks(c) for c in tree)


def n_inner_edges(tree: Tree) -> int:
    """|I(T)|: every non-top vertex that is not a leaf tops an inner edge."""
    if isinstance(tree, str):
        return 0
    count = 0
    stack = list(tree)
    while stack:
        t = stack.pop()
        if t != LEAF:
            count += 1
            if t.__class__ is tuple:
                stack.extend(t)
    return count


def height(tree: Tree) -> int:
    if isinstance(tree, str):
        return 1
    return 1 + max(height(c) for c in tree)


def is_binary(tree: Tree) -> bool:
    """Every vertex has degree 1 or 3, i.e. every internal node has two children."""
    if isinstance(tree, str):
        return True
    return len(tree) == 2 and is_binary(tree[0]) and is_binary(tree[1])


def has_degree_two(tree: Tree) -> bool:
    if isinstance(tree, str):
        return False
    return len(tree) == 1 or any(has_degree_two(c) for c in tree)


def corolla(n: int) -> Tree:
    """C_n; C_0 is the single-cork tree."""
    if n == 0:
        return BLACK
    return (LEAF,) * n


@dataclass(frozen=True)
class TreeStats:
    n_leaves: int
    n_black_corks: int
    n_white_corks: int
    height: int
    inner_edges: tuple
    degrees: dict

    @property
    def n_corks(self) -> int:
        return self.n_black_corks + self.n_white_corks


def stats(tree: Tree) -> TreeStats:
    counts = count_symbols(tree)
    degrees = {}
    for p in vertices(tree):
        t = subtree(tree, p)
        degrees[p] = 1 + len(t) if isinstance(t, tuple) else 1
    return TreeStats(
        n_leaves=counts[LEAF],
        n_black_corks=counts[BLACK],
        n_white_corks=counts[WHITE],
        height=height(tree),
        inner_edges=tuple(inner_edges(tree)),
        degrees=degrees,
    )


# -------------------------------------------------------------- operations

def graft(tree: Tree, i: int, other: Tree) -> Tree:
    """T o_i U: graft the root edge of ``other`` onto the i-th leaf of ``tree``."""
    if i < 1:
        raise IndexError(f"leaf index {i} out of range")
    counter = [0]

    def walk(t: Tree) -> Tree:
        if t == LEAF:
            counter[0] += 1
            return other if counter[0] == i else t
        if isinstance(t, str):
            return t
        if counter[0] >= i:
            return t
        return tuple(walk(c) for c in t)

    result = walk(tree)
    if counter[0] < i:
        raise IndexError(f"leaf index {i} out of range for tree with {n_leaves(tree)} leaves")
    return result


def contract_edge(tree: Tree, e: int) -> Tree:
    """T/e for the e-th inner edge; the upper vertex must not be a cork."""
    inner = inner_edges(tree)
    if not 1 <= e <= len(inner):
        raise IndexError(f"inner edge {e} out of range (tree has {len(inner)})")
    path = inner[e - 1]
    upper = subtree(tree, path)
    if not isinstance(upper, tuple):
        raise ValueError(f"inner edge {e} ends at a cork and cannot be contracted")
    return contract_at(tree, path)


def contract_at(tree: Tree, path: Path) -> Tree:
    """Contract the edge whose top vertex is ``path`` (a non-top internal node)."""
    parent_path, k = path[:-1], path[-1]
    parent = subtree(tree, parent_path)
    merged = parent[:k] + subtree(parent, (k,)) + parent[k + 1:]
    return replace_subtree(tree, parent_path, merged)


def add_corks(tree: Tree, places: Sequence[int]) -> Tree:
    """T^{.S}: replace the leaves at positions S by black corks."""
    places = tuple(places)
    if any(b <= a for a, b in zip(places, places[1:])):
        raise ValueError(f"cork places {places} must be strictly increasing")
    n = n_leaves(tree)
    if places and (places[0] < 1 or places[-1] > n):
        raise ValueError(f"cork places {places} not within [1, {n}]")
    result = tree
    for j in reversed(places):
        result = graft(result, j, BLACK)
    return result


def remove_cork_edge(tree: Tree, e: int) -> Tree:
    """T\\e for a binary tree, where e (1-based in E(T)) has a degree-1 top vertex.

    The vertex and its edge are removed and the other two edges at the
    degree-3 bottom vertex are joined into one.
    """
    if not is_binary(tree):
        raise ValueError("remove_cork_edge needs a binary tree")
    all_edges = edges(tree)
    if not 1 <= e <= len(all_edges):
        raise IndexError(f"edge {e} out of range (tree has {len(all_edges)})")
    path = all_edges[e - 1]
    if not path or isinstance(subtree(tree, path), tuple):
        raise ValueError(f"edge {e} does not end at a degree-1 vertex above a degree-3 vertex")
    return remove_at(tree, path)


def remove_at(tree: Tree, path: Path) -> Tree:
    """Delete the degree-1 vertex at ``path``; a parent left with one child is dissolved."""
    parent_path, k = path[:-1], path[-1]
    parent = subtree(tree, parent_path)
    rest = parent[:k] + parent[k + 1:]
    return replace_subtree(tree, parent_path, rest[0] if len(rest) == 1 else rest)


def strip_corks(tree: Tree) -> Tree:
    """Replace every cork, black or white, by a leaf."""
    if isinstance(tree, str):
        return LEAF
    return tuple(strip_corks(c) for c in tree)


# ------------------------------------------------------------- enumeration

def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def count_binary(n: int, m: int) -> int:
    """Number of binary trees with n leaves and m corks: C(n+m, m) Catalan(n+m-1)."""
    if n < 0 or m < 0 or n + m < 1:
        raise ValueError("need n, m >= 0 and n + m >= 1")
    return comb(n + m, m) * catalan(n + m - 1)


@lru_cache(maxsize=None)
def _binary(n: int, m: int) -> tuple:
    """Sorted ``(text, tree)`` pairs; texts are cached so sorting stays cheap."""
    if n + m == 1:
        return ((LEAF, LEAF),) if n == 1 else ((BLACK, BLACK),)
    out = []
    for n1 in range(n + 1):
        for m1 in range(m + 1):
            if n1 + m1 == 0 or n1 + m1 == n + m:
                continue
            rights = _binary(n - n1, m - m1)
            for ltext, left in _binary(n1, m1):
                head = "(" + ltext + " "
                for rtext, right in rights:
                    out.append((head + rtext + ")", (left, right)))
    out.sort(key=lambda pair: pair[0])
    return tuple(out)


def enumerate_binary(n: int, m: int) -> list[Tree]:
    """All binary trees with n leaves and m black corks, sorted by serialization."""
    if n < 0 or m < 0 or n + m < 1:
        return []
    return [tree for _, tree in _binary(n, m)]


@lru_cache(maxsize=None)
def _cell_trees(n: int, c: int, kinds: tuple) -> tuple:
    """Trees without degree-2 vertices, n leaves and exactly c corks of the given kinds."""
    out = []
    if (n, c) == (1, 0):
        out.append(LEAF)
    if (n, c) == (0, 1):
        out.extend(kinds)
    out.extend(_sequences(n, c, kinds, 2))
    return tuple(out)


@lru_cache(maxsize=None)
def _sequences(n: int, c: int, kinds: tuple, min_len: int) -> tuple:
    """Tuples of at least ``min_len`` subtrees with n leaves and c corks in total."""
    out = []
    if min_len <= 1 and n + c >= 1:
        out.extend((t,) for t in _cell_trees(n, c, kinds))
    for n1 in range(n + 1):
        for c1 in range(c + 1):
            if n1 + c1 == 0 or n1 + c1 == n + c:
                continue
            heads = _cell_trees(n1, c1, kinds)
            if not heads:
                continue
            for tail in _sequences(n - n1, c - c1, kinds, max(min_len - 1, 1)):
                for head in heads:
                    out.append((head,) + tail)
    return tuple(out)


def enumerate_cell_trees(n: int, max_corks: int, allow_white: bool = True) -> list[Tree]:
    """Trees indexing the cells of K^u_{n,max_corks}.

    No degree-2 vertices, n leaves, at most ``max_corks`` corks, and the lone
    black cork ``"b"`` excluded.
    """
    kinds = (BLACK, WHITE) if allow_white else (BLACK,)
    out = []
    for c in range(max_corks + 1):
        out.extend(t for t in _cell_trees(n, c, kinds) if t != BLACK)
    return sorted(out, key=serialize_tree)


def iter_trees_by_size(max_vertices: int, max_leaves: int = 4,
                       kinds: Iterable[str] = (LEAF, BLACK)) -> Iterator[Tree]:
    """All trees (degree-2 vertices allowed) with at most ``max_vertices`` internal nodes.

    Used for exhaustive operad-axiom checks; degree-1 vertices are drawn from
    ``kinds`` and each node has at most ``max_leaves`` children.
    """
    kinds = tuple(kinds)

    @lru_cache(maxsize=None)
    def build(k: int) -> tuple:
        # trees with exactly k internal nodes
        if k == 0:
            return kinds
        out = []
        for arity in range(1, max_leaves + 1):
            for split in _compositions(k - 1, arity):
                for kids in itertools.product(*(build(s) for s in split)):
                    out.append(tuple(kids))
        return tuple(out)

    for k in range(max_vertices + 1):
        yield from build(k)


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
