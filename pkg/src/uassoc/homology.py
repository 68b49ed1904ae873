"""Cellular chain complexes of the cork-filtration stages and their homology.

The chains of ``K^u_{n,m}`` are spanned by the cell trees with n leaves and
at most m corks; the differential of :mod:`uassoc.chain` never increases the
number of corks, so each stage is a finite subcomplex.  Homology over the
integers is read off Smith normal forms of the boundary matrices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from . import trees as tr
from .chain import PRINTED, SignConvention, diff_tree, tree_degree


class ChainComplexError(RuntimeError):
    """Consecutive boundary maps do not compose to zero."""


Matrix = list  # list of rows of Python ints


@dataclass
class ChainComplexSlice:
    arity: int
    max_corks: int
    bases: list  # bases[k] = sorted cell trees of degree k
    boundaries: dict = field(default_factory=dict)  # k -> matrix C_k -> C_{k-1}
    convention: SignConvention = PRINTED

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 1

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def boundary(self, k: int) -> Matrix:
        """Matrix of d: C_k -> C_{k-1}; rows index degree k-1, columns degree k."""
        if k in self.boundaries:
            return self.boundaries[k]
        rows = len(self.bases[k - 1]) if 0 < k <= len(self.bases) else 0
        cols = len(self.bases[k]) if 0 <= k < len(self.bases) else 0
        return [[0] * cols for _ in range(rows)]


def build_complex(n: int, max_corks: int, conv: SignConvention = PRINTED) -> ChainComplexSlice:
    """Chains of K^u_{n, max_corks} with boundary matrices in the canonical bases."""
    cells = tr.enumerate_cell_trees(n, max_corks, allow_white=True)
    by_degree: dict = {}
    for t in cells:
        by_degree.setdefault(tree_degree(t), []).append(t)
    top = max(by_degree, default=-1)
    bases = [sorted(by_degree.get(k, []), key=tr.serialize_tree) for k in range(top + 1)]
    index = [{t: j for j, t in enumerate(b)} for b in bases]
    boundaries = {}
    for k in range(1, top + 1):
        mat = [[0] * len(bases[k]) for _ in range(len(bases[k - 1]))]
        for col, t in enumerate(bases[k]):
            for s, c in diff_tree(t, conv).terms.items():
                row = index[k - 1].get(s)
                if row is None:
                    raise ChainComplexError(
                        f"d({tr.serialize_tree(t)}) leaves the slice through {tr.serialize_tree(s)}")
                mat[row][col] = c
        boundaries[k] = mat
    return ChainComplexSlice(n, max_corks, bases, boundaries, conv)


def f_vector(n: int, max_corks: int) -> list[int]:
    """Number of cells of K^u_{n, max_corks} in each dimension."""
    counts: dict = {}
    for t in tr.enumerate_cell_trees(n, max_corks, allow_white=True):
        k = tree_degree(t)
        counts[k] = counts.get(k, 0) + 1
    return [counts.get(k, 0) for k in range(max(counts, default=-1) + 1)]


def euler_characteristic(c) -> int:
    dims = c.dims() if isinstance(c, ChainComplexSlice) else list(c)
    return sum((-1) ** k * d for k, d in enumerate(dims))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def check_d_squared(c: ChainComplexSlice) -> None:
    """Raise naming the first basis element whose boundary is not a cycle."""
    for k in range(2, c.top_degree + 1):
        prod = matmul(c.boundary(k - 1), c.boundary(k))
        for col in range(len(c.bases[k])):
            if any(row[col] for row in prod):
                raise ChainComplexError(
                    f"d(d({tr.serialize_tree(c.bases[k][col])})) != 0 in degree {k}")


# ---------------------------------------------------------- Smith form

def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple:
    """Invariant factors ``d_1 | d_2 | ...`` of an integer matrix and its rank.

    Row and column reduction with a smallest-magnitude pivot; Python ints keep
    the arithmetic exact whatever the coefficient growth.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
                    if abs(a[i][j]) == 1:
                        break
            if pivot and abs(a[pivot[0]][pivot[1]]) == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, cols):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
                        break
            if not done:
                continue
            p = a[t][t]
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        done = False
                        break
            if not done:
                continue
            # pivot must divide the rest of the matrix
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is not None:
                for j in range(t, cols):
                    a[t][j] += a[bad][j]
                continue
            break
        diag.append(abs(a[t][t]))
        t += 1
    return _normalize_invariants(diag), len(diag)


def _normalize_invariants(diag: list[int]) -> list[int]:
    """Turn any diagonal into a divisibility chain with the same product structure."""
    d = sorted(diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    a = [[x % p for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    for j in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i][j]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][j], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][j]:
                f = a[i][j]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


# ------------------------------------------------------------- homology

@dataclass
class HomologySummary:
    betti: list
    torsion: list  # torsion[k] = invariant factors > 1 of H_k
    modulus: Optional[int] = None

    def is_point(self) -> bool:
        return (bool(self.betti) and self.betti[0] == 1 and not any(self.betti[1:])
                and not any(self.torsion))

    def to_list(self) -> list[dict]:
        return [{"degree": k, "betti": b, "torsion": list(t)}
                for k, (b, t) in enumerate(zip(self.betti, self.torsion))]


def homology_summary(c: ChainComplexSlice, modulus: Optional[int] = None) -> HomologySummary:
    """Betti numbers and torsion of the slice, over Z or over GF(modulus)."""
    check_d_squared(c)
    top = c.top_degree
    ranks = [0] * (top + 2)
    invariants = [[] for _ in range(top + 2)]
    for k in range(1, top + 1):
        if modulus:
            ranks[k] = rank_mod_p(c.boundary(k), modulus)
        else:
            invariants[k], ranks[k] = smith_normal_form(c.boundary(k))
    dims = c.dims()
    betti = [dims[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]
    torsion = [[d for d in invariants[k + 1] if d > 1] for k in range(top + 1)]
    return HomologySummary(betti, torsion, modulus)


def report(n: int, max_corks: int, conv: SignConvention = PRINTED,
           modulus: Optional[int] = None) -> dict:
    c = build_complex(n, max_corks, conv)
    h = homology_summary(c, modulus)
    out = {
        "arity": n,
        "max_corks": max_corks,
        "f_vector": c.dims(),
        "euler": euler_characteristic(c),
        "homology": h.to_list(),
    }
    if modulus:
        out["modulus"] = modulus
    return out


# ----------------------------------------------------------- face graph

def face_graph(c: ChainComplexSlice) -> tuple:
    """Nodes ``(text, dim)`` and arcs ``(source, target, coefficient)`` of the face poset."""
    nodes = [(tr.serialize_tree(t), k) for k, basis in enumerate(c.bases) for t in basis]
    arcs = []
    for k in range(1, c.top_degree + 1):
        mat = c.boundary(k)
        for col, t in enumerate(c.bases[k]):
            for row, s in enumerate(c.bases[k - 1]):
                if mat[row][col]:
                    arcs.append((tr.serialize_tree(t), tr.serialize_tree(s), mat[row][col]))
    return nodes, arcs


def graph_to_dot(c: ChainComplexSlice) -> str:
    nodes, arcs = face_graph(c)
    lines = [f'digraph "K^u_{{{c.arity},{c.max_corks}}}" {{']
    for text, k in nodes:
        lines.append(f'  "{text}" [label="{text}", dim={k}];')
    for src, dst, coef in arcs:
        lines.append(f'  "{src}" -> "{dst}" [label="{coef}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(c: ChainComplexSlice) -> str:
    nodes, arcs = face_graph(c)
    return json.dumps({
        "arity": c.arity,
        "max_corks": c.max_corks,
        "nodes": [{"tree": t, "dim": k} for t, k in nodes],
        "arcs": [{"source": s, "target": d, "coef": x} for s, d, x in arcs],
    }, indent=2) + "\n"
