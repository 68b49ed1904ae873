"""Exact combinatorics and chain models of the unital associahedra.

Submodules
----------
trees     planted planar trees with corks, grafting, enumeration
cube      face, degeneracy, connection and shuffle maps of cubes
points    labeled binary trees, the point-set relations and normal forms
chain     the free graded operad on cell trees and its differential
homology  cellular chain complexes of the cork filtration and their homology
cli       the ``uassoc`` command
"""
from .trees import (
    BLACK,
    LEAF,
    WHITE,
    TreeSyntaxError,
    enumerate_binary,
    enumerate_cell_trees,
    graft,
    parse_tree,
    serialize_tree,
)
from .points import LabeledPoint, NormalPoint, compose_point, equivalent, normal_form
from .chain import (
    PRINTED,
    ChainElement,
    Generator,
    SignConvention,
    compose_chain,
    diff,
    validated_convention,
)
from .homology import build_complex, f_vector, homology_summary, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "BLACK", "LEAF", "WHITE", "TreeSyntaxError", "enumerate_binary", "enumerate_cell_trees",
    "graft", "parse_tree", "serialize_tree",
    "LabeledPoint", "NormalPoint", "compose_point", "equivalent", "normal_form",
    "PRINTED", "ChainElement", "Generator", "SignConvention", "compose_chain", "diff",
    "validated_convention",
    "build_complex", "f_vector", "homology_summary", "smith_normal_form",
]
