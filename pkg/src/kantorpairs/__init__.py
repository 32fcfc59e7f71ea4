"""Marked-Dynkin-diagram classification of simple Kantor pairs and their
short Peirce gradings, Weyl-image computations, and exact-arithmetic
verification via Chevalley bases and explicit matrix pair constructions.

Node labeling follows the conventions documented in README.md (paper-style
for the exceptional types, Bourbaki elsewhere); ``rootsystems.BOURBAKI_MAP``
converts to Bourbaki numbering.
"""

from .rootsystems import DiagramType, RootSystem, build_root_system

__all__ = [
    "DiagramType",
    "RootSystem",
    "build_root_system",
]
