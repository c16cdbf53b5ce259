"""Group-invariant Butson Hadamard matrices from bilinear forms on finite abelian groups."""

from .construct import BHRow, Ingredients, build, circulant, compute_e1, default_build, default_ingredients
from .groups import GroupSpec, parse_group, parse_group_string
from .oracle import Status, Verdict, decide
from .verify import check_bh_characters, check_bh_direct, verify

__all__ = [
    "BHRow",
    "GroupSpec",
    "Ingredients",
    "Status",
    "Verdict",
    "build",
    "check_bh_characters",
    "check_bh_direct",
    "circulant",
    "compute_e1",
    "decide",
    "default_build",
    "default_ingredients",
    "parse_group",
    "parse_group_string",
    "verify",
]
