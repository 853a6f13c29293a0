"""Exact computation in the bicyclic monoid C(p, q) = <p, q | pq = 1> and its
neighbourhood-base topologies, with a brute-force oracle for cross-checking."""

from .core import (IDENTITY, Element, ParseError, format_element, inv, is_idempotent, mul,
                   parse_element, solve_left, solve_right, solve_two_sided, trace, translate)
from .order import down_set, idempotents, leq, strict_down_set, up_set, updown_set
from .product import left_shift_image, product_image, right_shift_image
from .region import Cell, Region, make_cell
from .topology import (TOPOLOGIES, basic, closure, interior, is_isolated, is_regular_open,
                       subspace_closure, subspace_interior, t1_separation)
from .verify import WitnessReport

__all__ = [
    "IDENTITY", "Element", "ParseError", "format_element", "inv", "is_idempotent", "mul",
    "parse_element", "solve_left", "solve_right", "solve_two_sided", "trace", "translate",
    "down_set", "idempotents", "leq", "strict_down_set", "up_set", "updown_set",
    "left_shift_image", "product_image", "right_shift_image",
    "Cell", "Region", "make_cell",
    "TOPOLOGIES", "basic", "closure", "interior", "is_isolated", "is_regular_open",
    "subspace_closure", "subspace_interior", "t1_separation",
    "WitnessReport",
]
