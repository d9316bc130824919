"""Point arrangements in P^2, their ideals and resolution data."""

from app.services.arrangement.ideal import (
    PointIdeal,
    as_source,
    evaluation_matrix,
    hilbert_function,
    ideal_piece,
)
from app.services.arrangement.io import format_points, parse_points, read_points, write_points
from app.services.arrangement.points import Arrangement, PointP2
from app.services.arrangement.resolution import (
    generator_degrees,
    hilbert_numerator,
    resolution_data,
    syzygy_degrees,
)
from app.services.arrangement.sampling import (
    collinear_triples,
    conconic_sextuples,
    in_general_position,
    sample_general_points,
    sample_points_in_general_position,
)

__all__ = [
    "Arrangement",
    "PointP2",
    "PointIdeal",
    "as_source",
    "evaluation_matrix",
    "ideal_piece",
    "hilbert_function",
    "generator_degrees",
    "syzygy_degrees",
    "hilbert_numerator",
    "resolution_data",
    "sample_general_points",
    "sample_points_in_general_position",
    "in_general_position",
    "collinear_triples",
    "conconic_sextuples",
    "parse_points",
    "read_points",
    "format_points",
    "write_points",
]
