"""Maximum witness sets in simple and monotone polygons, with exact arithmetic."""
from .errors import *  # noqa: F401,F403
from .geometry import (  # noqa: F401
    BoundaryPoint,
    Location,
    Orientation,
    Point,
    Polygon,
    Rational,
    Segment,
    is_x_monotone,
    orientation,
    point_in_polygon,
    pt,
    ray_shoot,
    reflex_vertices,
    segment_inside,
    segments_intersect,
    validate_polygon,
    visible,
)
