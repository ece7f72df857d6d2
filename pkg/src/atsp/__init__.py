"""Worst-case tour planning over uncertainty regions.

Given regions in the plane (point sets, segments, or disks), pick a cyclic
visiting order whose tour stays short even when an adversary chooses the
visited point inside each region after seeing the order. The library
provides the exact adversarial evaluator, exact and approximate ordering
solvers, lower-bound instance generators, and JSON/CLI front ends.
"""

from .errors import (
    AtspError,
    InvalidArgumentError,
    InvalidInstanceError,
    InvalidRegionError,
    PackingTooDenseError,
    ParseError,
    TooLargeError,
    UnsupportedKindError,
)
from .geometry import (
    DiskRegion,
    Instance,
    Point,
    PointsRegion,
    Region,
    SegmentRegion,
    center,
    compile_candidates,
    diameter,
    dist,
)
from .adversary import (
    AdversarialTour,
    Ordering,
    adversarial_value,
    adversarial_value_bruteforce,
    pair_route_worst,
    segment_pair_minmax,
)
from .hatgraph import (
    HatGraph,
    MetricViolation,
    build_hatgraph,
    cycle_weight,
    disk_w_exact,
    verify_metric,
)
from .solvers import (
    CENTER_TSP,
    EXACT_ATSP,
    HATGRAPH_CHRISTOFIDES,
    HATGRAPH_EXACT,
    HATGRAPH_MST2,
    TSPN_ORDER,
    SolveResult,
    atsp_2approx,
    atsp_3approx,
    atsp_mst2,
    center_tsp_ordering,
    christofides_tsp,
    exact_atsp,
    held_karp_tsp,
    mst_double_tsp,
    tspn_exact,
    tspn_order,
)
from .instances import (
    GridSpec,
    RadialSpec,
    gen_grid_segments,
    gen_radial_segments,
    gen_random,
    read_instance,
    write_instance,
)

__version__ = "0.1.0"
