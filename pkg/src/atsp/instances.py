"""Instance generators and JSON serialization.

Two constructed families reproduce known ordering gaps:

* a grid of unit vertical segments where snaking along rows (the ordering a
  center-point TSP prefers) lets the adversary zigzag for ~sqrt(2) per hop,
  while snaking along columns costs ~1 per hop;
* a radial arrangement of alternating long/short segments where the angular
  ordering pays ~1 per segment but grouping the long segments first pays
  ~1 per long segment only.

Random families cover point sets, unit vertical segments, and disjoint
equal-radius disks. All generators are pure functions of spec and seed.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass

from .adversary import Ordering
from .errors import (
    InvalidArgumentError,
    PackingTooDenseError,
    ParseError,
    UnsupportedKindError,
)
from .geometry import (
    DiskRegion,
    Instance,
    Point,
    PointsRegion,
    Region,
    SegmentRegion,
    dist,
)

__all__ = [
    "GridSpec",
    "RadialSpec",
    "gen_grid_segments",
    "gen_radial_segments",
    "gen_random",
    "read_instance",
    "write_instance",
    "instance_to_dict",
    "instance_from_dict",
]

REJECTION_LIMIT = 10**5


@dataclass(frozen=True)
class GridSpec:
    """A side x side grid of unit vertical segments.

    Midpoints sit at (i, j*(1+eps)): horizontal neighbors are 1 apart,
    vertical neighbors 1+eps apart.
    """

    side: int
    eps: float

    def __post_init__(self):
        if self.side < 2:
            raise InvalidArgumentError(f"grid side must be >= 2, got {self.side}")
        if not 0 < self.eps < 0.5:
            raise InvalidArgumentError(f"grid eps must be in (0, 0.5), got {self.eps}")


@dataclass(frozen=True)
class RadialSpec:
    """2*pairs segments pointing outward from a small circle, alternating
    long (long_len) and short (eps) around equally spaced angles."""

    pairs: int
    eps: float
    long_len: float = 1.0

    def __post_init__(self):
        if self.pairs < 2:
            raise InvalidArgumentError(f"radial pairs must be >= 2, got {self.pairs}")
        if not 0 < self.eps < 0.1:
            raise InvalidArgumentError(f"radial eps must be in (0, 0.1), got {self.eps}")


def gen_grid_segments(spec: GridSpec) -> tuple[Instance, Ordering, Ordering]:
    """Grid instance plus its row-snake and column-snake orderings.

    Region index is j*side + i for column i, row j. The row snake visits
    row 0 left to right, row 1 right to left, and so on; the column snake
    does the same by columns.
    """
    side, eps = spec.side, spec.eps
    regions: list[Region] = []
    for j in range(side):
        for i in range(side):
            y = j * (1.0 + eps)
            regions.append(SegmentRegion(Point(i, y - 0.5), Point(i, y + 0.5)))
    row_snake = [
        j * side + (i if j % 2 == 0 else side - 1 - i)
        for j in range(side)
        for i in range(side)
    ]
    col_snake = [
        (j if i % 2 == 0 else side - 1 - j) * side + i
        for i in range(side)
        for j in range(side)
    ]
    inst = Instance(
        tuple(regions),
        label=f"grid-{side}x{side}-eps{eps:g}",
        epsilon_meta=eps,
        meta={
            "family": "grid",
            "side": side,
            "orderings": {"row_snake": row_snake, "col_snake": col_snake},
        },
    )
    return inst, Ordering(tuple(row_snake)), Ordering(tuple(col_snake))


def gen_radial_segments(spec: RadialSpec) -> tuple[Instance, Ordering, Ordering]:
    """Radial instance plus its angular and longs-then-shorts orderings.

    Segment t sits at angle 2*pi*t/(2*pairs), runs from radius eps outward,
    and has length long_len for even t, eps for odd t.
    """
    p, eps = spec.pairs, spec.eps
    n = 2 * p
    regions: list[Region] = []
    for t in range(n):
        ang = math.tau * t / n
        c, s = math.cos(ang), math.sin(ang)
        length = spec.long_len if t % 2 == 0 else eps
        regions.append(
            SegmentRegion(
                Point(eps * c, eps * s),
                Point((eps + length) * c, (eps + length) * s),
            )
        )
    radial = list(range(n))
    alternating = list(range(0, n, 2)) + list(range(1, n, 2))
    inst = Instance(
        tuple(regions),
        label=f"radial-p{p}-eps{eps:g}",
        epsilon_meta=eps,
        meta={
            "family": "radial",
            "pairs": p,
            "orderings": {"radial": radial, "alternating": alternating},
        },
    )
    return inst, Ordering(tuple(radial)), Ordering(tuple(alternating))


def gen_random(
    kind: str,
    n: int,
    seed: int,
    box: float = 10.0,
    k: int = 3,
    radius: float = 0.5,
    samples_m: int = 16,
) -> Instance:
    """A random instance of one region kind, deterministic in the seed.

    Segments are unit-length and vertical with midpoints uniform in the
    box. Disks are equal-radius and pairwise disjoint, placed by rejection
    sampling (PackingTooDenseError after 10^5 attempts). Point regions get
    k candidates each.
    """
    if n < 3:
        raise InvalidArgumentError(f"random instances need n >= 3, got {n}")
    rng = random.Random(seed)
    regions: list[Region] = []
    if kind == "points":
        for _ in range(n):
            pts = tuple(
                Point(rng.uniform(0, box), rng.uniform(0, box)) for _ in range(k)
            )
            regions.append(PointsRegion(pts))
    elif kind == "segment":
        for _ in range(n):
            x = rng.uniform(0, box)
            y = rng.uniform(0, box)
            regions.append(SegmentRegion(Point(x, y - 0.5), Point(x, y + 0.5)))
    elif kind == "disk":
        lo, hi = radius, box - radius
        if hi <= lo:
            raise InvalidArgumentError("box too small for the disk radius")
        centers: list[Point] = []
        attempts = 0
        while len(centers) < n:
            attempts += 1
            if attempts > REJECTION_LIMIT:
                raise PackingTooDenseError(
                    f"could not place {n} disjoint disks of radius {radius} "
                    f"in a {box}x{box} box within {REJECTION_LIMIT} attempts"
                )
            c = Point(rng.uniform(lo, hi), rng.uniform(lo, hi))
            if all(dist(c, other) > 2 * radius for other in centers):
                centers.append(c)
        regions = [DiskRegion(c, radius, samples_m) for c in centers]
    else:
        raise InvalidArgumentError(f"unknown region kind: {kind!r}")
    return Instance(
        tuple(regions),
        label=f"random-{kind}-n{n}-seed{seed}",
        meta={"family": "random", "kind": kind, "n": n, "seed": seed},
    )


def _point_to_list(p: Point) -> list[float]:
    return [p.x, p.y]


def _region_to_dict(r: Region) -> dict:
    if isinstance(r, PointsRegion):
        return {"kind": "points", "pts": [_point_to_list(p) for p in r.candidates]}
    if isinstance(r, SegmentRegion):
        return {"kind": "segment", "a": _point_to_list(r.a), "b": _point_to_list(r.b)}
    if isinstance(r, DiskRegion):
        return {
            "kind": "disk",
            "c": _point_to_list(r.center),
            "r": r.radius,
            "m": r.samples_m,
        }
    raise InvalidArgumentError(f"unknown region type: {type(r).__name__}")


def instance_to_dict(instance: Instance) -> dict:
    meta = dict(instance.meta)
    if instance.epsilon_meta is not None:
        meta["eps"] = instance.epsilon_meta
    return {
        "label": instance.label,
        "regions": [_region_to_dict(r) for r in instance.regions],
        "meta": meta,
    }


def _want(obj: dict, key: str, where: str):
    if key not in obj:
        raise ParseError(f"{where}: missing required field {key!r}")
    return obj[key]


def _parse_point(v, where: str) -> Point:
    if (
        not isinstance(v, (list, tuple))
        or len(v) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)
    ):
        raise ParseError(f"{where}: expected [x, y], got {v!r}")
    try:
        return Point(v[0], v[1])
    except ValueError as e:
        raise ParseError(f"{where}: {e}") from e


def _parse_region(obj, where: str) -> Region:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object, got {type(obj).__name__}")
    kind = _want(obj, "kind", where)
    if kind == "points":
        pts = _want(obj, "pts", where)
        if not isinstance(pts, list) or not pts:
            raise ParseError(f"{where}.pts: expected a non-empty list of [x, y]")
        return PointsRegion(
            tuple(_parse_point(p, f"{where}.pts[{i}]") for i, p in enumerate(pts))
        )
    if kind == "segment":
        return SegmentRegion(
            _parse_point(_want(obj, "a", where), f"{where}.a"),
            _parse_point(_want(obj, "b", where), f"{where}.b"),
        )
    if kind == "disk":
        r = _want(obj, "r", where)
        m = _want(obj, "m", where)
        if not isinstance(r, (int, float)) or isinstance(r, bool) or r <= 0:
            raise ParseError(f"{where}.r: expected a positive number, got {r!r}")
        if not isinstance(m, int) or isinstance(m, bool) or m <= 0:
            raise ParseError(f"{where}.m: expected a positive integer, got {m!r}")
        return DiskRegion(_parse_point(_want(obj, "c", where), f"{where}.c"), float(r), m)
    raise UnsupportedKindError(f"{where}.kind: unsupported region kind {kind!r}")


def instance_from_dict(obj: dict, source: str = "<dict>") -> Instance:
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: top level must be an object")
    regions_raw = _want(obj, "regions", source)
    if not isinstance(regions_raw, list) or not regions_raw:
        raise ParseError(f"{source}.regions: expected a non-empty list")
    regions = tuple(
        _parse_region(r, f"{source}.regions[{i}]") for i, r in enumerate(regions_raw)
    )
    label = obj.get("label", "")
    if not isinstance(label, str):
        raise ParseError(f"{source}.label: expected a string")
    meta = obj.get("meta", {})
    if not isinstance(meta, dict):
        raise ParseError(f"{source}.meta: expected an object")
    meta = dict(meta)
    eps = meta.pop("eps", None)
    if eps is not None and (not isinstance(eps, (int, float)) or isinstance(eps, bool)):
        raise ParseError(f"{source}.meta.eps: expected a number")
    return Instance(regions, label=label, epsilon_meta=eps, meta=meta)


def write_instance(instance: Instance, path) -> None:
    """Write an instance as indented JSON (numbers as decimal doubles)."""
    payload = json.dumps(instance_to_dict(instance), indent=2, ensure_ascii=False)
    with open(path, "w", encoding="utf-8") as f:
        f.write(payload)
        f.write("\n")


def read_instance(path) -> Instance:
    """Read an instance file; write/read round-trips exactly."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e
    return instance_from_dict(obj, source=str(path))
