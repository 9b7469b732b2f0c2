"""Weighted train tracks: combinatorial branched 1-manifolds with boundary.

A track has vertices tagged boundary or branch-point and oriented branches:
either closed loops or arcs with a tail and a head.  A weighting assigns a
positive rational to every branch so that inflow equals outflow at every
branch point; the total weight entering the boundary then equals the total
weight leaving it.

The module also computes the weight of a perturbed gradient line (product of
reciprocal stabilizer orders) and the local homology ranks that distinguish
branching points from manifold points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InvalidWeighting, MissingBranch


@dataclass(frozen=True)
class Arc:
    tail: str
    head: str


@dataclass(frozen=True)
class TrainTrack:
    boundary: frozenset[str]
    branch_points: frozenset[str]
    arcs: dict[str, Arc]
    loops: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.boundary & self.branch_points:
            raise ValueError("a vertex cannot be both boundary and branch point")
        vertices = self.boundary | self.branch_points
        ends: dict[str, int] = {v: 0 for v in vertices}
        for name, arc in self.arcs.items():
            for v in (arc.tail, arc.head):
                if v not in vertices:
                    raise ValueError(f"arc {name} touches undeclared vertex {v}")
                ends[v] += 1
        if self.loops & set(self.arcs):
            raise ValueError("loop and arc names must be disjoint")
        for v in self.boundary:
            if ends[v] != 1:
                raise ValueError(f"boundary vertex {v} must meet exactly one arc end")
        for v in self.branch_points:
            if ends[v] < 2:
                raise ValueError(f"branch point {v} must meet at least two arc ends")

    @property
    def branches(self) -> list[str]:
        return sorted(self.arcs) + sorted(self.loops)

    def reversed(self) -> "TrainTrack":
        return TrainTrack(
            boundary=self.boundary,
            branch_points=self.branch_points,
            arcs={name: Arc(tail=a.head, head=a.tail) for name, a in self.arcs.items()},
            loops=self.loops,
        )


Weighting = Mapping[str, Fraction]


def _full_weighting(track: TrainTrack, w: Weighting) -> dict[str, Fraction]:
    out = {}
    for b in track.branches:
        if b not in w:
            raise MissingBranch(f"no weight for branch {b}")
        out[b] = Fraction(w[b])
    return out


def validate_weighting(track: TrainTrack, w: Weighting) -> bool:
    """True iff all weights are positive and flow is conserved at branch points."""
    weights = _full_weighting(track, w)
    if any(v <= 0 for v in weights.values()):
        return False
    for x in track.branch_points:
        into = sum((weights[n] for n, a in track.arcs.items() if a.head == x), Fraction(0))
        out = sum((weights[n] for n, a in track.arcs.items() if a.tail == x), Fraction(0))
        if into != out:
            return False
    return True


def boundary_balance(track: TrainTrack, w: Weighting) -> tuple[Fraction, Fraction]:
    """(weight into the boundary, weight out of the boundary); always equal."""
    if not validate_weighting(track, w):
        raise InvalidWeighting("weights are not a conserved positive flow")
    weights = _full_weighting(track, w)
    plus = Fraction(0)
    minus = Fraction(0)
    for name, arc in track.arcs.items():
        if arc.head in track.boundary:
            plus += weights[name]
        if arc.tail in track.boundary:
            minus += weights[name]
    return plus, minus


def line_weight(orders: Sequence[int]) -> Fraction:
    """Weight of a perturbed gradient line: product of reciprocal stabilizer orders."""
    out = Fraction(1)
    for o in orders:
        if not isinstance(o, int) or isinstance(o, bool) or o < 1:
            raise ValueError("stabilizer orders must be integers >= 1")
        out /= o
    return out


def ramification_local_homology(n: int, r: int, k: int) -> int:
    """Reduced local homology rank of a rank-r ramification point in dimension n."""
    if n < 1 or r < 1 or k < 0:
        raise ValueError("need n >= 1, r >= 1, k >= 0")
    return r if k == n else 0


def random_flow_track(
    rng: random.Random,
    n_branch_points: int = 3,
    n_paths: int = 4,
    max_hops: int = 4,
    n_loops: int = 0,
) -> tuple[TrainTrack, dict[str, Fraction]]:
    """Random track weighted by superposed positive flows along tail-to-head paths.

    Each path starts at a fresh boundary vertex, walks through branch points
    (reusing or creating arcs), and ends at a fresh boundary vertex; its
    weight is added to every branch it traverses.  The result satisfies flow
    conservation by construction.
    """
    branch_names = [f"v{i}" for i in range(n_branch_points)]
    boundary: list[str] = []
    arcs: dict[str, Arc] = {}
    weights: dict[str, Fraction] = {}
    counter = 0

    def arc_between(tail: str, head: str) -> str:
        nonlocal counter
        existing = [n for n, a in arcs.items() if a.tail == tail and a.head == head]
        if existing and rng.random() < 0.5:
            return rng.choice(existing)
        name = f"a{counter}"
        counter += 1
        arcs[name] = Arc(tail=tail, head=head)
        weights[name] = Fraction(0)
        return name

    for p in range(n_paths):
        flow = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        start = f"s{p}"
        end = f"e{p}"
        boundary += [start, end]
        hops = [rng.choice(branch_names) for _ in range(rng.randint(1, max_hops))]
        route = [start] + hops + [end]
        for tail, head in zip(route, route[1:]):
            name = arc_between(tail, head)
            weights[name] += flow

    used = {v for a in arcs.values() for v in (a.tail, a.head)}
    loops = frozenset(f"l{i}" for i in range(n_loops))
    for name in loops:
        weights[name] = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    track = TrainTrack(
        boundary=frozenset(boundary),
        branch_points=frozenset(v for v in branch_names if v in used),
        arcs=arcs,
        loops=loops,
    )
    return track, weights
