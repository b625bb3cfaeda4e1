"""Combinatorial checks: edge non-sharing and the pole-anchored maximality oracle."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from geowind.exact.golden_field import PHI
from geowind.io.models import (
    LOWER_LABELS,
    UPPER_LABELS,
    Edge,
    EdgeCheck,
    EdgeDuplicate,
    MaximalityCheck,
    Triple,
    edge_key,
)
from geowind.model.icosahedron import LabeledIcosahedron
from geowind.model.wing_set import WingSet

LOGGER = logging.getLogger(__name__)

RING_LABELS = UPPER_LABELS + LOWER_LABELS


def check_edge_disjoint(ws: WingSet) -> EdgeCheck:
    """Step 3: the 3 x |faces| edge slots must hold distinct unordered pairs."""

    owners: dict[Edge, list[str]] = defaultdict(list)
    for face in ws.faces:
        for edge in face.edges:
            owners[edge].append(face.name)

    duplicates = [
        EdgeDuplicate(edge=edge, faces=pair)
        for edge, names in owners.items()
        if len(names) > 1
        for pair in combinations(names, 2)
    ]
    slots = 3 * len(ws.faces)
    if duplicates:
        LOGGER.debug("Shared edges: %s", [(d.edge, d.faces) for d in duplicates])
    return EdgeCheck(
        passed=len(owners) == slots,
        edge_slots=slots,
        distinct_edges=len(owners),
        duplicate_pairs=duplicates,
    )


@dataclass(frozen=True, slots=True)
class Candidate:
    """Pole-anchored triangle (pole, X, Y) considered by the maximality search."""

    pole: str
    vertices: Triple
    edges: frozenset[Edge]
    spokes: tuple[Edge, Edge]
    gnomon: bool
    pole_angle_36: bool


def enumerate_candidates(
    model: LabeledIcosahedron, poles: Iterable[str] = ("S", "N"), gnomon_only: bool = True
) -> list[Candidate]:
    """All triangles (pole, X, Y) with X, Y ring vertices.

    With ``gnomon_only`` the exact squared sides must be {l^2, l^2, phi^2 l^2}. A gnomon has its
    36 degree angle at the pole exactly when the side facing the pole is a short one.
    """

    sq_edge = model.edge_length * model.edge_length
    gnomon_sides = sorted([sq_edge, sq_edge, PHI * PHI * sq_edge])
    candidates: list[Candidate] = []
    for pole in poles:
        for x, y in combinations(RING_LABELS, 2):
            facing = model.sq_distance(x, y)
            sides = sorted([model.sq_distance(pole, x), model.sq_distance(pole, y), facing])
            is_gnomon = sides == gnomon_sides
            if gnomon_only and not is_gnomon:
                continue
            spokes = (edge_key(pole, x), edge_key(pole, y))
            candidates.append(
                Candidate(
                    pole=pole,
                    vertices=(pole, x, y),
                    edges=frozenset((*spokes, edge_key(x, y))),
                    spokes=spokes,
                    gnomon=is_gnomon,
                    pole_angle_36=is_gnomon and facing == sq_edge,
                )
            )
    return candidates


def max_edge_disjoint(candidates: Sequence[Candidate]) -> list[Candidate]:
    """Exhaustive branch-and-bound for a largest pairwise edge-disjoint subset.

    Branches on the lowest undecided pole spoke: either some candidate covers it or it stays
    unused for good. Every candidate consumes two spokes, so half the free spokes bounds the
    remaining gain.
    """

    spokes = sorted({spoke for candidate in candidates for spoke in candidate.spokes})
    by_spoke: dict[Edge, list[Candidate]] = defaultdict(list)
    for candidate in candidates:
        by_spoke[min(candidate.spokes)].append(candidate)

    best: list[Candidate] = []
    chosen: list[Candidate] = []
    used: set[Edge] = set()

    def search(position: int) -> None:
        nonlocal best
        free = sum(1 for spoke in spokes[position:] if spoke not in used)
        if len(chosen) + free // 2 <= len(best):
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if position == len(spokes):
            best = list(chosen)
            return
        spoke = spokes[position]
        if spoke in used:
            search(position + 1)
            return
        for candidate in by_spoke.get(spoke, ()):
            if used.isdisjoint(candidate.edges):
                chosen.append(candidate)
                used.update(candidate.edges)
                search(position + 1)
                used.difference_update(candidate.edges)
                chosen.pop()
        used.add(spoke)
        search(position + 1)
        used.discard(spoke)

    search(0)
    return best


def check_maximality(model: LabeledIcosahedron) -> MaximalityCheck:
    """Brute-force oracle: at most five edge-disjoint gnomons per pole, ten in total."""

    candidates = enumerate_candidates(model)
    south = [candidate for candidate in candidates if candidate.pole == "S"]
    north = [candidate for candidate in candidates if candidate.pole == "N"]
    max_south = len(max_edge_disjoint(south))
    max_north = len(max_edge_disjoint(north))
    witness = max_edge_disjoint(candidates)
    unconstrained = max_edge_disjoint(enumerate_candidates(model, gnomon_only=False))
    LOGGER.debug(
        "Maximality: %s gnomon candidates, south=%s north=%s total=%s unconstrained=%s",
        len(candidates),
        max_south,
        max_north,
        len(witness),
        len(unconstrained),
    )
    return MaximalityCheck(
        passed=max_south == 5 and max_north == 5 and len(witness) == 10,
        max_per_south=max_south,
        max_per_north=max_north,
        max_total=len(witness),
        candidate_count=len(candidates),
        pole_apex_36_count=sum(candidate.pole_angle_36 for candidate in candidates),
        witness=sorted(candidate.vertices for candidate in witness),
        unconstrained_max_total=len(unconstrained),
    )


__all__ = [
    "Candidate",
    "check_edge_disjoint",
    "check_maximality",
    "enumerate_candidates",
    "max_edge_disjoint",
]
