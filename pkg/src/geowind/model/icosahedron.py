"""Labeled regular icosahedron: poles, rings, cyclic indexing, and adjacency."""

from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Mapping, Sequence
from itertools import combinations
from typing import TypeVar

import networkx as nx
from pydantic import BaseModel, ConfigDict

from geowind.exact.geometry import ExactVec3, vec_dot, vec_midpoint, vec_sq_dist
from geowind.exact.golden_field import PHI, GoldenRational, Scalar, field_sign
from geowind.io.models import (
    LABELS,
    LOWER_LABELS,
    UPPER_LABELS,
    Edge,
    ExactValue,
    edge_key,
    lower,
    upper,
)

LOGGER = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)


class NonPositiveEdgeLength(ValueError):
    """Raised when the requested edge length is zero or negative."""


class LabelingInfeasible(RuntimeError):
    """Raised when the rings cannot be indexed so that U_i ~ L_i and U_i ~ L_(i-1)."""


def _standard_coordinates() -> list[ExactVec3]:
    """Edge-length-2 model: (0, +-1, +-phi), (+-1, +-phi, 0), (+-phi, 0, +-1)."""

    points: list[ExactVec3] = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            points.append(ExactVec3.of(0, s1, PHI * s2))
    for s1 in (1, -1):
        for s2 in (1, -1):
            points.append(ExactVec3.of(s1, PHI * s2, 0))
    for s1 in (1, -1):
        for s2 in (1, -1):
            points.append(ExactVec3.of(PHI * s1, 0, s2))
    return points


LexKey = tuple[int, int, int, GoldenRational, GoldenRational, GoldenRational]


def _lex_key(point: ExactVec3) -> LexKey:
    signs = (field_sign(point.x), field_sign(point.y), field_sign(point.z))
    return (*signs, point.x, point.y, point.z)


def _build_graph(nodes: Iterable[K], adjacency: Iterable[tuple[K, K]]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from(adjacency)
    return graph


def _check_ring_cycle(graph: nx.Graph, ring: set[K], name: str) -> None:
    induced = graph.subgraph(ring)
    if (
        induced.number_of_edges() != 5
        or any(degree != 2 for _node, degree in induced.degree())
        or not nx.is_connected(induced)
    ):
        raise LabelingInfeasible(f"{name} ring does not induce a 5-cycle")


def lower_ring_order(
    upper_order: Sequence[K], graph: nx.Graph, lower_ring: set[K]
) -> tuple[K, ...]:
    """Derive L_1..L_5 from U_1..U_5 by the contract L_i ~ U_i and L_i ~ U_(i+1)."""

    order: list[K] = []
    for i, current in enumerate(upper_order):
        following = upper_order[(i + 1) % len(upper_order)]
        common = set(graph[current]) & set(graph[following]) & lower_ring
        if len(common) != 1:
            raise LabelingInfeasible(
                f"ring vertices {current!r} and {following!r} share {len(common)} lower neighbors"
            )
        order.append(common.pop())
    if set(order) != lower_ring:
        raise LabelingInfeasible("lower ring indexing is not a permutation of the lower ring")

    for i, current in enumerate(upper_order):
        lower_neighbors = set(graph[current]) & lower_ring
        if lower_neighbors != {order[i], order[i - 1]}:
            raise LabelingInfeasible(f"ring vertex {current!r} violates U_i ~ L_i, L_(i-1)")
    return tuple(order)


def ring_labeling(
    vertices: Mapping[K, ExactVec3], adjacency: Iterable[tuple[K, K]], poles: tuple[K, K]
) -> tuple[tuple[K, ...], tuple[K, ...]]:
    """Return cyclic orders (U_1..U_5, L_1..L_5) for the neighbors of the two poles.

    U_1 is the north neighbor with the smallest ``(sign x, sign y, sign z, x, y, z)`` key and
    U_2 the smaller-keyed of its two ring neighbors; the L ring follows from the contract.
    """

    north, south = poles
    graph = _build_graph(vertices, adjacency)
    upper_ring = set(graph[north])
    lower_ring = set(graph[south])
    if len(upper_ring) != 5 or len(lower_ring) != 5:
        raise LabelingInfeasible("each pole must have exactly five neighbors")
    if upper_ring & lower_ring or upper_ring | lower_ring | {north, south} != set(vertices):
        raise LabelingInfeasible("rings and poles must partition the twelve vertices")
    _check_ring_cycle(graph, upper_ring, "upper")
    _check_ring_cycle(graph, lower_ring, "lower")

    start = min(upper_ring, key=lambda node: _lex_key(vertices[node]))
    ring_neighbors = set(graph[start]) & upper_ring
    second = min(ring_neighbors, key=lambda node: _lex_key(vertices[node]))

    walk = [start, second]
    while len(walk) < 5:
        previous, current = walk[-2], walk[-1]
        (following,) = (set(graph[current]) & upper_ring) - {previous}
        walk.append(following)

    return tuple(walk), lower_ring_order(walk, graph, lower_ring)


class LabeledIcosahedron(BaseModel):
    """Regular icosahedron with labels N, S, U1..U5, L1..L5 and exact coordinates."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edge_length: ExactValue
    vertices: dict[str, ExactVec3]
    adjacency: frozenset[Edge]
    axis: ExactVec3

    def position(self, label: str) -> ExactVec3:
        return self.vertices[label]

    def is_adjacent(self, p: str, q: str) -> bool:
        return edge_key(p, q) in self.adjacency

    def neighbors(self, label: str) -> set[str]:
        return {q if p == label else p for p, q in self.adjacency if label in (p, q)}

    def graph(self) -> nx.Graph:
        return _build_graph(LABELS, self.adjacency)

    def sq_distance(self, p: str, q: str) -> GoldenRational:
        return vec_sq_dist(self.vertices[p], self.vertices[q])

    def invariant_violations(self) -> list[str]:
        """List every broken structural invariant; empty for a valid model."""

        problems: list[str] = []
        sq_edge = self.edge_length * self.edge_length
        if set(self.vertices) != set(LABELS):
            problems.append("vertex labels must be exactly N, S, U1..U5, L1..L5")
            return problems
        if len(self.adjacency) != 30:
            problems.append(f"expected 30 edges, found {len(self.adjacency)}")
        for label in LABELS:
            if len(self.neighbors(label)) != 5:
                problems.append(f"{label} has {len(self.neighbors(label))} neighbors")
        for p, q in sorted(self.adjacency):
            if self.sq_distance(p, q) != sq_edge:
                problems.append(f"edge {p}{q} does not have squared length l^2")
        if self.is_adjacent("N", "S"):
            problems.append("poles must not be adjacent")
        if self.vertices["S"] != -self.vertices["N"]:
            problems.append("S must equal -N")
        if self.neighbors("N") != set(UPPER_LABELS):
            problems.append("U ring must be the neighbors of N")
        if self.neighbors("S") != set(LOWER_LABELS):
            problems.append("L ring must be the neighbors of S")
        for i in range(1, 6):
            u_label = upper(i)
            left, right = lower(i), lower(i - 1)
            if not (self.is_adjacent(u_label, left) and self.is_adjacent(u_label, right)):
                problems.append(f"U{i} must be adjacent to L{i} and L{(i - 2) % 5 + 1}")
        for p, q in sorted(self.adjacency):
            if p in UPPER_LABELS and q in LOWER_LABELS:
                midpoint = vec_midpoint(self.vertices[p], self.vertices[q])
                if vec_dot(midpoint, self.axis) != 0:
                    problems.append(f"midpoint of {p}{q} is off the equatorial plane")
        return problems

    def relabeled(self, upper_order: Sequence[str]) -> LabeledIcosahedron:
        """Re-index the U ring along ``upper_order`` (current labels) and re-derive the L ring."""

        if sorted(upper_order) != sorted(UPPER_LABELS):
            raise LabelingInfeasible("upper order must be a permutation of U1..U5")
        graph = self.graph()
        for i, current in enumerate(upper_order):
            if not graph.has_edge(current, upper_order[(i + 1) % 5]):
                raise LabelingInfeasible("upper order must walk the ring cycle")
        lower_order = lower_ring_order(upper_order, graph, set(LOWER_LABELS))

        mapping = {"N": "N", "S": "S"}
        mapping.update({old: upper(i) for i, old in enumerate(upper_order, start=1)})
        mapping.update({old: lower(i) for i, old in enumerate(lower_order, start=1)})
        return LabeledIcosahedron(
            edge_length=self.edge_length,
            vertices={mapping[label]: point for label, point in self.vertices.items()},
            adjacency=frozenset(edge_key(mapping[p], mapping[q]) for p, q in self.adjacency),
            axis=self.axis,
        )


def build_icosahedron(edge_length: Scalar) -> LabeledIcosahedron:
    """Scale the standard coordinate model to ``edge_length`` and label it.

    Poles are the scaled (0, 1, phi) and (0, -1, -phi). Adjacency is derived from exact
    squared distances rather than a fixed edge table.
    """

    length = GoldenRational.coerce(edge_length)
    if field_sign(length) <= 0:
        raise NonPositiveEdgeLength(f"edge length must be positive, got {length}")

    factor = length / 2
    points = [point.scale(factor) for point in _standard_coordinates()]
    sq_edge = length * length
    adjacency = [
        (i, j)
        for i, j in combinations(range(len(points)), 2)
        if vec_sq_dist(points[i], points[j]) == sq_edge
    ]
    north, south = 0, 3
    LOGGER.debug("Derived %s adjacent pairs from exact distances", len(adjacency))

    upper_order, lower_order = ring_labeling(dict(enumerate(points)), adjacency, (north, south))
    names = {north: "N", south: "S"}
    names.update({index: upper(i) for i, index in enumerate(upper_order, start=1)})
    names.update({index: lower(i) for i, index in enumerate(lower_order, start=1)})

    model = LabeledIcosahedron(
        edge_length=length,
        vertices={names[index]: point for index, point in enumerate(points)},
        adjacency=frozenset(edge_key(names[i], names[j]) for i, j in adjacency),
        axis=points[north] - points[south],
    )
    problems = model.invariant_violations()
    if problems:
        raise LabelingInfeasible("; ".join(problems))
    return model


__all__ = [
    "LabelingInfeasible",
    "LabeledIcosahedron",
    "NonPositiveEdgeLength",
    "build_icosahedron",
    "lower_ring_order",
    "ring_labeling",
]
