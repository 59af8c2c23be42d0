"""
Census of abelian subgroups of a small group and the graph on those of
maximal order.

Abelian subgroups are found breadth first: an abelian H is extended by an
element g outside H that commutes with H, giving the abelian subgroup
``H <g>``. Every abelian subgroup is reached this way from the trivial one,
and every one containing a central subgroup Z is reached from Z.
"""
import dataclasses
import itertools
import logging

import numpy as np

from semifieldpy.config import resolve_budget
from semifieldpy.exceptions import BudgetExceededError
from semifieldpy.group.spec import GroupSpec
from semifieldpy.linalg.elimination import all_vectors
from semifieldpy.oracle.table import GroupTable, build_table, compute_derived

_logger = logging.getLogger(__name__)

Subgroup = frozenset[int]


@dataclasses.dataclass(frozen=True)
class CensusReport:
    """
    Abelian subgroups of one order.

    :ivar target_order: The order counted.
    :type target_order: int
    :ivar count: Number of abelian subgroups of that order.
    :type count: int
    :ivar subgroups: The subgroups as sets of labels, sorted by their smallest labels.
    :type subgroups: list[Subgroup]
    :ivar largest_order: Largest order of an abelian subgroup met during the search.
    :type largest_order: int
    """
    target_order: int
    count: int
    subgroups: list[Subgroup]
    largest_order: int


@dataclasses.dataclass(frozen=True)
class AbelianGraph:
    """
    Graph on abelian subgroups of maximal order; A and B are adjacent when
    ``AB = G`` and ``A & B = G'``.

    :ivar vertices: The subgroups.
    :type vertices: list[Subgroup]
    :ivar edges: Index pairs ``(i, j)`` with ``i < j``.
    :type edges: list[tuple[int, int]]
    """
    vertices: list[Subgroup]
    edges: list[tuple[int, int]]

    @property
    def is_complete(self) -> bool:
        size = len(self.vertices)
        return len(self.edges) == size * (size - 1) // 2

    def neighbours(self, vertex: int) -> list[int]:
        return sorted({j for i, j in self.edges if i == vertex}
                      | {i for i, j in self.edges if j == vertex})


def _check_order(table: GroupTable, cap: int | None) -> None:
    limit = resolve_budget(cap, "exhaustive_axiom_cap")
    if table.order > limit:
        raise BudgetExceededError("abelian subgroup census", table.order, limit)


def _cyclic(table: GroupTable, g: int) -> np.ndarray:
    powers = [0]
    current = g
    while current != 0:
        powers.append(current)
        current = int(table.table[current, g])
    return np.array(powers, dtype=np.int64)


def _abelian_levels(table: GroupTable, max_order: int | None,
                    containing: Subgroup | None = None) -> dict[int, set[Subgroup]]:
    """
    All abelian subgroups of order at most ``max_order`` that contain the
    central subgroup ``containing`` (the trivial one by default), keyed by order.
    """
    values = table.table
    start: Subgroup = frozenset({0}) if containing is None else frozenset(containing)
    levels: dict[int, set[Subgroup]] = {len(start): {start}}
    frontier = {start}
    while frontier:
        found: set[Subgroup] = set()
        for subgroup in frontier:
            members = np.array(sorted(subgroup), dtype=np.int64)
            commuting = (values[members, :] == values[:, members].T).all(axis=0)
            commuting[members] = False
            candidates = np.flatnonzero(commuting)
            covered = np.zeros(table.order, dtype=bool)
            for g in candidates:
                if covered[g]:
                    continue
                product = np.unique(values[np.ix_(members, _cyclic(table, int(g)))].ravel())
                if max_order is not None and product.size > max_order:
                    continue
                if product.size == table.p * members.size:
                    covered[product] = True
                found.add(frozenset(int(x) for x in product))
        for subgroup in found:
            levels.setdefault(len(subgroup), set()).add(subgroup)
        frontier = found
    return levels


def _sorted(subgroups) -> list[Subgroup]:
    return sorted(subgroups, key=sorted)


def abelian_census(table: GroupTable, target_order: int, cap: int | None = None,
                   containing: Subgroup | None = None) -> CensusReport:
    """
    All abelian subgroups of exactly ``target_order``, optionally only those
    containing a given central subgroup.

    :param table: The group.
    :type table: GroupTable
    :param target_order: The order to count.
    :type target_order: int
    :param cap: Largest group order, defaults to the axiom cap.
    :type cap: int | None
    :param containing: A central subgroup every counted subgroup contains.
    :type containing: Subgroup | None
    :return: The census.
    :rtype: CensusReport
    :raises BudgetExceededError: If the group order exceeds the cap.
    """
    _check_order(table, cap)
    levels = _abelian_levels(table, target_order, containing)
    subgroups = _sorted(levels.get(target_order, ()))
    _logger.debug("census: %d abelian subgroups of order %d", len(subgroups), target_order)
    return CensusReport(target_order, len(subgroups), subgroups, max(levels))


def complements_of(table: GroupTable, subgroup: Subgroup, candidates: list[Subgroup],
                   derived: Subgroup | None = None) -> list[Subgroup]:
    """
    The members B of ``candidates`` with ``subgroup * B = G`` and
    ``subgroup & B = G'``.
    """
    derived = compute_derived(table) if derived is None else derived
    return [other for other in candidates
            if _is_complement_pair(table, subgroup, other, derived)]


def _is_complement_pair(table: GroupTable, first: Subgroup, second: Subgroup,
                        derived: Subgroup) -> bool:
    meet = first & second
    return meet == derived and len(first) * len(second) // len(meet) == table.order


def abelian_graph(table: GroupTable, target_order: int | None = None,
                  cap: int | None = None) -> AbelianGraph:
    """
    The graph on abelian subgroups of ``target_order`` (the largest order of
    an abelian subgroup by default).

    :raises BudgetExceededError: If the group order exceeds the cap.
    """
    _check_order(table, cap)
    levels = _abelian_levels(table, target_order)
    order = max(levels) if target_order is None else target_order
    vertices = _sorted(levels.get(order, ()))
    derived = compute_derived(table)
    edges = [(i, j) for i, j in itertools.combinations(range(len(vertices)), 2)
             if _is_complement_pair(table, vertices[i], vertices[j], derived)]
    return AbelianGraph(vertices, edges)


def _labels(spec: GroupSpec, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> Subgroup:
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1], c.shape[:-1])
    parts = [np.broadcast_to(x, shape + x.shape[-1:]) for x in (a, b, c)]
    return frozenset(int(x) for x in spec.indexer.index(*parts).ravel())


def canonical_a(spec: GroupSpec) -> Subgroup:
    """
    Labels of the canonical abelian subgroup ``A = {(a, 0, c)}``.
    """
    vectors, central = all_vectors(spec.n, spec.fp), all_vectors(spec.m, spec.fp)
    zeros = np.zeros((1, 1, spec.n), dtype=np.int64)
    return _labels(spec, vectors[:, None, :], zeros, central[None, :, :])


def complement_subgroup(spec: GroupSpec, f) -> Subgroup:
    """
    Labels of ``B_f = {(f(v), v, c)}`` for an ``n x n`` matrix f.
    """
    vectors, central = all_vectors(spec.n, spec.fp), all_vectors(spec.m, spec.fp)
    images = np.mod(vectors @ np.asarray(f, dtype=np.int64).T, spec.p)
    return _labels(spec, images[:, None, :], vectors[:, None, :], central[None, :, :])


def abelian_complement_census(spec: GroupSpec, table: GroupTable | None = None,
                              cap: int | None = None) -> list[Subgroup]:
    """
    Abelian subgroups B of order ``p**(n+m)`` with ``AB = G`` and ``A & B = G'``
    for the canonical A, found by brute force on the table.

    Such a B contains G', so the census only runs over subgroups containing it.

    :param spec: The group.
    :type spec: GroupSpec
    :param table: The table of ``spec`` if already built.
    :type table: GroupTable | None
    :param cap: Largest group order, defaults to the axiom cap.
    :type cap: int | None
    :return: The complements, sorted by their smallest labels.
    :rtype: list[Subgroup]
    :raises BudgetExceededError: If the group order exceeds a cap.
    """
    table = build_table(spec) if table is None else table
    derived = compute_derived(table)
    census = abelian_census(table, spec.p ** (spec.n + spec.m), cap, containing=derived)
    complements = complements_of(table, canonical_a(spec), census.subgroups, derived)
    _logger.debug("%d of %d abelian subgroups complement A", len(complements), census.count)
    return complements
