"""
Multiplication tables of small groups G(alpha, beta) and brute-force
computations on them.

Elements are labelled by :class:`~semifieldpy.group.indexing.ElementIndexer`,
so label 0 is the identity. Nothing here uses the closed formulas for
inverses, commutators or powers.
"""
import dataclasses
import logging

import numpy as np

from semifieldpy.config import resolve_budget, settings
from semifieldpy.exceptions import BudgetExceededError
from semifieldpy.group.checkmode import CheckMode, ExhaustiveCheck, SampledCheck
from semifieldpy.group.spec import GroupSpec
from semifieldpy.linalg.elimination import projective_points
from semifieldpy.parallel import map_chunks

_logger = logging.getLogger(__name__)

LABEL_DTYPE = np.int32


@dataclasses.dataclass(frozen=True, eq=False)
class GroupTable:
    """
    Cayley table of a finite p-group.

    :ivar p: The prime.
    :type p: int
    :ivar table: ``order x order`` array, ``table[i, j]`` the label of the product.
    :type table: np.ndarray
    """
    p: int
    table: np.ndarray

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def inverses(self) -> np.ndarray:
        """
        ``inverses()[g]`` is the label h with ``g h = 1`` (identity has the smallest label).
        """
        return np.argmin(self.table, axis=1)

    def corrupted(self, i: int, j: int, label: int) -> 'GroupTable':
        """
        A copy with one entry replaced, for negative controls.
        """
        table = self.table.copy()
        table[i, j] = label
        return GroupTable(self.p, table)


@dataclasses.dataclass(frozen=True)
class AxiomReport:
    """
    Outcome of :func:`verify_axioms`.

    :ivar holds: Whether all checked laws hold.
    :type holds: bool
    :ivar exhaustive: Whether associativity was checked on every triple.
    :type exhaustive: bool
    :ivar triples_checked: Number of triples examined for associativity.
    :type triples_checked: int
    :ivar failed_law: Name of the first law that failed.
    :type failed_law: str | None
    :ivar witness: Labels of a failing element, pair or triple.
    :type witness: tuple[int, ...] | None
    """
    holds: bool
    exhaustive: bool
    triples_checked: int
    failed_law: str | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def build_table(spec: GroupSpec, cap: int | None = None, jobs: int | None = None) -> GroupTable:
    """
    Builds the multiplication table of G(alpha, beta) from
    :meth:`GroupSpec.multiply_arrays`, one block of rows at a time.

    :param spec: The group.
    :type spec: GroupSpec
    :param cap: Largest admissible order, defaults to the table cap.
    :type cap: int | None
    :param jobs: Worker count.
    :type jobs: int | None
    :return: The table.
    :rtype: GroupTable
    :raises BudgetExceededError: If the order exceeds the cap.
    """
    limit = resolve_budget(cap, "table_cap")
    a, b, c = spec.indexer.all_coordinates(limit)
    order = spec.order
    block = max(1, (1 << 18) // order)
    _logger.debug("building table of order %d", order)

    def rows(chunk: range) -> np.ndarray:
        parts = []
        for start in range(chunk.start, chunk.stop, block):
            stop = min(start + block, chunk.stop)
            left = (a[start:stop, None, :], b[start:stop, None, :], c[start:stop, None, :])
            right = (a[None, :, :], b[None, :, :], c[None, :, :])
            parts.append(spec.indexer.index(*spec.multiply_arrays(left, right))
                         .astype(LABEL_DTYPE))
        return np.concatenate(parts) if parts else np.zeros((0, order), dtype=LABEL_DTYPE)

    return GroupTable(spec.p, np.concatenate(map_chunks(rows, range(order), jobs)))


def default_mode(order: int) -> CheckMode:
    """
    Exhaustive up to the axiom cap, seeded sampling above it.
    """
    active = settings()
    if order <= active.exhaustive_axiom_cap:
        return ExhaustiveCheck()
    return SampledCheck(active.sampled_triples, seed=0)


def verify_axioms(table: GroupTable, mode: CheckMode | None = None) -> AxiomReport:
    """
    Checks the identity law, the Latin-square property (so every element has
    a unique inverse on both sides) and associativity on the triples visited
    by ``mode``.

    :param table: The table.
    :type table: GroupTable
    :param mode: Triples to visit, by default :func:`default_mode`.
    :type mode: CheckMode | None
    :return: The report with a witness on failure.
    :rtype: AxiomReport
    :raises BudgetExceededError: If exhaustive mode is requested above the axiom cap.
    """
    order = table.order
    mode = default_mode(order) if mode is None else mode
    if mode.exhaustive and order > settings().exhaustive_axiom_cap:
        raise BudgetExceededError("exhaustive associativity check", order,
                                  settings().exhaustive_axiom_cap)
    values = table.table
    labels = np.arange(order)
    for law, line in (("left identity", values[0]), ("right identity", values[:, 0])):
        if not np.array_equal(line, labels):
            bad = int(np.flatnonzero(line != labels)[0])
            return AxiomReport(False, mode.exhaustive, 0, law, (bad,))
    for law, sorted_lines in (("rows are permutations", np.sort(values, axis=1)),
                              ("columns are permutations", np.sort(values, axis=0).T)):
        broken = np.flatnonzero((sorted_lines != labels).any(axis=1))
        if broken.size:
            return AxiomReport(False, mode.exhaustive, 0, law, (int(broken[0]),))
    checked = 0
    for x, y, z in mode.batches(order, 3):
        left = values[values[x, y], z]
        right = values[x, values[y, z]]
        mismatch = np.flatnonzero(left != right)
        if mismatch.size:
            k = int(mismatch[0])
            witness = (int(x[k]), int(y[k]), int(z[k]))
            _logger.info("associativity fails at %s", witness)
            return AxiomReport(False, mode.exhaustive, checked + k + 1, "associativity", witness)
        checked += len(x)
    return AxiomReport(True, mode.exhaustive, checked)


@dataclasses.dataclass(frozen=True)
class ClosedFormReport:
    """
    Agreement of the closed formulas of :class:`GroupSpec` with table lookups.

    :ivar inverses: Whether every closed-form inverse matches the table.
    :type inverses: bool
    :ivar commutators: Whether every closed-form commutator matches the table.
    :type commutators: bool
    :ivar powers: Whether ``g**k`` matches the table for ``0 <= k <= p**2``.
    :type powers: bool
    :ivar witness: Labels of the first mismatch, if any.
    :type witness: tuple[int, ...] | None
    """
    inverses: bool
    commutators: bool
    powers: bool
    witness: tuple[int, ...] | None = None

    @property
    def holds(self) -> bool:
        return self.inverses and self.commutators and self.powers

    def __bool__(self) -> bool:
        return self.holds


def compare_closed_forms(spec: GroupSpec, table: GroupTable | None = None,
                         cap: int | None = None) -> ClosedFormReport:
    """
    Compares :meth:`GroupSpec.inverse_arrays`, :meth:`GroupSpec.commutator_arrays`
    and :meth:`GroupSpec.power_arrays` on every element (every pair for
    commutators) against values read off the multiplication table.
    Checks stop at the first mismatch; the checks after it are reported as failed.

    :param spec: The group.
    :type spec: GroupSpec
    :param table: The table of ``spec`` if already built.
    :type table: GroupTable | None
    :param cap: Table cap.
    :type cap: int | None
    :return: The report with the first mismatch as witness.
    :rtype: ClosedFormReport
    :raises BudgetExceededError: If the order exceeds the cap.
    """
    table = build_table(spec, cap) if table is None else table
    coords = spec.indexer.all_coordinates(cap)
    values = table.table
    labels = np.arange(table.order)
    inverses = table.inverses()

    closed_inverses = spec.indexer.index(*spec.inverse_arrays(coords))
    bad = np.flatnonzero(closed_inverses != inverses)
    if bad.size:
        return ClosedFormReport(False, False, False, (int(bad[0]),))

    for g in range(table.order):
        looked_up = values[values[inverses[g], inverses], values[g]]
        single = tuple(part[g] for part in coords)
        closed = spec.indexer.index(*spec.commutator_arrays(single, coords))
        bad = np.flatnonzero(closed != looked_up)
        if bad.size:
            _logger.info("closed-form commutator differs at (%d, %d)", g, int(bad[0]))
            return ClosedFormReport(True, False, False, (g, int(bad[0])))

    powers = np.zeros(table.order, dtype=np.int64)
    for k in range(spec.p ** 2 + 1):
        closed = spec.indexer.index(*spec.power_arrays(coords, k))
        bad = np.flatnonzero(closed != powers)
        if bad.size:
            _logger.info("closed-form power %d differs at %d", k, int(bad[0]))
            return ClosedFormReport(True, True, False, (int(bad[0]), k))
        powers = values[powers, labels]
    return ClosedFormReport(True, True, True)


def generated_subgroup(table: GroupTable, generators) -> frozenset[int]:
    """
    The subgroup generated by ``generators``, by closing under right
    multiplication with the generators.
    """
    gens = np.unique(np.asarray(list(generators), dtype=np.int64))
    members = np.array([0], dtype=np.int64)
    frontier = members
    while frontier.size and gens.size:
        products = np.unique(table.table[np.ix_(frontier, gens)].ravel())
        frontier = np.setdiff1d(products, members, assume_unique=True)
        members = np.union1d(members, frontier)
    return frozenset(int(x) for x in members)


def compute_center(table: GroupTable) -> frozenset[int]:
    """
    Labels z with ``z g = g z`` for all g.
    """
    values = table.table
    return frozenset(int(x) for x in np.flatnonzero((values == values.T).all(axis=1)))


def commutator_labels(table: GroupTable) -> np.ndarray:
    """
    The distinct labels of all commutators ``g^-1 h^-1 g h``.
    """
    values = table.table
    inverses = table.inverses()
    found = set()
    for g in range(table.order):
        left = values[inverses[g], inverses]
        found.update(np.unique(values[left, values[g]]).tolist())
    return np.array(sorted(found), dtype=np.int64)


def compute_derived(table: GroupTable) -> frozenset[int]:
    """
    The subgroup generated by all commutators.
    """
    return generated_subgroup(table, commutator_labels(table))


def element_orders(table: GroupTable) -> np.ndarray:
    """
    The order of every element, by repeated multiplication.
    """
    values = table.table
    labels = np.arange(table.order)
    orders = np.zeros(table.order, dtype=np.int64)
    powers = labels.copy()
    k = 1
    while not orders.all():
        orders[(powers == 0) & (orders == 0)] = k
        powers = values[powers, labels]
        k += 1
    return orders


def compute_exponent(table: GroupTable) -> int:
    """
    Least common multiple of all element orders.
    """
    return int(np.lcm.reduce(element_orders(table)))


def quotient_table(table: GroupTable, labels: np.ndarray) -> GroupTable | None:
    """
    The table of ``G / N`` where ``labels[g]`` is the label of the coset of g.

    :return: The quotient table, or None if the labelling is not compatible
        with multiplication (N is not a normal subgroup).
    """
    classes, representatives = np.unique(labels, return_index=True)
    if not np.array_equal(classes, np.arange(classes.size)):
        raise ValueError("coset labels must be 0, 1, ..., k-1")
    values = table.table
    quotient = labels[values[np.ix_(representatives, representatives)]]
    for g in range(table.order):
        if not np.array_equal(labels[values[g]], quotient[labels[g], labels]):
            return None
    return GroupTable(table.p, quotient.astype(LABEL_DTYPE))


def is_extraspecial(table: GroupTable) -> bool:
    """
    Whether the center equals the derived subgroup and has order p.
    """
    center = compute_center(table)
    return len(center) == table.p and center == compute_derived(table)


def extraspecial_quotient_check(spec: GroupSpec, table: GroupTable | None = None,
                                cap: int | None = None) -> bool:
    """
    Whether ``G / N`` is extraspecial for every hyperplane N of the center
    ``{(0, 0, c)}``.

    A hyperplane is the kernel of a functional ``lambda`` on W, taken up to
    scaling; the coset of ``(a, b, c)`` is labelled by ``(a, b, lambda(c))``.

    :param spec: The group.
    :type spec: GroupSpec
    :param table: The table of ``spec`` if already built.
    :type table: GroupTable | None
    :param cap: Table cap.
    :type cap: int | None
    :return: True if every quotient is extraspecial.
    :rtype: bool
    :raises BudgetExceededError: If the order exceeds the cap.
    """
    table = build_table(spec, cap) if table is None else table
    a, b, c = spec.indexer.all_coordinates(cap)
    p = spec.p
    quotient_powers = p ** np.arange(2 * spec.n, -1, -1)
    for functional in projective_points(spec.m, spec.fp):
        reduced = np.mod(c @ functional, p)
        digits = np.concatenate([a, b, reduced[:, None]], axis=1)
        quotient = quotient_table(table, digits @ quotient_powers)
        if quotient is None or not is_extraspecial(quotient):
            _logger.info("quotient by kernel of %s is not extraspecial", functional.tolist())
            return False
    return True
