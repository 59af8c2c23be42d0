"""
Bounded search for isotopisms and anti-isotopisms.

Pairs ``(a, c)`` run through GL(n, p) x GL(m, p) in lexicographic order
(a outer, c inner). For each pair the basis equations are linear in b, so
every column ``b e_j`` is solved for directly instead of enumerated.
"""
import functools
import logging
from itertools import islice

import numpy as np

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.config import resolve_budget, settings
from semifieldpy.exceptions import DimensionError
from semifieldpy.isotopy.isotopism import (Isotopism, IsotopismKind, check_witness)
from semifieldpy.linalg.elimination import (enumerate_invertible, gl_order, is_invertible, rank,
                                            solve)
from semifieldpy.linalg.field import DTYPE, FpMatrix
from semifieldpy.outcome import SearchOutcome, SearchStatus
from semifieldpy.parallel import map_chunks

_logger = logging.getLogger(__name__)

# values of a handed to the workers per round
BATCH_PER_JOB = 64


def _system_matrix(alpha2: BilinearMap, a: FpMatrix, kind: IsotopismKind) -> np.ndarray:
    """
    Rows indexed by ``(i, k)`` of the linear map ``x -> alpha2(a e_i, x)_k``
    (or ``alpha2(x, a e_i)_k`` for anti-isotopisms).
    """
    slices = alpha2.slices
    if kind is IsotopismKind.ANTI_ISOTOPISM:
        rows = np.einsum("kjl,li->ikj", slices, a)
    else:
        rows = np.einsum("li,klj->ikj", a, slices)
    return np.mod(rows.reshape(alpha2.n * alpha2.m, alpha2.n), alpha2.p)


def _solve_b(alpha1: BilinearMap, c: FpMatrix, system: np.ndarray) -> FpMatrix | None:
    """
    Solves the basis equations for b given c and the system built from a;
    None if some column has no solution or the solution is singular.
    """
    fp = alpha1.fp
    # rhs[i, k, j] = (c alpha1(e_i, e_j))_k
    rhs = np.mod(np.einsum("kl,lij->ikj", c, alpha1.slices), fp.p)
    columns = []
    for j in range(alpha1.n):
        column = solve(system, rhs[:, :, j].reshape(-1), fp)
        if column is None:
            return None
        columns.append(column)
    b = np.array(columns, dtype=DTYPE).T
    return b if is_invertible(b, fp) else None


def search_isotopism(alpha1: BilinearMap, alpha2: BilinearMap,
                     kind: IsotopismKind = IsotopismKind.ISOTOPISM,
                     budget: int | None = None, jobs: int | None = None) \
        -> SearchOutcome[Isotopism]:
    """
    Searches for a witness of the given kind from alpha1 to alpha2.

    The first verified witness in enumeration order is returned, also when the
    pair space is split across workers. NONE is only reported when the whole
    space was searched and every b was uniquely determined; otherwise a failed
    search is INCONCLUSIVE.

    :param alpha1: Source map.
    :type alpha1: BilinearMap
    :param alpha2: Target map.
    :type alpha2: BilinearMap
    :param kind: Isotopism or anti-isotopism.
    :type kind: IsotopismKind
    :param budget: Maximum number of ``(a, c)`` pairs, defaults to the isotopism budget.
    :type budget: int | None
    :param jobs: Worker count.
    :type jobs: int | None
    :return: The outcome; ``examined`` counts visited pairs.
    :rtype: SearchOutcome[Isotopism]
    :raises DimensionError: If the maps have different dimensions.
    """
    if alpha1.dims != alpha2.dims:
        raise DimensionError(f"maps have dimensions {alpha1.dims} and {alpha2.dims}")
    fp, n, m = alpha1.fp, alpha1.n, alpha1.m
    limit = resolve_budget(budget, "isotopism_budget")
    gl_n, gl_m = gl_order(n, fp.p), gl_order(m, fp.p)
    total = gl_n * gl_m
    outer = min(gl_n, limit // gl_m)
    _logger.debug("isotopism search over %d of %d pairs (budget %d)", outer * gl_m, total, limit)

    determined = rank(_system_matrix(alpha2, fp.identity(n), kind), fp) == n
    if not determined:
        _logger.info("target map is singular; solutions for b are not unique")
    outputs = list(enumerate_invertible(m, fp))
    workers = settings().jobs if jobs is None else jobs
    candidates = islice(enumerate_invertible(n, fp), outer)
    offset = 0

    def first_hit(chunk: range, batch: list[FpMatrix], start: int) \
            -> tuple[int, Isotopism] | None:
        for index in chunk:
            a = batch[index]
            system = _system_matrix(alpha2, a, kind)
            for position, c in enumerate(outputs):
                b = _solve_b(alpha1, c, system)
                if b is None:
                    continue
                witness = Isotopism(fp, a, b, c, kind)
                if check_witness(alpha1, alpha2, witness):
                    return (start + index) * gl_m + position, witness
        return None

    while batch := list(islice(candidates, max(1, workers) * BATCH_PER_JOB)):
        worker = functools.partial(first_hit, batch=batch, start=offset)
        hits = [hit for hit in map_chunks(worker, range(len(batch)), workers)
                if hit is not None]
        if hits:
            position, witness = min(hits, key=lambda hit: hit[0])
            _logger.info("found %s after %d pairs", kind.value, position + 1)
            return SearchOutcome(SearchStatus.FOUND, witness, position + 1)
        offset += len(batch)

    examined = offset * gl_m
    if examined == total and determined:
        _logger.info("no %s exists (%d pairs searched)", kind.value, examined)
        return SearchOutcome(SearchStatus.NONE, None, examined)
    _logger.info("%s search inconclusive after %d of %d pairs", kind.value, examined, total)
    return SearchOutcome(SearchStatus.INCONCLUSIVE, None, examined)
