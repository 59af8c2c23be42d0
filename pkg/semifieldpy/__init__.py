__version__ = "0.1.0"

from .linalg.field import FieldParams

from .bilinear.basemap import AlternatingCoords, BilinearMap
from .bilinear.constructors import (
bar_preimage, field_quotient_map, random_alternating, random_biadditive, random_nonsingular
)
from .bilinear.textio import format_map, parse_map

from .group.builder import GroupSpecBuilder
from .group.checkmode import ExhaustiveCheck, SampledCheck
from .group.spec import GroupElement, GroupSpec

from .complements.phi import (
abelian_complement_report, coset_representatives, middle_nucleus, phi_alpha_apply,
phi_alpha_matrix, symmetric_isotope_search
)

from .isotopy.isotopism import (
Isotopism, IsotopismKind, check_anti_isotopism, check_isotopism, transport
)
from .isotopy.search import search_isotopism
from .isotopy.morphism import (
group_isomorphism_from_anti_isotopism, group_isomorphism_from_isotopism, verify_homomorphism
)
from .isotopy.extraction import ExtractionBasis, extract_maps

from .embed.class_two import Class2Data, embed_class_two, pad, verify_embedding

from .oracle.table import build_table, compare_closed_forms, verify_axioms

from .exceptions import (
BudgetExceededError, DimensionError, IsomorphismError, MapFormatError, NonsingularityError,
SemifieldError
)

__all__ = [
    'FieldParams',
    'AlternatingCoords', 'BilinearMap',
    'bar_preimage', 'field_quotient_map', 'random_alternating', 'random_biadditive',
    'random_nonsingular', 'format_map', 'parse_map',
    'GroupSpecBuilder', 'ExhaustiveCheck', 'SampledCheck', 'GroupElement', 'GroupSpec',
    'abelian_complement_report', 'coset_representatives', 'middle_nucleus', 'phi_alpha_apply',
    'phi_alpha_matrix', 'symmetric_isotope_search',
    'Isotopism', 'IsotopismKind', 'check_anti_isotopism', 'check_isotopism', 'transport',
    'search_isotopism', 'group_isomorphism_from_anti_isotopism',
    'group_isomorphism_from_isotopism', 'verify_homomorphism', 'ExtractionBasis', 'extract_maps',
    'Class2Data', 'embed_class_two', 'pad', 'verify_embedding',
    'build_table', 'compare_closed_forms', 'verify_axioms',
    'BudgetExceededError', 'DimensionError', 'IsomorphismError', 'MapFormatError',
    'NonsingularityError', 'SemifieldError',
]
