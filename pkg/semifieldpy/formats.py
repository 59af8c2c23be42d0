"""
Text formats built on the map format: group specs, isotopism witnesses and
class-two data.

A group spec file holds two map sections headed ``[alpha]`` and ``[beta]``.
A witness file starts with ``kind=<isotopism|anti-isotopism> p=<p>`` and holds
square matrix sections ``[a]``, ``[b]`` and ``[c]``. A class-two file starts
with ``kind=class2`` followed by one alternating map.
"""
import re

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.bilinear.textio import (NumberedLine, format_map, format_matrix,
                                         numbered_lines, parse_map_lines, parse_matrix_block,
                                         split_blocks)
from semifieldpy.embed.class_two import Class2Data
from semifieldpy.exceptions import MapFormatError
from semifieldpy.group.spec import GroupSpec
from semifieldpy.isotopy.isotopism import Isotopism, IsotopismKind
from semifieldpy.linalg.field import FieldParams

SECTION_PATTERN = re.compile(r"^\[(\w+)\]$")
WITNESS_HEADER = re.compile(r"^kind=(isotopism|anti-isotopism)\s+p=(\d+)$")
CLASS2_HEADER = "kind=class2"


def split_sections(lines: list[NumberedLine]) \
        -> tuple[list[NumberedLine], dict[str, list[NumberedLine]]]:
    """
    Splits numbered lines at ``[name]`` headers.

    :return: The lines before the first header and the lines of each section.
    :raises MapFormatError: If a section name repeats.
    """
    preamble: list[NumberedLine] = []
    sections: dict[str, list[NumberedLine]] = {}
    current = preamble
    for number, line in lines:
        match = SECTION_PATTERN.match(line)
        if match is None:
            current.append((number, line))
            continue
        name = match.group(1)
        if name in sections:
            raise MapFormatError(number, f"section [{name}] appears twice")
        current = sections[name] = []
    return preamble, sections


def _require_sections(lines: list[NumberedLine], sections: dict[str, list[NumberedLine]],
                      names: tuple[str, ...]) -> None:
    last = lines[-1][0] if lines else 1
    for name in names:
        if name not in sections:
            raise MapFormatError(last, f"missing section [{name}]")


def _only_blank(lines: list[NumberedLine]) -> bool:
    return all(not line for _, line in lines)


def read_alpha_beta(text: str) -> tuple[BilinearMap, BilinearMap | None]:
    """
    Reads a group spec file, or a plain map file as alpha with no beta.
    """
    lines = numbered_lines(text)
    preamble, sections = split_sections(lines)
    if not sections:
        return parse_map_lines(lines), None
    if not _only_blank(preamble):
        raise MapFormatError(next(n for n, line in preamble if line), "text before [alpha]")
    _require_sections(lines, sections, ("alpha",))
    alpha = parse_map_lines(sections["alpha"])
    beta = parse_map_lines(sections["beta"]) if "beta" in sections else None
    return alpha, beta


def parse_group_spec(text: str, validate: bool = True) -> GroupSpec:
    """
    Parses a group spec file.

    :raises MapFormatError: If the text is malformed.
    :raises NonsingularityError: If ``validate`` and alpha is not nonsingular.
    """
    alpha, beta = read_alpha_beta(text)
    return GroupSpec(alpha, beta) if validate else GroupSpec.unchecked(alpha, beta)


def format_group_spec(spec: GroupSpec) -> str:
    return f"[alpha]\n{format_map(spec.alpha)}\n[beta]\n{format_map(spec.beta)}"


def parse_witness(text: str) -> Isotopism:
    """
    Parses a witness file.

    :raises MapFormatError: If the text is malformed or a matrix is singular.
    """
    lines = numbered_lines(text)
    preamble, sections = split_sections(lines)
    header = [(number, line) for number, line in preamble if line]
    if len(header) != 1 or WITNESS_HEADER.match(header[0][1]) is None:
        number = header[0][0] if header else 1
        raise MapFormatError(number, "expected header 'kind=<isotopism|anti-isotopism> p=<p>'")
    number, line = header[0]
    kind_name, prime = WITNESS_HEADER.match(line).groups()
    try:
        fp = FieldParams(int(prime))
    except ValueError as exc:
        raise MapFormatError(number, str(exc)) from exc
    _require_sections(lines, sections, ("a", "b", "c"))
    matrices = {}
    for name in ("a", "b", "c"):
        blocks = split_blocks(sections[name])
        if len(blocks) != 1:
            raise MapFormatError(sections[name][0][0] if sections[name] else number,
                                 f"section [{name}] must hold exactly one matrix")
        size = len(blocks[0])
        matrices[name] = parse_matrix_block(blocks[0], size, size, fp.p)
    try:
        return Isotopism(fp, matrices["a"], matrices["b"], matrices["c"],
                         IsotopismKind(kind_name))
    except ValueError as exc:
        raise MapFormatError(number, str(exc)) from exc


def format_witness(iso: Isotopism) -> str:
    parts = [f"kind={iso.kind.value} p={iso.fp.p}\n"]
    for name in ("a", "b", "c"):
        parts.append(f"[{name}]\n{format_matrix(getattr(iso, name))}")
    return "".join(parts)


def parse_class2(text: str) -> Class2Data:
    """
    Parses a class-two data file.

    :raises MapFormatError: If the header is missing, the map is malformed, or
        gamma is not alternating or p = 2.
    """
    lines = numbered_lines(text)
    content = [(number, line) for number, line in lines if line]
    if not content or content[0][1] != CLASS2_HEADER:
        raise MapFormatError(content[0][0] if content else 1, f"expected '{CLASS2_HEADER}'")
    number = content[0][0]
    rest = lines[[n for n, _ in lines].index(number) + 1:]
    gamma = parse_map_lines(rest)
    try:
        return Class2Data(gamma)
    except ValueError as exc:
        raise MapFormatError(number, str(exc)) from exc


def format_class2(data: Class2Data) -> str:
    return f"{CLASS2_HEADER}\n{format_map(data.gamma)}"
