"""
Text format of bilinear maps.

Line 1 is ``p=<p> n=<n> m=<m>``; it is followed by m blocks separated by
blank lines, each block n lines of n space-separated integers in ``[0, p)``.
Lines starting with ``#`` are comments. The canonical form has no comments
and ends with a newline.
"""
import re

import numpy as np

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.exceptions import MapFormatError
from semifieldpy.linalg.field import DTYPE, FieldParams

HEADER_PATTERN = re.compile(r"^p=(\d+)\s+n=(\d+)\s+m=(\d+)$")

NumberedLine = tuple[int, str]


def numbered_lines(text: str, first_line: int = 1) -> list[NumberedLine]:
    """
    Splits text into ``(line_number, stripped_line)`` pairs, dropping comments.
    """
    result = []
    for offset, raw in enumerate(text.splitlines()):
        line = raw.strip()
        if line.startswith("#"):
            continue
        result.append((first_line + offset, line))
    return result


def split_blocks(lines: list[NumberedLine]) -> list[list[NumberedLine]]:
    """
    Groups consecutive non-blank lines into blocks.
    """
    blocks: list[list[NumberedLine]] = []
    current: list[NumberedLine] = []
    for number, line in lines:
        if line:
            current.append((number, line))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def parse_row(number: int, line: str, width: int, p: int) -> list[int]:
    """
    Parses one matrix row of ``width`` integers in ``[0, p)``.

    :raises MapFormatError: On a wrong entry count, non-integer or out-of-range entry.
    """
    fields = line.split()
    if len(fields) != width:
        raise MapFormatError(number, f"expected {width} entries, found {len(fields)}")
    row = []
    for field in fields:
        if not re.fullmatch(r"\d+", field):
            raise MapFormatError(number, f"entry {field!r} is not a non-negative integer")
        value = int(field)
        if value >= p:
            raise MapFormatError(number, f"entry {value} is not in [0, {p})")
        row.append(value)
    return row


def parse_matrix_block(block: list[NumberedLine], rows: int, cols: int, p: int) -> np.ndarray:
    """
    Parses a block of ``rows`` lines into an integer matrix.
    """
    if len(block) != rows:
        line = block[0][0] if block else 0
        raise MapFormatError(line, f"expected a block of {rows} rows, found {len(block)}")
    return np.array([parse_row(number, line, cols, p) for number, line in block], dtype=DTYPE)


def parse_header(number: int, line: str) -> tuple[int, int, int]:
    """
    Parses the ``p=<p> n=<n> m=<m>`` header line.
    """
    match = HEADER_PATTERN.match(line)
    if match is None:
        raise MapFormatError(number, "expected header 'p=<p> n=<n> m=<m>'")
    p, n, m = (int(group) for group in match.groups())
    if n <= 0 or m <= 0:
        raise MapFormatError(number, "n and m must be greater than 0")
    return p, n, m


def parse_map_lines(lines: list[NumberedLine]) -> BilinearMap:
    """
    Parses an already numbered map section (header plus blocks).
    """
    content = [(number, line) for number, line in lines if line]
    if not content:
        raise MapFormatError(lines[0][0] if lines else 0, "empty map")
    header_number, header = content[0]
    p, n, m = parse_header(header_number, header)
    try:
        fp = FieldParams(p)
    except ValueError as exc:
        raise MapFormatError(header_number, str(exc)) from exc
    body = lines[[number for number, _ in lines].index(header_number) + 1:]
    blocks = split_blocks(body)
    if len(blocks) != m:
        line = blocks[-1][-1][0] if blocks else header_number
        raise MapFormatError(line, f"expected {m} slice blocks, found {len(blocks)}")
    return BilinearMap(fp, np.stack([parse_matrix_block(block, n, n, p) for block in blocks]))


def parse_map(text: str, first_line: int = 1) -> BilinearMap:
    """
    Parses a map file.

    :param text: The file contents.
    :type text: str
    :param first_line: Line number of the first line, for error messages.
    :type first_line: int
    :return: The parsed map.
    :rtype: BilinearMap
    :raises MapFormatError: If the text is malformed; the error carries the line number.
    """
    return parse_map_lines(numbered_lines(text, first_line))


def format_matrix(matrix) -> str:
    """
    Rows of space-separated integers, each followed by a newline.
    """
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in np.asarray(matrix))


def format_map(alpha: BilinearMap) -> str:
    """
    Canonical serialization of a map.
    """
    header = f"p={alpha.p} n={alpha.n} m={alpha.m}\n"
    return header + "\n".join(format_matrix(slice_) for slice_ in alpha.slices)
