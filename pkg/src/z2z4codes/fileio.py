"""Text format for generator matrices.

Lines starting with '#' are comments.  The first data line holds
"alpha beta"; every following data line is one generator row in the
vector literal syntax (e.g. ``11|20``).
"""

from __future__ import annotations

from .codes import GeneratorMatrix
from .errors import ParseError
from .vectors import AmbientParams, MixedVector


def parse_generator_matrix(text: str) -> GeneratorMatrix:
    """Parse the code file format; errors carry 1-based line numbers."""
    header: tuple[int, int] | None = None
    rows: list[MixedVector] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split(" ")
            if len(parts) != 2:
                raise ParseError("expected header 'alpha beta'", lineno)
            try:
                alpha, beta = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("expected header 'alpha beta'", lineno) from None
            if alpha < 0 or beta < 0:
                raise ParseError("alpha and beta must be nonnegative", lineno)
            header = (alpha, beta)
            continue
        row = MixedVector.parse(line, line=lineno)
        if (row.alpha, row.beta) != header:
            raise ParseError(
                f"row has shape ({row.alpha},{row.beta}), header says {header}", lineno
            )
        rows.append(row)
    if header is None:
        raise ParseError("missing header 'alpha beta'", 1)
    return GeneratorMatrix(AmbientParams(*header), tuple(rows))


def format_generator_matrix(gen: GeneratorMatrix) -> str:
    """Inverse of :func:`parse_generator_matrix` on the data lines."""
    lines = [f"{gen.ambient.alpha} {gen.ambient.beta}"]
    lines.extend(row.literal() for row in gen.rows)
    return "\n".join(lines) + "\n"
