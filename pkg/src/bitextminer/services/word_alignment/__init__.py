"""Word-alignment symmetrization and reordering orientation utilities."""

from .models import Orientation, PhrasePair, Point, WordAlignmentSet
from .orientation import classify_orientation, word_orientations
from .pharaoh import (
    format_pharaoh_line,
    parse_pharaoh_line,
    read_pharaoh,
    symmetrize_files,
    write_pharaoh,
)
from .symmetrize import GDFA_METHOD, symmetrize_gdfa

__all__ = [
    "GDFA_METHOD",
    "Orientation",
    "PhrasePair",
    "Point",
    "WordAlignmentSet",
    "classify_orientation",
    "format_pharaoh_line",
    "parse_pharaoh_line",
    "read_pharaoh",
    "symmetrize_files",
    "symmetrize_gdfa",
    "word_orientations",
    "write_pharaoh",
]
