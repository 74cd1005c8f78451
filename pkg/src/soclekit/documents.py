"""Line-oriented text documents holding labelled integer vectors.

Format: a ``d=<int>`` header, an optional ``role=<tag>`` header, then one
comma-separated integer vector per line.  ``#`` starts a comment, blank
lines are ignored.  The format is diff-stable: vectors are written in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Antichain, Point

ROLES = ("generators", "socle", "points")


class DocumentError(ValueError):
    """A malformed document, pointing at the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class AntichainDocument:
    dimension: int
    role: str
    vectors: tuple[Point, ...]

    def antichain(self) -> Antichain:
        """The vectors as an antichain; raises NotAntichainError when comparable."""
        return Antichain(self.vectors)


def parse_document(text: str) -> AntichainDocument:
    dimension: int | None = None
    role = "points"
    vectors: list[Point] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dimension is None:
            if not line.startswith("d="):
                raise DocumentError(f"expected 'd=<int>' header, got {line!r}", lineno)
            try:
                dimension = int(line[2:])
            except ValueError:
                raise DocumentError(f"bad dimension {line[2:]!r}", lineno) from None
            if dimension < 1:
                raise DocumentError(f"dimension must be positive, got {dimension}", lineno)
            continue
        if line.startswith("role=") and not vectors:
            role = line[5:].strip()
            if role not in ROLES:
                raise DocumentError(
                    f"unknown role {role!r}; expected one of {', '.join(ROLES)}", lineno
                )
            continue
        parts = line.split(",")
        try:
            vec = tuple(int(p.strip()) for p in parts)
        except ValueError:
            raise DocumentError(f"bad vector {line!r}", lineno) from None
        if len(vec) != dimension:
            raise DocumentError(
                f"vector {line!r} has {len(vec)} coordinates, expected {dimension}",
                lineno,
            )
        vectors.append(vec)
    if dimension is None:
        raise DocumentError("empty document: missing 'd=<int>' header")
    return AntichainDocument(dimension, role, tuple(vectors))


def format_document(doc: AntichainDocument) -> str:
    lines = [f"d={doc.dimension}", f"role={doc.role}"]
    lines.extend(",".join(str(c) for c in v) for v in sorted(doc.vectors))
    return "\n".join(lines) + "\n"


def document_for(ac: Antichain, role: str, dimension: int | None = None) -> AntichainDocument:
    dim = ac.dim if ac.dim is not None else dimension
    if dim is None:
        raise ValueError("cannot determine the dimension of an empty antichain")
    return AntichainDocument(dim, role, ac.points)
