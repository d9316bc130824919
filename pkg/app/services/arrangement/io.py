"""Point files: one point per line, three integers, '#' comments."""

from pathlib import Path

from app.services.algebra import PrimeField
from app.services.arrangement.exceptions import ArrangementError, PointFileError
from app.services.arrangement.points import Arrangement, PointP2


def parse_points(text: str, field: PrimeField) -> Arrangement:
    """Parse point-file text; coordinates are reduced mod p and normalized."""
    points: list[PointP2] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise PointFileError(f"expected 3 integers, found {len(parts)} fields", line=number)
        try:
            coords = [int(part) for part in parts]
        except ValueError as e:
            raise PointFileError(f"not an integer in {line!r}", line=number) from e
        try:
            points.append(PointP2.normalized(coords, field))
        except ArrangementError as e:
            raise PointFileError(str(e), line=number) from e
    if not points:
        raise PointFileError("no points found")
    # Duplicate detection happens in Arrangement and keeps its own error type
    return Arrangement(points, field)


def read_points(path: str | Path, field: PrimeField) -> Arrangement:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise PointFileError(f"cannot read {path}: {e}") from e
    return parse_points(text, field)


def format_points(arrangement: Arrangement, seed: int | None = None) -> str:
    header = f"# envelope-lab points n={arrangement.n} prime={arrangement.field.prime}"
    if seed is not None:
        header += f" seed={seed}"
    lines = [header] + [" ".join(str(c) for c in point.coords) for point in arrangement]
    return "\n".join(lines) + "\n"


def write_points(path: str | Path, arrangement: Arrangement, seed: int | None = None) -> Path:
    """Write normalized coordinates with a header echoing prime and seed."""
    path = Path(path)
    try:
        path.write_text(format_points(arrangement, seed), encoding="utf-8")
    except OSError as e:
        raise PointFileError(f"cannot write {path}: {e}") from e
    return path
