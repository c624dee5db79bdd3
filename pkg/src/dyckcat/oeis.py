"""Cross-checking library counts against OEIS b-files."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path as FsPath

from .enumeration import count_dp
from .paths import Family

__all__ = ["BFileError", "SEQUENCES", "read_bfile", "Alignment", "align", "check_sequence"]

MAX_SHIFT = 5

# OEIS id -> families whose counts the sequence should list
SEQUENCES: dict[str, tuple[Family, ...]] = {
    "A274115": (Family.DYCK_MEANDER_CAT,),
    "A224747": (Family.DYCK_EXCURSION_CAT,),
    "A054391": (Family.MOTZKIN_EXCURSION_CAT, Family.MOTZKIN_MEANDER_CAT),
}


class BFileError(ValueError):
    pass


def read_bfile(path: str | FsPath) -> dict[int, int]:
    """Parse ``index value`` lines; blank lines and ``#`` comments are skipped."""
    try:
        text = FsPath(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise BFileError(f"cannot read b-file {path}: {exc}") from exc
    values: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"{path}:{lineno}: expected 'index value', got {line!r}")
        try:
            values[int(parts[0])] = int(parts[1])
        except ValueError:
            raise BFileError(f"{path}:{lineno}: non-integer entry {line!r}") from None
    return values


@dataclass(frozen=True)
class Alignment:
    offset: int  # b-file index = our n + offset
    compared: int
    first_mismatch: int | None  # our n

    @property
    def ok(self) -> bool:
        return self.compared > 0 and self.first_mismatch is None


def align(ours: list[int], bfile: dict[int, int], max_shift: int = MAX_SHIFT) -> Alignment | None:
    """Pick the index offset under which the most values agree.

    Ties go to the offset of smallest magnitude. Returns None when no offset
    gives any overlap.
    """
    best_matches = -1
    best_alignment = None
    for d in sorted(range(-max_shift, max_shift + 1), key=lambda d: (abs(d), -d)):
        overlap = [n for n in range(len(ours)) if n + d in bfile]
        if not overlap:
            continue
        matches = sum(1 for n in overlap if ours[n] == bfile[n + d])
        if matches > best_matches:
            mismatch = next((n for n in overlap if ours[n] != bfile[n + d]), None)
            best_matches = matches
            best_alignment = Alignment(d, len(overlap), mismatch)
    return best_alignment


def check_sequence(seq: str, bfile: dict[int, int], max_n: int = 30) -> list[tuple[Family, Alignment | None]]:
    try:
        families = SEQUENCES[seq]
    except KeyError:
        raise ValueError(f"unknown sequence {seq!r}; choose from {', '.join(SEQUENCES)}") from None
    out = []
    for f in families:
        ours = [count_dp(f, n) for n in range(max_n + 1)]
        out.append((f, align(ours, bfile)))
    return out
