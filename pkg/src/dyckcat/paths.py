"""Steps, paths, pattern occurrences and family membership.

A step is stored as its vertical displacement: ``U = 1``, ``F = 0``,
``D = -1`` and a catastrophe ``D_i`` is ``-i`` for ``i >= 2``. This makes a
step an ``int`` with a little extra behaviour, and a path a tuple of steps,
so paths hash, compare and slice like tuples.
"""

from __future__ import annotations

import enum
import re
from itertools import accumulate
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "Step",
    "UP",
    "DOWN",
    "FLAT",
    "catastrophe",
    "Path",
    "Family",
    "Occurrence",
    "PathSyntaxError",
    "parse_path",
    "format_path",
    "find_occurrences",
    "is_member",
    "as_family",
    "as_path",
]


class PathSyntaxError(ValueError):
    """Raised when a token string is not a valid path."""


class Step(int):
    """A single step, identified with its vertical displacement."""

    __slots__ = ()

    def __new__(cls, value: int) -> Step:
        value = int(value)
        if value > 1:
            raise ValueError(f"no step rises by {value}")
        return super().__new__(cls, value)

    @property
    def tag(self) -> str:
        if self == 1:
            return "up"
        if self == 0:
            return "flat"
        if self == -1:
            return "down"
        return "catastrophe"

    @property
    def drop(self) -> int | None:
        """The ``i`` of ``D_i``, or None for ordinary steps."""
        return -int(self) if self <= -2 else None

    @property
    def displacement(self) -> int:
        return int(self)

    @property
    def token(self) -> str:
        if self == 1:
            return "U"
        if self == 0:
            return "F"
        if self == -1:
            return "D"
        return f"D{-int(self)}"

    def __repr__(self) -> str:
        return self.token

    __str__ = __repr__


UP = Step(1)
FLAT = Step(0)
DOWN = Step(-1)

_STEP_CACHE: dict[int, Step] = {v: Step(v) for v in range(-64, 2)}


def _step(value: int) -> Step:
    s = _STEP_CACHE.get(value)
    return s if s is not None else Step(value)


def catastrophe(drop: int) -> Step:
    """The catastrophe step ``D_drop``; ``drop`` must be at least 2."""
    if drop < 2:
        raise ValueError(f"catastrophe drop must be >= 2, got {drop}")
    return _step(-drop)


class Path(tuple):
    """An immutable sequence of steps starting at the origin.

    Nonnegativity is not enforced here; see :func:`is_member`.
    """

    __slots__ = ()

    def __new__(cls, steps: Iterable[int] = ()) -> Path:
        return super().__new__(cls, map(_step, steps))

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def heights(self) -> tuple[int, ...]:
        """Ordinate after each step."""
        return tuple(accumulate(self, initial=0))[1:]

    @property
    def points(self) -> tuple[int, ...]:
        """Ordinates of all lattice points, the origin included."""
        return tuple(accumulate(self, initial=0))

    @property
    def final_height(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return format_path(self)

    def __repr__(self) -> str:
        return f"Path({format_path(self)!r})"


class Family(str, enum.Enum):
    """Path families, with the meaning of the size index ``n``."""

    DYCK = "dyck"
    MOTZKIN = "motzkin"
    DYCK_MEANDER_CAT = "dyck-meander-cat"
    DYCK_EXCURSION_CAT = "dyck-excursion-cat"
    MOTZKIN_MEANDER_CAT = "motzkin-meander-cat"
    MOTZKIN_EXCURSION_CAT = "motzkin-excursion-cat"
    A = "A"
    A_PRIME = "A-prime"
    A_STAR = "A-star"
    B = "B"
    B_PRIME = "B-prime"

    @property
    def index_kind(self) -> str:
        return "semilength" if self in _SEMILENGTH else "steps"

    def steps_for(self, n: int) -> int:
        """Number of steps of a size-``n`` member."""
        return 2 * n if self in _SEMILENGTH else n

    @property
    def pattern_restricted(self) -> bool:
        return self in _PATTERN_FAMILIES

    def __str__(self) -> str:
        return self.value


_SEMILENGTH = frozenset(
    {Family.DYCK, Family.A, Family.A_PRIME, Family.A_STAR, Family.B, Family.B_PRIME}
)
_PATTERN_FAMILIES = frozenset(
    {Family.A, Family.A_PRIME, Family.A_STAR, Family.B, Family.B_PRIME}
)
_NO_FLAT = frozenset(
    {Family.DYCK, Family.DYCK_MEANDER_CAT, Family.DYCK_EXCURSION_CAT} | _PATTERN_FAMILIES
)
_NO_CAT = frozenset({Family.DYCK, Family.MOTZKIN} | _PATTERN_FAMILIES)
_MEANDERS = frozenset({Family.DYCK_MEANDER_CAT, Family.MOTZKIN_MEANDER_CAT})

FamilyLike = Union[Family, str]
PathLike = Union[Path, str, Sequence[int]]


def as_family(f: FamilyLike) -> Family:
    try:
        return Family(f)
    except ValueError:
        raise ValueError(f"unknown family {f!r}") from None


def as_path(p: PathLike) -> Path:
    if isinstance(p, Path):
        return p
    if isinstance(p, str):
        return parse_path(p)
    return Path(p)


_TOKEN = re.compile(r"\s*(?:(U)|(F)|D(\d*))")


def parse_path(text: str) -> Path:
    """Parse a token string such as ``"UUD3F"`` into a :class:`Path`.

    ``D`` alone is a unit down-step, ``D<i>`` the catastrophe ``D_i`` with
    ``i >= 2``. Whitespace between tokens is ignored.
    """
    steps: list[int] = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PathSyntaxError(f"unexpected character {text[pos]!r} at offset {pos}")
        up, flat, digits = m.groups()
        if up:
            steps.append(1)
        elif flat:
            steps.append(0)
        elif digits:
            if digits.startswith("0"):
                raise PathSyntaxError(f"bad catastrophe drop 'D{digits}' at offset {pos}")
            drop = int(digits)
            if drop < 2:
                raise PathSyntaxError(f"'D{digits}' is not a step; catastrophes need drop >= 2")
            steps.append(-drop)
        else:
            steps.append(-1)
        pos = m.end()
    return Path(steps)


def format_path(p: Iterable[int]) -> str:
    return "".join(_step(s).token for s in p)


class Occurrence(NamedTuple):
    pattern: Path
    start: int
    min_ordinate: int


def find_occurrences(p: PathLike, pattern: PathLike) -> list[Occurrence]:
    """All (possibly overlapping) occurrences of ``pattern`` in ``p``.

    ``min_ordinate`` is the lowest ordinate among the lattice points the
    occurrence spans, both endpoints included.
    """
    p = as_path(p)
    pattern = as_path(pattern)
    if not pattern:
        raise ValueError("pattern must be nonempty")
    pts = p.points
    k = len(pattern)
    return [
        Occurrence(pattern, i, min(pts[i : i + k + 1]))
        for i in range(len(p) - k + 1)
        if p[i : i + k] == pattern
    ]


def _geometry_ok(t: Sequence[int], pts: Sequence[int], flat: bool, cat: bool) -> bool:
    for i, s in enumerate(t):
        if s == 0:
            if not flat:
                return False
        elif s <= -2:
            if not cat or pts[i] != -s:
                return False
        if pts[i + 1] < 0:
            return False
    return True


def _no_high_uuu(t: Sequence[int], pts: Sequence[int], bound: int) -> bool:
    """True if no UUU starts at ordinate ``>= bound``."""
    for i in range(len(t) - 2):
        if t[i] == 1 and t[i + 1] == 1 and t[i + 2] == 1 and pts[i] >= bound:
            return False
    return True


def _no_high_dud(t: Sequence[int], pts: Sequence[int], bound: int) -> bool:
    """True if no DUD has minimal ordinate ``>= bound``."""
    for i in range(len(t) - 2):
        if t[i] == -1 and t[i + 1] == 1 and t[i + 2] == -1 and pts[i] - 1 >= bound:
            return False
    return True


def _member_of(t: Sequence[int], f: Family) -> bool:
    pts = (0, *accumulate(t))
    if not _geometry_ok(t, pts, f not in _NO_FLAT, f not in _NO_CAT):
        return False
    if f not in _MEANDERS and pts[-1] != 0:
        return False
    if f is Family.A:
        return _no_high_uuu(t, pts, 1) and _no_high_dud(t, pts, 1)
    if f is Family.A_STAR:
        if not t:
            return True
        return tuple(t[:3]) == (1, 1, -1) and _no_high_uuu(t, pts, 0) and _no_high_dud(t, pts, 0)
    if f is Family.A_PRIME:
        if not (_no_high_uuu(t, pts, 1) and _no_high_dud(t, pts, 1)):
            return False
        last_uuu = -1
        for i in range(len(t) - 2):
            if t[i] == 1 and t[i + 1] == 1 and t[i + 2] == 1:
                last_uuu = i
        for i in range(len(t) - 1):
            if t[i] == 1 and t[i + 1] == -1 and pts[i] == 0 and last_uuu < i + 2:
                return False
        return True
    if f is Family.B:
        return _no_high_uuu(t, pts, 2)
    if f is Family.B_PRIME:
        if not _no_high_uuu(t, pts, 2):
            return False
        # DU whose valley sits at ordinate 1
        return not any(
            t[i] == -1 and t[i + 1] == 1 and pts[i] == 2 for i in range(len(t) - 1)
        )
    return True


def is_member(p: PathLike, f: FamilyLike) -> bool:
    """Whether ``p`` belongs to family ``f`` (of any size)."""
    return _member_of(as_path(p), as_family(f))
