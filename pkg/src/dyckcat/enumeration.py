"""Exhaustive generation and dynamic-programming counts for path families."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterator

from .paths import Family, FamilyLike, Path, PathLike, as_family, as_path, format_path, is_member
from .paths import _member_of

__all__ = [
    "CountTable",
    "enumerate_family",
    "iter_family",
    "count_dp",
    "count_table",
    "duu_positions",
    "duu_classes",
    "duu_class_check",
]

_STEP_RULES = {
    # family: (flat allowed, catastrophes allowed, must end on the axis)
    Family.DYCK: (False, False, True),
    Family.MOTZKIN: (True, False, True),
    Family.DYCK_MEANDER_CAT: (False, True, False),
    Family.DYCK_EXCURSION_CAT: (False, True, True),
    Family.MOTZKIN_MEANDER_CAT: (True, True, False),
    Family.MOTZKIN_EXCURSION_CAT: (True, True, True),
}


@dataclass(frozen=True)
class CountTable:
    family: Family
    max_n: int
    counts: tuple[int, ...]


def _completions(length: int, flat: bool, cat: bool, excursion: bool) -> list[list[int]]:
    """``table[r][h]``: number of valid continuations of ``r`` steps from ordinate ``h``.

    Ordinates above ``length`` are never reachable and are not stored.
    """
    top = length + 1
    table = [[1 if (not excursion or h == 0) else 0 for h in range(top + 1)]]
    for _ in range(length):
        prev = table[-1]
        row = [0] * (top + 1)
        for h in range(top):
            total = prev[h + 1]
            if h >= 1:
                total += prev[h - 1]
            if flat:
                total += prev[h]
            if cat and h >= 2:
                total += prev[0]
            row[h] = total
        table.append(row)
    return table


def _dfs(length: int, options: Callable[[list[int], int, int], list[int]]) -> Iterator[tuple[int, ...]]:
    """Depth-first walk over step sequences; ``options(prefix, height, remaining)``."""
    if length == 0:
        yield ()
        return
    buf: list[int] = []
    hs = [0]
    stack = [iter(options(buf, 0, length))]
    while stack:
        s = next(stack[-1], None)
        if s is None:
            stack.pop()
            if buf:
                buf.pop()
                hs.pop()
            continue
        buf.append(s)
        hs.append(hs[-1] + s)
        if len(buf) == length:
            yield tuple(buf)
            buf.pop()
            hs.pop()
        else:
            stack.append(iter(options(buf, hs[-1], length - len(buf))))


def _step_family_walk(f: Family, length: int) -> Iterator[tuple[int, ...]]:
    flat, cat, excursion = _STEP_RULES[f]
    table = _completions(length, flat, cat, excursion)

    def options(buf: list[int], h: int, r: int) -> list[int]:
        nxt = table[r - 1]
        out = []
        if nxt[h + 1]:
            out.append(1)
        if flat and nxt[h]:
            out.append(0)
        if h >= 1 and nxt[h - 1]:
            out.append(-1)
        if cat and h >= 2 and nxt[0]:
            out.append(-h)
        return out

    return _dfs(length, options)


def _pattern_family_walk(f: Family, semilength: int) -> Iterator[tuple[int, ...]]:
    # Local pattern constraints are checked as each step is appended.
    uuu_bound = {Family.A: 1, Family.A_PRIME: 1, Family.A_STAR: 0, Family.B: 2, Family.B_PRIME: 2}[f]
    dud_bound = {Family.A: 1, Family.A_PRIME: 1, Family.A_STAR: 0}.get(f)
    forbid_du_at_one = f is Family.B_PRIME
    star_prefix = (1, 1, -1) if f is Family.A_STAR else ()

    def options(buf: list[int], h: int, r: int) -> list[int]:
        i = len(buf)
        out = []
        for s in (1, -1):
            nh = h + s
            if nh < 0 or nh > r - 1:
                continue
            if i < len(star_prefix) and s != star_prefix[i]:
                continue
            if i >= 2 and buf[-1] == 1 and buf[-2] == 1 and s == 1 and h - 2 >= uuu_bound:
                continue
            if (
                dud_bound is not None
                and i >= 2
                and s == -1
                and buf[-1] == 1
                and buf[-2] == -1
                and h - 1 >= dud_bound
            ):
                continue
            if forbid_du_at_one and s == 1 and i >= 1 and buf[-1] == -1 and h == 1:
                continue
            out.append(s)
        return out

    walk = _dfs(2 * semilength, options)
    if f is Family.A_PRIME:
        return (t for t in walk if _member_of(t, f))
    return walk


def _raw_walk(f: Family, n: int) -> Iterator[tuple[int, ...]]:
    if n < 0:
        raise ValueError("size index must be nonnegative")
    if f.pattern_restricted:
        return _pattern_family_walk(f, n)
    return _step_family_walk(f, f.steps_for(n))


def iter_family(f: FamilyLike, n: int) -> Iterator[Path]:
    """Lazily yield every member of size ``n`` in depth-first order (unsorted)."""
    return map(Path, _raw_walk(as_family(f), n))


def enumerate_family(f: FamilyLike, n: int) -> list[Path]:
    """All members of family ``f`` of size ``n``, sorted by token string.

    ``n`` counts steps or semilength according to ``Family.index_kind``.
    """
    return sorted(iter_family(f, n), key=format_path)


def count_dp(f: FamilyLike, n: int) -> int:
    """Number of size-``n`` members of a step-defined family, by layered counting."""
    f = as_family(f)
    if f not in _STEP_RULES:
        raise ValueError(f"count_dp does not support the pattern-restricted family {f.value!r}")
    if n < 0:
        raise ValueError("size index must be nonnegative")
    flat, cat, excursion = _STEP_RULES[f]
    return _completions(f.steps_for(n), flat, cat, excursion)[-1][0]


def count_table(f: FamilyLike, max_n: int, method: str = "dp") -> CountTable:
    f = as_family(f)
    if method == "dp":
        counts = tuple(count_dp(f, n) for n in range(max_n + 1))
    elif method == "enum":
        counts = tuple(sum(1 for _ in _raw_walk(f, n)) for n in range(max_n + 1))
    else:
        raise ValueError(f"unknown counting method {method!r}")
    return CountTable(f, max_n, counts)


def duu_positions(p: PathLike) -> list[int]:
    """Start indices of the DUU factors of a Dyck path."""
    p = as_path(p)
    return [i for i in range(len(p) - 2) if p[i] == -1 and p[i + 1] == 1 and p[i + 2] == 1]


def duu_classes(n: int) -> dict[tuple[int, ...], list[Path]]:
    """Semilength-``n`` Dyck paths grouped by their DUU positions."""
    classes: dict[tuple[int, ...], list[Path]] = defaultdict(list)
    for p in enumerate_family(Family.DYCK, n):
        classes[tuple(duu_positions(p))].append(p)
    return dict(classes)


def duu_class_check(n: int) -> bool:
    """True iff every DUU-position class of ``D_n`` holds exactly one path of ``A_n``."""
    return all(
        sum(1 for p in members if is_member(p, Family.A)) == 1
        for members in duu_classes(n).values()
    )
