"""Exhaustive checks of the bijection theorems, size by size."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .bijections import _phi, _phi_inv, _psi, _psi_inv
from .enumeration import _raw_walk, duu_classes
from .paths import Family, _member_of

__all__ = ["NRecord", "VerificationReport", "THEOREMS", "CEILINGS", "verify", "verify_n"]


@dataclass
class NRecord:
    n: int
    lhs_count: int
    rhs_count: int
    sets_equal: bool
    round_trips_ok: bool

    @property
    def ok(self) -> bool:
        return self.sets_equal and self.round_trips_ok and self.lhs_count == self.rhs_count


@dataclass
class VerificationReport:
    theorem: str
    max_n: int
    per_n: list[NRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.per_n)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "max_n": self.max_n,
            "per_n": [
                {**asdict(r), "lhs_count": str(r.lhs_count), "rhs_count": str(r.rhs_count)}
                for r in self.per_n
            ],
            "pass": self.passed,
        }


def _key(t: Iterable[int]) -> bytes:
    return bytes(s + 128 for s in t)


def _safe(f: Callable, t):
    if t is None:
        return None
    try:
        return f(t)
    except ValueError:
        return None


def _image_check(
    domain: Iterable[tuple[int, ...]],
    target: Iterable[tuple[int, ...]],
    forward: Callable,
    backward: Callable,
) -> tuple[int, int, bool, bool]:
    """Compare ``forward(domain)`` with ``target`` and run both round trips."""
    images: set[bytes] = set()
    lhs = 0
    trips = True
    for t in domain:
        lhs += 1
        img = forward(t)
        images.add(_key(img))
        if trips and _safe(backward, img) != t:
            trips = False
    injective = len(images) == lhs
    rhs = 0
    covered = True
    for q in target:
        rhs += 1
        if _key(q) not in images:
            covered = False
        elif trips and _safe(forward, _safe(backward, q)) != q:
            trips = False
    return lhs, rhs, injective and covered and rhs == len(images), trips


def _thm1(n: int) -> NRecord:
    lhs, rhs, eq, trips = _image_check(
        _raw_walk(Family.DYCK_MEANDER_CAT, n), _raw_walk(Family.A, n), _phi, _phi_inv
    )
    return NRecord(n, lhs, rhs, eq, trips)


def _thm1_star(n: int) -> NRecord:
    lhs, rhs, eq, trips = _image_check(
        _raw_walk(Family.DYCK, n), _raw_walk(Family.A_STAR, 2 * n), _phi, _phi_inv
    )
    return NRecord(n, lhs, rhs, eq, trips)


def _thm2(n: int) -> NRecord:
    lhs, rhs, eq, trips = _image_check(
        _raw_walk(Family.DYCK_EXCURSION_CAT, n), _raw_walk(Family.A_PRIME, n), _phi, _phi_inv
    )
    return NRecord(n, lhs, rhs, eq, trips)


def _thm3(n: int) -> NRecord:
    lhs, rhs, eq, trips = _image_check(
        _raw_walk(Family.MOTZKIN_MEANDER_CAT, n), _raw_walk(Family.B, n + 1), _psi, _psi_inv
    )
    return NRecord(n, lhs, rhs, eq, trips)


def _thm3_motzkin(n: int) -> NRecord:
    lhs, rhs, eq, trips = _image_check(
        _raw_walk(Family.MOTZKIN, n), _raw_walk(Family.B_PRIME, n + 1), _psi, _psi_inv
    )
    return NRecord(n, lhs, rhs, eq, trips)


def _cor1(n: int) -> NRecord:
    ends_ud = (q for q in _raw_walk(Family.B, n + 1) if q[-2:] == (1, -1))
    _, _, eq_ud, trips_ud = _image_check(
        _raw_walk(Family.MOTZKIN_EXCURSION_CAT, n), ends_ud, _psi, _psi_inv
    )

    def to_b(t):
        return _psi(t)[:-2]

    def from_b(q):
        return _psi_inv(q + (1, -1))

    lhs, rhs, eq, trips = _image_check(
        _raw_walk(Family.MOTZKIN_EXCURSION_CAT, n), _raw_walk(Family.B, n), to_b, from_b
    )
    return NRecord(n, lhs, rhs, eq and eq_ud, trips and trips_ud)


def _remark1(n: int) -> NRecord:
    classes = duu_classes(n)
    per_class = [sum(1 for p in members if _member_of(p, Family.A)) for members in classes.values()]
    a_count = sum(1 for _ in _raw_walk(Family.A, n))
    # every A_n path sits in some class, so one per class means a bijection
    return NRecord(n, len(classes), a_count, all(c == 1 for c in per_class), True)


def _remark1_count(n: int) -> NRecord:
    # classes of semilength n+1 versus A_n and M_n
    classes = len(duu_classes(n + 1))
    a_count = sum(1 for _ in _raw_walk(Family.A, n))
    m_count = sum(1 for _ in _raw_walk(Family.DYCK_MEANDER_CAT, n))
    return NRecord(n, classes, a_count, classes == a_count == m_count, True)


THEOREMS: dict[str, Callable[[int], NRecord]] = {
    "thm1": _thm1,
    "thm1-star": _thm1_star,
    "thm2": _thm2,
    "thm3": _thm3,
    "thm3-motzkin": _thm3_motzkin,
    "cor1": _cor1,
    "remark1": _remark1,
    "remark1-count": _remark1_count,
}

CEILINGS = {
    "thm1": 16,
    "thm1-star": 8,
    "thm2": 16,
    "thm3": 16,
    "thm3-motzkin": 16,
    "cor1": 16,
    "remark1": 8,
    "remark1-count": 8,
}


def verify_n(theorem: str, n: int) -> NRecord:
    try:
        check = THEOREMS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}") from None
    return check(n)


def verify(theorem: str, max_n: int) -> VerificationReport:
    """Run the exhaustive suite for every ``n`` in ``0..max_n``."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    report = VerificationReport(theorem, max_n)
    for n in range(max_n + 1):
        report.per_n.append(verify_n(theorem, n))
    return report
