"""The maps chi, phi and psi between catastrophe paths and restricted Dyck paths.

All maps work internally on plain tuples of step displacements and are
wrapped into :class:`~dyckcat.paths.Path` at the public boundary. Each
public function checks its domain first and raises ``ValueError`` naming
the violated family when the input is outside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Optional

from .paths import Family, Path, PathLike, as_path, format_path
from .paths import _member_of

__all__ = [
    "FirstReturnDecomposition",
    "LastPassageDecomposition",
    "chi",
    "chi_inverse",
    "decompose_first_return",
    "phi",
    "phi_inverse",
    "decompose_last_passage",
    "psi",
    "psi_inverse",
    "excursion_to_B",
]

Steps = tuple[int, ...]


def _require(p: PathLike, family: Family, what: str) -> Path:
    p = as_path(p)
    if not _member_of(p, family):
        raise ValueError(f"{what}: {format_path(p) or 'ε'!r} is not in {family.value}")
    return p


def _block_end(t: Steps, start: int) -> int:
    """Index just past the primitive block of ``t`` that begins at ``start``.

    The block opens with an up-step and closes at the first return to the
    ordinate it started from.
    """
    h = 0
    for i in range(start, len(t)):
        h += t[i]
        if h == 0:
            return i + 1
    raise ValueError("unbalanced block")


def _first_return(t: Steps) -> Optional[int]:
    """Index of the step that first brings ``t`` back to ordinate 0."""
    h = 0
    for i, s in enumerate(t):
        h += s
        if h == 0:
            return i
    return None


def _has_uuu(t: Steps) -> bool:
    return any(t[i] == 1 and t[i + 1] == 1 and t[i + 2] == 1 for i in range(len(t) - 2))


# chi: Motzkin paths <-> Dyck paths without UUU

_CHI = {1: (1, 1, -1), 0: (1, -1), -1: (-1,)}


def _chi(m: Steps) -> Steps:
    return tuple(s for step in m for s in _CHI[step])


def _chi_inv(d: Steps) -> Steps:
    out = []
    i, n = 0, len(d)
    while i < n:
        if d[i] == -1:
            out.append(-1)
            i += 1
        elif i + 1 < n and d[i + 1] == -1:
            out.append(0)
            i += 2
        elif i + 2 < n and d[i + 1] == 1 and d[i + 2] == -1:
            out.append(1)
            i += 3
        else:
            raise ValueError("path contains UUU")
    return tuple(out)


def chi(m: PathLike) -> Path:
    """Send a Motzkin path to a Dyck path avoiding UUU (U->UUD, F->UD, D->D)."""
    return Path(_chi(_require(m, Family.MOTZKIN, "chi")))


def chi_inverse(d: PathLike) -> Path:
    d = _require(d, Family.DYCK, "chi_inverse")
    if _has_uuu(d):
        raise ValueError(f"chi_inverse: {format_path(d)!r} contains UUU")
    return Path(_chi_inv(d))


# phi: Dyck meanders with catastrophes <-> A


@dataclass(frozen=True)
class FirstReturnDecomposition:
    """``p = U alpha X beta`` where ``X`` is the step first returning to the axis.

    ``case_tag`` is one of ``empty``, ``no_return``, ``return_D``,
    ``return_D2``, ``return_Di``; ``drop`` is the catastrophe size for the
    last two and None otherwise.
    """

    case_tag: str
    alpha: Path
    drop: Optional[int]
    beta: Path

    def reassemble(self) -> Path:
        if self.case_tag == "empty":
            return Path()
        if self.case_tag == "no_return":
            return Path((1, *self.alpha))
        closing = -1 if self.case_tag == "return_D" else -self.drop
        return Path((1, *self.alpha, closing, *self.beta))


def _split_first_return(t: Steps) -> tuple[str, Steps, Optional[int], Steps]:
    if not t:
        return "empty", (), None, ()
    c = _first_return(t)
    if c is None:
        return "no_return", t[1:], None, ()
    s = t[c]
    if s == -1:
        return "return_D", t[1:c], None, t[c + 1 :]
    return ("return_D2" if s == -2 else "return_Di"), t[1:c], -s, t[c + 1 :]


def decompose_first_return(p: PathLike) -> FirstReturnDecomposition:
    p = _require(p, Family.DYCK_MEANDER_CAT, "decompose_first_return")
    tag, alpha, drop, beta = _split_first_return(p)
    return FirstReturnDecomposition(tag, Path(alpha), drop, Path(beta))


@lru_cache(maxsize=1 << 16)
def _phi(t: Steps) -> Steps:
    tag, alpha, drop, beta = _split_first_return(t)
    if tag == "empty":
        return ()
    if tag == "no_return":
        return (1, -1) + _phi(alpha)
    if tag == "return_D":
        return (1, 1, -1) + _phi(alpha) + (-1,) + _phi(beta)
    if tag == "return_D2":
        return (1,) + _phi(alpha + (-1,)) + (-1,) + _phi(beta)
    return (1, -1) + _phi(alpha + (-(drop - 1),)) + _phi(beta)


def _first_uuu_block_end(t: Steps) -> Optional[int]:
    """End of the first primitive block of ``t`` that starts with UUU."""
    i = 0
    while i < len(t):
        end = _block_end(t, i)
        if t[i : i + 3] == (1, 1, 1):
            return end
        i = end
    return None


@lru_cache(maxsize=1 << 16)
def _phi_inv(q: Steps) -> Steps:
    # Images by case: (ii) UD + phi(cat-free meander), which has no UUU;
    # (v) UD + phi(gamma) + phi(beta) where phi(gamma) closes with the first
    # primitive block starting UUU; (iii) starts UUD; (iv) starts UUUD.
    if not q:
        return ()
    if q[1] == -1:
        rest = q[2:]
        if not _has_uuu(rest):
            return (1,) + _phi_inv(rest)
        cut = _first_uuu_block_end(rest)
        if cut is None:
            raise ValueError("no preimage: UUU above the axis")
        gamma = _phi_inv(rest[:cut])
        if not gamma or gamma[-1] > -2:
            raise ValueError("no preimage: case (v) core does not end with a catastrophe")
        return (1,) + gamma[:-1] + (gamma[-1] - 1,) + _phi_inv(rest[cut:])
    end = _block_end(q, 0)
    inner, tail = q[1 : end - 1], q[end:]
    if q[2] == -1:
        alpha = _phi_inv(inner[2:])
        return (1,) + alpha + (-1,) + _phi_inv(tail)
    core = _phi_inv(inner)
    if not core or core[-1] != -1:
        raise ValueError("no preimage: case (iv) core is not a Dyck path")
    return (1,) + core[:-1] + (-2,) + _phi_inv(tail)


def phi(p: PathLike) -> Path:
    """Map a length-n Dyck meander with catastrophes to a semilength-n path of A."""
    return Path(_phi(tuple(_require(p, Family.DYCK_MEANDER_CAT, "phi"))))


def phi_inverse(q: PathLike) -> Path:
    """The unique Dyck meander with catastrophes whose phi-image is ``q``."""
    return Path(_phi_inv(tuple(_require(q, Family.A, "phi_inverse"))))


# psi: Motzkin meanders with catastrophes <-> B


@dataclass(frozen=True)
class LastPassageDecomposition:
    """``p = U a_1 U a_2 ... U a_k [tail] beta``.

    The i-th marked up-step leaves ordinate i-1 for the last time before the
    cut (first catastrophe, or first return through a plain down-step).
    ``tail`` is None when ``p`` never returns to the axis, otherwise the
    closing step (``D_k``, or ``D`` when ``k == 1``).
    """

    k: int
    alphas: tuple[Path, ...]
    tail: Optional[int]
    beta: Path

    def reassemble(self) -> Path:
        out: list[int] = []
        for a in self.alphas:
            out.append(1)
            out.extend(a)
        if self.tail is not None:
            out.append(self.tail)
            out.extend(self.beta)
        return Path(out)


def _split_last_passage(t: Steps) -> tuple[int, list[Steps], Optional[int], Steps]:
    c = _first_return(t)
    end = len(t) if c is None else c
    pts = (0, *accumulate(t[:end]))
    k = pts[-1]
    last = [0] * k
    for i, h in enumerate(pts):
        if h < k:
            last[h] = i
    bounds = last + [end]
    alphas = [t[bounds[j] + 1 : bounds[j + 1]] for j in range(k)]
    if c is None:
        return k, alphas, None, ()
    return k, alphas, t[c], t[c + 1 :]


def decompose_last_passage(p: PathLike) -> LastPassageDecomposition:
    p = _require(p, Family.MOTZKIN_MEANDER_CAT, "decompose_last_passage")
    if not p or p[0] != 1:
        raise ValueError("decompose_last_passage: path must start with an up-step")
    k, alphas, tail, beta = _split_last_passage(p)
    return LastPassageDecomposition(k, tuple(Path(a) for a in alphas), tail, Path(beta))


@lru_cache(maxsize=1 << 16)
def _psi(t: Steps) -> Steps:
    if not t:
        return (1, -1)
    if t[0] == 0:
        return (1, -1) + _psi(t[1:])
    _, alphas, tail, beta = _split_last_passage(t)
    out = [1]
    for a in alphas:
        out.append(1)
        out.extend(_chi(a))
        out.append(-1)
    out.append(-1)
    if tail is not None:
        out.extend(_psi(beta))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _psi_inv(q: Steps) -> Steps:
    if q[1] == -1:
        return (0,) + _psi_inv(q[2:]) if len(q) > 2 else ()
    end = _block_end(q, 0)
    inner = q[1 : end - 1]
    out: list[int] = []
    k = 0
    i = 0
    while i < len(inner):
        j = _block_end(inner, i)
        out.append(1)
        out.extend(_chi_inv(inner[i + 1 : j - 1]))
        k += 1
        i = j
    rest = q[end:]
    if rest:
        out.append(-k if k >= 2 else -1)
        out.extend(_psi_inv(rest))
    return tuple(out)


def psi(p: PathLike) -> Path:
    """Map a length-n Motzkin meander with catastrophes to a semilength-(n+1) path of B."""
    return Path(_psi(tuple(_require(p, Family.MOTZKIN_MEANDER_CAT, "psi"))))


def psi_inverse(q: PathLike) -> Path:
    q = _require(q, Family.B, "psi_inverse")
    if not q:
        raise ValueError("psi_inverse: the empty path has no preimage")
    return Path(_psi_inv(tuple(q)))


def excursion_to_B(p: PathLike) -> Path:
    """psi of a Motzkin excursion with catastrophes, minus its final UD."""
    p = _require(p, Family.MOTZKIN_EXCURSION_CAT, "excursion_to_B")
    return Path(_psi(tuple(p))[:-2])
