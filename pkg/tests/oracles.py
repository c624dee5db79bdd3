"""Brute-force reference implementations used only by the tests.

Everything here is written directly from the family definitions and shares
no code with the package: paths are plain token strings, generated by
naive recursion over all nonnegative step sequences and then filtered.
"""

from __future__ import annotations

from functools import lru_cache
from fractions import Fraction
from math import comb


def tokens(s: str) -> list[str]:
    out, i = [], 0
    while i < len(s):
        if s[i] == "D" and i + 1 < len(s) and s[i + 1].isdigit():
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append(s[i:j])
            i = j
        else:
            out.append(s[i])
            i += 1
    return out


def delta(tok: str) -> int:
    return {"U": 1, "F": 0, "D": -1}.get(tok) if tok in "UFD" else -int(tok[1:])


def ordinates(s: str) -> list[int]:
    ys = [0]
    for t in tokens(s):
        ys.append(ys[-1] + delta(t))
    return ys


@lru_cache(maxsize=None)
def nonneg_paths(length: int, flat: bool, cat: bool) -> tuple[str, ...]:
    """Every nonnegative step word of the given length; catastrophes land on 0."""
    out = []

    def rec(prefix: list[str], y: int) -> None:
        if len(prefix) == length:
            out.append("".join(prefix))
            return
        rec(prefix + ["U"], y + 1)
        if flat:
            rec(prefix + ["F"], y)
        if y >= 1:
            rec(prefix + ["D"], y - 1)
        if cat and y >= 2:
            rec(prefix + [f"D{y}"], 0)

    rec([], 0)
    return tuple(out)


def dyck(n: int) -> list[str]:
    return [p for p in nonneg_paths(2 * n, False, False) if ordinates(p)[-1] == 0]


def motzkin(n: int) -> list[str]:
    return [p for p in nonneg_paths(n, True, False) if ordinates(p)[-1] == 0]


def dyck_meanders_cat(n: int) -> list[str]:
    return list(nonneg_paths(n, False, True))


def dyck_excursions_cat(n: int) -> list[str]:
    return [p for p in nonneg_paths(n, False, True) if ordinates(p)[-1] == 0]


def motzkin_meanders_cat(n: int) -> list[str]:
    return list(nonneg_paths(n, True, True))


def motzkin_excursions_cat(n: int) -> list[str]:
    return [p for p in nonneg_paths(n, True, True) if ordinates(p)[-1] == 0]


def occurrences(p: str, pattern: str) -> list[tuple[int, int]]:
    """(start, lowest ordinate spanned) for every occurrence; U/D/F words only."""
    ys = ordinates(p)
    k = len(pattern)
    return [(i, min(ys[i : i + k + 1])) for i in range(len(p) - k + 1) if p[i : i + k] == pattern]


def in_A(p: str) -> bool:
    return all(h == 0 for _, h in occurrences(p, "UUU") + occurrences(p, "DUD"))


def in_A_star(p: str) -> bool:
    return p == "" or (p.startswith("UUD") and "UUU" not in p and "DUD" not in p)


def in_A_prime(p: str) -> bool:
    if not in_A(p):
        return False
    uuu = [i for i, _ in occurrences(p, "UUU")]
    return all(any(j > i + 1 for j in uuu) for i, h in occurrences(p, "UD") if h == 0)


def in_B(p: str) -> bool:
    return all(h < 2 for _, h in occurrences(p, "UUU"))


def in_B_prime(p: str) -> bool:
    return in_B(p) and all(h != 1 for _, h in occurrences(p, "DU"))


def A(n: int) -> list[str]:
    return [p for p in dyck(n) if in_A(p)]


def A_prime(n: int) -> list[str]:
    return [p for p in dyck(n) if in_A_prime(p)]


def A_star(m: int) -> list[str]:
    return [p for p in dyck(m) if in_A_star(p)]


def B(n: int) -> list[str]:
    return [p for p in dyck(n) if in_B(p)]


def B_prime(n: int) -> list[str]:
    return [p for p in dyck(n) if in_B_prime(p)]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def fibonacci(n: int) -> list[int]:
    f = [1, 1]
    while len(f) < n:
        f.append(f[-1] + f[-2])
    return f[:n]


def sqrt_one_minus_4x2(order: int) -> list[Fraction]:
    """Coefficients of sqrt(1 - 4x^2) from the generalized binomial theorem."""
    out = [Fraction(0)] * order
    binom = Fraction(1)  # binom(1/2, k)
    for k in range(0, (order + 1) // 2):
        if k:
            binom = binom * (Fraction(1, 2) - (k - 1)) / k
        out[2 * k] = binom * (-4) ** k
    return out
