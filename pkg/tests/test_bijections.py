import re

import pytest

import oracles
from dyckcat import (
    Family,
    Path,
    chi,
    chi_inverse,
    decompose_first_return,
    decompose_last_passage,
    enumerate_family,
    excursion_to_B,
    find_occurrences,
    format_path,
    is_member,
    parse_path,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
)


def fmt(p):
    return format_path(p)


# chi


def test_chi_examples():
    assert fmt(chi("UFUDD")) == "UUDUDUUDDD"
    assert fmt(chi("")) == ""
    assert fmt(chi("F")) == "UD"
    assert fmt(chi_inverse("UUDUDUUDDD")) == "UFUDD"
    assert fmt(chi_inverse("")) == ""
    assert fmt(chi_inverse("UUDD")) == "UD"


def _chi_inverse_by_rewriting(d: str) -> str:
    # UUD -> U, then the remaining UD -> F, remaining D stay D
    return re.sub(r"UUD|UD|D", lambda m: {"UUD": "U", "UD": "F", "D": "D"}[m.group()], d)


def test_chi_is_bijection_onto_uuu_free_dyck():
    for n in range(0, 9):
        images = [fmt(chi(m)) for m in oracles.motzkin(n)]
        target = [d for d in oracles.dyck(n) if "UUU" not in d]
        assert sorted(images) == sorted(target)
        for m in oracles.motzkin(n):
            assert fmt(chi_inverse(chi(m))) == m
        for d in target:
            assert fmt(chi_inverse(d)) == _chi_inverse_by_rewriting(d)


def test_chi_domain_errors():
    with pytest.raises(ValueError, match="motzkin"):
        chi("UU")
    with pytest.raises(ValueError, match="UUU"):
        chi_inverse("UUUDDD")
    with pytest.raises(ValueError):
        chi_inverse("UDF")


# first-return decomposition and phi


def test_decompose_first_return_examples():
    d = decompose_first_return("UUDUUD3")
    assert (d.case_tag, fmt(d.alpha), d.drop, fmt(d.beta)) == ("return_Di", "UDUU", 3, "")
    d = decompose_first_return("UDU")
    assert (d.case_tag, fmt(d.alpha), fmt(d.beta)) == ("return_D", "", "U")
    d = decompose_first_return("U")
    assert (d.case_tag, fmt(d.alpha)) == ("no_return", "")
    assert decompose_first_return("").case_tag == "empty"
    assert decompose_first_return("UUD2U").case_tag == "return_D2"


def test_first_return_reassembly_and_invariants():
    for n in range(0, 11):
        for p in enumerate_family(Family.DYCK_MEANDER_CAT, n):
            d = decompose_first_return(p)
            assert d.reassemble() == p
            if d.case_tag == "no_return":
                assert all(s in (1, -1) for s in d.alpha)
                assert is_member(d.alpha, Family.DYCK_MEANDER_CAT)
            elif d.case_tag == "return_D":
                assert is_member(d.alpha, Family.DYCK)
            elif d.case_tag == "return_D2":
                assert is_member(Path((*d.alpha, -1)), Family.DYCK)
            elif d.case_tag == "return_Di":
                assert d.drop >= 3
                assert is_member(Path((*d.alpha, -(d.drop - 1))), Family.DYCK_EXCURSION_CAT)


@pytest.mark.parametrize(
    "source, image",
    [("U", "UD"), ("UD", "UUDD"), ("UUD2", "UUUDDD"), ("", ""), ("UUDUUD3", "UDUUDDUUUDDD")],
)
def test_phi_examples(source, image):
    assert fmt(phi(source)) == image
    assert fmt(phi_inverse(image)) == source


def test_phi_quoted_value_of_uuduud3_is_image_of_a_dyck_path():
    # UUDDUUDUUDDD has no UUU, so it cannot come from a case (v) meander
    assert fmt(phi_inverse("UUDDUUDUUDDD")) == "UDUUDD"
    assert fmt(phi("UUDUUD3")) != "UUDDUUDUUDDD"


def test_phi_matches_brute_force_A():
    for n in range(0, 10):
        images = [fmt(phi(p)) for p in oracles.dyck_meanders_cat(n)]
        assert len(set(images)) == len(images)
        assert sorted(images) == sorted(oracles.A(n))
        exc_images = sorted(fmt(phi(p)) for p in oracles.dyck_excursions_cat(n))
        assert exc_images == sorted(oracles.A_prime(n))
    for n in range(0, 5):
        assert sorted(fmt(phi(p)) for p in oracles.dyck(n)) == sorted(oracles.A_star(2 * n))


def test_phi_round_trips_and_length_law():
    for n in range(0, 13):
        for p in enumerate_family(Family.DYCK_MEANDER_CAT, n):
            q = phi(p)
            assert q.length == 2 * n
            assert phi_inverse(q) == p
        for q in enumerate_family(Family.A, n):
            assert phi(phi_inverse(q)) == q


def _axis_uuu(q):
    return any(o.min_ordinate == 0 for o in find_occurrences(q, "UUU"))


def test_phi_case_images():
    for n in range(1, 12):
        for p in enumerate_family(Family.DYCK_MEANDER_CAT, n):
            case = decompose_first_return(p).case_tag
            q = fmt(phi(p))
            if case == "return_D2":
                assert q.startswith("UUUD")
            elif case == "return_D":
                assert q.startswith("UUD") and "UUU" not in q[: q.index("D") + 1]
                head = decompose_first_return(p)
                if is_member(p, Family.DYCK):
                    assert is_member(q, Family.A_STAR)
                assert is_member(phi(head.alpha), Family.A_STAR)
            elif case == "return_Di":
                assert q.startswith("UD") and _axis_uuu(q)
            elif case == "no_return":
                assert q.startswith("UD") and "UUU" not in q


def test_phi_domain_errors():
    with pytest.raises(ValueError, match="dyck-meander-cat"):
        phi("UF")
    with pytest.raises(ValueError, match="A"):
        phi_inverse("UUDUDD")
    with pytest.raises(ValueError):
        phi_inverse("UUUUDDDD")


# last-passage decomposition and psi


def test_decompose_last_passage_examples():
    d = decompose_last_passage("UUDUU")
    assert (d.k, [fmt(a) for a in d.alphas], d.tail, fmt(d.beta)) == (3, ["UD", "", ""], None, "")
    d = decompose_last_passage("UDFUU")
    assert (d.k, [fmt(a) for a in d.alphas], d.tail, fmt(d.beta)) == (1, [""], -1, "FUU")
    d = decompose_last_passage("UUD2")
    assert (d.k, [fmt(a) for a in d.alphas], d.tail, fmt(d.beta)) == (2, ["", ""], -2, "")
    with pytest.raises(ValueError):
        decompose_last_passage("FU")


def test_last_passage_reassembly_and_invariants():
    for n in range(1, 10):
        for p in enumerate_family(Family.MOTZKIN_MEANDER_CAT, n):
            if p[0] != 1:
                continue
            d = decompose_last_passage(p)
            assert d.reassemble() == p
            assert len(d.alphas) == d.k
            for a in d.alphas:
                assert is_member(a, Family.MOTZKIN)
            if d.tail is not None:
                assert d.tail == (-d.k if d.k >= 2 else -1)


@pytest.mark.parametrize(
    "source, image",
    [
        ("", "UD"),
        ("F", "UDUD"),
        ("UD", "UUDDUD"),
        ("UUD2", "UUDUDDUD"),
        ("U", "UUDD"),
        ("UUDUUD3", "UUUUDDDUDUDDUD"),
    ],
)
def test_psi_examples(source, image):
    assert fmt(psi(source)) == image
    assert fmt(psi_inverse(image)) == source


def test_psi_quoted_value_of_uuduud3_has_odd_length():
    quoted = "UUUUDDUDUDDUD"
    assert len(quoted) % 2 == 1
    assert not is_member(quoted, Family.DYCK)
    assert len(fmt(psi("UUDUUD3"))) == 2 * (6 + 1)


def test_psi_matches_brute_force_B():
    for n in range(0, 8):
        images = [fmt(psi(p)) for p in oracles.motzkin_meanders_cat(n)]
        assert len(set(images)) == len(images)
        assert sorted(images) == sorted(oracles.B(n + 1))
        exc = sorted(fmt(psi(p)) for p in oracles.motzkin_excursions_cat(n))
        assert exc == sorted(q for q in oracles.B(n + 1) if q.endswith("UD"))
        assert sorted(fmt(excursion_to_B(p)) for p in oracles.motzkin_excursions_cat(n)) == sorted(oracles.B(n))


def test_psi_round_trips_and_length_law():
    for n in range(0, 10):
        for p in enumerate_family(Family.MOTZKIN_MEANDER_CAT, n):
            q = psi(p)
            assert q.length == 2 * (n + 1)
            assert psi_inverse(q) == p
        for q in enumerate_family(Family.B, n + 1):
            assert psi(psi_inverse(q)) == q


def test_psi_of_motzkin_lands_in_B_prime_and_ends_with_ud():
    for n in range(0, 10):
        for m in enumerate_family(Family.MOTZKIN, n):
            q = psi(m)
            assert is_member(q, Family.B_PRIME)
            assert fmt(q).endswith("UD")


def test_psi_of_motzkin_is_B_prime_paths_ending_with_ud():
    # the image is the UD-terminated part of B'_{n+1}, which is counted by Motzkin_n
    for n in range(0, 8):
        images = sorted(fmt(psi(m)) for m in oracles.motzkin(n))
        assert images == sorted(q for q in oracles.B_prime(n + 1) if q.endswith("UD"))


def test_excursion_to_B_examples():
    assert fmt(excursion_to_B("")) == ""
    assert fmt(excursion_to_B("UD")) == "UUDD"
    assert fmt(excursion_to_B("UUD2")) == "UUDUDD"
    with pytest.raises(ValueError):
        excursion_to_B("U")


def test_psi_domain_errors():
    with pytest.raises(ValueError):
        psi("D")
    with pytest.raises(ValueError, match="empty"):
        psi_inverse("")
    with pytest.raises(ValueError, match="B"):
        psi_inverse("UUUUUDDDDD")  # UUU from ordinate 2 is not in B
    assert fmt(psi_inverse(parse_path("UUUDDD"))) == "UF"
