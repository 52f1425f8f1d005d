from fractions import Fraction

import pytest

from oracles import oracle_nullity, oracle_rank
from wsuper.algebra import build_gl, build_sl
from wsuper.catalog import _unit_by_name
from wsuper.errors import InputError, NotMinimalError
from wsuper.grading import build_minimal_setup, kw_dimensions, kw_numbers
from wsuper.linalg import is_zero_vec, vec_scale

from conftest import get_setup


def test_triple_identities_hold_exactly(catalog_setup):
    s = catalog_setup
    t = s.triple
    assert s.alg.bracket(t.e, t.f) == t.h
    assert s.alg.bracket(t.h, t.e) == vec_scale(2, t.e)
    assert s.alg.bracket(t.h, t.f) == vec_scale(-2, t.f)


def test_grading_is_short_and_exhaustive(catalog_setup):
    s = catalog_setup
    assert sum(len(v) for v in s.grading.values()) == s.dim
    assert len(s.grading[2]) == 1 and len(s.grading[-2]) == 1
    # [g(i), g(j)] c= g(i+j), exhaustively
    for i in range(-2, 3):
        for j in range(-2, 3):
            for x in s.grading[i]:
                for y in s.grading[j]:
                    w = s.alg.bracket(x, y)
                    if is_zero_vec(w):
                        continue
                    hw = s.alg.bracket(s.triple.h, w)
                    assert hw == vec_scale(i + j, w)


def test_known_s_and_r_for_psl22(psl22):
    assert psl22.sdim == 0
    assert psl22.rdim == 4


def test_derived_s_and_r(catalog_setup):
    want = {"sl(2|1)": (0, 2), "osp(1|2)": (0, 1),
            "psl22": (0, 4), "osp(3|2)": (0, 3)}
    assert (catalog_setup.sdim, catalog_setup.rdim) == want[catalog_setup.alg.name
            if catalog_setup.alg.name != "psl(2|2)" else "psl22"]


def test_pairing_normal_form(catalog_setup):
    s = catalog_setup
    n = len(s.zbasis)
    for a in range(n):
        for b in range(n):
            want = Fraction(1 if a == b else 0)
            assert s.pairing(s.zdual[a], s.zbasis[b]) == want
    # even part alternating, odd part symmetric
    for a in range(n):
        for b in range(n):
            pa = s.alg.parity_of(s.zbasis[a])
            pb = s.alg.parity_of(s.zbasis[b])
            if pa == pb == 0:
                assert s.pairing(s.zbasis[a], s.zbasis[b]) == \
                    -s.pairing(s.zbasis[b], s.zbasis[a])
            if pa == pb == 1:
                assert s.pairing(s.zbasis[a], s.zbasis[b]) == \
                    s.pairing(s.zbasis[b], s.zbasis[a])


def test_odd_middle_vector_is_self_dual_with_unit_pairing():
    for name in ("osp(1|2)", "osp(3|2)"):
        s = get_setup(name)
        r = s.rdim
        assert r % 2 == 1
        mid = s.sdim + (r + 1) // 2 - 1
        assert s.zdual[mid] == s.zbasis[mid]
        assert s.pairing(s.zbasis[mid], s.zbasis[mid]) == 1


def test_chi_values(catalog_setup):
    s = catalog_setup
    assert s.chi(s.triple.f) == 1
    assert s.chi(s.triple.h) == 0
    for z in s.zbasis:
        assert s.chi(z) == 0


def test_sharp_map(psl22):
    s = psl22
    assert is_zero_vec(s.sharp(s.triple.h))
    # (h, e_12) = 0 by the supertrace oracle, so sharp fixes e_12
    v = _unit_by_name(s.alg, "E[2,3]")
    assert s.form(s.triple.h, v) == 0
    assert s.sharp(v) == v
    with pytest.raises(InputError):
        s.sharp(s.triple.e)


def test_sharp_image_spans_centralizer_zero(catalog_setup):
    s = catalog_setup
    image = [s.sharp(x) for x in s.grading[0]]
    image = [v for v in image if not is_zero_vec(v)]
    cent = s.cent[0]
    if not cent:
        assert not image
        return
    assert oracle_rank(image) == len(cent)
    assert oracle_rank(image + cent) == len(cent)


def test_centralizer_g2_is_spanned_by_e(catalog_setup):
    s = catalog_setup
    coords = s.to_letters(s.cent[2][0])
    assert list(coords) == [s.idx_e]


def test_dual_bases_of_centralizer_zero(catalog_setup):
    s = catalog_setup
    n = len(s.dual_a)
    for i in range(n):
        for j in range(n):
            assert s.form(s.dual_a[i], s.dual_b[j]) == (1 if i == j else 0)


def test_sl21_centralizer_dims_via_nullspace_oracle():
    s = get_setup("sl(2|1)")
    ad_e_rows = []
    for i in range(s.dim):
        row = []
        for j in range(s.dim):
            row.append(s.alg.bracket(s.triple.e, s.alg.basis_vector(j))[i])
        ad_e_rows.append(row)
    assert oracle_nullity(ad_e_rows, s.dim) == sum(len(v) for v in s.cent.values())
    d = kw_dimensions(s)
    assert (d["d0"], d["d1"]) == (2, 2)


def test_kw_parities_and_bound(catalog_setup):
    s = catalog_setup
    d = kw_dimensions(s)
    assert (s.rdim - d["d1"]) % 2 == 0
    assert d["d0"] % 2 == 0
    assert d["exponent_p"] == Fraction(d["d0"], 2)
    assert d["exponent_two"] == (d["d1"] + 1) // 2   # ceiling convention
    assert d["parity_r"] == ("odd" if s.rdim % 2 else "even")


def test_osp12_parity_is_odd():
    d = kw_dimensions(get_setup("osp(1|2)"))
    assert d["d1"] % 2 == 1 and d["parity_r"] == "odd"


def test_non_minimal_nilpotent_is_rejected():
    alg = build_sl(3, 0)
    e01 = _unit_by_name(alg, "E[0,1]")
    e12 = _unit_by_name(alg, "E[1,2]")
    regular = tuple(a + b for a, b in zip(e01, e12))
    with pytest.raises(NotMinimalError, match="diagonalizable|g\\(2\\)"):
        build_minimal_setup(alg, regular)


def test_non_embeddable_choice_is_rejected():
    alg = build_sl(2, 1)
    e = _unit_by_name(alg, "E[0,1]")
    f = _unit_by_name(alg, "E[1,0]")
    h = alg.bracket(e, f)
    with pytest.raises(NotMinimalError, match="sl2-embeddable"):
        build_minimal_setup(alg, h)


def test_odd_or_zero_e_is_rejected():
    alg = build_sl(2, 1)
    with pytest.raises(InputError):
        build_minimal_setup(alg, _unit_by_name(alg, "E[0,2]"))
    with pytest.raises(InputError):
        build_minimal_setup(alg, (Fraction(0),) * alg.dim)


def test_summary_export_shape(psl22):
    summary = psl22.summary()
    assert summary["s"] == 0 and summary["r"] == 4
    assert summary["d0"] == 2 and summary["d1"] == 4
    assert summary["grading_dims"] == {"-2": 1, "-1": 4, "0": 4, "1": 4, "2": 1}
    assert summary["bound_exponents"] == {"p": "1", "two": 2}


def test_gl_setup_with_equal_blocks_supported():
    # gl(2|2) keeps a nondegenerate supertrace form even at m = n
    alg = build_gl(2, 2)
    s = build_minimal_setup(alg, _unit_by_name(alg, "E[0,1]"))
    assert s.sdim == 0 and s.rdim == 4
    assert kw_numbers(s)[0] % 2 == 0
