import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weylgrowth import (
    CartanMatrixError,
    NotFiniteError,
    RankOutOfRangeError,
    SingularMatrixError,
    UnknownFamilyError,
    build_catalog,
    enumerate_levels,
    fundamental_weights,
    gcm_from_json,
    invariant_degrees,
    invert_cartan,
    load_gcm_file,
    validate_gcm,
    weyl_group_order,
)

F = Fraction


# ---------------------------------------------------------------- validation

def test_validate_rank_one():
    gcm = validate_gcm([[2]])
    assert gcm.rank == 1 and gcm.entries == ((2,),)


def test_validate_affine_a1():
    gcm = validate_gcm([[2, -2], [-2, 2]])
    assert gcm.entries == ((2, -2), (-2, 2))


def test_validate_rejects_asymmetric_zero():
    with pytest.raises(CartanMatrixError, match="asymmetric zero"):
        validate_gcm([[2, -1], [0, 2]])


def test_validate_rejects_non_square():
    with pytest.raises(CartanMatrixError, match="not square"):
        validate_gcm([[2, -1], [-1]])


def test_validate_rejects_empty():
    with pytest.raises(CartanMatrixError, match="empty"):
        validate_gcm([])


def test_validate_rejects_bad_diagonal():
    with pytest.raises(CartanMatrixError, match="must be 2"):
        validate_gcm([[1]])


def test_validate_rejects_positive_off_diagonal():
    with pytest.raises(CartanMatrixError, match="positive"):
        validate_gcm([[2, 1], [1, 2]])


def test_validate_rejects_non_integer():
    with pytest.raises(CartanMatrixError, match="not an integer"):
        validate_gcm([[2, -0.5], [-2, 2]])


def test_validate_label_mismatch():
    with pytest.raises(CartanMatrixError, match="labels"):
        validate_gcm([[2]], labels=("a", "b"))
    with pytest.raises(CartanMatrixError, match="distinct"):
        validate_gcm([[2, -1], [-1, 2]], labels=("a", "a"))


@st.composite
def gcm_entry_matrices(draw):
    n = draw(st.integers(1, 4))
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                m[i][j] = draw(st.integers(-3, -1))
                m[j][i] = draw(st.integers(-3, -1))
    return m


@given(gcm_entry_matrices())
def test_validate_accepts_axiom_satisfying_matrices(entries):
    gcm = validate_gcm(entries)
    assert gcm.rank == len(entries)


@given(gcm_entry_matrices(), st.integers(0, 3))
def test_validate_rejects_broken_diagonal(entries, seed):
    i = seed % len(entries)
    entries[i][i] = 3
    with pytest.raises(CartanMatrixError):
        validate_gcm(entries)


# ------------------------------------------------------------------- catalog

def test_catalog_a1():
    assert build_catalog("A1").gcm.entries == ((2,),)


def test_catalog_parses_families():
    for name, rank in [("A3", 3), ("B4", 4), ("C2", 2), ("D5", 5), ("E7", 7),
                       ("F4", 4), ("G2", 2), ("AffA2", 3), ("HA3", 5)]:
        desc = build_catalog(name)
        assert desc.name == name
        assert desc.gcm.rank == rank


def test_catalog_unknown_family():
    for bad in ("X3", "HA", "A", "AffB2", "ha2", ""):
        with pytest.raises(UnknownFamilyError):
            build_catalog(bad)


def test_catalog_rank_out_of_range():
    for bad in ("A0", "B1", "D2", "E9", "E5", "F5", "G3", "HA1", "AffA0"):
        with pytest.raises(RankOutOfRangeError):
            build_catalog(bad)


def test_catalog_products_pass_validation():
    for name in ("A7", "B6", "C5", "D7", "E6", "E8", "F4", "G2", "AffA1", "AffA5", "HA2", "HA5"):
        gcm = build_catalog(name).gcm
        assert validate_gcm(gcm.entries, gcm.labels) == gcm


def _degree_multiset(gcm):
    degs = sorted(sum(1 for x in row if x != 0) - 1 for row in gcm.entries)
    return tuple(degs)


# Simply-laced trees on <= 5 nodes are told apart by their degree multisets:
# A4 (1,1,2,2), D4 (1,1,1,3), A5 (1,1,2,2,2), D5 (1,1,1,2,3).
def test_ha2_subdiagrams():
    gcm = build_catalog("HA2").gcm
    affine = gcm.delete_node("-1")
    assert affine.entries == build_catalog("AffA2").gcm.entries
    assert _degree_multiset(gcm.delete_node("2")) == (1, 1, 2)          # A3 chain
    assert _degree_multiset(gcm.delete_edge("0", "2")) == (1, 1, 2, 2)  # A4 chain
    assert _degree_multiset(gcm.delete_edge("1", "2")) == (1, 1, 1, 3)  # D4 star


def test_ha3_subdiagrams():
    gcm = build_catalog("HA3").gcm
    affine = gcm.delete_node("-1")
    assert affine.entries == build_catalog("AffA3").gcm.entries
    assert _degree_multiset(gcm.delete_node("1")) == (1, 1, 2, 2)       # A4 chain
    assert _degree_multiset(gcm.delete_node("3")) == (1, 1, 2, 2)
    assert _degree_multiset(gcm.delete_edge("0", "1")) == (1, 1, 2, 2, 2)  # A5 chain
    assert _degree_multiset(gcm.delete_edge("1", "2")) == (1, 1, 1, 2, 3)  # D5
    assert _degree_multiset(gcm.delete_node("2")) == (1, 1, 1, 3)       # D4 star


def test_ha_general_shape():
    for r in (2, 3, 4, 6):
        gcm = build_catalog(f"HA{r}").gcm
        assert gcm.rank == r + 2
        assert gcm.delete_node("-1").entries == build_catalog(f"AffA{r}").gcm.entries
        # dropping the right cycle node leaves a finite type-A chain
        chain_node = "2" if r == 2 else "1"
        chain = gcm.delete_node(chain_node)
        assert _degree_multiset(chain) == (1, 1) + (2,) * (r - 1)


def test_delete_edge_requires_edge():
    gcm = build_catalog("A3").gcm
    with pytest.raises(ValueError, match="no edge"):
        gcm.delete_edge("1", "3")


# ------------------------------------------------------------------ inverses

def test_invert_a1():
    assert invert_cartan(build_catalog("A1").gcm) == ((F(1, 2),),)


def test_invert_affine_is_singular():
    with pytest.raises(SingularMatrixError):
        invert_cartan(build_catalog("AffA1").gcm)
    with pytest.raises(SingularMatrixError):
        invert_cartan(build_catalog("AffA3").gcm)


def test_invert_ha3_reference_matrix():
    # Known exact inverse for the HA3 Cartan matrix, node order -1,0,1,2,3.
    expected = tuple(
        tuple(-F(x) for x in row)
        for row in (
            (0, 1, 1, 1, 1),
            (1, 2, 2, 2, 2),
            (1, 2, F(5, 4), F(3, 2), F(7, 4)),
            (1, 2, F(3, 2), 1, F(3, 2)),
            (1, 2, F(7, 4), F(3, 2), F(5, 4)),
        )
    )
    assert invert_cartan(build_catalog("HA3").gcm) == expected


def test_inverse_times_matrix_is_identity():
    for name in ("A2", "A3", "B3", "C4", "D5", "E6", "F4", "G2", "HA2", "HA3"):
        gcm = build_catalog(name).gcm
        inv = invert_cartan(gcm)
        n = gcm.rank
        for i in range(n):
            for j in range(n):
                acc = sum(F(gcm.entries[i][k]) * inv[k][j] for k in range(n))
                assert acc == (1 if i == j else 0)


def test_fundamental_weights_a1():
    assert fundamental_weights(build_catalog("A1").gcm) == ((F(1, 2),),)


def test_fundamental_weights_a2():
    # invert [[2,-1],[-1,2]] by hand: (1/3) * [[2,1],[1,2]]
    assert fundamental_weights(build_catalog("A2").gcm) == (
        (F(2, 3), F(1, 3)),
        (F(1, 3), F(2, 3)),
    )


def test_fundamental_weights_ha3_overextended_node():
    weights = fundamental_weights(build_catalog("HA3").gcm)
    assert weights[0] == (0, -1, -1, -1, -1)


# ------------------------------------------------------------------- degrees

def test_invariant_degrees_tables():
    assert invariant_degrees(build_catalog("A1")) == (2,)
    assert invariant_degrees(build_catalog("A3")) == (2, 3, 4)
    assert invariant_degrees(build_catalog("D4")) == (2, 4, 6, 4)
    assert invariant_degrees(build_catalog("D5")) == (2, 4, 6, 8, 5)
    assert invariant_degrees(build_catalog("B4")) == (2, 4, 6, 8)
    assert invariant_degrees(build_catalog("E6")) == (2, 5, 6, 8, 9, 12)
    assert weyl_group_order(build_catalog("E8")) == 696729600


def test_invariant_degrees_rejects_non_finite():
    with pytest.raises(NotFiniteError):
        invariant_degrees(build_catalog("AffA2"))
    with pytest.raises(NotFiniteError):
        invariant_degrees(build_catalog("HA2"))


@pytest.mark.parametrize(
    "name",
    ["A1", "A2", "A3", "A4", "A5",
     "B2", "B3", "B4", "B5",
     "C2", "C3", "C4", "C5",
     "D3", "D4", "D5",
     "F4", "G2", "E6"],
)
def test_degree_product_matches_enumeration(name):
    desc = build_catalog(name)
    series = enumerate_levels(desc.gcm, 40)
    assert series.complete
    assert series.total == weyl_group_order(desc)


# ---------------------------------------------------------------- file I/O

def test_gcm_json_round_trip():
    gcm = build_catalog("HA2").gcm
    again = gcm_from_json(json.dumps(gcm.to_json_dict()))
    assert again == gcm


def test_gcm_json_requires_matrix_key():
    with pytest.raises(ValueError, match="matrix"):
        gcm_from_json('{"labels": ["0"]}')


def test_load_gcm_file(tmp_path):
    path = tmp_path / "algebra.json"
    path.write_text(json.dumps({"labels": ["0", "1"], "matrix": [[2, -2], [-2, 2]]}))
    gcm = load_gcm_file(path)
    assert gcm.entries == ((2, -2), (-2, 2))
    assert gcm.labels == ("0", "1")
