"""Catalog recipes: classification, transforms, routes, corrections."""

from fractions import Fraction

import pytest

from cliffrep.algebra import Multivector, Signature
from cliffrep.catalog import (
    CONJUGATE_PAIRS,
    PLAIN,
    BasisChangeError,
    CatalogMissError,
    CORRECTIONS,
    MvMatrix,
    TransformPair,
    build_diagonal_family,
    build_explicit,
    build_from_matrix_units,
    build_periodic,
    catalog_signatures,
    catalog_text,
    classify,
    corrections_markdown,
    default_route,
    get_spec,
    routes_for,
)

HALF = Fraction(1, 2)


def test_classify_spot_values():
    assert str(classify(Signature(3, 1))) == "R(4)"
    assert str(classify(Signature(0, 2))) == "H(1)"
    assert str(classify(Signature(2, 1))) == "2R(2)"
    assert str(classify(Signature(0, 1))) == "C(1)"
    assert str(classify(Signature(2, 2))) == "R(4)"
    assert str(classify(Signature(9, 0))) == "2R(16)"
    assert str(classify(Signature(0, 9))) == "C(16)"


def test_classify_periodicity_size_rule():
    for p, q in [(0, 0), (1, 0), (0, 1), (2, 1), (1, 3)]:
        base = classify(Signature(p, q))
        lifted = classify(Signature(p + 8, q))
        assert lifted.ring == base.ring
        assert lifted.size == 16 * base.size


def test_explicit_zero_one_recipe():
    spec = build_explicit(Signature(0, 1), "real2")
    sig = spec.signature
    one = Multivector.scalar(sig, 1)
    eps = Multivector.generator(sig, 1)
    assert spec.transform.P == MvMatrix(sig, [[one, eps], [-eps, -one]])
    assert spec.transform.scale == HALF
    assert spec.target.ring == "R" and spec.target.size == 2
    assert spec.replication.kind == CONJUGATE_PAIRS


def test_explicit_two_zero_recipe():
    spec = build_explicit(Signature(2, 0))
    sig = spec.signature
    one = Multivector.scalar(sig, 1)
    e1 = Multivector.generator(sig, 1)
    e2 = Multivector.generator(sig, 2)
    e12 = e1 * e2
    expected = MvMatrix(sig, [[one + e1, e2 - e12], [e2 + e12, one - e1]]).scale(HALF)
    assert spec.transform.P == expected
    assert spec.transform.Pinv == expected
    assert spec.transform.scale == 1
    assert spec.replication.kind == PLAIN and spec.replication.copies == 2


def test_quaternion_real4_recipe():
    spec = build_explicit(Signature(0, 2), "real4")
    assert spec.target.ring == "R" and spec.target.size == 4
    assert spec.replication.copies == 4
    assert spec.transform.P == spec.transform.Pinv
    assert spec.transform.identity_defect() is None


def test_transform_identity_small_catalog():
    for p, q in [(1, 0), (0, 1), (1, 1), (0, 3), (2, 1), (3, 1), (0, 4), (1, 3)]:
        sig = Signature(p, q)
        for route in routes_for(sig):
            assert get_spec(sig, route).transform.identity_defect() is None


def test_unit_blade_relations():
    for p, q in [(3, 0), (1, 2), (0, 2), (4, 0), (1, 3), (4, 1), (0, 5)]:
        sig = Signature(p, q)
        spec = get_spec(sig)
        units = spec.unit_blades
        if "i" in units:
            assert units["i"] * units["i"] == -1
        if "j" in units:
            assert units["j"] * units["j"] == -1
            assert units["i"] * units["j"] == -(units["j"] * units["i"])


def test_route_listing_and_defaults():
    assert routes_for(Signature(0, 2)) == ("quaternion", "complex2", "real4")
    assert routes_for(Signature(0, 1)) == ("real2", "complex1")
    assert default_route(Signature(2, 2)) == "explicit"
    assert default_route(Signature(5, 4)) == "diagonal"
    assert default_route(Signature(9, 0)) == "periodic"
    with pytest.raises(CatalogMissError):
        default_route(Signature(3, 4))


def test_catalog_miss_names_nearest_route():
    with pytest.raises(CatalogMissError) as err:
        get_spec(Signature(3, 4))
    assert "(4,3)" in str(err.value)


def test_diagonal_route_requires_shape():
    with pytest.raises(CatalogMissError):
        build_diagonal_family(Signature(1, 2))


def test_periodic_needs_covered_reduction():
    spec = build_periodic(Signature(9, 0))
    assert str(spec.target) == "2R(16)"
    with pytest.raises(CatalogMissError):
        build_periodic(Signature(6, 2))


def test_practical_construction_bound():
    # classification stays unbounded; constructions stop at 17 generators
    assert str(classify(Signature(12, 12))) == "R(4096)"
    assert routes_for(Signature(12, 12)) == ()
    with pytest.raises(CatalogMissError):
        get_spec(Signature(12, 12))


def test_double_periodicity_chain():
    # (17,0) reduces through (9,0) down to (1,0)
    from cliffrep.represent import represent_with
    from cliffrep.rings import ring_identity

    sig = Signature(17, 0)
    spec = get_spec(sig, "periodic")
    assert str(spec.target) == "2R(256)" == str(classify(sig))
    one = Multivector.scalar(sig, 1)
    assert represent_with(spec, one) == ring_identity("2R", 256)


def test_memo_table_idempotent():
    a = get_spec(Signature(2, 0))
    b = get_spec(Signature(2, 0))
    assert a is b


def test_catalog_enumeration():
    entries = dict((tuple((s.p, s.q)), routes) for s, routes in catalog_signatures())
    # the full explicit small catalog
    for n in range(7):
        for p in range(n + 1):
            assert (p, n - p) in entries
    for extremal in [(7, 0), (0, 7), (8, 0), (0, 8)]:
        assert "explicit" in entries[extremal]
    # diagonal families up to ten generators
    for pair in [(4, 3), (5, 4), (6, 4), (5, 5), (8, 2), (7, 1)]:
        assert "diagonal" in entries[pair]
    assert "periodic" in entries[(9, 0)] and "periodic" in entries[(0, 9)]
    # mirrors the source leaves unstated are not silently covered
    assert (3, 4) not in entries and (2, 5) not in entries and (1, 6) not in entries


def test_catalog_text_lists_signatures():
    text = catalog_text()
    assert "(0,2) route=quaternion target=H(1) replication=plain" in text
    assert "(9,0) route=periodic target=2R(16)" in text


# -- matrix-unit construction


def _tau_two_zero(sig):
    one = Multivector.scalar(sig, 1)
    e1 = Multivector.generator(sig, 1)
    e2 = Multivector.generator(sig, 2)
    e12 = e1 * e2
    return {
        (1, 1): (one + e1) * HALF,
        (1, 2): (e2 + e12) * HALF,
        (2, 1): (e2 - e12) * HALF,
        (2, 2): (one - e1) * HALF,
    }


def test_matrix_units_reproduce_two_zero():
    sig = Signature(2, 0)
    tp = build_from_matrix_units(sig, _tau_two_zero(sig), 2)
    spec = get_spec(sig)
    assert tp.P == spec.transform.P
    assert tp.Pinv == spec.transform.Pinv


def test_matrix_units_reproduce_one_one():
    sig = Signature(1, 1)
    one = Multivector.scalar(sig, 1)
    e1 = Multivector.generator(sig, 1)
    eps1 = Multivector.generator(sig, 2)
    prod = e1 * eps1
    taus = {
        (1, 1): (one + e1) * HALF,
        (1, 2): (eps1 + prod) * Fraction(-1, 2),
        (2, 1): (eps1 - prod) * HALF,
        (2, 2): (one - e1) * HALF,
    }
    tp = build_from_matrix_units(sig, taus, 2)
    spec = get_spec(sig)
    assert tp.P == spec.transform.P


def test_matrix_units_reject_bad_family():
    sig = Signature(2, 0)
    taus = _tau_two_zero(sig)
    taus[(1, 2)] = taus[(1, 2)] * 2  # violates the product law
    with pytest.raises(BasisChangeError):
        build_from_matrix_units(sig, taus, 2)


# -- corrections registry


def test_corrections_have_executable_failing_demos():
    assert CORRECTIONS, "amended formulas must be recorded"
    for corr in CORRECTIONS:
        assert corr.source and corr.literal and corr.corrected and corr.failing_check
        assert corr.demonstrate(), f"literal form unexpectedly passes: {corr.source}"


def test_corrections_markdown_contains_entries():
    doc = corrections_markdown()
    for corr in CORRECTIONS:
        assert corr.source in doc
    assert "Verified as printed" in doc


def test_corrupted_transform_detected():
    spec = get_spec(Signature(2, 0))
    sig = spec.signature
    bad_rows = [list(r) for r in spec.transform.P.rows]
    bad_rows[0][0] = bad_rows[0][0] + Multivector.scalar(sig, 1)
    bad = TransformPair(MvMatrix(sig, bad_rows), spec.transform.Pinv, spec.transform.scale)
    assert bad.identity_defect() is not None
