"""Ordinal product construction and its structural consequences."""

import pytest

from reslat import (
    Product,
    Zn,
    are_isomorphic,
    build_ring,
    check_div,
    check_prel,
    deserialize,
    enumerate_bl_ordinal,
    fixture_path,
    ideal_lattice,
    is_bl,
    is_chain,
    is_mv,
    lukasiewicz_chain,
    ordinal_product,
    validate,
)


def id_z2():
    return ideal_lattice(build_ring(Zn(2))).lattice


def test_size_and_validation():
    for n1, n2 in ((2, 2), (2, 4), (3, 3), (4, 2)):
        a, b = lukasiewicz_chain(n1), lukasiewicz_chain(n2)
        out = ordinal_product(a, b)
        assert out.n == n1 + n2 - 1
        assert validate(out).ok("residuated_lattice")


def test_two_chains_give_example5_tables():
    out = ordinal_product(id_z2(), id_z2())
    fx = deserialize(fixture_path("example5_order3").read_text())
    # identical tables cell by cell after the canonical relabeling (identity)
    assert out.leq == fx.leq
    assert out.odot == fx.odot
    assert out.imp == fx.imp
    assert out.odot[1][1] == 1  # the glued midpoint is idempotent


def test_reconstructs_five_element_example():
    z22 = ideal_lattice(build_ring(Product((Zn(2), Zn(2))))).lattice
    out = ordinal_product(id_z2(), z22)
    fx = deserialize(fixture_path("example3").read_text())
    assert out.n == 5
    assert are_isomorphic(out, fx) is not None


def test_boolean_base_satisfies_div_but_not_prel():
    z22 = ideal_lattice(build_ring(Product((Zn(2), Zn(2))))).lattice
    out = ordinal_product(z22, lukasiewicz_chain(2))
    assert validate(out).ok("residuated_lattice")
    assert check_div(out).ok("div")
    assert not check_prel(out).ok("prel")


def test_chain_base_preserves_bl():
    pool = [rl for n in (2, 3, 4) for rl in enumerate_bl_ordinal(n)]
    chains = [rl for rl in pool if is_chain(rl)]
    for c in chains:
        for b in pool:
            if c.n + b.n - 1 > 7:
                continue
            out = ordinal_product(c, b)
            assert is_bl(out)


def test_chain_times_chain_is_chain():
    for a in (lukasiewicz_chain(2), lukasiewicz_chain(3)):
        for b in (lukasiewicz_chain(2), lukasiewicz_chain(4)):
            assert is_chain(ordinal_product(a, b))


def test_mv_times_mv_is_bl_not_mv():
    # with a chain first factor the product is BL; it is never involutive
    # because the glued element's double negation rises to the new top
    a = lukasiewicz_chain(3)
    for b in (lukasiewicz_chain(2), ideal_lattice(build_ring(Product((Zn(2), Zn(2))))).lattice):
        out = ordinal_product(a, b)
        assert is_bl(out)
        glued = a.n - 1
        assert out.neg(out.neg(glued)) == out.top != glued
        assert not is_mv(out).ok("mv")


def test_associative_up_to_isomorphism():
    pool = [rl for n in (2, 3, 4) for rl in enumerate_bl_ordinal(n)]
    small = [rl for rl in pool if rl.n <= 3]
    for a in small:
        for b in small:
            for c in small:
                left = ordinal_product(ordinal_product(a, b), c)
                right = ordinal_product(a, ordinal_product(b, c))
                assert are_isomorphic(left, right) is not None


def test_not_commutative():
    a, b = lukasiewicz_chain(3), lukasiewicz_chain(2)
    assert are_isomorphic(ordinal_product(a, b), ordinal_product(b, a)) is None


def test_name_uniqueness_under_iteration():
    from reslat import deserialize, serialize

    out = ordinal_product(
        ordinal_product(lukasiewicz_chain(2), lukasiewicz_chain(2)), lukasiewicz_chain(2)
    )
    assert len(set(out.names)) == out.n
    # deduplicated names stay serializable
    deep = ordinal_product(out, ordinal_product(lukasiewicz_chain(2), lukasiewicz_chain(2)))
    assert len(set(deep.names)) == deep.n
    assert deserialize(serialize(deep)) == deep
