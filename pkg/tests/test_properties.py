"""Corpus-wide law equivalences and permutation-invariance properties.

The corpus is every residuated lattice the from-scratch oracle emits for
orders 2..5, plus ring-derived and ordinal-product instances; the
reformulated laws must agree with the originals on all of it, exhaustively.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reslat import (
    PolyQuot,
    Product,
    Zn,
    are_isomorphic,
    build_ring,
    canonical_key,
    check_bl_implication_form,
    check_div,
    check_div_implication_form,
    check_prel,
    check_prel_implication_form,
    check_prel_meet_identity,
    check_product_below_meet,
    enumerate_reslat_oracle,
    ideal_lattice,
    is_bl,
    lukasiewicz_chain,
    ordinal_product,
    relabel,
    scan_bl_identity,
    validate,
)


def full_corpus():
    pool = []
    for n in (2, 3, 4, 5):
        pool.extend(enumerate_reslat_oracle(n, "all"))
    for expr in (Zn(4), Zn(8), Zn(12), Product((Zn(2), Zn(2))), Product((Zn(2), Zn(4))),
                 PolyQuot(Zn(2), 2), PolyQuot(Zn(4), 2), PolyQuot(Zn(2), 3)):
        pool.append(ideal_lattice(build_ring(expr)).lattice)
    pool.append(ordinal_product(lukasiewicz_chain(2), lukasiewicz_chain(4)))
    pool.append(ordinal_product(
        ideal_lattice(build_ring(Product((Zn(2), Zn(2))))).lattice, lukasiewicz_chain(3)
    ))
    return pool


CORPUS = full_corpus()


@pytest.mark.parametrize("idx", range(len(CORPUS)), ids=lambda i: f"corpus{i}")
def test_bl_iff_single_identity(idx):
    rl = CORPUS[idx]
    assert scan_bl_identity(rl).ok("bl_identity") == is_bl(rl)


@pytest.mark.parametrize("idx", range(len(CORPUS)), ids=lambda i: f"corpus{i}")
def test_prel_iff_meet_identity_and_implication_form(idx):
    rl = CORPUS[idx]
    prel = check_prel(rl).ok("prel")
    assert check_prel_meet_identity(rl).ok("prel_meet_identity") == prel
    assert check_prel_implication_form(rl).ok("prel_implication_form") == prel


@pytest.mark.parametrize("idx", range(len(CORPUS)), ids=lambda i: f"corpus{i}")
def test_div_iff_implication_form(idx):
    rl = CORPUS[idx]
    assert check_div_implication_form(rl).ok("div_implication_form") == check_div(rl).ok("div")


@pytest.mark.parametrize("idx", range(len(CORPUS)), ids=lambda i: f"corpus{i}")
def test_bl_iff_bl_implication_form(idx):
    rl = CORPUS[idx]
    assert check_bl_implication_form(rl).ok("bl_implication_form") == is_bl(rl)


@pytest.mark.parametrize("idx", range(len(CORPUS)), ids=lambda i: f"corpus{i}")
def test_product_below_meet_everywhere(idx):
    assert check_product_below_meet(CORPUS[idx]).ok("product_below_meet")


@pytest.mark.parametrize("idx", range(len(CORPUS)), ids=lambda i: f"corpus{i}")
def test_corpus_validates(idx):
    assert validate(CORPUS[idx]).ok("residuated_lattice")


# --- permutation invariance ----------------------------------------------------


small_corpus = [rl for rl in CORPUS if rl.n <= 6]


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_canonical_key_permutation_invariant(data):
    rl = data.draw(st.sampled_from(small_corpus))
    perm = tuple(data.draw(st.permutations(range(rl.n))))
    moved = relabel(rl, perm)
    assert validate(moved).ok("residuated_lattice")
    assert canonical_key(moved) == canonical_key(rl)
    assert are_isomorphic(rl, moved) is not None


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_serialization_round_trip_under_relabeling(data):
    from reslat import deserialize, serialize

    rl = data.draw(st.sampled_from(small_corpus))
    perm = tuple(data.draw(st.permutations(range(rl.n))))
    moved = relabel(rl, perm)
    assert deserialize(serialize(moved)) == moved
