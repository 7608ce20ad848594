import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.finite_groups import (
    action_kernel,
    automorphisms,
    center,
    check_twist_condition,
    cyclic_group,
    direct_product,
    element_orders,
    homomorphisms_to_aut,
    inner_action,
    is_two_step_nilpotent_group,
    random_action_pair,
    search_non_inner_twists,
    semidirect_product,
    trivial_action,
    twisted_inverse,
    twisted_product,
    validate_action,
    validate_group,
)
from src.corpus import finite_corpus, finite_group
from src.entity import DimensionMismatchError, GroupAction, IngestionError, OrderCapError
from src.evaluation.property_evaluator import NILPOTENT_MAX_ORDER, RANDOM_PAIR_MAX_ORDER

SMALL_GROUPS = [name for name, group in finite_corpus().items() if group.order <= 8]
INNER_TWIST_GROUPS = [name for name, group in finite_corpus().items() if group.order <= NILPOTENT_MAX_ORDER]


def test_corpus_groups_are_valid(corpus):
    for name, group in corpus.items():
        assert validate_group(group).passed, name
        assert validate_action(inner_action(group)).passed, name


def test_relabelled_identity_is_the_only_failure():
    report = validate_group([[1, 0], [0, 1]])
    assert [f.message for f in report.failures] == ["0 não é identidade"]


def test_non_associative_table_reports_triple():
    # laço de ordem 5 com todo elemento involutivo: não pode ser grupo
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    report = validate_group(table)
    assert not report.passed
    assert report.first_failure.message == "associatividade"
    assert len(report.first_failure.where) == 3


def test_non_square_table_is_rejected():
    with pytest.raises(IngestionError):
        validate_group([[0, 1, 2], [1, 2, 0]])


def test_quaternion_relations():
    q8 = finite_group("Q8")
    i, j, k = 2, 4, 6
    assert q8.mul(i, j) == k
    assert q8.mul(j, i) == k + 1
    assert center(q8) == frozenset({0, 1})
    assert list(element_orders(q8)) == [1, 2, 4, 4, 4, 4, 4, 4]


@pytest.mark.parametrize("name", ["S3", "A4"])
def test_inner_twist_of_non_nilpotent_group_is_not_a_group(name):
    m = finite_group(name)
    action = inner_action(m)
    outcome = twisted_product(m, m, action, action)
    assert not is_two_step_nilpotent_group(m).holds
    assert not outcome.is_group
    assert outcome.table is None
    assert len(outcome.failure_witness) == 3
    assert outcome.order == m.order**2


@pytest.mark.parametrize("name", ["Z1", "Z4", "Z2xZ2", "D4", "Q8", "D4xZ2"])
def test_inner_twist_of_two_step_nilpotent_group_is_a_group(name):
    m = finite_group(name)
    action = inner_action(m)
    outcome = twisted_product(m, m, action, action)
    assert is_two_step_nilpotent_group(m).holds
    assert outcome.is_group
    assert validate_group(outcome.table).passed
    assert outcome.table.order == m.order**2


@pytest.mark.parametrize("name", INNER_TWIST_GROUPS)
def test_inner_twist_is_group_iff_two_step_nilpotent(name):
    m = finite_group(name)
    action = inner_action(m)
    outcome = twisted_product(m, m, action, action)
    nilpotent = is_two_step_nilpotent_group(m)
    assert outcome.is_group == nilpotent.holds
    assert check_twist_condition(action, action).holds == nilpotent.holds


def test_random_action_pairs_agree_with_kernel_condition():
    groups = [g for g in finite_corpus().values() if g.order <= RANDOM_PAIR_MAX_ORDER]
    rng = np.random.default_rng(0)
    cache = {}
    for _ in range(50):
        g = groups[int(rng.integers(len(groups)))]
        h = groups[int(rng.integers(len(groups)))]
        lam, mu = random_action_pair(g, h, rng, cache)
        assert twisted_product(g, h, lam, mu).is_group == check_twist_condition(lam, mu).holds


def test_inner_condition_fails_on_lambda_clause():
    s3 = finite_group("S3")
    action = inner_action(s3)
    result = check_twist_condition(action, action)
    assert not result.holds
    assert result.clause == "lambda"
    g, h = result.witness
    assert s3.mul(g, h) != s3.mul(h, g)


def test_semidirect_product_is_a_twisted_product(z3_by_z2):
    z3, z2, lam, mu = z3_by_z2
    outcome = twisted_product(z3, z2, lam, mu)
    assert outcome.is_group
    assert np.array_equal(outcome.table.table, semidirect_product(z3, z2, lam).table)
    assert center(outcome.table) == frozenset({0})


def test_trivial_actions_give_direct_product():
    g, h = finite_group("S3"), cyclic_group(4)
    outcome = twisted_product(g, h, trivial_action(h, g), trivial_action(g, h))
    assert outcome.is_group
    assert np.array_equal(outcome.table.table, direct_product(g, h).table)


def test_twisted_product_order_cap(z3_by_z2):
    z3, z2, lam, mu = z3_by_z2
    with pytest.raises(OrderCapError):
        twisted_product(z3, z2, lam, mu, order_cap=5)


def test_twisted_product_dimension_mismatch(z3_by_z2):
    z3, z2, lam, mu = z3_by_z2
    with pytest.raises(DimensionMismatchError):
        twisted_product(z3, z3, lam, mu)
    with pytest.raises(DimensionMismatchError):
        check_twist_condition(lam, lam)


def test_twisted_inverse_is_two_sided_in_a_group(z3_by_z2):
    z3, z2, lam, mu = z3_by_z2
    for g1 in range(3):
        for h1 in range(2):
            inverse = twisted_inverse(g1, h1, lam, mu)
            assert inverse.two_sided


@pytest.mark.parametrize(
    "name, count",
    [("Z1", 1), ("Z8", 4), ("Z2xZ2", 6), ("S3", 6), ("D4", 8), ("Q8", 24)],
)
def test_automorphism_counts(name, count):
    auts = automorphisms(finite_group(name))
    assert len(auts) == count
    assert np.array_equal(auts[0], np.arange(finite_group(name).order))


def test_homomorphisms_to_aut():
    z2, z3 = cyclic_group(2), cyclic_group(3)
    actions = homomorphisms_to_aut(z2, z3)
    assert len(actions) == 2
    assert np.array_equal(actions[0].maps, trivial_action(z2, z3).maps)
    assert all(validate_action(a).passed for a in actions)
    assert len(homomorphisms_to_aut(z3, z2)) == 1


def test_action_kernel(z3_by_z2):
    z3, z2, lam, mu = z3_by_z2
    assert action_kernel(lam) == frozenset({0})
    assert action_kernel(mu) == frozenset({0, 1, 2})
    assert action_kernel(inner_action(finite_group("Q8"))) == frozenset({0, 1})


def test_action_rejects_wrong_shape():
    with pytest.raises(IngestionError):
        GroupAction(cyclic_group(2), cyclic_group(3), [[0, 1, 2]])


def test_search_non_inner_twists():
    assert search_non_inner_twists(cyclic_group(2)) == []
    candidates = search_non_inner_twists(finite_group("S3"), limit=5)
    assert len(candidates) == 5
    assert all(not (c.lam_inner and c.mu_inner) for c in candidates)
    assert all(c.is_group == c.condition.holds for c in candidates)


def test_search_finds_non_inner_group_on_z4():
    # em Z4 a ação interna é trivial; a inversão não é interna
    candidates = search_non_inner_twists(cyclic_group(4))
    assert len(candidates) == 3
    assert any(c.condition.holds for c in candidates)
    assert [c.is_group for c in candidates] == [c.condition.holds for c in candidates]


@settings(max_examples=40, deadline=None)
@given(
    g_name=st.sampled_from(SMALL_GROUPS),
    h_name=st.sampled_from(SMALL_GROUPS),
    seed=st.integers(0, 2**32 - 1),
)
def test_twisted_product_is_group_iff_kernel_condition(g_name, h_name, seed):
    g, h = finite_group(g_name), finite_group(h_name)
    lam, mu = random_action_pair(g, h, np.random.default_rng(seed))
    outcome = twisted_product(g, h, lam, mu)
    condition = check_twist_condition(lam, mu)
    assert outcome.is_group == condition.holds
    if outcome.is_group:
        assert twisted_inverse(g.order - 1, h.order - 1, lam, mu).two_sided


def test_search_non_inner_twists_respects_order_cap():
    with pytest.raises(OrderCapError):
        search_non_inner_twists(cyclic_group(4), order_cap=8)
