import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from solvcrit.engine import (
    EnumerationCapExceeded,
    NotASubsetError,
    build_group,
    contains,
    enumerate_elements,
    generated_subgroup,
    group_order,
    normal_closure,
)
from solvcrit.permutation import DegreeMismatchError, Permutation, parse_cycles


def perm(text, degree):
    return parse_cycles(text, degree)


class TestBuildGroup:
    def test_s4(self):
        g = build_group([perm("(1 2 3 4)", 4), perm("(1 2)", 4)])
        assert group_order(g) == 24

    def test_cyclic(self):
        g = build_group([perm("(1 2 3 4 5 6)", 6)])
        assert group_order(g) == 6

    def test_a5_from_two_generators(self):
        # frozen from the even-permutation enumeration oracle
        g = build_group([perm("(1 2 3 4 5)", 5), perm("(3 4 5)", 5)])
        assert group_order(g) == 60
        assert {p.images for p in enumerate_elements(g)} == set(
            oracles.even_permutations(5))

    def test_trivial_group(self):
        g = build_group([Permutation.identity(5)])
        assert group_order(g) == 1

    def test_empty_generator_list_rejected(self):
        with pytest.raises(ValueError):
            build_group([])

    def test_degree_mismatch_rejected(self):
        with pytest.raises(DegreeMismatchError):
            build_group([Permutation.identity(3), Permutation.identity(4)])

    def test_chain_invariants(self):
        g = build_group([perm("(1 2 3 4 5)", 5), perm("(3 4 5)", 5)])
        chain = g.chain
        # product of transversal sizes is the order
        prod = 1
        for size in chain.transversal_sizes():
            prod *= size
        assert prod == group_order(g)
        # strong generators at level i fix all earlier base points
        base0 = [b - 1 for b in chain.base]
        for i, level in enumerate(chain._levels):
            for gen in level.gens:
                assert all(gen[b] == b for b in base0[:i])
                assert chain.contains_tuple(gen)

    @given(st.lists(st.permutations(range(6)), min_size=1, max_size=3))
    @settings(max_examples=40, deadline=None)
    def test_order_matches_closure_oracle(self, images):
        gens = [Permutation(img) for img in images]
        g = build_group(gens)
        assert group_order(g) == oracles.closure_order(
            [tuple(i) for i in images], 6)

    @given(st.lists(st.permutations(range(7)), min_size=1, max_size=3))
    @settings(max_examples=25, deadline=None)
    def test_order_and_solvability_match_sympy(self, images):
        from sympy.combinatorics import Permutation as SymPerm
        from sympy.combinatorics import PermutationGroup

        from solvcrit.structure import is_solvable

        g = build_group([Permutation(img) for img in images])
        reference = PermutationGroup([SymPerm(list(img)) for img in images])
        assert group_order(g) == reference.order()
        assert is_solvable(g).solvable == reference.is_solvable

    def test_degree_one(self):
        g = build_group([Permutation.identity(1)])
        assert group_order(g) == 1
        assert list(enumerate_elements(g)) == [Permutation.identity(1)]


class TestContains:
    def test_odd_permutation_not_in_a5(self, group):
        assert not contains(group("A5"), perm("(1 2)", 5))

    def test_identity_always_contained(self, group):
        assert contains(group("A5"), Permutation.identity(5))

    def test_double_transposition_in_a5(self, group):
        assert contains(group("A5"), perm("(1 2)(3 4)", 5))

    def test_degree_mismatch(self, group):
        with pytest.raises(DegreeMismatchError):
            contains(group("A5"), Permutation.identity(6))

    def test_agrees_with_enumerated_set(self, group):
        # A4 and A5 are proper in their symmetric groups, so this checks
        # both members and non-members
        import itertools
        import random

        g = group("A4")
        members = set(enumerate_elements(g))
        hits = 0
        for img in itertools.permutations(range(4)):
            p = Permutation(img)
            inside = contains(g, p)
            assert inside == (p in members)
            hits += inside
        assert hits == 12

        g = group("A5")
        members = set(enumerate_elements(g))
        rng = random.Random(5)
        domain = list(itertools.permutations(range(5)))
        for img in rng.sample(domain, 40):
            p = Permutation(img)
            assert contains(g, p) == (p in members)


class TestEnumeration:
    def test_counts(self, group):
        for name, n in (("C6", 6), ("S4", 24), ("A5", 60)):
            elems = list(enumerate_elements(group(name)))
            assert len(elems) == n
            assert len(set(elems)) == n

    def test_a5_order_multiset(self, group):
        from collections import Counter

        counts = Counter(p.order() for p in enumerate_elements(group("A5")))
        assert counts == {1: 1, 2: 15, 3: 20, 5: 24}

    def test_all_members(self, group):
        g = group("S4")
        for p in enumerate_elements(g):
            assert contains(g, p)

    def test_cap_exceeded(self, group):
        with pytest.raises(EnumerationCapExceeded):
            list(enumerate_elements(group("A5"), cap=59))

    def test_cap_env_override(self, group, monkeypatch):
        monkeypatch.setenv("SOLVCRIT_ENUM_CAP", "10")
        with pytest.raises(EnumerationCapExceeded):
            list(enumerate_elements(group("A5")))
        monkeypatch.setenv("SOLVCRIT_ENUM_CAP", "60")
        assert len(list(enumerate_elements(group("A5")))) == 60


class TestDeterminism:
    def test_identical_rebuild(self):
        gens = [perm("(1 2 3 4 5 6 7)", 7), perm("(1 2)(3 4)", 7)]
        a = build_group(gens)
        b = build_group(gens)
        assert a.chain.base == b.chain.base
        assert list(a.chain.iter_tuples()) == list(b.chain.iter_tuples())

    def test_base_rule_smallest_moved_point(self):
        g = build_group([perm("(3 4 5)", 6)])
        assert g.chain.base == (3,)


class TestGeneratedSubgroup:
    def test_single_three_cycle(self):
        assert group_order(generated_subgroup([perm("(1 2 3)", 4)])) == 3

    def test_a4_on_support(self):
        # frozen from exhaustive closure of the two generators
        g = generated_subgroup([perm("(1 2)(3 4)", 5), perm("(1 2 3)", 5)])
        assert group_order(g) == 12

    def test_duplicate_generator(self):
        x = perm("(1 2 3 4 5 6)", 7)
        g = generated_subgroup([x, x])
        assert group_order(g) == x.order()


class TestNormalClosure:
    def test_three_cycle_in_s4_gives_a4(self, group):
        nc = normal_closure(group("S4"), [perm("(1 2 3)", 4)])
        assert group_order(nc) == 12

    def test_identity_seed_gives_trivial(self, group):
        nc = normal_closure(group("S4"), [Permutation.identity(4)])
        assert group_order(nc) == 1

    def test_simple_group_closure_is_whole_group(self, group):
        nc = normal_closure(group("A5"), [perm("(1 2 3)", 5)])
        assert group_order(nc) == 60

    def test_seed_outside_group_rejected(self, group):
        with pytest.raises(NotASubsetError):
            normal_closure(group("A5"), [perm("(1 2)", 5)])

    def test_matches_brute_force_closure(self, group):
        # independent oracle: conjugate by every group element, then close
        g = group("S4")
        seed = perm("(1 2)(3 4)", 4).images
        everything = oracles.closure(
            [x.images for x in g.generators], 4)
        conjugates = {oracles.mult(oracles.mult(oracles.inv(t), seed), t)
                      for t in everything}
        expected = len(oracles.closure(conjugates, 4))
        nc = normal_closure(g, [perm("(1 2)(3 4)", 4)])
        assert group_order(nc) == expected == 4

    def test_result_closed_under_conjugation(self, group):
        g = group("S5")
        nc = normal_closure(g, [perm("(1 2 3)", 5)])
        for h in nc.generators:
            for gen in g.generators:
                assert contains(nc, gen.inverse() * h * gen)


class TestConjugationConsistency:
    def test_subgroup_order_is_conjugation_invariant(self, group):
        import random

        g = group("A5")
        elems = list(enumerate_elements(g))
        rng = random.Random(7)
        x = perm("(1 2 3)", 5)
        y = perm("(1 2 3 4 5)", 5)
        base = group_order(generated_subgroup([x, y]))
        for _ in range(20):
            t = rng.choice(elems)
            xt = t.inverse() * x * t
            yt = t.inverse() * y * t
            assert group_order(generated_subgroup([xt, yt])) == base
