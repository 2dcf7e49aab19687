import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvcrit.permutation import (
    CycleParseError,
    DegreeMismatchError,
    Permutation,
    compose,
    element_order,
    format_cycles,
    parse_cycles,
    support,
)

perms = st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.permutations(range(n))).map(Permutation)


def same_degree_pairs(max_degree=9):
    return st.integers(min_value=1, max_value=max_degree).flatmap(
        lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)))
    ).map(lambda pair: (Permutation(pair[0]), Permutation(pair[1])))


class TestParse:
    def test_basic_cycle_product(self):
        p = parse_cycles("(1 2 3)(4 5)", 5)
        assert [p.apply(i) for i in range(1, 6)] == [2, 3, 1, 5, 4]

    def test_empty_string_is_identity(self):
        assert parse_cycles("", 4) == Permutation.identity(4)

    def test_identity_token(self):
        assert parse_cycles("()", 3) == Permutation.identity(3)

    def test_repeated_point_rejected(self):
        with pytest.raises(CycleParseError):
            parse_cycles("(1 2)(2 3)", 3)

    def test_repeated_point_within_cycle_rejected(self):
        with pytest.raises(CycleParseError):
            parse_cycles("(1 2 1)", 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(CycleParseError):
            parse_cycles("(1 6)", 5)

    def test_unclosed_cycle_rejected(self):
        with pytest.raises(CycleParseError):
            parse_cycles("(1 2", 3)

    def test_garbage_rejected(self):
        with pytest.raises(CycleParseError):
            parse_cycles("1 2 3", 3)

    def test_whitespace_tolerant(self):
        assert parse_cycles(" ( 1 2 )  ( 3 4 ) ", 4) == parse_cycles(
            "(1 2)(3 4)", 4)

    def test_fixed_point_cycle_allowed(self):
        assert parse_cycles("(2)", 3) == Permutation.identity(3)


class TestFormat:
    def test_identity_prints_as_unit(self):
        assert format_cycles(Permutation.identity(5)) == "()"

    def test_canonical_form(self):
        assert format_cycles(parse_cycles("(4 5)(1 2 3)", 6)) == "(1 2 3)(4 5)"

    @given(perms)
    def test_round_trip(self, p):
        assert parse_cycles(format_cycles(p), p.degree) == p


class TestAlgebra:
    def test_compose_convention_left_to_right(self):
        p = parse_cycles("(1 2)", 3)
        q = parse_cycles("(2 3)", 3)
        r = compose(p, q)
        assert [r.apply(i) for i in (1, 2, 3)] == [3, 1, 2]

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            compose(Permutation.identity(3), Permutation.identity(4))

    @given(perms)
    def test_identity_laws(self, p):
        e = Permutation.identity(p.degree)
        assert compose(p, e) == p
        assert compose(e, p) == p
        assert compose(p, p.inverse()) == e
        assert p.inverse().inverse() == p

    @given(same_degree_pairs().flatmap(
        lambda pq: st.permutations(range(pq[0].degree)).map(
            lambda r: (pq[0], pq[1], Permutation(r)))))
    def test_associative(self, triple):
        p, q, r = triple
        assert compose(compose(p, q), r) == compose(p, compose(q, r))

    def test_pow(self):
        p = parse_cycles("(1 2 3 4 5)", 5)
        assert p**5 == Permutation.identity(5)
        assert p**-1 == p.inverse()
        assert p**7 == p * p


class TestOrderAndSupport:
    def test_order_examples(self):
        assert element_order(Permutation.identity(4)) == 1
        assert element_order(parse_cycles("(1 2 3)(4 5)", 5)) == 6
        assert element_order(parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11)) == 11

    @given(perms)
    def test_order_is_minimal_annihilator(self, p):
        n = p.order()
        assert (p**n).is_identity()
        for k in range(1, n):
            if n % k == 0:
                assert not (p**k).is_identity()

    def test_support_examples(self):
        assert support(Permutation.identity(5)) == frozenset()
        assert support(parse_cycles("(1 2 3)(4 5)", 7)) == {1, 2, 3, 4, 5}
        assert support(parse_cycles("(2 7)", 7)) == {2, 7}

    @given(same_degree_pairs())
    def test_support_of_product_within_union(self, pq):
        p, q = pq
        assert support(compose(p, q)) <= support(p) | support(q)

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))
        with pytest.raises(ValueError):
            Permutation((0, 3, 1))
