#include "egypt/operators.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace egypt;

namespace {

Rational unit_sum(const std::vector<Int>& terms) {
    Rational total;
    for (const Int& t : terms) total += Rational::unit(t);
    return total;
}

}  // namespace

TEST_CASE("split_basic") {
    OperatorInstance inst = split_basic(Int(3));
    CHECK(inst.consumed() == std::vector<Int>{3});
    CHECK(inst.produced() == std::vector<Int>{4, 12});

    CHECK(split_basic(Int(2)).produced() == std::vector<Int>{3, 6});
    CHECK(split_basic(Int(10)).produced() == std::vector<Int>{11, 110});
    CHECK_THROWS_AS(split_basic(Int(1)), std::domain_error);
}

TEST_CASE("split_product") {
    OperatorInstance big = split_product({2, 3, 4, 5, 6});
    CHECK(big.consumed() == std::vector<Int>{720});
    CHECK(big.produced() == std::vector<Int>{2400, 2880, 3600, 4800, 7200});

    OperatorInstance two = split_product({2, 3});
    CHECK(two.consumed() == std::vector<Int>{6});
    CHECK(two.produced() == std::vector<Int>{10, 15});

    CHECK_THROWS_AS(split_product({7}), std::domain_error);
    CHECK_THROWS_AS(split_product({0, 3}), std::domain_error);
    CHECK_THROWS_AS(split_product({1, 1}), std::domain_error);
}

TEST_CASE("split_product with a unit factor matches split_basic") {
    for (long n = 2; n <= 200; ++n) {
        OperatorInstance via_product = split_product({Int(1), Int(n)});
        OperatorInstance basic = split_basic(Int(n));
        CHECK(via_product.consumed() == basic.consumed());
        CHECK(via_product.produced() == basic.produced());
    }
}

TEST_CASE("split_even") {
    // n=2: (2*3, 2*2*3); oracle: 1/6 + 1/12 = 1/4 exactly.
    CHECK(split_even(Int(4)).produced() == std::vector<Int>{6, 12});
    CHECK(split_even(Int(6)).produced() == std::vector<Int>{8, 24});
    CHECK_THROWS_AS(split_even(Int(3)), std::domain_error);
    CHECK_THROWS_AS(split_even(Int(2)), std::domain_error);
}

TEST_CASE("split_even is split_basic scaled by 2") {
    for (long n = 2; n <= 200; ++n) {
        OperatorInstance even = split_even(Int(2 * n));
        OperatorInstance basic = split_basic(Int(n));
        REQUIRE(even.produced().size() == 2);
        CHECK(even.produced()[0] == 2 * basic.produced()[0]);
        CHECK(even.produced()[1] == 2 * basic.produced()[1]);
    }
}

TEST_CASE("split_odd3 known triples") {
    CHECK(split_odd3(Int(3)).produced() == std::vector<Int>{5, 9, 45});
    CHECK(split_odd3(Int(5)).produced() == std::vector<Int>{9, 15, 45});
    CHECK(split_odd3(Int(7)).produced() == std::vector<Int>{11, 21, 231});
    CHECK_THROWS_AS(split_odd3(Int(4)), std::domain_error);
    CHECK_THROWS_AS(split_odd3(Int(1)), std::domain_error);
}

TEST_CASE("split_odd3 sweep: odd, distinct, exact") {
    for (long n = 3; n <= 999; n += 2) {
        OperatorInstance inst = split_odd3(Int(n));
        REQUIRE(inst.produced().size() == 3);
        CHECK(parity_signature(inst.produced()).all_odd());
        CHECK(inst.produced()[0] < inst.produced()[1]);
        CHECK(inst.produced()[1] < inst.produced()[2]);
        CHECK(unit_sum(inst.produced()) == Rational(1, n));
    }
}

TEST_CASE("exact-sum preservation across parameter sweeps") {
    for (long n = 2; n <= 500; ++n)
        CHECK(unit_sum(split_basic(Int(n)).produced()) == Rational(1, n));
    for (long q = 2; q <= 50; ++q)
        for (long d = 1; d <= 50; ++d) {
            OperatorInstance inst = rewrite_pair(Int(q), Int(d));
            CHECK(unit_sum(inst.consumed()) == unit_sum(inst.produced()));
        }
    // Product lists over {2..9}, a few lengths.
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> pick(2, 9);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t len = 2 + trial % 4;
        std::vector<Int> xs;
        std::set<long> used;
        while (xs.size() < len) {
            long v = pick(rng);
            if (used.insert(v).second) xs.emplace_back(v);
        }
        OperatorInstance inst = split_product(xs);
        CHECK(unit_sum(inst.consumed()) == unit_sum(inst.produced()));
    }
}

TEST_CASE("rewrite_pair table rows") {
    OperatorInstance r1 = rewrite_pair(Int(2), Int(1));
    CHECK(r1.consumed() == std::vector<Int>{6, 10});
    CHECK(r1.produced() == std::vector<Int>{5, 15});

    OperatorInstance r2 = rewrite_pair(Int(3), Int(2));
    CHECK(r2.consumed() == std::vector<Int>{15, 39});
    CHECK(r2.produced() == std::vector<Int>{13, 65});

    OperatorInstance r3 = rewrite_pair(Int(3), Int(4));
    CHECK(r3.consumed() == std::vector<Int>{21, 51});
    CHECK(r3.produced() == std::vector<Int>{17, 119});

    CHECK_THROWS_AS(rewrite_pair(Int(1), Int(1)), std::domain_error);
    CHECK_THROWS_AS(rewrite_pair(Int(2), Int(0)), std::domain_error);
}

TEST_CASE("reversed swaps the sides") {
    OperatorInstance fwd = rewrite_pair(Int(2), Int(1));
    OperatorInstance bwd = reversed(fwd);
    CHECK(bwd.consumed() == fwd.produced());
    CHECK(bwd.produced() == fwd.consumed());
}

TEST_CASE("rewrite_match") {
    auto fwd = rewrite_match(Int(6), Int(10));
    REQUIRE(fwd.has_value());
    CHECK(fwd->first.q == 2);
    CHECK(fwd->first.d == 1);
    CHECK(fwd->second == RewriteDirection::forward);

    auto bwd = rewrite_match(Int(5), Int(15));
    REQUIRE(bwd.has_value());
    CHECK(bwd->first.q == 2);
    CHECK(bwd->first.d == 1);
    CHECK(bwd->second == RewriteDirection::backward);

    CHECK_FALSE(rewrite_match(Int(7), Int(11)).has_value());
    CHECK_THROWS_AS(rewrite_match(Int(5), Int(5)), std::domain_error);
}

TEST_CASE("rewrite_match round-trips rewrite_pair") {
    for (long q = 2; q <= 20; ++q)
        for (long d = 1; d <= 20; ++d) {
            OperatorInstance inst = rewrite_pair(Int(q), Int(d));
            auto m = rewrite_match(inst.consumed()[0], inst.consumed()[1]);
            REQUIRE(m.has_value());
            CHECK(m->second == RewriteDirection::forward);
            CHECK(m->first.q == q);
            CHECK(m->first.d == d);
        }
}

TEST_CASE("merge_pair") {
    CHECK(merge_pair(Int(4), Int(12)) == Int(3));
    CHECK(merge_pair(Int(10), Int(15)) == Int(6));
    CHECK_FALSE(merge_pair(Int(3), Int(5)).has_value());
    CHECK_THROWS_AS(merge_pair(Int(4), Int(4)), std::domain_error);
}

TEST_CASE("merge_pair inverts split_basic") {
    for (long n = 2; n <= 500; ++n) {
        OperatorInstance inst = split_basic(Int(n));
        auto merged = merge_pair(inst.produced()[0], inst.produced()[1]);
        REQUIRE(merged.has_value());
        CHECK(*merged == Int(n));
    }
}

TEST_CASE("apply_to_repr strict") {
    EgyptianRepr x{2, 3, 6};
    EgyptianRepr out = apply_to_repr(x, split_basic(Int(3)));
    CHECK(out == EgyptianRepr{2, 4, 6, 12});

    CHECK_THROWS_AS(apply_to_repr(x, split_basic(Int(2))), std::domain_error);
    CHECK_THROWS_AS(apply_to_repr(x, split_basic(Int(5))), std::domain_error);

    EgyptianRepr pair{5, 15};
    EgyptianRepr back =
        apply_to_repr(pair, reversed(rewrite_pair(Int(2), Int(1))));
    CHECK(back == EgyptianRepr{6, 10});
}

TEST_CASE("apply_to_repr resplit repairs collisions") {
    EgyptianRepr x{2, 3, 6};
    // split_basic(2) produces 3 and 6, both already present.
    EgyptianRepr out =
        apply_to_repr(x, split_basic(Int(2)), CollisionPolicy::resplit);
    CHECK(repr_sum(out) == repr_sum(x));
    std::set<Int> uniq(out.denominators().begin(), out.denominators().end());
    CHECK(uniq.size() == out.size());
}

TEST_CASE("apply_to_repr resplit property over random cases") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> pick(2, 12);
    for (int trial = 0; trial < 200; ++trial) {
        EgyptianRepr x;
        for (int i = 0; i < 4; ++i) {
            Int d(pick(rng));
            if (!x.contains(d)) x.insert(d);
        }
        Int target = x.denominators()[rng() % x.size()];
        EgyptianRepr out = apply_to_repr(x, split_basic(target),
                                         CollisionPolicy::resplit);
        CHECK(repr_sum(out) == repr_sum(x));
    }
}

TEST_CASE("classify_operator") {
    CHECK(classify_operator(EgyptianRepr{3}, EgyptianRepr{4, 12}) ==
          OperatorKind::Splitter);
    CHECK(classify_operator(EgyptianRepr{6, 10}, EgyptianRepr{5, 15}) ==
          OperatorKind::Rewriter);
    CHECK(classify_operator(EgyptianRepr{4, 12}, EgyptianRepr{3}) ==
          OperatorKind::Merger);
    CHECK_THROWS_AS(classify_operator(EgyptianRepr{3}, EgyptianRepr{4, 13}),
                    std::domain_error);
}

TEST_CASE("parity preservation of the named rules") {
    CHECK(is_parity_preserving(split_even(Int(4))));
    CHECK_FALSE(is_parity_preserving(split_basic(Int(3))));
    CHECK(is_parity_preserving(rewrite_pair(Int(3), Int(2))));
}

TEST_CASE("odd_preserving_check matches the biconditional") {
    CHECK(odd_preserving_check(Int(3), Int(2)));
    CHECK_FALSE(odd_preserving_check(Int(2), Int(1)));
    CHECK(odd_preserving_check(Int(5), Int(4)));

    for (long q = 2; q <= 50; ++q)
        for (long d = 1; d <= 50; ++d) {
            OperatorInstance inst = rewrite_pair(Int(q), Int(d));
            bool all_odd = parity_signature(inst.consumed()).all_odd() &&
                           parity_signature(inst.produced()).all_odd();
            CHECK(all_odd == odd_preserving_check(Int(q), Int(d)));
        }
}

TEST_CASE("inequality chain") {
    CHECK(inequality_chain_check(Int(2), Int(1)));
    CHECK(inequality_chain_check(Int(5), Int(2)));
    CHECK(inequality_chain_check(Int(3), Int(4)));
    for (long q = 2; q <= 50; ++q)
        for (long d = 1; d <= 50; ++d)
            CHECK(inequality_chain_check(Int(q), Int(d)));
}

TEST_CASE("basic-split parity table") {
    for (long n = 2; n <= 200; ++n) {
        OperatorInstance inst = split_basic(Int(n));
        if (n % 2 == 0) {
            CHECK(parity_of(inst.produced()[0]) == Parity::odd);
        } else {
            CHECK(parity_of(inst.produced()[0]) == Parity::even);
        }
        CHECK(parity_of(inst.produced()[1]) == Parity::even);
    }
}

TEST_CASE("rewriter parity table as a function of (parity d, parity q)") {
    auto expected = [](Parity d, Parity q) -> std::string {
        if (d == Parity::odd && q == Parity::odd) return "(e,o,e,o,e)";
        if (d == Parity::odd && q == Parity::even) return "(o,o,e,e,o)";
        if (d == Parity::even && q == Parity::odd) return "(o,o,o,o,o)";
        return "(e,e,e,e,e)";
    };
    for (long q = 2; q <= 49; ++q)
        for (long d = 1; d <= 48; ++d) {
            RewriteParams p = RewriteParams::from(Int(q), Int(d));
            std::vector<Int> terms{p.r, p.s, p.q * p.r, p.q * p.s, p.r * p.s};
            CHECK(parity_signature(terms).str() ==
                  expected(parity_of(p.d), parity_of(p.q)));
        }
}

TEST_CASE("mismatched instances cannot be constructed") {
    CHECK_THROWS_AS(OperatorInstance("bogus", {}, {Int(6), Int(10)},
                                     {Int(5), Int(16)}),
                    std::domain_error);
}

TEST_CASE("operator instance text form") {
    CHECK(rewrite_pair(Int(2), Int(1)).str() ==
          "rewrite(q=2,d=1): [6,10] -> [5,15]");
    CHECK(split_basic(Int(3)).str() == "basic_split(n=3): [3] -> [4,12]");
}
