#include "doctest.h"

#include "ordlen/ordinal.hpp"
#include "ordlen/poset.hpp"
#include "test_util.hpp"

#include <random>

using namespace ordlen;

namespace {

// K disjoint chains with 1..K elements, optionally capped by extra
// elements sitting above every chain.
FinitePoset towers(int k, int caps) {
    std::vector<std::pair<int, int>> rel;
    int next = 0;
    std::vector<int> chain_tops;
    for (int c = 1; c <= k; ++c) {
        for (int i = 0; i + 1 < c; ++i) rel.push_back({next + i, next + i + 1});
        chain_tops.push_back(next + c - 1);
        next += c;
    }
    int below_all = next;
    for (int extra = 0; extra < caps; ++extra) {
        for (int t : chain_tops) rel.push_back({t, next});
        if (extra > 0) rel.push_back({next - 1, next});
        ++next;
    }
    (void)below_all;
    return FinitePoset(static_cast<std::size_t>(next), rel);
}

} // namespace

TEST_CASE("foundation ranks on chains and antichains") {
    FinitePoset c3 = FinitePoset::chain(3);
    CHECK(c3.foundation_rank(0) == Ordinal(0));
    CHECK(c3.foundation_rank(1) == Ordinal(1));
    CHECK(c3.foundation_rank(2) == Ordinal(2));
    CHECK(poset_length(c3) == Ordinal(2));

    FinitePoset a5 = FinitePoset::antichain(5);
    for (int x = 0; x < 5; ++x) CHECK(a5.foundation_rank(x) == Ordinal(0));
    CHECK(poset_length(a5) == Ordinal(0));

    CHECK(poset_length(FinitePoset(0, {})) == Ordinal(0));
    CHECK(poset_length(FinitePoset::chain(1)) == Ordinal(0));
}

TEST_CASE("rank of a single top over growing towers") {
    for (int k = 1; k <= 5; ++k) {
        FinitePoset p = towers(k, 1);
        CHECK(poset_length(p) == Ordinal(static_cast<std::uint64_t>(k)));
        CHECK(p.foundation_rank(static_cast<int>(p.size()) - 1) ==
              Ordinal(static_cast<std::uint64_t>(k)));
    }
    // Two stacked elements above all towers add one more step.
    FinitePoset q = towers(4, 2);
    CHECK(poset_length(q) == Ordinal(5));
}

TEST_CASE("poset construction rejects bad input") {
    CHECK_THROWS_AS(FinitePoset(3, {{0, 0}}), domain_error);
    CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {1, 0}}), domain_error);
    CHECK_THROWS_AS(FinitePoset(3, {{0, 1}, {1, 2}, {2, 0}}), domain_error);
    CHECK_THROWS_AS(FinitePoset(2, {{0, 5}}), domain_error);
    CHECK_THROWS_AS(FinitePoset(5000, {}), domain_error);
    CHECK_NOTHROW(FinitePoset(4096, {}));
}

TEST_CASE("order queries, maximum, covers, induced subposets") {
    // Diamond: 0 below 1 and 2, both below 3.
    FinitePoset d(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(d.less(0, 3));
    CHECK(!d.less(1, 2));
    CHECK(!d.less(3, 0));
    CHECK(d.leq(1, 1));
    CHECK(!d.less(1, 1));
    CHECK(d.maximum() == 3);
    CHECK(!FinitePoset::antichain(2).maximum().has_value());
    CHECK(FinitePoset::chain(4).maximum() == 3);

    auto covers = d.cover_relations();
    CHECK(covers.size() == 4);
    // Transitive edge 0 < 3 must not be a cover.
    for (auto [a, b] : covers) CHECK(!(a == 0 && b == 3));

    FinitePoset side = d.induced({0, 1, 3});
    CHECK(side.size() == 3);
    CHECK(side.less(0, 1));
    CHECK(side.less(1, 2));
    CHECK(poset_length(side) == Ordinal(2));

    CHECK(FinitePoset::chain(3) == FinitePoset(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(d.ranks() == std::vector<std::uint64_t>{0, 1, 1, 2});
}

TEST_CASE("rank is strictly monotone") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 50; ++k) {
        FinitePoset p = testutil::random_poset(rng, 8);
        auto ranks = p.ranks();
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b)
                if (p.less(static_cast<int>(a), static_cast<int>(b)))
                    CHECK(ranks[a] < ranks[b]);
    }
}

TEST_CASE("sum order concatenates, product order pairs") {
    FinitePoset s = sum_order(FinitePoset::chain(2), FinitePoset::chain(3));
    CHECK(s.size() == 5);
    CHECK(s == FinitePoset::chain(5));
    CHECK(poset_length(s) == Ordinal(4));

    FinitePoset p = product_order(FinitePoset::chain(2), FinitePoset::chain(2));
    CHECK(p.size() == 4);
    CHECK(poset_length(p) == Ordinal(2));
    CHECK(p.less(0, 1));
    CHECK(p.less(0, 3));
    CHECK(!p.less(1, 2));
}

TEST_CASE("length of a sum is len P + 1 + len Q for nonempty posets") {
    std::mt19937_64 rng(29);
    Ordinal one(1);
    for (int k = 0; k < 120; ++k) {
        FinitePoset p = testutil::random_poset(rng, 7);
        FinitePoset q = testutil::random_poset(rng, 7);
        Ordinal expect = ord_sum(ord_sum(poset_length(p), one), poset_length(q));
        CHECK(poset_length(sum_order(p, q)) == expect);
    }
    // Empty summands degenerate to the other side.
    FinitePoset e(0, {});
    FinitePoset c = FinitePoset::chain(3);
    CHECK(poset_length(sum_order(e, c)) == Ordinal(2));
    CHECK(poset_length(sum_order(c, e)) == Ordinal(2));
}

TEST_CASE("length of a product is the shuffle sum of lengths") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 120; ++k) {
        FinitePoset p = testutil::random_poset(rng, 7);
        FinitePoset q = testutil::random_poset(rng, 7);
        CHECK(poset_length(product_order(p, q)) ==
              shuffle_sum(poset_length(p), poset_length(q)));
    }
}

TEST_CASE("interval bound for subsets below subsets") {
    FinitePoset c = FinitePoset::chain(4);
    CHECK(check_subset_lemma(c, {0}, {3}));
    CHECK(check_subset_lemma(c, {0}, {0}));
    CHECK(check_subset_lemma(c, {0, 1}, {2, 3}));
    CHECK_THROWS_AS(check_subset_lemma(c, {3}, {0}), domain_error);

    std::mt19937_64 rng(37);
    int tried = 0;
    for (int k = 0; k < 400 && tried < 60; ++k) {
        FinitePoset p = testutil::random_poset(rng, 8);
        std::vector<int> a, b;
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (testutil::pick(rng, 0, 1) == 0) a.push_back(static_cast<int>(v));
            if (testutil::pick(rng, 0, 1) == 0) b.push_back(static_cast<int>(v));
        }
        if (a.empty() || b.empty()) continue;
        bool comparable = true;
        for (int x : a)
            for (int y : b)
                if (!p.leq(x, y)) comparable = false;
        if (!comparable) continue;
        ++tried;
        CHECK(check_subset_lemma(p, a, b));
    }
    CHECK(tried > 10);
}

TEST_CASE("strictly increasing maps shift ranks by at least the bottom rank") {
    std::mt19937_64 rng(43);
    int tried = 0;
    for (int k = 0; k < 500 && tried < 80; ++k) {
        FinitePoset q = testutil::random_poset(rng, 8);
        if (q.size() == 0) continue;
        std::vector<int> sub;
        for (std::size_t v = 0; v < q.size(); ++v)
            if (testutil::pick(rng, 0, 1) == 0) sub.push_back(static_cast<int>(v));
        if (sub.empty()) continue;
        // The image needs a minimum for the bound to make sense.
        int bottom = -1;
        for (int cand : sub) {
            bool least = true;
            for (int other : sub)
                if (!q.leq(cand, other)) least = false;
            if (least) {
                bottom = cand;
                break;
            }
        }
        if (bottom < 0) continue;
        ++tried;
        FinitePoset p = q.induced(sub);
        auto qranks = q.ranks();
        auto pranks = p.ranks();
        for (std::size_t i = 0; i < sub.size(); ++i) {
            Ordinal lhs = ord_sum(Ordinal(qranks[static_cast<std::size_t>(bottom)]),
                                  Ordinal(pranks[i]));
            CHECK(compare(lhs, Ordinal(qranks[static_cast<std::size_t>(sub[i])])) !=
                  std::strong_ordering::greater);
        }
    }
    CHECK(tried > 20);
}

TEST_CASE("poset text format round trips") {
    FinitePoset d(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(parse_poset(format_poset(d)) == d);
    CHECK(format_poset(FinitePoset::antichain(2)) == "2\n");

    FinitePoset parsed = parse_poset("3\n0 < 1\n\n  1 < 2\n");
    CHECK(parsed == FinitePoset::chain(3));

    CHECK_THROWS_AS(parse_poset(""), parse_error);
    CHECK_THROWS_AS(parse_poset("rubbish"), parse_error);
    CHECK_THROWS_AS(parse_poset("2\n0 < 7"), parse_error);
    CHECK_THROWS_AS(parse_poset("2\n0 > 1"), parse_error);
    CHECK_THROWS_AS(parse_poset("2\n0 < 1\n1 < 0"), domain_error);

    try {
        parse_poset("2\n0 < 1 extra");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
}
