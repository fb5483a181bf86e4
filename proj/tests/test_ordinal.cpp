#include "doctest.h"

#include "ordlen/ordinal.hpp"
#include "test_util.hpp"

#include <random>

using namespace ordlen;

namespace {

Ordinal w(std::uint64_t e, std::uint64_t c = 1) { return Ordinal::term(e, c); }

// Every ordinal below w^4 with the given valence and exponents <= 3.
std::vector<Ordinal> ordinals_with_valence(std::uint64_t val) {
    std::vector<Ordinal> out;
    for (std::uint64_t c3 = 0; c3 <= val; ++c3)
        for (std::uint64_t c2 = 0; c2 + c3 <= val; ++c2)
            for (std::uint64_t c1 = 0; c1 + c2 + c3 <= val; ++c1) {
                std::uint64_t c0 = val - c1 - c2 - c3;
                Ordinal a = shuffle_sum(shuffle_sum(w(3, c3), w(2, c2)),
                                        shuffle_sum(w(1, c1), w(0, c0)));
                out.push_back(a);
            }
    return out;
}

} // namespace

TEST_CASE("ordinal construction and accessors") {
    Ordinal zero;
    CHECK(zero.is_zero());
    CHECK(!zero.degree().has_value());
    CHECK(!zero.order().has_value());
    CHECK(zero.valence() == 0);

    Ordinal a = Ordinal::from_terms({{2, 3}, {1, 9}, {0, 7}});
    CHECK(a.degree() == 2);
    CHECK(a.order() == 0);
    CHECK(a.valence() == 19);
    CHECK(a.coefficient(2) == 3);
    CHECK(a.coefficient(1) == 9);
    CHECK(a.coefficient(0) == 7);
    CHECK(a.coefficient(5) == 0);

    CHECK(Ordinal(5) == Ordinal::term(0, 5));
    CHECK(Ordinal::omega() == Ordinal::term(1, 1));
    CHECK(Ordinal::term(3, 0).is_zero());
}

TEST_CASE("ordinal comparison is lexicographic on normal forms") {
    CHECK(compare(w(2), w(1, 100)) == std::strong_ordering::greater);
    CHECK(w(1) > Ordinal(1000));
    CHECK(Ordinal(3) < Ordinal(4));
    CHECK(shuffle_sum(w(1), Ordinal(1)) > w(1));
    CHECK(w(2, 2) > shuffle_sum(w(2), w(1, 50)));
    CHECK(Ordinal() < Ordinal(1));
    CHECK(compare(w(1), w(1)) == std::strong_ordering::equal);
}

TEST_CASE("ordinal sum absorbs low terms") {
    CHECK(ord_sum(Ordinal(3), w(1)) == w(1));
    CHECK(ord_sum(w(1), Ordinal(3)) == Ordinal::from_terms({{1, 1}, {0, 3}}));
    CHECK(ord_sum(Ordinal::from_terms({{1, 1}, {0, 3}}), Ordinal(5)) ==
          Ordinal::from_terms({{1, 1}, {0, 8}}));
    CHECK(ord_sum(Ordinal::from_terms({{2, 1}, {0, 4}}), w(1, 2)) ==
          Ordinal::from_terms({{2, 1}, {1, 2}}));
    CHECK(ord_sum(w(1, 3), w(1, 2)) == w(1, 5));
    CHECK(ord_sum(Ordinal(), w(2)) == w(2));
    CHECK(ord_sum(w(2), Ordinal()) == w(2));

    Ordinal a = Ordinal::from_terms({{2, 1}, {1, 4}});
    Ordinal b = Ordinal::from_terms({{1, 1}, {0, 1}});
    Ordinal c = Ordinal(9);
    CHECK(ord_sum(ord_sum(a, b), c) == ord_sum(a, ord_sum(b, c)));
}

TEST_CASE("shuffle sum adds coefficients") {
    Ordinal a = Ordinal::from_terms({{1, 1}, {0, 3}});
    Ordinal b = Ordinal::from_terms({{2, 1}, {1, 1}});
    CHECK(shuffle_sum(a, b) == Ordinal::from_terms({{2, 1}, {1, 2}, {0, 3}}));
    CHECK(shuffle_sum(a, b) == shuffle_sum(b, a));
    CHECK(shuffle_sum(a, Ordinal()) == a);

    // The concatenation sum never exceeds the shuffle sum.
    CHECK(compare(ord_sum(a, b), shuffle_sum(a, b)) != std::strong_ordering::greater);
}

TEST_CASE("shuffle sum agrees with the interleaving oracle on small pairs") {
    std::vector<Ordinal> smalls;
    for (std::uint64_t v = 0; v <= 2; ++v)
        for (const Ordinal& a : ordinals_with_valence(v)) smalls.push_back(a);
    for (const Ordinal& a : smalls)
        for (const Ordinal& b : smalls)
            CHECK(shuffle_sum(a, b) == shuffle_sum_oracle(a, b));
}

TEST_CASE("shuffle oracle rejects large valences") {
    Ordinal big = w(1, 7);
    CHECK_THROWS_AS(shuffle_sum_oracle(big, w(0, 6)), domain_error);
    CHECK_NOTHROW(shuffle_sum_oracle(big, w(0, 5)));
}

TEST_CASE("sums coincide exactly when the right side reaches the left order") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 300; ++k) {
        Ordinal a, b;
        for (int t = 0; t < 3; ++t) {
            a = shuffle_sum(a, w(testutil::pick(rng, 0, 3), testutil::pick(rng, 0, 2)));
            b = shuffle_sum(b, w(testutil::pick(rng, 0, 3), testutil::pick(rng, 0, 2)));
        }
        bool same = ord_sum(a, b) == shuffle_sum(a, b);
        bool expected = a.is_zero() || b.is_zero() || *b.degree() <= *a.order();
        CHECK(same == expected);
    }
}

TEST_CASE("scalar multiple and omega shift") {
    Ordinal a = Ordinal::from_terms({{2, 3}, {0, 1}});
    CHECK(scalar_mul(0, a).is_zero());
    CHECK(scalar_mul(1, a) == a);
    CHECK(scalar_mul(4, a) == Ordinal::from_terms({{2, 12}, {0, 4}}));
    CHECK(omega_shift(0, a) == a);
    CHECK(omega_shift(2, a) == Ordinal::from_terms({{4, 3}, {2, 1}}));
    CHECK(omega_shift(3, Ordinal()).is_zero());

    // Finite distributivity over the shuffle sum.
    Ordinal b = Ordinal::from_terms({{1, 2}, {0, 5}});
    CHECK(scalar_mul(3, shuffle_sum(a, b)) ==
          shuffle_sum(scalar_mul(3, a), scalar_mul(3, b)));
}

TEST_CASE("checked arithmetic refuses to wrap") {
    std::uint64_t big = ~std::uint64_t(0);
    CHECK_THROWS_AS(scalar_mul(2, Ordinal(big)), overflow_error);
    CHECK_THROWS_AS(shuffle_sum(Ordinal(big), Ordinal(1)), overflow_error);
    CHECK_THROWS_AS(ord_sum(Ordinal(big), Ordinal(1)), overflow_error);
    CHECK_THROWS_AS(omega_shift(2, Ordinal::term(~std::uint64_t(0), 1)),
                    overflow_error);
    CHECK(detail::checked_add(2, 3) == 5);
    CHECK(detail::checked_mul(4, 5) == 20);
    CHECK_THROWS_AS(detail::checked_add(big, 1), overflow_error);
    CHECK_THROWS_AS(detail::checked_mul(big, 2), overflow_error);
}

TEST_CASE("truncation splits an ordinal cleanly") {
    Ordinal a = Ordinal::from_terms({{3, 2}, {2, 1}, {0, 4}});
    CHECK(truncate(a, 2, TruncateMode::ge) == Ordinal::from_terms({{3, 2}, {2, 1}}));
    CHECK(truncate(a, 2, TruncateMode::gt) == w(3, 2));
    CHECK(truncate(a, 2, TruncateMode::le) == Ordinal::from_terms({{2, 1}, {0, 4}}));
    CHECK(truncate(a, 2, TruncateMode::lt) == Ordinal(4));

    std::mt19937_64 rng(7);
    for (int k = 0; k < 100; ++k) {
        Ordinal b;
        for (int t = 0; t < 3; ++t)
            b = shuffle_sum(b, w(testutil::pick(rng, 0, 4), testutil::pick(rng, 0, 3)));
        std::uint64_t e = testutil::pick(rng, 0, 4);
        CHECK(ord_sum(truncate(b, e, TruncateMode::gt),
                      truncate(b, e, TruncateMode::le)) == b);
        CHECK(ord_sum(truncate(b, e, TruncateMode::ge),
                      truncate(b, e, TruncateMode::lt)) == b);
    }
}

TEST_CASE("weaker-than order and joins") {
    Ordinal a = Ordinal::from_terms({{2, 1}, {0, 3}});
    Ordinal b = Ordinal::from_terms({{2, 2}, {1, 1}, {0, 3}});
    CHECK(weaker_than(a, a));
    CHECK(weaker_than(a, b));
    CHECK(!weaker_than(b, a));
    CHECK(weaker_than(Ordinal(), a));
    CHECK(!weaker_than(w(2), w(1, 100)));
    CHECK(weaker_than(w(1), Ordinal::from_terms({{1, 1}, {0, 1}})));

    CHECK(join(a, b) == b);
    Ordinal c = Ordinal::from_terms({{1, 5}, {0, 1}});
    CHECK(join(a, c) == Ordinal::from_terms({{2, 1}, {1, 5}, {0, 3}}));
    CHECK(weaker_than(a, join(a, c)));
    CHECK(weaker_than(c, join(a, c)));

    // weaker-than refines the order comparison
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        Ordinal u, v;
        for (int t = 0; t < 2; ++t) {
            u = shuffle_sum(u, w(testutil::pick(rng, 0, 3), testutil::pick(rng, 0, 2)));
            v = shuffle_sum(v, w(testutil::pick(rng, 0, 3), testutil::pick(rng, 0, 2)));
        }
        if (weaker_than(u, v))
            CHECK(compare(u, v) != std::strong_ordering::greater);
    }
}

TEST_CASE("ordinal parsing round trips") {
    auto roundtrip = [](const std::string& text) {
        Ordinal a = parse_ordinal(text);
        CHECK(format_ordinal(a) == text);
        CHECK(parse_ordinal(format_ordinal(a)) == a);
    };
    roundtrip("0");
    roundtrip("7");
    roundtrip("w");
    roundtrip("w^3");
    roundtrip("2*w^5 + w + 17");
    roundtrip("3*w^2 + 9*w + 7");

    CHECK(parse_ordinal("  3*w^2+9 * w +7 ") ==
          Ordinal::from_terms({{2, 3}, {1, 9}, {0, 7}}));
    CHECK(parse_ordinal("1*w^1") == w(1));
    CHECK(parse_ordinal("w^0") == Ordinal(1));
}

TEST_CASE("ordinal parsing rejects malformed text with positions") {
    CHECK_THROWS_AS(parse_ordinal(""), parse_error);
    CHECK_THROWS_AS(parse_ordinal("w +"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("w^"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("3*"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("x"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("w + w^2"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("w + w"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("0 + w"), parse_error);
    CHECK_THROWS_AS(parse_ordinal("99999999999999999999999999"), parse_error);

    try {
        parse_ordinal("w + $");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}
