#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordlen/errors.hpp"
#include "ordlen/ordinal.hpp"

namespace ordlen {

/// A finite poset on elements 0..size()-1, stored as the strict
/// less-than relation (transitive closure of the supplied pairs).
/// Construction rejects cyclic input and more than max_size elements.
class FinitePoset {
public:
    static constexpr std::size_t max_size = 4096;

    FinitePoset() = default;

    /// Builds from strict relations a < b; the transitive closure is taken.
    FinitePoset(std::size_t n, const std::vector<std::pair<int, int>>& relations);

    static FinitePoset chain(std::size_t n);
    static FinitePoset antichain(std::size_t n);

    std::size_t size() const { return n_; }

    bool less(int a, int b) const { return bit(a, b); }
    bool leq(int a, int b) const { return a == b || bit(a, b); }

    /// The greatest element, if one exists.
    std::optional<int> maximum() const;

    /// Foundation rank of one element: 0 for minimal elements, otherwise
    /// 1 + the maximal rank strictly below. Computed with a fresh memo
    /// table per call.
    Ordinal foundation_rank(int x) const;

    /// Foundation ranks of all elements as plain numbers.
    std::vector<std::uint64_t> ranks() const;

    /// Largest foundation rank (0 for the empty poset).
    Ordinal length() const;

    /// The induced order on a subset of elements (kept in the given order).
    FinitePoset induced(const std::vector<int>& elements) const;

    /// Strict relation pairs of the transitive reduction (cover relations).
    std::vector<std::pair<int, int>> cover_relations() const;

    friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
    void check_index(int a) const;
    bool bit(int a, int b) const {
        return (bits_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] >>
                (static_cast<std::size_t>(b) % 64)) & 1u;
    }
    void set_bit(int a, int b) {
        bits_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b) / 64] |=
            std::uint64_t(1) << (static_cast<std::size_t>(b) % 64);
    }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_; // row a: bitset of b with a < b

    friend FinitePoset sum_order(const FinitePoset&, const FinitePoset&);
    friend FinitePoset product_order(const FinitePoset&, const FinitePoset&);
};

/// Largest foundation rank of p (free-function spelling of p.length()).
Ordinal poset_length(const FinitePoset& p);

/// Disjoint union with every element of p strictly below every element
/// of q. Elements of p keep their indices; q's are shifted by p.size().
FinitePoset sum_order(const FinitePoset& p, const FinitePoset& q);

/// Componentwise order on pairs; (a,b) is indexed as a * q.size() + b.
FinitePoset product_order(const FinitePoset& p, const FinitePoset& q);

/// For subsets with a <= b for every a in A, b in B (checked, else
/// domain_error): verifies
///   ord_sum(length of A induced, length of B induced) <= max rank of B in p.
bool check_subset_lemma(const FinitePoset& p, const std::vector<int>& a,
                        const std::vector<int>& b);

/// Text form: first line the element count, then one "a < b" line per
/// strict relation (transitive reduction suffices).
FinitePoset parse_poset(const std::string& text);
std::string format_poset(const FinitePoset& p);

} // namespace ordlen
