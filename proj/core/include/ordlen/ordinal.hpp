#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlen/errors.hpp"

namespace ordlen {

/// One Cantor normal form term coef * w^exp with coef > 0.
struct OrdinalTerm {
    std::uint64_t exp = 0;
    std::uint64_t coef = 0;

    friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

/// An ordinal below w^w in Cantor normal form: a finite sum of terms
/// coef * w^exp with strictly descending exponents and positive 64-bit
/// coefficients. The empty sum is the ordinal 0. Arithmetic on
/// coefficients and exponents is checked and never wraps.
class Ordinal {
public:
    Ordinal() = default;

    /// The finite ordinal n.
    Ordinal(std::uint64_t n) {
        if (n > 0) terms_.push_back({0, n});
    }

    static Ordinal omega() { return term(1, 1); }

    /// coef * w^exp; coef == 0 gives the zero ordinal.
    static Ordinal term(std::uint64_t exp, std::uint64_t coef) {
        Ordinal a;
        if (coef > 0) a.terms_.push_back({exp, coef});
        return a;
    }

    /// Builds from a term list, validating strictly descending exponents
    /// and positive coefficients.
    static Ordinal from_terms(std::vector<OrdinalTerm> terms);

    const std::vector<OrdinalTerm>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Largest exponent, or nullopt for 0.
    std::optional<std::uint64_t> degree() const;

    /// Smallest exponent, or nullopt for 0.
    std::optional<std::uint64_t> order() const;

    /// Sum of all coefficients.
    std::uint64_t valence() const;

    /// Coefficient of w^i (0 when absent).
    std::uint64_t coefficient(std::uint64_t i) const;

    friend bool operator==(const Ordinal&, const Ordinal&) = default;
    std::strong_ordering operator<=>(const Ordinal& other) const;

private:
    std::vector<OrdinalTerm> terms_; // strictly descending exponents
};

/// Three-way order comparison of ordinals.
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinal sum a + b (order concatenation). Every term of a with exponent
/// below deg(b) is absorbed; the term of a at deg(b), if any, merges into
/// the leading coefficient of b. Associative, not commutative.
Ordinal ord_sum(const Ordinal& a, const Ordinal& b);

/// Natural (coefficient-wise) sum. Commutative and associative.
Ordinal shuffle_sum(const Ordinal& a, const Ordinal& b);

/// Reference implementation of shuffle_sum: the maximum of all
/// left-to-right ord_sum evaluations over order-preserving interleavings
/// of the two unit-term sequences. Requires valence(a) + valence(b) <= 12.
Ordinal shuffle_sum_oracle(const Ordinal& a, const Ordinal& b);

/// n * a applied coefficient-wise; scalar_mul(0, a) == 0.
Ordinal scalar_mul(std::uint64_t n, const Ordinal& a);

/// w^n * a: adds n to every exponent.
Ordinal omega_shift(std::uint64_t n, const Ordinal& a);

enum class TruncateMode { ge, gt, le, lt };

/// Keeps the terms whose exponent compares to e per mode.
/// ord_sum(truncate(a, e, gt), truncate(a, e, le)) == a.
Ordinal truncate(const Ordinal& a, std::uint64_t e, TruncateMode mode);

/// Coefficient-wise <= (a partial order refined by the linear order).
bool weaker_than(const Ordinal& a, const Ordinal& b);

/// Coefficient-wise maximum: the least upper bound for weaker_than.
Ordinal join(const Ordinal& a, const Ordinal& b);

/// Parses "0" or a '+'-separated descending term list such as
/// "3*w^2 + 9*w + 7"; the '*' is optional, whitespace insignificant.
/// Throws parse_error with the byte offset on malformed input and
/// domain_error when exponents are not strictly descending.
Ordinal parse_ordinal(const std::string& text);

/// Canonical text form, e.g. "3*w^2 + 9*w + 7" or "0".
/// parse_ordinal(format_ordinal(a)) == a.
std::string format_ordinal(const Ordinal& a);

namespace detail {
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
} // namespace detail

} // namespace ordlen
