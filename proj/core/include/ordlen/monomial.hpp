#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordlen/errors.hpp"

namespace ordlen {

/// A monomial as an exponent vector over a fixed variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t v, std::uint32_t e = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t v) const { return exps_[v]; }
    std::uint32_t& exponent(std::size_t v) { return exps_[v]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    bool is_one() const;
    std::uint64_t total_degree() const;
    std::vector<std::size_t> support() const;

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;
    Monomial gcd(const Monomial& m) const;
    /// this / gcd(this, g): the generator of (this) : (g).
    Monomial colon_by(const Monomial& g) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Lexicographic order on exponent vectors.
    std::strong_ordering operator<=>(const Monomial& other) const {
        return exps_ <=> other.exps_;
    }

private:
    std::vector<std::uint32_t> exps_;
};

/// A monomial prime ideal: the set of variables that generate it.
/// The empty set is the zero prime.
class MonomialPrime {
public:
    MonomialPrime() = default;
    MonomialPrime(std::size_t nvars, std::vector<std::size_t> vars);

    std::size_t nvars() const { return nvars_; }
    const std::vector<std::size_t>& variables() const { return vars_; }
    bool contains_variable(std::size_t v) const;
    /// Krull dimension of the quotient by this prime.
    std::size_t quotient_dimension() const { return nvars_ - vars_.size(); }

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
    /// By cardinality, then lexicographically on the variable list.
    std::strong_ordering operator<=>(const MonomialPrime& other) const;

private:
    std::size_t nvars_ = 0;
    std::vector<std::size_t> vars_; // strictly ascending
};

/// A monomial ideal in a named polynomial ring, held as its unique
/// minimal generating set, lexicographically sorted. No generators is
/// the zero ideal; the single generator 1 is the unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes: drops duplicates and any generator divisible by
    /// another, then sorts.
    MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::vector<std::string> vars);
    static MonomialIdeal unit(std::vector<std::string> vars);

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    /// Membership by divisibility against the generators.
    bool contains(const Monomial& m) const;
    /// other is a subset of this ideal (generator-wise membership).
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
};

/// I + J: union of generators, minimalized.
MonomialIdeal ideal_sum(const MonomialIdeal& i, const MonomialIdeal& j);

/// Intersection via pairwise lcm of generators.
MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j);

/// (I : g) for a single monomial.
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& g);

/// (I : J) = the intersection over J's generators of (I : g).
/// (I : 0) is the unit ideal.
MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j);

/// (I : J^inf): iterates colon until it stabilizes.
MonomialIdeal saturate(const MonomialIdeal& i, const MonomialIdeal& j);

/// Image of I in the subring on p's variables with all others set to 1.
MonomialIdeal localize(const MonomialIdeal& i, const MonomialPrime& p);

/// The prime ideal generated by p's variables, as a MonomialIdeal over
/// the same ambient ring.
MonomialIdeal prime_ideal(const MonomialPrime& p, const std::vector<std::string>& vars);

/// The irredundant set of irreducible components (each generated by pure
/// variable powers) produced by the standard splitting recursion. The
/// unit ideal has the empty decomposition; the zero ideal is its own.
/// Bounds: at most 16 generators and 8 variables.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i);

/// Minimal primes over I: the minimal variable sets meeting the support
/// of every generator. The zero ideal has the zero prime; the unit ideal
/// has none.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& i);

/// Intersection of the irreducible components whose radical prime p has
/// dim(R/p) > bound; the unit ideal when no component qualifies.
MonomialIdeal primary_components_above_dim(const MonomialIdeal& i, int bound);

/// dim R/I; -1 for the unit ideal (the zero module).
int krull_dimension(const MonomialIdeal& i);

/// Monomials of total degree <= d outside I, in degree-then-lex order.
std::vector<Monomial> standard_monomials_up_to(const MonomialIdeal& i, std::uint32_t d);

/// k-dimension of R/I for dim(R/I) <= 0; domain_error otherwise.
std::uint64_t artinian_k_dimension(const MonomialIdeal& i);

/// Parses a generator list such as "x^5*y*z, x^4*y^3*z" over the given
/// variables. Monomials are separated by commas or whitespace; factors
/// within a monomial are joined by optional '*'. "1" is the unit ideal
/// and "0" the zero ideal.
MonomialIdeal parse_ideal(const std::string& text, std::vector<std::string> vars);

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars);
std::string format_ideal(const MonomialIdeal& i);
std::string format_prime(const MonomialPrime& p, const std::vector<std::string>& vars);

} // namespace ordlen
