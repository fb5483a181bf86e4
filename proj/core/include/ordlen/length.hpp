#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlen/monomial.hpp"
#include "ordlen/ordinal.hpp"

namespace ordlen {

/// A monomial subquotient M = I/J with J ⊆ I. The whole-ring numerator
/// (for quotient rings R = S/J) is carried as a "full" marker; its
/// generator view is the unit ideal, so membership code is uniform.
class Subquotient {
public:
    /// R = S/J viewed as a module over itself.
    static Subquotient ring(MonomialIdeal j);
    /// M = I/J; requires J ⊆ I. A unit-ideal numerator normalizes to full.
    static Subquotient module(MonomialIdeal i, MonomialIdeal j);

    const std::vector<std::string>& vars() const { return denominator_.var_names(); }
    std::size_t nvars() const { return denominator_.nvars(); }
    const MonomialIdeal& numerator() const { return numerator_; }
    const MonomialIdeal& denominator() const { return denominator_; }
    bool is_full() const { return full_; }
    bool is_zero() const { return denominator_.contains(numerator_); }

    /// (J : I).
    MonomialIdeal annihilator() const { return colon(denominator_, numerator_); }
    /// Krull dimension of the annihilator quotient; -1 for the zero module.
    int dimension() const { return krull_dimension(annihilator()); }

    /// N = (J + gens)/J; every generator must lie in the numerator.
    Subquotient submodule(const std::vector<Monomial>& gens) const;
    /// M/N = I/(J + gens); every generator must lie in the numerator.
    Subquotient quotient_by(const std::vector<Monomial>& gens) const;

    friend bool operator==(const Subquotient&, const Subquotient&) = default;

private:
    Subquotient(MonomialIdeal i, MonomialIdeal j, bool full);
    MonomialIdeal numerator_;
    MonomialIdeal denominator_;
    bool full_ = false;
};

struct CycleEntry {
    MonomialPrime prime;
    std::uint64_t multiplicity = 0;
    friend bool operator==(const CycleEntry&, const CycleEntry&) = default;
};

/// Finite formal sum of monomial primes with positive multiplicities,
/// kept sorted by prime (cardinality, then variable list).
using FundamentalCycle = std::vector<CycleEntry>;

/// Length of the p-torsion of M localized at p: localize I and J at p,
/// saturate J by the subring's maximal ideal, intersect with I, and
/// count the monomials gained over J. Zero when p carries no torsion.
std::uint64_t local_multiplicity(const Subquotient& m, const MonomialPrime& p);

/// All monomial primes with positive local multiplicity, by scanning
/// the 2^n candidates (requires n ≤ 8).
std::vector<MonomialPrime> associated_primes(const Subquotient& m, unsigned threads = 1);

/// The map p ↦ local_multiplicity(M, p) restricted to its support.
FundamentalCycle fundamental_cycle(const Subquotient& m, unsigned threads = 1);

/// Shuffle sum of mult · ω^(ambient_vars − |p|) over the cycle.
Ordinal cycle_to_ordinal(const FundamentalCycle& c, std::size_t ambient_vars);

/// Ordinal length of M: cycle_to_ordinal of its fundamental cycle. For
/// nonzero M its degree equals the Krull dimension of M.
Ordinal length_of(const Subquotient& m, unsigned threads = 1);

/// Rank of the submodule N = (J + gens)/J in the reverse-inclusion
/// order on submodules, computed as length_of(M/N).
Ordinal hd(const std::vector<Monomial>& n_gens, const Subquotient& m);

/// Results of the five checks on the exact sequence
/// 0 → K/J → I/J → I/K → 0 (sub, mid, quot).
struct SemiAdditivityReport {
    Ordinal len_sub;
    Ordinal len_mid;
    Ordinal len_quot;
    bool lower_bound = false;   // len_quot ⊕ len_sub ≤ len_mid
    bool upper_bound = false;   // len_mid ≤ len_sub # len_quot
    bool lower_weaker = false;  // len_quot ⊕ len_sub ⊴ len_mid
    bool sub_weaker = false;    // len_sub ⊴ len_mid
    bool top_additive = false;  // top-degree coefficients add up
    bool all_pass() const {
        return lower_bound && upper_bound && lower_weaker && sub_weaker &&
               top_additive;
    }
};

/// Requires j ⊆ k ⊆ i.
SemiAdditivityReport check_semi_additivity(const MonomialIdeal& j,
                                           const MonomialIdeal& k,
                                           const MonomialIdeal& i);

/// N is open in M when len N = len M; computed three ways (length,
/// valence, cycle equality), which must agree.
bool is_open(const std::vector<Monomial>& n_gens, const Subquotient& m);

/// len M = len N # len(M/N).
bool is_equilateral(const std::vector<Monomial>& n_gens, const Subquotient& m);

/// The chain fl d_0(M) ⊆ … ⊆ fl d_d(M) = M of largest submodules of
/// bounded dimension, d = dim M; index i holds the elements of
/// dimension at most i. Verifies len(fl d_i) = (len M)^{≤i} and the
/// shuffle-sum reconstruction of len M from the factors; a failed
/// verification (impossible for valid inputs) raises ordlen::error.
std::vector<Subquotient> dimension_filtration(const Subquotient& m);

/// N + fl d_0(M), the smallest closed submodule containing N.
Subquotient closure(const std::vector<Monomial>& n_gens, const Subquotient& m);

/// N is closed exactly when the constant Cantor coefficients of len N
/// and len M agree.
bool is_closed(const std::vector<Monomial>& n_gens, const Subquotient& m);

/// f is a parameter on M: M/fM is nonzero of strictly smaller
/// dimension. The equivalent test dim(ann_M f) < dim M is computed as
/// well; a disagreement (impossible) raises ordlen::error.
bool is_parameter(const Monomial& f, const Subquotient& m);

/// ω^n_extra · len M, the length after adjoining n_extra variables.
Ordinal polynomial_extension_length(const Subquotient& m, std::uint64_t n_extra);

/// The same module over the ring extended by the named fresh variables.
Subquotient extend_by_variables(const Subquotient& m,
                                const std::vector<std::string>& extra);

/// A pair (root monomial, free variable set Z): the monomials
/// root · x^a with support(a) ⊆ Z, all standard for the ideal, maximal
/// among such families.
struct StandardPair {
    Monomial root;
    std::vector<std::size_t> free_vars; // strictly ascending
    friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

/// Standard-pair decomposition of the standard monomials of I
/// (requires ≤ 8 variables). Grouping by the free set Z gives the
/// local multiplicity of the prime on the complement of Z.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& i);

/// Fundamental cycle of S/I recovered by counting standard pairs per
/// free set; an algorithm independent of local_multiplicity.
FundamentalCycle cycle_from_standard_pairs(const MonomialIdeal& i);

/// Independent length check for Artinian M with k-dimension ≤ 5 over
/// the two-element field: enumerates all submodules as invariant
/// subspaces, orders them by reverse inclusion, and returns the
/// foundation rank of the zero submodule.
Ordinal grassmannian_oracle(const Subquotient& m);

/// Bounded search for a monomial submodule N ⊆ M with len N = target
/// (requires target ⊴ len M). Explores submodules generated by at most
/// max_gens monomials of degree ≤ max_degree; nullopt means not found
/// within bounds, not nonexistence.
std::optional<Subquotient> search_weaker_submodule(const Subquotient& m,
                                                   const Ordinal& target,
                                                   std::size_t max_gens = 4,
                                                   std::uint32_t max_degree = 6);

/// "{(x):2, (z):1, ...}" in cycle order.
std::string format_cycle(const FundamentalCycle& c,
                         const std::vector<std::string>& vars);

} // namespace ordlen
