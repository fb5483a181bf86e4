#include "ordlen/length.hpp"

#include "ordlen/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace ordlen {

// ---------------------------------------------------------------------------
// Subquotient

Subquotient::Subquotient(MonomialIdeal i, MonomialIdeal j, bool full)
    : numerator_(std::move(i)), denominator_(std::move(j)), full_(full) {}

Subquotient Subquotient::ring(MonomialIdeal j) {
    MonomialIdeal num = MonomialIdeal::unit(j.var_names());
    return Subquotient(std::move(num), std::move(j), true);
}

Subquotient Subquotient::module(MonomialIdeal i, MonomialIdeal j) {
    if (i.var_names() != j.var_names())
        throw domain_error("ideals live in different rings");
    if (!i.contains(j))
        throw domain_error("denominator is not contained in the numerator");
    bool full = i.is_unit();
    return Subquotient(std::move(i), std::move(j), full);
}

Subquotient Subquotient::submodule(const std::vector<Monomial>& gens) const {
    for (const Monomial& g : gens)
        if (!numerator_.contains(g))
            throw domain_error("submodule generator lies outside the module");
    MonomialIdeal extra(denominator_.var_names(), gens);
    return module(ideal_sum(denominator_, extra), denominator_);
}

Subquotient Subquotient::quotient_by(const std::vector<Monomial>& gens) const {
    for (const Monomial& g : gens)
        if (!numerator_.contains(g))
            throw domain_error("submodule generator lies outside the module");
    MonomialIdeal extra(denominator_.var_names(), gens);
    MonomialIdeal denom = ideal_sum(denominator_, extra);
    return Subquotient(numerator_, std::move(denom), full_);
}

// ---------------------------------------------------------------------------
// Local multiplicity and the fundamental cycle

namespace {

// Applies fn to every monomial with exponents below caps (empty product
// when a cap is absent yields the single constant monomial).
void for_each_in_box(const std::vector<std::uint32_t>& caps,
                     const std::function<void(const Monomial&)>& fn) {
    Monomial cur(caps.size());
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == caps.size()) {
            fn(cur);
            return;
        }
        for (std::uint32_t e = 0; e < caps[v]; ++e) {
            cur.exponent(v) = e;
            rec(v + 1);
        }
        cur.exponent(v) = 0;
    };
    rec(0);
}

std::vector<std::uint32_t> exponent_caps(const MonomialIdeal& i) {
    std::vector<std::uint32_t> caps(i.nvars(), 0);
    for (const Monomial& g : i.generators())
        for (std::size_t v = 0; v < i.nvars(); ++v)
            caps[v] = std::max(caps[v], g.exponent(v));
    return caps;
}

} // namespace

std::uint64_t local_multiplicity(const Subquotient& m, const MonomialPrime& p) {
    if (p.nvars() != m.nvars())
        throw domain_error("prime lives in a different ring");
    MonomialIdeal i_loc = localize(m.numerator(), p);
    MonomialIdeal j_loc = localize(m.denominator(), p);
    std::size_t k = p.variables().size();
    if (k == 0) {
        // Localization at the zero prime: the field of fractions.
        return (j_loc.is_zero() && !i_loc.is_zero()) ? 1 : 0;
    }

    // Every monomial of the torsion that is new over j_loc has all its
    // exponents below j_loc's generator caps: past a cap in variable v,
    // multiplying by the known pure power x_v^a lands in j_loc via a
    // generator that then already divides the monomial itself.
    std::vector<std::uint32_t> caps = exponent_caps(j_loc);
    if (std::any_of(caps.begin(), caps.end(),
                    [](std::uint32_t c) { return c == 0; }))
        return 0;

    std::vector<Monomial> max_gens;
    for (std::size_t v = 0; v < k; ++v)
        max_gens.push_back(Monomial::variable(k, v));
    MonomialIdeal max_ideal(i_loc.var_names(), std::move(max_gens));
    MonomialIdeal torsion = intersect(saturate(j_loc, max_ideal), i_loc);

    std::uint64_t count = 0;
    for_each_in_box(caps, [&](const Monomial& mono) {
        if (torsion.contains(mono) && !j_loc.contains(mono)) ++count;
    });
    return count;
}

FundamentalCycle fundamental_cycle(const Subquotient& m, unsigned threads) {
    std::size_t n = m.nvars();
    if (n > 8)
        throw domain_error("associated-prime scan limited to 8 variables");
    std::size_t masks = std::size_t(1) << n;
    std::vector<std::uint64_t> mult(masks, 0);

    auto prime_of = [&](std::size_t mask) {
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (std::size_t(1) << v)) vars.push_back(v);
        return MonomialPrime(n, std::move(vars));
    };
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t mask = lo; mask < hi; ++mask)
            mult[mask] = local_multiplicity(m, prime_of(mask));
    };

    if (threads <= 1) {
        work(0, masks);
    } else {
        std::size_t parts = std::min<std::size_t>(threads, masks);
        std::size_t chunk = (masks + parts - 1) / parts;
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < parts; ++t) {
            std::size_t lo = t * chunk;
            std::size_t hi = std::min(masks, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }

    FundamentalCycle cyc;
    for (std::size_t mask = 0; mask < masks; ++mask)
        if (mult[mask] > 0) cyc.push_back({prime_of(mask), mult[mask]});
    std::sort(cyc.begin(), cyc.end(),
              [](const CycleEntry& a, const CycleEntry& b) {
                  return a.prime < b.prime;
              });
    return cyc;
}

std::vector<MonomialPrime> associated_primes(const Subquotient& m, unsigned threads) {
    std::vector<MonomialPrime> primes;
    for (const CycleEntry& e : fundamental_cycle(m, threads))
        primes.push_back(e.prime);
    return primes;
}

Ordinal cycle_to_ordinal(const FundamentalCycle& c, std::size_t ambient_vars) {
    Ordinal total;
    for (const CycleEntry& e : c) {
        if (e.prime.nvars() != ambient_vars)
            throw domain_error("cycle prime lives in a different ring");
        std::uint64_t dim = ambient_vars - e.prime.variables().size();
        total = shuffle_sum(total, Ordinal::term(dim, e.multiplicity));
    }
    return total;
}

Ordinal length_of(const Subquotient& m, unsigned threads) {
    return cycle_to_ordinal(fundamental_cycle(m, threads), m.nvars());
}

Ordinal hd(const std::vector<Monomial>& n_gens, const Subquotient& m) {
    return length_of(m.quotient_by(n_gens));
}

// ---------------------------------------------------------------------------
// Semi-additivity

SemiAdditivityReport check_semi_additivity(const MonomialIdeal& j,
                                           const MonomialIdeal& k,
                                           const MonomialIdeal& i) {
    if (!k.contains(j) || !i.contains(k))
        throw domain_error("semi-additivity requires nested ideals");
    Subquotient sub = Subquotient::module(k, j);
    Subquotient mid = Subquotient::module(i, j);
    Subquotient quot = Subquotient::module(i, k);

    SemiAdditivityReport r;
    r.len_sub = length_of(sub);
    r.len_mid = length_of(mid);
    r.len_quot = length_of(quot);

    Ordinal lower = ord_sum(r.len_quot, r.len_sub);
    Ordinal upper = shuffle_sum(r.len_sub, r.len_quot);
    r.lower_bound = compare(lower, r.len_mid) != std::strong_ordering::greater;
    r.upper_bound = compare(r.len_mid, upper) != std::strong_ordering::greater;
    r.lower_weaker = weaker_than(lower, r.len_mid);
    r.sub_weaker = weaker_than(r.len_sub, r.len_mid);

    if (r.len_mid.is_zero()) {
        r.top_additive = r.len_sub.is_zero() && r.len_quot.is_zero();
    } else {
        std::uint64_t d = *r.len_mid.degree();
        r.top_additive =
            r.len_mid.coefficient(d) ==
            detail::checked_add(r.len_sub.coefficient(d), r.len_quot.coefficient(d));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Openness

bool is_open(const std::vector<Monomial>& n_gens, const Subquotient& m) {
    Subquotient n = m.submodule(n_gens);
    FundamentalCycle cn = fundamental_cycle(n);
    FundamentalCycle cm = fundamental_cycle(m);
    Ordinal ln = cycle_to_ordinal(cn, m.nvars());
    Ordinal lm = cycle_to_ordinal(cm, m.nvars());

    bool by_length = ln == lm;
    bool by_valence = ln.valence() == lm.valence();
    bool by_cycle = cn == cm;
    if (by_length != by_valence || by_length != by_cycle)
        throw error("openness criteria disagree; this is a bug");
    return by_length;
}

bool is_equilateral(const std::vector<Monomial>& n_gens, const Subquotient& m) {
    Ordinal len_sub = length_of(m.submodule(n_gens));
    Ordinal len_quot = length_of(m.quotient_by(n_gens));
    return length_of(m) == shuffle_sum(len_sub, len_quot);
}

// ---------------------------------------------------------------------------
// Dimension filtration and closure

namespace {

MonomialIdeal bounded_dimension_part(const Subquotient& m, int i) {
    MonomialIdeal ki = primary_components_above_dim(m.denominator(), i);
    return intersect(m.numerator(), ki);
}

} // namespace

std::vector<Subquotient> dimension_filtration(const Subquotient& m) {
    if (m.is_zero()) return {m};
    Ordinal len_m = length_of(m);
    int d = m.dimension();

    std::vector<Subquotient> fil;
    for (int i = 0; i <= d; ++i)
        fil.push_back(Subquotient::module(bounded_dimension_part(m, i),
                                          m.denominator()));

    for (int i = 0; i <= d; ++i) {
        Ordinal expect = truncate(len_m, static_cast<std::uint64_t>(i),
                                  TruncateMode::le);
        if (length_of(fil[i]) != expect)
            throw error("dimension filtration failed its truncation check; this is a bug");
    }

    Ordinal rebuilt;
    for (int i = 0; i <= d; ++i) {
        const MonomialIdeal& denom =
            i == 0 ? m.denominator() : fil[i - 1].numerator();
        Subquotient factor = Subquotient::module(fil[i].numerator(), denom);
        rebuilt = shuffle_sum(rebuilt, length_of(factor));
    }
    if (rebuilt != len_m)
        throw error("dimension filtration failed its reconstruction check; this is a bug");
    return fil;
}

Subquotient closure(const std::vector<Monomial>& n_gens, const Subquotient& m) {
    Subquotient n = m.submodule(n_gens);
    MonomialIdeal fl0 = bounded_dimension_part(m, 0);
    return Subquotient::module(ideal_sum(n.numerator(), fl0), m.denominator());
}

bool is_closed(const std::vector<Monomial>& n_gens, const Subquotient& m) {
    Ordinal len_n = length_of(m.submodule(n_gens));
    Ordinal len_m = length_of(m);
    return len_n.coefficient(0) == len_m.coefficient(0);
}

// ---------------------------------------------------------------------------
// Parameters

bool is_parameter(const Monomial& f, const Subquotient& m) {
    if (f.nvars() != m.nvars())
        throw domain_error("element lives in a different ring");
    int dim_m = m.dimension();

    std::vector<Monomial> f_times_i;
    for (const Monomial& g : m.numerator().generators())
        f_times_i.push_back(g.times(f));
    MonomialIdeal fm = ideal_sum(m.denominator(),
                                 MonomialIdeal(m.vars(), std::move(f_times_i)));
    Subquotient mod_f = Subquotient::module(m.numerator(), fm);
    int dim_quot = mod_f.dimension();

    MonomialIdeal ann_num = intersect(colon(m.denominator(), f), m.numerator());
    Subquotient ann = Subquotient::module(ann_num, m.denominator());
    int dim_ann = ann.dimension();

    bool by_quotient = dim_quot < dim_m;
    bool by_annihilator = dim_ann < dim_m;
    if (by_quotient != by_annihilator)
        throw error("parameter criteria disagree; this is a bug");
    return !mod_f.is_zero() && by_quotient;
}

// ---------------------------------------------------------------------------
// Polynomial extension

Ordinal polynomial_extension_length(const Subquotient& m, std::uint64_t n_extra) {
    return omega_shift(n_extra, length_of(m));
}

Subquotient extend_by_variables(const Subquotient& m,
                                const std::vector<std::string>& extra) {
    std::vector<std::string> vars = m.vars();
    for (const std::string& name : extra) {
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
            throw domain_error("variable name '" + name + "' is already in use");
        vars.push_back(name);
    }
    auto extend_ideal = [&](const MonomialIdeal& ideal) {
        std::vector<Monomial> gens;
        for (const Monomial& g : ideal.generators()) {
            std::vector<std::uint32_t> exps = g.exponents();
            exps.resize(vars.size(), 0);
            gens.emplace_back(std::move(exps));
        }
        return MonomialIdeal(vars, std::move(gens));
    };
    return Subquotient::module(extend_ideal(m.numerator()),
                               extend_ideal(m.denominator()));
}

// ---------------------------------------------------------------------------
// Standard pairs

namespace {

// (root, Z) is admissible when no generator can divide root * x^a for
// any a supported on Z: every generator must exceed root somewhere
// outside Z.
bool pair_admissible(const std::vector<Monomial>& gens, const Monomial& root,
                     std::uint32_t zmask) {
    for (const Monomial& g : gens) {
        bool escapes = false;
        for (std::size_t v = 0; v < root.nvars() && !escapes; ++v)
            if (!(zmask & (1u << v)) && g.exponent(v) > root.exponent(v))
                escapes = true;
        if (!escapes) return false;
    }
    return true;
}

} // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& i) {
    std::size_t n = i.nvars();
    if (n > 8)
        throw domain_error("standard pairs limited to 8 variables");
    if (i.is_unit()) return {};

    const std::vector<Monomial>& gens = i.generators();
    std::vector<std::uint32_t> caps = exponent_caps(i);
    std::uint32_t forced = 0; // variables unused by any generator
    for (std::size_t v = 0; v < n; ++v)
        if (caps[v] == 0) forced |= (1u << v);

    std::vector<StandardPair> out;
    for (std::uint32_t zmask = 0; zmask < (1u << n); ++zmask) {
        if ((zmask & forced) != forced) continue;
        std::vector<std::uint32_t> box(n, 1);
        for (std::size_t v = 0; v < n; ++v)
            if (!(zmask & (1u << v))) box[v] = caps[v];
            else box[v] = 1; // Z variables pinned to exponent 0
        for_each_in_box(box, [&](const Monomial& root) {
            if (!pair_admissible(gens, root, zmask)) return;
            // Maximality: no single-variable enlargement stays admissible.
            for (std::size_t v = 0; v < n; ++v) {
                if (zmask & (1u << v)) continue;
                Monomial shrunk = root;
                shrunk.exponent(v) = 0;
                if (pair_admissible(gens, shrunk, zmask | (1u << v))) return;
            }
            std::vector<std::size_t> zvars;
            for (std::size_t v = 0; v < n; ++v)
                if (zmask & (1u << v)) zvars.push_back(v);
            out.push_back({root, std::move(zvars)});
        });
    }
    std::sort(out.begin(), out.end(),
              [](const StandardPair& a, const StandardPair& b) {
                  if (a.free_vars.size() != b.free_vars.size())
                      return a.free_vars.size() < b.free_vars.size();
                  if (a.free_vars != b.free_vars)
                      return a.free_vars < b.free_vars;
                  return a.root < b.root;
              });
    return out;
}

FundamentalCycle cycle_from_standard_pairs(const MonomialIdeal& i) {
    std::map<std::vector<std::size_t>, std::uint64_t> counts;
    for (const StandardPair& sp : standard_pairs(i)) {
        std::vector<std::size_t> complement;
        for (std::size_t v = 0; v < i.nvars(); ++v)
            if (!std::binary_search(sp.free_vars.begin(), sp.free_vars.end(), v))
                complement.push_back(v);
        ++counts[complement];
    }
    FundamentalCycle cyc;
    for (const auto& [vars, count] : counts)
        cyc.push_back({MonomialPrime(i.nvars(), vars), count});
    std::sort(cyc.begin(), cyc.end(),
              [](const CycleEntry& a, const CycleEntry& b) {
                  return a.prime < b.prime;
              });
    return cyc;
}

// ---------------------------------------------------------------------------
// Grassmannian oracle

Ordinal grassmannian_oracle(const Subquotient& m) {
    if (m.dimension() > 0)
        throw domain_error("grassmannian oracle requires an Artinian module");

    // k-basis of M: monomials of I \ J, all of which sit below J's caps.
    std::vector<Monomial> basis;
    for_each_in_box(exponent_caps(m.denominator()), [&](const Monomial& mono) {
        if (m.numerator().contains(mono) && !m.denominator().contains(mono))
            basis.push_back(mono);
    });
    std::sort(basis.begin(), basis.end());
    std::size_t k = basis.size();
    if (k > 5)
        throw domain_error("grassmannian oracle limited to k-dimension 5");

    // Variable action: img[v][b] is the basis index of x_v * basis[b],
    // or -1 when that product falls into J.
    std::size_t n = m.nvars();
    std::vector<std::vector<int>> img(n, std::vector<int>(k, -1));
    for (std::size_t v = 0; v < n; ++v) {
        Monomial xv = Monomial::variable(n, v);
        for (std::size_t b = 0; b < k; ++b) {
            Monomial prod = basis[b].times(xv);
            if (m.denominator().contains(prod)) continue;
            auto it = std::lower_bound(basis.begin(), basis.end(), prod);
            if (it == basis.end() || *it != prod)
                throw error("grassmannian basis is not closed under the variable action; this is a bug");
            img[v][b] = static_cast<int>(it - basis.begin());
        }
    }

    // Enumerate all subspaces of F_2^k once each via reduced row-echelon
    // bases, then keep those closed under every variable action.
    std::uint32_t vec_count = 1u << k;
    std::vector<std::uint32_t> spaces; // membership masks over vector ids
    std::vector<std::uint32_t> rows;
    std::function<void(std::size_t, std::uint32_t)> fill =
        [&](std::size_t row, std::uint32_t pivots) {
            if (row == rows.size()) {
                std::uint32_t mask = 0;
                for (std::uint32_t combo = 0; combo < (1u << rows.size()); ++combo) {
                    std::uint32_t vec = 0;
                    for (std::size_t r = 0; r < rows.size(); ++r)
                        if (combo & (1u << r)) vec ^= rows[r];
                    mask |= (1u << vec);
                }
                spaces.push_back(mask);
                return;
            }
            // Free coordinates: above this row's pivot, excluding pivots.
            std::uint32_t pivot_bit = rows[row];
            std::vector<std::uint32_t> free_bits;
            for (std::size_t c = 0; c < k; ++c) {
                std::uint32_t bit = 1u << c;
                if (bit > pivot_bit && !(pivots & bit)) free_bits.push_back(bit);
            }
            for (std::uint32_t assign = 0; assign < (1u << free_bits.size());
                 ++assign) {
                std::uint32_t extra = 0;
                for (std::size_t f = 0; f < free_bits.size(); ++f)
                    if (assign & (1u << f)) extra |= free_bits[f];
                rows[row] = pivot_bit | extra;
                fill(row + 1, pivots);
                rows[row] = pivot_bit;
            }
        };
    for (std::uint32_t pivots = 0; pivots < vec_count; ++pivots) {
        rows.clear();
        for (std::size_t c = 0; c < k; ++c)
            if (pivots & (1u << c)) rows.push_back(1u << c);
        fill(0, pivots);
    }

    std::vector<std::uint32_t> invariant;
    for (std::uint32_t space : spaces) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            for (std::uint32_t vec = 0; vec < vec_count && ok; ++vec) {
                if (!(space & (1u << vec))) continue;
                std::uint32_t image = 0;
                for (std::size_t b = 0; b < k; ++b)
                    if ((vec & (1u << b)) && img[v][b] >= 0)
                        image ^= (1u << img[v][b]);
                if (!(space & (1u << image))) ok = false;
            }
        }
        if (ok) invariant.push_back(space);
    }

    std::vector<std::pair<int, int>> relations;
    for (std::size_t a = 0; a < invariant.size(); ++a)
        for (std::size_t b = 0; b < invariant.size(); ++b)
            if (a != b && (invariant[a] & invariant[b]) == invariant[b] &&
                invariant[a] != invariant[b])
                relations.emplace_back(static_cast<int>(a), static_cast<int>(b));
    FinitePoset order(invariant.size(), relations);

    std::uint32_t zero_space = 1u; // only the zero vector
    auto it = std::find(invariant.begin(), invariant.end(), zero_space);
    if (it == invariant.end())
        throw error("zero submodule missing from the submodule order; this is a bug");
    return order.foundation_rank(static_cast<int>(it - invariant.begin()));
}

// ---------------------------------------------------------------------------
// Weaker-submodule search

namespace {

std::string numerator_key(const MonomialIdeal& i) {
    std::string key;
    for (const Monomial& g : i.generators()) {
        for (std::uint32_t e : g.exponents())
            key.append(reinterpret_cast<const char*>(&e), sizeof(e));
        key.push_back('\x01');
    }
    return key;
}

} // namespace

std::optional<Subquotient> search_weaker_submodule(const Subquotient& m,
                                                   const Ordinal& target,
                                                   std::size_t max_gens,
                                                   std::uint32_t max_degree) {
    Ordinal len_m = length_of(m);
    if (!weaker_than(target, len_m))
        throw domain_error("target length is not weaker than the module length");
    if (target == len_m) return m;

    // Candidate generators: classes of monomials of bounded degree.
    std::vector<Monomial> pool;
    std::size_t n = m.nvars();
    Monomial cur(n);
    std::function<void(std::size_t, std::uint32_t)> collect =
        [&](std::size_t v, std::uint32_t left) {
            if (v == n) {
                if (m.numerator().contains(cur) && !m.denominator().contains(cur))
                    pool.push_back(cur);
                return;
            }
            for (std::uint32_t e = 0; e <= left; ++e) {
                cur.exponent(v) = e;
                collect(v + 1, left - e);
            }
            cur.exponent(v) = 0;
        };
    collect(0, max_degree);
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Monomial& a, const Monomial& b) {
                         if (a.total_degree() != b.total_degree())
                             return a.total_degree() < b.total_degree();
                         return a < b;
                     });

    std::set<std::string> seen;
    std::size_t budget = 20000;
    std::optional<Subquotient> found;

    std::function<bool(std::size_t, const MonomialIdeal&, std::size_t)> dfs =
        [&](std::size_t start, const MonomialIdeal& num, std::size_t used) {
            if (budget == 0) return false;
            --budget;
            Subquotient cand = Subquotient::module(num, m.denominator());
            Ordinal len = length_of(cand);
            if (len == target) {
                found = cand;
                return true;
            }
            if (!weaker_than(len, target)) return false; // growing only adds
            if (used == max_gens) return false;
            for (std::size_t idx = start; idx < pool.size(); ++idx) {
                MonomialIdeal next =
                    ideal_sum(num, MonomialIdeal(m.vars(), {pool[idx]}));
                if (!seen.insert(numerator_key(next)).second) continue;
                if (dfs(idx + 1, next, used + 1)) return true;
            }
            return false;
        };
    dfs(0, m.denominator(), 0);
    return found;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_cycle(const FundamentalCycle& c,
                         const std::vector<std::string>& vars) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0) out << ", ";
        out << format_prime(c[k].prime, vars) << ':' << c[k].multiplicity;
    }
    out << '}';
    return out.str();
}

} // namespace ordlen
