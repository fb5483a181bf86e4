#include "ordlen/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace ordlen {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t v, std::uint32_t e) {
    if (v >= nvars)
        throw domain_error("variable index out of range");
    Monomial m(nvars);
    m.exps_[v] = e;
    return m;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (std::uint32_t e : exps_) d += e;
    return d;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < exps_.size(); ++v)
        if (exps_[v] > 0) s.push_back(v);
    return s;
}

bool Monomial::divides(const Monomial& m) const {
    if (exps_.size() != m.exps_.size())
        throw domain_error("monomials live in different rings");
    for (std::size_t v = 0; v < exps_.size(); ++v)
        if (exps_[v] > m.exps_[v]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    if (exps_.size() != m.exps_.size())
        throw domain_error("monomials live in different rings");
    Monomial r(exps_.size());
    for (std::size_t v = 0; v < exps_.size(); ++v) {
        std::uint64_t e = std::uint64_t(exps_[v]) + m.exps_[v];
        if (e > std::numeric_limits<std::uint32_t>::max())
            throw overflow_error("monomial exponent overflow");
        r.exps_[v] = static_cast<std::uint32_t>(e);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
    if (exps_.size() != m.exps_.size())
        throw domain_error("monomials live in different rings");
    Monomial r(exps_.size());
    for (std::size_t v = 0; v < exps_.size(); ++v)
        r.exps_[v] = std::max(exps_[v], m.exps_[v]);
    return r;
}

Monomial Monomial::gcd(const Monomial& m) const {
    if (exps_.size() != m.exps_.size())
        throw domain_error("monomials live in different rings");
    Monomial r(exps_.size());
    for (std::size_t v = 0; v < exps_.size(); ++v)
        r.exps_[v] = std::min(exps_[v], m.exps_[v]);
    return r;
}

Monomial Monomial::colon_by(const Monomial& g) const {
    if (exps_.size() != g.exps_.size())
        throw domain_error("monomials live in different rings");
    Monomial r(exps_.size());
    for (std::size_t v = 0; v < exps_.size(); ++v)
        r.exps_[v] = exps_[v] > g.exps_[v] ? exps_[v] - g.exps_[v] : 0;
    return r;
}

// ---------------------------------------------------------------------------
// MonomialPrime

MonomialPrime::MonomialPrime(std::size_t nvars, std::vector<std::size_t> vars)
    : nvars_(nvars), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (vars_[k] >= nvars_)
            throw domain_error("prime variable index out of range");
        if (k > 0 && vars_[k] == vars_[k - 1])
            throw domain_error("prime variable listed twice");
    }
}

bool MonomialPrime::contains_variable(std::size_t v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::strong_ordering MonomialPrime::operator<=>(const MonomialPrime& other) const {
    if (auto c = vars_.size() <=> other.vars_.size(); c != 0) return c;
    if (auto c = vars_ <=> other.vars_; c != 0) return c;
    return nvars_ <=> other.nvars_;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool redundant =
            std::any_of(kept.begin(), kept.end(),
                        [&](const Monomial& h) { return h.divides(g); });
        if (!redundant) kept.push_back(g);
    }
    // The scan needs ascending order (a divisor is lex-below anything it
    // divides); the stored form is descending so that x precedes y.
    std::reverse(kept.begin(), kept.end());
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens)
    : vars_(std::move(vars)) {
    for (const Monomial& g : gens)
        if (g.nvars() != vars_.size())
            throw domain_error("generator has the wrong number of variables");
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> vars) {
    return MonomialIdeal(std::move(vars), {});
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> vars) {
    std::size_t n = vars.size();
    return MonomialIdeal(std::move(vars), {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

// ---------------------------------------------------------------------------
// Ideal operations

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.var_names() != b.var_names())
        throw domain_error("ideals live in different rings");
}

} // namespace

MonomialIdeal ideal_sum(const MonomialIdeal& i, const MonomialIdeal& j) {
    require_same_ring(i, j);
    std::vector<Monomial> gens = i.generators();
    gens.insert(gens.end(), j.generators().begin(), j.generators().end());
    return MonomialIdeal(i.var_names(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
    require_same_ring(i, j);
    std::vector<Monomial> gens;
    for (const Monomial& a : i.generators())
        for (const Monomial& b : j.generators())
            gens.push_back(a.lcm(b));
    return MonomialIdeal(i.var_names(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& g) {
    std::vector<Monomial> gens;
    for (const Monomial& m : i.generators())
        gens.push_back(m.colon_by(g));
    return MonomialIdeal(i.var_names(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j) {
    require_same_ring(i, j);
    if (j.is_zero())
        return MonomialIdeal::unit(i.var_names());
    MonomialIdeal acc = MonomialIdeal::unit(i.var_names());
    bool first = true;
    for (const Monomial& g : j.generators()) {
        MonomialIdeal part = colon(i, g);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

MonomialIdeal saturate(const MonomialIdeal& i, const MonomialIdeal& j) {
    MonomialIdeal cur = i;
    for (;;) {
        MonomialIdeal next = colon(cur, j);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

MonomialIdeal localize(const MonomialIdeal& i, const MonomialPrime& p) {
    if (p.nvars() != i.nvars())
        throw domain_error("prime lives in a different ring");
    std::vector<std::string> sub_names;
    for (std::size_t v : p.variables())
        sub_names.push_back(i.var_names()[v]);
    std::vector<Monomial> gens;
    for (const Monomial& g : i.generators()) {
        Monomial m(p.variables().size());
        for (std::size_t k = 0; k < p.variables().size(); ++k)
            m.exponent(k) = g.exponent(p.variables()[k]);
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(sub_names), std::move(gens));
}

MonomialIdeal prime_ideal(const MonomialPrime& p, const std::vector<std::string>& vars) {
    if (p.nvars() != vars.size())
        throw domain_error("prime lives in a different ring");
    std::vector<Monomial> gens;
    for (std::size_t v : p.variables())
        gens.push_back(Monomial::variable(vars.size(), v));
    return MonomialIdeal(vars, std::move(gens));
}

// ---------------------------------------------------------------------------
// Irreducible decomposition

namespace {

std::string ideal_key(const MonomialIdeal& i) {
    std::string key;
    for (const Monomial& g : i.generators()) {
        for (std::uint32_t e : g.exponents()) {
            key.append(reinterpret_cast<const char*>(&e), sizeof(e));
        }
        key.push_back('\x01');
    }
    return key;
}

void decompose_rec(const MonomialIdeal& i, std::set<std::string>& seen,
                   std::vector<MonomialIdeal>& leaves) {
    if (!seen.insert(ideal_key(i)).second) return;
    const std::vector<Monomial>& gens = i.generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<std::size_t> supp = gens[k].support();
        if (supp.size() < 2) continue;
        // Split off the pure power of the first support variable.
        std::size_t v = supp[0];
        Monomial power = Monomial::variable(i.nvars(), v, gens[k].exponent(v));
        Monomial rest = gens[k];
        rest.exponent(v) = 0;
        std::vector<Monomial> left = gens, right = gens;
        left[k] = std::move(power);
        right[k] = std::move(rest);
        decompose_rec(MonomialIdeal(i.var_names(), std::move(left)), seen, leaves);
        decompose_rec(MonomialIdeal(i.var_names(), std::move(right)), seen, leaves);
        return;
    }
    leaves.push_back(i);
}

} // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i) {
    if (i.is_unit()) return {};
    if (i.is_zero()) return {i};
    if (i.generators().size() > 16)
        throw domain_error("irreducible decomposition limited to 16 generators");
    if (i.nvars() > 8)
        throw domain_error("irreducible decomposition limited to 8 variables");

    std::set<std::string> seen;
    std::vector<MonomialIdeal> leaves;
    decompose_rec(i, seen, leaves);

    std::sort(leaves.begin(), leaves.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return a.generators() < b.generators();
              });
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

    // A component containing another component is redundant in the
    // intersection.
    std::vector<MonomialIdeal> kept;
    for (std::size_t a = 0; a < leaves.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < leaves.size() && !redundant; ++b) {
            if (a == b) continue;
            if (leaves[a].contains(leaves[b]) && !(leaves[b].contains(leaves[a]) && b > a))
                redundant = true;
        }
        if (!redundant) kept.push_back(leaves[a]);
    }
    return kept;
}

// ---------------------------------------------------------------------------
// Minimal primes, dimension

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& i) {
    std::size_t n = i.nvars();
    if (n > 16)
        throw domain_error("minimal primes limited to 16 variables");
    if (i.is_unit()) return {};
    if (i.is_zero()) return {MonomialPrime(n, {})};

    std::vector<std::uint32_t> supports;
    for (const Monomial& g : i.generators()) {
        std::uint32_t mask = 0;
        for (std::size_t v : g.support()) mask |= (1u << v);
        supports.push_back(mask);
    }

    std::vector<std::uint32_t> hitting;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool hits = std::all_of(supports.begin(), supports.end(),
                                [&](std::uint32_t s) { return (mask & s) != 0; });
        if (hits) hitting.push_back(mask);
    }

    std::vector<MonomialPrime> result;
    for (std::uint32_t m : hitting) {
        bool minimal = std::none_of(hitting.begin(), hitting.end(),
                                    [&](std::uint32_t h) {
                                        return h != m && (h & m) == h;
                                    });
        if (!minimal) continue;
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < n; ++v)
            if (m & (1u << v)) vars.push_back(v);
        result.emplace_back(n, std::move(vars));
    }
    std::sort(result.begin(), result.end());
    return result;
}

MonomialIdeal primary_components_above_dim(const MonomialIdeal& i, int bound) {
    std::vector<MonomialIdeal> comps = irreducible_decomposition(i);
    MonomialIdeal acc = MonomialIdeal::unit(i.var_names());
    for (const MonomialIdeal& c : comps) {
        std::set<std::size_t> supp;
        for (const Monomial& g : c.generators())
            for (std::size_t v : g.support()) supp.insert(v);
        int dim = static_cast<int>(i.nvars()) - static_cast<int>(supp.size());
        if (dim > bound) acc = intersect(acc, c);
    }
    return acc;
}

int krull_dimension(const MonomialIdeal& i) {
    if (i.is_unit()) return -1;
    std::vector<MonomialPrime> primes = minimal_primes(i);
    int best = -1;
    for (const MonomialPrime& p : primes)
        best = std::max(best, static_cast<int>(p.quotient_dimension()));
    return best;
}

// ---------------------------------------------------------------------------
// Standard monomials

std::vector<Monomial> standard_monomials_up_to(const MonomialIdeal& i, std::uint32_t d) {
    std::size_t n = i.nvars();
    std::vector<Monomial> out;
    Monomial cur(n);
    // Depth-first over exponent vectors with total degree at most d.
    std::function<void(std::size_t, std::uint32_t)> rec =
        [&](std::size_t v, std::uint32_t left) {
            if (v == n) {
                if (!i.contains(cur)) out.push_back(cur);
                return;
            }
            for (std::uint32_t e = 0; e <= left; ++e) {
                cur.exponent(v) = e;
                rec(v + 1, left - e);
            }
            cur.exponent(v) = 0;
        };
    rec(0, d);
    std::stable_sort(out.begin(), out.end(),
                     [](const Monomial& a, const Monomial& b) {
                         if (a.total_degree() != b.total_degree())
                             return a.total_degree() < b.total_degree();
                         return a < b;
                     });
    return out;
}

std::uint64_t artinian_k_dimension(const MonomialIdeal& i) {
    if (i.is_unit()) return 0;
    if (krull_dimension(i) > 0)
        throw domain_error("k-dimension requires a zero-dimensional quotient");
    std::size_t n = i.nvars();
    std::vector<std::uint32_t> caps(n, 0);
    for (const Monomial& g : i.generators())
        for (std::size_t v = 0; v < n; ++v)
            caps[v] = std::max(caps[v], g.exponent(v));

    std::uint64_t count = 0;
    Monomial cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            if (!i.contains(cur)) ++count;
            return;
        }
        for (std::uint32_t e = 0; e < std::max<std::uint32_t>(caps[v], 1); ++e) {
            cur.exponent(v) = e;
            rec(v + 1);
        }
        cur.exponent(v) = 0;
    };
    rec(0);
    return count;
}

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

class IdealParser {
public:
    IdealParser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    std::vector<Monomial> parse() {
        skip_ws();
        if (done())
            throw parse_error("empty ideal text; use 0 for the zero ideal", pos_);
        if (peek() == '0') {
            std::size_t at = pos_;
            ++pos_;
            skip_ws();
            if (!done())
                throw parse_error("0 denotes the zero ideal and must stand alone", at);
            return {};
        }
        std::vector<Monomial> gens;
        gens.push_back(parse_monomial());
        for (;;) {
            skip_ws();
            if (done()) break;
            if (peek() == ',') {
                ++pos_;
                skip_ws();
                if (done())
                    throw parse_error("expected a monomial after ','", pos_);
            }
            gens.push_back(parse_monomial());
        }
        return gens;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Monomial parse_monomial() {
        Monomial m(vars_.size());
        bool got_factor = false;
        for (;;) {
            std::size_t before = pos_;
            skip_ws();
            bool had_ws = pos_ != before;
            if (done()) break;
            if (peek() == '*') {
                if (!got_factor)
                    throw parse_error("'*' must follow a factor", pos_);
                ++pos_;
                skip_ws();
                if (done())
                    throw parse_error("expected a factor after '*'", pos_);
                m = m.times(parse_factor());
                continue;
            }
            if (peek() == ',') break;
            if (had_ws && got_factor) break; // whitespace ends the monomial
            m = m.times(parse_factor());
            got_factor = true;
        }
        if (!got_factor)
            throw parse_error("expected a monomial", pos_);
        return m;
    }

    Monomial parse_factor() {
        if (done())
            throw parse_error("expected a variable or 1", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t at = pos_;
            std::uint64_t value = parse_number();
            if (value != 1)
                throw parse_error("monomial coefficients are not supported", at);
            Monomial one = Monomial::one(vars_.size());
            maybe_exponent(); // 1^k is still 1
            return one;
        }
        std::size_t v = match_variable();
        std::uint32_t e = 1;
        if (auto exp = maybe_exponent()) e = *exp;
        return Monomial::variable(vars_.size(), v, e);
    }

    std::optional<std::uint32_t> maybe_exponent() {
        std::size_t save = pos_;
        skip_ws();
        if (done() || peek() != '^') {
            pos_ = save;
            return std::nullopt;
        }
        ++pos_;
        skip_ws();
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected an exponent after '^'", pos_);
        std::size_t at = pos_;
        std::uint64_t value = parse_number();
        if (value > std::numeric_limits<std::uint32_t>::max())
            throw parse_error("exponent does not fit in 32 bits", at);
        return static_cast<std::uint32_t>(value);
    }

    std::uint64_t parse_number() {
        std::size_t at = pos_;
        std::uint64_t value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::uint64_t digit = std::uint64_t(peek() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                throw parse_error("number does not fit in 64 bits", at);
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    std::size_t match_variable() {
        std::size_t best = vars_.size();
        std::size_t best_len = 0;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            const std::string& name = vars_[v];
            if (name.size() > best_len &&
                text_.compare(pos_, name.size(), name) == 0) {
                best = v;
                best_len = name.size();
            }
        }
        if (best == vars_.size())
            throw parse_error("expected a variable or 1", pos_);
        pos_ += best_len;
        return best;
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

void validate_var_names(const std::vector<std::string>& vars) {
    std::set<std::string> seen;
    for (const std::string& name : vars) {
        if (name.empty())
            throw domain_error("variable names must be nonempty");
        if (std::isdigit(static_cast<unsigned char>(name[0])))
            throw domain_error("variable name '" + name + "' may not start with a digit");
        for (char c : name)
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',' ||
                c == '*' || c == '^')
                throw domain_error("variable name '" + name + "' contains a reserved character");
        if (!seen.insert(name).second)
            throw domain_error("variable name '" + name + "' listed twice");
    }
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text, std::vector<std::string> vars) {
    validate_var_names(vars);
    IdealParser parser(text, vars);
    std::vector<Monomial> gens = parser.parse();
    return MonomialIdeal(std::move(vars), std::move(gens));
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
        if (m.exponent(v) == 0) continue;
        if (!first) out << '*';
        out << vars[v];
        if (m.exponent(v) > 1) out << '^' << m.exponent(v);
        first = false;
    }
    return out.str();
}

std::string format_ideal(const MonomialIdeal& i) {
    if (i.is_zero()) return "(0)";
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < i.generators().size(); ++k) {
        if (k > 0) out << ", ";
        out << format_monomial(i.generators()[k], i.var_names());
    }
    out << ')';
    return out.str();
}

std::string format_prime(const MonomialPrime& p, const std::vector<std::string>& vars) {
    if (p.variables().empty()) return "(0)";
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < p.variables().size(); ++k) {
        if (k > 0) out << ',';
        out << vars[p.variables()[k]];
    }
    out << ')';
    return out.str();
}

} // namespace ordlen
