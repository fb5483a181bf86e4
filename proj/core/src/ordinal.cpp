#include "ordlen/ordinal.hpp"

#include <algorithm>
#include <cctype>

namespace ordlen {

namespace detail {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("64-bit overflow in ordinal coefficient or exponent addition");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("64-bit overflow in ordinal coefficient multiplication");
    return r;
}

} // namespace detail

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coef == 0)
            throw domain_error("ordinal term has coefficient 0");
        if (i > 0 && terms[i - 1].exp <= terms[i].exp)
            throw domain_error("ordinal exponents must be strictly descending");
    }
    Ordinal a;
    a.terms_ = std::move(terms);
    return a;
}

std::optional<std::uint64_t> Ordinal::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exp;
}

std::optional<std::uint64_t> Ordinal::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().exp;
}

std::uint64_t Ordinal::valence() const {
    std::uint64_t v = 0;
    for (const auto& t : terms_) v = detail::checked_add(v, t.coef);
    return v;
}

std::uint64_t Ordinal::coefficient(std::uint64_t i) const {
    for (const auto& t : terms_)
        if (t.exp == i) return t.coef;
    return 0;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
    const auto& a = terms_;
    const auto& b = other.terms_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].exp != b[i].exp)
            return a[i].exp <=> b[i].exp;
        if (a[i].coef != b[i].coef)
            return a[i].coef <=> b[i].coef;
    }
    return a.size() <=> b.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal ord_sum(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const std::uint64_t db = *b.degree();
    std::vector<OrdinalTerm> out;
    out.reserve(a.terms().size() + b.terms().size());
    for (const auto& t : a.terms()) {
        if (t.exp > db) out.push_back(t);
    }
    OrdinalTerm lead = b.terms().front();
    lead.coef = detail::checked_add(lead.coef, a.coefficient(db));
    out.push_back(lead);
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
    return Ordinal::from_terms(std::move(out));
}

Ordinal shuffle_sum(const Ordinal& a, const Ordinal& b) {
    std::vector<OrdinalTerm> out;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->exp > ib->exp)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->exp > ia->exp) {
            out.push_back(*ib++);
        } else {
            out.push_back({ia->exp, detail::checked_add(ia->coef, ib->coef)});
            ++ia;
            ++ib;
        }
    }
    return Ordinal::from_terms(std::move(out));
}

namespace {

void oracle_walk(const std::vector<std::uint64_t>& ua, std::size_t i,
                 const std::vector<std::uint64_t>& ub, std::size_t j,
                 const Ordinal& acc, Ordinal& best) {
    if (i == ua.size() && j == ub.size()) {
        if (compare(best, acc) == std::strong_ordering::less) best = acc;
        return;
    }
    if (i < ua.size())
        oracle_walk(ua, i + 1, ub, j, ord_sum(acc, Ordinal::term(ua[i], 1)), best);
    if (j < ub.size())
        oracle_walk(ua, i, ub, j + 1, ord_sum(acc, Ordinal::term(ub[j], 1)), best);
}

std::vector<std::uint64_t> unit_exponents(const Ordinal& a) {
    std::vector<std::uint64_t> u;
    for (const auto& t : a.terms())
        for (std::uint64_t k = 0; k < t.coef; ++k) u.push_back(t.exp);
    return u;
}

} // namespace

Ordinal shuffle_sum_oracle(const Ordinal& a, const Ordinal& b) {
    if (detail::checked_add(a.valence(), b.valence()) > 12)
        throw domain_error("shuffle_sum_oracle requires valence(a) + valence(b) <= 12");
    auto ua = unit_exponents(a);
    auto ub = unit_exponents(b);
    Ordinal best;
    oracle_walk(ua, 0, ub, 0, Ordinal(), best);
    return best;
}

Ordinal scalar_mul(std::uint64_t n, const Ordinal& a) {
    if (n == 0) return Ordinal();
    std::vector<OrdinalTerm> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms())
        out.push_back({t.exp, detail::checked_mul(n, t.coef)});
    return Ordinal::from_terms(std::move(out));
}

Ordinal omega_shift(std::uint64_t n, const Ordinal& a) {
    std::vector<OrdinalTerm> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms())
        out.push_back({detail::checked_add(t.exp, n), t.coef});
    return Ordinal::from_terms(std::move(out));
}

Ordinal truncate(const Ordinal& a, std::uint64_t e, TruncateMode mode) {
    std::vector<OrdinalTerm> out;
    for (const auto& t : a.terms()) {
        bool keep = false;
        switch (mode) {
        case TruncateMode::ge: keep = t.exp >= e; break;
        case TruncateMode::gt: keep = t.exp > e; break;
        case TruncateMode::le: keep = t.exp <= e; break;
        case TruncateMode::lt: keep = t.exp < e; break;
        }
        if (keep) out.push_back(t);
    }
    return Ordinal::from_terms(std::move(out));
}

bool weaker_than(const Ordinal& a, const Ordinal& b) {
    for (const auto& t : a.terms())
        if (t.coef > b.coefficient(t.exp)) return false;
    return true;
}

Ordinal join(const Ordinal& a, const Ordinal& b) {
    std::vector<OrdinalTerm> out;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->exp > ib->exp)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->exp > ia->exp) {
            out.push_back(*ib++);
        } else {
            out.push_back({ia->exp, std::max(ia->coef, ib->coef)});
            ++ia;
            ++ib;
        }
    }
    return Ordinal::from_terms(std::move(out));
}

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(const std::string& text) : s_(text) {}

    Ordinal parse() {
        skip_ws();
        if (at_end()) throw parse_error("empty ordinal", pos_);
        if (s_[pos_] == '0') {
            std::size_t zero_at = pos_;
            ++pos_;
            skip_ws();
            if (!at_end()) throw parse_error("unexpected input after \"0\"", pos_);
            (void)zero_at;
            return Ordinal();
        }
        std::vector<OrdinalTerm> terms;
        std::vector<std::size_t> starts;
        starts.push_back(pos_);
        terms.push_back(parse_term());
        skip_ws();
        while (!at_end()) {
            expect('+');
            skip_ws();
            starts.push_back(pos_);
            terms.push_back(parse_term());
            skip_ws();
        }
        for (std::size_t i = 1; i < terms.size(); ++i)
            if (terms[i - 1].exp <= terms[i].exp)
                throw parse_error("ordinal exponents must be strictly descending",
                                  starts[i]);
        return Ordinal::from_terms(std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || s_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::uint64_t parse_number() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("expected a number", pos_);
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (value > (UINT64_MAX - digit) / 10)
                throw parse_error("number does not fit in 64 bits", start);
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    // term := [coef ["*"]] "w" ["^" exp] | coef
    OrdinalTerm parse_term() {
        skip_ws();
        if (at_end()) throw parse_error("expected a term", pos_);
        std::uint64_t coef = 1;
        bool saw_coef = false;
        std::size_t coef_at = pos_;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coef = parse_number();
            saw_coef = true;
        }
        skip_ws();
        bool saw_star = false;
        if (!at_end() && s_[pos_] == '*') {
            if (!saw_coef) throw parse_error("'*' without a coefficient", pos_);
            saw_star = true;
            ++pos_;
            skip_ws();
        }
        if (!at_end() && s_[pos_] == 'w') {
            ++pos_;
            std::uint64_t exp = 1;
            skip_ws();
            if (!at_end() && s_[pos_] == '^') {
                ++pos_;
                exp = parse_number();
            }
            if (coef == 0) throw parse_error("term has coefficient 0", coef_at);
            return {exp, coef};
        }
        if (saw_star) throw parse_error("expected 'w' after '*'", pos_);
        if (!saw_coef) throw parse_error("expected a coefficient or 'w'", pos_);
        if (coef == 0) throw parse_error("term has coefficient 0", coef_at);
        return {0, coef};
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Ordinal parse_ordinal(const std::string& text) { return OrdinalParser(text).parse(); }

std::string format_ordinal(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) out += " + ";
        first = false;
        if (t.exp == 0) {
            out += std::to_string(t.coef);
            continue;
        }
        if (t.coef != 1) {
            out += std::to_string(t.coef);
            out += '*';
        }
        out += 'w';
        if (t.exp != 1) {
            out += '^';
            out += std::to_string(t.exp);
        }
    }
    return out;
}

} // namespace ordlen
