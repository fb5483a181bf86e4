#include "ordlen/poset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ordlen {

void FinitePoset::check_index(int a) const {
    if (a < 0 || static_cast<std::size_t>(a) >= n_)
        throw domain_error("poset element index out of range");
}

FinitePoset::FinitePoset(std::size_t n, const std::vector<std::pair<int, int>>& relations) {
    if (n > max_size)
        throw domain_error("poset exceeds the supported size of 4096 elements");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(n_ * words_, 0);

    std::vector<std::vector<int>> succ(n_);
    std::vector<int> indeg(n_, 0);
    for (auto [a, b] : relations) {
        check_index(a);
        check_index(b);
        if (a == b) throw domain_error("poset relation a < a is not antisymmetric");
        succ[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }

    // Kahn topological order; leftover nodes mean a cycle.
    std::vector<int> order;
    order.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v)
        if (indeg[v] == 0) order.push_back(static_cast<int>(v));
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : succ[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) order.push_back(w);
    }
    if (order.size() != n_)
        throw domain_error("poset relations contain a cycle");

    // Reachability by reverse topological sweep over bit rows.
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        auto* row = &bits_[static_cast<std::size_t>(v) * words_];
        for (int w : succ[static_cast<std::size_t>(v)]) {
            row[static_cast<std::size_t>(w) / 64] |= std::uint64_t(1) << (static_cast<std::size_t>(w) % 64);
            const auto* wrow = &bits_[static_cast<std::size_t>(w) * words_];
            for (std::size_t k = 0; k < words_; ++k) row[k] |= wrow[k];
        }
    }
    for (std::size_t v = 0; v < n_; ++v)
        if (bit(static_cast<int>(v), static_cast<int>(v)))
            throw domain_error("poset relations contain a cycle");
}

FinitePoset FinitePoset::chain(std::size_t n) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i + 1 < n; ++i)
        rel.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    return FinitePoset(n, rel);
}

FinitePoset FinitePoset::antichain(std::size_t n) { return FinitePoset(n, {}); }

std::optional<int> FinitePoset::maximum() const {
    for (std::size_t m = 0; m < n_; ++m) {
        bool top = true;
        for (std::size_t x = 0; x < n_ && top; ++x)
            if (x != m && !bit(static_cast<int>(x), static_cast<int>(m))) top = false;
        if (top) return static_cast<int>(m);
    }
    return std::nullopt;
}

std::vector<std::uint64_t> FinitePoset::ranks() const {
    // rank(v) = 1 + max rank strictly below v; process in rank-layer order.
    std::vector<std::uint64_t> rank(n_, 0);
    std::vector<int> below(n_, 0);
    std::vector<std::vector<int>> succ(n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (bit(static_cast<int>(a), static_cast<int>(b))) {
                ++below[b];
                succ[a].push_back(static_cast<int>(b));
            }
    std::vector<int> frontier;
    for (std::size_t v = 0; v < n_; ++v)
        if (below[v] == 0) frontier.push_back(static_cast<int>(v));
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        int v = frontier[head];
        for (int w : succ[static_cast<std::size_t>(v)]) {
            rank[static_cast<std::size_t>(w)] =
                std::max(rank[static_cast<std::size_t>(w)], rank[static_cast<std::size_t>(v)] + 1);
            if (--below[static_cast<std::size_t>(w)] == 0) frontier.push_back(w);
        }
    }
    return rank;
}

Ordinal FinitePoset::foundation_rank(int x) const {
    check_index(x);
    return Ordinal(ranks()[static_cast<std::size_t>(x)]);
}

Ordinal FinitePoset::length() const {
    std::uint64_t best = 0;
    for (std::uint64_t r : ranks()) best = std::max(best, r);
    return Ordinal(best);
}

Ordinal poset_length(const FinitePoset& p) { return p.length(); }

FinitePoset FinitePoset::induced(const std::vector<int>& elements) const {
    for (int e : elements) check_index(e);
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (less(elements[i], elements[j]))
                rel.push_back({static_cast<int>(i), static_cast<int>(j)});
    return FinitePoset(elements.size(), rel);
}

std::vector<std::pair<int, int>> FinitePoset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            if (!bit(static_cast<int>(a), static_cast<int>(b))) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n_ && direct; ++c)
                if (bit(static_cast<int>(a), static_cast<int>(c)) &&
                    bit(static_cast<int>(c), static_cast<int>(b)))
                    direct = false;
            if (direct) covers.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    return covers;
}

FinitePoset sum_order(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size() + q.size();
    if (n > FinitePoset::max_size)
        throw domain_error("poset exceeds the supported size of 4096 elements");
    FinitePoset r;
    r.n_ = n;
    r.words_ = (n + 63) / 64;
    r.bits_.assign(r.n_ * r.words_, 0);
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(static_cast<int>(a), static_cast<int>(b)))
                r.set_bit(static_cast<int>(a), static_cast<int>(b));
        for (std::size_t b = 0; b < q.size(); ++b)
            r.set_bit(static_cast<int>(a), static_cast<int>(p.size() + b));
    }
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            if (q.less(static_cast<int>(a), static_cast<int>(b)))
                r.set_bit(static_cast<int>(p.size() + a), static_cast<int>(p.size() + b));
    return r;
}

FinitePoset product_order(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size() * q.size();
    if (p.size() != 0 && n / p.size() != q.size())
        throw domain_error("poset exceeds the supported size of 4096 elements");
    if (n > FinitePoset::max_size)
        throw domain_error("poset exceeds the supported size of 4096 elements");
    FinitePoset r;
    r.n_ = n;
    r.words_ = (n + 63) / 64;
    r.bits_.assign(r.n_ * r.words_, 0);
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            for (std::size_t c = 0; c < p.size(); ++c)
                for (std::size_t d = 0; d < q.size(); ++d) {
                    if (a == c && b == d) continue;
                    if (p.leq(static_cast<int>(a), static_cast<int>(c)) &&
                        q.leq(static_cast<int>(b), static_cast<int>(d)))
                        r.set_bit(static_cast<int>(a * q.size() + b),
                                  static_cast<int>(c * q.size() + d));
                }
    return r;
}

bool check_subset_lemma(const FinitePoset& p, const std::vector<int>& a,
                        const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (!p.leq(x, y))
                throw domain_error("check_subset_lemma requires a <= b for all pairs");
    const Ordinal len_a = p.induced(a).length();
    const Ordinal len_b = p.induced(b).length();
    const auto all = p.ranks();
    std::uint64_t rank_b_in_p = 0;
    for (int y : b) rank_b_in_p = std::max(rank_b_in_p, all[static_cast<std::size_t>(y)]);
    return compare(ord_sum(len_a, len_b), Ordinal(rank_b_in_p)) != std::strong_ordering::greater;
}

FinitePoset parse_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t offset = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> rel;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t line_start = offset;
        offset += line.size() + 1;
        std::string trimmed = line;
        auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
        while (!trimmed.empty() && is_space(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
        std::size_t first = 0;
        while (first < trimmed.size() && is_space(static_cast<unsigned char>(trimmed[first]))) ++first;
        trimmed = trimmed.substr(first);
        if (trimmed.empty()) continue;
        std::istringstream ls(trimmed);
        if (n < 0) {
            if (!(ls >> n) || n < 0 || !(ls >> std::ws).eof())
                throw parse_error("expected the element count on the first line", line_start);
            continue;
        }
        long long x = 0, y = 0;
        std::string op;
        if (!(ls >> x >> op >> y) || op != "<" || !(ls >> std::ws).eof())
            throw parse_error("expected a relation line \"a < b\"", line_start + first);
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw parse_error("relation element out of range", line_start + first);
        rel.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
    if (n < 0) throw parse_error("empty poset description", 0);
    return FinitePoset(static_cast<std::size_t>(n), rel);
}

std::string format_poset(const FinitePoset& p) {
    std::string out = std::to_string(p.size());
    out += '\n';
    for (auto [a, b] : p.cover_relations()) {
        out += std::to_string(a);
        out += " < ";
        out += std::to_string(b);
        out += '\n';
    }
    return out;
}

} // namespace ordlen
