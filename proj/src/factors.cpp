#include "pal/factors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pal {

namespace {

std::vector<std::uint32_t> suffix_array(std::string_view s) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> sa(n);
    std::iota(sa.begin(), sa.end(), 0);
    if (n == 0) return sa;
    std::vector<std::int32_t> rank(n), tmp(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(s[i]);
    for (std::size_t k = 1;; k <<= 1) {
        auto cmp = [&](std::uint32_t a, std::uint32_t b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            std::int32_t ra = a + k < n ? rank[a + k] : -1;
            std::int32_t rb = b + k < n ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i)
            tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        rank = tmp;
        if (rank[sa[n - 1]] == static_cast<std::int32_t>(n) - 1) break;
    }
    return sa;
}

// Kasai: lcp[i] = longest common prefix of sa[i-1] and sa[i]; lcp[0] = 0.
std::vector<std::uint32_t> lcp_array(std::string_view s, const std::vector<std::uint32_t>& sa) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> rank(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::uint32_t>(i);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) { h = 0; continue; }
        std::size_t j = sa[rank[i] - 1];
        if (h > 0) --h;
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = static_cast<std::uint32_t>(h);
    }
    return lcp;
}

}  // namespace

FactorIndex FactorIndex::build(Word w, std::size_t n_max) {
    if (n_max > w.size()) throw std::invalid_argument("n_max exceeds word length");
    FactorIndex idx(std::move(w), n_max);
    const std::string_view b = idx.word_.bytes();
    const std::size_t len = idx.word_.size();
    idx.by_length_.resize(n_max + 1);
    idx.lookup_.resize(n_max + 1);

    // The empty factor occurs at every boundary position.
    FactorGroup eps;
    eps.content = b.substr(0, 0);
    eps.occurrences.resize(len + 1);
    std::iota(eps.occurrences.begin(), eps.occurrences.end(), 0);
    idx.by_length_[0].push_back(std::move(eps));
    idx.lookup_[0].emplace(idx.by_length_[0][0].content, 0);

    for (std::size_t n = 1; n <= n_max; ++n) {
        auto& groups = idx.by_length_[n];
        auto& lookup = idx.lookup_[n];
        for (std::size_t p = 0; p + n <= len; ++p) {
            auto key = b.substr(p, n);
            auto [it, inserted] = lookup.try_emplace(key, static_cast<std::uint32_t>(groups.size()));
            if (inserted) groups.push_back(FactorGroup{key, {}});
            groups[it->second].occurrences.push_back(static_cast<std::uint32_t>(p));
        }
        std::vector<std::uint32_t> order(groups.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t c) {
            return groups[a].content < groups[c].content;
        });
        std::vector<FactorGroup> sorted;
        sorted.reserve(groups.size());
        for (auto id : order) sorted.push_back(std::move(groups[id]));
        groups = std::move(sorted);
        for (std::uint32_t i = 0; i < groups.size(); ++i) lookup[groups[i].content] = i;
    }
    return idx;
}

std::span<const FactorGroup> FactorIndex::factors(std::size_t n) const {
    if (n >= by_length_.size()) throw std::out_of_range("length exceeds index depth");
    return by_length_[n];
}

const FactorGroup* FactorIndex::find(std::string_view content) const {
    if (content.size() >= lookup_.size()) return nullptr;
    const auto& m = lookup_[content.size()];
    auto it = m.find(content);
    return it == m.end() ? nullptr : &by_length_[content.size()][it->second];
}

std::vector<long long> complexity_profile(const FactorIndex& idx) {
    std::vector<long long> c(idx.n_max() + 1);
    for (std::size_t n = 0; n <= idx.n_max(); ++n)
        c[n] = static_cast<long long>(idx.distinct(n));
    return c;
}

std::vector<long long> full_complexity_profile(const Word& w) {
    const std::string_view s = w.bytes();
    const std::size_t n = s.size();
    std::vector<long long> c(n + 1, 0);
    c[0] = 1;
    if (n == 0) return c;
    auto sa = suffix_array(s);
    auto lcp = lcp_array(s, sa);
    // Suffix sa[i] contributes one new factor of each length in (lcp[i], |suffix|].
    std::vector<long long> diff(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t suffix_len = n - sa[i];
        std::size_t low = lcp[i] + 1;
        if (low <= suffix_len) {
            diff[low] += 1;
            diff[suffix_len + 1] -= 1;
        }
    }
    long long run = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        run += diff[m];
        c[m] = run;
    }
    return c;
}

SpecialFactorReport special_factors(const FactorIndex& idx, std::size_t n) {
    if (n > idx.n_max()) throw std::out_of_range("length exceeds index depth");
    SpecialFactorReport report;
    report.n = n;
    const auto symbols = idx.word().symbols();
    for (const auto& g : idx.factors(n)) {
        std::set<std::uint8_t> right, left;
        for (auto p : g.occurrences) {
            if (p + n < symbols.size()) right.insert(symbols[p + n]);
            if (p > 0) left.insert(symbols[p - 1]);
        }
        if (right.size() >= 2) report.right_special.push_back(g.content);
        if (left.size() >= 2) report.left_special.push_back(g.content);
    }
    return report;
}

ReturnWordsResult complete_return_words(const FactorIndex& idx, const Word& x) {
    if (!(x.alphabet() == idx.word().alphabet()))
        throw std::invalid_argument("factor alphabet differs from indexed word");
    ReturnWordsResult result;
    const auto* g = idx.find(x.bytes());
    if (!g || g->occurrences.size() < 2) return result;
    result.evidence = true;
    const std::string_view b = idx.word().bytes();
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i + 1 < g->occurrences.size(); ++i) {
        std::uint32_t p = g->occurrences[i];
        std::uint32_t q = g->occurrences[i + 1];
        seen.insert(b.substr(p, q - p + x.size()));
    }
    result.words.assign(seen.begin(), seen.end());
    return result;
}

SimplePathsResult n_simple_paths(const FactorIndex& idx, std::size_t n) {
    SimplePathsResult result;
    auto report = special_factors(idx, n);
    std::set<std::string_view> special(report.right_special.begin(), report.right_special.end());
    special.insert(report.left_special.begin(), report.left_special.end());
    if (special.empty()) {
        result.degenerate = true;
        return result;
    }
    std::vector<std::uint32_t> positions;
    for (auto f : special) {
        const auto* g = idx.find(f);
        positions.insert(positions.end(), g->occurrences.begin(), g->occurrences.end());
    }
    std::sort(positions.begin(), positions.end());
    const std::string_view b = idx.word().bytes();
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
        std::uint32_t p = positions[i], q = positions[i + 1];
        auto path = b.substr(p, q - p + n);
        if (seen.insert(path).second)
            result.paths.push_back({path, b.substr(p, n), b.substr(q, n)});
    }
    // The segment after the last special occurrence has not closed yet.
    if (positions.back() + n < b.size()) result.truncated = 1;
    return result;
}

AlternationResult alternation_check(const FactorIndex& idx, const Word& x) {
    if (!(x.alphabet() == idx.word().alphabet()))
        throw std::invalid_argument("factor alphabet differs from indexed word");
    AlternationResult result;
    if (is_palindrome(x.bytes())) {
        result.vacuous = true;
        result.alternating = true;
        result.mirror_present = true;
        return result;
    }
    std::string mirrored = mirror_bytes(x.bytes());
    const auto* gx = idx.find(x.bytes());
    const auto* gm = idx.find(mirrored);
    result.mirror_present = gm != nullptr;
    std::vector<std::pair<std::uint32_t, int>> merged;
    if (gx)
        for (auto p : gx->occurrences) merged.emplace_back(p, 0);
    if (gm)
        for (auto p : gm->occurrences) merged.emplace_back(p, 1);
    std::sort(merged.begin(), merged.end());
    result.alternating = true;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].second == merged[i + 1].second) {
            result.alternating = false;
            break;
        }
    return result;
}

}  // namespace pal
