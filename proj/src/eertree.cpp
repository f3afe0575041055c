#include "pal/eertree.hpp"

#include <stdexcept>

namespace pal {

std::int32_t Eertree::find_extension(std::int32_t node, std::size_t pos) const {
    // Longest palindromic suffix chain member that symbol pos extends.
    const auto s = word_.symbols();
    while (true) {
        auto len = lengths_[node];
        auto probe = static_cast<std::int64_t>(pos) - len - 1;
        if (probe >= 0 && s[static_cast<std::size_t>(probe)] == s[pos]) return node;
        node = links_[node];
    }
}

Eertree::Eertree(Word w) : word_(std::move(w)) {
    sigma_ = word_.alphabet().size();
    const std::size_t n = word_.size();
    lengths_ = {-1, 0};
    links_ = {kRootNeg, kRootNeg};
    first_end_ = {0, 0};
    next_.assign(2 * sigma_, -1);
    lps_node_.assign(n + 1, kRootZero);
    new_flag_.assign(n + 1, 0);

    const auto s = word_.symbols();
    std::int32_t last = kRootZero;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t c = s[i];
        std::int32_t cur = find_extension(last, i);
        if (auto existing = transition(cur, c); existing != -1) {
            last = existing;
        } else {
            std::int32_t link;
            if (lengths_[cur] + 2 == 1) {
                link = kRootZero;
            } else {
                link = transition(find_extension(links_[cur], i), c);
            }
            auto id = static_cast<std::int32_t>(lengths_.size());
            lengths_.push_back(lengths_[cur] + 2);
            links_.push_back(link);
            first_end_.push_back(static_cast<std::uint32_t>(i + 1));
            next_.resize(next_.size() + sigma_, -1);
            next_[static_cast<std::size_t>(cur) * sigma_ + c] = id;
            last = id;
            new_flag_[i + 1] = 1;
        }
        lps_node_[i + 1] = last;
    }
}

std::vector<long long> Eertree::palindromic_complexity(std::size_t n_max) const {
    std::vector<long long> p(n_max + 1, 0);
    p[0] = 1;
    for (std::size_t id = 2; id < lengths_.size(); ++id) {
        auto len = static_cast<std::size_t>(lengths_[id]);
        if (len <= n_max) ++p[len];
    }
    return p;
}

std::vector<long long> palindromic_complexity_profile(const Word& w, std::size_t n_max) {
    if (n_max > w.size()) throw std::invalid_argument("n_max exceeds word length");
    return Eertree(w).palindromic_complexity(n_max);
}

Word lps(const Word& w, std::size_t prefix_len) {
    if (prefix_len > w.size()) throw std::out_of_range("prefix length exceeds word length");
    if (prefix_len == 0) return w.substr(0, 0);
    Eertree tree(w.prefix(prefix_len));
    std::size_t len = tree.lps_length(prefix_len);
    return w.substr(prefix_len - len, len);
}

LpsInfo lps_info(const Word& w, std::size_t prefix_len) {
    Word suffix = lps(w, prefix_len);
    std::string_view prefix_bytes = w.bytes().substr(0, prefix_len);
    std::string_view pat = suffix.bytes();
    std::size_t count = 0;
    if (!pat.empty()) {
        for (std::size_t pos = prefix_bytes.find(pat); pos != std::string_view::npos;
             pos = prefix_bytes.find(pat, pos + 1))
            ++count;
    } else {
        count = prefix_len + 1;
    }
    return {std::move(suffix), count};
}

DefectProfile defect_profile(const Word& w) {
    Eertree tree(w);
    DefectProfile out;
    out.increments.resize(w.size());
    out.prefix_defects.resize(w.size() + 1, 0);
    long long d = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        std::uint8_t delta = tree.new_palindrome_at(i) ? 0 : 1;
        out.increments[i - 1] = delta;
        d += delta;
        out.prefix_defects[i] = d;
    }
    out.defect = d;
    // Same number must fall out of the palindrome-count deficit.
    long long by_deficit = static_cast<long long>(w.size() + 1) -
                           static_cast<long long>(tree.palindrome_count() + 1);
    if (by_deficit != d)
        throw std::logic_error("defect routes disagree: increments vs palindrome deficit");
    return out;
}

DefectEstimate infinite_defect_estimate(const std::vector<long long>& prefix_defects) {
    if (prefix_defects.empty()) throw std::invalid_argument("prefix_defects must include D(empty)");
    DefectEstimate est;
    const std::size_t n = prefix_defects.size() - 1;  // word length
    est.window = (n + 1) / 2;
    est.candidate = prefix_defects[n];
    est.stabilized = n == 0 || prefix_defects[n - est.window] == est.candidate;
    std::size_t first = n;
    while (first > 0 && prefix_defects[first - 1] == est.candidate) --first;
    est.stabilization_index = first;
    return est;
}

}  // namespace pal
