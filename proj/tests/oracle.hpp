#pragma once

// Brute-force reference computations for tests. Everything here works on
// plain std::string and stays independent of the library's data paths.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline bool is_pal(const std::string& s) {
    for (std::size_t i = 0, j = s.size(); i + 1 < j; ++i, --j)
        if (s[i] != s[j - 1]) return false;
    return true;
}

inline std::set<std::string> distinct_factors(const std::string& w, std::size_t n) {
    std::set<std::string> out;
    if (n == 0) { out.insert(""); return out; }
    for (std::size_t p = 0; p + n <= w.size(); ++p) out.insert(w.substr(p, n));
    return out;
}

// C(n) for all n = 0..|w| by sliding-window enumeration.
inline std::vector<long long> complexity(const std::string& w) {
    std::vector<long long> c(w.size() + 1, 0);
    for (std::size_t n = 0; n <= w.size(); ++n)
        c[n] = static_cast<long long>(distinct_factors(w, n).size());
    return c;
}

// Distinct nonempty palindromic substrings via center expansion.
inline std::set<std::string> palindromic_factors(const std::string& w) {
    std::set<std::string> out;
    const std::size_t n = w.size();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; c >= r && c + r < n && w[c - r] == w[c + r]; ++r)
            out.insert(w.substr(c - r, 2 * r + 1));
        for (std::size_t r = 0; c >= r && c + 1 + r < n && w[c - r] == w[c + 1 + r]; ++r)
            out.insert(w.substr(c - r, 2 * r + 2));
    }
    return out;
}

// Minimal end position (1-based) of the first occurrence of each distinct
// nonempty palindromic substring.
inline std::map<std::string, std::size_t> palindrome_first_end(const std::string& w) {
    std::map<std::string, std::size_t> out;
    auto note = [&](std::size_t start, std::size_t len) {
        std::string p = w.substr(start, len);
        auto it = out.find(p);
        std::size_t end = start + len;
        if (it == out.end() || it->second > end) out[p] = end;
    };
    const std::size_t n = w.size();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; c >= r && c + r < n && w[c - r] == w[c + r]; ++r)
            note(c - r, 2 * r + 1);
        for (std::size_t r = 0; c >= r && c + 1 + r < n && w[c - r] == w[c + 1 + r]; ++r)
            note(c - r, 2 * r + 2);
    }
    return out;
}

inline long long defect(const std::string& w) {
    return static_cast<long long>(w.size() + 1) -
           static_cast<long long>(palindromic_factors(w).size() + 1);
}

inline std::string lps(const std::string& w) {
    for (std::size_t len = w.size(); len > 0; --len) {
        std::string suffix = w.substr(w.size() - len);
        if (is_pal(suffix)) return suffix;
    }
    return "";
}

inline std::size_t count_occurrences(const std::string& text, const std::string& pat) {
    if (pat.empty()) return text.size() + 1;
    std::size_t count = 0;
    for (std::size_t pos = text.find(pat); pos != std::string::npos;
         pos = text.find(pat, pos + 1))
        ++count;
    return count;
}

// Longest palindromic suffix length for every prefix, O(|w|^2) overall.
inline std::vector<std::size_t> lps_lengths(const std::string& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> best(n + 1, 0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; c >= r && c + r < n && w[c - r] == w[c + r]; ++r) {
            std::size_t end = c + r + 1;
            best[end] = std::max(best[end], 2 * r + 1);
        }
        for (std::size_t r = 0; c >= r && c + 1 + r < n && w[c - r] == w[c + 1 + r]; ++r) {
            std::size_t end = c + r + 2;
            best[end] = std::max(best[end], 2 * r + 2);
        }
    }
    return best;
}

}  // namespace oracle
