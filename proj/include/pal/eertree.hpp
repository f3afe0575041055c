#pragma once

#include <cstdint>
#include <vector>

#include "pal/word.hpp"

namespace pal {

/// Incremental palindromic tree: one node per distinct nonempty
/// palindromic factor, plus the two conventional roots of length -1 and 0.
/// After consuming the length-i prefix, node ids 2..total_nodes()-1 are
/// exactly the distinct nonempty palindromic factors seen so far.
class Eertree {
public:
    static constexpr std::int32_t kRootNeg = 0;   // length -1
    static constexpr std::int32_t kRootZero = 1;  // length 0

    explicit Eertree(Word w);

    const Word& word() const noexcept { return word_; }

    /// Distinct nonempty palindromic factors.
    std::size_t palindrome_count() const noexcept { return lengths_.size() - 2; }
    std::size_t total_nodes() const noexcept { return lengths_.size(); }

    std::int32_t node_length(std::int32_t id) const { return lengths_[id]; }
    std::int32_t suffix_link(std::int32_t id) const { return links_[id]; }
    /// Prefix length at which the node was created (end of first occurrence).
    std::size_t first_end(std::int32_t id) const { return first_end_[id]; }

    /// Longest palindromic suffix of the length-i prefix, as a node id.
    std::int32_t lps_node(std::size_t prefix_len) const { return lps_node_[prefix_len]; }
    std::size_t lps_length(std::size_t prefix_len) const {
        auto l = lengths_[lps_node_[prefix_len]];
        return l < 0 ? 0 : static_cast<std::size_t>(l);
    }

    /// True iff consuming symbol prefix_len created a node, i.e. the lps of
    /// that prefix is unioccurrent in it.
    bool new_palindrome_at(std::size_t prefix_len) const { return new_flag_[prefix_len]; }

    /// P(n) for n = 0..n_max; P(0) = 1 counts the empty word.
    std::vector<long long> palindromic_complexity(std::size_t n_max) const;

private:
    Word word_;
    std::vector<std::int32_t> lengths_;
    std::vector<std::int32_t> links_;
    std::vector<std::uint32_t> first_end_;
    std::vector<std::int32_t> next_;      // total_nodes * sigma transition table
    std::vector<std::int32_t> lps_node_;  // per prefix length 0..|w|
    std::vector<std::uint8_t> new_flag_;  // per prefix length 0..|w|

    std::size_t sigma_ = 0;
    std::int32_t transition(std::int32_t node, std::uint8_t c) const {
        return next_[static_cast<std::size_t>(node) * sigma_ + c];
    }
    std::int32_t find_extension(std::int32_t node, std::size_t pos) const;
};

std::vector<long long> palindromic_complexity_profile(const Word& w, std::size_t n_max);

/// Longest palindromic suffix of the length-i prefix (empty for i = 0).
Word lps(const Word& w, std::size_t prefix_len);

struct LpsInfo {
    Word suffix;
    std::size_t occurrences_in_prefix;  // count within the length-i prefix
};
LpsInfo lps_info(const Word& w, std::size_t prefix_len);

struct DefectProfile {
    std::vector<std::uint8_t> increments;   // delta per position, size |w|
    std::vector<long long> prefix_defects;  // D of each prefix, size |w|+1
    long long defect = 0;                   // D(w)
};

/// Per-position defect increments via lps unioccurrence, cross-checked
/// against the palindrome-count deficit (|w|+1) - #palindromes.
DefectProfile defect_profile(const Word& w);

struct DefectEstimate {
    long long candidate = 0;
    std::size_t stabilization_index = 0;  // first prefix length reaching the candidate
    bool stabilized = false;
    std::size_t window = 0;  // suffix window that had to be increment-free
};

/// Declares the defect stabilized when no increment occurs over the final
/// ceil(|w|/2) positions; the window is reported alongside the verdict.
DefectEstimate infinite_defect_estimate(const std::vector<long long>& prefix_defects);

}  // namespace pal
