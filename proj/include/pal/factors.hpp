#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pal/word.hpp"

namespace pal {

struct FactorGroup {
    std::string_view content;                // view into the indexed word's symbols
    std::vector<std::uint32_t> occurrences;  // sorted start positions
};

/// Per-length sets of distinct factors with full occurrence lists, for
/// every length up to n_max. Groups are sorted lexicographically per
/// length (alphabet order). Move-only: groups view the owned word buffer.
class FactorIndex {
public:
    static FactorIndex build(Word w, std::size_t n_max);

    FactorIndex(FactorIndex&&) = default;
    FactorIndex& operator=(FactorIndex&&) = default;
    FactorIndex(const FactorIndex&) = delete;
    FactorIndex& operator=(const FactorIndex&) = delete;

    const Word& word() const noexcept { return word_; }
    std::size_t n_max() const noexcept { return n_max_; }

    std::span<const FactorGroup> factors(std::size_t n) const;
    std::size_t distinct(std::size_t n) const { return factors(n).size(); }
    const FactorGroup* find(std::string_view content) const;

private:
    FactorIndex(Word w, std::size_t n_max) : word_(std::move(w)), n_max_(n_max) {}
    Word word_;
    std::size_t n_max_;
    std::vector<std::vector<FactorGroup>> by_length_;
    std::vector<std::unordered_map<std::string_view, std::uint32_t>> lookup_;
};

/// C(n) for n = 0..n_max of the index.
std::vector<long long> complexity_profile(const FactorIndex& idx);

/// C(n) for every n = 0..|w|, via suffix array + LCP. Cross-checked in
/// tests against the per-length index; used where the full range matters.
std::vector<long long> full_complexity_profile(const Word& w);

struct SpecialFactorReport {
    std::size_t n = 0;
    std::vector<std::string_view> right_special;  // sorted lexicographically
    std::vector<std::string_view> left_special;
};

/// Factors of length n with at least two right (resp. left) extensions,
/// counted inside the indexed word only.
SpecialFactorReport special_factors(const FactorIndex& idx, std::size_t n);

struct ReturnWordsResult {
    bool evidence = false;                // false when x occurs fewer than twice
    std::vector<std::string_view> words;  // distinct complete return words, sorted
};

/// Factors with prefix x, suffix x and exactly two occurrences of x,
/// from consecutive (possibly overlapping) occurrence pairs.
ReturnWordsResult complete_return_words(const FactorIndex& idx, const Word& x);

struct SimplePath {
    std::string_view path;
    std::string_view start_factor;
    std::string_view end_factor;
};

struct SimplePathsResult {
    bool degenerate = false;  // no special factors of length n
    std::vector<SimplePath> paths;  // distinct, in first-occurrence order
    std::size_t truncated = 0;      // unfinished tail segment at the prefix end
};

/// Factors of length >= n+1 whose only special length-n factors are their
/// length-n prefix and suffix (both special).
SimplePathsResult n_simple_paths(const FactorIndex& idx, std::size_t n);

struct AlternationResult {
    bool alternating = false;
    bool vacuous = false;        // x palindromic
    bool mirror_present = false;
};

/// Merges the occurrence lists of x and mirror(x) by position and checks
/// that the labels strictly alternate.
AlternationResult alternation_check(const FactorIndex& idx, const Word& x);

}  // namespace pal
