#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pal/eertree.hpp"
#include "pal/factors.hpp"
#include "pal/word.hpp"

namespace pal {

/// C(n), P(n), T(n) for a finite prefix, with a doubling-stability trusted
/// range. C and P are stored for n = 0..n_max+1 so that T covers 0..n_max;
/// entries past |w| are zero. A value of n is trusted when the profiles of
/// the half prefix and full prefix agree for every m <= n+1 and the
/// language is closed under reversal up to n+1.
struct ComplexityProfile {
    std::string word_meta;
    std::size_t length = 0;  // |w|
    std::size_t n_max = 0;
    std::vector<long long> C;    // size n_max+2
    std::vector<long long> P;    // size n_max+2
    std::vector<long long> T;    // size n_max+1
    std::vector<bool> closed;    // size n_max+2
    int trusted_n = -1;
};

/// T(n) = C(n+1) - C(n) + 2 - P(n+1) - P(n) for n = 0..|C|-2.
std::vector<long long> t_profile(const std::vector<long long>& C,
                                 const std::vector<long long>& P);

/// Everything the checkers need about one finite word, built once.
struct Analysis {
    Word word;
    std::string meta;
    std::size_t n_max = 0;
    FactorIndex index;  // depth min(n_max+1, |w|)
    Eertree tree;
    DefectProfile defect;
    DefectEstimate estimate;
    ComplexityProfile profile;
};

Analysis analyze(Word w, std::size_t n_max, std::string meta = {});

/// min(|w|, 64) unless overridden.
std::size_t default_n_max(const Word& w);

struct IdentityReport {
    std::string word_meta;
    long long lhs = 0;       // 2 D(w)
    long long rhs = 0;       // sum of T_w(n), n = 0..|w|
    long long residual = 0;  // lhs - rhs; nonzero would mean an implementation bug
    bool pass = false;
};

/// The finite identity 2 D(w) = sum_{n=0}^{|w|} T_w(n); holds for every
/// finite word with no closure assumption.
IdentityReport verify_finite_identity(const Word& w);

struct NonnegReport {
    bool applicable = false;
    std::string reason;
    int checked_up_to = -1;  // trusted_n
    std::vector<std::pair<int, long long>> violations;  // (n, T(n))
    bool pass = false;
};

/// T(n) >= 0 on the trusted range of a reversal-closed word.
NonnegReport check_t_nonnegative(const Analysis& a);

struct CountingLemmaReport {
    bool applicable = false;
    std::string reason;
    std::size_t q_len = 0;
    std::size_t H = 0;
    long long lhs = 0;  // C(H) - P(H)
    long long rhs = 0;  // 2 #{palindromes shorter than H missing from q} - 2(H - |q| - 1)
    bool pass = false;
};

/// C(H) - P(H) against twice the count of palindromes shorter than H that
/// are missing from the prefix q; H = q_len+1 is the plain form, larger H
/// uses the corrected general form.
CountingLemmaReport check_lemma_counting_1(const Analysis& a, std::size_t q_len);
CountingLemmaReport check_lemma_counting_1(const Analysis& a, std::size_t q_len, std::size_t H);

struct PrefixCountReport {
    bool applicable = false;
    std::string reason;
    std::size_t q_len = 0;
    std::size_t p_len = 0;
    long long lhs = 0;  // missing short palindromes + sum of P_p(n) over n > |q|
    long long rhs = 0;  // |p| - |q|
    bool pass = false;
};

PrefixCountReport check_lemma_counting_2(const Analysis& a, std::size_t q_len, std::size_t p_len);

struct Prop41Report {
    bool applicable = false;
    std::string reason;
    bool degenerate = false;
    std::size_t N = 0;
    std::size_t n_hi = 0;
    struct Violation {
        std::string factor;
        std::string witness;
    };
    std::vector<Violation> violations;
    std::size_t pairs_scanned = 0;
    bool t_zero_on_range = false;
    bool equivalence_pass = false;  // meaningful only when applicable
};

/// For every factor x with N <= |x| <= n_hi, each factor that starts and
/// ends in x or mirror(x) with no interior occurrence of either must be a
/// palindrome. The scan always runs; the applicable flag records whether
/// the aperiodicity/closure evidence needed to interpret it holds.
Prop41Report check_characterization_prop41(const Analysis& a, std::size_t N, std::size_t n_hi);

struct Lemma43Report {
    bool h_exists = false;
    std::size_t H = 0;  // smallest prefix length past which every lps is unioccurrent
    bool n_side_applicable = false;
    std::string reason;
    bool n_exists = false;
    std::size_t N = 0;  // smallest N with a clean prop-4.1 scan up to the trusted bound
    std::string verdict;  // both_exist | both_absent | mixed_evidence | h_only_evidence
};

/// Desk-scale comparison of the two finiteness characterizations: the lps
/// unioccurrence threshold versus the palindromic return-factor threshold.
Lemma43Report check_lemma43_bridge(const Analysis& a);

enum class HarnessVerdict {
    equality_holds_on_evidence,
    defect_unbounded_evidence,
    inconclusive,
};
std::string_view to_string(HarnessVerdict v);

struct PrefixSnapshot {
    std::size_t length = 0;
    long long defect = 0;
    int trusted_n = -1;
    std::vector<long long> T;  // trusted slice, n = 0..trusted_n
    long long sum_T = 0;
    bool stabilized = false;
    std::size_t stabilization_index = 0;
};

struct StabilizationReport {
    std::string word_meta;
    std::vector<std::size_t> schedule;
    std::vector<PrefixSnapshot> prefixes;
    bool thresholds_valid = false;
    long long L_candidate = 0;  // defect stabilization index
    long long M_candidate = -1; // last trusted n with T(n) != 0; -1 when T vanishes
    long long H_candidate = 0;  // max(L, M) + 1
    long long lhs = 0;          // 2 D at the largest prefix
    long long rhs = 0;          // sum of trusted T at the largest prefix
    HarnessVerdict verdict = HarnessVerdict::inconclusive;
    std::string stabilization_rule;
};

/// Runs the per-prefix evolution of D and the trusted T sum over a
/// strictly increasing schedule and reports an evidence-only verdict.
StabilizationReport analyze_infinite(const WordSource& src, std::vector<std::size_t> schedule,
                                     std::size_t n_max);

}  // namespace pal
