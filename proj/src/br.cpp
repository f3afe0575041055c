#include "pal/br.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pal {

namespace {

// C or P values for n = 0..n_cap+1, zero past |w|.
std::vector<long long> padded(const std::vector<long long>& full, std::size_t n_cap) {
    std::vector<long long> out(n_cap + 2, 0);
    for (std::size_t n = 0; n < out.size() && n < full.size(); ++n) out[n] = full[n];
    return out;
}

ComplexityProfile build_profile(const Word& w, const Eertree& tree, std::size_t n_max,
                                std::string meta) {
    ComplexityProfile profile;
    profile.word_meta = std::move(meta);
    profile.length = w.size();
    profile.n_max = n_max;
    profile.C = padded(full_complexity_profile(w), n_max);
    profile.P = padded(tree.palindromic_complexity(std::min(n_max + 1, w.size())), n_max);
    profile.T = t_profile(profile.C, profile.P);

    profile.closed.assign(n_max + 2, true);
    auto closure = reversal_closure_profile(w, std::min(n_max + 1, w.size()));
    for (std::size_t n = 0; n < closure.size(); ++n) profile.closed[n] = closure[n];

    Word half = w.prefix((w.size() + 1) / 2);
    auto c_half = padded(full_complexity_profile(half), n_max);
    auto p_half = padded(palindromic_complexity_profile(half, std::min(n_max + 1, half.size())), n_max);

    profile.trusted_n = -1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::size_t m = n + 1;
        if (profile.C[m] != c_half[m] || profile.P[m] != p_half[m] || !profile.closed[m]) break;
        if (n == 0 && (profile.C[0] != c_half[0] || profile.P[0] != p_half[0] || !profile.closed[0]))
            break;
        profile.trusted_n = static_cast<int>(n);
    }
    return profile;
}

bool aperiodic_evidence(const ComplexityProfile& profile) {
    if (profile.trusted_n < 0) return false;
    for (int n = 0; n <= profile.trusted_n; ++n)
        if (profile.C[static_cast<std::size_t>(n)] < n + 1) return false;
    return true;
}

// Consecutive merged occurrences of {x, mirror(x)} that bound a
// non-palindromic factor, per length n. Returns violations found.
std::size_t scan_prop41_length(const Analysis& a, std::size_t n,
                               std::vector<Prop41Report::Violation>* out,
                               std::size_t* pairs) {
    std::size_t violations = 0;
    const std::string_view b = a.word.bytes();
    for (const auto& g : a.index.factors(n)) {
        std::string mirrored = mirror_bytes(g.content);
        if (g.content > std::string_view(mirrored)) continue;  // one scan per reversal class
        std::vector<std::uint32_t> merged(g.occurrences.begin(), g.occurrences.end());
        if (g.content != std::string_view(mirrored)) {
            if (const auto* gm = a.index.find(mirrored))
                merged.insert(merged.end(), gm->occurrences.begin(), gm->occurrences.end());
            std::sort(merged.begin(), merged.end());
        }
        for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
            ++*pairs;
            auto candidate = b.substr(merged[i], merged[i + 1] - merged[i] + n);
            if (!is_palindrome(candidate)) {
                ++violations;
                if (out && out->size() < 32)
                    out->push_back({a.word.alphabet().render(g.content),
                                    a.word.alphabet().render(candidate)});
            }
        }
    }
    return violations;
}

}  // namespace

std::vector<long long> t_profile(const std::vector<long long>& C,
                                 const std::vector<long long>& P) {
    if (C.size() != P.size()) throw std::invalid_argument("C and P profiles differ in length");
    if (C.size() < 2) throw std::invalid_argument("profiles must cover n = 0 and n = 1");
    std::vector<long long> t(C.size() - 1);
    for (std::size_t n = 0; n + 1 < C.size(); ++n)
        t[n] = C[n + 1] - C[n] + 2 - P[n + 1] - P[n];
    return t;
}

std::size_t default_n_max(const Word& w) { return std::min<std::size_t>(w.size(), 64); }

Analysis analyze(Word w, std::size_t n_max, std::string meta) {
    if (meta.empty()) meta = "word of length " + std::to_string(w.size());
    Eertree tree(w);
    DefectProfile defect = defect_profile(w);
    DefectEstimate estimate = infinite_defect_estimate(defect.prefix_defects);
    ComplexityProfile profile = build_profile(w, tree, n_max, meta);
    FactorIndex index = FactorIndex::build(w, std::min(n_max + 1, w.size()));
    return Analysis{std::move(w), std::move(meta), n_max,    std::move(index),
                    std::move(tree), std::move(defect), estimate, std::move(profile)};
}

IdentityReport verify_finite_identity(const Word& w) {
    IdentityReport report;
    report.word_meta = "word of length " + std::to_string(w.size());
    auto C = full_complexity_profile(w);
    C.push_back(0);  // no factor of length |w|+1
    auto P = palindromic_complexity_profile(w, w.size());
    P.push_back(0);
    auto T = t_profile(C, P);
    long long sum = 0;
    for (auto t : T) sum += t;
    report.rhs = sum;
    report.lhs = 2 * defect_profile(w).defect;
    report.residual = report.lhs - report.rhs;
    report.pass = report.residual == 0;
    return report;
}

NonnegReport check_t_nonnegative(const Analysis& a) {
    NonnegReport report;
    if (a.profile.trusted_n < 0) {
        report.reason = "no trusted range (profiles unstable or closure fails)";
        return report;
    }
    report.applicable = true;
    report.checked_up_to = a.profile.trusted_n;
    for (int n = 0; n <= a.profile.trusted_n; ++n) {
        long long t = a.profile.T[static_cast<std::size_t>(n)];
        if (t < 0) report.violations.emplace_back(n, t);
    }
    report.pass = report.violations.empty();
    return report;
}

CountingLemmaReport check_lemma_counting_1(const Analysis& a, std::size_t q_len) {
    return check_lemma_counting_1(a, q_len, q_len + 1);
}

CountingLemmaReport check_lemma_counting_1(const Analysis& a, std::size_t q_len, std::size_t H) {
    CountingLemmaReport report;
    report.q_len = q_len;
    report.H = H;
    if (!a.estimate.stabilized) {
        report.reason = "defect not stabilized on evidence";
        return report;
    }
    if (q_len > a.word.size() || a.defect.prefix_defects[q_len] != a.estimate.candidate) {
        report.reason = "prefix defect differs from the stabilized value";
        return report;
    }
    if (H <= q_len) {
        report.reason = "H must exceed the prefix length";
        return report;
    }
    if (a.profile.trusted_n < 0 || H > static_cast<std::size_t>(a.profile.trusted_n) + 1) {
        report.reason = "H outside the trusted range";
        return report;
    }
    report.applicable = true;
    report.lhs = a.profile.C[H] - a.profile.P[H];
    long long missing = 0;
    for (std::size_t id = 2; id < a.tree.total_nodes(); ++id) {
        auto node = static_cast<std::int32_t>(id);
        if (static_cast<std::size_t>(a.tree.node_length(node)) < H &&
            a.tree.first_end(node) > q_len)
            ++missing;
    }
    report.rhs = 2 * missing - 2 * static_cast<long long>(H - q_len - 1);
    report.pass = report.lhs == report.rhs;
    return report;
}

PrefixCountReport check_lemma_counting_2(const Analysis& a, std::size_t q_len, std::size_t p_len) {
    PrefixCountReport report;
    report.q_len = q_len;
    report.p_len = p_len;
    if (!a.estimate.stabilized) {
        report.reason = "defect not stabilized on evidence";
        return report;
    }
    if (p_len <= q_len || p_len > a.word.size()) {
        report.reason = "need q_len < p_len <= |w|";
        return report;
    }
    if (a.defect.prefix_defects[q_len] != a.estimate.candidate ||
        a.defect.prefix_defects[p_len] != a.estimate.candidate) {
        report.reason = "prefix defect differs from the stabilized value";
        return report;
    }
    report.applicable = true;
    long long missing_short = 0, longer = 0;
    for (std::size_t id = 2; id < a.tree.total_nodes(); ++id) {
        auto node = static_cast<std::int32_t>(id);
        std::size_t len = static_cast<std::size_t>(a.tree.node_length(node));
        std::size_t end = a.tree.first_end(node);
        if (end > p_len) continue;  // not a factor of the prefix p
        if (len <= q_len && end > q_len) ++missing_short;
        if (len > q_len) ++longer;
    }
    report.lhs = missing_short + longer;
    report.rhs = static_cast<long long>(p_len - q_len);
    report.pass = report.lhs == report.rhs;
    return report;
}

Prop41Report check_characterization_prop41(const Analysis& a, std::size_t N, std::size_t n_hi) {
    Prop41Report report;
    report.N = N;
    report.n_hi = n_hi;
    if (N < 1 || n_hi < N) {
        report.reason = "need 1 <= N <= n_hi";
        return report;
    }
    if (!aperiodic_evidence(a.profile)) {
        report.reason = "no aperiodicity evidence (C(n) < n+1 on the trusted range)";
    } else if (a.profile.trusted_n < 0 || n_hi > static_cast<std::size_t>(a.profile.trusted_n)) {
        report.reason = "n_hi outside the trusted range";
    } else {
        report.applicable = true;
    }

    std::size_t depth = a.index.n_max();
    for (std::size_t n = N; n <= std::min(n_hi, depth); ++n)
        scan_prop41_length(a, n, &report.violations, &report.pairs_scanned);
    report.degenerate = report.pairs_scanned == 0;

    if (report.applicable) {
        report.t_zero_on_range = true;
        for (std::size_t n = N; n <= n_hi; ++n)
            if (a.profile.T[n] != 0) report.t_zero_on_range = false;
        report.equivalence_pass = report.violations.empty() == report.t_zero_on_range;
    }
    return report;
}

Lemma43Report check_lemma43_bridge(const Analysis& a) {
    Lemma43Report report;
    if (a.estimate.stabilized) {
        // Last defect increment position + 1; zero-defect words give H = 1.
        report.h_exists = true;
        report.H = a.estimate.stabilization_index + 1;
    }
    if (a.profile.trusted_n >= 1 && aperiodic_evidence(a.profile)) {
        report.n_side_applicable = true;
        std::size_t n_hi = std::min<std::size_t>(static_cast<std::size_t>(a.profile.trusted_n),
                                                 a.index.n_max());
        std::size_t pairs = 0;
        std::size_t first_clean = n_hi + 1;
        for (std::size_t n = n_hi; n >= 1; --n) {
            if (scan_prop41_length(a, n, nullptr, &pairs) > 0) break;
            first_clean = n;
        }
        if (first_clean <= n_hi) {
            report.n_exists = true;
            report.N = first_clean;
        }
    } else {
        report.reason = "no trusted aperiodic range for the return-factor side";
    }

    if (report.h_exists && report.n_exists) report.verdict = "both_exist";
    else if (!report.h_exists && report.n_side_applicable && !report.n_exists)
        report.verdict = "both_absent";
    else if (report.h_exists && !report.n_side_applicable)
        report.verdict = "h_only_evidence";
    else
        report.verdict = "mixed_evidence";
    return report;
}

std::string_view to_string(HarnessVerdict v) {
    switch (v) {
        case HarnessVerdict::equality_holds_on_evidence: return "equality_holds_on_evidence";
        case HarnessVerdict::defect_unbounded_evidence: return "defect_unbounded_evidence";
        case HarnessVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

StabilizationReport analyze_infinite(const WordSource& src, std::vector<std::size_t> schedule,
                                     std::size_t n_max) {
    if (schedule.size() < 2) throw std::invalid_argument("schedule needs at least two entries");
    for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
        if (schedule[i] >= schedule[i + 1])
            throw std::invalid_argument("schedule must be strictly increasing");

    StabilizationReport report;
    report.schedule = schedule;
    report.word_meta = src.describe();
    report.stabilization_rule =
        "defect declared stabilized when no increment occurs over the final ceil(len/2) positions";

    Word base = generate(src, schedule.back());
    for (auto len : schedule) {
        Analysis a = analyze(base.prefix(len), n_max, report.word_meta);
        PrefixSnapshot snap;
        snap.length = len;
        snap.defect = a.defect.defect;
        snap.trusted_n = a.profile.trusted_n;
        for (int n = 0; n <= a.profile.trusted_n; ++n) {
            snap.T.push_back(a.profile.T[static_cast<std::size_t>(n)]);
            snap.sum_T += snap.T.back();
        }
        snap.stabilized = a.estimate.stabilized;
        snap.stabilization_index = a.estimate.stabilization_index;
        report.prefixes.push_back(std::move(snap));
    }

    const PrefixSnapshot& last = report.prefixes.back();
    report.thresholds_valid = last.stabilized && last.trusted_n >= 0;
    if (report.thresholds_valid) {
        report.L_candidate = static_cast<long long>(last.stabilization_index);
        report.M_candidate = -1;
        for (std::size_t n = 0; n < last.T.size(); ++n)
            if (last.T[n] != 0) report.M_candidate = static_cast<long long>(n);
        report.H_candidate = std::max(report.L_candidate, report.M_candidate) + 1;
    }
    report.lhs = 2 * last.defect;
    report.rhs = last.sum_T;

    bool strictly_growing = true;
    for (std::size_t i = 0; i + 1 < report.prefixes.size(); ++i)
        if (report.prefixes[i].defect >= report.prefixes[i + 1].defect) strictly_growing = false;

    if (report.thresholds_valid && report.M_candidate < last.trusted_n &&
        report.lhs == report.rhs) {
        report.verdict = HarnessVerdict::equality_holds_on_evidence;
    } else if (!last.stabilized && strictly_growing) {
        report.verdict = HarnessVerdict::defect_unbounded_evidence;
    } else {
        report.verdict = HarnessVerdict::inconclusive;
    }
    return report;
}

}  // namespace pal
