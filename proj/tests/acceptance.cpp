// Acceptance suite: one line per criterion, exact integer tolerances.
// Exit code is the number of failed criteria.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pal/br.hpp"
#include "pal/gn_graph.hpp"

using namespace pal;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << (pass ? "PASS" : "FAIL") << "] " << name
              << "  (" << std::fixed << std::setprecision(2) << seconds << "s)";
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << "\n";
    if (!pass) ++g_failed;
}

Word literal(const std::string& text) { return Word::from_text(text); }

WordSource fibonacci_source() {
    Alphabet ab = Alphabet::single_chars("ab");
    return WordSource(MorphicSource{Morphism::parse(ab, "a:ab, b:a"), 0});
}

WordSource thue_morse_source() {
    Alphabet ab = Alphabet::single_chars("ab");
    return WordSource(MorphicSource{Morphism::parse(ab, "a:ab, b:ba"), 0});
}

Word fibonacci(std::size_t len) { return generate(fibonacci_source(), len).prefix(len); }
Word thue_morse(std::size_t len) { return generate(thue_morse_source(), len).prefix(len); }

// The shared corpus for criteria 1-3: every binary word of length <= 14
// plus 1000 seeded random ternary words of length <= 200.
std::vector<std::string> corpus() {
    std::vector<std::string> words;
    for (std::size_t len = 0; len <= 14; ++len)
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            std::string text;
            for (std::size_t i = 0; i < len; ++i) text += (mask >> i & 1) ? 'b' : 'a';
            words.push_back(std::move(text));
        }
    std::mt19937_64 rng(0xBEEF);
    for (int i = 0; i < 1000; ++i) {
        std::size_t len = rng() % 201;
        std::string text;
        for (std::size_t j = 0; j < len; ++j) text += static_cast<char>('a' + rng() % 3);
        words.push_back(std::move(text));
    }
    return words;
}

struct CorpusOutcome {
    std::size_t identity_failures = 0;
    std::size_t palindrome_failures = 0;
    std::size_t defect_failures = 0;
    std::size_t words = 0;
};

CorpusOutcome run_corpus() {
    CorpusOutcome out;
    for (const auto& text : corpus()) {
        ++out.words;
        Word w = literal(text);

        // Criterion 1: residual of the finite identity is exactly zero.
        auto identity = verify_finite_identity(w);
        if (identity.residual != 0) ++out.identity_failures;

        // Criterion 2: eertree count equals the center-expansion count and
        // respects the |w|+1 bound (empty palindrome included).
        Eertree tree(w);
        auto brute = oracle::palindromic_factors(text);
        if (tree.palindrome_count() != brute.size()) ++out.palindrome_failures;
        if (tree.palindrome_count() + 1 > text.size() + 1) ++out.palindrome_failures;

        // Criterion 3: increments in {0,1}, zero exactly on unioccurrent
        // lps steps, cross-checked against the palindrome-count deficit.
        auto profile = defect_profile(w);
        auto first_end = oracle::palindrome_first_end(text);
        auto lps_len = oracle::lps_lengths(text);
        std::vector<long long> palcount(text.size() + 1, 0);
        for (const auto& [p, end] : first_end) palcount[end] += 1;
        long long running = 0;
        bool ok = true;
        for (std::size_t i = 1; i <= text.size(); ++i) {
            running += palcount[i];
            auto delta = profile.increments[i - 1];
            if (delta != 0 && delta != 1) ok = false;
            std::string suffix = text.substr(i - lps_len[i], lps_len[i]);
            bool unioccurrent = oracle::count_occurrences(text.substr(0, i), suffix) == 1;
            if ((delta == 0) != unioccurrent) ok = false;
            long long deficit = static_cast<long long>(i + 1) - (running + 1);
            if (profile.prefix_defects[i] != deficit) ok = false;
        }
        if (!ok) ++out.defect_failures;
    }
    return out;
}

}  // namespace

int main() {
    std::cout << "acceptance: exact-arithmetic checks, tolerances pinned to 0\n";

    // Criteria 1-3 share the corpus pass.
    auto t0 = Clock::now();
    auto corpus_result = run_corpus();
    double corpus_secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(1, "finite identity on 32767 binary + 1000 ternary words",
           corpus_result.identity_failures == 0 && corpus_result.words == 33767 &&
               corpus_secs < 60.0,
           corpus_secs, std::to_string(corpus_result.identity_failures) + " nonzero residuals");
    report(2, "palindrome bound and eertree/brute-force equivalence",
           corpus_result.palindrome_failures == 0, corpus_secs,
           std::to_string(corpus_result.palindrome_failures) + " mismatches");
    report(3, "defect increments match lps unioccurrence and the deficit formula",
           corpus_result.defect_failures == 0, corpus_secs,
           std::to_string(corpus_result.defect_failures) + " mismatches");

    // Criterion 4: zero-defect regression on the Fibonacci prefix.
    t0 = Clock::now();
    {
        Analysis a = analyze(fibonacci(10000), 64);
        bool pass = a.defect.defect == 0 && a.profile.trusted_n >= 12;
        for (int n = 0; n <= a.profile.trusted_n; ++n)
            if (a.profile.T[static_cast<std::size_t>(n)] != 0) pass = false;
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report(4, "fibonacci 10000: D = 0 and T = 0 on the trusted range",
               pass && secs < 10.0, secs,
               "D=" + std::to_string(a.defect.defect) +
                   " trusted_n=" + std::to_string(a.profile.trusted_n));
    }

    // Criterion 5: the graph equivalence at every trusted n <= 12.
    t0 = Clock::now();
    {
        std::size_t mismatches = 0, checked = 0;
        for (int which = 0; which < 2; ++which) {
            Word w = which == 0 ? fibonacci(4096) : thue_morse(8192);
            Analysis a = analyze(std::move(w), 16);
            int hi = std::min(a.profile.trusted_n, 12);
            for (int n = 0; n <= hi; ++n) {
                auto g = build_gn(a.index, static_cast<std::size_t>(n));
                auto r = check_gn(g, a.profile.T[static_cast<std::size_t>(n)]);
                if (r.skipped) continue;
                ++checked;
                if (!r.equivalence_pass) ++mismatches;
            }
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report(5, "graph characterization equivalence on fibonacci and thue-morse",
               mismatches == 0 && checked >= 24, secs,
               std::to_string(checked) + " lengths checked, " + std::to_string(mismatches) +
                   " mismatches");
    }

    // Criterion 6: T(n) >= 0 on trusted ranges of reversal-closed words.
    t0 = Clock::now();
    {
        std::size_t violations = 0, checked_words = 0;
        std::vector<Analysis> analyses;
        analyses.push_back(analyze(fibonacci(8192), 48));
        analyses.push_back(analyze(thue_morse(8192), 48));
        Alphabet ab = Alphabet::single_chars("ab");
        Alphabet abc = Alphabet::single_chars("abc");
        for (const char* block : {"aabaa", "aba", "abba", "aabbaa"}) {
            WordSource src(PeriodicSource{Word::from_text(block, ab)});
            analyses.push_back(analyze(generate(src, 4096), 48));
        }
        WordSource tern(PeriodicSource{Word::from_text("abcba", abc)});
        analyses.push_back(analyze(generate(tern, 4096), 48));
        for (const auto& a : analyses) {
            auto r = check_t_nonnegative(a);
            if (!r.applicable) continue;
            ++checked_words;
            violations += r.violations.size();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report(6, "no negative T(n) on trusted ranges of reversal-closed words",
               violations == 0 && checked_words == 7, secs,
               std::to_string(checked_words) + " words, " + std::to_string(violations) +
                   " violations");
    }

    // Criterion 7: the counting lemmas, >= 20 combinations per word per lemma.
    t0 = Clock::now();
    {
        bool pass = true;
        std::string detail;
        Alphabet ab = Alphabet::single_chars("ab");
        std::vector<Analysis> words;
        words.push_back(analyze(fibonacci(8192), 48));
        WordSource periodic(PeriodicSource{Word::from_text("aabaa", ab)});
        words.push_back(analyze(generate(periodic, 4096), 48));
        for (const auto& a : words) {
            if (!a.estimate.stabilized) { pass = false; continue; }
            std::size_t s = a.estimate.stabilization_index;
            std::size_t lemma1_ok = 0, lemma1_run = 0;
            for (std::size_t q = s; q < s + 10; ++q) {
                for (std::size_t h = q + 1; h <= q + 3; ++h) {
                    auto r = check_lemma_counting_1(a, q, h);
                    if (!r.applicable) continue;
                    ++lemma1_run;
                    if (r.pass) ++lemma1_ok;
                }
            }
            std::size_t lemma2_ok = 0, lemma2_run = 0;
            for (std::size_t q = s; q < s + 5; ++q) {
                for (std::size_t dp : {1, 10, 100, 1000}) {
                    auto r = check_lemma_counting_2(a, q, q + dp);
                    if (!r.applicable) continue;
                    ++lemma2_run;
                    if (r.pass) ++lemma2_ok;
                }
            }
            if (lemma1_run < 20 || lemma1_ok != lemma1_run) pass = false;
            if (lemma2_run < 20 || lemma2_ok != lemma2_run) pass = false;
            detail += " [" + std::to_string(lemma1_ok) + "/" + std::to_string(lemma1_run) +
                      " l1, " + std::to_string(lemma2_ok) + "/" + std::to_string(lemma2_run) +
                      " l2]";
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report(7, "counting lemmas exact on fibonacci and periodic aabaa", pass, secs, detail);
    }

    // Criterion 8: harness verdicts.
    t0 = Clock::now();
    {
        bool pass = true;
        std::string detail;
        Alphabet ab = Alphabet::single_chars("ab");
        Alphabet abc = Alphabet::single_chars("abc");
        std::vector<WordSource> sources;
        sources.push_back(WordSource(PeriodicSource{Word::from_text("aabaa", ab)}));
        sources.push_back(WordSource(PeriodicSource{Word::from_text("aba", ab)}));
        sources.push_back(WordSource(PeriodicSource{Word::from_text("abba", ab)}));
        sources.push_back(WordSource(PeriodicSource{Word::from_text("aabbaa", ab)}));
        sources.push_back(WordSource(PeriodicSource{Word::from_text("abcba", abc)}));
        sources.push_back(fibonacci_source());
        std::vector<std::size_t> schedule{512, 1024, 2048, 4096};
        for (const auto& src : sources) {
            auto r = analyze_infinite(src, schedule, 32);
            if (r.verdict != HarnessVerdict::equality_holds_on_evidence || r.lhs != r.rhs) {
                pass = false;
                detail += " [" + src.describe() + ": " + std::string(to_string(r.verdict)) + "]";
            }
        }
        WordSource random_src(RandomSource{ab, 20240131});
        auto rnd = analyze_infinite(random_src, schedule, 16);
        if (rnd.verdict == HarnessVerdict::equality_holds_on_evidence) {
            pass = false;
            detail += " [random reached equality]";
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report(8, "harness: 5 periodic blocks + fibonacci equal, random does not",
               pass && secs < 120.0, secs, detail);
    }

    // Criterion 9: occurrence alternation on sampled fibonacci factors.
    t0 = Clock::now();
    {
        Word w = fibonacci(10000);
        auto idx = FactorIndex::build(w, 21);
        std::mt19937_64 rng(0xA17E);
        std::size_t tested = 0, violations = 0, attempts = 0;
        while (tested < 100 && attempts < 100000) {
            ++attempts;
            std::size_t len = 2 + rng() % 19;  // lengths 2..20
            std::size_t pos = rng() % (w.size() - len + 1);
            auto content = w.bytes().substr(pos, len);
            if (is_palindrome(content)) continue;
            Word x(w.alphabet(), std::vector<std::uint8_t>(content.begin(), content.end()));
            auto r = alternation_check(idx, x);
            ++tested;
            if (!r.alternating) ++violations;
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        report(9, "alternation of x and mirror(x) for 100 sampled fibonacci factors",
               tested == 100 && violations == 0, secs,
               std::to_string(tested) + " sampled, " + std::to_string(violations) +
                   " violations");
    }

    std::cout << (g_failed == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(g_failed) + " criteria failed\n");
    return g_failed;
}
