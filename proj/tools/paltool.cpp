// paltool: palindromic defect, complexity and Brlek-Reutenauer checks for
// finite words and prefixes of infinite words.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "pal/br.hpp"
#include "pal/gn_graph.hpp"

using nlohmann::json;
using namespace pal;

namespace {

constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitInapplicable = 4;

struct WordOptions {
    std::string spec_path;
    std::string text;
    bool text_set = false;
    std::size_t length = 0;
    bool length_set = false;
    std::size_t n_max = 0;  // 0 = auto
};

void add_word_options(CLI::App* cmd, WordOptions& opt, bool with_nmax = true) {
    auto* spec = cmd->add_option("--spec", opt.spec_path, "word-spec file (key = value lines)");
    auto* text = cmd->add_option("--text", opt.text, "inline literal word")
                     ->each([&](const std::string&) { opt.text_set = true; });
    text->excludes(spec);
    cmd->add_option("--len", opt.length, "prefix length to generate")
        ->each([&](const std::string&) { opt.length_set = true; });
    if (with_nmax) cmd->add_option("--nmax", opt.n_max, "profile depth (default min(len, 64))");
}

WordSource resolve_source(const WordOptions& opt) {
    if (opt.text_set) return WordSource(LiteralSource{Word::from_text(opt.text)});
    if (!opt.spec_path.empty()) return load_word_spec(opt.spec_path);
    throw CLI::ValidationError("word input", "one of --text or --spec is required");
}

Word resolve_word(const WordOptions& opt, const WordSource& src) {
    if (src.kind() == WordSource::Kind::literal)
        return generate(src, opt.length_set ? opt.length : 0);
    if (!opt.length_set)
        throw CLI::ValidationError("--len", "required for generated sources");
    return generate(src, opt.length).prefix(opt.length);
}

json word_meta_json(const WordSource& src, const Word& w) {
    json meta;
    meta["source"] = src.describe();
    meta["length"] = w.size();
    meta["alphabet"] = w.alphabet().letters();
    return meta;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << payload;
}

// ---------------------------------------------------------------------------
// profile

std::string profile_table(const Analysis& a) {
    std::ostringstream os;
    os << "word: " << a.meta << "\n";
    os << "length: " << a.word.size() << "  alphabet:";
    for (const auto& l : a.word.alphabet().letters()) os << ' ' << l;
    os << "\n";
    os << "defect D = " << a.defect.defect;
    if (a.estimate.stabilized)
        os << "  (stabilized at prefix " << a.estimate.stabilization_index
           << ", increment-free window " << a.estimate.window << ")";
    else
        os << "  (not stabilized)";
    os << "\n";
    os << "trusted n: " << a.profile.trusted_n << "\n";
    os << std::setw(6) << "n" << std::setw(12) << "C(n)" << std::setw(12) << "P(n)"
       << std::setw(12) << "T(n)" << std::setw(9) << "trusted" << std::setw(8) << "closed"
       << "\n";
    for (std::size_t n = 0; n <= a.n_max; ++n) {
        os << std::setw(6) << n << std::setw(12) << a.profile.C[n] << std::setw(12)
           << a.profile.P[n] << std::setw(12) << a.profile.T[n] << std::setw(9)
           << (static_cast<int>(n) <= a.profile.trusted_n ? "*" : "") << std::setw(8)
           << (a.profile.closed[n] ? "yes" : "no") << "\n";
    }
    return os.str();
}

std::string profile_csv(const Analysis& a) {
    std::ostringstream os;
    os << "n,C,P,T,trusted\n";
    for (std::size_t n = 0; n <= a.n_max; ++n)
        os << n << ',' << a.profile.C[n] << ',' << a.profile.P[n] << ',' << a.profile.T[n]
           << ',' << (static_cast<int>(n) <= a.profile.trusted_n ? 1 : 0) << "\n";
    return os.str();
}

json profile_json(const Analysis& a, const WordSource& src) {
    json rows = json::array();
    for (std::size_t n = 0; n <= a.n_max; ++n) {
        rows.push_back({{"n", n},
                        {"C", a.profile.C[n]},
                        {"P", a.profile.P[n]},
                        {"T", a.profile.T[n]},
                        {"trusted", static_cast<int>(n) <= a.profile.trusted_n},
                        {"closed", static_cast<bool>(a.profile.closed[n])}});
    }
    json results;
    results["n_max"] = a.n_max;
    results["defect"] = a.defect.defect;
    results["trusted_n"] = a.profile.trusted_n;
    results["rows"] = rows;
    results["stabilization"] = {{"stabilized", a.estimate.stabilized},
                                {"candidate", a.estimate.candidate},
                                {"index", a.estimate.stabilization_index},
                                {"window", a.estimate.window}};
    return {{"tool_version", kToolVersion},
            {"command", "profile"},
            {"word_meta", word_meta_json(src, a.word)},
            {"results", results},
            {"verdict", "ok"}};
}

// ---------------------------------------------------------------------------
// verify

struct CheckOutcome {
    std::string name;
    bool applicable = false;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    WordOptions word;
    std::vector<std::string> checks;
    std::string n_range;  // for gn / prop41, e.g. "1..10"
    std::optional<std::size_t> q_len;
    std::optional<std::size_t> p_len;
    std::optional<std::size_t> h_value;
    std::optional<std::size_t> big_n;
    std::string x_text;  // explicit factor for alternation
    std::size_t samples = 100;
    std::uint64_t sample_seed = 12345;
    std::string format = "table";
    std::string out_path;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, std::size_t fallback_hi) {
    if (text.empty()) return {1, std::max<std::size_t>(fallback_hi, 1)};
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (...) {
        throw CLI::ValidationError("--n", "expected N or LO..HI");
    }
}

CheckOutcome run_identity(const Analysis& a) {
    auto report = verify_finite_identity(a.word);
    std::ostringstream os;
    os << "lhs 2D = " << report.lhs << ", rhs sum T = " << report.rhs << ", residual "
       << report.residual;
    if (!report.pass) os << " (nonzero residual: implementation bug)";
    return {"identity", true, report.pass, os.str()};
}

CheckOutcome run_nonneg(const Analysis& a) {
    auto report = check_t_nonnegative(a);
    if (!report.applicable) return {"nonneg", false, false, report.reason};
    std::ostringstream os;
    os << "T(n) >= 0 for n <= " << report.checked_up_to;
    if (!report.violations.empty()) {
        os << "; violations:";
        for (auto [n, t] : report.violations) os << " T(" << n << ")=" << t;
    }
    return {"nonneg", true, report.pass, os.str()};
}

CheckOutcome run_lemma1(const Analysis& a, const VerifyOptions& opt) {
    std::size_t q = opt.q_len.value_or(a.estimate.stabilization_index);
    auto report = opt.h_value ? check_lemma_counting_1(a, q, *opt.h_value)
                              : check_lemma_counting_1(a, q);
    std::ostringstream os;
    os << "q = " << report.q_len << ", H = " << report.H;
    if (!report.applicable) {
        os << ": " << report.reason;
        return {"lemma1", false, false, os.str()};
    }
    os << ": C(H)-P(H) = " << report.lhs << ", 2#missing - correction = " << report.rhs;
    return {"lemma1", true, report.pass, os.str()};
}

CheckOutcome run_lemma2(const Analysis& a, const VerifyOptions& opt) {
    std::size_t q = opt.q_len.value_or(a.estimate.stabilization_index);
    std::size_t p = opt.p_len.value_or(std::min(a.word.size(), q + 50));
    auto report = check_lemma_counting_2(a, q, p);
    std::ostringstream os;
    os << "q = " << q << ", p = " << p;
    if (!report.applicable) {
        os << ": " << report.reason;
        return {"lemma2", false, false, os.str()};
    }
    os << ": lhs = " << report.lhs << ", |p|-|q| = " << report.rhs;
    return {"lemma2", true, report.pass, os.str()};
}

CheckOutcome run_prop41(const Analysis& a, const VerifyOptions& opt) {
    std::size_t hi_default =
        a.profile.trusted_n >= 1 ? static_cast<std::size_t>(a.profile.trusted_n) : 1;
    auto [lo, hi] = parse_range(opt.n_range, hi_default);
    std::size_t n_lo = opt.big_n.value_or(lo);
    auto report = check_characterization_prop41(a, n_lo, hi);
    std::ostringstream os;
    os << "N = " << report.N << ", n_hi = " << report.n_hi << ", pairs " << report.pairs_scanned
       << ", violations " << report.violations.size();
    for (const auto& v : report.violations)
        os << " [" << v.factor << " -> " << v.witness << "]";
    if (!report.applicable) {
        os << " (" << report.reason << ")";
        return {"prop41", false, false, os.str()};
    }
    os << (report.t_zero_on_range ? "; T vanishes on range" : "; T nonzero on range");
    return {"prop41", true, report.equivalence_pass, os.str()};
}

CheckOutcome run_lemma43(const Analysis& a) {
    auto report = check_lemma43_bridge(a);
    std::ostringstream os;
    os << "lps side H " << (report.h_exists ? std::to_string(report.H) : "absent")
       << ", return-factor side N "
       << (report.n_exists ? std::to_string(report.N)
                           : (report.n_side_applicable ? "absent" : "no evidence"))
       << ", verdict " << report.verdict;
    bool applicable = report.h_exists || report.n_side_applicable;
    bool pass = report.verdict != "mixed_evidence";
    return {"lemma43", applicable, pass, os.str()};
}

CheckOutcome run_gn(const Analysis& a, const VerifyOptions& opt) {
    std::size_t hi_default =
        a.profile.trusted_n >= 0 ? static_cast<std::size_t>(a.profile.trusted_n) : 0;
    auto [lo, hi] = parse_range(opt.n_range, std::min<std::size_t>(hi_default, 10));
    if (hi > a.index.n_max())
        throw CLI::ValidationError("--n", "range exceeds the index depth (raise --nmax)");
    std::ostringstream os;
    bool any_applicable = false;
    bool all_pass = true;
    for (std::size_t n = lo; n <= hi; ++n) {
        auto g = build_gn(a.index, n);
        auto report = check_gn(g, a.profile.T[n]);
        bool trusted = static_cast<int>(n) <= a.profile.trusted_n;
        if (report.skipped || !trusted) {
            os << " n=" << n << ":skipped";
            continue;
        }
        any_applicable = true;
        if (!report.equivalence_pass) all_pass = false;
        os << " n=" << n << (report.equivalence_pass ? ":ok" : ":MISMATCH");
    }
    return {"gn", any_applicable, any_applicable && all_pass, "per-n equivalence:" + os.str()};
}

CheckOutcome run_alternation(const Analysis& a, const VerifyOptions& opt) {
    std::ostringstream os;
    if (!opt.x_text.empty()) {
        Word x = Word::from_text(opt.x_text, a.word.alphabet());
        auto r = alternation_check(a.index, x);
        if (r.vacuous) {
            os << opt.x_text << " is a palindrome: vacuous";
            return {"alternation", false, true, os.str()};
        }
        os << "x = " << opt.x_text << (r.alternating ? ": alternates" : ": does not alternate");
        return {"alternation", true, r.alternating, os.str()};
    }
    // Sample non-palindromic factors of lengths 2..min(20, depth).
    std::mt19937_64 rng(opt.sample_seed);
    std::size_t max_len = std::min<std::size_t>({20, a.index.n_max(), a.word.size()});
    if (max_len < 2) return {"alternation", false, false, "word too short to sample factors"};
    std::size_t tested = 0, failures = 0, attempts = 0;
    while (tested < opt.samples && attempts < opt.samples * 50) {
        ++attempts;
        std::size_t len = 2 + rng() % (max_len - 1);
        std::size_t pos = rng() % (a.word.size() - len + 1);
        auto content = a.word.bytes().substr(pos, len);
        if (is_palindrome(content)) continue;
        Word x(a.word.alphabet(), std::vector<std::uint8_t>(content.begin(), content.end()));
        auto r = alternation_check(a.index, x);
        ++tested;
        if (!r.alternating) {
            ++failures;
            if (failures <= 4) os << " [" << a.word.alphabet().render(content) << "]";
        }
    }
    if (tested == 0) return {"alternation", false, false, "no non-palindromic factors found"};
    std::ostringstream head;
    head << tested << " sampled factors, " << failures << " non-alternating" << os.str();
    return {"alternation", true, failures == 0, head.str()};
}

int cmd_verify(const VerifyOptions& opt) {
    WordSource src = resolve_source(opt.word);
    Word w = resolve_word(opt.word, src);
    std::size_t n_max = opt.word.n_max ? opt.word.n_max : default_n_max(w);
    Analysis a = analyze(std::move(w), n_max, src.describe());

    std::vector<CheckOutcome> outcomes;
    outcomes.push_back(run_identity(a));
    for (const auto& name : opt.checks) {
        if (name == "nonneg") outcomes.push_back(run_nonneg(a));
        else if (name == "lemma1") outcomes.push_back(run_lemma1(a, opt));
        else if (name == "lemma2") outcomes.push_back(run_lemma2(a, opt));
        else if (name == "prop41") outcomes.push_back(run_prop41(a, opt));
        else if (name == "lemma43") outcomes.push_back(run_lemma43(a));
        else if (name == "gn") outcomes.push_back(run_gn(a, opt));
        else if (name == "alternation") outcomes.push_back(run_alternation(a, opt));
        else throw CLI::ValidationError("--check", "unknown check '" + name + "'");
    }

    bool any_fail = false;
    bool any_selected_applicable = false;
    for (const auto& o : outcomes) {
        if (o.applicable && !o.pass) any_fail = true;
        if (o.name != "identity" && o.applicable) any_selected_applicable = true;
    }
    int exit_code = kExitOk;
    if (any_fail) exit_code = kExitCheckFailed;
    else if (!opt.checks.empty() && !any_selected_applicable) exit_code = kExitInapplicable;

    if (opt.format == "json") {
        json checks = json::array();
        for (const auto& o : outcomes)
            checks.push_back({{"name", o.name},
                              {"applicable", o.applicable},
                              {"pass", o.pass},
                              {"detail", o.detail}});
        json report = {{"tool_version", kToolVersion},
                       {"command", "verify"},
                       {"word_meta", word_meta_json(src, a.word)},
                       {"results", {{"checks", checks}}},
                       {"verdict", exit_code == kExitOk
                                       ? "pass"
                                       : (exit_code == kExitCheckFailed ? "fail" : "inapplicable")}};
        emit(report.dump(2) + "\n", opt.out_path);
    } else {
        std::ostringstream os;
        os << "word: " << a.meta << ", analyzed length " << a.word.size() << "\n";
        for (const auto& o : outcomes) {
            os << std::left << std::setw(12) << o.name
               << (o.applicable ? (o.pass ? "PASS " : "FAIL ") : "inapplicable ") << o.detail
               << "\n";
        }
        emit(os.str(), opt.out_path);
    }
    return exit_code;
}

// ---------------------------------------------------------------------------
// harness

json harness_json(const StabilizationReport& report, const WordSource& src) {
    json prefixes = json::array();
    for (const auto& snap : report.prefixes) {
        prefixes.push_back({{"length", snap.length},
                            {"defect", snap.defect},
                            {"trusted_n", snap.trusted_n},
                            {"T", snap.T},
                            {"sum_T", snap.sum_T},
                            {"stabilized", snap.stabilized},
                            {"stabilization_index", snap.stabilization_index}});
    }
    json results;
    results["schedule"] = report.schedule;
    results["prefixes"] = prefixes;
    results["thresholds"] = {{"valid", report.thresholds_valid},
                             {"L", report.L_candidate},
                             {"M", report.M_candidate},
                             {"H", report.H_candidate}};
    results["identity"] = {{"lhs", report.lhs}, {"rhs", report.rhs}};
    results["stabilization_rule"] = report.stabilization_rule;
    json meta;
    meta["source"] = src.describe();
    meta["length"] = report.schedule.back();
    return {{"tool_version", kToolVersion},
            {"command", "harness"},
            {"word_meta", meta},
            {"results", results},
            {"verdict", std::string(to_string(report.verdict))}};
}

std::vector<std::size_t> parse_schedule(const std::string& text) {
    std::vector<std::size_t> schedule;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            schedule.push_back(std::stoull(piece));
        } catch (...) {
            throw CLI::ValidationError("--schedule", "expected comma-separated integers");
        }
    }
    return schedule;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindromic defect, complexity and Brlek-Reutenauer checks"};
    app.require_subcommand(1);

    WordOptions profile_opt;
    std::string profile_format = "table", profile_out;
    auto* profile_cmd = app.add_subcommand("profile", "C(n), P(n), T(n), defect and closure");
    add_word_options(profile_cmd, profile_opt);
    profile_cmd->add_option("--format", profile_format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    profile_cmd->add_option("--out", profile_out, "output path (default stdout)");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "finite identity plus selected checks");
    add_word_options(verify_cmd, verify_opt.word);
    verify_cmd->add_option("--check", verify_opt.checks,
                           "lemma1|lemma2|prop41|lemma43|gn|alternation|nonneg");
    verify_cmd->add_option("--n", verify_opt.n_range, "length range N or LO..HI for gn/prop41");
    std::size_t q_tmp = 0, p_tmp = 0, h_tmp = 0, n_tmp = 0;
    verify_cmd->add_option("--q", q_tmp, "prefix length q for the counting lemmas")
        ->each([&](const std::string&) { verify_opt.q_len = q_tmp; });
    verify_cmd->add_option("--p", p_tmp, "prefix length p for lemma2")
        ->each([&](const std::string&) { verify_opt.p_len = p_tmp; });
    verify_cmd->add_option("--H", h_tmp, "explicit H for the generalized lemma1")
        ->each([&](const std::string&) { verify_opt.h_value = h_tmp; });
    verify_cmd->add_option("--N", n_tmp, "lower factor length for prop41")
        ->each([&](const std::string&) { verify_opt.big_n = n_tmp; });
    verify_cmd->add_option("--x", verify_opt.x_text, "explicit factor for alternation");
    verify_cmd->add_option("--samples", verify_opt.samples, "sampled factors for alternation");
    verify_cmd->add_option("--sample-seed", verify_opt.sample_seed, "sampling seed");
    verify_cmd->add_option("--format", verify_opt.format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    verify_cmd->add_option("--out", verify_opt.out_path, "output path");

    WordOptions harness_opt;
    std::string schedule_text, harness_out;
    auto* harness_cmd = app.add_subcommand("harness", "prefix-schedule stabilization report");
    add_word_options(harness_cmd, harness_opt);
    harness_cmd->add_option("--schedule", schedule_text, "comma-separated prefix lengths")
        ->required();
    harness_cmd->add_option("--out", harness_out, "output path");

    WordOptions graph_opt;
    std::size_t graph_n = 1;
    std::string graph_out, graph_dot;
    auto* graph_cmd = app.add_subcommand("graph", "export the G_n graph of special factors");
    add_word_options(graph_cmd, graph_opt);
    graph_cmd->add_option("--n", graph_n, "factor length n")->required();
    graph_cmd->add_option("--out", graph_out, "adjacency text path (default stdout)");
    graph_cmd->add_option("--dot", graph_dot, "also write a DOT file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (profile_cmd->parsed()) {
            WordSource src = resolve_source(profile_opt);
            Word w = resolve_word(profile_opt, src);
            std::size_t n_max = profile_opt.n_max ? profile_opt.n_max : default_n_max(w);
            Analysis a = analyze(std::move(w), n_max, src.describe());
            if (profile_format == "json") emit(profile_json(a, src).dump(2) + "\n", profile_out);
            else if (profile_format == "csv") emit(profile_csv(a), profile_out);
            else emit(profile_table(a), profile_out);
            return kExitOk;
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_opt);
        if (harness_cmd->parsed()) {
            WordSource src = resolve_source(harness_opt);
            auto schedule = parse_schedule(schedule_text);
            std::size_t n_max = harness_opt.n_max ? harness_opt.n_max : 64;
            auto report = analyze_infinite(src, schedule, n_max);
            emit(harness_json(report, src).dump(2) + "\n", harness_out);
            return kExitOk;
        }
        if (graph_cmd->parsed()) {
            WordSource src = resolve_source(graph_opt);
            Word w = resolve_word(graph_opt, src);
            if (graph_n + 1 > w.size())
                throw CLI::ValidationError("--n", "word too short for this length");
            auto idx = FactorIndex::build(std::move(w), graph_n + 1);
            auto g = build_gn(idx, graph_n);
            if (g.degenerate) {
                std::cerr << "degenerate graph: no special factors of length " << graph_n << "\n";
                return kExitInapplicable;
            }
            emit(gn_adjacency_text(g), graph_out);
            if (!graph_dot.empty()) emit(gn_dot(g), graph_dot);
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
