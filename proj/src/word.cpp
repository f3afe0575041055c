#include "pal/word.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pal {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty() || letters_.size() > kMaxAlphabetSize)
        throw std::invalid_argument("alphabet size must be between 1 and 64");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : letters_) {
        if (l.empty()) throw std::invalid_argument("alphabet letter must be nonempty");
        if (!seen.insert(l).second)
            throw std::invalid_argument("alphabet letters must be distinct: '" + l + "'");
    }
}

Alphabet Alphabet::single_chars(std::string_view chars) {
    std::vector<std::string> letters;
    for (char c : chars) letters.emplace_back(1, c);
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::from_csv(std::string_view csv) {
    std::vector<std::string> letters;
    for (auto piece : split(csv, ',')) {
        auto t = trim(piece);
        if (t.empty()) throw std::invalid_argument("empty token in alphabet list");
        letters.emplace_back(t);
    }
    return Alphabet(std::move(letters));
}

std::optional<std::uint8_t> Alphabet::index_of(std::string_view token) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == token) return static_cast<std::uint8_t>(i);
    return std::nullopt;
}

std::string Alphabet::render(std::span<const std::uint8_t> symbols) const {
    std::string out;
    for (auto s : symbols) out += letters_[s];
    return out;
}

std::string Alphabet::render(std::string_view symbol_bytes) const {
    return render(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(symbol_bytes.data()), symbol_bytes.size()));
}

Word::Word(Alphabet alphabet, std::vector<std::uint8_t> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    for (auto s : symbols_)
        if (s >= alphabet_.size()) throw std::invalid_argument("symbol index out of alphabet range");
}

Word Word::from_text(std::string_view text) {
    std::vector<std::string> letters;
    std::unordered_map<char, std::uint8_t> index;
    std::vector<std::uint8_t> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        auto it = index.find(c);
        if (it == index.end()) {
            if (letters.size() >= kMaxAlphabetSize)
                throw std::invalid_argument("text uses more than 64 distinct characters");
            it = index.emplace(c, static_cast<std::uint8_t>(letters.size())).first;
            letters.emplace_back(1, c);
        }
        symbols.push_back(it->second);
    }
    if (letters.empty()) letters.emplace_back("a");
    return Word(Alphabet(std::move(letters)), std::move(symbols));
}

Word Word::from_text(std::string_view text, Alphabet alphabet) {
    // Greedy longest-token match.
    std::vector<std::size_t> order(alphabet.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return alphabet.letter(a).size() > alphabet.letter(b).size();
    });
    std::vector<std::uint8_t> symbols;
    std::size_t pos = 0;
    while (pos < text.size()) {
        bool matched = false;
        for (auto i : order) {
            const std::string& tok = alphabet.letter(i);
            if (text.compare(pos, tok.size(), tok) == 0) {
                symbols.push_back(static_cast<std::uint8_t>(i));
                pos += tok.size();
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("cannot tokenize text at offset " + std::to_string(pos) +
                                        ": no alphabet letter matches");
    }
    return Word(std::move(alphabet), std::move(symbols));
}

Word Word::prefix(std::size_t length) const { return substr(0, length); }

Word Word::substr(std::size_t pos, std::size_t length) const {
    if (pos + length > symbols_.size()) throw std::out_of_range("substr out of range");
    return Word(alphabet_, std::vector<std::uint8_t>(symbols_.begin() + pos,
                                                     symbols_.begin() + pos + length));
}

Word mirror(const Word& w) {
    std::vector<std::uint8_t> rev(w.symbols().rbegin(), w.symbols().rend());
    return Word(w.alphabet(), std::move(rev));
}

bool is_palindrome(std::string_view b) noexcept {
    for (std::size_t i = 0, j = b.size(); i + 1 < j; ++i, --j)
        if (b[i] != b[j - 1]) return false;
    return true;
}

std::string mirror_bytes(std::string_view b) { return std::string(b.rbegin(), b.rend()); }

std::vector<bool> reversal_closure_profile(const Word& w, std::size_t n_max) {
    if (n_max > w.size()) throw std::invalid_argument("n_max exceeds word length");
    std::vector<bool> out(n_max + 1, true);
    std::string_view b = w.bytes();
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::unordered_set<std::string_view> seen;
        for (std::size_t p = 0; p + n <= w.size(); ++p) seen.insert(b.substr(p, n));
        bool closed = true;
        for (auto f : seen) {
            if (!seen.count(mirror_bytes(f))) { closed = false; break; }
        }
        out[n] = closed;
    }
    return out;
}

Morphism::Morphism(Alphabet alphabet, std::vector<std::vector<std::uint8_t>> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
        throw std::invalid_argument("morphism must define an image for every letter");
    for (const auto& img : images_) {
        if (img.empty()) throw std::invalid_argument("morphism images must be nonempty");
        for (auto s : img)
            if (s >= alphabet_.size()) throw std::invalid_argument("morphism image symbol out of range");
    }
}

Morphism Morphism::parse(const Alphabet& alphabet, std::string_view rules) {
    std::vector<std::vector<std::uint8_t>> images(alphabet.size());
    std::vector<bool> defined(alphabet.size(), false);
    for (auto piece : split(rules, ',')) {
        auto rule = trim(piece);
        if (rule.empty()) continue;
        auto colon = rule.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("morphism rule missing ':': '" + std::string(rule) + "'");
        auto letter_tok = trim(rule.substr(0, colon));
        auto image_text = trim(rule.substr(colon + 1));
        auto letter = alphabet.index_of(letter_tok);
        if (!letter)
            throw std::invalid_argument("morphism rule for unknown letter '" + std::string(letter_tok) + "'");
        if (defined[*letter])
            throw std::invalid_argument("duplicate morphism rule for '" + std::string(letter_tok) + "'");
        Word img = Word::from_text(image_text, alphabet);
        images[*letter].assign(img.symbols().begin(), img.symbols().end());
        defined[*letter] = true;
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (!defined[i])
            throw std::invalid_argument("morphism missing rule for letter '" + alphabet.letter(i) + "'");
    return Morphism(alphabet, std::move(images));
}

std::span<const std::uint8_t> Morphism::image(std::uint8_t letter) const {
    return images_.at(letter);
}

bool Morphism::prolongable(std::uint8_t seed) const {
    if (seed >= alphabet_.size()) return false;
    const auto& img = images_[seed];
    return img.size() >= 2 && img[0] == seed;
}

std::vector<std::uint8_t> Morphism::apply(std::span<const std::uint8_t> symbols) const {
    std::vector<std::uint8_t> out;
    std::size_t total = 0;
    for (auto s : symbols) total += images_[s].size();
    out.reserve(total);
    for (auto s : symbols) out.insert(out.end(), images_[s].begin(), images_[s].end());
    return out;
}

WordSource::WordSource(PeriodicSource s) : payload_(std::move(s)) {
    if (std::get<PeriodicSource>(payload_).block.empty())
        throw std::invalid_argument("periodic block must be nonempty");
}

WordSource::WordSource(MorphicSource s) : payload_(std::move(s)) {
    const auto& m = std::get<MorphicSource>(payload_);
    if (!m.morphism.prolongable(m.seed))
        throw std::invalid_argument("morphic seed is not prolongable: image must begin with the seed and have length >= 2");
}

WordSource::Kind WordSource::kind() const noexcept {
    return static_cast<Kind>(payload_.index());
}

std::string WordSource::describe() const {
    std::ostringstream os;
    if (auto* l = get_if<LiteralSource>()) {
        std::string t = l->text.text();
        if (t.size() > 24) t = t.substr(0, 24) + "...";
        os << "literal \"" << t << "\" (length " << l->text.size() << ")";
    } else if (auto* p = get_if<PeriodicSource>()) {
        os << "periodic block \"" << p->block.text() << "\"";
    } else if (auto* m = get_if<MorphicSource>()) {
        os << "morphic ";
        const auto& alpha = m->morphism.alphabet();
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (i) os << ", ";
            os << alpha.letter(i) << "->" << alpha.render(m->morphism.image(static_cast<std::uint8_t>(i)));
        }
        os << " seed " << alpha.letter(m->seed);
    } else if (auto* r = get_if<RandomSource>()) {
        os << "random over {";
        for (std::size_t i = 0; i < r->alphabet.size(); ++i)
            os << (i ? "," : "") << r->alphabet.letter(i);
        os << "} seed " << r->seed;
    }
    return os.str();
}

Word generate(const WordSource& source, std::size_t min_length) {
    if (auto* l = source.get_if<LiteralSource>()) {
        if (min_length > l->text.size())
            throw std::invalid_argument("literal text shorter than requested length");
        return l->text;
    }
    if (auto* p = source.get_if<PeriodicSource>()) {
        const auto block = p->block.symbols();
        std::vector<std::uint8_t> symbols;
        symbols.reserve(min_length);
        while (symbols.size() < min_length) {
            std::size_t take = std::min(block.size(), min_length - symbols.size());
            symbols.insert(symbols.end(), block.begin(), block.begin() + take);
        }
        return Word(p->block.alphabet(), std::move(symbols));
    }
    if (auto* m = source.get_if<MorphicSource>()) {
        std::vector<std::uint8_t> cur{m->seed};
        while (cur.size() < min_length) {
            auto next = m->morphism.apply(cur);
            if (next.size() <= cur.size())
                throw std::runtime_error("morphism does not grow from the seed");
            cur = std::move(next);
        }
        return Word(m->morphism.alphabet(), std::move(cur));
    }
    auto* r = source.get_if<RandomSource>();
    std::mt19937_64 rng(r->seed);
    std::uniform_int_distribution<int> dist(0, static_cast<int>(r->alphabet.size()) - 1);
    std::vector<std::uint8_t> symbols(min_length);
    for (auto& s : symbols) s = static_cast<std::uint8_t>(dist(rng));
    return Word(r->alphabet, std::move(symbols));
}

SpecParseError::SpecParseError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}

WordSource parse_word_spec(std::string_view text) {
    static const std::unordered_set<std::string_view> known = {
        "type", "alphabet", "text", "block", "morphism", "seed"};
    std::unordered_map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)
    int line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw SpecParseError(line_no, "expected `key = value`");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (!known.count(key)) throw SpecParseError(line_no, "unknown key '" + key + "'");
        if (kv.count(key)) throw SpecParseError(line_no, "duplicate key '" + key + "'");
        kv.emplace(std::move(key), std::make_pair(std::move(value), line_no));
    }

    auto get = [&](const char* key) -> const std::pair<std::string, int>* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto require = [&](const char* key) -> const std::pair<std::string, int>& {
        auto* v = get(key);
        if (!v) throw SpecParseError(line_no, std::string("missing required key '") + key + "'");
        return *v;
    };

    const auto& type = require("type");
    auto guard = [](int line, auto&& fn) {
        try {
            return fn();
        } catch (const std::invalid_argument& e) {
            throw SpecParseError(line, e.what());
        }
    };

    if (type.first == "literal") {
        const auto& text_kv = require("text");
        return guard(text_kv.second, [&] {
            if (auto* a = get("alphabet"))
                return WordSource(LiteralSource{Word::from_text(text_kv.first, Alphabet::from_csv(a->first))});
            return WordSource(LiteralSource{Word::from_text(text_kv.first)});
        });
    }
    if (type.first == "periodic") {
        const auto& block_kv = require("block");
        return guard(block_kv.second, [&] {
            Word block = get("alphabet")
                             ? Word::from_text(block_kv.first, Alphabet::from_csv(get("alphabet")->first))
                             : Word::from_text(block_kv.first);
            return WordSource(PeriodicSource{std::move(block)});
        });
    }
    if (type.first == "morphic") {
        const auto& alpha_kv = require("alphabet");
        const auto& rules_kv = require("morphism");
        const auto& seed_kv = require("seed");
        return guard(rules_kv.second, [&] {
            Alphabet alpha = Alphabet::from_csv(alpha_kv.first);
            Morphism m = Morphism::parse(alpha, rules_kv.first);
            auto seed = alpha.index_of(seed_kv.first);
            if (!seed) throw std::invalid_argument("seed '" + seed_kv.first + "' is not an alphabet letter");
            return WordSource(MorphicSource{std::move(m), *seed});
        });
    }
    if (type.first == "random") {
        const auto& alpha_kv = require("alphabet");
        const auto& seed_kv = require("seed");
        return guard(seed_kv.second, [&] {
            Alphabet alpha = Alphabet::from_csv(alpha_kv.first);
            std::uint64_t seed = 0;
            try {
                std::size_t used = 0;
                seed = std::stoull(seed_kv.first, &used);
                if (used != seed_kv.first.size()) throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("seed must be an unsigned integer for random sources");
            }
            return WordSource(RandomSource{std::move(alpha), seed});
        });
    }
    throw SpecParseError(type.second, "unknown type '" + type.first + "'");
}

WordSource load_word_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open word spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_word_spec(buf.str());
}

}  // namespace pal
