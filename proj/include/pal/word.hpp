#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pal {

inline constexpr std::size_t kMaxAlphabetSize = 64;

/// Ordered alphabet of distinct printable tokens; letter index is the
/// canonical symbol value used everywhere else.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    /// One letter per character, e.g. "ab" -> {a, b}.
    static Alphabet single_chars(std::string_view chars);
    /// Comma-separated tokens, e.g. "a,b,c". Tokens are trimmed.
    static Alphabet from_csv(std::string_view csv);

    std::size_t size() const noexcept { return letters_.size(); }
    const std::string& letter(std::size_t i) const { return letters_[i]; }
    const std::vector<std::string>& letters() const noexcept { return letters_; }
    std::optional<std::uint8_t> index_of(std::string_view token) const;

    /// Concatenated letter tokens for a symbol sequence.
    std::string render(std::span<const std::uint8_t> symbols) const;
    std::string render(std::string_view symbol_bytes) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> letters_;
};

/// Immutable finite word over an Alphabet, stored as letter indices.
class Word {
public:
    Word(Alphabet alphabet, std::vector<std::uint8_t> symbols);

    /// Literal text with a single-character alphabet inferred from the
    /// distinct characters in order of first appearance. Empty text gets
    /// the placeholder alphabet {a}.
    static Word from_text(std::string_view text);
    /// Literal text tokenized against an explicit alphabet (greedy
    /// longest-token match). Throws std::invalid_argument on failure.
    static Word from_text(std::string_view text, Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }

    /// Symbol indices viewed as raw bytes; bytewise order equals
    /// alphabet order, which makes views usable as map keys.
    std::string_view bytes() const noexcept {
        return {reinterpret_cast<const char*>(symbols_.data()), symbols_.size()};
    }

    Word prefix(std::size_t length) const;
    Word substr(std::size_t pos, std::size_t length) const;
    std::string text() const { return alphabet_.render(symbols_); }

    bool operator==(const Word&) const = default;

private:
    Alphabet alphabet_;
    std::vector<std::uint8_t> symbols_;
};

Word mirror(const Word& w);

bool is_palindrome(std::string_view symbol_bytes) noexcept;
std::string mirror_bytes(std::string_view symbol_bytes);

/// Entry n is true iff the mirror of every length-n factor of w is again
/// a factor of w. Entry 0 is always true. Requires n_max <= |w|.
std::vector<bool> reversal_closure_profile(const Word& w, std::size_t n_max);

/// Non-erasing morphism over a fixed alphabet.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::vector<std::vector<std::uint8_t>> images);

    /// Rules like "a:ab, b:a".
    static Morphism parse(const Alphabet& alphabet, std::string_view rules);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const std::uint8_t> image(std::uint8_t letter) const;

    /// image(seed) starts with seed and has length >= 2; needed for
    /// fixed-point prefix iteration.
    bool prolongable(std::uint8_t seed) const;

    std::vector<std::uint8_t> apply(std::span<const std::uint8_t> symbols) const;

private:
    Alphabet alphabet_;
    std::vector<std::vector<std::uint8_t>> images_;
};

struct LiteralSource  { Word text; };
struct PeriodicSource { Word block; };
struct MorphicSource  { Morphism morphism; std::uint8_t seed; };
struct RandomSource   { Alphabet alphabet; std::uint64_t seed; };

class WordSource {
public:
    enum class Kind { literal, periodic, morphic, random };

    explicit WordSource(LiteralSource s) : payload_(std::move(s)) {}
    explicit WordSource(PeriodicSource s);
    explicit WordSource(MorphicSource s);
    explicit WordSource(RandomSource s) : payload_(std::move(s)) {}

    Kind kind() const noexcept;
    std::string describe() const;

    template <typename T> const T* get_if() const { return std::get_if<T>(&payload_); }

private:
    std::variant<LiteralSource, PeriodicSource, MorphicSource, RandomSource> payload_;
};

/// literal: the text itself (min_length must not exceed its length);
/// periodic: block repeated, truncated to exactly min_length;
/// morphic: shortest iterate of the seed with length >= min_length (not
/// truncated); random: exactly min_length symbols from a seeded mt19937_64.
Word generate(const WordSource& source, std::size_t min_length);

struct SpecParseError : std::runtime_error {
    int line;
    SpecParseError(int line_no, const std::string& message);
};

/// Line-oriented `key = value` word-spec format. Unknown keys are an
/// error; '#' lines and blank lines are skipped.
WordSource parse_word_spec(std::string_view text);
WordSource load_word_spec(const std::string& path);

}  // namespace pal
