#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sire {

/// Index of a symbol in its alphabet. Ids follow the lexicographic order of
/// the names, so comparing ids compares names.
using SymbolId = std::uint32_t;

using Word = std::vector<SymbolId>;
using Chain = std::vector<SymbolId>;

/// True for a nonempty token without whitespace or any of `& ? + * ( ) |`.
/// Accepted bytes: ASCII letters and digits, `.`, `_`, `-`, `:` and any
/// non-ASCII byte (UTF-8 names).
bool is_valid_symbol(std::string_view name);

/// Sorted, deduplicated set of symbol names.
class Alphabet {
public:
    Alphabet() = default;
    /// Throws std::invalid_argument on an invalid name; duplicates are merged.
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::string& name(SymbolId id) const { return names_.at(id); }
    std::optional<SymbolId> find(std::string_view name) const;
    /// Like find() but throws std::out_of_range for unknown names.
    SymbolId id(std::string_view name) const;

    std::span<const std::string> names() const noexcept { return names_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
};

/// The positive sample: a nonempty multiset of words, kept in input order.
/// Empty words are allowed; the alphabet is exactly the symbols that occur.
class ExampleSet {
public:
    /// Throws std::invalid_argument if `words` is empty or a name is invalid.
    explicit ExampleSet(const std::vector<std::vector<std::string>>& words);

    /// Each UTF-8 code point of each string is one symbol.
    static ExampleSet from_chars(const std::vector<std::string>& words);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const Word> words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }

    std::vector<std::string> spell(std::span<const SymbolId> word) const;

private:
    Alphabet alphabet_;
    std::vector<Word> words_;
};

/// Splits a UTF-8 string into code points.
std::vector<std::string> split_code_points(std::string_view text);

/// An ordered partition of (a subset of) an alphabet into disjoint chains.
struct Cpos {
    std::vector<Chain> chains;

    bool operator==(const Cpos&) const = default;

    /// Chain lengths sorted in descending order.
    std::vector<std::size_t> length_profile() const;
};

/// "[a b c] [d]"
std::string format_cpos(const Cpos& cpos, const Alphabet& alphabet);

} // namespace sire
