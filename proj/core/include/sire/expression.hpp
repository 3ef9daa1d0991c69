#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sire {

/// Counting operator attached to a symbol.
enum class Op : unsigned char {
    One,  ///< exactly once (printed bare)
    Opt,  ///< `?`
    Plus, ///< `+`
    Star, ///< `*`
};

/// '1', '?', '+' or '*'.
char op_char(Op op) noexcept;
/// Inverse of op_char; throws std::invalid_argument on anything else.
Op op_from_char(char c);
/// Whether `count` occurrences of a symbol are admitted by `op`.
bool admits(Op op, std::size_t count) noexcept;

struct Term {
    std::string symbol;
    Op op = Op::One;

    bool operator==(const Term&) const = default;
};

/// A concatenation chain of operator-annotated symbols, all distinct.
class Factor {
public:
    /// Throws std::invalid_argument when empty or on an invalid name, and
    /// DuplicateSymbolError when a symbol repeats.
    explicit Factor(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Lexicographically smallest member symbol.
    const std::string& least_symbol() const;

    bool operator==(const Factor&) const = default;

private:
    std::vector<Term> terms_;
};

/// Interleaving (`&`) of factors with pairwise disjoint alphabets, stored in
/// canonical order (by each factor's least symbol). A Sire with no factors
/// denotes the language {ε}; its text form is `()`.
class Sire {
public:
    Sire() = default;
    /// Throws DuplicateSymbolError if two factors share a symbol.
    explicit Sire(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    /// All symbols, sorted.
    std::vector<std::string> symbols() const;

    bool operator==(const Sire&) const = default;

private:
    std::vector<Factor> factors_;
};

/// Grammar: `sire := factor ("&" factor)*`, `factor := (symbol op?)+`,
/// `op := "?" | "+" | "*"`, with terms separated by whitespace. The text
/// `()` is the empty expression.
Sire parse_sire(std::string_view text);

/// Canonical text, e.g. "a* b c? & d+".
std::string format_sire(const Sire& sire);

} // namespace sire
