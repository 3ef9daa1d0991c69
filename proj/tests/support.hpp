// Test helpers and independent oracles. Nothing here calls into the
// algorithm it is used to check.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "sire/alphabet.hpp"
#include "sire/expression.hpp"
#include "sire/graphs.hpp"
#include "sire/orders.hpp"

namespace sire::test {

/// Sample where each character is a symbol: chars({"abcd", "bdd"}).
ExampleSet chars(std::initializer_list<std::string> words);

/// Single-letter symbol ids for graph tests: id('a') == 0.
constexpr SymbolId id(char c) { return static_cast<SymbolId>(c - 'a'); }

/// "ab ac bd" over single-character names of `alphabet`.
PairSet pairs(const Alphabet& alphabet, std::string_view text);
/// "ab ac bd" for id() letters; `n` is the alphabet size.
PairSet pairs(std::size_t n, std::string_view text);

SymbolSet letters(std::string_view s);
Chain chain(std::string_view s);
std::string spell(const Chain& c);
std::string spell(const SymbolSet& s);
/// Chains of a Cpos spelled through `alphabet`, e.g. {"abc", "d"}.
std::vector<std::string> spell(const Cpos& cpos, const Alphabet& alphabet);
std::vector<std::string> spell_chains(const std::vector<Chain>& chains, const Alphabet& alphabet);

UGraph ugraph(std::string_view vertices, std::string_view edges);
Digraph digraph(std::string_view vertices, std::string_view arcs);

// Oracles

/// Closure by the definition: every position pair i < j of every word.
PairSet closure_by_definition(const ExampleSet& sample);

/// Size of a maximum independent set, by trying every vertex subset.
std::size_t max_independent_set_size(const UGraph& g);

/// Fewest colours of a proper vertex colouring, by backtracking over k.
std::size_t chromatic_number(const UGraph& g);

/// Number of ways to split n labelled symbols into a set of nonempty
/// chains: the sum of Lah numbers L(n,k) = C(n-1,k-1) n!/k!.
std::uint64_t chain_partition_count(unsigned n);

/// Ordered Bell (Fubini) numbers by the recurrence a(n) = sum C(n,k) a(n-k).
std::uint64_t ordered_bell(unsigned n);

/// All interleavings of two words.
std::set<std::string> shuffle(const std::string& u, const std::string& v);

/// L(sire) restricted to words where each symbol occurs at most
/// `max_count` times, by shuffling the factor languages together. Symbols
/// must be single characters.
std::unordered_set<std::string> expand_language(const Sire& sire, unsigned max_count);

/// Every word over `symbols` using each symbol at most `max_count` times.
std::vector<std::string> bounded_words(std::string_view symbols, unsigned max_count);

std::vector<std::string> split(const std::string& word);

// Generators

/// Seeded random sample: alphabet drawn from the first `max_alphabet`
/// letters, up to `max_words` words of length up to `max_len`.
ExampleSet random_sample(std::mt19937_64& rng, unsigned max_alphabet, unsigned max_words, unsigned max_len);

/// Random SIRE over the given single-character symbols.
Sire random_sire(std::mt19937_64& rng, std::string_view symbols, unsigned max_factors);

/// One random member of L(sire) where starred/plussed symbols repeat at
/// most `max_repeat` times.
std::vector<std::string> random_member(std::mt19937_64& rng, const Sire& sire, unsigned max_repeat);

} // namespace sire::test
