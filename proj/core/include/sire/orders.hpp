#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sire/alphabet.hpp"

namespace sire {

using SymbolPair = std::pair<SymbolId, SymbolId>;

/// Set of ordered pairs (u, v), u != v, over an alphabet of fixed size.
/// Stored as a dense matrix; iteration yields pairs in lexicographic order.
class PairSet {
public:
    PairSet() = default;
    explicit PairSet(std::size_t alphabet_size);

    std::size_t alphabet_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    /// Throws std::invalid_argument on a reflexive or out-of-range pair.
    /// Returns false if the pair was already present.
    bool insert(SymbolId u, SymbolId v);
    bool erase(SymbolId u, SymbolId v);
    bool contains(SymbolId u, SymbolId v) const noexcept;

    std::vector<SymbolPair> pairs() const;
    /// Symbols that occur in at least one pair, sorted.
    std::vector<SymbolId> symbols() const;

    bool operator==(const PairSet&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t count_ = 0;
    std::vector<bool> bits_;
};

/// Union over all words of {(w[i], w[j]) | i < j, w[i] != w[j]}.
PairSet transitive_closure(const ExampleSet& sample);

/// The closure split by the reversal rule: a pair whose reverse is also in
/// the closure is a forbid pair (`constraint`); everything else is
/// `consistent` and is what orders symbols inside a chain.
struct OrderSplit {
    PairSet closure;
    PairSet consistent;
    PairSet constraint;
};

OrderSplit split_orders(const ExampleSet& sample);

} // namespace sire
