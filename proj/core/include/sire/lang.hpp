#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sire/alphabet.hpp"
#include "sire/expression.hpp"
#include "sire/orders.hpp"

namespace sire {

/// Per-symbol occurrence range over all words (0 for a word lacking it).
struct SymbolStats {
    std::vector<std::size_t> min_count;
    std::vector<std::size_t> max_count;
};

SymbolStats symbol_stats(const ExampleSet& sample);

/// ONE for [1,1], OPT for [0,1], PLUS for [>=1,>=2], STAR for [0,>=2].
Op operator_for_range(std::size_t min_count, std::size_t max_count) noexcept;

/// Turns each chain into a factor, annotating symbols with the operator of
/// their occurrence range. Throws std::invalid_argument unless the chains
/// partition the sample's alphabet.
Sire infer_operators(const ExampleSet& sample, const Cpos& cpos);

/// Membership test for a fixed expression. Shuffle membership factorises
/// over the factors because their alphabets are disjoint, so each factor
/// only has to match the word's projection onto its own symbols.
class SireMatcher {
public:
    explicit SireMatcher(const Sire& sire);

    bool accepts(std::span<const std::string> word) const;

private:
    struct Slot {
        std::size_t factor;
        std::size_t position;
    };

    std::vector<std::vector<Op>> factor_ops_;
    std::unordered_map<std::string, Slot> slots_;
};

bool sire_membership(std::span<const std::string> word, const Sire& sire);

/// Every partition of `symbols` into nonempty chains. Order inside a chain
/// matters, order among chains does not; chains come out sorted by their
/// smallest symbol. Throws BoundExceededError past `bound` symbols.
void for_each_chain_partition(std::span<const SymbolId> symbols,
                              const std::function<void(const Cpos&)>& visit,
                              std::size_t bound = 8);

std::vector<Cpos> enumerate_chain_partitions(std::span<const SymbolId> symbols,
                                             std::size_t bound = 8);

/// No later symbol is seen before an earlier one anywhere in the sample.
bool is_valid_chain(std::span<const SymbolId> chain, const PairSet& closure);

struct OracleResult {
    std::size_t min_chains = 0;
    /// Descending chain lengths shared by every optimum.
    std::vector<std::size_t> profile;
    std::vector<Cpos> optima;
};

/// Brute force over all chain partitions valid for the sample: keep those
/// with the fewest chains, then those whose descending length profile is
/// lexicographically largest.
OracleResult minimal_oracle(const ExampleSet& sample, std::size_t bound = 8);

} // namespace sire
