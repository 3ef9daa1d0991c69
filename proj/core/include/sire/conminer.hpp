#pragma once

#include <cstddef>
#include <vector>

#include "sire/alphabet.hpp"
#include "sire/expression.hpp"
#include "sire/graphs.hpp"
#include "sire/orders.hpp"

namespace sire {

/// Approx extracts clique-removal independent sets greedily; Exact finds a
/// minimum partition of the constraint graph into independent sets.
enum class MisMode { Approx, Exact };

/// Topologically sorts each group under the consistent order. A group whose
/// induced order is cyclic has the smallest vertex of a witness cycle moved
/// into a trailing group (one per source group) until it sorts; the
/// trailing group is then processed like any other.
struct OrderedGroups {
    Cpos cpos;
    std::size_t evicted = 0;
};

OrderedGroups order_groups(const std::vector<SymbolSet>& groups, const PairSet& consistent);

struct ConMinerResult {
    OrderSplit orders;
    /// Independent sets in extraction order, before absorbing free symbols.
    std::vector<SymbolSet> independent_sets;
    /// The same list after the unconstrained symbols joined the first group.
    std::vector<SymbolSet> groups;
    Cpos cpos;
    std::size_t evicted = 0;
    Sire sire;
};

/// Constraint-graph decomposition. Exact mode throws BoundExceededError when
/// the constraint graph has more than `exact_bound` vertices.
ConMinerResult mine_constraints(const ExampleSet& sample, MisMode mode,
                                std::size_t exact_bound = kDefaultExactBound);

Sire con_miner(const ExampleSet& sample, MisMode mode,
               std::size_t exact_bound = kDefaultExactBound);

} // namespace sire
