#include "sire/conminer.hpp"

#include "sire/lang.hpp"

namespace sire {

OrderedGroups order_groups(const std::vector<SymbolSet>& groups, const PairSet& consistent)
{
    OrderedGroups out;
    std::vector<SymbolSet> pending = groups;
    for (std::size_t i = 0; i < pending.size(); ++i) {
        SymbolSet group = pending[i];
        SymbolSet evicted;
        while (!group.empty()) {
            Digraph order = Digraph::induced(group, consistent);
            auto cycle = find_cycle(order);
            if (cycle.empty()) {
                out.cpos.chains.push_back(topological_sort(order));
                break;
            }
            // find_cycle starts the witness at its smallest vertex.
            group.erase(cycle.front());
            evicted.insert(cycle.front());
            ++out.evicted;
        }
        if (!evicted.empty())
            pending.push_back(std::move(evicted));
    }
    return out;
}

ConMinerResult mine_constraints(const ExampleSet& sample, MisMode mode, std::size_t exact_bound)
{
    ConMinerResult result;
    result.orders = split_orders(sample);

    UGraph conflicts = UGraph::from_pairs(result.orders.constraint);
    result.independent_sets = mode == MisMode::Exact
                                  ? minimum_independent_set_partition(conflicts, exact_bound)
                                  : decompose_into_independent_sets(conflicts, approx_mis_solver());

    result.groups = result.independent_sets;
    if (result.groups.empty())
        result.groups.emplace_back();
    for (std::size_t x = 0; x < sample.alphabet().size(); ++x)
        if (!conflicts.has_vertex(static_cast<SymbolId>(x)))
            result.groups.front().insert(static_cast<SymbolId>(x));

    OrderedGroups ordered = order_groups(result.groups, result.orders.consistent);
    result.cpos = std::move(ordered.cpos);
    result.evicted = ordered.evicted;
    result.sire = infer_operators(sample, result.cpos);
    return result;
}

Sire con_miner(const ExampleSet& sample, MisMode mode, std::size_t exact_bound)
{
    return mine_constraints(sample, mode, exact_bound).sire;
}

} // namespace sire
