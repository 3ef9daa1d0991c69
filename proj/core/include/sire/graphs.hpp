#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "sire/alphabet.hpp"
#include "sire/orders.hpp"

namespace sire {

using SymbolSet = std::set<SymbolId>;

/// Undirected simple graph over symbol ids.
class UGraph {
public:
    UGraph() = default;

    void add_vertex(SymbolId v);
    /// Adds both endpoints. Throws std::invalid_argument on a self-loop.
    void add_edge(SymbolId u, SymbolId v);

    /// Vertices are the symbols of `constraint`; every pair becomes an edge.
    static UGraph from_pairs(const PairSet& constraint);

    bool has_vertex(SymbolId v) const { return adj_.contains(v); }
    bool adjacent(SymbolId u, SymbolId v) const;
    const SymbolSet& neighbors(SymbolId v) const { return adj_.at(v); }

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept;
    bool empty() const noexcept { return adj_.empty(); }
    SymbolSet vertices() const;

    UGraph induced(const SymbolSet& keep) const;
    UGraph without(const SymbolSet& drop) const;

    /// No edge joins two members of `set`.
    bool is_independent(const SymbolSet& set) const;

private:
    std::map<SymbolId, SymbolSet> adj_;
};

/// Directed graph without self-loops.
class Digraph {
public:
    Digraph() = default;

    void add_vertex(SymbolId v);
    /// Throws std::invalid_argument on a self-loop. Returns false if present.
    bool add_arc(SymbolId from, SymbolId to);
    bool remove_arc(SymbolId from, SymbolId to);
    bool has_arc(SymbolId from, SymbolId to) const;

    bool has_vertex(SymbolId v) const { return succ_.contains(v); }
    const SymbolSet& successors(SymbolId v) const { return succ_.at(v); }
    const SymbolSet& predecessors(SymbolId v) const { return pred_.at(v); }

    std::size_t vertex_count() const noexcept { return succ_.size(); }
    std::size_t arc_count() const noexcept { return arcs_; }
    SymbolSet vertices() const;
    std::vector<SymbolPair> arcs() const;

    /// Nonempty directed path from `from` to `to`.
    bool has_path(SymbolId from, SymbolId to) const;
    /// `v` together with everything reachable from it.
    SymbolSet descendants(SymbolId v) const;
    /// `v` together with everything that reaches it.
    SymbolSet ancestors(SymbolId v) const;

    /// Subgraph on `keep` with the arcs of `arcs` whose ends are both kept.
    static Digraph induced(const SymbolSet& keep, const PairSet& arcs);

private:
    std::map<SymbolId, SymbolSet> succ_;
    std::map<SymbolId, SymbolSet> pred_;
    std::size_t arcs_ = 0;
};

/// Thrown by the DAG routines. `cycle()` lists the cycle's vertices starting
/// at its smallest one; the closing arc back to the first is implied.
class CycleError : public std::runtime_error {
public:
    explicit CycleError(std::vector<SymbolId> cycle);
    const std::vector<SymbolId>& cycle() const noexcept { return cycle_; }

private:
    std::vector<SymbolId> cycle_;
};

/// Some directed cycle of `g`, or an empty vector if `g` is acyclic.
std::vector<SymbolId> find_cycle(const Digraph& g);

/// Kahn's algorithm, always taking the smallest available vertex.
std::vector<SymbolId> topological_sort(const Digraph& g);

/// Every path from an in-degree-0 vertex to an out-degree-0 vertex, sorted
/// lexicographically. An isolated vertex contributes the path [v].
std::vector<Chain> all_source_sink_paths(const Digraph& g);

// Independent sets

inline constexpr std::size_t kDefaultExactBound = 24;

/// Clique-removal approximation built on the Ramsey recursion, pivoting on
/// the smallest vertex and breaking size ties toward the lexicographically
/// smaller set. The winner is then greedily extended to a maximal set.
/// Throws std::invalid_argument on an empty graph.
SymbolSet approx_max_independent_set(const UGraph& g);

/// Enumerates every maximal independent set and returns a largest one,
/// lexicographically smallest among ties. Throws BoundExceededError when
/// the graph has more than `bound` vertices (bound is capped at 64).
SymbolSet exact_max_independent_set(const UGraph& g, std::size_t bound = kDefaultExactBound);

/// Calls `visit` once per maximal independent set (bounded like the above).
void for_each_maximal_independent_set(const UGraph& g,
                                      const std::function<void(const SymbolSet&)>& visit,
                                      std::size_t bound = kDefaultExactBound);

/// Fewest independent sets covering every vertex exactly once (a minimum
/// colouring), preferring the largest sets among equally short answers.
/// Sets come out largest first. Exponential; bounded like the above.
std::vector<SymbolSet> minimum_independent_set_partition(const UGraph& g,
                                                         std::size_t bound = kDefaultExactBound);

using MisSolver = std::function<SymbolSet(const UGraph&)>;

MisSolver approx_mis_solver();
MisSolver exact_mis_solver(std::size_t bound = kDefaultExactBound);

/// Repeatedly extracts `solver(residual)` until no vertex is left. The
/// result partitions the vertex set; an empty graph gives an empty list.
std::vector<SymbolSet> decompose_into_independent_sets(const UGraph& g, const MisSolver& solver);

} // namespace sire
