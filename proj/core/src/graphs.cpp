#include "sire/graphs.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace sire {

// UGraph

void UGraph::add_vertex(SymbolId v)
{
    adj_.try_emplace(v);
}

void UGraph::add_edge(SymbolId u, SymbolId v)
{
    if (u == v)
        throw std::invalid_argument("self-loop in undirected graph");
    adj_[u].insert(v);
    adj_[v].insert(u);
}

UGraph UGraph::from_pairs(const PairSet& constraint)
{
    UGraph g;
    for (auto [u, v] : constraint.pairs())
        g.add_edge(u, v);
    return g;
}

bool UGraph::adjacent(SymbolId u, SymbolId v) const
{
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.contains(v);
}

std::size_t UGraph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& [v, n] : adj_)
        twice += n.size();
    return twice / 2;
}

SymbolSet UGraph::vertices() const
{
    SymbolSet out;
    for (const auto& [v, n] : adj_)
        out.insert(out.end(), v);
    return out;
}

UGraph UGraph::induced(const SymbolSet& keep) const
{
    UGraph g;
    for (const auto& [v, n] : adj_) {
        if (!keep.contains(v))
            continue;
        auto& row = g.adj_[v];
        for (SymbolId u : n)
            if (keep.contains(u))
                row.insert(row.end(), u);
    }
    return g;
}

UGraph UGraph::without(const SymbolSet& drop) const
{
    UGraph g;
    for (const auto& [v, n] : adj_) {
        if (drop.contains(v))
            continue;
        auto& row = g.adj_[v];
        for (SymbolId u : n)
            if (!drop.contains(u))
                row.insert(row.end(), u);
    }
    return g;
}

bool UGraph::is_independent(const SymbolSet& set) const
{
    for (SymbolId v : set) {
        auto it = adj_.find(v);
        if (it == adj_.end())
            continue;
        for (SymbolId u : it->second)
            if (set.contains(u))
                return false;
    }
    return true;
}

// Digraph

void Digraph::add_vertex(SymbolId v)
{
    succ_.try_emplace(v);
    pred_.try_emplace(v);
}

bool Digraph::add_arc(SymbolId from, SymbolId to)
{
    if (from == to)
        throw std::invalid_argument("self-loop in directed graph");
    add_vertex(from);
    add_vertex(to);
    if (!succ_[from].insert(to).second)
        return false;
    pred_[to].insert(from);
    ++arcs_;
    return true;
}

bool Digraph::remove_arc(SymbolId from, SymbolId to)
{
    auto it = succ_.find(from);
    if (it == succ_.end() || it->second.erase(to) == 0)
        return false;
    pred_[to].erase(from);
    --arcs_;
    return true;
}

bool Digraph::has_arc(SymbolId from, SymbolId to) const
{
    auto it = succ_.find(from);
    return it != succ_.end() && it->second.contains(to);
}

SymbolSet Digraph::vertices() const
{
    SymbolSet out;
    for (const auto& [v, s] : succ_)
        out.insert(out.end(), v);
    return out;
}

std::vector<SymbolPair> Digraph::arcs() const
{
    std::vector<SymbolPair> out;
    out.reserve(arcs_);
    for (const auto& [v, s] : succ_)
        for (SymbolId u : s)
            out.emplace_back(v, u);
    return out;
}

namespace {

SymbolSet reach(const std::map<SymbolId, SymbolSet>& next, SymbolId start)
{
    SymbolSet seen{start};
    std::vector<SymbolId> stack{start};
    while (!stack.empty()) {
        SymbolId v = stack.back();
        stack.pop_back();
        auto it = next.find(v);
        if (it == next.end())
            continue;
        for (SymbolId u : it->second)
            if (seen.insert(u).second)
                stack.push_back(u);
    }
    return seen;
}

} // namespace

bool Digraph::has_path(SymbolId from, SymbolId to) const
{
    if (!has_vertex(from) || !has_vertex(to))
        return false;
    SymbolSet seen;
    std::vector<SymbolId> stack{from};
    while (!stack.empty()) {
        SymbolId v = stack.back();
        stack.pop_back();
        for (SymbolId u : succ_.at(v)) {
            if (u == to)
                return true;
            if (seen.insert(u).second)
                stack.push_back(u);
        }
    }
    return false;
}

SymbolSet Digraph::descendants(SymbolId v) const
{
    return reach(succ_, v);
}

SymbolSet Digraph::ancestors(SymbolId v) const
{
    return reach(pred_, v);
}

Digraph Digraph::induced(const SymbolSet& keep, const PairSet& arcs)
{
    Digraph g;
    for (SymbolId v : keep)
        g.add_vertex(v);
    for (SymbolId u : keep)
        for (SymbolId v : keep)
            if (u != v && arcs.contains(u, v))
                g.add_arc(u, v);
    return g;
}

// DAG routines

namespace {

std::string describe_cycle(const std::vector<SymbolId>& cycle)
{
    std::string out = "graph has a cycle:";
    for (SymbolId v : cycle)
        out += ' ' + std::to_string(v) + " ->";
    out += ' ' + std::to_string(cycle.front());
    return out;
}

/// Kahn's algorithm with a min-heap. Returns the order and leaves the
/// vertices that could not be placed in `stuck`.
std::vector<SymbolId> kahn(const Digraph& g, SymbolSet& stuck)
{
    std::map<SymbolId, std::size_t> indegree;
    std::priority_queue<SymbolId, std::vector<SymbolId>, std::greater<>> ready;
    for (SymbolId v : g.vertices()) {
        indegree[v] = g.predecessors(v).size();
        if (indegree[v] == 0)
            ready.push(v);
    }
    std::vector<SymbolId> order;
    order.reserve(g.vertex_count());
    while (!ready.empty()) {
        SymbolId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (SymbolId u : g.successors(v))
            if (--indegree[u] == 0)
                ready.push(u);
    }
    stuck.clear();
    for (const auto& [v, d] : indegree)
        if (d > 0)
            stuck.insert(v);
    return order;
}

} // namespace

CycleError::CycleError(std::vector<SymbolId> cycle)
    : std::runtime_error(describe_cycle(cycle)), cycle_(std::move(cycle))
{}

std::vector<SymbolId> find_cycle(const Digraph& g)
{
    SymbolSet stuck;
    kahn(g, stuck);
    if (stuck.empty())
        return {};

    // Every stuck vertex keeps a stuck predecessor, so walking backwards
    // from any of them must revisit a vertex.
    std::map<SymbolId, std::size_t> position;
    std::vector<SymbolId> walk;
    SymbolId v = *stuck.begin();
    while (!position.contains(v)) {
        position[v] = walk.size();
        walk.push_back(v);
        const auto& preds = g.predecessors(v);
        v = *std::find_if(preds.begin(), preds.end(),
                          [&](SymbolId u) { return stuck.contains(u); });
    }
    std::vector<SymbolId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(position[v]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    return cycle;
}

std::vector<SymbolId> topological_sort(const Digraph& g)
{
    SymbolSet stuck;
    auto order = kahn(g, stuck);
    if (!stuck.empty())
        throw CycleError(find_cycle(g));
    return order;
}

std::vector<Chain> all_source_sink_paths(const Digraph& g)
{
    if (auto cycle = find_cycle(g); !cycle.empty())
        throw CycleError(std::move(cycle));

    std::vector<Chain> paths;
    Chain current;
    // Iterative DFS over (vertex, next successor) frames.
    struct Frame {
        SymbolId vertex;
        SymbolSet::const_iterator next;
    };
    for (SymbolId source : g.vertices()) {
        if (!g.predecessors(source).empty())
            continue;
        std::vector<Frame> stack{{source, g.successors(source).begin()}};
        current.assign(1, source);
        if (g.successors(source).empty())
            paths.push_back(current);
        while (!stack.empty()) {
            auto& top = stack.back();
            if (top.next == g.successors(top.vertex).end()) {
                stack.pop_back();
                current.pop_back();
                continue;
            }
            SymbolId u = *top.next++;
            current.push_back(u);
            if (g.successors(u).empty()) {
                paths.push_back(current);
                current.pop_back();
            } else {
                stack.push_back({u, g.successors(u).begin()});
            }
        }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

} // namespace sire
