#include "sire/condag.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "sire/conminer.hpp"
#include "sire/lang.hpp"

namespace sire {

DagState::DagState(std::size_t alphabet_size)
    : n_(alphabet_size)
{}

void DagState::begin_word()
{
    s_.clear();
    t_.clear();
    s_mask_.clear();
    t_mask_.clear();
}

DagState::Mask DagState::mask_of(const Chain& c) const
{
    Mask m(n_, 0);
    for (SymbolId x : c)
        if (x < n_)
            m[x] = 1;
    return m;
}

void DagState::record_split(Chain prefix, Chain suffix)
{
    Mask pm = mask_of(prefix);
    Mask qm = mask_of(suffix);
    p_.push_back(prefix);
    q_.push_back(suffix);
    p_mask_.push_back(pm);
    q_mask_.push_back(qm);
    s_.push_back(std::move(prefix));
    t_.push_back(std::move(suffix));
    s_mask_.push_back(std::move(pm));
    t_mask_.push_back(std::move(qm));
}

bool DagState::recorded_across(SymbolId x, SymbolId y) const
{
    for (std::size_t i = 0; i < p_.size(); ++i)
        if ((member(p_mask_[i], x) && member(q_mask_[i], y))
            || (member(q_mask_[i], x) && member(p_mask_[i], y)))
            return true;
    return false;
}

namespace {

/// Lexicographically first path from `from` to `to`, or empty.
Chain first_path(const Digraph& g, SymbolId from, SymbolId to)
{
    SymbolSet reaches = g.ancestors(to);
    if (from == to || !reaches.contains(from))
        return {};
    Chain path{from};
    SymbolId v = from;
    while (v != to) {
        const auto& next = g.successors(v);
        v = *std::find_if(next.begin(), next.end(), [&](SymbolId u) { return reaches.contains(u); });
        path.push_back(v);
    }
    return path;
}

/// Adding from -> to would connect a member of some p[i] with a member of
/// q[i] (in either direction).
bool joins_split(const DagState& state, SymbolId from, SymbolId to)
{
    const auto& g = state.graph();
    SymbolSet up = g.ancestors(from);
    SymbolSet down = g.descendants(to);
    auto touches = [](const Chain& c, const SymbolSet& set) {
        return std::any_of(c.begin(), c.end(), [&](SymbolId x) { return set.contains(x); });
    };
    for (std::size_t i = 0; i < state.p().size(); ++i) {
        const Chain& p = state.p()[i];
        const Chain& q = state.q()[i];
        if ((touches(p, up) && touches(q, down)) || (touches(q, up) && touches(p, down)))
            return true;
    }
    return false;
}

/// Breaks every path start ~> end. The cut goes in front of the first
/// path vertex after `start` that occurs in `word`; a path with no such
/// vertex cannot be placed and ends the surgery.
void break_paths(DagState& state, std::span<const SymbolId> word, SymbolId start, SymbolId end)
{
    Digraph& g = state.graph();
    // Each surgery removes an arc lying on a start ~> end path and adds none
    // that could lie on one, so this bound is never reached on a DAG.
    std::size_t budget = g.arc_count() + 1;
    while (budget-- > 0) {
        Chain path = first_path(g, start, end);
        if (path.empty())
            return;

        std::size_t cut = 0;
        for (SymbolId x : word) {
            auto it = std::find(path.begin() + 1, path.end(), x);
            if (it != path.end()) {
                cut = static_cast<std::size_t>(it - path.begin());
                break;
            }
        }
        if (cut == 0)
            return;

        SymbolId tail = path[cut - 1];
        SymbolId head = path[cut];
        g.remove_arc(tail, head);
        SymbolSet before = g.predecessors(start);
        SymbolSet after = g.successors(end);
        for (SymbolId beta : before)
            if (beta != head && !g.has_path(head, beta))
                g.add_arc(beta, head);
        for (SymbolId gamma : after)
            if (gamma != tail && !g.has_path(gamma, tail))
                g.add_arc(tail, gamma);

        state.record_split(Chain(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(cut)),
                           Chain(path.begin() + static_cast<std::ptrdiff_t>(cut), path.end()));
    }
}

} // namespace

void add_or_break(DagState& state, std::span<const SymbolId> word, SymbolId a, SymbolId b)
{
    if (a == b)
        return;
    Digraph& g = state.graph();
    g.add_vertex(a);
    g.add_vertex(b);
    if (g.has_path(a, b))
        return;
    if (g.has_path(b, a)) {
        if (state.recorded_across(a, b))
            return;
        break_paths(state, word, b, a);
        return;
    }
    if (joins_split(state, a, b))
        return;
    g.add_arc(a, b);
}

void absorb_word(DagState& state, std::span<const SymbolId> word)
{
    state.begin_word();
    for (SymbolId x : word)
        state.graph().add_vertex(x);

    auto attempt = [&](SymbolId x, SymbolId y) {
        if (x != y && !state.recorded_across(x, y))
            add_or_break(state, word, x, y);
    };

    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        SymbolId x = word[i];
        SymbolId y = word[i + 1];
        // Splits recorded at earlier positions of this word; x was split from
        // the partner chain, so the partner's last symbol also precedes y.
        const std::size_t splits = state.s().size();
        attempt(x, y);
        for (std::size_t j = 0; j < splits; ++j) {
            if (state.in_s(j, x))
                attempt(state.t()[j].back(), y);
            if (state.in_t(j, x))
                attempt(state.s()[j].back(), y);
        }
    }
}

std::vector<SymbolSet> repair_partitions(std::vector<Chain> sequences, const PairSet& constraint)
{
    std::stable_sort(sequences.begin(), sequences.end(), [](const Chain& a, const Chain& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });

    auto crosses = [&](const Chain& a, const Chain& b) {
        for (SymbolId x : a)
            for (SymbolId y : b)
                if (constraint.contains(x, y))
                    return true;
        return false;
    };

    for (std::size_t i = 0; i < sequences.size(); ++i) {
        for (std::size_t j = i + 1; j < sequences.size(); ++j) {
            Chain& a = sequences[i];
            Chain& b = sequences[j];
            if (!crosses(a, b))
                continue;
            bool trim_b = b.size() < a.size() || (b.size() == a.size() && a < b);
            Chain& trimmed = trim_b ? b : a;
            const Chain& kept = trim_b ? a : b;
            std::erase_if(trimmed, [&](SymbolId x) {
                return std::find(kept.begin(), kept.end(), x) != kept.end();
            });
        }
    }

    // Merge sequences that share a symbol.
    std::vector<std::size_t> parent(sequences.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<SymbolId, std::size_t> owner;
    for (std::size_t i = 0; i < sequences.size(); ++i)
        for (SymbolId x : sequences[i]) {
            auto [it, fresh] = owner.emplace(x, i);
            if (!fresh)
                parent[root(i)] = root(it->second);
        }

    std::map<std::size_t, SymbolSet> merged;
    for (std::size_t i = 0; i < sequences.size(); ++i)
        if (!sequences[i].empty())
            merged[root(i)].insert(sequences[i].begin(), sequences[i].end());

    std::vector<SymbolSet> blocks;
    for (auto& [r, block] : merged)
        blocks.push_back(std::move(block));
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

ConDagResult build_dag(const ExampleSet& sample)
{
    const std::size_t n = sample.alphabet().size();
    ConDagResult result{split_orders(sample), DagState(n), {}, {}, {}, 0, 0, {}};

    for (const auto& word : sample.words()) {
        absorb_word(result.state, word);
        assert(find_cycle(result.state.graph()).empty());
    }

    result.paths = all_source_sink_paths(result.state.graph());
    std::vector<SymbolSet> repaired = repair_partitions(result.paths, result.orders.constraint);

    SymbolSet covered;
    for (const auto& block : repaired)
        covered.insert(block.begin(), block.end());
    for (std::size_t x = 0; x < n; ++x)
        if (!covered.contains(static_cast<SymbolId>(x)))
            repaired.push_back({static_cast<SymbolId>(x)});

    // Merging through a third sequence can reunite a forbid pair; split such
    // blocks along their own constraint graph.
    for (auto& block : repaired) {
        UGraph conflicts;
        for (SymbolId x : block) {
            conflicts.add_vertex(x);
            for (SymbolId y : block)
                if (x < y && result.orders.constraint.contains(x, y))
                    conflicts.add_edge(x, y);
        }
        if (conflicts.edge_count() == 0) {
            result.blocks.push_back(std::move(block));
            continue;
        }
        ++result.separation_splits;
        for (auto& part : decompose_into_independent_sets(conflicts, approx_mis_solver()))
            result.blocks.push_back(std::move(part));
    }

    OrderedGroups ordered = order_groups(result.blocks, result.orders.consistent);
    result.cpos = std::move(ordered.cpos);
    result.evicted = ordered.evicted;
    result.sire = infer_operators(sample, result.cpos);
    return result;
}

Sire con_dag(const ExampleSet& sample)
{
    return build_dag(sample).sire;
}

} // namespace sire
