#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sire/errors.hpp"
#include "sire/graphs.hpp"

namespace sire {

namespace {

/// Larger set wins; equal sizes go to the lexicographically smaller one.
const SymbolSet& better(const SymbolSet& a, const SymbolSet& b)
{
    if (a.size() != b.size())
        return a.size() > b.size() ? a : b;
    return b < a ? b : a;
}

struct Ramsey {
    SymbolSet clique;
    SymbolSet independent;
};

// Pivot on the smallest vertex, recurse into its neighbourhood and its
// non-neighbourhood. The pivot joins the clique found among its neighbours
// and the independent set found among its non-neighbours.
Ramsey ramsey(const UGraph& g, const SymbolSet& vertices)
{
    if (vertices.empty())
        return {};
    SymbolId pivot = *vertices.begin();
    SymbolSet near, far;
    for (SymbolId u : vertices) {
        if (u == pivot)
            continue;
        (g.adjacent(pivot, u) ? near : far).insert(u);
    }
    Ramsey in_near = ramsey(g, near);
    Ramsey in_far = ramsey(g, far);
    in_near.clique.insert(pivot);
    in_far.independent.insert(pivot);
    return {better(in_near.clique, in_far.clique),
            better(in_near.independent, in_far.independent)};
}

} // namespace

SymbolSet approx_max_independent_set(const UGraph& g)
{
    if (g.empty())
        throw std::invalid_argument("maximum independent set of an empty graph");

    SymbolSet remaining = g.vertices();
    SymbolSet best;
    while (!remaining.empty()) {
        Ramsey r = ramsey(g, remaining);
        best = better(best, r.independent);
        for (SymbolId v : r.clique)
            remaining.erase(v);
    }

    for (SymbolId v : g.vertices()) {
        if (best.contains(v))
            continue;
        bool free = true;
        for (SymbolId u : g.neighbors(v))
            if (best.contains(u)) {
                free = false;
                break;
            }
        if (free)
            best.insert(v);
    }
    return best;
}

namespace {

using Bits = std::uint64_t;

/// Vertex i of the graph is bit i; `compatible[i]` holds its non-neighbours.
struct BitGraph {
    std::vector<SymbolId> label;
    std::vector<Bits> compatible;
    Bits all = 0;

    SymbolSet spell(Bits set) const
    {
        SymbolSet out;
        for (Bits rest = set; rest; rest &= rest - 1)
            out.insert(out.end(), label[static_cast<std::size_t>(std::countr_zero(rest))]);
        return out;
    }
};

BitGraph to_bits(const UGraph& g, std::size_t bound, const char* what)
{
    const std::size_t n = g.vertex_count();
    const std::size_t limit = std::min<std::size_t>(bound, 64);
    if (n > limit)
        throw BoundExceededError(what, n, limit);

    BitGraph b;
    const SymbolSet vertices = g.vertices();
    b.label.assign(vertices.begin(), vertices.end());
    b.all = n == 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
    b.compatible.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !g.adjacent(b.label[i], b.label[j]))
                b.compatible[i] |= Bits{1} << j;
    return b;
}

// Independent sets of g are the cliques of its complement. Bron-Kerbosch
// with Tomita pivoting; `emit` sees every maximal extension of `chosen`
// inside `candidates`.
void maximal_sets(const BitGraph& b, Bits chosen, Bits candidates, Bits excluded,
                  const std::function<void(Bits)>& emit)
{
    if (!candidates && !excluded) {
        emit(chosen);
        return;
    }
    std::size_t pivot = 0;
    int best = -1;
    for (Bits rest = candidates | excluded; rest; rest &= rest - 1) {
        auto u = static_cast<std::size_t>(std::countr_zero(rest));
        int score = std::popcount(candidates & b.compatible[u]);
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (Bits rest = candidates & ~b.compatible[pivot]; rest; rest &= rest - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(rest));
        Bits bit = Bits{1} << v;
        maximal_sets(b, chosen | bit, candidates & b.compatible[v], excluded & b.compatible[v], emit);
        candidates &= ~bit;
        excluded |= bit;
    }
}

std::vector<std::size_t> profile(const std::vector<Bits>& sets)
{
    std::vector<std::size_t> sizes;
    for (Bits s : sets)
        sizes.push_back(static_cast<std::size_t>(std::popcount(s)));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

/// Fewer sets first, then the lexicographically larger size profile.
bool fitter(const std::vector<Bits>& a, const std::vector<Bits>& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return profile(b) < profile(a);
}

} // namespace

void for_each_maximal_independent_set(const UGraph& g,
                                      const std::function<void(const SymbolSet&)>& visit,
                                      std::size_t bound)
{
    BitGraph b = to_bits(g, bound, "exact independent-set enumeration");
    if (b.label.empty()) {
        visit({});
        return;
    }
    maximal_sets(b, 0, b.all, 0, [&](Bits set) { visit(b.spell(set)); });
}

std::vector<SymbolSet> minimum_independent_set_partition(const UGraph& g, std::size_t bound)
{
    BitGraph b = to_bits(g, bound, "exact independent-set partition");

    // Some class of an optimal partition holds the lowest remaining vertex
    // and may be grown to a maximal independent set of what remains.
    std::unordered_map<Bits, std::vector<Bits>> memo;
    auto solve = [&](auto&& self, Bits remaining) -> std::vector<Bits> {
        if (!remaining)
            return {};
        if (auto it = memo.find(remaining); it != memo.end())
            return it->second;
        auto v = static_cast<std::size_t>(std::countr_zero(remaining));
        std::vector<Bits> best;
        bool found = false;
        maximal_sets(b, Bits{1} << v, remaining & b.compatible[v], 0, [&](Bits set) {
            std::vector<Bits> plan = self(self, remaining & ~set);
            plan.push_back(set);
            if (!found || fitter(plan, best)) {
                best = std::move(plan);
                found = true;
            }
        });
        memo.emplace(remaining, best);
        return best;
    };

    std::vector<SymbolSet> out;
    for (Bits set : solve(solve, b.all))
        out.push_back(b.spell(set));
    std::sort(out.begin(), out.end(), [](const SymbolSet& x, const SymbolSet& y) {
        return x.size() != y.size() ? x.size() > y.size() : x < y;
    });
    return out;
}

SymbolSet exact_max_independent_set(const UGraph& g, std::size_t bound)
{
    bool found = false;
    SymbolSet best;
    for_each_maximal_independent_set(
        g,
        [&](const SymbolSet& s) {
            if (!found) {
                best = s;
                found = true;
            } else {
                best = better(best, s);
            }
        },
        bound);
    return best;
}

MisSolver approx_mis_solver()
{
    return [](const UGraph& g) { return approx_max_independent_set(g); };
}

MisSolver exact_mis_solver(std::size_t bound)
{
    return [bound](const UGraph& g) { return exact_max_independent_set(g, bound); };
}

std::vector<SymbolSet> decompose_into_independent_sets(const UGraph& g, const MisSolver& solver)
{
    std::vector<SymbolSet> out;
    UGraph residual = g;
    while (!residual.empty()) {
        SymbolSet picked = solver(residual);
        if (picked.empty())
            throw std::logic_error("independent-set solver returned an empty set");
        residual = residual.without(picked);
        out.push_back(std::move(picked));
    }
    return out;
}

} // namespace sire
