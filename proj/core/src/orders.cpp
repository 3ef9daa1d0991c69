#include "sire/orders.hpp"

#include <stdexcept>

namespace sire {

PairSet::PairSet(std::size_t alphabet_size)
    : n_(alphabet_size), bits_(alphabet_size * alphabet_size, false)
{}

bool PairSet::insert(SymbolId u, SymbolId v)
{
    if (u == v)
        throw std::invalid_argument("reflexive pair");
    if (u >= n_ || v >= n_)
        throw std::invalid_argument("pair outside the alphabet");
    auto bit = bits_[u * n_ + v];
    if (bit)
        return false;
    bit = true;
    ++count_;
    return true;
}

bool PairSet::erase(SymbolId u, SymbolId v)
{
    if (!contains(u, v))
        return false;
    bits_[u * n_ + v] = false;
    --count_;
    return true;
}

bool PairSet::contains(SymbolId u, SymbolId v) const noexcept
{
    return u < n_ && v < n_ && bits_[u * n_ + v];
}

std::vector<SymbolPair> PairSet::pairs() const
{
    std::vector<SymbolPair> out;
    out.reserve(count_);
    for (SymbolId u = 0; u < n_; ++u)
        for (SymbolId v = 0; v < n_; ++v)
            if (bits_[u * n_ + v])
                out.emplace_back(u, v);
    return out;
}

std::vector<SymbolId> PairSet::symbols() const
{
    std::vector<bool> used(n_, false);
    for (SymbolId u = 0; u < n_; ++u)
        for (SymbolId v = 0; v < n_; ++v)
            if (bits_[u * n_ + v])
                used[u] = used[v] = true;
    std::vector<SymbolId> out;
    for (SymbolId u = 0; u < n_; ++u)
        if (used[u])
            out.push_back(u);
    return out;
}

PairSet transitive_closure(const ExampleSet& sample)
{
    const std::size_t n = sample.alphabet().size();
    PairSet closure(n);
    std::vector<bool> seen(n, false);
    for (const auto& word : sample.words()) {
        // A symbol seen earlier in the word precedes every later position.
        std::vector<SymbolId> earlier;
        for (SymbolId x : word) {
            for (SymbolId y : earlier)
                if (y != x)
                    closure.insert(y, x);
            if (!seen[x]) {
                seen[x] = true;
                earlier.push_back(x);
            }
        }
        for (SymbolId y : earlier)
            seen[y] = false;
    }
    return closure;
}

OrderSplit split_orders(const ExampleSet& sample)
{
    OrderSplit out;
    out.closure = transitive_closure(sample);
    const std::size_t n = out.closure.alphabet_size();
    out.consistent = PairSet(n);
    out.constraint = PairSet(n);
    for (auto [u, v] : out.closure.pairs()) {
        if (out.closure.contains(v, u))
            out.constraint.insert(u, v);
        else
            out.consistent.insert(u, v);
    }
    return out;
}

} // namespace sire
