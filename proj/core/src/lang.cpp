#include "sire/lang.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sire/errors.hpp"

namespace sire {

SymbolStats symbol_stats(const ExampleSet& sample)
{
    const std::size_t n = sample.alphabet().size();
    SymbolStats stats{std::vector<std::size_t>(n, std::numeric_limits<std::size_t>::max()),
                      std::vector<std::size_t>(n, 0)};
    std::vector<std::size_t> count(n, 0);
    for (const auto& word : sample.words()) {
        for (SymbolId x : word)
            ++count[x];
        for (std::size_t x = 0; x < n; ++x) {
            stats.min_count[x] = std::min(stats.min_count[x], count[x]);
            stats.max_count[x] = std::max(stats.max_count[x], count[x]);
            count[x] = 0;
        }
    }
    return stats;
}

Op operator_for_range(std::size_t min_count, std::size_t max_count) noexcept
{
    if (max_count <= 1)
        return min_count >= 1 ? Op::One : Op::Opt;
    return min_count >= 1 ? Op::Plus : Op::Star;
}

Sire infer_operators(const ExampleSet& sample, const Cpos& cpos)
{
    const Alphabet& alphabet = sample.alphabet();
    std::vector<bool> covered(alphabet.size(), false);
    for (const auto& chain : cpos.chains)
        for (SymbolId x : chain) {
            if (x >= alphabet.size() || covered[x])
                throw std::invalid_argument("chains do not partition the alphabet");
            covered[x] = true;
        }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        throw std::invalid_argument("chains do not cover the alphabet");

    SymbolStats stats = symbol_stats(sample);
    std::vector<Factor> factors;
    factors.reserve(cpos.chains.size());
    for (const auto& chain : cpos.chains) {
        if (chain.empty())
            throw std::invalid_argument("empty chain");
        std::vector<Term> terms;
        terms.reserve(chain.size());
        for (SymbolId x : chain)
            terms.push_back({alphabet.name(x), operator_for_range(stats.min_count[x], stats.max_count[x])});
        factors.emplace_back(std::move(terms));
    }
    return Sire(std::move(factors));
}

SireMatcher::SireMatcher(const Sire& sire)
{
    factor_ops_.reserve(sire.factors().size());
    for (std::size_t f = 0; f < sire.factors().size(); ++f) {
        const auto& terms = sire.factors()[f].terms();
        std::vector<Op> ops;
        ops.reserve(terms.size());
        for (std::size_t k = 0; k < terms.size(); ++k) {
            ops.push_back(terms[k].op);
            slots_.emplace(terms[k].symbol, Slot{f, k});
        }
        factor_ops_.push_back(std::move(ops));
    }
}

bool SireMatcher::accepts(std::span<const std::string> word) const
{
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const std::size_t factors = factor_ops_.size();
    std::vector<std::size_t> position(factors, none);
    std::vector<std::size_t> count(factors, 0);

    // Every position in [from, to) must tolerate zero occurrences.
    auto skippable = [&](const std::vector<Op>& ops, std::size_t from, std::size_t to) {
        for (std::size_t k = from; k < to; ++k)
            if (!admits(ops[k], 0))
                return false;
        return true;
    };

    for (const auto& symbol : word) {
        auto it = slots_.find(symbol);
        if (it == slots_.end())
            return false;
        auto [f, k] = it->second;
        const auto& ops = factor_ops_[f];
        if (position[f] == k) {
            ++count[f];
            continue;
        }
        if (position[f] != none && position[f] > k)
            return false;
        std::size_t from = 0;
        if (position[f] != none) {
            if (!admits(ops[position[f]], count[f]))
                return false;
            from = position[f] + 1;
        }
        if (!skippable(ops, from, k))
            return false;
        position[f] = k;
        count[f] = 1;
    }

    for (std::size_t f = 0; f < factors; ++f) {
        const auto& ops = factor_ops_[f];
        std::size_t from = 0;
        if (position[f] != none) {
            if (!admits(ops[position[f]], count[f]))
                return false;
            from = position[f] + 1;
        }
        if (!skippable(ops, from, ops.size()))
            return false;
    }
    return true;
}

bool sire_membership(std::span<const std::string> word, const Sire& sire)
{
    return SireMatcher(sire).accepts(word);
}

void for_each_chain_partition(std::span<const SymbolId> symbols,
                              const std::function<void(const Cpos&)>& visit,
                              std::size_t bound)
{
    if (symbols.size() > bound)
        throw BoundExceededError("chain partition enumeration", symbols.size(), bound);

    std::vector<SymbolId> order(symbols.begin(), symbols.end());
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end())
        throw std::invalid_argument("repeated symbol in chain partition enumeration");

    // Insert symbols in increasing order: each one either opens a new chain
    // (becoming its smallest member) or goes into any gap of an existing one.
    Cpos current;
    auto place = [&](auto&& self, std::size_t next) -> void {
        if (next == order.size()) {
            visit(current);
            return;
        }
        SymbolId x = order[next];
        // Deeper calls append chains, so re-index instead of holding references.
        const std::size_t open = current.chains.size();
        for (std::size_t c = 0; c < open; ++c) {
            for (std::size_t gap = 0; gap <= current.chains[c].size(); ++gap) {
                auto& chain = current.chains[c];
                chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(gap), x);
                self(self, next + 1);
                current.chains[c].erase(current.chains[c].begin() + static_cast<std::ptrdiff_t>(gap));
            }
        }
        current.chains.push_back({x});
        self(self, next + 1);
        current.chains.pop_back();
    };
    place(place, 0);
}

std::vector<Cpos> enumerate_chain_partitions(std::span<const SymbolId> symbols, std::size_t bound)
{
    std::vector<Cpos> out;
    for_each_chain_partition(symbols, [&](const Cpos& c) { out.push_back(c); }, bound);
    return out;
}

bool is_valid_chain(std::span<const SymbolId> chain, const PairSet& closure)
{
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j)
            if (closure.contains(chain[j], chain[i]))
                return false;
    return true;
}

OracleResult minimal_oracle(const ExampleSet& sample, std::size_t bound)
{
    const std::size_t n = sample.alphabet().size();
    if (n > bound)
        throw BoundExceededError("minimality oracle", n, bound);

    PairSet closure = transitive_closure(sample);
    std::vector<SymbolId> symbols(n);
    for (std::size_t i = 0; i < n; ++i)
        symbols[i] = static_cast<SymbolId>(i);

    OracleResult result;
    result.min_chains = std::numeric_limits<std::size_t>::max();
    for_each_chain_partition(
        symbols,
        [&](const Cpos& cpos) {
            if (cpos.chains.size() > result.min_chains)
                return;
            for (const auto& chain : cpos.chains)
                if (!is_valid_chain(chain, closure))
                    return;
            auto profile = cpos.length_profile();
            if (cpos.chains.size() < result.min_chains || profile > result.profile) {
                result.min_chains = cpos.chains.size();
                result.profile = std::move(profile);
                result.optima.assign(1, cpos);
            } else if (profile == result.profile) {
                result.optima.push_back(cpos);
            }
        },
        bound);
    return result;
}

} // namespace sire
