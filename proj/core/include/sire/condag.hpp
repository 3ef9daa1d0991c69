#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sire/alphabet.hpp"
#include "sire/expression.hpp"
#include "sire/graphs.hpp"
#include "sire/orders.hpp"

namespace sire {

/// Mutable state of the incremental DAG builder.
///
/// Every break of a path splits it into a prefix and a suffix which are
/// recorded as a pair (p[i], q[i]). The same pair is also appended to (s, t),
/// which only hold the splits made while reading the current word.
class DagState {
public:
    explicit DagState(std::size_t alphabet_size);

    Digraph& graph() noexcept { return graph_; }
    const Digraph& graph() const noexcept { return graph_; }

    const std::vector<Chain>& p() const noexcept { return p_; }
    const std::vector<Chain>& q() const noexcept { return q_; }
    const std::vector<Chain>& s() const noexcept { return s_; }
    const std::vector<Chain>& t() const noexcept { return t_; }

    /// Clears s and t.
    void begin_word();
    void record_split(Chain prefix, Chain suffix);

    /// Some i has x in p[i] and y in q[i], or the other way round.
    bool recorded_across(SymbolId x, SymbolId y) const;

    /// Whether x belongs to s[j] / t[j].
    bool in_s(std::size_t j, SymbolId x) const { return member(s_mask_[j], x); }
    bool in_t(std::size_t j, SymbolId x) const { return member(t_mask_[j], x); }

    std::size_t alphabet_size() const noexcept { return n_; }

private:
    using Mask = std::vector<std::uint8_t>;

    bool member(const Mask& m, SymbolId x) const { return x < m.size() && m[x] != 0; }
    Mask mask_of(const Chain& c) const;

    std::size_t n_;
    Digraph graph_;
    std::vector<Chain> p_, q_, s_, t_;
    std::vector<Mask> p_mask_, q_mask_, s_mask_, t_mask_;
};

/// Tries to add the arc a -> b for the adjacent pair (a, b) of `word`.
///  - a path a ~> b already exists: nothing to do;
///  - a path b ~> a exists: unless (a, b) is already recorded across or
///    together, every such path is broken where `word` shows it out of order;
///  - otherwise the arc is added unless it would join some p[i] to q[i].
void add_or_break(DagState& state, std::span<const SymbolId> word, SymbolId a, SymbolId b);

/// Feeds one word left to right through add_or_break, propagating each
/// adjacent pair to the partners split off earlier in the same word.
void absorb_word(DagState& state, std::span<const SymbolId> word);

/// Removes from the shorter of two sequences (ties: the lexicographically
/// later one) whatever it shares with the other when a constraint pair
/// crosses them, then merges sequences with common symbols.
std::vector<SymbolSet> repair_partitions(std::vector<Chain> sequences, const PairSet& constraint);

struct ConDagResult {
    OrderSplit orders;
    DagState state;
    std::vector<Chain> paths;
    std::vector<SymbolSet> blocks;
    Cpos cpos;
    std::size_t evicted = 0;
    /// Blocks that still held a forbid pair after repair and had to be split.
    std::size_t separation_splits = 0;
    Sire sire;
};

ConDagResult build_dag(const ExampleSet& sample);

Sire con_dag(const ExampleSet& sample);

} // namespace sire
