#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sire::test {

ExampleSet chars(std::initializer_list<std::string> words)
{
    return ExampleSet::from_chars(std::vector<std::string>(words));
}

namespace {

std::vector<std::string> tokens(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

} // namespace

PairSet pairs(const Alphabet& alphabet, std::string_view text)
{
    PairSet out(alphabet.size());
    for (const auto& t : tokens(text)) {
        if (t.size() != 2)
            throw std::invalid_argument("pair token '" + t + "'");
        out.insert(alphabet.id(t.substr(0, 1)), alphabet.id(t.substr(1, 1)));
    }
    return out;
}

PairSet pairs(std::size_t n, std::string_view text)
{
    PairSet out(n);
    for (const auto& t : tokens(text))
        out.insert(id(t.at(0)), id(t.at(1)));
    return out;
}

SymbolSet letters(std::string_view s)
{
    SymbolSet out;
    for (char c : s)
        out.insert(id(c));
    return out;
}

Chain chain(std::string_view s)
{
    Chain out;
    for (char c : s)
        out.push_back(id(c));
    return out;
}

std::string spell(const Chain& c)
{
    std::string out;
    for (SymbolId x : c)
        out += static_cast<char>('a' + x);
    return out;
}

std::string spell(const SymbolSet& s)
{
    return spell(Chain(s.begin(), s.end()));
}

std::vector<std::string> spell_chains(const std::vector<Chain>& chains, const Alphabet& alphabet)
{
    std::vector<std::string> out;
    for (const auto& c : chains) {
        std::string word;
        for (SymbolId x : c)
            word += alphabet.name(x);
        out.push_back(word);
    }
    return out;
}

std::vector<std::string> spell(const Cpos& cpos, const Alphabet& alphabet)
{
    return spell_chains(cpos.chains, alphabet);
}

UGraph ugraph(std::string_view vertices, std::string_view edges)
{
    UGraph g;
    for (char c : vertices)
        g.add_vertex(id(c));
    for (const auto& t : tokens(edges))
        g.add_edge(id(t.at(0)), id(t.at(1)));
    return g;
}

Digraph digraph(std::string_view vertices, std::string_view arcs)
{
    Digraph g;
    for (char c : vertices)
        g.add_vertex(id(c));
    for (const auto& t : tokens(arcs))
        g.add_arc(id(t.at(0)), id(t.at(1)));
    return g;
}

PairSet closure_by_definition(const ExampleSet& sample)
{
    PairSet out(sample.alphabet().size());
    for (const auto& w : sample.words())
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] != w[j])
                    out.insert(w[i], w[j]);
    return out;
}

std::size_t max_independent_set_size(const UGraph& g)
{
    SymbolSet vs = g.vertices();
    std::vector<SymbolId> v(vs.begin(), vs.end());
    const std::size_t n = v.size();
    if (n > 20)
        throw std::invalid_argument("brute-force MIS is limited to 20 vertices");
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1u) && (mask >> j & 1u) && g.adjacent(v[i], v[j]))
                    ok = false;
        if (ok)
            best = size;
    }
    return best;
}

std::size_t chromatic_number(const UGraph& g)
{
    SymbolSet vs = g.vertices();
    std::vector<SymbolId> v(vs.begin(), vs.end());
    std::vector<std::size_t> colour(v.size());
    auto fits = [&](auto&& self, std::size_t i, std::size_t k) -> bool {
        if (i == v.size())
            return true;
        for (std::size_t c = 0; c < k; ++c) {
            bool clash = false;
            for (std::size_t j = 0; j < i && !clash; ++j)
                clash = colour[j] == c && g.adjacent(v[i], v[j]);
            if (clash)
                continue;
            colour[i] = c;
            if (self(self, i + 1, k))
                return true;
        }
        return false;
    };
    for (std::size_t k = 0;; ++k)
        if (fits(fits, 0, k))
            return k;
}

namespace {

std::uint64_t factorial(unsigned n)
{
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

std::uint64_t binomial(unsigned n, unsigned k)
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

} // namespace

std::uint64_t chain_partition_count(unsigned n)
{
    if (n == 0)
        return 1;
    std::uint64_t total = 0;
    for (unsigned k = 1; k <= n; ++k)
        total += binomial(n - 1, k - 1) * factorial(n) / factorial(k);
    return total;
}

std::uint64_t ordered_bell(unsigned n)
{
    std::vector<std::uint64_t> a(n + 1, 0);
    a[0] = 1;
    for (unsigned m = 1; m <= n; ++m)
        for (unsigned k = 1; k <= m; ++k)
            a[m] += binomial(m, k) * a[m - k];
    return a[n];
}

std::set<std::string> shuffle(const std::string& u, const std::string& v)
{
    if (u.empty())
        return {v};
    if (v.empty())
        return {u};
    std::set<std::string> out;
    for (const auto& rest : shuffle(u.substr(1), v))
        out.insert(u[0] + rest);
    for (const auto& rest : shuffle(u, v.substr(1)))
        out.insert(v[0] + rest);
    return out;
}

namespace {

std::vector<std::string> factor_words(const Factor& f, unsigned max_count)
{
    std::vector<std::string> words{""};
    for (const auto& t : f.terms()) {
        if (t.symbol.size() != 1)
            throw std::invalid_argument("expand_language needs single-character symbols");
        std::vector<std::string> next;
        for (const auto& w : words)
            for (unsigned k = 0; k <= max_count; ++k)
                if (admits(t.op, k))
                    next.push_back(w + std::string(k, t.symbol[0]));
        words = std::move(next);
    }
    return words;
}

} // namespace

std::unordered_set<std::string> expand_language(const Sire& sire, unsigned max_count)
{
    std::unordered_set<std::string> lang{""};
    for (const auto& f : sire.factors()) {
        std::unordered_set<std::string> next;
        auto words = factor_words(f, max_count);
        for (const auto& x : lang)
            for (const auto& y : words)
                for (const auto& s : shuffle(x, y))
                    next.insert(s);
        lang = std::move(next);
    }
    return lang;
}

std::vector<std::string> bounded_words(std::string_view symbols, unsigned max_count)
{
    std::vector<std::string> out;
    std::vector<unsigned> used(symbols.size(), 0);
    std::string current;
    auto grow = [&](auto&& self) -> void {
        out.push_back(current);
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            if (used[i] == max_count)
                continue;
            ++used[i];
            current.push_back(symbols[i]);
            self(self);
            current.pop_back();
            --used[i];
        }
    };
    grow(grow);
    return out;
}

std::vector<std::string> split(const std::string& word)
{
    std::vector<std::string> out;
    for (char c : word)
        out.emplace_back(1, c);
    return out;
}

Sire random_sire(std::mt19937_64& rng, std::string_view symbols, unsigned max_factors)
{
    std::string order(symbols);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<unsigned> pick_factor(0, std::max(1u, max_factors) - 1);
    std::uniform_int_distribution<int> pick_op(0, 3);
    std::map<unsigned, std::vector<Term>> groups;
    for (char c : order)
        groups[pick_factor(rng)].push_back({std::string(1, c), static_cast<Op>(pick_op(rng))});
    std::vector<Factor> factors;
    for (auto& [k, terms] : groups)
        factors.emplace_back(std::move(terms));
    return Sire(std::move(factors));
}

std::vector<std::string> random_member(std::mt19937_64& rng, const Sire& sire, unsigned max_repeat)
{
    std::vector<std::vector<std::string>> parts;
    for (const auto& f : sire.factors()) {
        std::vector<std::string> part;
        for (const auto& t : f.terms()) {
            unsigned lo = admits(t.op, 0) ? 0 : 1;
            unsigned hi = admits(t.op, 2) ? max_repeat : 1;
            unsigned k = std::uniform_int_distribution<unsigned>(lo, std::max(lo, hi))(rng);
            part.insert(part.end(), k, t.symbol);
        }
        parts.push_back(std::move(part));
    }
    std::vector<std::size_t> next(parts.size(), 0);
    std::size_t remaining = 0;
    for (const auto& p : parts)
        remaining += p.size();
    std::vector<std::string> word;
    while (remaining > 0) {
        std::size_t r = std::uniform_int_distribution<std::size_t>(0, remaining - 1)(rng);
        for (std::size_t f = 0; f < parts.size(); ++f) {
            std::size_t left = parts[f].size() - next[f];
            if (r < left) {
                word.push_back(parts[f][next[f]++]);
                break;
            }
            r -= left;
        }
        --remaining;
    }
    return word;
}

ExampleSet random_sample(std::mt19937_64& rng, unsigned max_alphabet, unsigned max_words, unsigned max_len)
{
    const std::string letters_pool = "abcdefghijklmnopqrstuvwxyz";
    unsigned k = std::uniform_int_distribution<unsigned>(1, max_alphabet)(rng);
    unsigned count = std::uniform_int_distribution<unsigned>(1, max_words)(rng);
    std::string symbols = letters_pool.substr(0, k);
    std::vector<std::vector<std::string>> words;

    if (std::bernoulli_distribution(0.5)(rng)) {
        std::uniform_int_distribution<unsigned> len(0, max_len);
        std::uniform_int_distribution<std::size_t> sym(0, k - 1);
        for (unsigned i = 0; i < count; ++i) {
            std::vector<std::string> w;
            for (unsigned j = len(rng); j > 0; --j)
                w.emplace_back(1, symbols[sym(rng)]);
            words.push_back(std::move(w));
        }
    } else {
        Sire truth = random_sire(rng, symbols, 1 + k / 2);
        for (unsigned i = 0; i < count; ++i) {
            auto w = random_member(rng, truth, 2);
            if (w.size() > max_len)
                w.resize(max_len);
            words.push_back(std::move(w));
        }
    }
    return ExampleSet(words);
}

} // namespace sire::test
