#include "sire/alphabet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sire {

namespace {

bool is_symbol_byte(unsigned char c)
{
    if (c >= 0x80)
        return true;
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))
        return true;
    return c == '.' || c == '_' || c == '-' || c == ':';
}

} // namespace

bool is_valid_symbol(std::string_view name)
{
    return !name.empty()
        && std::all_of(name.begin(), name.end(),
                       [](char c) { return is_symbol_byte(static_cast<unsigned char>(c)); });
}

Alphabet::Alphabet(std::vector<std::string> names)
    : names_(std::move(names))
{
    for (const auto& n : names_)
        if (!is_valid_symbol(n))
            throw std::invalid_argument("invalid symbol name '" + n + "'");
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const
{
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name)
        return std::nullopt;
    return static_cast<SymbolId>(it - names_.begin());
}

SymbolId Alphabet::id(std::string_view name) const
{
    if (auto found = find(name))
        return *found;
    throw std::out_of_range("symbol '" + std::string(name) + "' is not in the alphabet");
}

ExampleSet::ExampleSet(const std::vector<std::vector<std::string>>& words)
{
    if (words.empty())
        throw std::invalid_argument("empty sample");

    std::set<std::string> seen;
    for (const auto& w : words)
        seen.insert(w.begin(), w.end());
    alphabet_ = Alphabet({seen.begin(), seen.end()});

    words_.reserve(words.size());
    for (const auto& w : words) {
        Word encoded;
        encoded.reserve(w.size());
        for (const auto& s : w)
            encoded.push_back(alphabet_.id(s));
        words_.push_back(std::move(encoded));
    }
}

ExampleSet ExampleSet::from_chars(const std::vector<std::string>& words)
{
    std::vector<std::vector<std::string>> split;
    split.reserve(words.size());
    for (const auto& w : words)
        split.push_back(split_code_points(w));
    return ExampleSet(split);
}

std::vector<std::string> ExampleSet::spell(std::span<const SymbolId> word) const
{
    std::vector<std::string> out;
    out.reserve(word.size());
    for (SymbolId id : word)
        out.push_back(alphabet_.name(id));
    return out;
}

std::vector<std::string> split_code_points(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 1;
        if (lead >= 0xF0)
            len = 4;
        else if (lead >= 0xE0)
            len = 3;
        else if (lead >= 0xC0)
            len = 2;
        len = std::min(len, text.size() - i);
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

std::vector<std::size_t> Cpos::length_profile() const
{
    std::vector<std::size_t> profile;
    profile.reserve(chains.size());
    for (const auto& c : chains)
        profile.push_back(c.size());
    std::sort(profile.begin(), profile.end(), std::greater<>());
    return profile;
}

std::string format_cpos(const Cpos& cpos, const Alphabet& alphabet)
{
    std::string out;
    for (const auto& chain : cpos.chains) {
        if (!out.empty())
            out += ' ';
        out += '[';
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i)
                out += ' ';
            out += alphabet.name(chain[i]);
        }
        out += ']';
    }
    return out;
}

} // namespace sire
