#include "sire/expression.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "sire/alphabet.hpp"
#include "sire/errors.hpp"

namespace sire {

char op_char(Op op) noexcept
{
    switch (op) {
    case Op::One: return '1';
    case Op::Opt: return '?';
    case Op::Plus: return '+';
    case Op::Star: return '*';
    }
    return '1';
}

Op op_from_char(char c)
{
    switch (c) {
    case '1': return Op::One;
    case '?': return Op::Opt;
    case '+': return Op::Plus;
    case '*': return Op::Star;
    default: throw std::invalid_argument(std::string("unknown operator '") + c + "'");
    }
}

bool admits(Op op, std::size_t count) noexcept
{
    switch (op) {
    case Op::One: return count == 1;
    case Op::Opt: return count <= 1;
    case Op::Plus: return count >= 1;
    case Op::Star: return true;
    }
    return false;
}

Factor::Factor(std::vector<Term> terms)
    : terms_(std::move(terms))
{
    if (terms_.empty())
        throw std::invalid_argument("a factor needs at least one symbol");
    std::set<std::string_view> seen;
    for (const auto& t : terms_) {
        if (!is_valid_symbol(t.symbol))
            throw std::invalid_argument("invalid symbol name '" + t.symbol + "'");
        if (!seen.insert(t.symbol).second)
            throw DuplicateSymbolError(t.symbol);
    }
}

const std::string& Factor::least_symbol() const
{
    return std::min_element(terms_.begin(), terms_.end(),
                            [](const Term& a, const Term& b) { return a.symbol < b.symbol; })
        ->symbol;
}

Sire::Sire(std::vector<Factor> factors)
    : factors_(std::move(factors))
{
    std::set<std::string_view> seen;
    for (const auto& f : factors_)
        for (const auto& t : f.terms())
            if (!seen.insert(t.symbol).second)
                throw DuplicateSymbolError(t.symbol);
    // Disjointness makes least symbols distinct, so this order is total.
    std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) {
        return a.least_symbol() < b.least_symbol();
    });
}

std::vector<std::string> Sire::symbols() const
{
    std::vector<std::string> out;
    for (const auto& f : factors_)
        for (const auto& t : f.terms())
            out.push_back(t.symbol);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_op(char c)
{
    return c == '?' || c == '+' || c == '*';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Sire parse()
    {
        skip_space();
        if (at_end())
            throw SyntaxError("empty expression", pos_);
        if (peek() == '(') {
            std::size_t start = pos_++;
            skip_space();
            if (at_end() || peek() != ')')
                throw SyntaxError("expected ')' of the empty expression", pos_);
            ++pos_;
            skip_space();
            if (!at_end())
                throw SyntaxError("unexpected text after '()'", start);
            return Sire{};
        }

        std::vector<Factor> factors;
        factors.push_back(parse_factor());
        while (!at_end()) {
            if (peek() != '&')
                throw SyntaxError(std::string("unexpected '") + peek() + "'", pos_);
            ++pos_;
            factors.push_back(parse_factor());
        }
        return Sire(std::move(factors));
    }

private:
    Factor parse_factor()
    {
        std::vector<Term> terms;
        skip_space();
        while (!at_end() && peek() != '&') {
            if (is_op(peek()))
                throw SyntaxError(std::string("operator '") + peek() + "' without a symbol", pos_);
            std::size_t start = pos_;
            while (!at_end() && !is_space(peek()) && peek() != '&' && !is_op(peek())) {
                if (!is_valid_symbol(text_.substr(pos_, 1)))
                    throw SyntaxError(std::string("unexpected '") + peek() + "'", pos_);
                ++pos_;
            }
            Term term{std::string(text_.substr(start, pos_ - start)), Op::One};
            skip_space();
            if (!at_end() && is_op(peek()))
                term.op = op_from_char(text_[pos_++]);
            terms.push_back(std::move(term));
            skip_space();
        }
        if (terms.empty())
            throw SyntaxError("empty factor", pos_);
        return Factor(std::move(terms));
    }

    void skip_space()
    {
        while (!at_end() && is_space(peek()))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Sire parse_sire(std::string_view text)
{
    return Parser(text).parse();
}

std::string format_sire(const Sire& sire)
{
    if (sire.empty())
        return "()";
    std::string out;
    for (const auto& f : sire.factors()) {
        if (!out.empty())
            out += " & ";
        bool first = true;
        for (const auto& t : f.terms()) {
            if (!first)
                out += ' ';
            first = false;
            out += t.symbol;
            if (t.op != Op::One)
                out += op_char(t.op);
        }
    }
    return out;
}

} // namespace sire
