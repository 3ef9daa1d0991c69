#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sire {

/// Malformed SIRE text. `position` is a byte offset into the input.
class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at offset " + std::to_string(position)),
          position_(position)
    {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A symbol occurs twice in one expression.
class DuplicateSymbolError : public std::invalid_argument {
public:
    explicit DuplicateSymbolError(const std::string& symbol)
        : std::invalid_argument("symbol '" + symbol + "' occurs more than once"),
          symbol_(symbol)
    {}

    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

/// An exponential routine was asked to work past its configured size limit.
class BoundExceededError : public std::length_error {
public:
    BoundExceededError(const std::string& what, std::size_t size, std::size_t bound)
        : std::length_error(what + ": size " + std::to_string(size) + " exceeds bound "
                            + std::to_string(bound)),
          size_(size), bound_(bound)
    {}

    std::size_t size() const noexcept { return size_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t size_;
    std::size_t bound_;
};

/// Unreadable or malformed input (word files, XML).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sire
