#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "sire/alphabet.hpp"

namespace sire {

enum class WordMode {
    Tokens, ///< whitespace-separated symbols per line
    Chars,  ///< every code point of a line is a symbol
};

/// One word per line; blank lines are empty words and a final newline is
/// ignored. Throws InputError on I/O failure, an empty input or an invalid
/// symbol.
ExampleSet read_words(std::istream& in, WordMode mode);
ExampleSet read_words(const std::filesystem::path& path, WordMode mode);

/// Child-element sequences per element name.
struct XmlCorpus {
    std::map<std::string, ExampleSet> elements;
    /// Elements that had both element children and non-blank text.
    std::size_t mixed_content = 0;
};

/// Streams each document once. Every element occurrence contributes the
/// sequence of its child element names (qualified names verbatim) to its
/// own name's sample. Throws InputError with line and column on malformed
/// XML.
XmlCorpus read_xml_corpus(std::span<const std::filesystem::path> paths);

/// Same, for in-memory documents (one string per document).
XmlCorpus read_xml_documents(std::span<const std::string> documents);

} // namespace sire
