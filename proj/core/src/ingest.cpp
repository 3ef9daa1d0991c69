#include "sire/ingest.hpp"

#include <expat.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <memory>
#include <sstream>
#include <vector>

#include "sire/errors.hpp"

namespace sire {

namespace {

std::vector<std::string> tokens_of(const std::string& line, std::size_t line_no)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        if (!is_valid_symbol(token))
            throw InputError("line " + std::to_string(line_no) + ": invalid symbol '" + token + "'");
        out.push_back(std::move(token));
    }
    return out;
}

std::vector<std::string> chars_of(const std::string& line, std::size_t line_no)
{
    auto out = split_code_points(line);
    for (const auto& c : out)
        if (!is_valid_symbol(c))
            throw InputError("line " + std::to_string(line_no) + ": invalid symbol character '" + c + "'");
    return out;
}

} // namespace

ExampleSet read_words(std::istream& in, WordMode mode)
{
    std::vector<std::vector<std::string>> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        words.push_back(mode == WordMode::Tokens ? tokens_of(line, line_no) : chars_of(line, line_no));
    }
    if (in.bad())
        throw InputError("read error");
    if (words.empty())
        throw InputError("empty sample");
    return ExampleSet(words);
}

ExampleSet read_words(const std::filesystem::path& path, WordMode mode)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path.string() + "'");
    try {
        return read_words(in, mode);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

namespace {

class ChildSequenceCollector {
public:
    void parse(std::istream& in, const std::string& source)
    {
        std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(XML_ParserCreate(nullptr),
                                                                            &XML_ParserFree);
        if (!parser)
            throw std::bad_alloc();
        XML_SetUserData(parser.get(), this);
        XML_SetElementHandler(parser.get(), &ChildSequenceCollector::on_start, &ChildSequenceCollector::on_end);
        XML_SetCharacterDataHandler(parser.get(), &ChildSequenceCollector::on_text);
        parser_ = parser.get();
        open_.clear();
        error_.clear();

        std::vector<char> buffer(1 << 16);
        bool done = false;
        while (!done) {
            in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
            auto got = in.gcount();
            if (in.bad())
                throw InputError(source + ": read error");
            done = got == 0 || in.eof();
            if (XML_Parse(parser.get(), buffer.data(), static_cast<int>(got), done) == XML_STATUS_ERROR) {
                if (!error_.empty())
                    throw InputError(source + ": " + error_);
                throw InputError(source + ":" + std::to_string(XML_GetCurrentLineNumber(parser.get())) + ":"
                                 + std::to_string(XML_GetCurrentColumnNumber(parser.get()) + 1) + ": "
                                 + XML_ErrorString(XML_GetErrorCode(parser.get())));
            }
        }
    }

    XmlCorpus finish()
    {
        XmlCorpus corpus;
        corpus.mixed_content = mixed_;
        for (auto& [name, words] : words_)
            corpus.elements.emplace(name, ExampleSet(words));
        return corpus;
    }

private:
    struct Open {
        std::string name;
        std::vector<std::string> children;
        bool has_text = false;
    };

    static void on_start(void* self, const XML_Char* name, const XML_Char**)
    {
        auto& c = *static_cast<ChildSequenceCollector*>(self);
        if (!c.open_.empty())
            c.open_.back().children.emplace_back(name);
        c.open_.push_back({name, {}, false});
    }

    static void on_end(void* self, const XML_Char*)
    {
        auto& c = *static_cast<ChildSequenceCollector*>(self);
        Open top = std::move(c.open_.back());
        c.open_.pop_back();
        if (top.has_text && !top.children.empty())
            ++c.mixed_;
        for (const auto& child : top.children)
            if (!is_valid_symbol(child)) {
                c.error_ = "element name '" + child + "' is not a usable symbol";
                XML_StopParser(c.parser_, XML_FALSE);
                return;
            }
        c.words_[top.name].push_back(std::move(top.children));
    }

    static void on_text(void* self, const XML_Char* text, int len)
    {
        auto& c = *static_cast<ChildSequenceCollector*>(self);
        if (c.open_.empty() || c.open_.back().has_text)
            return;
        if (std::any_of(text, text + len, [](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); }))
            c.open_.back().has_text = true;
    }

    XML_Parser parser_ = nullptr;
    std::string error_;
    std::vector<Open> open_;
    std::map<std::string, std::vector<std::vector<std::string>>> words_;
    std::size_t mixed_ = 0;
};

} // namespace

XmlCorpus read_xml_corpus(std::span<const std::filesystem::path> paths)
{
    ChildSequenceCollector collector;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw InputError("cannot open '" + path.string() + "'");
        collector.parse(in, path.string());
    }
    return collector.finish();
}

XmlCorpus read_xml_documents(std::span<const std::string> documents)
{
    ChildSequenceCollector collector;
    std::size_t index = 0;
    for (const auto& doc : documents) {
        std::istringstream in(doc);
        collector.parse(in, "document " + std::to_string(++index));
    }
    return collector.finish();
}

} // namespace sire
