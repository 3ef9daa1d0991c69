#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "sire/condag.hpp"
#include "sire/conminer.hpp"
#include "sire/errors.hpp"
#include "sire/expression.hpp"
#include "sire/ingest.hpp"
#include "sire/lang.hpp"

namespace sire::cli {

namespace {

using json = nlohmann::json;

/// Key used for plain word files in JSON output.
constexpr const char* kSampleKey = "sample";

struct InputOptions {
    std::vector<std::string> inputs;
    std::string format = "tokens";
    std::string element;
};

struct Samples {
    bool xml = false;
    std::map<std::string, ExampleSet> by_name;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_input_options(CLI::App& cmd, InputOptions& opts)
{
    cmd.add_option("--input", opts.inputs, "Input file(s); '-' reads standard input")->required();
    cmd.add_option("--format", opts.format, "Input format")
        ->check(CLI::IsMember({"tokens", "chars", "xml"}))
        ->capture_default_str();
    cmd.add_option("--element", opts.element, "XML only: restrict to this element name");
}

std::string slurp(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Samples load(const InputOptions& opts, std::istream& in, std::ostream& err)
{
    Samples samples;
    if (opts.format == "xml") {
        samples.xml = true;
        std::vector<std::string> documents;
        for (const auto& path : opts.inputs) {
            if (path == "-") {
                documents.push_back(slurp(in));
                continue;
            }
            std::ifstream file(path, std::ios::binary);
            if (!file)
                throw InputError("cannot open '" + path + "'");
            documents.push_back(slurp(file));
        }
        XmlCorpus corpus = read_xml_documents(documents);
        if (corpus.mixed_content > 0)
            err << "warning: " << corpus.mixed_content
                << " element occurrence(s) with mixed content; text ignored\n";
        if (!opts.element.empty()) {
            auto it = corpus.elements.find(opts.element);
            if (it == corpus.elements.end())
                throw InputError("element '" + opts.element + "' does not occur in the input");
            samples.by_name.emplace(it->first, it->second);
        } else {
            samples.by_name = std::move(corpus.elements);
        }
        if (samples.by_name.empty())
            throw InputError("no elements in the input");
        return samples;
    }

    if (!opts.element.empty())
        throw UsageError("--element requires --format xml");
    WordMode mode = opts.format == "chars" ? WordMode::Chars : WordMode::Tokens;
    std::vector<std::vector<std::string>> words;
    for (const auto& path : opts.inputs) {
        ExampleSet part = path == "-" ? read_words(in, mode) : read_words(std::filesystem::path(path), mode);
        for (const auto& w : part.words())
            words.push_back(part.spell(w));
    }
    samples.by_name.emplace(kSampleKey, ExampleSet(words));
    return samples;
}

std::string spell(const std::vector<std::string>& word)
{
    if (word.empty())
        return "(empty)";
    std::string out;
    for (const auto& s : word) {
        if (!out.empty())
            out += ' ';
        out += s;
    }
    return out;
}

json factors_json(const Sire& sire)
{
    json factors = json::array();
    for (const auto& f : sire.factors()) {
        json terms = json::array();
        for (const auto& t : f.terms())
            terms.push_back(json::array({t.symbol, std::string(1, op_char(t.op))}));
        factors.push_back(std::move(terms));
    }
    return factors;
}

// infer

struct InferOptions {
    InputOptions input;
    std::string algo = "condag";
    std::string emit = "sire";
    std::string out;
};

Sire infer_one(const std::string& algo, const std::string& name, const ExampleSet& sample, std::ostream& err)
{
    std::size_t evicted = 0;
    Sire result;
    if (algo == "condag") {
        ConDagResult r = build_dag(sample);
        evicted = r.evicted;
        if (r.separation_splits > 0)
            err << "note: " << name << ": " << r.separation_splits
                << " merged block(s) split to separate forbid pairs\n";
        result = std::move(r.sire);
    } else {
        ConMinerResult r = mine_constraints(sample, algo == "exact" ? MisMode::Exact : MisMode::Approx);
        evicted = r.evicted;
        result = std::move(r.sire);
    }
    if (evicted > 0)
        err << "note: " << name << ": cycle eviction moved " << evicted
            << " symbol(s) into trailing factors\n";
    return result;
}

int cmd_infer(const InferOptions& opts, std::istream& in, std::ostream& out, std::ostream& err)
{
    Samples samples = load(opts.input, in, err);
    std::map<std::string, Sire> schemas;
    for (const auto& [name, sample] : samples.by_name)
        schemas.emplace(name, infer_one(opts.algo, name, sample, err));

    std::ostringstream text;
    if (opts.emit == "json") {
        // One element per line keeps the document diffable.
        text << "{";
        const char* sep = "\n";
        for (const auto& [name, sire] : schemas) {
            text << sep << "  " << json(name).dump() << ": " << factors_json(sire).dump();
            sep = ",\n";
        }
        text << "\n}\n";
    } else if (samples.xml) {
        for (const auto& [name, sire] : schemas)
            text << name << " := " << format_sire(sire) << '\n';
    } else {
        text << format_sire(schemas.begin()->second) << '\n';
    }

    if (opts.out.empty() || opts.out == "-") {
        out << text.str();
    } else {
        std::ofstream file(opts.out, std::ios::binary);
        if (!(file << text.str()))
            throw InputError("cannot write '" + opts.out + "'");
    }
    return kOk;
}

// check

struct CheckOptions {
    InputOptions input;
    std::string schema;
    std::string schema_file;
};

struct Schemas {
    std::optional<Sire> unnamed;
    std::map<std::string, Sire> named;
};

Schemas load_schemas(const CheckOptions& opts)
{
    Schemas schemas;
    if (!opts.schema.empty()) {
        schemas.unnamed = parse_sire(opts.schema);
        return schemas;
    }
    std::ifstream file(opts.schema_file, std::ios::binary);
    if (!file)
        throw InputError("cannot open '" + opts.schema_file + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        try {
            auto sep = line.find(":=");
            if (sep == std::string::npos) {
                if (schemas.unnamed)
                    throw InputError("more than one unnamed schema");
                schemas.unnamed = parse_sire(line);
                continue;
            }
            std::string name = line.substr(0, sep);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (!is_valid_symbol(name))
                throw InputError("invalid element name '" + name + "'");
            schemas.named.insert_or_assign(name, parse_sire(line.substr(sep + 2)));
        } catch (const std::exception& e) {
            throw InputError(opts.schema_file + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!schemas.unnamed && schemas.named.empty())
        throw InputError("no schema in '" + opts.schema_file + "'");
    return schemas;
}

int cmd_check(const CheckOptions& opts, std::istream& in, std::ostream& out, std::ostream& err)
{
    Schemas schemas = load_schemas(opts);
    Samples samples = load(opts.input, in, err);
    if (!samples.xml && !schemas.unnamed)
        throw InputError("word input needs a schema without an element name");

    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t skipped = 0;
    std::vector<std::string> witnesses;
    for (const auto& [name, sample] : samples.by_name) {
        const Sire* schema = nullptr;
        if (auto it = schemas.named.find(name); it != schemas.named.end())
            schema = &it->second;
        else if (schemas.unnamed)
            schema = &*schemas.unnamed;
        if (!schema) {
            ++skipped;
            continue;
        }
        SireMatcher matcher(*schema);
        for (const auto& word : sample.words()) {
            auto spelled = sample.spell(word);
            if (matcher.accepts(spelled)) {
                ++accepted;
                continue;
            }
            ++rejected;
            if (witnesses.size() < 10)
                witnesses.push_back(samples.xml ? name + ": " + spell(spelled) : spell(spelled));
        }
    }

    out << "accepted: " << accepted << '\n' << "rejected: " << rejected << '\n';
    if (skipped > 0)
        out << "skipped elements without a schema: " << skipped << '\n';
    for (const auto& w : witnesses)
        out << "rejected word: " << w << '\n';
    return rejected == 0 ? kOk : kRejected;
}

// oracle

struct OracleOptions {
    InputOptions input;
    std::size_t max_alphabet = 8;
};

std::string profile_text(const std::vector<std::size_t>& profile)
{
    std::string out = "(";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(profile[i]);
    }
    return out + ")";
}

int cmd_oracle(const OracleOptions& opts, std::istream& in, std::ostream& out, std::ostream& err)
{
    Samples samples = load(opts.input, in, err);
    for (const auto& [name, sample] : samples.by_name) {
        OracleResult best = minimal_oracle(sample, opts.max_alphabet);
        if (samples.xml)
            out << "element: " << name << '\n';
        out << "minimal chains: " << best.min_chains << '\n'
            << "profile: " << profile_text(best.profile) << '\n'
            << "optimal partitions: " << best.optima.size() << '\n';
        for (const auto& cpos : best.optima)
            out << "  " << format_cpos(cpos, sample.alphabet()) << '\n';
        out << "representative: " << format_sire(infer_operators(sample, best.optima.front())) << '\n'
            << "conminer chains: " << mine_constraints(sample, MisMode::Approx).cpos.chains.size() << '\n'
            << "condag chains: " << build_dag(sample).cpos.chains.size() << '\n';
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Infer interleaving schemas (SIREs) from positive examples", "sire"};
    app.require_subcommand(1);

    InferOptions infer;
    auto* infer_cmd = app.add_subcommand("infer", "Infer a schema per sample");
    add_input_options(*infer_cmd, infer.input);
    infer_cmd->add_option("--algo", infer.algo, "Inference algorithm")
        ->check(CLI::IsMember({"exact", "conminer", "condag"}))
        ->capture_default_str();
    infer_cmd->add_option("--emit", infer.emit, "Output syntax")
        ->check(CLI::IsMember({"sire", "json"}))
        ->capture_default_str();
    infer_cmd->add_option("--out", infer.out, "Output file (default: standard output)");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Check samples against a schema");
    add_input_options(*check_cmd, check.input);
    auto* schema_opt = check_cmd->add_option("--schema", check.schema, "Schema expression");
    auto* schema_file_opt = check_cmd->add_option("--schema-file", check.schema_file,
                                                  "File of schemas, one per line ('name := expr' for XML)");
    schema_opt->excludes(schema_file_opt);

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force the minimal chain partitions");
    add_input_options(*oracle_cmd, oracle.input);
    oracle_cmd->add_option("--max-alphabet", oracle.max_alphabet, "Largest alphabet to enumerate")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (check_cmd->parsed() && check.schema.empty() && check.schema_file.empty())
            throw CLI::RequiredError("--schema or --schema-file");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    }

    try {
        if (infer_cmd->parsed())
            return cmd_infer(infer, in, out, err);
        if (check_cmd->parsed())
            return cmd_check(check, in, out, err);
        return cmd_oracle(oracle, in, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    } catch (const BoundExceededError& e) {
        err << "error: " << e.what() << '\n';
        return kBoundExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace sire::cli
