#include "schurkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "schurkit/characters.hpp"
#include "schurkit/classification.hpp"
#include "schurkit/error.hpp"
#include "schurkit/json_io.hpp"
#include "schurkit/oracle.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/verify.hpp"

namespace schurkit {

namespace {

struct Options {
    int p = 0;
    int n = 0;
    int degree = -1;
    int a = -1;
    int b = -1;
    std::string partition;
    std::string predicate;
    std::string family;
    std::string spec;
    std::string expr;
    std::string suite;
    std::string format = "json";
    std::string out_file;
    std::string cache_dir;
    std::string tier = "fast";
    unsigned threads = 1;
    std::size_t max_weight_space = OracleConfig{}.max_weight_space;
    bool steinberg_shortcut = false;
    bool timing = false;
};

// Output of one invocation: a JSON document or a CSV table.
struct Document {
    json body;
    std::vector<std::vector<std::string>> csv;
    bool csv_supported = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

void require_prime(const Options& o) {
    if (!is_prime(o.p))
        throw UsageError("--p must be a prime, got " + std::to_string(o.p));
}

void require_n(const Options& o) {
    if (o.n < 1)
        throw UsageError("--n must be a positive integer");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// predicates

json parse_to_json(const StandardParse& parse) {
    json blocks = json::array();
    for (const auto& block : parse.blocks)
        blocks.push_back({{"primitive", to_json(block.primitive)}, {"index", block.index}, {"shift", block.shift}});
    return {{"blocks", blocks}};
}

struct PredicateValue {
    json value;
    std::optional<json> witness;
};

const std::vector<std::string>& predicate_names() {
    static const std::vector<std::string> names = {"restricted", "bounded", "1special", "2special", "21special", "beginning",
                                                   "middle", "end", "primitive", "standard", "2good", "critical",
                                                   "g1inj", "divind", "spechtLower", "spechtUpper"};
    return names;
}

PredicateValue evaluate(const std::string& name, const Partition& lambda, const Options& o) {
    const int p = o.p;
    if (name == "restricted")
        return {is_restricted(lambda, p), {}};
    if (name == "bounded") {
        if (o.a < 0 || o.b < 0)
            throw UsageError("predicate 'bounded' needs --a and --b");
        return {is_bounded(lambda, o.a, o.b), {}};
    }
    if (name == "1special")
        return {is_1special(lambda, p), {}};
    if (name == "2special")
        return {is_2special(lambda, p), {}};
    if (name == "21special") {
        const auto witness = twenty_one_special_witness(lambda, p);
        if (witness)
            return {true, json{{"mu", to_json(witness->first)}, {"s", witness->second}}};
        return {false, {}};
    }
    if (name == "beginning")
        return {classify_term(lambda, p).beginning, {}};
    if (name == "middle")
        return {classify_term(lambda, p).middle, {}};
    if (name == "end")
        return {classify_term(lambda, p).end, {}};
    if (name == "primitive") {
        const auto index = primitive_index(lambda, p);
        return {index ? json(*index) : json(nullptr), {}};
    }
    if (name == "standard" || name == "2good") {
        const auto parses = standard_parses(lambda, p);
        if (parses.empty())
            return {false, {}};
        return {true, parse_to_json(parses.front())};
    }
    if (name == "critical")
        return {is_critical_n3(lambda, p), {}};
    if (name == "g1inj")
        return {g1_inj_n3(lambda, p), {}};
    if (name == "divind")
        return {divisibility_index_n3(lambda, p), {}};
    if (name == "spechtLower")
        return {specht_d_lower(lambda, p), {}};
    if (name == "spechtUpper")
        return {specht_d_upper(lambda, p), {}};
    throw UsageError("unknown predicate '" + name + "'");
}

std::string value_text(const json& v) { return v.is_null() ? "" : v.dump(); }

Document cmd_classify(const Options& o) {
    require_prime(o);
    const Partition lambda = parse_partition(o.partition);
    Document doc;
    doc.csv_supported = true;
    doc.csv.push_back({"partition", "p", "predicate", "value"});
    if (!o.predicate.empty()) {
        const auto result = evaluate(o.predicate, lambda, o);
        doc.body = {{"partition", to_json(lambda)}, {"p", o.p}, {"predicate", o.predicate}, {"value", result.value}};
        if (result.witness)
            doc.body["witness"] = *result.witness;
        doc.csv.push_back({lambda.str(), std::to_string(o.p), o.predicate, value_text(result.value)});
        return doc;
    }
    json values = json::object();
    for (const auto& name : predicate_names()) {
        if (name == "bounded" && (o.a < 0 || o.b < 0))
            continue;
        try {
            values[name] = evaluate(name, lambda, o).value;
        } catch (const Error&) {
            // Precondition not met for this λ.
            values[name] = nullptr;
        }
        doc.csv.push_back({lambda.str(), std::to_string(o.p), name, value_text(values[name])});
    }
    doc.body = {{"partition", to_json(lambda)}, {"p", o.p}, {"predicates", values}};
    return doc;
}

Document cmd_parse(const Options& o) {
    require_prime(o);
    const Partition lambda = parse_partition(o.partition);
    json digits = json::array();
    for (const auto& d : p_adic_digits(lambda, o.p).digits)
        digits.push_back(to_json(d));
    json parses = json::array();
    Document doc;
    doc.csv_supported = true;
    doc.csv.push_back({"parse", "primitive", "index", "shift"});
    int k = 0;
    for (const auto& parse : standard_parses(lambda, o.p)) {
        parses.push_back(parse_to_json(parse));
        for (const auto& block : parse.blocks)
            doc.csv.push_back({std::to_string(k), block.primitive.str(), std::to_string(block.index), std::to_string(block.shift)});
        ++k;
    }
    doc.body = {{"partition", to_json(lambda)}, {"p", o.p}, {"digits", digits}, {"parses", parses}};
    return doc;
}

Document cmd_chars_decompose(const Options& o) {
    require_n(o);
    const auto schur = decompose_schur(parse_char_expr(o.expr, o.n));
    Document doc;
    doc.body = {{"schur", to_json(schur)}};
    doc.csv_supported = true;
    doc.csv.push_back({"partition", "coefficient"});
    for (auto it = schur.rbegin(); it != schur.rend(); ++it)
        doc.csv.push_back({it->first.str(), std::to_string(it->second)});
    return doc;
}

// ---------------------------------------------------------------------------
// oracle-backed commands

std::optional<std::filesystem::path> cache_file(const Options& o, int n) {
    std::string dir = o.cache_dir;
    if (const char* env = std::getenv("SCHURKIT_CACHE"); env && *env)
        dir = env;
    if (dir.empty())
        return std::nullopt;
    return std::filesystem::path(dir) / ("simple-p" + std::to_string(o.p) + "-n" + std::to_string(n) + ".jsonl");
}

// Oracle tables keyed by n, loaded from and saved to the cache directory.
class Tables {
  public:
    explicit Tables(const Options& o) : o_(o) {}
    Tables(const Tables&) = delete;
    Tables& operator=(const Tables&) = delete;

    SimpleTable& get(int n) {
        auto it = tables_.find(n);
        if (it == tables_.end()) {
            OracleConfig config;
            config.max_weight_space = o_.max_weight_space;
            config.steinberg_shortcut = o_.steinberg_shortcut;
            it = tables_.emplace(std::piecewise_construct, std::forward_as_tuple(n), std::forward_as_tuple(o_.p, n, config)).first;
            if (auto file = cache_file(o_, n))
                it->second.load(*file);
        }
        return it->second;
    }
    void save() const {
        for (const auto& [n, table] : tables_)
            if (auto file = cache_file(o_, n))
                table.save(*file);
    }

  private:
    const Options& o_;
    std::map<int, SimpleTable> tables_;
};

std::vector<std::pair<FactorKind, int>> parse_module_spec(const std::string& text) {
    std::vector<std::pair<FactorKind, int>> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::erase_if(item, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::ParseError, "module factor '" + item + "' is not KIND:degree");
        const std::string kind = item.substr(0, colon);
        const std::string degree = item.substr(colon + 1);
        if (degree.empty() || degree.size() > 6 || !std::all_of(degree.begin(), degree.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw Error(Errc::ParseError, "bad degree in module factor '" + item + "'");
        FactorKind k;
        if (kind == "S")
            k = FactorKind::S;
        else if (kind == "Sbar")
            k = FactorKind::Sbar;
        else if (kind == "Wedge" || kind == "L")
            k = FactorKind::Wedge;
        else
            throw Error(Errc::ParseError, "unknown module factor kind '" + kind + "' in '" + text + "'");
        out.emplace_back(k, std::stoi(degree));
    }
    if (out.empty())
        throw Error(Errc::ParseError, "empty module spec");
    return out;
}

Document cmd_oracle_factors(const Options& o, Tables& tables) {
    require_prime(o);
    require_n(o);
    SimpleTable& table = tables.get(o.n);
    const SymChar chi = module_char(parse_module_spec(o.spec), o.p, o.n);
    if (o.threads > 1)
        prefetch_simple_chars(partitions_of(chi.degree(), o.n), table, o.threads);
    const FactorMultiset factors = decompose_simples(chi, table);
    Document doc;
    doc.body = {{"factors", to_json(factors)}, {"dimCheck", dimension_check(chi, factors, table)}};
    doc.csv_supported = true;
    doc.csv.push_back({"partition", "multiplicity"});
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        doc.csv.push_back({it->first.str(), std::to_string(it->second)});
    return doc;
}

Document cmd_oracle_simple(const Options& o, Tables& tables) {
    require_prime(o);
    require_n(o);
    const Partition lambda = parse_partition(o.partition);
    const SymChar chi = simple_char(lambda, tables.get(o.n));
    Document doc;
    doc.body = {{"lambda", to_json(lambda)}, {"char", to_json(chi.coeffs())}, {"dim", dimension(chi)}};
    doc.csv_supported = true;
    doc.csv.push_back({"weight", "multiplicity"});
    for (auto it = chi.coeffs().rbegin(); it != chi.coeffs().rend(); ++it)
        doc.csv.push_back({it->first.str(), std::to_string(it->second)});
    return doc;
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "SS")
        return Family::SS;
    if (name == "SbarSbar")
        return Family::SbarSbar;
    if (name == "SbarSbarWedge")
        return Family::SbarSbarWedge;
    if (name == "Sbar")
        return Family::Sbar;
    if (name == "S")
        return Family::S;
    return std::nullopt;
}

// Classification predicted for a family's factor set, if there is one.
std::function<bool(const Partition&, int)> family_predicate(Family family) {
    switch (family) {
    case Family::SS: return is_2good;
    case Family::SbarSbar: return is_2special;
    case Family::SbarSbarWedge: return is_21special;
    case Family::Sbar: return is_1special;
    case Family::S: return nullptr;
    }
    return nullptr;
}

Document cmd_enumerate(const Options& o, Tables& tables) {
    require_prime(o);
    require_n(o);
    if (o.degree < 0)
        throw UsageError("--degree is required");
    Document doc;
    doc.csv_supported = true;
    if (o.family.empty()) {
        if (o.predicate.empty())
            throw UsageError("enumerate needs --family or --predicate");
        json list = json::array();
        doc.csv.push_back({"degree", "partition"});
        for (const auto& lambda : partitions_of(o.degree, o.n)) {
            const json v = evaluate(o.predicate, lambda, o).value;
            if (v.is_boolean() ? v.get<bool>() : !v.is_null()) {
                list.push_back(to_json(lambda));
                doc.csv.push_back({std::to_string(o.degree), lambda.str()});
            }
        }
        doc.body = {{"partitions", list}};
        return doc;
    }
    const auto family = parse_family(o.family);
    if (!family)
        throw UsageError("--family must be one of SS, SbarSbar, SbarSbarWedge, Sbar, S");
    SimpleTable& table = tables.get(o.n);
    if (o.threads > 1)
        prefetch_simple_chars(partitions_of(o.degree, o.n), table, o.threads);
    const auto factors = enumerate_factors(*family, o.degree, table);
    doc.body = {{"factors", to_json(factors)}};

    const auto predicate = family_predicate(*family);
    std::set<Partition> observed(factors.begin(), factors.end());
    std::set<Partition> rows = observed;
    if (predicate)
        for (const auto& lambda : partitions_of(o.degree, o.n))
            if (predicate(lambda, o.p))
                rows.insert(lambda);
    doc.csv.push_back({"degree", "partition", "in_theorem", "in_oracle"});
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        doc.csv.push_back({std::to_string(o.degree), it->str(), predicate ? bool_text(predicate(*it, o.p)) : "",
                           bool_text(observed.count(*it) > 0)});
    return doc;
}

void append_report_rows(const SuiteReport& report, Document& doc) {
    if (!report.rows.empty()) {
        for (const auto& row : report.rows)
            doc.csv.push_back({report.suite, report.params.dump(), std::to_string(row.degree), row.partition.str(),
                               bool_text(row.in_theorem), bool_text(row.in_oracle)});
        return;
    }
    for (const auto& d : report.discrepancies)
        doc.csv.push_back({report.suite, report.params.dump(), "", d.partition.str(), d.expected, d.actual});
}

Document cmd_verify(const Options& o, bool& passed) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end())
        throw UsageError("--suite must be one of thm-2good, thm-21special, 1special, combinatorial, oracle-self");
    if (o.tier != "fast" && o.tier != "extended")
        throw UsageError("--tier must be fast or extended");
    const Tier tier = o.tier == "fast" ? Tier::Fast : Tier::Extended;
    const bool combinatorial = o.suite == "combinatorial";

    std::vector<SuiteConfig> configs;
    if (o.p != 0) {
        require_prime(o);
        SuiteConfig config{o.p, o.n, o.degree};
        if (config.rmax < 0 || (!combinatorial && config.n < 1)) {
            // Fill the missing bounds from the tier entry for this prime.
            for (const auto& c : tier_configs(o.suite, tier))
                if (c.p == o.p && (combinatorial || o.n < 1 || c.n == o.n)) {
                    if (config.n < 1)
                        config.n = c.n;
                    if (config.rmax < 0)
                        config.rmax = c.rmax;
                    break;
                }
        }
        if (config.rmax < 0 || (!combinatorial && config.n < 1))
            throw UsageError("--n and --rmax are required for p=" + std::to_string(o.p) + " in this tier");
        configs.push_back(config);
    } else {
        configs = tier_configs(o.suite, tier);
    }

    Document doc;
    doc.csv_supported = true;
    doc.csv.push_back({"suite", "params", "degree", "partition", "in_theorem", "in_oracle"});
    passed = true;
    json reports = json::array();
    for (const auto& config : configs) {
        Options per = o;
        per.p = config.p;
        Tables tables(per);
        SimpleTable* table = combinatorial ? nullptr : &tables.get(config.n);
        const SuiteReport report = run_suite(o.suite, config, table, o.threads);
        tables.save();
        passed = passed && report.pass();
        reports.push_back(report.to_json(o.timing));
        append_report_rows(report, doc);
    }
    if (reports.size() == 1) {
        doc.body = reports[0];
    } else {
        doc.body = {{"suite", o.suite}, {"tier", o.tier}, {"verdict", passed ? "pass" : "fail"}, {"reports", reports}};
    }
    return doc;
}

std::string render(const Document& doc, const std::string& format) {
    if (format == "csv") {
        std::string out;
        for (const auto& row : doc.csv) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + csv_field(row[i]);
            out += '\n';
        }
        return out;
    }
    return (format == "pretty" ? doc.body.dump(2) : doc.body.dump()) + "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Composition factors of symmetric and exterior powers for GL_n in positive characteristic", "schurkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Characteristic (a prime)")->required(); };
    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Number of variables, GL_n")->required(); };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--out", o.out_file, "Also write the document to FILE");
    };
    auto add_oracle = [&](CLI::App* sub) {
        sub->add_option("--cache", o.cache_dir, "Directory of cached simple characters (SCHURKIT_CACHE overrides)");
        sub->add_option("--threads", o.threads, "Worker threads for simple characters")->check(CLI::Range(1u, 256u));
        sub->add_option("--max-weight-space", o.max_weight_space, "Largest weight-space vector support before giving up");
        sub->add_flag("--steinberg-shortcut", o.steinberg_shortcut,
                      "Build non-restricted simple characters from their digit factorization");
    };

    auto* classify = app.add_subcommand(
        "classify", "Evaluate a classification predicate. 2good/standard: factors of S(E)⊗S(E) are the standard partitions; "
                    "21special: factors of S̄(E)⊗S̄(E)⊗Λ(E) are μ+ω_s with μ 2-special; critical/divind/g1inj: GL_3 injective hulls");
    add_p(classify);
    classify->add_option("partition", o.partition, "Partition such as [4,2,1]")->required();
    classify->add_option("--predicate", o.predicate, "Predicate name; all predicates when omitted")
        ->check(CLI::IsMember(predicate_names()));
    classify->add_option("--n", o.n, "Unused; accepted for symmetry");
    classify->add_option("--a", o.a, "a for (a,b)-bounded");
    classify->add_option("--b", o.b, "b for (a,b)-bounded");
    add_common(classify);

    auto* parse = app.add_subcommand("parse", "Digits and standard parses: a standard partition has exactly one parse into shifted primitive blocks");
    add_p(parse);
    parse->add_option("partition", o.partition, "Partition such as [7,4,3]")->required();
    add_common(parse);

    auto* chars = app.add_subcommand("chars", "Characters of polynomial GL_n-modules");
    chars->require_subcommand(1);
    auto* decompose = chars->add_subcommand("decompose", "Expand a product of h<r>, e<r>, sbar<r>@p and s[λ] in Schur characters");
    add_n(decompose);
    decompose->add_option("--expr", o.expr, "Expression such as h2*h1")->required();
    add_common(decompose);

    auto* oracle = app.add_subcommand("oracle", "Modular characters from Gram ranks of the contravariant form");
    oracle->require_subcommand(1);
    auto* factors = oracle->add_subcommand("factors", "Composition factors of a tensor product such as S:4,S:3 or Sbar:2,Sbar:2,Wedge:1");
    add_p(factors);
    add_n(factors);
    factors->add_option("--spec", o.spec, "Comma separated KIND:degree with KIND in S, Sbar, Wedge")->required();
    add_common(factors);
    add_oracle(factors);
    auto* simple = oracle->add_subcommand("simple", "Formal character of the simple module L(λ)");
    add_p(simple);
    add_n(simple);
    simple->add_option("partition", o.partition, "Highest weight such as [3,1]")->required();
    add_common(simple);
    add_oracle(simple);

    auto* verify = app.add_subcommand(
        "verify", "Run a theorem suite. thm-2good: factors of S(E)⊗S(E) are the standard partitions; thm-21special: factors of "
                  "S̄(E)⊗S̄(E)⊗Λ(E) are μ+ω_s with μ 2-special; 1special: factors of S̄(E) are (p-1)^k a; combinatorial: "
                  "partition invariants; oracle-self: oracle audits. Exit 1 when a suite fails");
    verify->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--p", o.p, "Characteristic; every tier configuration when omitted");
    verify->add_option("--n", o.n, "Number of variables");
    verify->add_option("--rmax,--degree", o.degree, "Largest degree (degree bound for combinatorial)");
    verify->add_option("--tier", o.tier, "Degree budgets")->check(CLI::IsMember({"fast", "extended"}));
    verify->add_flag("--timing", o.timing, "Include elapsed seconds in reports");
    add_common(verify);
    add_oracle(verify);

    auto* enumerate = app.add_subcommand(
        "enumerate", "Oracle factor set of a family in one degree (SS: S(E)⊗S(E), SbarSbar, SbarSbarWedge, Sbar, S), or the "
                     "partitions satisfying a predicate");
    add_p(enumerate);
    add_n(enumerate);
    enumerate->add_option("--degree,--rmax", o.degree, "Degree")->required();
    enumerate->add_option("--family", o.family, "Module family")->check(CLI::IsMember({"SS", "SbarSbar", "SbarSbarWedge", "Sbar", "S"}));
    enumerate->add_option("--predicate", o.predicate, "Predicate name")->check(CLI::IsMember(predicate_names()));
    enumerate->add_option("--a", o.a, "a for (a,b)-bounded");
    enumerate->add_option("--b", o.b, "b for (a,b)-bounded");
    add_common(enumerate);
    add_oracle(enumerate);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("schurkit");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    // `--help` on a subcommand is handled by CLI11 above; everything else
    // produces one document.
    bool passed = true;
    try {
        Document doc;
        Options effective = o;
        Tables tables(effective);
        if (classify->parsed()) {
            doc = cmd_classify(o);
        } else if (parse->parsed()) {
            doc = cmd_parse(o);
        } else if (decompose->parsed()) {
            doc = cmd_chars_decompose(o);
        } else if (factors->parsed()) {
            doc = cmd_oracle_factors(o, tables);
        } else if (simple->parsed()) {
            doc = cmd_oracle_simple(o, tables);
        } else if (verify->parsed()) {
            doc = cmd_verify(o, passed);
        } else if (enumerate->parsed()) {
            doc = cmd_enumerate(o, tables);
        }
        tables.save();
        if (o.format == "csv" && !doc.csv_supported)
            throw UsageError("--format csv is not available for this command");
        const std::string text = render(doc, o.format);
        if (!o.out_file.empty()) {
            std::ofstream file(o.out_file, std::ios::trunc);
            if (!file)
                throw UsageError("cannot write --out " + o.out_file);
            file << text;
        }
        out << text;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::ResourceBudgetExceeded || e.code() == Errc::Overflow ? kExitResource : kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    }
    return passed ? kExitOk : kExitVerifyFailed;
}

} // namespace schurkit
