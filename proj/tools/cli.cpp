#include "cli.hpp"

#include "hecke/schur.hpp"
#include "hecke/traces.hpp"
#include "hecke/verify.hpp"
#include "hecke/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace hecke {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct WeightsArgs {
    std::string type = "B";
    int n = 1;
    std::optional<int> r1;
    std::optional<int> r2;
    std::string q;
    std::string Q;
    std::string format = "json";
};

struct TraceArgs {
    std::string word;
    int n = 1;
    std::optional<int> r1;
    std::optional<int> r2;
    std::string q;
    std::string Q;
};

struct Row {
    std::string shape;
    Scalar weight;
    std::size_t dimension;
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void require_sizes(int n, int r1, int r2) {
    if (n < 0) throw Error("--n must be nonnegative");
    if (r1 < 1 || r2 < 1) throw Error("--r1 and --r2 must be at least 1");
}

int cmd_weights(const WeightsArgs& a, std::ostream& out) {
    const int r1 = a.r1.value_or(a.n + 1);
    const int r2 = a.r2.value_or(a.n + 1);
    require_sizes(a.n, r1, r2);
    const Scalar q = parse_rational(a.q);
    const int guard = std::max(a.n, r1 + r2);

    ordered_json params{{"n", a.n}, {"r1", r1}, {"r2", r2}, {"q", to_string(q)}};
    std::vector<Row> rows;
    std::optional<Scalar> z;
    std::optional<Scalar> y;

    if (a.type == "A") {
        const int r = r1 + r2;
        params["Q"] = nullptr;
        ParameterPoint::make(q, Scalar(1), 0);  // rejects q <= 0 and q = 1
        for (const auto& mu : partitions(a.n))
            rows.push_back({format_partition(mu), schur_normalized(mu, r, q), static_cast<std::size_t>(count_standard(mu))});
        z = power(q, r) * (1 - q) / (1 - power(q, r));
    } else if (a.type == "B") {
        if (a.Q.empty()) throw Error("--Q is required for type B");
        const auto point = ParameterPoint::make(q, parse_rational(a.Q), guard);
        params["Q"] = to_string(point.Q());
        const auto table = weight_table(a.n, r1, r2, point);
        for (const auto& e : table.entries) rows.push_back({format_double(e.shape), e.weight, e.dimension});
        z = table.z;
        y = table.y;
    } else if (a.type == "D") {
        const auto point = typeD_point(q, guard);
        params["Q"] = to_string(point.Q());
        for (const auto& w : typeD_weight_table(a.n, r1, r2, q)) rows.push_back({w.label, w.weight, w.dimension});
        const auto mp = markov_params(r1, r2, point);
        z = mp.z;
        y = mp.y;
    } else {
        throw Error("--type must be A, B or D");
    }

    Scalar total = 0;
    for (const auto& row : rows) total += row.weight * static_cast<unsigned long>(row.dimension);

    if (a.format == "csv") {
        out << "shape,weight,dimension\n";
        for (const auto& row : rows)
            out << csv_quote(row.shape) << ',' << csv_quote(to_string(row.weight)) << ',' << row.dimension << '\n';
        return kOk;
    }
    ordered_json doc;
    doc["params"] = params;
    doc["z"] = z ? ordered_json(to_string(*z)) : ordered_json(nullptr);
    doc["y"] = y ? ordered_json(to_string(*y)) : ordered_json(nullptr);
    doc["weights"] = ordered_json::array();
    for (const auto& row : rows)
        doc["weights"].push_back({{"shape", row.shape}, {"weight", to_string(row.weight)}, {"dimension", row.dimension}});
    doc["checks"] = ordered_json::array(
        {{{"name", "sum of weight times dimension is 1"}, {"paper_ref", "Eq. (9), tr(1) = 1"}, {"pass", total == 1}}});
    out << doc.dump(2) << '\n';
    return kOk;
}

int cmd_trace(const TraceArgs& a, std::ostream& out) {
    const int r1 = a.r1.value_or(a.n + 1);
    const int r2 = a.r2.value_or(a.n + 1);
    require_sizes(a.n, r1, r2);
    const auto point = ParameterPoint::make(parse_rational(a.q), parse_rational(a.Q), std::max(a.n, r1 + r2));
    const HeckeWord word = parse_word(a.word, a.n);
    out << to_string(markov_trace_B(word, a.n, r1, r2, point)) << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, std::ostream& out) {
    const Report report = run_suite(suite, options);
    ordered_json doc;
    doc["suite"] = suite;
    doc["params"] = {{"n", options.n}, {"seed", options.seed}, {"points", options.points}, {"samples", options.samples}};
    doc["checks"] = ordered_json::array();
    for (const auto& c : report.checks)
        doc["checks"].push_back({{"name", c.name}, {"paper_ref", c.paper_ref}, {"pass", c.pass}, {"detail", c.detail}});
    doc["passed"] = report.checks.size() - report.failures();
    doc["failed"] = report.failures();
    out << doc.dump(2) << '\n';
    return report.all_pass() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hecke algebra representations, Markov trace weights and verification suites", "hecke"};
    app.require_subcommand(1);

    WeightsArgs weights;
    auto* w = app.add_subcommand("weights", "Print the weight table of the Markov trace");
    w->add_option("--type", weights.type, "Algebra type")->check(CLI::IsMember({"A", "B", "D"}))->capture_default_str();
    w->add_option("--n", weights.n, "Number of strands")->required();
    w->add_option("--r1", weights.r1, "Row bound of the first component (default n+1)");
    w->add_option("--r2", weights.r2, "Row bound of the second component (default n+1)");
    w->add_option("--q", weights.q, "Parameter q, as p/q or an integer")->required();
    w->add_option("--Q", weights.Q, "Parameter Q (type B only)");
    w->add_option("--format", weights.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    TraceArgs trace;
    auto* t = app.add_subcommand("trace", "Evaluate the type-B Markov trace on a word");
    t->add_option("--word", trace.word, "Word such as \"t g1 G2 t'1 u\"")->required();
    t->add_option("--n", trace.n, "Number of strands")->required();
    t->add_option("--r1", trace.r1, "Row bound of the first component (default n+1)");
    t->add_option("--r2", trace.r2, "Row bound of the second component (default n+1)");
    t->add_option("--q", trace.q, "Parameter q")->required();
    t->add_option("--Q", trace.Q, "Parameter Q")->required();

    std::string suite;
    SuiteOptions options;
    auto* v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    v->add_option("--n", options.n, "Largest size checked")->capture_default_str();
    v->add_option("--seed", options.seed, "Random seed")->capture_default_str();
    v->add_option("--points", options.points, "Number of parameter points")->capture_default_str();
    v->add_option("--samples", options.samples, "Random words per check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*w) return cmd_weights(weights, out);
        if (*t) return cmd_trace(trace, out);
        return cmd_verify(suite, options, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace hecke
