#include "pauliflow/demand_matrices.hpp"
#include "pauliflow/flow_analysis.hpp"
#include "pauliflow/io.hpp"
#include "pauliflow/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pauliflow {

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kInternal = 1, kInvalid = 2, kNegative = 3 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

std::string error_document(std::string_view kind, const std::vector<Diagnostic>& diagnostics) {
    json doc;
    doc["status"] = "error";
    doc["kind"] = std::string(kind);
    json items = json::array();
    for (const auto& d : diagnostics) items.push_back({{"location", d.location}, {"message", d.message}});
    doc["diagnostics"] = items;
    return doc.dump() + "\n";
}

json matrix_json(const BitMatrix& m) {
    return {{"rows", m.row_labels().names()}, {"cols", m.col_labels().names()}, {"bits", m.bit_strings()}};
}

struct Options {
    std::string graph;
    std::string flow;
    bool closure = false;
    std::string dot;
    std::string out;
    bool focused = false;
    bool json_output = false;
    std::uint64_t budget = OracleLimits{}.max_work;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
    std::size_t io = 10;
    std::size_t repeat = 1;
    double edge_probability = 0.5;
};

int run_find(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph));
    const FlowResult r = find_flow(g, {.want_closure = o.closure});
    const std::string doc = serialize_flow(g, r);
    if (!o.dot.empty() && r.has_flow) write_file(o.dot, export_dot(r.relation));
    if (o.out.empty()) {
        out << doc;
    } else {
        write_file(o.out, doc);
    }
    return r.has_flow ? kOk : kNegative;
}

int run_verify(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph));
    const FlowDocument flow = parse_flow(g, read_file(o.flow));
    if (!flow.has_flow) {
        out << json({{"status", "fail"}, {"reason", "document records no flow"}}).dump() << "\n";
        return kNegative;
    }
    const FlowCheckReport report = check_pauli_flow(g, flow.correction, flow.order, o.focused);
    out << serialize_check_report(report);
    return report.passed() ? kOk : kNegative;
}

int run_matrices(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph));
    const BitMatrix m = flow_demand_matrix(g);
    const BitMatrix n = order_demand_matrix(g);
    if (o.json_output) {
        out << json({{"M", matrix_json(m)}, {"N", matrix_json(n)}}).dump() << "\n";
    } else {
        out << format_matrix("M", m) << "\n" << format_matrix("N", n);
    }
    return kOk;
}

int run_reverse(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph));
    try {
        out << serialize_graph(reverse_graph(g));
    } catch (const std::invalid_argument& e) {
        throw DocumentError({Diagnostic{"", e.what()}});
    }
    return kOk;
}

int run_focused_sets(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph));
    json basis = json::array();
    for (const auto& s : focused_sets_basis(g).sets) basis.push_back(g.names_of(s));
    out << json({{"basis", basis}}).dump() << "\n";
    return kOk;
}

int run_oracle(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph));
    OracleLimits limits;
    limits.max_work = o.budget;
    const OracleResult r = brute_force_find(g, limits);
    json doc;
    switch (r.verdict) {
        case OracleVerdict::Flow: {
            doc["status"] = "flow";
            json correction = json::object();
            for (std::size_t v : g.measured()) correction[g.name(v)] = g.names_of(r.correction->at(v));
            doc["correction"] = correction;
            doc["sequence"] = r.sequence;
            break;
        }
        case OracleVerdict::NoFlow: doc["status"] = "no_flow"; break;
        case OracleVerdict::LimitExceeded: doc["status"] = "limit_exceeded"; break;
    }
    out << doc.dump() << "\n";
    switch (r.verdict) {
        case OracleVerdict::Flow: return kOk;
        case OracleVerdict::NoFlow: return kNegative;
        case OracleVerdict::LimitExceeded: return kInternal;
    }
    return kInternal;
}

int run_bench(const Options& o, std::ostream& out) {
    out << "n,n_I,n_O,seed,wall_time_ms,verdict\n";
    for (std::size_t n : o.sizes) {
        for (std::size_t rep = 0; rep < o.repeat; ++rep) {
            const std::uint64_t seed = o.seed + rep;
            const auto g = random_instance(n, o.io, o.io, o.edge_probability, seed);
            const auto start = std::chrono::steady_clock::now();
            const FlowResult r = find_flow(g);
            const auto stop = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(3);
            line << n << ',' << o.io << ',' << o.io << ',' << seed << ',' << ms << ','
                 << (r.has_flow ? "flow" : "no_flow") << "\n";
            out << line.str();
        }
    }
    return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Find and check Pauli flow on labelled open graphs", "pauliflow"};
    app.require_subcommand(1);
    Options o;

    auto* find = app.add_subcommand("find", "Find a Pauli flow");
    find->add_option("graph", o.graph, "Graph document")->required();
    find->add_flag("--closure", o.closure, "Include the transitive closure of the order");
    find->add_option("--dot", o.dot, "Write the order DAG as DOT to this path");
    find->add_option("--out", o.out, "Write the flow document here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check a flow document against a graph");
    verify->add_option("graph", o.graph, "Graph document")->required();
    verify->add_option("flow", o.flow, "Flow document")->required();
    verify->add_flag("--focused", o.focused, "Also require the focus conditions");

    auto* matrices = app.add_subcommand("matrices", "Print the flow-demand and order-demand matrices");
    matrices->add_option("graph", o.graph, "Graph document")->required();
    matrices->add_flag("--json", o.json_output, "Emit JSON instead of bit grids");

    auto* reverse = app.add_subcommand("reverse", "Print the reverse graph");
    reverse->add_option("graph", o.graph, "Graph document")->required();

    auto* focused = app.add_subcommand("focused-sets", "Print a basis of the focused sets");
    focused->add_option("graph", o.graph, "Graph document")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force search (small graphs only)");
    oracle->add_option("graph", o.graph, "Graph document")->required();
    oracle->add_option("--budget", o.budget, "Maximum search table size");

    auto* bench = app.add_subcommand("bench", "Time find on random graphs, CSV output");
    bench->add_option("--n", o.sizes, "Vertex counts")->required()->delimiter(',');
    bench->add_option("--seed", o.seed, "First seed");
    bench->add_option("--io", o.io, "Number of inputs and of outputs");
    bench->add_option("--repeat", o.repeat, "Seeds per size");
    bench->add_option("--p", o.edge_probability, "Edge probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalid;
    }

    try {
        if (*find) return run_find(o, out);
        if (*verify) return run_verify(o, out);
        if (*matrices) return run_matrices(o, out);
        if (*reverse) return run_reverse(o, out);
        if (*focused) return run_focused_sets(o, out);
        if (*oracle) return run_oracle(o, out);
        if (*bench) return run_bench(o, out);
    } catch (const DocumentError& e) {
        out << error_document("invalid_input", e.diagnostics());
        err << e.what() << "\n";
        return kInvalid;
    } catch (const IoError& e) {
        out << error_document("io", {{"", e.what()}});
        err << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        out << error_document("internal", {{"", e.what()}});
        err << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}

}  // namespace pauliflow
