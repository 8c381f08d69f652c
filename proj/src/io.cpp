#include "pauliflow/io.hpp"

#include "pauliflow/f2linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace pauliflow {

using nlohmann::json;

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    std::string text = "invalid document";
    for (const auto& d : diagnostics) text += "; " + (d.location.empty() ? "/" : d.location) + ": " + d.message;
    return text;
}

[[noreturn]] void fail(std::string location, std::string message) {
    throw DocumentError({{std::move(location), std::move(message)}});
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line:column.
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(std::to_string(line) + ":" + std::to_string(col), e.what());
    }
}

void require_fields(const json& obj, const std::string& where, const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (!required.contains(key) && !optional.contains(key)) fail(where + "/" + key, "unknown field");
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) fail(where + "/" + key, "missing field");
    }
}

std::string string_at(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(string_at(v[i], where + "/" + std::to_string(i)));
    return out;
}

std::pair<std::string, std::string> string_pair(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) fail(where, "expected a pair [u, v]");
    return {string_at(v[0], where + "/0"), string_at(v[1], where + "/1")};
}

std::string location_of(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DuplicateVertex: return "/vertices";
        case ViolationKind::SelfLoop:
        case ViolationKind::DuplicateEdge:
        case ViolationKind::DanglingEndpoint: return "/edges";
        case ViolationKind::UnknownInput:
        case ViolationKind::DuplicateInput: return "/inputs";
        case ViolationKind::UnknownOutput:
        case ViolationKind::DuplicateOutput: return "/outputs";
        case ViolationKind::LabelOnUnknownVertex:
        case ViolationKind::LabelledOutput:
        case ViolationKind::UnlabelledNonOutput:
        case ViolationKind::BadInputLabel: return "/labels";
    }
    return "";
}

json names_json(const LabelledOpenGraph& g, const VertexSet& s) { return g.names_of(s); }

json pairs_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
    json out = json::array();
    for (const auto& [u, v] : pairs) out.push_back({u, v});
    return out;
}

std::string dump(const json& doc) { return doc.dump() + "\n"; }

std::string quote_id(const std::string& id) {
    std::string out = "\"";
    for (char ch : id) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

DocumentError::DocumentError(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

LabelledOpenGraph parse_graph(const std::string& text) {
    const json doc = parse_json(text);
    require_fields(doc, "", {"vertices", "edges", "inputs", "outputs", "labels"}, {});

    GraphData data;
    data.vertices = string_list(doc["vertices"], "/vertices");
    const json& edges = doc["edges"];
    if (!edges.is_array()) fail("/edges", "expected an array of pairs");
    for (std::size_t i = 0; i < edges.size(); ++i) data.edges.push_back(string_pair(edges[i], "/edges/" + std::to_string(i)));
    data.inputs = string_list(doc["inputs"], "/inputs");
    data.outputs = string_list(doc["outputs"], "/outputs");
    const json& labels = doc["labels"];
    if (!labels.is_object()) fail("/labels", "expected an object mapping vertex ids to labels");
    for (const auto& [v, l] : labels.items()) {
        const std::string where = "/labels/" + v;
        const auto label = parse_measurement_label(string_at(l, where));
        if (!label) fail(where, "unknown measurement label '" + l.get<std::string>() + "'");
        data.labels.emplace(v, *label);
    }

    if (auto violations = validate(data); !violations.empty()) {
        std::vector<Diagnostic> diagnostics;
        for (const auto& v : violations) diagnostics.push_back({location_of(v.kind), std::string(to_string(v.kind)) + ": " + v.message});
        throw DocumentError(std::move(diagnostics));
    }
    return LabelledOpenGraph(data);
}

std::string serialize_graph(const LabelledOpenGraph& g) {
    const GraphData data = g.to_data();
    json doc;
    doc["vertices"] = data.vertices;
    doc["edges"] = pairs_json(data.edges);
    doc["inputs"] = data.inputs;
    doc["outputs"] = data.outputs;
    json labels = json::object();
    for (const auto& [v, l] : data.labels) labels[v] = std::string(to_string(l));
    doc["labels"] = labels;
    return dump(doc);
}

std::string serialize_flow(const LabelledOpenGraph& g, const FlowResult& result) {
    json doc;
    if (!result.has_flow) {
        doc["status"] = "no_flow";
        json reason;
        reason["code"] = result.reason ? std::string(to_string(*result.reason)) : "Unknown";
        if (result.reason == NoFlowReason::CyclicNC) reason["cycle"] = result.witness;
        if (result.reason == NoFlowReason::LayerStuck) reason["unsolved"] = result.witness;
        doc["reason"] = reason;
        return dump(doc);
    }
    doc["status"] = "flow";
    json correction = json::object();
    for (std::size_t v : g.measured()) correction[g.name(v)] = names_json(g, result.correction.at(v));
    doc["correction"] = correction;
    doc["order_edges"] = pairs_json(result.relation.edges());
    if (result.closure) doc["closure"] = pairs_json(result.closure->edges());
    doc["layers"] = result.layers;
    return dump(doc);
}

FlowDocument parse_flow(const LabelledOpenGraph& g, const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("status")) fail("/status", "missing field");
    const std::string status = string_at(doc["status"], "/status");
    FlowDocument out;
    if (status == "no_flow") {
        require_fields(doc, "", {"status", "reason"}, {});
        const json& reason = doc["reason"];
        require_fields(reason, "/reason", {"code"}, {"cycle", "unsolved"});
        out.reason_code = string_at(reason["code"], "/reason/code");
        for (const char* key : {"cycle", "unsolved"}) {
            if (reason.contains(key)) out.reason_witness = string_list(reason[key], std::string("/reason/") + key);
        }
        return out;
    }
    if (status != "flow") fail("/status", "expected \"flow\" or \"no_flow\"");
    require_fields(doc, "", {"status", "correction", "order_edges"}, {"closure", "layers"});
    out.has_flow = true;

    const json& correction = doc["correction"];
    if (!correction.is_object()) fail("/correction", "expected an object");
    for (const auto& [v, members] : correction.items()) {
        const std::string where = "/correction/" + v;
        const auto idx = g.vertex_labels().find(v);
        if (!idx || g.is_output(*idx)) fail(where, "not a measured vertex");
        VertexSet s = g.empty_set();
        const auto names = string_list(members, where);
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto w = g.vertex_labels().find(names[i]);
            if (!w) fail(where + "/" + std::to_string(i), "unknown vertex '" + names[i] + "'");
            if (g.is_input(*w)) fail(where + "/" + std::to_string(i), "correction sets may not contain inputs");
            s.insert(*w);
        }
        out.correction.sets.emplace(*idx, std::move(s));
    }
    for (std::size_t v : g.measured()) {
        if (!out.correction.sets.contains(v)) fail("/correction/" + g.name(v), "missing correction set");
    }

    auto read_relation = [&](const char* key) {
        const json& arr = doc[key];
        const std::string where = std::string("/") + key;
        if (!arr.is_array()) fail(where, "expected an array of pairs");
        std::vector<std::pair<std::string, std::string>> pairs;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            auto p = string_pair(arr[i], where + "/" + std::to_string(i));
            for (const auto* end : {&p.first, &p.second}) {
                if (!g.measured_labels().contains(*end)) fail(where + "/" + std::to_string(i), "'" + *end + "' is not a measured vertex");
            }
            pairs.push_back(std::move(p));
        }
        return OrderRelation::from_edges(g, pairs);
    };
    out.order = read_relation("order_edges");
    if (doc.contains("closure")) out.closure = read_relation("closure");
    if (doc.contains("layers")) {
        const json& layers = doc["layers"];
        if (!layers.is_array()) fail("/layers", "expected an array of arrays");
        std::vector<std::vector<std::string>> parsed;
        for (std::size_t i = 0; i < layers.size(); ++i) parsed.push_back(string_list(layers[i], "/layers/" + std::to_string(i)));
        out.layers = std::move(parsed);
    }
    return out;
}

std::string serialize_check_report(const FlowCheckReport& report) {
    json doc;
    doc["status"] = report.passed() ? "pass" : "fail";
    doc["order_valid"] = report.order_valid;
    if (!report.order_valid) doc["order_cycle"] = report.order_cycle;
    doc["focused_checked"] = report.focused_checked;
    json failures = json::array();
    for (const auto& f : report.failures) {
        json item;
        item["condition"] = std::string(to_string(f.condition));
        item["vertex"] = f.vertex;
        if (f.witness) item["witness"] = *f.witness;
        failures.push_back(item);
    }
    doc["failures"] = failures;
    return dump(doc);
}

std::string export_dot(const BitMatrix& relation) {
    if (!(relation.row_labels() == relation.col_labels())) {
        throw std::invalid_argument("export_dot needs a square relation over one label set");
    }
    const DagCheck dag = is_dag(relation);
    if (!dag.acyclic) throw std::invalid_argument("export_dot: relation has a cycle");
    std::ostringstream os;
    os << "digraph order {\n";
    for (const auto& v : relation.row_labels().names()) os << "  " << quote_id(v) << ";\n";
    for (std::size_t u = 0; u < relation.rows(); ++u) {
        for (std::size_t v = 0; v < relation.cols(); ++v) {
            if (relation.get(u, v)) {
                os << "  " << quote_id(relation.row_labels()[u]) << " -> " << quote_id(relation.col_labels()[v]) << ";\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_dot(const OrderRelation& relation) { return export_dot(relation.relation); }

std::string format_matrix(const std::string& title, const BitMatrix& m) {
    std::size_t label_width = title.size();
    for (const auto& r : m.row_labels().names()) label_width = std::max(label_width, r.size());
    std::vector<std::size_t> widths;
    for (const auto& c : m.col_labels().names()) widths.push_back(std::max<std::size_t>(c.size(), 1));

    std::ostringstream os;
    auto emit_line = [&](const std::string& head, auto&& cell) {
        std::string line = head + std::string(label_width - head.size(), ' ');
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string text = cell(c);
            line += ' ' + text + std::string(widths[c] - text.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };
    emit_line(title, [&](std::size_t c) { return m.col_labels()[c]; });
    for (std::size_t r = 0; r < m.rows(); ++r) {
        emit_line(m.row_labels()[r], [&](std::size_t c) { return std::string(m.get(r, c) ? "1" : "0"); });
    }
    return os.str();
}

}  // namespace pauliflow
