#include "pauliflow/open_graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pauliflow {

std::string_view to_string(MeasurementLabel label) {
    switch (label) {
        case MeasurementLabel::X: return "X";
        case MeasurementLabel::Y: return "Y";
        case MeasurementLabel::Z: return "Z";
        case MeasurementLabel::XY: return "XY";
        case MeasurementLabel::XZ: return "XZ";
        case MeasurementLabel::YZ: return "YZ";
    }
    return "?";
}

std::optional<MeasurementLabel> parse_measurement_label(std::string_view text) {
    for (auto l : {MeasurementLabel::X, MeasurementLabel::Y, MeasurementLabel::Z, MeasurementLabel::XY,
                   MeasurementLabel::XZ, MeasurementLabel::YZ}) {
        if (to_string(l) == text) return l;
    }
    return std::nullopt;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DuplicateVertex: return "duplicate_vertex";
        case ViolationKind::SelfLoop: return "self_loop";
        case ViolationKind::DuplicateEdge: return "duplicate_edge";
        case ViolationKind::DanglingEndpoint: return "dangling_endpoint";
        case ViolationKind::UnknownInput: return "unknown_input";
        case ViolationKind::UnknownOutput: return "unknown_output";
        case ViolationKind::DuplicateInput: return "duplicate_input";
        case ViolationKind::DuplicateOutput: return "duplicate_output";
        case ViolationKind::LabelOnUnknownVertex: return "label_on_unknown_vertex";
        case ViolationKind::LabelledOutput: return "labelled_output";
        case ViolationKind::UnlabelledNonOutput: return "unlabelled_non_output";
        case ViolationKind::BadInputLabel: return "bad_input_label";
    }
    return "?";
}

std::vector<Violation> validate(const GraphData& data) {
    std::vector<Violation> out;
    auto report = [&](ViolationKind kind, std::string message) { out.push_back({kind, std::move(message)}); };

    std::unordered_set<std::string> vertices;
    for (const auto& v : data.vertices) {
        if (!vertices.insert(v).second) report(ViolationKind::DuplicateVertex, "vertex '" + v + "' declared twice");
    }

    std::set<std::pair<std::string, std::string>> seen_edges;
    for (const auto& [a, b] : data.edges) {
        const std::string edge = "edge '" + a + "'-'" + b + "'";
        bool dangling = false;
        for (const auto* end : {&a, &b}) {
            if (!vertices.contains(*end)) {
                report(ViolationKind::DanglingEndpoint, edge + " has unknown endpoint '" + *end + "'");
                dangling = true;
            }
        }
        if (dangling) continue;
        if (a == b) {
            report(ViolationKind::SelfLoop, edge + " is a self-loop");
            continue;
        }
        if (!seen_edges.insert(std::minmax(a, b)).second) report(ViolationKind::DuplicateEdge, edge + " is repeated");
    }

    std::unordered_set<std::string> inputs;
    for (const auto& v : data.inputs) {
        if (!vertices.contains(v)) report(ViolationKind::UnknownInput, "input '" + v + "' is not a vertex");
        if (!inputs.insert(v).second) report(ViolationKind::DuplicateInput, "input '" + v + "' listed twice");
    }
    std::unordered_set<std::string> outputs;
    for (const auto& v : data.outputs) {
        if (!vertices.contains(v)) report(ViolationKind::UnknownOutput, "output '" + v + "' is not a vertex");
        if (!outputs.insert(v).second) report(ViolationKind::DuplicateOutput, "output '" + v + "' listed twice");
    }

    for (const auto& [v, label] : data.labels) {
        if (!vertices.contains(v)) {
            report(ViolationKind::LabelOnUnknownVertex, "label given for unknown vertex '" + v + "'");
        } else if (outputs.contains(v)) {
            report(ViolationKind::LabelledOutput, "output '" + v + "' must not carry a measurement label");
        }
    }
    for (const auto& v : data.vertices) {
        if (outputs.contains(v)) continue;
        auto it = data.labels.find(v);
        if (it == data.labels.end()) {
            report(ViolationKind::UnlabelledNonOutput, "non-output '" + v + "' has no measurement label");
            continue;
        }
        const auto l = it->second;
        if (inputs.contains(v) && l != MeasurementLabel::X && l != MeasurementLabel::Y && l != MeasurementLabel::XY) {
            report(ViolationKind::BadInputLabel,
                   "input '" + v + "' has label " + std::string(to_string(l)) + ", not in {X,Y,XY}");
        }
    }
    return out;
}

namespace {
std::string join_violations(const std::vector<Violation>& violations) {
    std::string text = "invalid labelled open graph";
    for (const auto& v : violations) text += "; " + v.message;
    return text;
}
}  // namespace

InvalidGraph::InvalidGraph(std::vector<Violation> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

LabelledOpenGraph::LabelledOpenGraph(const GraphData& data) {
    if (auto violations = validate(data); !violations.empty()) throw InvalidGraph(std::move(violations));

    names_ = Labels(data.vertices);
    const std::size_t count = n();
    adjacency_.assign(count, VertexSet(count));
    for (const auto& [a, b] : data.edges) {
        const std::size_t u = index_of(a);
        const std::size_t v = index_of(b);
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());

    inputs_ = VertexSet(count);
    outputs_ = VertexSet(count);
    for (const auto& v : data.inputs) inputs_.insert(index_of(v));
    for (const auto& v : data.outputs) outputs_.insert(index_of(v));

    labels_.assign(count, std::nullopt);
    std::vector<std::string> measured_names;
    std::vector<std::string> non_input_names;
    for (std::size_t v = 0; v < count; ++v) {
        if (!is_output(v)) {
            labels_[v] = data.labels.at(name(v));
            measured_.push_back(v);
            measured_names.push_back(name(v));
        }
        if (!is_input(v)) {
            non_inputs_.push_back(v);
            non_input_names.push_back(name(v));
        }
    }
    measured_labels_ = Labels(std::move(measured_names));
    non_input_labels_ = Labels(std::move(non_input_names));
}

MeasurementLabel LabelledOpenGraph::measurement(std::size_t v) const {
    if (!labels_.at(v)) throw std::logic_error("vertex '" + name(v) + "' is an output and carries no label");
    return *labels_[v];
}

VertexSet LabelledOpenGraph::measured_set() const {
    VertexSet s(n());
    for (std::size_t v : measured_) s.insert(v);
    return s;
}

VertexSet LabelledOpenGraph::non_input_set() const {
    VertexSet s(n());
    for (std::size_t v : non_inputs_) s.insert(v);
    return s;
}

VertexSet LabelledOpenGraph::set_of(const std::vector<std::string>& names) const {
    VertexSet s(n());
    for (const auto& v : names) s.insert(index_of(v));
    return s;
}

std::vector<std::string> LabelledOpenGraph::names_of(const VertexSet& set) const {
    std::vector<std::string> out;
    set.for_each([&](std::size_t v) { out.push_back(name(v)); });
    return out;
}

GraphData LabelledOpenGraph::to_data() const {
    GraphData data;
    data.vertices = names_.names();
    for (const auto& [u, v] : edges_) data.edges.emplace_back(name(u), name(v));
    data.inputs = names_of(inputs_);
    data.outputs = names_of(outputs_);
    for (std::size_t v : measured_) data.labels.emplace(name(v), *labels_[v]);
    return data;
}

bool operator==(const LabelledOpenGraph& a, const LabelledOpenGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_ && a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_ &&
           a.labels_ == b.labels_;
}

VertexSet odd_neighbourhood(const LabelledOpenGraph& g, const VertexSet& a) {
    if (a.universe() != g.n()) throw std::invalid_argument("vertex set does not belong to this graph");
    VertexSet odd(g.n());
    a.for_each([&](std::size_t v) { odd ^= g.neighbours(v); });
    return odd;
}

VertexSet closed_odd_neighbourhood(const LabelledOpenGraph& g, const VertexSet& a) {
    return odd_neighbourhood(g, a) ^ a;
}

VertexClasses classify(const LabelledOpenGraph& g) {
    VertexClasses c{g.empty_set(), g.empty_set(), g.empty_set(), g.empty_set(), g.empty_set()};
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (g.is_input(v) || g.is_output(v)) continue;
        const auto l = g.measurement(v);
        c.internal.insert(v);
        if (l == MeasurementLabel::XY || l == MeasurementLabel::X || l == MeasurementLabel::Y) {
            c.x_like.insert(v);
        } else {
            c.z_like.insert(v);
        }
        if (is_pauli(l)) {
            c.pauli_internal.insert(v);
        } else {
            c.planar_internal.insert(v);
        }
    }
    return c;
}

}  // namespace pauliflow
