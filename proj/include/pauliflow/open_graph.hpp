#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/vertex_set.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pauliflow {

enum class MeasurementLabel { X, Y, Z, XY, XZ, YZ };

std::string_view to_string(MeasurementLabel label);
std::optional<MeasurementLabel> parse_measurement_label(std::string_view text);

constexpr bool is_planar(MeasurementLabel l) {
    return l == MeasurementLabel::XY || l == MeasurementLabel::XZ || l == MeasurementLabel::YZ;
}
constexpr bool is_pauli(MeasurementLabel l) { return !is_planar(l); }

/// Raw, possibly invalid description of a labelled open graph.
struct GraphData {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::map<std::string, MeasurementLabel> labels;
};

enum class ViolationKind {
    DuplicateVertex,
    SelfLoop,
    DuplicateEdge,
    DanglingEndpoint,
    UnknownInput,
    UnknownOutput,
    DuplicateInput,
    DuplicateOutput,
    LabelOnUnknownVertex,
    LabelledOutput,
    UnlabelledNonOutput,
    BadInputLabel,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
};

/// Every violated invariant, in a stable order; empty means valid.
std::vector<Violation> validate(const GraphData& data);

class InvalidGraph : public std::invalid_argument {
public:
    explicit InvalidGraph(std::vector<Violation> violations);
    [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// A validated labelled open graph. Vertex order is the declaration order of
/// `GraphData::vertices`; every matrix built from the graph uses it.
class LabelledOpenGraph {
public:
    /// Throws InvalidGraph when validate(data) reports anything.
    explicit LabelledOpenGraph(const GraphData& data);

    [[nodiscard]] std::size_t n() const { return names_.size(); }
    [[nodiscard]] std::size_t n_inputs() const { return inputs_.count(); }
    [[nodiscard]] std::size_t n_outputs() const { return outputs_.count(); }

    [[nodiscard]] const Labels& vertex_labels() const { return names_; }
    [[nodiscard]] const std::string& name(std::size_t v) const { return names_[v]; }
    /// Throws std::out_of_range for unknown names.
    [[nodiscard]] std::size_t index_of(std::string_view name) const { return names_.index_of(name); }

    [[nodiscard]] bool is_input(std::size_t v) const { return inputs_.contains(v); }
    [[nodiscard]] bool is_output(std::size_t v) const { return outputs_.contains(v); }
    [[nodiscard]] const VertexSet& inputs() const { return inputs_; }
    [[nodiscard]] const VertexSet& outputs() const { return outputs_; }
    /// nullopt exactly for outputs.
    [[nodiscard]] std::optional<MeasurementLabel> label(std::size_t v) const { return labels_[v]; }
    /// Label of a measured vertex; throws std::logic_error for outputs.
    [[nodiscard]] MeasurementLabel measurement(std::size_t v) const;

    [[nodiscard]] const VertexSet& neighbours(std::size_t v) const { return adjacency_[v]; }
    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].contains(v); }
    /// Each edge once as (u, v) with u < v, sorted.
    [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    /// comp(O) and comp(I) in vertex order.
    [[nodiscard]] const std::vector<std::size_t>& measured() const { return measured_; }
    [[nodiscard]] const std::vector<std::size_t>& non_inputs() const { return non_inputs_; }
    [[nodiscard]] const Labels& measured_labels() const { return measured_labels_; }
    [[nodiscard]] const Labels& non_input_labels() const { return non_input_labels_; }
    [[nodiscard]] VertexSet measured_set() const;
    [[nodiscard]] VertexSet non_input_set() const;

    [[nodiscard]] VertexSet empty_set() const { return VertexSet(n()); }
    /// Throws std::out_of_range for unknown names.
    [[nodiscard]] VertexSet set_of(const std::vector<std::string>& names) const;
    [[nodiscard]] std::vector<std::string> names_of(const VertexSet& set) const;

    /// Canonical description: declared vertex order, sorted edges, I/O in vertex order.
    [[nodiscard]] GraphData to_data() const;

    friend bool operator==(const LabelledOpenGraph& a, const LabelledOpenGraph& b);

private:
    Labels names_;
    std::vector<VertexSet> adjacency_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    VertexSet inputs_;
    VertexSet outputs_;
    std::vector<std::optional<MeasurementLabel>> labels_;
    std::vector<std::size_t> measured_;
    std::vector<std::size_t> non_inputs_;
    Labels measured_labels_;
    Labels non_input_labels_;
};

/// {v : |N(v) ∩ A| odd}
VertexSet odd_neighbourhood(const LabelledOpenGraph& g, const VertexSet& a);
/// odd_neighbourhood(A) Δ A
VertexSet closed_odd_neighbourhood(const LabelledOpenGraph& g, const VertexSet& a);

struct VertexClasses {
    VertexSet internal;
    VertexSet x_like;  // internal with label in {XY, X, Y}
    VertexSet z_like;  // internal with label in {XZ, YZ, Z}
    VertexSet pauli_internal;
    VertexSet planar_internal;
};

VertexClasses classify(const LabelledOpenGraph& g);

}  // namespace pauliflow
