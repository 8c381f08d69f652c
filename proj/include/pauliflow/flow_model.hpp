#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/open_graph.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pauliflow {

/// c: comp(O) -> subsets of comp(I), keyed by vertex index.
struct CorrectionAssignment {
    std::map<std::size_t, VertexSet> sets;

    /// Every measured vertex mapped to the empty set.
    static CorrectionAssignment empty(const LabelledOpenGraph& g);
    [[nodiscard]] const VertexSet& at(std::size_t v) const { return sets.at(v); }
    friend bool operator==(const CorrectionAssignment&, const CorrectionAssignment&) = default;
};

/// Throws std::invalid_argument unless the domain is exactly comp(O) and every
/// correction set lies inside comp(I).
void check_well_formed(const LabelledOpenGraph& g, const CorrectionAssignment& c);

/// Strict order candidate on comp(O). relation(u, v) == 1 means u is measured before v.
struct OrderRelation {
    BitMatrix relation;
    bool acyclic = false;
    /// Topological generations (earliest first), present when acyclic.
    std::optional<std::vector<std::vector<std::string>>> layers;

    /// Empty relation over g's measured vertices.
    static OrderRelation empty(const LabelledOpenGraph& g);
    /// Wraps a before-relation matrix and evaluates acyclicity and layers.
    static OrderRelation from_matrix(BitMatrix relation);
    static OrderRelation from_edges(const LabelledOpenGraph& g,
                                    const std::vector<std::pair<std::string, std::string>>& edges);

    [[nodiscard]] bool before(std::string_view u, std::string_view v) const { return relation.at(u, v); }
    /// (u, v) pairs in row-major vertex order.
    [[nodiscard]] std::vector<std::pair<std::string, std::string>> edges() const;
    /// Transitive closure. Throws std::invalid_argument if cyclic.
    [[nodiscard]] OrderRelation closure() const;
};

/// C[u][v] = 1 iff u in c(v); rows comp(I), columns comp(O).
BitMatrix correction_to_matrix(const LabelledOpenGraph& g, const CorrectionAssignment& c);
/// Inverse of correction_to_matrix; throws std::invalid_argument on label mismatch.
CorrectionAssignment matrix_to_correction(const LabelledOpenGraph& g, const BitMatrix& c);

/// The minimal relation forced by P1-P3 for c.
OrderRelation induced_relation(const LabelledOpenGraph& g, const CorrectionAssignment& c);

enum class FlowCondition {
    P1, P2, P3, P4, P4a, P4b, P5, P5a, P5b, P6, P6a, P6b, P7, P8, P9, F1, F2, F3,
};
inline constexpr std::size_t kFlowConditionCount = 18;
std::string_view to_string(FlowCondition c);

struct ConditionFailure {
    FlowCondition condition;
    std::string vertex;
    /// The other vertex involved, when there is one.
    std::optional<std::string> witness;
};

struct VertexCheck {
    std::string vertex;
    std::array<bool, kFlowConditionCount> holds{};
    [[nodiscard]] bool operator[](FlowCondition c) const { return holds[static_cast<std::size_t>(c)]; }
};

struct FlowCheckReport {
    bool order_valid = false;
    /// Cycle in the supplied relation when order_valid is false.
    std::vector<std::string> order_cycle;
    bool focused_checked = false;
    std::vector<VertexCheck> vertices;
    /// First counterexample for every (vertex, condition) that fails.
    std::vector<ConditionFailure> failures;

    /// Whether `c` holds at every vertex.
    [[nodiscard]] bool holds(FlowCondition c) const;
    /// Valid order, P1-P9 everywhere, and F1-F3 when focus was requested.
    [[nodiscard]] bool passed() const;
};

/// Evaluates P1-P9 (and the P4-P6 halves) against the transitive closure of
/// `order`, plus F1-F3 when require_focused. A cyclic relation marks the order
/// invalid and leaves P1-P3 unevaluated.
FlowCheckReport check_pauli_flow(const LabelledOpenGraph& g, const CorrectionAssignment& c,
                                 const OrderRelation& order, bool require_focused);

}  // namespace pauliflow
