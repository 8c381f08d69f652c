#include "pauliflow/flow_model.hpp"

#include "pauliflow/f2linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pauliflow {

CorrectionAssignment CorrectionAssignment::empty(const LabelledOpenGraph& g) {
    CorrectionAssignment c;
    for (std::size_t v : g.measured()) c.sets.emplace(v, g.empty_set());
    return c;
}

void check_well_formed(const LabelledOpenGraph& g, const CorrectionAssignment& c) {
    if (c.sets.size() != g.measured().size()) {
        throw std::invalid_argument("correction function must be defined on exactly the measured vertices");
    }
    for (const auto& [v, set] : c.sets) {
        if (v >= g.n() || g.is_output(v)) {
            throw std::invalid_argument("correction function defined on a non-measured vertex");
        }
        if (set.universe() != g.n()) throw std::invalid_argument("correction set does not belong to this graph");
        set.for_each([&](std::size_t w) {
            if (g.is_input(w)) {
                throw std::invalid_argument("c(" + g.name(v) + ") contains input '" + g.name(w) + "'");
            }
        });
    }
}

OrderRelation OrderRelation::empty(const LabelledOpenGraph& g) {
    return from_matrix(BitMatrix(g.measured_labels(), g.measured_labels()));
}

OrderRelation OrderRelation::from_matrix(BitMatrix relation) {
    OrderRelation out;
    const DagCheck dag = is_dag(relation);
    out.relation = std::move(relation);
    out.acyclic = dag.acyclic;
    if (dag.acyclic) out.layers = dag.layers;
    return out;
}

OrderRelation OrderRelation::from_edges(const LabelledOpenGraph& g,
                                        const std::vector<std::pair<std::string, std::string>>& edges) {
    BitMatrix rel(g.measured_labels(), g.measured_labels());
    for (const auto& [u, v] : edges) {
        const auto r = rel.row_labels().find(u);
        const auto c = rel.col_labels().find(v);
        if (!r || !c) throw std::invalid_argument("order edge (" + u + "," + v + ") leaves the measured vertices");
        rel.set(*r, *c);
    }
    return from_matrix(std::move(rel));
}

std::vector<std::pair<std::string, std::string>> OrderRelation::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t u = 0; u < relation.rows(); ++u) {
        for (std::size_t v = 0; v < relation.cols(); ++v) {
            if (relation.get(u, v)) out.emplace_back(relation.row_labels()[u], relation.col_labels()[v]);
        }
    }
    return out;
}

OrderRelation OrderRelation::closure() const { return from_matrix(transitive_closure(relation)); }

BitMatrix correction_to_matrix(const LabelledOpenGraph& g, const CorrectionAssignment& c) {
    check_well_formed(g, c);
    std::vector<std::size_t> row_of(g.n(), 0);
    for (std::size_t r = 0; r < g.non_inputs().size(); ++r) row_of[g.non_inputs()[r]] = r;
    BitMatrix m(g.non_input_labels(), g.measured_labels());
    for (std::size_t col = 0; col < g.measured().size(); ++col) {
        c.at(g.measured()[col]).for_each([&](std::size_t u) { m.set(row_of[u], col); });
    }
    return m;
}

CorrectionAssignment matrix_to_correction(const LabelledOpenGraph& g, const BitMatrix& c) {
    if (!(c.row_labels() == g.non_input_labels()) || !(c.col_labels() == g.measured_labels())) {
        throw std::invalid_argument("correction matrix must have non-input rows and measured columns");
    }
    CorrectionAssignment out = CorrectionAssignment::empty(g);
    for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t col = 0; col < c.cols(); ++col) {
            if (c.get(r, col)) out.sets.at(g.measured()[col]).insert(g.non_inputs()[r]);
        }
    }
    return out;
}

namespace {

using L = MeasurementLabel;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> measured_positions(const LabelledOpenGraph& g) {
    std::vector<std::size_t> pos(g.n(), kNone);
    for (std::size_t i = 0; i < g.measured().size(); ++i) pos[g.measured()[i]] = i;
    return pos;
}

}  // namespace

OrderRelation induced_relation(const LabelledOpenGraph& g, const CorrectionAssignment& c) {
    check_well_formed(g, c);
    const auto pos = measured_positions(g);
    BitMatrix rel(g.measured_labels(), g.measured_labels());
    for (std::size_t u : g.measured()) {
        const VertexSet& s = c.at(u);
        const VertexSet odd = odd_neighbourhood(g, s);
        const VertexSet codd = odd ^ s;
        for (std::size_t v : g.measured()) {
            if (v == u) continue;
            const L l = g.measurement(v);
            const bool p1 = s.contains(v) && l != L::X && l != L::Y;
            const bool p2 = odd.contains(v) && l != L::Y && l != L::Z;
            const bool p3 = codd.contains(v) && l == L::Y;
            if (p1 || p2 || p3) rel.set(pos[u], pos[v]);
        }
    }
    return OrderRelation::from_matrix(std::move(rel));
}

std::string_view to_string(FlowCondition c) {
    static constexpr std::array<std::string_view, kFlowConditionCount> names = {
        "P1", "P2", "P3", "P4", "P4a", "P4b", "P5", "P5a", "P5b", "P6", "P6a", "P6b", "P7", "P8", "P9", "F1", "F2", "F3",
    };
    return names[static_cast<std::size_t>(c)];
}

bool FlowCheckReport::holds(FlowCondition c) const {
    return std::all_of(vertices.begin(), vertices.end(), [c](const VertexCheck& v) { return v[c]; });
}

bool FlowCheckReport::passed() const {
    if (!order_valid) return false;
    for (auto c : {FlowCondition::P1, FlowCondition::P2, FlowCondition::P3, FlowCondition::P4, FlowCondition::P5,
                   FlowCondition::P6, FlowCondition::P7, FlowCondition::P8, FlowCondition::P9}) {
        if (!holds(c)) return false;
    }
    if (focused_checked) {
        for (auto c : {FlowCondition::F1, FlowCondition::F2, FlowCondition::F3}) {
            if (!holds(c)) return false;
        }
    }
    return true;
}

FlowCheckReport check_pauli_flow(const LabelledOpenGraph& g, const CorrectionAssignment& c,
                                 const OrderRelation& order, bool require_focused) {
    check_well_formed(g, c);
    if (!(order.relation.row_labels() == g.measured_labels()) ||
        !(order.relation.col_labels() == g.measured_labels())) {
        throw std::invalid_argument("order relation must be over the measured vertices");
    }

    FlowCheckReport report;
    report.focused_checked = require_focused;
    const DagCheck dag = is_dag(order.relation);
    report.order_valid = dag.acyclic;
    report.order_cycle = dag.cycle;
    std::optional<BitMatrix> closure;
    if (dag.acyclic) closure = transitive_closure(order.relation);

    const auto pos = measured_positions(g);
    for (std::size_t u : g.measured()) {
        VertexCheck check;
        check.vertex = g.name(u);
        check.holds.fill(true);
        auto fail = [&](FlowCondition cond, std::optional<std::size_t> other) {
            auto& slot = check.holds[static_cast<std::size_t>(cond)];
            if (!slot) return;
            slot = false;
            report.failures.push_back(
                {cond, g.name(u), other ? std::optional<std::string>(g.name(*other)) : std::nullopt});
        };
        auto before = [&](std::size_t a, std::size_t b) { return closure->get(pos[a], pos[b]); };

        const VertexSet& s = c.at(u);
        const VertexSet odd = odd_neighbourhood(g, s);
        const VertexSet codd = odd ^ s;
        const L lu = g.measurement(u);

        for (std::size_t v : g.measured()) {
            if (v == u) continue;
            const L lv = g.measurement(v);
            if (closure) {
                if (s.contains(v) && lv != L::X && lv != L::Y && !before(u, v)) fail(FlowCondition::P1, v);
                if (odd.contains(v) && lv != L::Y && lv != L::Z && !before(u, v)) fail(FlowCondition::P2, v);
                if (!before(u, v) && lv == L::Y && codd.contains(v)) fail(FlowCondition::P3, v);
            }
            if (require_focused) {
                if (s.contains(v) && !(lv == L::XY || lv == L::X || lv == L::Y)) fail(FlowCondition::F1, v);
                if (odd.contains(v) && (lv == L::XY || lv == L::X)) fail(FlowCondition::F2, v);
                if (lv == L::Y && codd.contains(v)) fail(FlowCondition::F3, v);
            }
        }

        const bool in_c = s.contains(u);
        const bool in_odd = odd.contains(u);
        const bool in_codd = codd.contains(u);
        switch (lu) {
            case L::XY:
                if (!in_odd) fail(FlowCondition::P4a, u);
                if (in_c) fail(FlowCondition::P4b, u);
                if (in_c || !in_odd) fail(FlowCondition::P4, u);
                break;
            case L::XZ:
                if (!in_c) fail(FlowCondition::P5a, u);
                if (in_codd) fail(FlowCondition::P5b, u);
                if (!in_c || !in_odd) fail(FlowCondition::P5, u);
                break;
            case L::YZ:
                if (!in_c) fail(FlowCondition::P6a, u);
                if (in_odd) fail(FlowCondition::P6b, u);
                if (!in_c || in_odd) fail(FlowCondition::P6, u);
                break;
            case L::X:
                if (!in_odd) fail(FlowCondition::P7, u);
                break;
            case L::Z:
                if (!in_c) fail(FlowCondition::P8, u);
                break;
            case L::Y:
                if (!in_codd) fail(FlowCondition::P9, u);
                break;
        }
        report.vertices.push_back(std::move(check));
    }
    return report;
}

}  // namespace pauliflow
