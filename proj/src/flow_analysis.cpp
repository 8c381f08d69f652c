#include "pauliflow/flow_analysis.hpp"

#include "pauliflow/demand_matrices.hpp"
#include "pauliflow/f2linalg.hpp"

#include <stdexcept>

namespace pauliflow {

namespace {
using L = MeasurementLabel;

bool x_like(L l) { return l == L::XY || l == L::X || l == L::Y; }
}  // namespace

FocusedSetBasis focused_sets_basis(const LabelledOpenGraph& g) {
    const BitMatrix f = kernel_basis(flow_demand_matrix(g));
    FocusedSetBasis basis;
    for (std::size_t col = 0; col < f.cols(); ++col) {
        VertexSet s = g.empty_set();
        for (std::size_t r = 0; r < f.rows(); ++r) {
            if (f.get(r, col)) s.insert(g.non_inputs()[r]);
        }
        basis.sets.push_back(std::move(s));
    }
    return basis;
}

bool is_focused_over(const LabelledOpenGraph& g, const VertexSet& a, const VertexSet& s) {
    const VertexSet odd = odd_neighbourhood(g, a);
    bool ok = true;
    s.for_each([&](std::size_t w) {
        if (g.is_output(w)) throw std::invalid_argument("focus region must consist of measured vertices");
        const L l = g.measurement(w);
        if (a.contains(w) && !x_like(l)) ok = false;                         // Fs1
        if (odd.contains(w) && (l == L::XY || l == L::X)) ok = false;        // Fs2
        if (l == L::Y && a.contains(w) != odd.contains(w)) ok = false;       // Fs3
    });
    return ok;
}

VertexSet max_focus_region(const LabelledOpenGraph& g, const VertexSet& a) {
    if (a.universe() != g.n()) throw std::invalid_argument("vertex set does not belong to this graph");
    a.for_each([&](std::size_t v) {
        if (g.is_input(v)) throw std::invalid_argument("'" + g.name(v) + "' is an input");
    });
    const BitMatrix m = flow_demand_matrix(g);
    VertexSet region = g.empty_set();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool parity = false;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c) && a.contains(g.non_inputs()[c])) parity = !parity;
        }
        if (!parity) region.insert(g.measured()[r]);
    }
    return region;
}

LabelledOpenGraph reverse_graph(const LabelledOpenGraph& g) {
    if (g.n_inputs() != g.n_outputs()) throw std::invalid_argument("reverse graph requires n_I == n_O");
    if (!(g.inputs() & g.outputs()).empty()) throw std::invalid_argument("reverse graph requires disjoint I and O");
    GraphData data = g.to_data();
    std::swap(data.inputs, data.outputs);
    data.labels.clear();
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (g.is_input(v)) continue;  // becomes an output
        data.labels.emplace(g.name(v), g.is_output(v) ? L::XY : g.measurement(v));
    }
    return LabelledOpenGraph(data);
}

ReversalReport check_reversal_properties(const LabelledOpenGraph& g) {
    const LabelledOpenGraph r = reverse_graph(g);
    const FlowResult fwd = find_flow(g, {.want_closure = true});
    const FlowResult bwd = find_flow(r, {.want_closure = true});

    ReversalReport report;
    report.original_has_flow = fwd.has_flow;
    report.reversed_has_flow = bwd.has_flow;
    report.existence_agrees = fwd.has_flow == bwd.has_flow;
    if (!report.existence_agrees) {
        report.mismatches.push_back(std::string("flow existence differs: original ") +
                                    (fwd.has_flow ? "has" : "lacks") + " flow, reverse " +
                                    (bwd.has_flow ? "has" : "lacks") + " flow");
    }
    if (!fwd.has_flow || !bwd.has_flow) return report;

    const VertexClasses cls = classify(g);
    const VertexSet rows = g.inputs() | cls.x_like;   // u
    const VertexSet cols = cls.x_like | g.outputs();  // w
    rows.for_each([&](std::size_t u) {
        cols.for_each([&](std::size_t w) {
            const bool forward = fwd.correction.at(u).contains(w);
            const bool backward = bwd.correction.at(w).contains(u);
            if (forward != backward) {
                report.correction_correspondence = false;
                report.mismatches.push_back("correction mismatch: " + g.name(w) + " in c(" + g.name(u) + ") is " +
                                            (forward ? "true" : "false") + " but " + g.name(u) + " in c'(" +
                                            g.name(w) + ") is " + (backward ? "true" : "false"));
            }
        });
    });

    const auto& before = fwd.closure->relation;
    const auto& after = bwd.closure->relation;
    cls.planar_internal.for_each([&](std::size_t u) {
        cls.planar_internal.for_each([&](std::size_t w) {
            if (u == w) return;
            const bool forward = before.at(g.name(u), g.name(w));
            const bool backward = after.at(g.name(w), g.name(u));
            if (forward != backward) {
                report.order_inversion = false;
                report.mismatches.push_back("order mismatch on " + g.name(u) + ", " + g.name(w));
            }
        });
    });
    return report;
}

LabelledOpenGraph graph_from_matrix(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("graph_from_matrix requires a square matrix");
    const std::size_t n = m.rows();
    GraphData data;
    for (std::size_t k = 1; k <= n; ++k) data.vertices.push_back("i" + std::to_string(k));
    for (std::size_t k = 1; k <= n; ++k) data.vertices.push_back("o" + std::to_string(k));
    for (std::size_t k = 0; k < n; ++k) {
        const std::string in = "i" + std::to_string(k + 1);
        data.inputs.push_back(in);
        data.outputs.push_back("o" + std::to_string(k + 1));
        data.labels.emplace(in, L::X);
        for (std::size_t l = 0; l < n; ++l) {
            if (m.get(k, l)) data.edges.emplace_back(in, "o" + std::to_string(l + 1));
        }
    }
    return LabelledOpenGraph(data);
}

}  // namespace pauliflow
