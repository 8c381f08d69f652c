#include "pauliflow/flow_finder.hpp"

#include "pauliflow/demand_matrices.hpp"
#include "pauliflow/f2linalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace pauliflow {

std::string_view to_string(NoFlowReason reason) {
    switch (reason) {
        case NoFlowReason::NotRightInvertible: return "NotRightInvertible";
        case NoFlowReason::CyclicNC: return "CyclicNC";
        case NoFlowReason::LayerStuck: return "LayerStuck";
        case NoFlowReason::MoreInputsThanOutputs: return "MoreInputsThanOutputs";
    }
    return "?";
}

BitMatrix relation_from_order_product(const BitMatrix& order_product) {
    BitMatrix rel = order_product.transpose();
    for (std::size_t v = 0; v < rel.rows(); ++v) rel.set(v, v, false);
    return rel;
}

namespace {

FlowResult no_flow(NoFlowReason reason, std::vector<std::string> witness, FinderTrace trace) {
    FlowResult r;
    r.reason = reason;
    r.witness = std::move(witness);
    r.trace = std::move(trace);
    return r;
}

// Generations of the before-relation counted from the end: vertices with no successor first.
std::vector<std::vector<std::string>> solve_order_layers(const BitMatrix& before) {
    return is_dag(before.transpose()).layers;
}

FlowResult flow_from(const LabelledOpenGraph& g, BitMatrix c, BitMatrix nc, FinderTrace trace) {
    FlowResult r;
    r.has_flow = true;
    r.correction = matrix_to_correction(g, c);
    r.relation = OrderRelation::from_matrix(relation_from_order_product(nc));
    r.correction_matrix = c;
    trace.correction = std::move(c);
    trace.order_product = std::move(nc);
    r.trace = std::move(trace);
    return r;
}

// Column labels for the kernel block that do not collide with vertex names.
Labels kernel_labels(const LabelledOpenGraph& g, std::size_t count) {
    std::string prefix = "F";
    for (;;) {
        Labels candidate = Labels::synthetic(prefix, count, 1);
        const bool clash = std::any_of(candidate.names().begin(), candidate.names().end(),
                                       [&](const std::string& s) { return g.vertex_labels().contains(s); });
        if (!clash) return candidate;
        prefix += "'";
    }
}

constexpr std::size_t kZeroLead = std::numeric_limits<std::size_t>::max();

std::size_t lead_of(const BitMatrix& k, std::size_t row, std::size_t coef_cols) {
    return k.leading_column(row, coef_cols).value_or(kZeroLead);
}

bool coefficient_block_in_echelon(const BitMatrix& k, std::size_t coef_cols) {
    std::size_t prev = 0;
    bool first = true;
    bool seen_zero = false;
    for (std::size_t r = 0; r < k.rows(); ++r) {
        const std::size_t lead = lead_of(k, r, coef_cols);
        if (lead == kZeroLead) {
            seen_zero = true;
            continue;
        }
        if (seen_zero || (!first && lead <= prev)) return false;
        prev = lead;
        first = false;
    }
    return true;
}

// The linear systems [N_R | N_L | Id] of the layer-by-layer search. Rows start out
// indexed by measured vertex; the third block records which original rows each
// current row is built from.
class LayeredSystem {
public:
    LayeredSystem(const BitMatrix& n_right, const BitMatrix& n_left)
        : unknowns_(n_right.cols()), vertices_(n_left.cols()),
          initial_(Labels::synthetic("#", vertices_), Labels::synthetic("#", unknowns_ + 2 * vertices_)) {
        for (std::size_t r = 0; r < vertices_; ++r) {
            for (std::size_t c = 0; c < unknowns_; ++c) {
                if (n_right.get(r, c)) initial_.set(r, c);
            }
            for (std::size_t c = 0; c < vertices_; ++c) {
                if (n_left.get(r, c)) initial_.set(r, unknowns_ + c);
            }
            initial_.set(r, tracking_col(r));
        }
        current_ = row_echelon(initial_, false, unknowns_).echelon;
    }

    [[nodiscard]] bool in_echelon() const { return coefficient_block_in_echelon(current_, unknowns_); }

    /// First row whose coefficient block is zero.
    [[nodiscard]] std::size_t first_zero_row() const {
        std::size_t r = 0;
        while (r < vertices_ && lead_of(current_, r, unknowns_) != kZeroLead) ++r;
        return r;
    }

    /// Vertex v's system is consistent iff its constants vanish on every all-zero coefficient row.
    [[nodiscard]] std::vector<char> consistent_from(std::size_t zero_row) const {
        std::vector<Word> acc(current_.row_words(), 0);
        for (std::size_t r = zero_row; r < vertices_; ++r) {
            auto row = current_.row(r);
            for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= row[w];
        }
        std::vector<char> ok(vertices_, 0);
        for (std::size_t v = 0; v < vertices_; ++v) {
            const std::size_t c = constant_col(v);
            ok[v] = ((acc[c / kWordBits] >> (c % kWordBits)) & 1U) == 0;
        }
        return ok;
    }

    /// Back-substitution over the echelon rows above zero_row, free unknowns set to 0.
    [[nodiscard]] std::vector<char> solve(std::size_t v, std::size_t zero_row) const {
        std::vector<char> x(unknowns_, 0);
        for (std::size_t i = zero_row; i-- > 0;) {
            const std::size_t pivot = lead_of(current_, i, unknowns_);
            bool value = current_.get(i, constant_col(v));
            for (std::size_t j = pivot + 1; j < unknowns_; ++j) {
                if (x[j] && current_.get(i, j)) value = !value;
            }
            x[pivot] = value;
        }
        return x;
    }

    /// Rewrites the system into the echelon form it would have if vertex v's
    /// original row had been zero.
    void remove_row_of(std::size_t v) {
        std::vector<std::size_t> dependent;
        for (std::size_t r = 0; r < vertices_; ++r) {
            if (current_.get(r, tracking_col(v))) dependent.push_back(r);
        }
        if (dependent.empty()) throw std::logic_error("layered system lost track of a vertex row");
        const std::size_t last = dependent.back();
        for (std::size_t i = 0; i + 1 < dependent.size(); ++i) current_.add_row(dependent[i], last);
        current_.add_row_from(last, initial_, v);

        // Cancel leading 1s of `last` against the other echelon rows, top-down,
        // stopping once its leading 1 has no pivot above it or it vanishes.
        for (std::size_t r = 0; r < vertices_; ++r) {
            if (r == last) continue;
            const std::size_t lead_r = lead_of(current_, r, unknowns_);
            if (lead_r == kZeroLead) break;
            const std::size_t lead_last = lead_of(current_, last, unknowns_);
            if (lead_last == kZeroLead || lead_last < lead_r) break;
            if (lead_last == lead_r) current_.add_row(last, r);
        }
        reposition(last);
    }

private:
    [[nodiscard]] std::size_t constant_col(std::size_t v) const { return unknowns_ + v; }
    [[nodiscard]] std::size_t tracking_col(std::size_t v) const { return unknowns_ + vertices_ + v; }

    void reposition(std::size_t row) {
        auto lead = [&](std::size_t r) { return lead_of(current_, r, unknowns_); };
        while (row > 0 && lead(row - 1) > lead(row)) {
            current_.swap_rows(row - 1, row);
            --row;
        }
        while (row + 1 < vertices_ && lead(row + 1) < lead(row)) {
            current_.swap_rows(row, row + 1);
            ++row;
        }
    }

    std::size_t unknowns_;
    std::size_t vertices_;
    BitMatrix initial_;
    BitMatrix current_;
};

void validate_injected(const BitMatrix& m, const InjectedBasis& basis, std::size_t kernel_dim) {
    const auto& c0 = basis.right_inverse;
    const auto& f = basis.kernel;
    if (!(c0.row_labels() == m.col_labels()) || !(c0.col_labels() == m.row_labels())) {
        throw std::invalid_argument("injected right inverse must have non-input rows and measured columns");
    }
    if (!(mat_mul(m, c0) == BitMatrix::identity(m.row_labels()))) {
        throw std::invalid_argument("injected matrix is not a right inverse of the flow-demand matrix");
    }
    if (!(f.row_labels() == m.col_labels()) || f.cols() != kernel_dim) {
        throw std::invalid_argument("injected kernel basis must have non-input rows and n_O - n_I columns");
    }
    if (!mat_mul(m, f).is_zero()) {
        throw std::invalid_argument("injected kernel basis is not annihilated by the flow-demand matrix");
    }
    if (rank(f) != kernel_dim) throw std::invalid_argument("injected kernel basis is not linearly independent");
}

}  // namespace

FlowResult find_flow_square(const LabelledOpenGraph& g) {
    if (g.n_inputs() != g.n_outputs()) throw std::invalid_argument("find_flow_square requires n_I == n_O");
    FinderTrace trace;
    trace.flow_demand = flow_demand_matrix(g);
    trace.order_demand = order_demand_matrix(g);

    auto c = inverse(*trace.flow_demand);
    if (!c) return no_flow(NoFlowReason::NotRightInvertible, {}, std::move(trace));
    BitMatrix nc = mat_mul(*trace.order_demand, *c);
    const DagCheck dag = is_dag(nc);
    if (!dag.acyclic) {
        trace.correction = std::move(*c);
        trace.order_product = std::move(nc);
        return no_flow(NoFlowReason::CyclicNC, dag.cycle, std::move(trace));
    }
    FlowResult r = flow_from(g, std::move(*c), std::move(nc), std::move(trace));
    r.layers = solve_order_layers(r.relation.relation);
    return r;
}

FlowResult find_flow_general(const LabelledOpenGraph& g, const GeneralFinderOptions& options) {
    if (g.n_inputs() > g.n_outputs()) throw std::invalid_argument("find_flow_general requires n_I <= n_O");
    FinderTrace trace;
    trace.flow_demand = flow_demand_matrix(g);
    trace.order_demand = order_demand_matrix(g);
    const BitMatrix& m = *trace.flow_demand;
    const BitMatrix& n = *trace.order_demand;
    const std::size_t measured = g.measured().size();
    const std::size_t unknowns = g.n_outputs() - g.n_inputs();

    if (measured == 0) {
        BitMatrix c(g.non_input_labels(), g.measured_labels());
        BitMatrix nc(g.measured_labels(), g.measured_labels());
        return flow_from(g, std::move(c), std::move(nc), std::move(trace));
    }

    BitMatrix c0;
    BitMatrix f;
    if (options.injected) {
        validate_injected(m, *options.injected, unknowns);
        c0 = options.injected->right_inverse;
        f = options.injected->kernel;
    } else {
        auto ri = right_inverse(m);
        if (!ri) return no_flow(NoFlowReason::NotRightInvertible, {}, std::move(trace));
        c0 = std::move(*ri);
        f = kernel_basis(m);
    }
    const Labels unknown_labels = kernel_labels(g, unknowns);
    f = f.with_labels(f.row_labels(), unknown_labels);

    const BitMatrix change_of_basis = hconcat(c0, f);  // C' = [C0 | F]
    const BitMatrix n_basis = mat_mul(n, change_of_basis);
    LayeredSystem system(n_basis.column_block(measured, unknowns), n_basis.column_block(0, measured));

    BitMatrix p(unknown_labels, g.measured_labels());
    std::vector<char> solved(measured, 0);
    std::size_t solved_count = 0;
    std::vector<std::vector<std::string>> layers;
    while (solved_count < measured) {
        assert(system.in_echelon());
        if (options.check_invariants && !system.in_echelon()) {
            throw std::logic_error("coefficient block left row echelon form");
        }
        const std::size_t zero_row = system.first_zero_row();
        const auto consistent = system.consistent_from(zero_row);
        std::vector<std::size_t> layer;
        for (std::size_t v = 0; v < measured; ++v) {
            if (!solved[v] && consistent[v]) layer.push_back(v);
        }
        if (layer.empty()) {
            std::vector<std::string> unsolved;
            for (std::size_t v = 0; v < measured; ++v) {
                if (!solved[v]) unsolved.push_back(g.measured_labels()[v]);
            }
            trace.layer_solution = std::move(p);
            return no_flow(NoFlowReason::LayerStuck, std::move(unsolved), std::move(trace));
        }
        // Solve the whole layer before touching the system, so vertices of one
        // layer never constrain each other.
        for (std::size_t v : layer) {
            const auto x = system.solve(v, zero_row);
            for (std::size_t j = 0; j < unknowns; ++j) p.set(j, v, x[j] != 0);
        }
        auto& names = layers.emplace_back();
        for (std::size_t v : layer) {
            solved[v] = 1;
            ++solved_count;
            system.remove_row_of(v);
            names.push_back(g.measured_labels()[v]);
        }
    }

    const BitMatrix c_basis = vconcat(BitMatrix::identity(g.measured_labels()), p);  // [Id / P]
    BitMatrix c = mat_mul(change_of_basis, c_basis);
    BitMatrix nc = mat_mul(n, c);
    if (!(mat_mul(m, c) == BitMatrix::identity(g.measured_labels())) || !is_dag(nc).acyclic) {
        throw std::logic_error("layered search produced a correction matrix that is not a flow");
    }
    trace.layer_solution = std::move(p);
    FlowResult r = flow_from(g, std::move(c), std::move(nc), std::move(trace));
    r.layers = std::move(layers);
    return r;
}

FlowResult find_flow(const LabelledOpenGraph& g, const FindOptions& options) {
    FlowResult r;
    if (g.n_outputs() < g.n_inputs()) {
        FinderTrace trace;
        trace.flow_demand = flow_demand_matrix(g);
        trace.order_demand = order_demand_matrix(g);
        r = no_flow(NoFlowReason::MoreInputsThanOutputs, {}, std::move(trace));
    } else if (g.n_outputs() == g.n_inputs()) {
        r = find_flow_square(g);
    } else {
        r = find_flow_general(g);
    }
    if (r.has_flow && options.want_closure) r.closure = r.relation.closure();
    return r;
}

}  // namespace pauliflow
