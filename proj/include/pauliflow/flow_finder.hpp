#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/flow_model.hpp"
#include "pauliflow/open_graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pauliflow {

enum class NoFlowReason { NotRightInvertible, CyclicNC, LayerStuck, MoreInputsThanOutputs };
std::string_view to_string(NoFlowReason reason);

/// Matrices produced along the way; whichever steps were reached are filled in.
struct FinderTrace {
    std::optional<BitMatrix> flow_demand;       // M
    std::optional<BitMatrix> order_demand;      // N
    std::optional<BitMatrix> correction;        // candidate C (M^-1 in the square case)
    std::optional<BitMatrix> order_product;     // N C
    std::optional<BitMatrix> layer_solution;    // P, general case only
};

struct FlowResult {
    bool has_flow = false;

    // Flow
    CorrectionAssignment correction;
    BitMatrix correction_matrix;
    /// Induced relation: u before v iff (NC)[v][u] == 1, u != v.
    OrderRelation relation;
    std::optional<OrderRelation> closure;
    /// Solve order: vertices with nothing after them come first.
    std::vector<std::vector<std::string>> layers;

    // NoFlow
    std::optional<NoFlowReason> reason;
    /// Cycle of N C for CyclicNC (edge u->v when (NC)[u][v] == 1), unsolved vertices for LayerStuck.
    std::vector<std::string> witness;

    FinderTrace trace;
};

/// n_I == n_O: invert M, then require N M^-1 to be a DAG.
/// Throws std::invalid_argument when n_I != n_O.
FlowResult find_flow_square(const LabelledOpenGraph& g);

/// A right inverse C0 of M and a kernel basis F, used instead of computing them.
struct InjectedBasis {
    BitMatrix right_inverse;  // rows comp(I), columns comp(O)
    BitMatrix kernel;         // rows comp(I), n_O - n_I columns
};

struct GeneralFinderOptions {
    std::optional<InjectedBasis> injected;
    /// Re-check the echelon invariant of the coefficient block at every layer;
    /// throws std::logic_error if it is broken.
    bool check_invariants = false;
};

/// n_I <= n_O: layer-by-layer search for P with N_L + N_R P acyclic after the
/// change of basis C' = [C0 | F]. Throws std::invalid_argument when n_I > n_O or
/// when an injected basis fails validation.
FlowResult find_flow_general(const LabelledOpenGraph& g, const GeneralFinderOptions& options = {});

struct FindOptions {
    bool want_closure = false;
};

/// Dispatch on n_I versus n_O.
FlowResult find_flow(const LabelledOpenGraph& g, const FindOptions& options = {});

/// Before-relation derived from N C: u before v iff (NC)[v][u] == 1 and u != v.
BitMatrix relation_from_order_product(const BitMatrix& order_product);

}  // namespace pauliflow
