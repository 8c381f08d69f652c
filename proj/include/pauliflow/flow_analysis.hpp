#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/flow_finder.hpp"
#include "pauliflow/open_graph.hpp"

#include <string>
#include <vector>

namespace pauliflow {

struct FocusedSetBasis {
    /// Support of each kernel-basis column of M, as subsets of comp(I).
    std::vector<VertexSet> sets;
};

FocusedSetBasis focused_sets_basis(const LabelledOpenGraph& g);

/// Direct Fs1-Fs3 check of `a` (subset of comp(I)) over `s` (subset of comp(O)).
bool is_focused_over(const LabelledOpenGraph& g, const VertexSet& a, const VertexSet& s);

/// Largest subset of comp(O) over which `a` is focused: the measured vertices
/// whose row of M has even overlap with `a`. Throws std::invalid_argument if `a`
/// contains an input or belongs to another graph.
VertexSet max_focus_region(const LabelledOpenGraph& g, const VertexSet& a);

/// Swaps inputs and outputs; old outputs get label XY.
/// Throws std::invalid_argument unless n_I == n_O and I, O are disjoint.
LabelledOpenGraph reverse_graph(const LabelledOpenGraph& g);

struct ReversalReport {
    bool original_has_flow = false;
    bool reversed_has_flow = false;
    bool existence_agrees = false;
    /// Only evaluated when both graphs have flow; true otherwise.
    bool correction_correspondence = true;
    bool order_inversion = true;
    /// Human-readable descriptions of every mismatch found.
    std::vector<std::string> mismatches;

    [[nodiscard]] bool passed() const { return existence_agrees && correction_correspondence && order_inversion; }
};

/// Runs the finder on g and on its reverse and compares the results.
ReversalReport check_reversal_properties(const LabelledOpenGraph& g);

/// Bipartite graph i1..in / o1..on with an edge (i_k, o_l) iff m[k][l] == 1 and
/// every input labelled X. Its flow-demand matrix is m and its order-demand
/// matrix is zero. Throws std::invalid_argument for non-square m.
LabelledOpenGraph graph_from_matrix(const BitMatrix& m);

}  // namespace pauliflow
