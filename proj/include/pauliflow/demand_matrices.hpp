#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/open_graph.hpp"

namespace pauliflow {

/// Flow-demand matrix M: rows are the measured vertices, columns the non-inputs,
/// both in vertex order.
///   X, XY      -> neighbourhood row, M[v][v] = 0
///   Z, XZ, YZ  -> single 1 at (v, v)
///   Y          -> neighbourhood row plus (v, v) when v has a column
BitMatrix flow_demand_matrix(const LabelledOpenGraph& g);

/// Order-demand matrix N, same shape and indexing as M.
///   X, Y, Z -> zero row
///   YZ      -> neighbourhood row
///   XZ      -> neighbourhood row plus (v, v)
///   XY      -> single 1 at (v, v) when v has a column, zero row otherwise
BitMatrix order_demand_matrix(const LabelledOpenGraph& g);

}  // namespace pauliflow
