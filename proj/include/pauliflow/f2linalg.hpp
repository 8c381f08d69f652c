#pragma once

// Dense GF(2) linear algebra on BitMatrix.
//
// Pivot rule everywhere: sweep columns left to right in stored order and take the
// top-most remaining row with a 1 in that column. Results are therefore fully
// determined by the input matrix and its label order.

#include "pauliflow/bit_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pauliflow {

struct EchelonResult {
    BitMatrix echelon;
    /// transform * original == echelon. Only filled when tracking was requested.
    std::optional<BitMatrix> transform;
    /// Column label of each pivot, top row first.
    std::vector<std::string> pivot_cols;
    std::vector<std::size_t> pivot_indices;
    std::size_t rank = 0;
};

/// a * b. Requires a's column labels to equal b's row labels, in order.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Row echelon form (not reduced) with pivots taken from the first `leading_cols`
/// columns only; remaining columns are carried along by the row operations.
EchelonResult row_echelon(const BitMatrix& a, bool track, std::optional<std::size_t> leading_cols = {});

/// Reduced row echelon form over all columns.
EchelonResult reduced_row_echelon(const BitMatrix& a, bool track);

std::size_t rank(const BitMatrix& a);

/// Two-sided inverse of a square matrix; nullopt when singular.
/// Result rows are labelled by a's columns and its columns by a's rows.
/// Throws std::invalid_argument for non-square input.
std::optional<BitMatrix> inverse(const BitMatrix& a);

/// C with a * C == Id over a's rows, nullopt when rank(a) < rows(a).
/// Free variables are fixed to 0, so the result is canonical.
std::optional<BitMatrix> right_inverse(const BitMatrix& a);

/// Columns form a basis of ker a; one column per free variable in stored column order.
/// Columns are labelled F1, F2, ...
BitMatrix kernel_basis(const BitMatrix& a);

struct DagCheck {
    bool acyclic = false;
    /// Topological generations: every edge u->v has layer(u) < layer(v). Empty when cyclic.
    std::vector<std::vector<std::string>> layers;
    /// Vertices x0..xk-1 with edges x0->x1->...->xk-1->x0. A self-loop is a single vertex.
    std::vector<std::string> cycle;
};

/// Reads adj(u,v) == 1 as the edge u->v. Requires identical row and column labels.
DagCheck is_dag(const BitMatrix& adj);

/// Reachability closure of an acyclic relation. Throws std::invalid_argument on cycles.
BitMatrix transitive_closure(const BitMatrix& adj);

}  // namespace pauliflow
