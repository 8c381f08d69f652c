#include "pauliflow/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pauliflow {
namespace {

// Calls fn(c) for every set column of row r.
template <typename Fn>
void for_each_set(const BitMatrix& m, std::size_t r, Fn&& fn) {
    auto s = m.row(r);
    for (std::size_t w = 0; w < s.size(); ++w) {
        Word bits = s[w];
        while (bits != 0) {
            fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

// Gaussian elimination in place; pivots only from columns [0, lead).
std::vector<std::size_t> eliminate(BitMatrix& work, std::size_t lead, bool reduced) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < lead && pivot_row < work.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < work.rows() && !work.get(r, c)) ++r;
        if (r == work.rows()) continue;
        work.swap_rows(r, pivot_row);
        for (std::size_t other = reduced ? 0 : pivot_row + 1; other < work.rows(); ++other) {
            if (other != pivot_row && work.get(other, c)) work.add_row(other, pivot_row);
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

// [a | Id] with synthetic labels; a occupies the leading words of every row.
BitMatrix augment_with_identity(const BitMatrix& a) {
    BitMatrix work(Labels::synthetic("#", a.rows()), Labels::synthetic("#", a.cols() + a.rows()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy(a.row(r).begin(), a.row(r).end(), work.row(r).begin());
        work.set(r, a.cols() + r);
    }
    return work;
}

BitMatrix copy_columns(const BitMatrix& work, std::size_t first, Labels rows, Labels cols) {
    BitMatrix out(std::move(rows), std::move(cols));
    if (first == 0) {
        for (std::size_t r = 0; r < out.rows(); ++r) {
            std::copy_n(work.row(r).begin(), out.row_words(), out.row(r).begin());
            // Clear bits past out.cols() that belonged to the next block.
            if (out.cols() % kWordBits != 0 && out.row_words() > 0) {
                out.row(r)[out.row_words() - 1] &= (Word{1} << (out.cols() % kWordBits)) - 1;
            }
        }
        return out;
    }
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            if (work.get(r, first + c)) out.set(r, c);
        }
    }
    return out;
}

EchelonResult echelon_impl(const BitMatrix& a, bool track, std::size_t lead, bool reduced) {
    if (lead > a.cols()) throw std::invalid_argument("row_echelon: leading column count exceeds width");
    const Labels synthetic_rows = Labels::synthetic("#", a.rows());
    EchelonResult result;
    std::vector<std::size_t> pivots;
    if (track) {
        BitMatrix work = augment_with_identity(a);
        pivots = eliminate(work, lead, reduced);
        result.echelon = copy_columns(work, 0, synthetic_rows, a.col_labels());
        result.transform = copy_columns(work, a.cols(), synthetic_rows, a.row_labels());
    } else {
        BitMatrix work = a.with_labels(synthetic_rows, a.col_labels());
        pivots = eliminate(work, lead, reduced);
        result.echelon = std::move(work);
    }
    result.rank = pivots.size();
    result.pivot_indices = pivots;
    for (std::size_t c : pivots) result.pivot_cols.push_back(a.col_labels()[c]);
    return result;
}

struct IndexDag {
    bool acyclic = false;
    std::vector<std::vector<std::size_t>> layers;
    std::vector<std::size_t> cycle;
};

IndexDag index_dag(const BitMatrix& adj) {
    if (!(adj.row_labels() == adj.col_labels())) {
        throw std::invalid_argument("is_dag: adjacency must be square with identical row and column labels");
    }
    const std::size_t n = adj.rows();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t u = 0; u < n; ++u) for_each_set(adj, u, [&](std::size_t v) { ++indegree[v]; });

    IndexDag out;
    std::vector<std::size_t> current;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) current.push_back(v);
    }
    std::size_t placed = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t u : current) {
            for_each_set(adj, u, [&](std::size_t v) {
                if (--indegree[v] == 0) next.push_back(v);
            });
        }
        placed += current.size();
        std::sort(next.begin(), next.end());
        out.layers.push_back(std::move(current));
        current = std::move(next);
    }
    if (placed == n) {
        out.acyclic = true;
        return out;
    }

    // Every leftover vertex has a predecessor among the leftovers.
    out.layers.clear();
    std::vector<char> left(n, 0);
    for (std::size_t v = 0; v < n; ++v) left[v] = indegree[v] > 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (left[v] && adj.get(v, v)) {
            out.cycle = {v};
            return out;
        }
    }
    std::size_t start = 0;
    while (!left[start]) ++start;
    std::vector<std::size_t> walk;
    std::vector<std::size_t> seen_at(n, n);
    std::size_t x = start;
    while (seen_at[x] == n) {
        seen_at[x] = walk.size();
        walk.push_back(x);
        std::size_t p = 0;
        while (!(left[p] && adj.get(p, x))) ++p;
        x = p;
    }
    // walk[i+1] -> walk[i]; reverse the closed part to list edges forwards.
    std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[x]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    out.cycle = std::move(cycle);
    return out;
}

}  // namespace

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (!(a.col_labels() == b.row_labels())) {
        throw std::invalid_argument("mat_mul: column labels of the left factor must equal row labels of the right");
    }
    BitMatrix out(a.row_labels(), b.col_labels());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row(r);
        for_each_set(a, r, [&](std::size_t k) {
            auto src = b.row(k);
            for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
        });
    }
    return out;
}

EchelonResult row_echelon(const BitMatrix& a, bool track, std::optional<std::size_t> leading_cols) {
    return echelon_impl(a, track, leading_cols.value_or(a.cols()), false);
}

EchelonResult reduced_row_echelon(const BitMatrix& a, bool track) {
    return echelon_impl(a, track, a.cols(), true);
}

std::size_t rank(const BitMatrix& a) { return row_echelon(a, false).rank; }

std::optional<BitMatrix> inverse(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
    BitMatrix work = augment_with_identity(a);
    if (eliminate(work, a.cols(), true).size() < a.rows()) return std::nullopt;
    return copy_columns(work, a.cols(), a.col_labels(), a.row_labels());
}

std::optional<BitMatrix> right_inverse(const BitMatrix& a) {
    BitMatrix work = augment_with_identity(a);
    const auto pivots = eliminate(work, a.cols(), true);
    if (pivots.size() < a.rows()) return std::nullopt;
    // Row i of the RREF reads x[pivot_i] + (free terms) = (T e_j)_i; free terms are 0.
    const BitMatrix transform = copy_columns(work, a.cols(), Labels::synthetic("#", a.rows()), a.row_labels());
    BitMatrix c(a.col_labels(), a.row_labels());
    for (std::size_t i = 0; i < pivots.size(); ++i) c.add_row_from(pivots[i], transform, i);
    return c;
}

BitMatrix kernel_basis(const BitMatrix& a) {
    BitMatrix r = a.with_labels(Labels::synthetic("#", a.rows()), a.col_labels());
    const auto pivots = eliminate(r, a.cols(), true);
    std::vector<char> is_pivot(a.cols(), 0);
    for (std::size_t p : pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    BitMatrix f(a.col_labels(), Labels::synthetic("F", free_cols.size(), 1));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        f.set(free_cols[j], j);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (r.get(i, free_cols[j])) f.set(pivots[i], j);
        }
    }
    return f;
}

DagCheck is_dag(const BitMatrix& adj) {
    const IndexDag dag = index_dag(adj);
    DagCheck out;
    out.acyclic = dag.acyclic;
    for (const auto& layer : dag.layers) {
        auto& named = out.layers.emplace_back();
        for (std::size_t v : layer) named.push_back(adj.row_labels()[v]);
    }
    for (std::size_t v : dag.cycle) out.cycle.push_back(adj.row_labels()[v]);
    return out;
}

BitMatrix transitive_closure(const BitMatrix& adj) {
    const IndexDag dag = index_dag(adj);
    if (!dag.acyclic) throw std::invalid_argument("transitive_closure: relation contains a cycle");
    BitMatrix closure(adj.row_labels(), adj.col_labels());
    for (auto layer = dag.layers.rbegin(); layer != dag.layers.rend(); ++layer) {
        for (std::size_t u : *layer) {
            auto dst = closure.row(u);
            for_each_set(adj, u, [&](std::size_t v) {
                auto src = closure.row(v);
                for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
                dst[v / kWordBits] |= Word{1} << (v % kWordBits);
            });
        }
    }
    return closure;
}

}  // namespace pauliflow
