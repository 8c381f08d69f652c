#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/flow_model.hpp"
#include "pauliflow/open_graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pauliflow {

struct OracleLimits {
    std::size_t max_measured = 8;
    std::size_t max_non_inputs = 7;
    /// Cap on |comp(O)| * 2^|comp(O)| * 2^|comp(I)|, the size of the candidate table.
    std::uint64_t max_work = std::uint64_t{1} << 26;
};

enum class OracleVerdict { Flow, NoFlow, LimitExceeded };
std::string_view to_string(OracleVerdict v);

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::NoFlow;
    std::optional<CorrectionAssignment> correction;
    /// Measured vertices, earliest first. The witness order is this total order.
    std::vector<std::string> sequence;
    std::optional<OrderRelation> order;
};

/// Exhaustive search straight from the definition: a flow exists iff the
/// measured vertices can be totally ordered so that every vertex u has some
/// S subset of comp(I) meeting P4-P9 and P1-P3 against the vertices after u.
/// Vertices are placed from the back, so the search runs over the 2^|comp(O)|
/// sets of already-placed vertices instead of all |comp(O)|! orders.
OracleResult brute_force_find(const LabelledOpenGraph& g, const OracleLimits& limits = {});

/// Seeded generator with its own bounded draws, so sequences do not depend on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    /// True with probability p.
    bool chance(double p);
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Number of instances on exactly n vertices in exhaustive mode: 2^(n choose 2)
/// graphs, and per vertex 3 input labels, output, or 6 internal labels.
std::uint64_t small_instance_count(std::size_t n);

/// Calls visit for every instance with at most n_max vertices (vertex names
/// v0, v1, ...). Stops after `budget` instances; returns false if the budget ran
/// out first. Throws std::invalid_argument for n_max > 4.
bool enumerate_small_instances(std::size_t n_max, std::uint64_t budget,
                               const std::function<void(const LabelledOpenGraph&)>& visit);

/// `count` random instances with n_min <= n <= n_max, reproducible from seed.
std::vector<LabelledOpenGraph> sample_instances(std::size_t count, std::size_t n_min, std::size_t n_max,
                                                std::uint64_t seed);

/// n vertices, the first n_inputs are inputs, the last n_outputs are outputs,
/// edges with probability p, labels uniform over the allowed ones.
/// Throws std::invalid_argument if n_inputs + n_outputs > n.
LabelledOpenGraph random_instance(std::size_t n, std::size_t n_inputs, std::size_t n_outputs, double p,
                                  std::uint64_t seed);

/// Dense random matrix with the given labels, each bit set with probability 1/2.
BitMatrix random_matrix(const Labels& rows, const Labels& cols, Rng& rng);

}  // namespace pauliflow
