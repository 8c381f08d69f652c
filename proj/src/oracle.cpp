#include "pauliflow/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace pauliflow {

std::string_view to_string(OracleVerdict v) {
    switch (v) {
        case OracleVerdict::Flow: return "Flow";
        case OracleVerdict::NoFlow: return "NoFlow";
        case OracleVerdict::LimitExceeded: return "LimitExceeded";
    }
    return "?";
}

namespace {

using L = MeasurementLabel;
using Mask = std::uint32_t;

constexpr std::size_t kNoChoice = static_cast<std::size_t>(-1);

bool per_vertex_ok(L l, bool in_c, bool in_odd) {
    switch (l) {
        case L::XY: return !in_c && in_odd;
        case L::XZ: return in_c && in_odd;
        case L::YZ: return in_c && !in_odd;
        case L::X: return in_odd;
        case L::Z: return in_c;
        case L::Y: return in_c != in_odd;
    }
    return false;
}

}  // namespace

OracleResult brute_force_find(const LabelledOpenGraph& g, const OracleLimits& limits) {
    OracleResult result;
    const auto& measured = g.measured();
    const auto& non_inputs = g.non_inputs();
    const std::size_t m = measured.size();
    const std::size_t k = non_inputs.size();
    const bool too_big = m > limits.max_measured || k > limits.max_non_inputs || g.n() > 31 ||
                         (static_cast<std::uint64_t>(m) << (m + k)) > limits.max_work;
    if (too_big) {
        result.verdict = OracleVerdict::LimitExceeded;
        return result;
    }

    // Masks are over vertex indices; "later" masks are over positions in `measured`.
    std::vector<Mask> nb(g.n(), 0);
    for (const auto& [u, v] : g.edges()) {
        nb[u] |= Mask{1} << v;
        nb[v] |= Mask{1} << u;
    }

    // choice[u][T]: index of a subset S of comp(I) valid for u when T is exactly
    // the set of vertices after u.
    const std::size_t subsets = std::size_t{1} << k;
    const std::size_t later_sets = std::size_t{1} << m;
    std::vector<std::vector<std::size_t>> choice(m, std::vector<std::size_t>(later_sets, kNoChoice));
    for (std::size_t pu = 0; pu < m; ++pu) {
        const std::size_t u = measured[pu];
        const L lu = g.measurement(u);
        for (std::size_t bits = 0; bits < subsets; ++bits) {
            Mask s = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if ((bits >> j) & 1U) s |= Mask{1} << non_inputs[j];
            }
            Mask odd = 0;
            for (std::size_t j = 0; j < g.n(); ++j) {
                if ((s >> j) & 1U) odd ^= nb[j];
            }
            const Mask codd = odd ^ s;
            if (!per_vertex_ok(lu, (s >> u) & 1U, (odd >> u) & 1U)) continue;

            std::size_t required = 0;
            for (std::size_t pv = 0; pv < m; ++pv) {
                const std::size_t v = measured[pv];
                if (v == u) continue;
                const L lv = g.measurement(v);
                const bool p1 = ((s >> v) & 1U) && lv != L::X && lv != L::Y;
                const bool p2 = ((odd >> v) & 1U) && lv != L::Y && lv != L::Z;
                const bool p3 = ((codd >> v) & 1U) && lv == L::Y;
                if (p1 || p2 || p3) required |= std::size_t{1} << pv;
            }
            for (std::size_t later = 0; later < later_sets; ++later) {
                if ((later >> pu) & 1U) continue;
                if ((required & ~later) == 0 && choice[pu][later] == kNoChoice) choice[pu][later] = bits;
            }
        }
    }

    // placed[T]: the vertex put in front of T \ {it} that made T reachable.
    std::vector<std::size_t> placed(later_sets, kNoChoice);
    std::vector<char> reachable(later_sets, 0);
    reachable[0] = 1;
    for (std::size_t t = 0; t < later_sets; ++t) {
        if (!reachable[t]) continue;
        for (std::size_t pu = 0; pu < m; ++pu) {
            if ((t >> pu) & 1U || choice[pu][t] == kNoChoice) continue;
            const std::size_t next = t | (std::size_t{1} << pu);
            if (!reachable[next]) {
                reachable[next] = 1;
                placed[next] = pu;
            }
        }
    }
    const std::size_t all = later_sets - 1;
    if (!reachable[all]) {
        result.verdict = OracleVerdict::NoFlow;
        return result;
    }

    CorrectionAssignment c = CorrectionAssignment::empty(g);
    std::vector<std::size_t> order_positions;
    for (std::size_t t = all; t != 0;) {
        const std::size_t pu = placed[t];
        t &= ~(std::size_t{1} << pu);
        const std::size_t bits = choice[pu][t];
        VertexSet& s = c.sets.at(measured[pu]);
        for (std::size_t j = 0; j < k; ++j) {
            if ((bits >> j) & 1U) s.insert(non_inputs[j]);
        }
        order_positions.push_back(pu);  // earliest first: t shrinks towards the back
    }
    BitMatrix rel(g.measured_labels(), g.measured_labels());
    for (std::size_t i = 0; i < order_positions.size(); ++i) {
        result.sequence.push_back(g.name(measured[order_positions[i]]));
        for (std::size_t j = i + 1; j < order_positions.size(); ++j) rel.set(order_positions[i], order_positions[j]);
    }
    result.verdict = OracleVerdict::Flow;
    result.correction = std::move(c);
    result.order = OrderRelation::from_matrix(std::move(rel));
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

bool Rng::chance(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

namespace {

// Per-vertex role choices in exhaustive mode.
struct Role {
    bool input;
    bool output;
    std::optional<L> label;
};

const std::vector<Role>& roles() {
    static const std::vector<Role> all = {
        {true, false, L::X},   {true, false, L::Y},   {true, false, L::XY},  {false, true, std::nullopt},
        {false, false, L::X},  {false, false, L::Y},  {false, false, L::Z},  {false, false, L::XY},
        {false, false, L::XZ}, {false, false, L::YZ},
    };
    return all;
}

const std::vector<L>& all_labels() {
    static const std::vector<L> all = {L::X, L::Y, L::Z, L::XY, L::XZ, L::YZ};
    return all;
}

const std::vector<L>& input_labels() {
    static const std::vector<L> all = {L::X, L::Y, L::XY};
    return all;
}

}  // namespace

std::uint64_t small_instance_count(std::size_t n) {
    std::uint64_t count = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
    for (std::size_t i = 0; i < n; ++i) count *= roles().size();
    return count;
}

bool enumerate_small_instances(std::size_t n_max, std::uint64_t budget,
                               const std::function<void(const LabelledOpenGraph&)>& visit) {
    if (n_max > 4) throw std::invalid_argument("exhaustive enumeration is limited to n_max <= 4");
    std::uint64_t visited = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        }
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));

        std::size_t role_combos = 1;
        for (std::size_t i = 0; i < n; ++i) role_combos *= roles().size();
        for (std::size_t edges = 0; edges < (std::size_t{1} << pairs.size()); ++edges) {
            for (std::size_t combo = 0; combo < role_combos; ++combo) {
                if (visited == budget) return false;
                GraphData data;
                data.vertices = names;
                for (std::size_t e = 0; e < pairs.size(); ++e) {
                    if ((edges >> e) & 1U) data.edges.emplace_back(names[pairs[e].first], names[pairs[e].second]);
                }
                std::size_t code = combo;
                for (std::size_t i = 0; i < n; ++i) {
                    const Role& r = roles()[code % roles().size()];
                    code /= roles().size();
                    if (r.input) data.inputs.push_back(names[i]);
                    if (r.output) data.outputs.push_back(names[i]);
                    if (r.label) data.labels.emplace(names[i], *r.label);
                }
                visit(LabelledOpenGraph(data));
                ++visited;
            }
        }
    }
    return true;
}

LabelledOpenGraph random_instance(std::size_t n, std::size_t n_inputs, std::size_t n_outputs, double p,
                                  std::uint64_t seed) {
    if (n_inputs + n_outputs > n) throw std::invalid_argument("random_instance: n_inputs + n_outputs > n");
    Rng rng(seed);
    GraphData data;
    for (std::size_t i = 0; i < n; ++i) data.vertices.push_back("v" + std::to_string(i));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rng.chance(p)) data.edges.emplace_back(data.vertices[a], data.vertices[b]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = data.vertices[i];
        if (i >= n - n_outputs) {
            data.outputs.push_back(v);
        } else if (i < n_inputs) {
            data.inputs.push_back(v);
            data.labels.emplace(v, input_labels()[rng.below(input_labels().size())]);
        } else {
            data.labels.emplace(v, all_labels()[rng.below(all_labels().size())]);
        }
    }
    return LabelledOpenGraph(data);
}

std::vector<LabelledOpenGraph> sample_instances(std::size_t count, std::size_t n_min, std::size_t n_max,
                                                std::uint64_t seed) {
    if (n_min > n_max) throw std::invalid_argument("sample_instances: n_min > n_max");
    Rng rng(seed);
    std::vector<LabelledOpenGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = rng.between(n_min, n_max);
        const std::size_t n_inputs = rng.between(0, n / 2);
        const std::size_t n_outputs = rng.between(n_inputs, n - n_inputs);
        const double p = 0.2 + 0.6 * static_cast<double>(rng.below(1001)) / 1000.0;
        out.push_back(random_instance(n, n_inputs, n_outputs, p, rng.next()));
    }
    return out;
}

BitMatrix random_matrix(const Labels& rows, const Labels& cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (rng.chance(0.5)) m.set(r, c);
        }
    }
    return m;
}

}  // namespace pauliflow
