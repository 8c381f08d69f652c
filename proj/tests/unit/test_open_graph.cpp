#include "fixtures.hpp"
#include "random_corrections.hpp"
#include "reference.hpp"

#include "pauliflow/demand_matrices.hpp"
#include "pauliflow/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pauliflow;
using L = MeasurementLabel;

namespace {

bool has_violation(const GraphData& d, ViolationKind kind) {
    for (const auto& v : validate(d)) {
        if (v.kind == kind) return true;
    }
    return false;
}

VertexSet random_set(const LabelledOpenGraph& g, Rng& rng) {
    VertexSet s = g.empty_set();
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (rng.chance(0.5)) s.insert(v);
    }
    return s;
}

}  // namespace

TEST_SUITE("open_graph") {
    TEST_CASE("the sample graph validates") {
        CHECK(validate(fixtures::sample_data()).empty());
        const auto g = fixtures::sample();
        CHECK(g.n() == 7);
        CHECK(g.n_inputs() == 1);
        CHECK(g.n_outputs() == 2);
        CHECK(g.measured_labels() == fixtures::sample_measured());
        CHECK(g.non_input_labels() == fixtures::sample_non_inputs());
    }

    TEST_CASE("violations") {
        auto d = fixtures::sample_data();
        d.labels["i"] = L::Z;
        CHECK(has_violation(d, ViolationKind::BadInputLabel));
        CHECK_THROWS_AS(LabelledOpenGraph{d}, InvalidGraph);

        d = fixtures::sample_data();
        d.edges.emplace_back("e", "zz");
        CHECK(has_violation(d, ViolationKind::DanglingEndpoint));

        d = fixtures::sample_data();
        d.edges.emplace_back("a", "a");
        CHECK(has_violation(d, ViolationKind::SelfLoop));

        d = fixtures::sample_data();
        d.edges.emplace_back("b", "i");
        CHECK(has_violation(d, ViolationKind::DuplicateEdge));

        d = fixtures::sample_data();
        d.labels.erase("e");
        CHECK(has_violation(d, ViolationKind::UnlabelledNonOutput));

        d = fixtures::sample_data();
        d.labels["o1"] = L::XY;
        CHECK(has_violation(d, ViolationKind::LabelledOutput));

        d = fixtures::sample_data();
        d.vertices.push_back("a");
        CHECK(has_violation(d, ViolationKind::DuplicateVertex));

        d = fixtures::sample_data();
        d.inputs.push_back("q");
        CHECK(has_violation(d, ViolationKind::UnknownInput));
    }

    TEST_CASE("overlapping inputs and outputs are allowed") {
        GraphData d;
        d.vertices = {"v", "w"};
        d.edges = {{"v", "w"}};
        d.inputs = {"v"};
        d.outputs = {"v", "w"};
        const LabelledOpenGraph g(d);
        CHECK(g.measured().empty());
        CHECK(g.non_inputs().size() == 1);
    }

    TEST_CASE("odd neighbourhoods on the sample graph") {
        const auto g = fixtures::sample();
        CHECK(g.names_of(odd_neighbourhood(g, g.set_of({"e"}))) == std::vector<std::string>{"b", "d", "o1", "o2"});
        CHECK(odd_neighbourhood(g, g.empty_set()).empty());
        CHECK(g.names_of(odd_neighbourhood(g, g.set_of({"b", "e", "o1"}))) == std::vector<std::string>{"i", "b", "o1"});
        CHECK(g.names_of(closed_odd_neighbourhood(g, g.set_of({"e"}))) ==
              std::vector<std::string>{"b", "e", "d", "o1", "o2"});
        CHECK(closed_odd_neighbourhood(g, g.empty_set()).empty());
        CHECK_THROWS(odd_neighbourhood(g, VertexSet(3)));
    }

    TEST_CASE("all degrees even: closed odd neighbourhood of V is V") {
        GraphData d;
        d.vertices = {"x", "y", "z"};
        d.edges = {{"x", "y"}, {"y", "z"}, {"x", "z"}};
        d.outputs = {"x", "y", "z"};
        const LabelledOpenGraph g(d);
        VertexSet all = g.empty_set();
        for (std::size_t v = 0; v < 3; ++v) all.insert(v);
        CHECK(closed_odd_neighbourhood(g, all) == all);
    }

    TEST_CASE("odd neighbourhood is linear") {
        Rng rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            const auto g = fixtures::random_graph(rng, 2, 71, 0, 1, 1, 0.4);
            const auto a = random_set(g, rng);
            const auto b = random_set(g, rng);
            CHECK(odd_neighbourhood(g, a ^ b) == (odd_neighbourhood(g, a) ^ odd_neighbourhood(g, b)));
            CHECK((closed_odd_neighbourhood(g, a) ^ a) == odd_neighbourhood(g, a));
            for (std::size_t v = 0; v < g.n(); ++v) {
                VertexSet single = g.empty_set();
                single.insert(v);
                CHECK(odd_neighbourhood(g, single) == g.neighbours(v));
            }
        }
    }

    TEST_CASE("classify") {
        const auto g = fixtures::sample();
        const auto c = classify(g);
        CHECK(g.names_of(c.internal) == std::vector<std::string>{"a", "b", "e", "d"});
        CHECK(g.names_of(c.x_like) == std::vector<std::string>{"b", "e"});
        CHECK(g.names_of(c.z_like) == std::vector<std::string>{"a", "d"});
        CHECK(g.names_of(c.pauli_internal) == std::vector<std::string>{"b", "d"});
        CHECK(g.names_of(c.planar_internal) == std::vector<std::string>{"a", "e"});

        const auto io = LabelledOpenGraph(fixtures::cyclic_data());
        const auto c4 = classify(io);
        CHECK(io.names_of(c4.internal) == std::vector<std::string>{"a"});

        GraphData d;
        d.vertices = {"p", "q"};
        d.inputs = {"p"};
        d.outputs = {"q"};
        d.labels = {{"p", L::X}};
        const auto e = classify(LabelledOpenGraph(d));
        CHECK(e.internal.empty());
        CHECK(e.x_like.empty());
        CHECK(e.planar_internal.empty());

        Rng rng(4);
        for (int trial = 0; trial < 30; ++trial) {
            const auto r = random_instance(8, 2, 2, 0.5, rng.next());
            const auto k = classify(r);
            CHECK((k.x_like | k.z_like) == k.internal);
            CHECK((k.pauli_internal | k.planar_internal) == k.internal);
            CHECK((k.x_like & k.z_like).empty());
        }
    }

    TEST_CASE("to_data roundtrip") {
        const auto g = fixtures::sample();
        CHECK(LabelledOpenGraph(g.to_data()) == g);
    }
}

TEST_SUITE("demand_matrices") {
    TEST_CASE("sample M and N") {
        const auto g = fixtures::sample();
        CHECK(flow_demand_matrix(g) == fixtures::sample_m());
        CHECK(order_demand_matrix(g) == fixtures::sample_n());
    }

    TEST_CASE("all outputs gives empty matrices") {
        GraphData d;
        d.vertices = {"x", "y"};
        d.edges = {{"x", "y"}};
        d.outputs = {"x", "y"};
        const LabelledOpenGraph g(d);
        CHECK(flow_demand_matrix(g).rows() == 0);
        CHECK(flow_demand_matrix(g).cols() == 2);
    }

    TEST_CASE("Y input has no own column") {
        GraphData d;
        d.vertices = {"i", "o"};
        d.edges = {{"i", "o"}};
        d.inputs = {"i"};
        d.outputs = {"o"};
        d.labels = {{"i", L::Y}};
        const auto m = flow_demand_matrix(LabelledOpenGraph(d));
        CHECK(m.bit_strings() == BitMatrix::from_rows(Labels{"i"}, Labels{"o"}, {"1"}).bit_strings());
    }

    TEST_CASE("isolated XZ vertex and all-Pauli graphs") {
        GraphData d;
        d.vertices = {"v", "o"};
        d.outputs = {"o"};
        d.labels = {{"v", L::XZ}};
        const auto n = order_demand_matrix(LabelledOpenGraph(d));
        CHECK(n.at("v", "v"));
        CHECK(n.row_popcount(0) == 1);

        Rng rng(8);
        for (int trial = 0; trial < 20; ++trial) {
            auto data = random_instance(7, 2, 2, 0.5, rng.next()).to_data();
            for (auto& [v, l] : data.labels) l = std::find(data.inputs.begin(), data.inputs.end(), v) != data.inputs.end() ? L::XY : std::vector<L>{L::X, L::Y, L::Z}[rng.below(3)];
            CHECK(order_demand_matrix(LabelledOpenGraph(data)).is_zero());
        }
    }

    TEST_CASE("matches an independent rebuild") {
        Rng rng(9);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 1 + rng.below(30);
            const std::size_t ni = rng.below(n / 2 + 1);
            const std::size_t no = rng.below(n - ni + 1);
            const auto g = random_instance(n, ni, no, 0.5, rng.next());
            const auto r = ref::demand(g.to_data());
            CHECK(ref::dense(flow_demand_matrix(g)) == r.m);
            CHECK(ref::dense(order_demand_matrix(g)) == r.n);
        }
    }

    TEST_CASE("label-swap duality") {
        Rng rng(10);
        const std::vector<std::pair<L, L>> pairs = {{L::XY, L::Z}, {L::YZ, L::X}, {L::XZ, L::Y}};
        for (int trial = 0; trial < 30; ++trial) {
            const auto g = random_instance(9, 0, 3, 0.5, rng.next());
            for (const auto& [n_label, m_label] : pairs) {
                auto dn = g.to_data();
                auto dm = g.to_data();
                for (auto& [v, l] : dn.labels) l = n_label;
                for (auto& [v, l] : dm.labels) l = m_label;
                CHECK(order_demand_matrix(LabelledOpenGraph(dn)) == flow_demand_matrix(LabelledOpenGraph(dm)));
            }
        }
    }

    TEST_CASE("edges among outputs are ignored") {
        auto d = fixtures::sample_data();
        d.edges.emplace_back("o1", "o2");
        const LabelledOpenGraph g(d);
        CHECK(flow_demand_matrix(g) == fixtures::sample_m());
        CHECK(order_demand_matrix(g) == fixtures::sample_n());
    }
}
