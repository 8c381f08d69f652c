#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/open_graph.hpp"

#include <string>

namespace fixtures {

using pauliflow::GraphData;
using pauliflow::Labels;
using pauliflow::MeasurementLabel;

inline GraphData sample_data() {
    GraphData d;
    d.vertices = {"i", "a", "b", "e", "d", "o1", "o2"};
    d.edges = {{"i", "b"}, {"a", "d"}, {"a", "o2"}, {"b", "e"}, {"b", "d"},
               {"b", "o2"}, {"e", "d"}, {"e", "o1"}, {"e", "o2"}, {"d", "o2"}};
    d.inputs = {"i"};
    d.outputs = {"o1", "o2"};
    d.labels = {{"i", MeasurementLabel::XY}, {"a", MeasurementLabel::XZ}, {"b", MeasurementLabel::Y},
                {"e", MeasurementLabel::XY}, {"d", MeasurementLabel::Z}};
    return d;
}

inline pauliflow::LabelledOpenGraph sample() { return pauliflow::LabelledOpenGraph(sample_data()); }

inline GraphData cyclic_data() {
    GraphData d;
    d.vertices = {"i", "a", "o"};
    d.edges = {{"i", "a"}, {"i", "o"}, {"a", "o"}};
    d.inputs = {"i"};
    d.outputs = {"o"};
    d.labels = {{"i", MeasurementLabel::X}, {"a", MeasurementLabel::YZ}};
    return d;
}

inline pauliflow::LabelledOpenGraph cyclic() { return pauliflow::LabelledOpenGraph(cyclic_data()); }

inline const Labels& sample_measured() {
    static const Labels l{"i", "a", "b", "e", "d"};
    return l;
}
inline const Labels& sample_non_inputs() {
    static const Labels l{"a", "b", "e", "d", "o1", "o2"};
    return l;
}

// Sample matrices, rows measured, columns non-inputs (C is the other way round).
inline pauliflow::BitMatrix sample_m() {
    return pauliflow::BitMatrix::from_rows(sample_measured(), sample_non_inputs(),
                                           {"010000", "100000", "011101", "010111", "000100"});
}
inline pauliflow::BitMatrix sample_n() {
    return pauliflow::BitMatrix::from_rows(sample_measured(), sample_non_inputs(),
                                           {"000000", "100101", "000000", "001000", "000000"});
}
inline pauliflow::BitMatrix sample_c() {
    return pauliflow::BitMatrix::from_rows(sample_non_inputs(), sample_measured(),
                                           {"01000", "10000", "11100", "00001", "11010", "01001"});
}
inline pauliflow::BitMatrix sample_nc() {
    return pauliflow::BitMatrix::from_rows(sample_measured(), sample_measured(),
                                           {"00000", "00000", "00000", "11100", "00000"});
}

// Right inverse and kernel basis for a reproducible layered search on the sample graph.
inline pauliflow::BitMatrix sample_c0() {
    return pauliflow::BitMatrix::from_rows(sample_non_inputs(), sample_measured(),
                                           {"01000", "10000", "10101", "00001", "10011", "00000"});
}
inline pauliflow::BitMatrix sample_f() {
    return pauliflow::BitMatrix::from_rows(sample_non_inputs(), Labels{"F1"},
                                           {"0", "0", "1", "0", "1", "1"});
}

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace fixtures
