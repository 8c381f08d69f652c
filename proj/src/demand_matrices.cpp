#include "pauliflow/demand_matrices.hpp"

namespace pauliflow {
namespace {

enum class RowShape { Zero, Neighbourhood, Diagonal, NeighbourhoodAndDiagonal };

template <typename ShapeFn>
BitMatrix build(const LabelledOpenGraph& g, ShapeFn&& shape_of) {
    BitMatrix m(g.measured_labels(), g.non_input_labels());
    const auto& cols = g.non_inputs();
    for (std::size_t r = 0; r < g.measured().size(); ++r) {
        const std::size_t v = g.measured()[r];
        const RowShape shape = shape_of(g.measurement(v));
        if (shape == RowShape::Neighbourhood || shape == RowShape::NeighbourhoodAndDiagonal) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (g.adjacent(v, cols[c])) m.set(r, c);
            }
        }
        if ((shape == RowShape::Diagonal || shape == RowShape::NeighbourhoodAndDiagonal) && !g.is_input(v)) {
            m.set(r, g.non_input_labels().index_of(g.name(v)));
        }
    }
    return m;
}

}  // namespace

BitMatrix flow_demand_matrix(const LabelledOpenGraph& g) {
    return build(g, [](MeasurementLabel l) {
        switch (l) {
            case MeasurementLabel::X:
            case MeasurementLabel::XY: return RowShape::Neighbourhood;
            case MeasurementLabel::Y: return RowShape::NeighbourhoodAndDiagonal;
            default: return RowShape::Diagonal;
        }
    });
}

BitMatrix order_demand_matrix(const LabelledOpenGraph& g) {
    return build(g, [](MeasurementLabel l) {
        switch (l) {
            case MeasurementLabel::YZ: return RowShape::Neighbourhood;
            case MeasurementLabel::XZ: return RowShape::NeighbourhoodAndDiagonal;
            case MeasurementLabel::XY: return RowShape::Diagonal;
            default: return RowShape::Zero;
        }
    });
}

}  // namespace pauliflow
