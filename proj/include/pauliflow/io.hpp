#pragma once

#include "pauliflow/bit_matrix.hpp"
#include "pauliflow/flow_finder.hpp"
#include "pauliflow/flow_model.hpp"
#include "pauliflow/open_graph.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pauliflow {

struct Diagnostic {
    /// JSON pointer into the document ("" for the whole document), or "line:col"
    /// for syntax errors.
    std::string location;
    std::string message;
};

/// Malformed or invalid document.
class DocumentError : public std::invalid_argument {
public:
    explicit DocumentError(std::vector<Diagnostic> diagnostics);
    [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Strict: unknown fields, wrong types and graph validation failures all throw DocumentError.
LabelledOpenGraph parse_graph(const std::string& text);
/// Canonical form: sorted keys, edges and sets in vertex order, trailing newline.
std::string serialize_graph(const LabelledOpenGraph& g);

struct FlowDocument {
    bool has_flow = false;
    CorrectionAssignment correction;
    OrderRelation order;
    std::optional<OrderRelation> closure;
    std::optional<std::vector<std::vector<std::string>>> layers;
    /// no_flow only
    std::optional<std::string> reason_code;
    std::vector<std::string> reason_witness;
};

std::string serialize_flow(const LabelledOpenGraph& g, const FlowResult& result);
/// Parses a flow document against g. Throws DocumentError.
FlowDocument parse_flow(const LabelledOpenGraph& g, const std::string& text);

std::string serialize_check_report(const FlowCheckReport& report);

/// DOT digraph, nodes in label order, one edge per related pair.
/// Throws std::invalid_argument on a cyclic relation.
std::string export_dot(const BitMatrix& relation);
std::string export_dot(const OrderRelation& relation);

/// Labelled bit grid: header line of column labels, then one line per row.
std::string format_matrix(const std::string& title, const BitMatrix& m);

/// Command-line entry point; returns the process exit code.
/// 0 flow found / verification passed, 3 no flow / verification failed,
/// 2 invalid input, 1 internal or IO error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pauliflow
