#pragma once

// File formats: lattices and Weierstrass models as JSON, curve graphs as
// JSON vertex/edge lists, ternary matrices as digit rows, and the canonical
// serialization of finite quadratic forms.

#include "enr/code3.hpp"
#include "enr/discform.hpp"
#include "enr/graph.hpp"
#include "enr/lattice.hpp"
#include "enr/weierstrass.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace enr {

nlohmann::json lattice_to_json(const GramLattice& l);
GramLattice lattice_from_json(const nlohmann::json& j);
GramLattice load_lattice(const std::string& path);

nlohmann::json model_to_json(const WeierstrassModel& w);
WeierstrassModel model_from_json(const nlohmann::json& j);
WeierstrassModel load_model(const std::string& path);

nlohmann::json graph_to_json(const CurveGraph& g);
CurveGraph graph_from_json(const nlohmann::json& j);
CurveGraph load_graph(const std::string& path);

// Rows of digits {0,1,2}, one row per line.
MatZ ternary_matrix_from_text(std::istream& in);
MatZ load_ternary_matrix(const std::string& path);

// Invariant factors plus generator q-values as exact fraction strings.
nlohmann::json qform_to_json(const FiniteQuadraticForm& q);

nlohmann::json code_to_json(const TernaryCode& c);

// Integer row basis files: {"rows": [[...], ...]}.
MatZ rows_from_json(const nlohmann::json& j);
MatZ load_rows(const std::string& path);

}  // namespace enr
