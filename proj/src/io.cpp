#include "enr/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace enr {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected integer or integer string");
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::vector<std::string> poly_to_strings(const RatPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(fraction_str(c));
  return out;
}

RatPoly poly_from_strings(const json& arr) {
  std::vector<Rational> coeffs;
  for (const auto& s : arr) coeffs.push_back(parse_fraction(s.get<std::string>()));
  return RatPoly(std::move(coeffs));
}

}  // namespace

json lattice_to_json(const GramLattice& l) {
  json gram = json::array();
  for (Eigen::Index i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < l.rank(); ++j) row.push_back(integer_to_json(l.gram()(i, j)));
    gram.push_back(row);
  }
  json out = {{"rank", l.rank()}, {"gram", gram}};
  if (!l.label().empty()) out["label"] = l.label();
  return out;
}

GramLattice lattice_from_json(const json& j) {
  if (!j.contains("rank") || !j.contains("gram"))
    throw std::invalid_argument("lattice file needs 'rank' and 'gram'");
  int rank = j.at("rank").get<int>();
  const json& gram = j.at("gram");
  if (static_cast<int>(gram.size()) != rank)
    throw std::invalid_argument("lattice file: gram has wrong number of rows");
  MatZ g(rank, rank);
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(gram[i].size()) != rank)
      throw std::invalid_argument("lattice file: gram row length mismatch");
    for (int k = 0; k < rank; ++k) g(i, k) = integer_from_json(gram[i][k]);
  }
  std::string label = j.value("label", std::string());
  return GramLattice::make(std::move(g), std::move(label));
}

GramLattice load_lattice(const std::string& path) {
  return lattice_from_json(parse_file(path));
}

json model_to_json(const WeierstrassModel& w) {
  json out = {{"a1", poly_to_strings(w.a1)}, {"a2", poly_to_strings(w.a2)},
              {"a3", poly_to_strings(w.a3)}, {"a4", poly_to_strings(w.a4)},
              {"a6", poly_to_strings(w.a6)}};
  if (!w.label.empty()) out["label"] = w.label;
  return out;
}

WeierstrassModel model_from_json(const json& j) {
  WeierstrassModel w;
  auto get = [&](const char* key) {
    return j.contains(key) ? poly_from_strings(j.at(key)) : RatPoly();
  };
  w.a1 = get("a1");
  w.a2 = get("a2");
  w.a3 = get("a3");
  w.a4 = get("a4");
  w.a6 = get("a6");
  w.label = j.value("label", std::string());
  return w;
}

WeierstrassModel load_model(const std::string& path) {
  return model_from_json(parse_file(path));
}

json graph_to_json(const CurveGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name_of(v));
  json edges = json::array();
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = a + 1; b < g.vertex_count(); ++b)
      if (int m = g.edge_multiplicity(a, b); m > 0)
        edges.push_back(json::array({g.name_of(a), g.name_of(b), m}));
  return {{"vertices", vertices}, {"edges", edges}};
}

CurveGraph graph_from_json(const json& j) {
  CurveGraph g;
  for (const auto& name : j.at("vertices")) g.add_vertex(name.get<std::string>());
  for (const auto& e : j.at("edges")) {
    if (e.size() < 2 || e.size() > 3)
      throw std::invalid_argument("graph edge wants [a, b] or [a, b, mult]");
    int mult = e.size() == 3 ? e[2].get<int>() : 1;
    g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), mult);
  }
  return g;
}

CurveGraph load_graph(const std::string& path) {
  return graph_from_json(parse_file(path));
}

MatZ ternary_matrix_from_text(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<int> row;
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (c < '0' || c > '2')
        throw std::invalid_argument("ternary matrix rows use digits 0, 1, 2");
      row.push_back(c - '0');
    }
    if (row.empty()) continue;
    if (!rows.empty() && rows.front().size() != row.size())
      throw std::invalid_argument("ternary matrix rows have unequal length");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("ternary matrix file is empty");
  MatZ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[0].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return m;
}

MatZ load_ternary_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return ternary_matrix_from_text(in);
}

json qform_to_json(const FiniteQuadraticForm& q) {
  json factors = json::array();
  for (const auto& d : q.group().invariant_factors) factors.push_back(integer_to_json(d));
  json qvals = json::array();
  for (Eigen::Index i = 0; i < q.q_gen().size(); ++i)
    qvals.push_back(fraction_str(q.q_gen()(i)));
  json bvals = json::array();
  for (Eigen::Index i = 0; i < q.b_gen().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < q.b_gen().cols(); ++j)
      row.push_back(fraction_str(q.b_gen()(i, j)));
    bvals.push_back(row);
  }
  return {{"invariant_factors", factors}, {"q_mod_2", qvals}, {"b_mod_1", bvals}};
}

json code_to_json(const TernaryCode& c) {
  json basis = json::array();
  for (const auto& row : c.basis()) {
    std::string s;
    for (int x : row) s += static_cast<char>('0' + x);
    basis.push_back(s);
  }
  return {{"length", c.length()}, {"dim", c.dim()}, {"basis", basis}};
}

MatZ rows_from_json(const json& j) {
  const json& rows = j.at("rows");
  if (rows.empty()) throw std::invalid_argument("rows file: no rows");
  MatZ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("rows file: ragged rows");
    for (size_t k = 0; k < rows[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          integer_from_json(rows[i][k]);
  }
  return m;
}

MatZ load_rows(const std::string& path) { return rows_from_json(parse_file(path)); }

}  // namespace enr
