#pragma once

// Graphs of (-2)-curves: dual graphs of fiber configurations, reduction of
// tree-supported divisors by reflections (terminal-curve elimination and
// component transport), and backtracking searches for ADE/Kodaira shapes.

#include "enr/divisor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace enr {

class CurveGraph {
 public:
  int add_vertex(const std::string& name);
  void add_edge(const std::string& a, const std::string& b, int multiplicity = 1);
  void assign_class(const std::string& name, const DivisorClass& cls);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int index_of(const std::string& name) const;
  const std::string& name_of(int v) const { return names_[v]; }
  int edge_multiplicity(int a, int b) const;
  std::vector<int> neighbors(int v) const;
  bool has_class(int v) const;
  const DivisorClass& class_of(int v) const;

  // With classes assigned: every edge multiplicity must equal the pairing,
  // non-adjacent distinct vertices must pair to zero, and every class must
  // have square -2.
  void validate_classes() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, int> edges_;
  std::map<int, DivisorClass> classes_;
};

// Word of vertex indices whose reflections map the reduced tree-supported
// divisor `support` (vertex subset, multiplicity one each) to the single
// vertex `target`. Deterministic: lowest-index terminal eliminated first.
std::vector<int> tree_reduce(const CurveGraph& g, const std::vector<int>& support,
                             int target);

// Lifts a vertex word to divisor classes (requires assigned classes).
ReflectionWord lift_word(const CurveGraph& g, const std::vector<int>& word);

// A simple-laced shape to search for: named vertices and edges.
struct GraphShape {
  std::string name;
  int size = 0;
  std::vector<std::pair<int, int>> edges;

  static GraphShape a_chain(int n);        // A_n
  static GraphShape kodaira_IV_star();     // affine E6 star
};

// Assignment of pairwise-disjoint vertex sets, one per shape, such that each
// induced subgraph matches the shape exactly (edge multiplicities 1 inside,
// 0 across shapes and at non-edges). Tie-broken by lowest vertex index.
std::optional<std::vector<std::vector<int>>> find_ade_config(
    const CurveGraph& g, const std::vector<GraphShape>& shapes);

}  // namespace enr
