#ifndef CAYGRAPH_CLIQUES_HPP
#define CAYGRAPH_CLIQUES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "caygraph/cayley.hpp"

namespace caygraph {

struct CliqueCertificate {
  std::vector<vertex_t> vertices;  // sorted ascending
  int size = 0;
  bool verified_clique = false;
  bool verified_maximal = false;
  bool verified_maximum = false;
  std::optional<int> matched_upper_bound;
  std::string bound_source;
  bool complete = true;  // false when a time limit cut the search short
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0.0;

  nlohmann::json to_json(const CayleyGraph& graph) const;
};

struct SolverConfig {
  double time_limit_seconds = 0.0;  // 0 = unlimited
  int threads = 1;
  std::uint64_t materialize_cap = CayleyGraph::kDefaultMaterializeCap;
  bool deterministic = true;
  bool use_transitivity = true;  // omega(X) = 1 + omega(X[N(0)])
};

bool is_clique(const CayleyGraph& graph, const std::vector<vertex_t>& vertices);

/// Maximality scan in ascending vertex order with per-candidate early exit.
/// Returns the smallest extending vertex when the clique is not maximal.
struct MaximalityResult {
  bool maximal = false;
  std::optional<vertex_t> extension_witness;
};
MaximalityResult is_maximal_clique(const CayleyGraph& graph,
                                   const std::vector<vertex_t>& vertices);

/// Exact maximum clique via branch and bound with greedy-coloring bounds.
CliqueCertificate max_clique(const CayleyGraph& graph,
                             const SolverConfig& config = {});

/// Exhaustive recursive enumeration, no pruning beyond feasibility; cross-
/// validation oracle for the branch-and-bound solver. Requires q <= 150.
CliqueCertificate naive_max_clique(const CayleyGraph& graph);

/// All sizes attained by maximal cliques (Bron-Kerbosch with pivoting).
/// Requires q <= size_cap (default 4000).
std::set<int> enumerate_maximal_clique_sizes(const CayleyGraph& graph,
                                             std::uint64_t size_cap = 4000);

}  // namespace caygraph

#endif  // CAYGRAPH_CLIQUES_HPP
