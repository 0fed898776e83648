#ifndef CAYGRAPH_SUBSPACE_HPP
#define CAYGRAPH_SUBSPACE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "caygraph/cayley.hpp"
#include "caygraph/cliques.hpp"

namespace caygraph {

/// A clique that is simultaneously a vector space over the subfield
/// K = F_{p^t}, stored as a basis. The span is kept sorted for binary-search
/// membership; spans never exceed sqrt(q) elements in practice.
struct SubspaceClique {
  FieldPtr field;
  int subfield_degree = 0;  // t, K = F_{p^t}
  std::vector<vertex_t> basis;
  std::vector<vertex_t> span;  // sorted, |span| = |K|^dim

  int dim() const { return static_cast<int>(basis.size()); }
  std::uint64_t span_size() const { return span.size(); }
  bool contains(vertex_t v) const;

  nlohmann::json to_json(bool maximal) const;
};

/// K-span of the given basis; throws if the basis is K-dependent
/// (detected as |span| < |K|^dim).
std::vector<vertex_t> subspace_span(const FiniteField& field, int t,
                                    const std::vector<vertex_t>& basis);

/// The subfield F_{p^t} as a dimension-1 subspace clique over itself.
/// For gp graphs the divisibility condition d | (q-1)/(p^t-1) is checked in
/// addition to direct pairwise verification.
SubspaceClique subfield_clique(const CayleyGraph& graph, int t);

/// One extension step V -> V + gK. Requires a multiplicatively closed
/// connection set containing -1; the clique property of the grown span is
/// re-verified pair by pair rather than taken on faith.
SubspaceClique extend_by_vertex(const CayleyGraph& graph,
                                const SubspaceClique& v, vertex_t g);

struct ExtensionResult {
  bool maximal = false;
  std::optional<vertex_t> witness;  // extending vertex when not maximal
  SubspaceClique certificate;
  int steps = 0;
};

/// Iterate the extension step from V = F_{p^t} until no vertex extends the
/// span; the smallest extending vertex is chosen at each step.
ExtensionResult maximal_subspace_clique(const CayleyGraph& graph, int t);

/// Outcome of the Peisert quartic-order dichotomy for F_{p^r} in P*_{p^4r}:
/// either the subfield is a maximal clique, or the smallest extending h
/// yields a maximum clique F_{p^r} + h F_{p^r} of size sqrt(q) together
/// with the basis {1, h, g^2, g^2 h} of F_q over F_{p^r}.
struct DichotomyResult {
  bool extended = false;
  std::optional<vertex_t> h;
  SubspaceClique clique;         // the subfield, or the extended span
  bool clique_is_maximum = false;
  bool basis_ok = false;
  std::vector<vertex_t> basis_quadruple;
  std::uint64_t candidates_scanned = 0;
};

DichotomyResult peisert_quartic_dichotomy(const FieldPtr& field);

/// Lemma-4.1-style check: all |C|^2 sums u + g^2 v are pairwise distinct,
/// and when |C| = sqrt(q) they cover F_q.
bool sqrt_decomposition_check(const CayleyGraph& graph,
                              const std::vector<vertex_t>& clique,
                              vertex_t primitive);

/// True iff the K-span of the elements is all of F_q (|elements| = s/t).
bool basis_check(const FiniteField& field, int t,
                 const std::vector<vertex_t>& elements);

}  // namespace caygraph

#endif  // CAYGRAPH_SUBSPACE_HPP
