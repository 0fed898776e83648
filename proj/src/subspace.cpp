#include "caygraph/subspace.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace caygraph {

namespace {

// Incremental span construction over K = F_{p^t}; empty optional when the
// basis is K-linearly dependent.
std::optional<std::vector<vertex_t>> try_span(const FiniteField& field, int t,
                                              const std::vector<vertex_t>& basis) {
  const std::vector<vertex_t> k_elems = field.subfield_elements(t);
  std::vector<vertex_t> span{0};
  for (vertex_t b : basis) {
    std::vector<vertex_t> next;
    next.reserve(span.size() * k_elems.size());
    for (vertex_t k : k_elems) {
      const vertex_t bk = field.mul(b, k);
      for (vertex_t x : span) next.push_back(field.add(x, bk));
    }
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end())
      return std::nullopt;
    span = std::move(next);
  }
  return span;
}

bool span_is_clique(const CayleyGraph& graph, const std::vector<vertex_t>& span) {
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = i + 1; j < span.size(); ++j)
      if (!graph.adjacent(span[i], span[j])) return false;
  return true;
}

bool adjacent_to_all(const CayleyGraph& graph, vertex_t g,
                     const std::vector<vertex_t>& span) {
  for (vertex_t v : span) {
    if (v == g) return false;
    if (!graph.adjacent(g, v)) return false;
  }
  return true;
}

void require_lemma_hypotheses(const CayleyGraph& graph) {
  const ConnectionSet& s = graph.connection_set();
  if (!s.mult_closed)
    throw std::invalid_argument(
        "connection set is not closed under multiplication; the subspace "
        "extension step does not apply");
  if (!s.contains_minus_one)
    throw std::invalid_argument("connection set does not contain -1");
}

}  // namespace

bool SubspaceClique::contains(vertex_t v) const {
  return std::binary_search(span.begin(), span.end(), v);
}

nlohmann::json SubspaceClique::to_json(bool maximal) const {
  return nlohmann::json{{"p", field->p()},       {"s", field->s()},
                        {"t", subfield_degree},  {"basis", basis},
                        {"dim", dim()},          {"span_size", span_size()},
                        {"maximal", maximal}};
}

std::vector<vertex_t> subspace_span(const FiniteField& field, int t,
                                    const std::vector<vertex_t>& basis) {
  auto span = try_span(field, t, basis);
  if (!span) throw std::invalid_argument("basis is linearly dependent over K");
  return *span;
}

SubspaceClique subfield_clique(const CayleyGraph& graph, int t) {
  const FiniteField& f = graph.field();
  const std::vector<vertex_t> elems = f.subfield_elements(t);  // checks t | s
  const ConnectionSet& s = graph.connection_set();
  if (s.family == Family::gp) {
    std::uint64_t sub_order = elems.size();
    if (((f.q() - 1) / (sub_order - 1)) % static_cast<std::uint64_t>(s.d) != 0)
      throw std::invalid_argument(
          "subfield clique condition d | (q-1)/(p^t-1) fails");
  }
  if (!span_is_clique(graph, elems))
    throw std::invalid_argument("subfield is not a clique in this graph");
  SubspaceClique v;
  v.field = graph.field_ptr();
  v.subfield_degree = t;
  v.basis = {1};
  v.span = elems;
  return v;
}

SubspaceClique extend_by_vertex(const CayleyGraph& graph,
                                const SubspaceClique& v, vertex_t g) {
  require_lemma_hypotheses(graph);
  if (v.contains(g))
    throw std::invalid_argument("extension vertex already lies in the span");
  if (!adjacent_to_all(graph, g, v.span))
    throw std::invalid_argument("extension vertex is not adjacent to the span");
  SubspaceClique out;
  out.field = v.field;
  out.subfield_degree = v.subfield_degree;
  out.basis = v.basis;
  out.basis.push_back(g);
  out.span = subspace_span(*v.field, v.subfield_degree, out.basis);
  // The extension lemma guarantees this; verify it anyway, pair by pair.
  if (!span_is_clique(graph, out.span))
    throw std::logic_error("extended span is not a clique");
  return out;
}

ExtensionResult maximal_subspace_clique(const CayleyGraph& graph, int t) {
  require_lemma_hypotheses(graph);
  ExtensionResult result;
  result.certificate = subfield_clique(graph, t);
  while (true) {
    std::optional<vertex_t> g;
    for (vertex_t cand = 1; cand < graph.vertex_count(); ++cand) {
      if (result.certificate.contains(cand)) continue;
      if (adjacent_to_all(graph, cand, result.certificate.span)) {
        g = cand;
        break;
      }
    }
    if (!g) {
      result.maximal = true;
      return result;
    }
    result.witness = g;
    result.certificate = extend_by_vertex(graph, result.certificate, *g);
    result.maximal = false;
    ++result.steps;
  }
}

DichotomyResult peisert_quartic_dichotomy(const FieldPtr& field) {
  if (field->p() % 4 != 3)
    throw std::invalid_argument("dichotomy requires p = 3 (mod 4)");
  if (field->s() % 4 != 0)
    throw std::invalid_argument("dichotomy requires quartic order q = p^{4r}");
  const int r = field->s() / 4;
  CayleyGraph graph(peisert_connection_set(field));

  DichotomyResult result;
  // F_{p^r} is a clique in P*_q (quadruple Paley subgraph); verified here.
  result.clique = subfield_clique(graph, r);
  const std::vector<vertex_t>& k_span = result.clique.span;

  std::optional<vertex_t> h;
  for (vertex_t cand = 1; cand < graph.vertex_count(); ++cand) {
    if (result.clique.contains(cand)) continue;
    ++result.candidates_scanned;
    if (adjacent_to_all(graph, cand, k_span)) {
      h = cand;
      break;
    }
  }
  if (!h) return result;  // F_{p^r} is a maximal clique

  result.extended = true;
  result.h = h;
  // The two-case index argument makes F_{p^r} + h F_{p^r} a clique of size
  // sqrt(q); we replay it by brute verification of the whole span.
  SubspaceClique c;
  c.field = field;
  c.subfield_degree = r;
  c.basis = {1, *h};
  c.span = subspace_span(*field, r, c.basis);
  if (!span_is_clique(graph, c.span))
    throw std::logic_error("dichotomy span is not a clique");
  std::uint64_t sqrt_q = 1;
  for (int k = 0; k < 2 * r; ++k) sqrt_q *= static_cast<std::uint64_t>(field->p());
  result.clique_is_maximum = (c.span.size() == sqrt_q);
  result.clique = std::move(c);

  const vertex_t g = field->generator();
  const vertex_t g2 = field->mul(g, g);
  result.basis_quadruple = {1, *h, g2, field->mul(g2, *h)};
  result.basis_ok = basis_check(*field, r, result.basis_quadruple);
  return result;
}

bool sqrt_decomposition_check(const CayleyGraph& graph,
                              const std::vector<vertex_t>& clique,
                              vertex_t primitive) {
  if (!is_clique(graph, clique))
    throw std::invalid_argument("input is not a clique");
  const FiniteField& f = graph.field();
  const vertex_t g2 = f.mul(primitive, primitive);
  std::vector<bool> seen(f.q(), false);
  std::uint64_t count = 0;
  for (vertex_t u : clique)
    for (vertex_t v : clique) {
      const vertex_t sum = f.add(u, f.mul(g2, v));
      if (seen[sum]) return false;  // collision: sums not pairwise distinct
      seen[sum] = true;
      ++count;
    }
  return count == f.q();  // distinct and covering
}

bool basis_check(const FiniteField& field, int t,
                 const std::vector<vertex_t>& elements) {
  if (t < 1 || field.s() % t != 0)
    throw std::invalid_argument("subfield degree must divide s");
  if (static_cast<int>(elements.size()) != field.s() / t)
    throw std::invalid_argument("wrong number of basis elements");
  auto span = try_span(field, t, elements);
  return span && span->size() == field.q();
}

}  // namespace caygraph
