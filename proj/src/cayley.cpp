#include "caygraph/cayley.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

namespace caygraph {

namespace {

// S is closed under multiplication iff the allowed class set is closed
// under addition mod m (every class sum is realized by some product).
bool classes_additively_closed(const std::vector<bool>& allowed, int m) {
  for (int a = 0; a < m; ++a) {
    if (!allowed[a]) continue;
    for (int b = 0; b < m; ++b)
      if (allowed[b] && !allowed[(a + b) % m]) return false;
  }
  return true;
}

ConnectionSet finish(ConnectionSet s) {
  const FiniteField& f = *s.field;
  if (f.class_modulus() % s.m != 0)
    throw std::invalid_argument(
        "connection-set modulus must divide the field's class modulus");
  // Residue classes are multiplicative only when m | q-1.
  if ((f.q() - 1) % static_cast<std::uint64_t>(s.m) != 0)
    throw std::invalid_argument("connection-set modulus must divide q-1");
  const int neg_one_class = f.residue_class(f.neg(1)) % s.m;
  // S = -S iff the allowed set is stable under adding class(-1).
  for (int c = 0; c < s.m; ++c)
    if (s.allowed[c] && !s.allowed[(c + neg_one_class) % s.m])
      throw std::invalid_argument("connection set is not symmetric (S != -S)");
  s.contains_minus_one = s.allowed[neg_one_class];
  s.mult_closed = classes_additively_closed(s.allowed, s.m);
  return s;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::gp: return "gp";
    case Family::peisert: return "peisert";
    case Family::custom: return "custom";
  }
  return "?";
}

std::uint64_t ConnectionSet::size() const {
  std::uint64_t n = 0;
  for (int c = 0; c < m; ++c)
    if (allowed[c]) ++n;
  return (field->q() - 1) * n / static_cast<std::uint64_t>(m);
}

ConnectionSet gp_connection_set(const FieldPtr& field, int d) {
  if (d < 2) throw std::invalid_argument("gp family requires d > 1");
  if ((field->q() - 1) % static_cast<std::uint64_t>(2 * d) != 0)
    throw std::invalid_argument("gp family requires q = 1 (mod 2d)");
  ConnectionSet s;
  s.field = field;
  s.m = d;
  s.allowed.assign(d, false);
  s.allowed[0] = true;
  s.family = Family::gp;
  s.d = d;
  return finish(std::move(s));
}

ConnectionSet peisert_connection_set(const FieldPtr& field) {
  if (field->p() % 4 != 3)
    throw std::invalid_argument("peisert family requires p = 3 (mod 4)");
  if (field->s() % 2 != 0)
    throw std::invalid_argument("peisert family requires even extension degree");
  ConnectionSet s;
  s.field = field;
  s.m = 4;
  s.allowed = {true, true, false, false};
  s.family = Family::peisert;
  return finish(std::move(s));
}

ConnectionSet custom_connection_set(const FieldPtr& field, int m,
                                    const std::vector<int>& allowed_classes) {
  if (m < 1) throw std::invalid_argument("class modulus must be positive");
  if (allowed_classes.empty())
    throw std::invalid_argument("allowed class set must be nonempty");
  ConnectionSet s;
  s.field = field;
  s.m = m;
  s.allowed.assign(m, false);
  for (int c : allowed_classes) {
    if (c < 0 || c >= m) throw std::invalid_argument("class out of [0, m)");
    s.allowed[c] = true;
  }
  s.family = Family::custom;
  return finish(std::move(s));
}

bool CayleyGraph::self_complement_witness(vertex_t multiplier) const {
  if (multiplier == 0)
    throw std::invalid_argument("multiplier must be nonzero");
  // x -> c*x maps the edge {u,v} to a pair with difference c*(u-v), so it
  // suffices to check membership flips for every nonzero difference.
  const FiniteField& f = field();
  for (vertex_t x = 1; x < f.q(); ++x)
    if (s_.contains(x) == s_.contains(f.mul(multiplier, x))) return false;
  return true;
}

const BitMatrix& CayleyGraph::materialize(std::uint64_t cap) const {
  if (adj_.size() != 0) return adj_;
  const std::uint64_t q = vertex_count();
  if (q > cap) throw std::runtime_error("materialization cap exceeded");
  BitMatrix m(q);
  for (vertex_t u = 0; u < q; ++u)
    for (vertex_t v = u + 1; v < q; ++v)
      if (s_.contains(s_.field->sub(u, v))) {
        m.set(u, v);
        m.set(v, u);
      }
  adj_ = std::move(m);
  return adj_;
}

void CayleyGraph::export_dimacs(std::ostream& out, std::uint64_t cap) const {
  const std::uint64_t q = vertex_count();
  if (q > cap) throw std::runtime_error("materialization cap exceeded");
  out << "p edge " << q << ' ' << q * degree() / 2 << '\n';
  for (vertex_t u = 0; u < q; ++u)
    for (vertex_t v = u + 1; v < q; ++v)
      if (adjacent(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void CayleyGraph::export_edge_list(std::ostream& out, std::uint64_t cap) const {
  const std::uint64_t q = vertex_count();
  if (q > cap) throw std::runtime_error("materialization cap exceeded");
  for (vertex_t u = 0; u < q; ++u)
    for (vertex_t v = u + 1; v < q; ++v)
      if (adjacent(u, v)) out << u << ' ' << v << '\n';
}

nlohmann::json CayleyGraph::descriptor() const {
  std::vector<int> classes;
  for (int c = 0; c < s_.m; ++c)
    if (s_.allowed[c]) classes.push_back(c);
  nlohmann::json j{{"field", field().descriptor()},
                   {"family", family_name(s_.family)},
                   {"class_modulus", s_.m},
                   {"allowed_classes", classes},
                   {"degree", degree()},
                   {"mult_closed", s_.mult_closed},
                   {"contains_minus_one", s_.contains_minus_one}};
  if (s_.family == Family::gp) j["d"] = s_.d;
  return j;
}

}  // namespace caygraph
