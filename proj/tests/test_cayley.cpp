#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "caygraph/cayley.hpp"

using namespace caygraph;

namespace {

FieldPtr make_field(int p, int s, int m) {
  return std::make_shared<FiniteField>(FiniteField::build(p, s, m));
}

std::set<vertex_t> members(const ConnectionSet& s) {
  std::set<vertex_t> out;
  for (vertex_t x = 1; x < s.field->q(); ++x)
    if (s.contains(x)) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("gp connection sets") {
  auto f13 = make_field(13, 1, 12);
  ConnectionSet squares = gp_connection_set(f13, 2);
  CHECK(members(squares) == std::set<vertex_t>{1, 3, 4, 9, 10, 12});
  CHECK(squares.size() == 6);
  CHECK(squares.mult_closed);
  CHECK(squares.contains_minus_one);

  ConnectionSet cubes = gp_connection_set(f13, 3);
  CHECK(members(cubes) == std::set<vertex_t>{1, 5, 8, 12});
  CHECK(cubes.size() == 4);

  auto f11 = make_field(11, 1, 10);
  CHECK_THROWS_AS(gp_connection_set(f11, 2), std::invalid_argument);
}

TEST_CASE("peisert connection sets") {
  ConnectionSet m49 = peisert_connection_set(make_field(7, 2, 4));
  CHECK(m49.size() == 24);
  CHECK(m49.contains_minus_one);
  CHECK_FALSE(m49.mult_closed);

  ConnectionSet m81 = peisert_connection_set(make_field(3, 4, 4));
  CHECK(m81.size() == 40);

  CHECK_THROWS_AS(peisert_connection_set(make_field(17, 2, 4)),
                  std::invalid_argument);  // p = 1 (mod 4)
  CHECK_THROWS_AS(peisert_connection_set(make_field(7, 1, 2)),
                  std::invalid_argument);  // odd degree
}

TEST_CASE("custom connection sets") {
  auto f13 = make_field(13, 1, 12);
  ConnectionSet squares = custom_connection_set(f13, 4, {0, 2});
  CHECK(members(squares) == std::set<vertex_t>{1, 3, 4, 9, 10, 12});

  // quartic residues alone are not symmetric in F_13: -1 = 2^6 has class 2
  CHECK_THROWS_AS(custom_connection_set(f13, 4, {0}), std::invalid_argument);
  // S = {2} is not symmetric: -2 = 11 = 2^7
  CHECK_THROWS_AS(custom_connection_set(f13, 12, {1}), std::invalid_argument);
  CHECK_THROWS_AS(custom_connection_set(f13, 4, {}), std::invalid_argument);

  ConnectionSet all = custom_connection_set(f13, 1, {0});
  CHECK(all.size() == 12);  // complete graph
}

TEST_CASE("connection sets are symmetric, exhaustively") {
  auto check_sym = [](const ConnectionSet& s) {
    for (vertex_t x = 1; x < s.field->q(); ++x)
      CHECK(s.contains(x) == s.contains(s.field->neg(x)));
  };
  check_sym(gp_connection_set(make_field(13, 1, 12), 2));
  check_sym(gp_connection_set(make_field(13, 1, 12), 3));
  check_sym(peisert_connection_set(make_field(3, 4, 4)));
  check_sym(peisert_connection_set(make_field(7, 2, 4)));
  check_sym(custom_connection_set(make_field(13, 1, 12), 4, {0, 2}));
}

TEST_CASE("adjacency") {
  CayleyGraph p13(gp_connection_set(make_field(13, 1, 2), 2));
  CHECK(p13.adjacent(0, 1));        // 1 is a square mod 13
  CHECK_FALSE(p13.adjacent(0, 2));  // 2 is a nonsquare mod 13
  CHECK(p13.adjacent(1, 0));
  CHECK_THROWS_AS(p13.adjacent(5, 5), std::invalid_argument);

  // translation invariance on random samples
  std::mt19937 rng(7);
  std::uniform_int_distribution<vertex_t> dist(0, 12);
  const FiniteField& f = p13.field();
  for (int k = 0; k < 10000; ++k) {
    vertex_t u = dist(rng), v = dist(rng), w = dist(rng);
    if (u == v) continue;
    CHECK(p13.adjacent(u, v) == p13.adjacent(f.add(u, w), f.add(v, w)));
  }
}

TEST_CASE("degree equals |S| for every vertex") {
  for (auto graph :
       {CayleyGraph(gp_connection_set(make_field(13, 1, 2), 2)),
        CayleyGraph(peisert_connection_set(make_field(3, 4, 4))),
        CayleyGraph(gp_connection_set(make_field(11, 2, 4), 4))}) {
    for (vertex_t u = 0; u < graph.vertex_count(); ++u) {
      std::uint64_t deg = 0;
      for (vertex_t v = 0; v < graph.vertex_count(); ++v)
        if (v != u && graph.adjacent(u, v)) ++deg;
      CHECK(deg == graph.degree());
    }
  }
}

TEST_CASE("gp sets are closed under multiplication, exhaustively") {
  for (auto [p, s, d] : {std::tuple{13, 1, 2}, {13, 1, 3}, {11, 2, 4}}) {
    ConnectionSet cs = gp_connection_set(make_field(p, s, d), d);
    std::set<vertex_t> mem = members(cs);
    for (vertex_t x : mem)
      for (vertex_t y : mem) CHECK(mem.count(cs.field->mul(x, y)) == 1);
  }
}

TEST_CASE("Peisert partition: M, g^2 M and 0 tile the field") {
  for (auto [p, s] : {std::pair{7, 2}, {3, 4}, {11, 2}}) {
    auto field = make_field(p, s, 4);
    ConnectionSet m = peisert_connection_set(field);
    const vertex_t g2 = field->mul(field->generator(), field->generator());
    std::vector<int> cover(field->q(), 0);
    cover[0] += 1;
    for (vertex_t x = 1; x < field->q(); ++x)
      if (m.contains(x)) {
        cover[x] += 1;
        cover[field->mul(g2, x)] += 1;
      }
    for (vertex_t x = 0; x < field->q(); ++x) CHECK(cover[x] == 1);
  }
}

TEST_CASE("Peisert graph contains the quadruple Paley graph") {
  for (auto [p, s] : {std::pair{7, 2}, {3, 4}}) {
    auto field = make_field(p, s, 4);
    CayleyGraph gp4(gp_connection_set(field, 4));
    CayleyGraph pstar(peisert_connection_set(field));
    for (vertex_t u = 0; u < field->q(); ++u)
      for (vertex_t v = u + 1; v < field->q(); ++v)
        if (gp4.adjacent(u, v)) CHECK(pstar.adjacent(u, v));
  }
}

TEST_CASE("Peisert sets for different primitive roots agree up to Frobenius") {
  // Roots g^k with k = 1 (mod 4) give the identical set; k = 3 (mod 4)
  // gives the conjugate set, carried back by x -> x^p. Either way the
  // graph is the same up to a field automorphism.
  for (auto [p, s] : {std::pair{3, 2}, {7, 2}, {3, 4}}) {
    auto field = make_field(p, s, 4);
    const std::uint64_t n = field->q() - 1;
    auto connection = [&](vertex_t root) {
      std::set<vertex_t> m;
      vertex_t cur = 1;
      for (std::uint64_t j = 0; j < n; ++j) {
        if (j % 4 <= 1) m.insert(cur);
        cur = field->mul(cur, root);
      }
      return m;
    };
    const vertex_t g = field->generator();
    const std::set<vertex_t> base = connection(g);
    int same = 0, conjugate = 0;
    for (std::uint64_t k = 3; k < n; k += 2) {
      if (std::gcd(k, n) != 1) continue;
      std::set<vertex_t> m = connection(field->pow(g, k));
      if (k % 4 == 1) {
        CHECK(m == base);
        ++same;
      } else {
        CHECK(m != base);
        // p = 3 (mod 4), so x -> x^p swaps residue classes 1 and 3
        std::set<vertex_t> frob;
        for (vertex_t x : m)
          frob.insert(field->pow(x, static_cast<std::uint64_t>(p)));
        CHECK(frob == base);
        ++conjugate;
      }
    }
    CHECK(same > 0);
    CHECK(conjugate > 0);
  }
}

TEST_CASE("self-complement witnesses") {
  CayleyGraph p13(gp_connection_set(make_field(13, 1, 2), 2));
  CHECK(p13.self_complement_witness(2));        // 2 is a nonsquare mod 13
  CHECK_FALSE(p13.self_complement_witness(1));  // identity preserves edges
  CHECK_THROWS_AS(p13.self_complement_witness(0), std::invalid_argument);

  auto f81 = make_field(3, 4, 4);
  CayleyGraph pstar81(peisert_connection_set(f81));
  CHECK(pstar81.self_complement_witness(f81->mul(f81->generator(), f81->generator())));

  CayleyGraph gp13_3(gp_connection_set(make_field(13, 1, 3), 3));
  for (vertex_t c = 1; c < 13; ++c)
    CHECK_FALSE(gp13_3.self_complement_witness(c));
}

TEST_CASE("DIMACS export") {
  CayleyGraph p13(gp_connection_set(make_field(13, 1, 2), 2));
  std::ostringstream os;
  p13.export_dimacs(os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "p edge 13 39");
  std::getline(is, line);
  CHECK(line == "e 1 2");  // 0-1 is the lexicographically first edge
  int edges = 1;
  std::pair<int, int> prev{1, 2};
  while (std::getline(is, line)) {
    ++edges;
    std::pair<int, int> cur;
    char e;
    std::istringstream(line) >> e >> cur.first >> cur.second;
    CHECK(cur > prev);  // ascending (u, v) ordering, byte-stable output
    prev = cur;
  }
  CHECK(edges == 39);

  CayleyGraph pstar81(peisert_connection_set(make_field(3, 4, 4)));
  std::ostringstream os81;
  pstar81.export_dimacs(os81);
  CHECK(os81.str().substr(0, os81.str().find('\n')) == "p edge 81 1620");
}

TEST_CASE("edge list export") {
  CayleyGraph p13(gp_connection_set(make_field(13, 1, 2), 2));
  std::ostringstream os;
  p13.export_edge_list(os);
  std::istringstream is(os.str());
  std::string line;
  int edges = 0;
  while (std::getline(is, line)) ++edges;
  CHECK(edges == 39);
}

TEST_CASE("materialization cap") {
  CayleyGraph p13(gp_connection_set(make_field(13, 1, 2), 2));
  CHECK_THROWS_AS(p13.materialize(4), std::runtime_error);
  const BitMatrix& adj = p13.materialize();
  CHECK(adj.get(0, 1));
  CHECK_FALSE(adj.get(0, 2));
}

TEST_CASE("graph descriptor") {
  CayleyGraph g(gp_connection_set(make_field(13, 1, 3), 3));
  nlohmann::json j = g.descriptor();
  CHECK(j["family"] == "gp");
  CHECK(j["d"] == 3);
  CHECK(j["degree"] == 4);
  CHECK(j["allowed_classes"] == nlohmann::json::array({0}));
}
