#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "caygraph/gf.hpp"

using namespace caygraph;

namespace {

FiniteField make(int p, int s, int m) { return FiniteField::build(p, s, m); }

}  // namespace

TEST_CASE("prime field construction picks the smallest primitive root") {
  FiniteField f3 = make(3, 1, 2);
  CHECK(f3.q() == 3);
  CHECK(f3.generator() == 2);

  FiniteField f5 = make(5, 1, 4);
  CHECK(f5.generator() == 2);  // powers of 2 mod 5: 2, 4, 3, 1

  FiniteField f13 = make(13, 1, 4);
  CHECK(f13.generator() == 2);
}

TEST_CASE("extension field construction") {
  FiniteField f81 = make(3, 4, 4);
  CHECK(f81.q() == 81);
  CHECK(f81.s() == 4);
  CHECK(f81.modulus().size() == 5);
  CHECK(f81.modulus().back() == 1);
  // the generator is the residue class of x
  CHECK(f81.generator() == 3);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(make(4, 1, 2), std::invalid_argument);   // even
  CHECK_THROWS_AS(make(9, 1, 2), std::invalid_argument);   // composite
  CHECK_THROWS_AS(make(2, 1, 1), std::invalid_argument);   // p = 2 excluded
  CHECK_THROWS_AS(make(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make(3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make(3, 1, 256), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::build(3, 20, 2, 1 << 20), std::invalid_argument);
}

TEST_CASE("arithmetic in F_13") {
  FiniteField f = make(13, 1, 4);
  CHECK(f.add(7, 8) == 2);
  CHECK(f.inv(5) == 8);  // 5 * 8 = 40 = 1 (mod 13)
  CHECK(f.pow(2, 12) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.add(13, 0), std::out_of_range);
}

TEST_CASE("encode and decode") {
  FiniteField f9 = make(3, 2, 2);
  FieldElement x{{2, 1}};
  CHECK(f9.encode(x) == 5);
  CHECK(f9.decode(5) == x);
  CHECK(f9.encode(f9.decode(0)) == 0u);
  CHECK_THROWS_AS(f9.decode(9), std::out_of_range);
  CHECK_THROWS_AS(f9.encode(FieldElement{{3, 0}}), std::invalid_argument);

  FiniteField f81 = make(3, 4, 4);
  for (vertex_t i = 0; i < f81.q(); ++i)
    CHECK(f81.encode(f81.decode(i)) == i);
}

TEST_CASE("residue classes in F_13, m = 4") {
  FiniteField f = make(13, 1, 4);
  CHECK(f.residue_class(1) == 0);
  CHECK(f.residue_class(12) == 2);  // 12 = 2^6
  CHECK(f.residue_class(3) == 0);   // 3 = 2^4
  CHECK_THROWS_AS(f.residue_class(0), std::domain_error);
}

TEST_CASE("subfield elements") {
  FiniteField f81 = make(3, 4, 4);
  CHECK(f81.subfield_elements(1) == std::vector<vertex_t>{0, 1, 2});
  CHECK(f81.subfield_elements(2).size() == 9);
  CHECK(f81.subfield_elements(4).size() == 81);
  CHECK_THROWS_AS(f81.subfield_elements(3), std::invalid_argument);

  // closed under subtraction and multiplication, exhaustively
  auto sub9 = f81.subfield_elements(2);
  auto in = [&](vertex_t v) {
    return std::binary_search(sub9.begin(), sub9.end(), v);
  };
  for (vertex_t a : sub9)
    for (vertex_t b : sub9) {
      CHECK(in(f81.sub(a, b)));
      CHECK(in(f81.mul(a, b)));
    }
}

TEST_CASE("field laws, exhaustive on small fields") {
  for (auto [p, s] : {std::pair{13, 1}, {3, 3}, {7, 2}, {3, 4}}) {
    FiniteField f = make(p, s, 2);
    const vertex_t q = static_cast<vertex_t>(f.q());
    for (vertex_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (vertex_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
    // distributivity over a full triple sweep
    for (vertex_t a = 0; a < q; a += 2)
      for (vertex_t b = 0; b < q; ++b)
        for (vertex_t c = 0; c < q; ++c)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
}

TEST_CASE("Frobenius additivity, exhaustive") {
  for (auto [p, s] : {std::pair{13, 1}, {7, 2}, {3, 4}}) {
    FiniteField f = make(p, s, 2);
    std::vector<vertex_t> frob(f.q());
    for (vertex_t x = 0; x < f.q(); ++x)
      frob[x] = f.pow(x, static_cast<std::uint64_t>(p));
    for (vertex_t x = 0; x < f.q(); ++x)
      for (vertex_t y = 0; y < f.q(); ++y)
        CHECK(frob[f.add(x, y)] == f.add(frob[x], frob[y]));
  }
}

TEST_CASE("generator has multiplicative order q - 1") {
  for (auto [p, s] : {std::pair{13, 1}, {3, 4}, {5, 4}, {7, 4}}) {
    FiniteField f = make(p, s, 4);
    CHECK(f.pow(f.generator(), f.q() - 1) == 1);
    for (std::uint64_t ell : f.order_prime_factors())
      CHECK(f.pow(f.generator(), (f.q() - 1) / ell) != 1);
  }
}

TEST_CASE("class table is a homomorphism on random pairs") {
  std::mt19937 rng(12345);
  for (auto [p, s, m] : {std::tuple{13, 1, 4}, {3, 4, 4}, {5, 4, 4}}) {
    FiniteField f = make(p, s, m);
    std::uniform_int_distribution<vertex_t> dist(1, static_cast<vertex_t>(f.q() - 1));
    for (int k = 0; k < 10000; ++k) {
      vertex_t x = dist(rng), y = dist(rng);
      CHECK(f.residue_class(f.mul(x, y)) ==
            (f.residue_class(x) + f.residue_class(y)) % m);
    }
  }
}

TEST_CASE("descriptor JSON") {
  FiniteField f = make(3, 4, 4);
  nlohmann::json j = f.descriptor();
  CHECK(j["p"] == 3);
  CHECK(j["s"] == 4);
  CHECK(j["class_modulus"] == 4);
  CHECK(j["generator_index"] == 3);
  CHECK(j["modulus"].size() == 5);
}
