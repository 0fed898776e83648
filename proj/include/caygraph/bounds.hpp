#ifndef CAYGRAPH_BOUNDS_HPP
#define CAYGRAPH_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace caygraph {

/// binom(n, k) mod p by Lucas' theorem: the digit-wise product of binomials
/// of base-p digits.
int lucas_binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// Base-p digits of n, little-endian; empty for n = 0.
std::vector<std::uint64_t> base_p_digits(std::uint64_t n, std::uint64_t p);

/// Divisibility criterion behind the clique-number refutations: true iff
/// binom(n-1 + (q-1)/d, (q-1)/d) is nonzero mod p, in which case the caller
/// may conclude (N-1)n <= (q-1)/d for N = omega(GP(q,d)) and 2 <= n <= N.
bool t5_criterion(std::uint64_t q, std::uint64_t d, std::uint64_t p,
                  std::uint64_t clique_number_hypothesis, std::uint64_t n);

/// Trace of the sqrt(q) refutation for quadruple Paley graphs of quartic
/// order with p = 3 (mod 4).
struct SqrtRefutation {
  bool applicable = false;
  std::uint64_t bound = 0;     // sqrt(q) - 1 when applicable
  std::uint64_t witness_n = 0; // n with n-1 = ((3p-1)/4) p^{2r-1}
  std::uint64_t lhs = 0;       // (N-1)n with N = sqrt(q)
  std::uint64_t rhs = 0;       // (q-1)/4
  bool criterion_fired = false;
  bool contradiction = false;  // lhs > rhs
};
SqrtRefutation refute_sqrt_quadruple(std::uint64_t q);

/// Analytic bound sqrt(q/d)(1 + 1/(2 sqrt d) + 1/(8d)) + 1 (strict), when
/// d >= 3, d | (p-1) and q is an even power of p.
struct AnalyticBound {
  bool applicable = false;
  double value = 0.0;
  std::uint64_t integer_bound = 0;
};
AnalyticBound t7_bound(std::uint64_t q, std::uint64_t d, std::uint64_t p);

struct BoundEntry {
  std::uint64_t value = 0;
  std::string source;  // trivial | t5 | t7 | lemma36
  bool applicable = true;
  std::string note;  // witness data, human readable
};

struct BoundReport {
  std::uint64_t q = 0, d = 0, p = 0;
  std::vector<BoundEntry> entries;
  std::uint64_t best = 0;
  std::string best_source;
  nlohmann::json to_json() const;
};
BoundReport best_upper_bound(std::uint64_t q, std::uint64_t d, std::uint64_t p);

/// floor(s / 2t), the dimension bound for maximal subspace cliques of gp
/// graphs. Requires t | s.
int dim_bound(int s, int t);

}  // namespace caygraph

#endif  // CAYGRAPH_BOUNDS_HPP
