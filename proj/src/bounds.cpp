#include "caygraph/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace caygraph {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * b % m;
    b = (unsigned __int128)b * b % m;
    e >>= 1;
  }
  return r;
}

// binom(a, b) mod p for digit values a, b < p, via the multiplicative
// formula with Fermat inverses.
std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    num = (unsigned __int128)num * ((a - b + i) % p) % p;
    den = (unsigned __int128)den * (i % p) % p;
  }
  if (den == 0) throw std::logic_error("digit binomial denominator vanished");
  return (unsigned __int128)num * pow_mod(den, p - 2, p) % p;
}

// Largest r with p^r | exact power structure: returns exponent e and base
// check for q = p^e, or 0 if q is not a power of p.
int power_exponent(std::uint64_t q, std::uint64_t p) {
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return q == 1 ? e : 0;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint64_t> base_p_digits(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("base must be at least 2");
  std::vector<std::uint64_t> digits;
  while (n > 0) {
    digits.push_back(n % p);
    n /= p;
  }
  return digits;
}

int lucas_binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus must be prime");
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    result = (unsigned __int128)result * small_binom_mod(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<int>(result);
}

bool t5_criterion(std::uint64_t q, std::uint64_t d, std::uint64_t p,
                  std::uint64_t clique_number_hypothesis, std::uint64_t n) {
  if (d < 2 || (q - 1) % (2 * d) != 0)
    throw std::invalid_argument("requires d > 1 and q = 1 (mod 2d)");
  if (n < 2 || n > clique_number_hypothesis)
    throw std::invalid_argument("requires 2 <= n <= N");
  const std::uint64_t m = (q - 1) / d;
  return lucas_binom_mod_p(n - 1 + m, m, p) != 0;
}

SqrtRefutation refute_sqrt_quadruple(std::uint64_t q) {
  SqrtRefutation out;
  // factor q = p^{4r}
  std::uint64_t p = 0;
  for (std::uint64_t c = 3; c * c <= q; c += 2)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) return out;  // q prime, not a quartic
  const int e = power_exponent(q, p);
  if (e == 0 || e % 4 != 0) return out;
  if (p % 4 != 3) return out;  // the digit pattern needs p = 3 (mod 4)
  const int r = e / 4;

  out.applicable = true;
  std::uint64_t p2r1 = 1;  // p^{2r-1}
  for (int k = 0; k < 2 * r - 1; ++k) p2r1 *= p;
  const std::uint64_t sqrt_q = p2r1 * p;  // p^{2r}
  out.witness_n = (3 * p - 1) / 4 * p2r1 + 1;
  out.criterion_fired = t5_criterion(q, 4, p, sqrt_q, out.witness_n);
  out.lhs = (sqrt_q - 1) * out.witness_n;
  out.rhs = (q - 1) / 4;
  out.contradiction = out.lhs > out.rhs;
  if (!out.criterion_fired || !out.contradiction)
    throw std::logic_error("refutation trace failed to reproduce");
  out.bound = sqrt_q - 1;
  return out;
}

AnalyticBound t7_bound(std::uint64_t q, std::uint64_t d, std::uint64_t p) {
  AnalyticBound out;
  if (d < 3 || (p - 1) % d != 0) return out;
  const int e = power_exponent(q, p);
  if (e == 0 || e % 2 != 0) return out;
  out.applicable = true;
  const double dd = static_cast<double>(d);
  out.value = std::sqrt(static_cast<double>(q) / dd) *
                  (1.0 + 1.0 / (2.0 * std::sqrt(dd)) + 1.0 / (8.0 * dd)) +
              1.0;
  // Strict inequality: floor(value) unless value sits on an integer, in
  // which case step down one more.
  const double fl = std::floor(out.value);
  const bool on_integer = (out.value - fl) <= 1e-9 * out.value;
  out.integer_bound = static_cast<std::uint64_t>(fl) - (on_integer ? 1 : 0);
  return out;
}

BoundReport best_upper_bound(std::uint64_t q, std::uint64_t d, std::uint64_t p) {
  if (d < 2 || (q - 1) % (2 * d) != 0)
    throw std::invalid_argument("invalid gp parameters");
  BoundReport report;
  report.q = q;
  report.d = d;
  report.p = p;

  report.entries.push_back(
      {isqrt_u64(q), "trivial", true, "floor(sqrt(q))"});

  AnalyticBound t7 = t7_bound(q, d, p);
  BoundEntry e7{t7.integer_bound, "t7", t7.applicable, ""};
  if (t7.applicable)
    e7.note = "value " + std::to_string(t7.value);
  report.entries.push_back(e7);

  BoundEntry e36{0, "lemma36", false, ""};
  if (d == 4) {
    SqrtRefutation ref = refute_sqrt_quadruple(q);
    if (ref.applicable) {
      e36 = {ref.bound, "lemma36", true,
             "n=" + std::to_string(ref.witness_n) + ", " +
                 std::to_string(ref.lhs) + " > " + std::to_string(ref.rhs)};
    }
  }
  report.entries.push_back(e36);

  report.best = 0;
  for (const BoundEntry& e : report.entries) {
    if (!e.applicable) continue;
    if (report.best_source.empty() || e.value < report.best) {
      report.best = e.value;
      report.best_source = e.source;
    }
  }
  return report;
}

int dim_bound(int s, int t) {
  if (t < 1 || s % t != 0)
    throw std::invalid_argument("subfield degree must divide s");
  return s / (2 * t);
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json entries_json = nlohmann::json::array();
  for (const BoundEntry& e : entries)
    entries_json.push_back({{"value", e.value},
                            {"source", e.source},
                            {"applicable", e.applicable},
                            {"note", e.note}});
  return nlohmann::json{{"q", q},         {"d", d},
                        {"p", p},         {"bounds", entries_json},
                        {"best", best},   {"best_source", best_source}};
}

}  // namespace caygraph
