#include "caygraph/gf.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace caygraph {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p, low-degree-first coefficients.
using Poly = std::vector<int>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
  const int s = static_cast<int>(modulus.size()) - 1;
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] += static_cast<std::int64_t>(a[i]) * b[j];
  }
  for (auto& c : prod) c %= p;
  // reduce by the monic modulus
  for (int k = static_cast<int>(prod.size()) - 1; k >= s; --k) {
    std::int64_t c = prod[k] % p;
    if (c == 0) continue;
    for (int j = 0; j < s; ++j) prod[k - s + j] = (prod[k - s + j] - c * modulus[j]) % p;
    prod[k] = 0;
  }
  Poly out(s, 0);
  for (int k = 0; k < s && k < static_cast<int>(prod.size()); ++k)
    out[k] = static_cast<int>(((prod[k] % p) + p) % p);
  return out;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& modulus, int p) {
  const int s = static_cast<int>(modulus.size()) - 1;
  Poly result(s, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, modulus, p);
    base = poly_mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

bool poly_is_one(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](int c) { return c == 0; });
}

// True iff the residue class of x has multiplicative order exactly q-1 in
// F_p[x]/(f). That forces the quotient to be a field, so this single test
// covers both irreducibility and primitivity.
bool indeterminate_is_primitive(const Poly& modulus, int p, std::uint64_t q,
                                const std::vector<std::uint64_t>& order_primes) {
  if (modulus[0] == 0) return false;  // x would be a zero divisor
  const int s = static_cast<int>(modulus.size()) - 1;
  Poly x(s, 0);
  if (s == 1)
    x[0] = (p - modulus[0]) % p;
  else
    x[1] = 1;
  if (!poly_is_one(poly_pow_mod(x, q - 1, modulus, p))) return false;
  for (std::uint64_t ell : order_primes)
    if (poly_is_one(poly_pow_mod(x, (q - 1) / ell, modulus, p))) return false;
  return true;
}

}  // namespace

FiniteField FiniteField::build(int p, int s, int class_modulus,
                               std::uint64_t size_cap) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("p must be an odd prime");
  if (s < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (class_modulus < 1 || class_modulus > 255)
    throw std::invalid_argument("class modulus must be in [1, 255]");

  std::uint64_t q = 1;
  for (int k = 0; k < s; ++k) {
    q *= static_cast<std::uint64_t>(p);
    if (q > size_cap) throw std::invalid_argument("field size exceeds cap");
  }

  FiniteField f;
  f.p_ = p;
  f.s_ = s;
  f.q_ = q;
  f.m_ = class_modulus;
  f.order_primes_ = distinct_prime_factors(q - 1);

  if (s == 1) {
    // Smallest primitive root g, modulus x - g.
    for (int g = 2; g < p; ++g) {
      Poly mod = {(p - g) % p, 1};
      if (indeterminate_is_primitive(mod, p, q, f.order_primes_)) {
        f.modulus_ = mod;
        f.generator_ = static_cast<vertex_t>(g);
        break;
      }
    }
  } else {
    // Lexicographically smallest monic primitive polynomial; the counter n
    // enumerates coefficient vectors (c0, ..., c_{s-1}) in lex order with
    // c0 most significant.
    for (std::uint64_t n = 1; n < q; ++n) {
      Poly mod(s + 1, 0);
      mod[s] = 1;
      std::uint64_t v = n;
      for (int k = s - 1; k >= 0; --k) {
        mod[k] = static_cast<int>(v % p);
        v /= p;
      }
      if (indeterminate_is_primitive(mod, p, q, f.order_primes_)) {
        f.modulus_ = mod;
        f.generator_ = static_cast<vertex_t>(p);  // encode of x = (0,1,0,...)
        break;
      }
    }
  }
  if (f.modulus_.empty())
    throw std::logic_error("no primitive polynomial found");

  // One multiplicative pass g^0, g^1, ..., g^{q-2} fills the class table.
  f.class_table_.assign(q, 0);
  vertex_t cur = 1;
  for (std::uint64_t j = 0; j + 1 < q; ++j) {
    f.class_table_[cur] = static_cast<std::uint8_t>(j % class_modulus);
    cur = f.mul(cur, f.generator_);
  }
  if (cur != 1) throw std::logic_error("generator order check failed");
  return f;
}

vertex_t FiniteField::mul(vertex_t a, vertex_t b) const {
  check_index(a);
  check_index(b);
  if (s_ == 1)
    return static_cast<vertex_t>((std::uint64_t{a} * b) % static_cast<std::uint64_t>(p_));
  std::int64_t prod[48] = {0};
  int da_digits[24], db_digits[24];
  for (int k = 0; k < s_; ++k) {
    da_digits[k] = static_cast<int>(a % p_);
    db_digits[k] = static_cast<int>(b % p_);
    a /= p_;
    b /= p_;
  }
  for (int i = 0; i < s_; ++i) {
    if (da_digits[i] == 0) continue;
    for (int j = 0; j < s_; ++j)
      prod[i + j] += static_cast<std::int64_t>(da_digits[i]) * db_digits[j];
  }
  for (int k = 2 * s_ - 2; k >= s_; --k) {
    std::int64_t c = prod[k] % p_;
    if (c == 0) continue;
    for (int j = 0; j < s_; ++j) prod[k - s_ + j] -= c * modulus_[j];
  }
  vertex_t out = 0, scale = 1;
  for (int k = 0; k < s_; ++k) {
    int c = static_cast<int>(((prod[k] % p_) + p_) % p_);
    out += static_cast<vertex_t>(c) * scale;
    scale *= static_cast<vertex_t>(p_);
  }
  return out;
}

vertex_t FiniteField::pow(vertex_t a, std::uint64_t e) const {
  check_index(a);
  vertex_t result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

vertex_t FiniteField::inv(vertex_t a) const {
  if (a == 0) throw std::domain_error("inversion of the zero element");
  return pow(a, q_ - 2);
}

vertex_t FiniteField::encode(const FieldElement& x) const {
  if (static_cast<int>(x.coeffs.size()) != s_)
    throw std::invalid_argument("coefficient vector has wrong length");
  vertex_t out = 0, scale = 1;
  for (int k = 0; k < s_; ++k) {
    if (x.coeffs[k] < 0 || x.coeffs[k] >= p_)
      throw std::invalid_argument("coefficient out of [0, p)");
    out += static_cast<vertex_t>(x.coeffs[k]) * scale;
    scale *= static_cast<vertex_t>(p_);
  }
  return out;
}

FieldElement FiniteField::decode(vertex_t i) const {
  check_index(i);
  FieldElement x;
  x.coeffs.resize(s_);
  for (int k = 0; k < s_; ++k) {
    x.coeffs[k] = static_cast<int>(i % p_);
    i /= p_;
  }
  return x;
}

std::vector<vertex_t> FiniteField::subfield_elements(int t) const {
  if (t < 1 || s_ % t != 0)
    throw std::invalid_argument("subfield degree must divide s");
  std::uint64_t sub_order = 1;
  for (int k = 0; k < t; ++k) sub_order *= static_cast<std::uint64_t>(p_);
  std::vector<vertex_t> out;
  out.reserve(sub_order);
  out.push_back(0);
  const std::uint64_t step = (q_ - 1) / (sub_order - 1);
  vertex_t h = pow(generator_, step);
  vertex_t cur = 1;
  for (std::uint64_t k = 0; k + 1 < sub_order; ++k) {
    out.push_back(cur);
    cur = mul(cur, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json FiniteField::descriptor() const {
  return nlohmann::json{{"p", p_},
                        {"s", s_},
                        {"modulus", modulus_},
                        {"generator_index", generator_},
                        {"class_modulus", m_}};
}

}  // namespace caygraph
