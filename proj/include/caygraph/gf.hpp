#ifndef CAYGRAPH_GF_HPP
#define CAYGRAPH_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace caygraph {

using vertex_t = std::uint32_t;

/// Element of GF(p^s) in the power basis of the modulus polynomial.
/// coeffs[k] is the coefficient of x^k, each in [0, p).
struct FieldElement {
  std::vector<int> coeffs;

  bool is_zero() const {
    for (int c : coeffs)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const FieldElement&) const = default;
};

/// GF(p^s) with a deterministic primitive element g and a residue-class
/// table mapping each nonzero element to (log_g of it) mod class_modulus.
///
/// Construction is deterministic: for s = 1 the generator is the smallest
/// primitive root of p (modulus x - g); for s >= 2 the modulus is the
/// lexicographically smallest monic primitive polynomial, coefficients
/// compared low-degree-first, and g is the residue class of x.
///
/// Immutable after construction; safe to share among concurrent readers.
class FiniteField {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 24;

  static FiniteField build(int p, int s, int class_modulus,
                           std::uint64_t size_cap = kDefaultSizeCap);

  int p() const { return p_; }
  int s() const { return s_; }
  std::uint64_t q() const { return q_; }
  int class_modulus() const { return m_; }
  /// Monic modulus polynomial, coefficient vector [c0 ... c_{s-1}, 1].
  const std::vector<int>& modulus() const { return modulus_; }
  /// Vertex index of the primitive element.
  vertex_t generator() const { return generator_; }

  // Arithmetic on vertex indices (base-p positional encoding of coeffs).
  vertex_t add(vertex_t a, vertex_t b) const {
    check_index(a);
    check_index(b);
    vertex_t out = 0, scale = 1;
    for (int k = 0; k < s_; ++k) {
      int da = static_cast<int>(a % p_), db = static_cast<int>(b % p_);
      int d = da + db;
      if (d >= p_) d -= p_;
      out += static_cast<vertex_t>(d) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }
  vertex_t sub(vertex_t a, vertex_t b) const {
    check_index(a);
    check_index(b);
    vertex_t out = 0, scale = 1;
    for (int k = 0; k < s_; ++k) {
      int d = static_cast<int>(a % p_) - static_cast<int>(b % p_);
      if (d < 0) d += p_;
      out += static_cast<vertex_t>(d) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }
  vertex_t neg(vertex_t a) const { return sub(0, a); }
  vertex_t mul(vertex_t a, vertex_t b) const;
  vertex_t inv(vertex_t a) const;
  vertex_t pow(vertex_t a, std::uint64_t e) const;

  vertex_t encode(const FieldElement& x) const;
  FieldElement decode(vertex_t i) const;

  /// j mod class_modulus where x = g^j. Input x = 0 throws.
  int residue_class(vertex_t x) const {
    if (x == 0) throw std::domain_error("residue_class of the zero element");
    check_index(x);
    return class_table_[x];
  }

  /// The p^t elements of the subfield F_{p^t}, sorted by vertex index.
  /// Requires t | s.
  std::vector<vertex_t> subfield_elements(int t) const;

  /// Prime factorization of q-1 (distinct primes, ascending).
  const std::vector<std::uint64_t>& order_prime_factors() const {
    return order_primes_;
  }

  nlohmann::json descriptor() const;

 private:
  FiniteField() = default;

  void check_index(vertex_t i) const {
    if (i >= q_) throw std::out_of_range("vertex index out of range");
  }

  int p_ = 0;
  int s_ = 0;
  std::uint64_t q_ = 0;
  int m_ = 0;
  std::vector<int> modulus_;
  vertex_t generator_ = 0;
  std::vector<std::uint8_t> class_table_;  // size q; entry 0 unused
  std::vector<std::uint64_t> order_primes_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace caygraph

#endif  // CAYGRAPH_GF_HPP
