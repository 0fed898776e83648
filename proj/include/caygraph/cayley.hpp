#ifndef CAYGRAPH_CAYLEY_HPP
#define CAYGRAPH_CAYLEY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "caygraph/gf.hpp"

namespace caygraph {

/// Packed symmetric bit adjacency matrix, row-major.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1;
  }
  void set(std::size_t i, std::size_t j) {
    row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
  }

 private:
  std::size_t n_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Family { gp, peisert, custom };

std::string family_name(Family f);

/// Symmetric subset S of F_q \ {0}, given by allowed discrete-log residue
/// classes mod m. Membership is O(1) via the field's class table.
struct ConnectionSet {
  FieldPtr field;
  int m = 0;
  std::vector<bool> allowed;  // indexed by class in [0, m)
  Family family = Family::custom;
  int d = 0;  // gp family only
  bool mult_closed = false;
  bool contains_minus_one = false;

  bool contains(vertex_t x) const {
    return allowed[field->residue_class(x) % m];
  }
  std::uint64_t size() const;
};

ConnectionSet gp_connection_set(const FieldPtr& field, int d);
ConnectionSet peisert_connection_set(const FieldPtr& field);
ConnectionSet custom_connection_set(const FieldPtr& field, int m,
                                    const std::vector<int>& allowed_classes);

/// Cay(F_q^+; S). Adjacency is computed from the class table; a packed bit
/// matrix is materialized only on request and only under the cap.
class CayleyGraph {
 public:
  static constexpr std::uint64_t kDefaultMaterializeCap = std::uint64_t{1} << 16;

  explicit CayleyGraph(ConnectionSet s) : s_(std::move(s)) {}

  const FiniteField& field() const { return *s_.field; }
  FieldPtr field_ptr() const { return s_.field; }
  const ConnectionSet& connection_set() const { return s_; }
  std::uint64_t vertex_count() const { return s_.field->q(); }
  std::uint64_t degree() const { return s_.size(); }

  bool adjacent(vertex_t u, vertex_t v) const {
    if (u == v) throw std::invalid_argument("adjacency of a vertex with itself");
    return s_.contains(s_.field->sub(u, v));
  }

  /// True iff x -> multiplier*x maps every edge to a non-edge and back.
  bool self_complement_witness(vertex_t multiplier) const;

  const BitMatrix& materialize(std::uint64_t cap = kDefaultMaterializeCap) const;

  void export_dimacs(std::ostream& out,
                     std::uint64_t cap = kDefaultMaterializeCap) const;
  void export_edge_list(std::ostream& out,
                        std::uint64_t cap = kDefaultMaterializeCap) const;
  nlohmann::json descriptor() const;

 private:
  ConnectionSet s_;
  mutable BitMatrix adj_;  // lazily filled
};

}  // namespace caygraph

#endif  // CAYGRAPH_CAYLEY_HPP
