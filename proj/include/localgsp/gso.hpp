#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "localgsp/graph.hpp"

namespace localgsp {

enum class GsoKind { laplacian, adjacency, weighted_laplacian };

std::string_view to_string(GsoKind kind);
GsoKind parse_gso_kind(std::string_view text);

// Laplacian flavour matching the graph: weighted when edge weights are present.
inline GsoKind laplacian_kind_for(const Graph& g) {
  return g.is_weighted() ? GsoKind::weighted_laplacian : GsoKind::laplacian;
}

// Graph shift operator stored as a symmetric CSR matrix. Every row holds the
// diagonal entry plus one entry per neighbor, columns ascending.
class ShiftOperator {
 public:
  GsoKind kind() const { return kind_; }
  std::size_t size() const { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
  std::size_t nonzeros() const { return values_.size(); }

  // y = S x. x and y must not alias.
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;

  double at(NodeId row, NodeId col) const;
  // Row-major dense copy.
  std::vector<double> dense() const;

  std::span<const std::size_t> row_ptr() const { return row_ptr_; }
  std::span<const NodeId> columns() const { return columns_; }
  std::span<const double> values() const { return values_; }

  friend ShiftOperator build_gso(const Graph& g, GsoKind kind);

 private:
  GsoKind kind_ = GsoKind::laplacian;
  std::vector<std::size_t> row_ptr_;
  std::vector<NodeId> columns_;
  std::vector<double> values_;
};

// laplacian: D - A. adjacency: A (zero diagonal stored explicitly).
// weighted_laplacian: weighted degree on the diagonal, -w(u,v) off it; throws
// Error{missing_weights} for unweighted graphs.
ShiftOperator build_gso(const Graph& g, GsoKind kind);

// sum_k taps[k] S^k x via len(taps)-1 sparse products; S^0 is the identity.
std::vector<double> apply_polynomial(const ShiftOperator& s, std::span<const double> taps,
                                     std::span<const double> x);

// S^k x.
std::vector<double> apply_power(const ShiftOperator& s, std::size_t k,
                                std::span<const double> x);

}  // namespace localgsp
