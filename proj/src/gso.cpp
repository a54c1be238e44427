#include "localgsp/gso.hpp"

#include <algorithm>

#include "localgsp/error.hpp"

namespace localgsp {

std::string_view to_string(GsoKind kind) {
  switch (kind) {
    case GsoKind::laplacian: return "laplacian";
    case GsoKind::adjacency: return "adjacency";
    case GsoKind::weighted_laplacian: return "weighted-laplacian";
  }
  return "laplacian";
}

GsoKind parse_gso_kind(std::string_view text) {
  if (text == "laplacian") return GsoKind::laplacian;
  if (text == "adjacency") return GsoKind::adjacency;
  if (text == "weighted-laplacian" || text == "weighted_laplacian") {
    return GsoKind::weighted_laplacian;
  }
  throw Error(Errc::invalid_parameter, "unknown gso kind '" + std::string(text) + "'");
}

ShiftOperator build_gso(const Graph& g, GsoKind kind) {
  if (kind == GsoKind::weighted_laplacian && !g.is_weighted()) {
    throw Error(Errc::missing_weights, "weighted-laplacian requires edge weights");
  }
  const std::size_t n = g.num_nodes();
  ShiftOperator s;
  s.kind_ = kind;
  s.row_ptr_.reserve(n + 1);
  s.row_ptr_.push_back(0);
  s.columns_.reserve(n + 2 * g.num_edges());
  s.values_.reserve(n + 2 * g.num_edges());
  for (NodeId v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    auto edges = g.incident_edges(v);
    double diagonal = 0.0;
    switch (kind) {
      case GsoKind::laplacian: diagonal = static_cast<double>(nbrs.size()); break;
      case GsoKind::adjacency: diagonal = 0.0; break;
      case GsoKind::weighted_laplacian: diagonal = g.weighted_degree(v); break;
    }
    bool placed_diagonal = false;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!placed_diagonal && nbrs[i] > v) {
        s.columns_.push_back(v);
        s.values_.push_back(diagonal);
        placed_diagonal = true;
      }
      double off = 0.0;
      switch (kind) {
        case GsoKind::laplacian: off = -1.0; break;
        case GsoKind::adjacency: off = 1.0; break;
        case GsoKind::weighted_laplacian: off = -g.weight(edges[i]); break;
      }
      s.columns_.push_back(nbrs[i]);
      s.values_.push_back(off);
    }
    if (!placed_diagonal) {
      s.columns_.push_back(v);
      s.values_.push_back(diagonal);
    }
    s.row_ptr_.push_back(s.columns_.size());
  }
  return s;
}

void ShiftOperator::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = size();
  if (x.size() != n || y.size() != n) {
    throw Error(Errc::dimension_mismatch, "shift operator applied to wrong-length vector");
  }
  for (std::size_t row = 0; row < n; ++row) {
    double acc = 0.0;
    for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k) {
      acc += values_[k] * x[columns_[k]];
    }
    y[row] = acc;
  }
}

std::vector<double> ShiftOperator::apply(std::span<const double> x) const {
  std::vector<double> y(size());
  apply(x, y);
  return y;
}

double ShiftOperator::at(NodeId row, NodeId col) const {
  auto begin = columns_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  auto end = columns_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  auto it = std::lower_bound(begin, end, col);
  if (it == end || *it != col) return 0.0;
  return values_[static_cast<std::size_t>(it - columns_.begin())];
}

std::vector<double> ShiftOperator::dense() const {
  const std::size_t n = size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k) {
      out[row * n + columns_[k]] = values_[k];
    }
  }
  return out;
}

std::vector<double> apply_polynomial(const ShiftOperator& s, std::span<const double> taps,
                                     std::span<const double> x) {
  if (x.size() != s.size()) throw Error(Errc::dimension_mismatch, "signal length");
  std::vector<double> y(x.size(), 0.0);
  if (taps.empty()) return y;
  std::vector<double> power(x.begin(), x.end());
  std::vector<double> next(x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = taps[0] * power[i];
  for (std::size_t k = 1; k < taps.size(); ++k) {
    s.apply(power, next);
    power.swap(next);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += taps[k] * power[i];
  }
  return y;
}

std::vector<double> apply_power(const ShiftOperator& s, std::size_t k,
                                std::span<const double> x) {
  if (x.size() != s.size()) throw Error(Errc::dimension_mismatch, "signal length");
  std::vector<double> power(x.begin(), x.end());
  std::vector<double> next(x.size());
  for (std::size_t step = 0; step < k; ++step) {
    s.apply(power, next);
    power.swap(next);
  }
  return power;
}

}  // namespace localgsp
