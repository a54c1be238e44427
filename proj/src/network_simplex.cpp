#include "localgsp/network_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "localgsp/error.hpp"

namespace localgsp {
namespace {

// Nodes: rows 0..m-1, columns m..m+k-1, artificial root m+k.
// Arcs: real arc i*k + j from row i to column j, then one artificial arc per
// row (row -> root) and per column (root -> column).
class NetworkSimplex {
 public:
  NetworkSimplex(std::span<const double> supply, std::span<const double> demand,
                 std::span<const double> cost)
      : m_(supply.size()), k_(demand.size()), nodes_(m_ + k_ + 1), root_(m_ + k_) {
    const std::size_t real = m_ * k_;
    arcs_ = real + m_ + k_;
    src_.resize(arcs_);
    dst_.resize(arcs_);
    cost_.resize(arcs_);
    flow_.assign(arcs_, 0.0);
    in_tree_.assign(arcs_, 0);
    double max_cost = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const std::size_t e = i * k_ + j;
        src_[e] = i;
        dst_[e] = m_ + j;
        cost_[e] = cost[e];
        max_cost = std::max(max_cost, cost[e]);
      }
    }
    const double art = (max_cost + 1.0) * static_cast<double>(nodes_);
    epsilon_ = 1e-14 * art;
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t e = real + i;
      src_[e] = i;
      dst_[e] = root_;
      cost_[e] = art;
      flow_[e] = supply[i];
      in_tree_[e] = 1;
      tree_.push_back(e);
    }
    for (std::size_t j = 0; j < k_; ++j) {
      const std::size_t e = real + m_ + j;
      src_[e] = root_;
      dst_[e] = m_ + j;
      cost_[e] = art;
      flow_[e] = demand[j];
      in_tree_[e] = 1;
      tree_.push_back(e);
    }
    slot_.assign(arcs_, SIZE_MAX);
    for (std::size_t s = 0; s < tree_.size(); ++s) slot_[tree_[s]] = s;
    parent_.resize(nodes_);
    parent_arc_.resize(nodes_);
    depth_.resize(nodes_);
    pi_.resize(nodes_);
    block_ = std::max<std::size_t>(10, static_cast<std::size_t>(std::sqrt(double(arcs_))));
  }

  TransportSolution solve() {
    rebuild_tree();
    TransportSolution out;
    const std::size_t max_pivots = 1000 * arcs_ + 100000;
    while (true) {
      const std::size_t entering = find_entering();
      if (entering == SIZE_MAX) break;
      pivot(entering);
      if (++out.pivots > max_pivots) throw Error(Errc::infeasible, "network simplex did not terminate");
    }
    double residual = 0.0;
    for (std::size_t e = m_ * k_; e < arcs_; ++e) residual += flow_[e];
    if (residual > 1e-9) {
      throw Error(Errc::infeasible, "supplies and demands do not balance (residual " +
                                        std::to_string(residual) + ")");
    }
    out.flows.assign(flow_.begin(), flow_.begin() + static_cast<std::ptrdiff_t>(m_ * k_));
    for (std::size_t e = 0; e < m_ * k_; ++e) out.cost += out.flows[e] * cost_[e];
    return out;
  }

 private:
  void rebuild_tree() {
    adjacency_.assign(nodes_, {});
    for (std::size_t e : tree_) {
      adjacency_[src_[e]].push_back(e);
      adjacency_[dst_[e]].push_back(e);
    }
    std::vector<std::size_t> queue{root_};
    parent_[root_] = SIZE_MAX;
    parent_arc_[root_] = SIZE_MAX;
    depth_[root_] = 0;
    pi_[root_] = 0.0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t p = queue[head];
      for (std::size_t e : adjacency_[p]) {
        if (e == parent_arc_[p]) continue;
        const std::size_t w = src_[e] == p ? dst_[e] : src_[e];
        parent_[w] = p;
        parent_arc_[w] = e;
        depth_[w] = depth_[p] + 1;
        pi_[w] = src_[e] == p ? pi_[p] + cost_[e] : pi_[p] - cost_[e];
        queue.push_back(w);
      }
    }
  }

  double reduced_cost(std::size_t e) const { return cost_[e] + pi_[src_[e]] - pi_[dst_[e]]; }

  std::size_t find_entering() {
    std::size_t best = SIZE_MAX;
    double best_rc = -epsilon_;
    std::size_t seen = 0;
    for (std::size_t s = 0; s < arcs_; ++s) {
      const std::size_t e = (next_ + s) % arcs_;
      if (!in_tree_[e]) {
        const double rc = reduced_cost(e);
        if (rc < best_rc) {
          best_rc = rc;
          best = e;
        }
      }
      if (++seen == block_) {
        if (best != SIZE_MAX) {
          next_ = (e + 1) % arcs_;
          return best;
        }
        seen = 0;
      }
    }
    return best;
  }

  void pivot(std::size_t entering) {
    const std::size_t u = src_[entering];
    const std::size_t v = dst_[entering];
    std::size_t a = u;
    std::size_t b = v;
    while (a != b) {
      if (depth_[a] > depth_[b]) {
        a = parent_[a];
      } else if (depth_[b] > depth_[a]) {
        b = parent_[b];
      } else {
        a = parent_[a];
        b = parent_[b];
      }
    }
    const std::size_t join = a;

    double delta = std::numeric_limits<double>::infinity();
    std::size_t leaving = SIZE_MAX;
    for (std::size_t w = u; w != join; w = parent_[w]) {
      const std::size_t e = parent_arc_[w];
      if (src_[e] == w && flow_[e] < delta) {
        delta = flow_[e];
        leaving = e;
      }
    }
    for (std::size_t w = v; w != join; w = parent_[w]) {
      const std::size_t e = parent_arc_[w];
      if (dst_[e] == w && flow_[e] <= delta) {
        delta = flow_[e];
        leaving = e;
      }
    }
    if (leaving == SIZE_MAX) throw Error(Errc::infeasible, "transport problem is unbounded");

    if (delta > 0.0) {
      flow_[entering] += delta;
      for (std::size_t w = u; w != join; w = parent_[w]) {
        const std::size_t e = parent_arc_[w];
        flow_[e] += src_[e] == w ? -delta : delta;
      }
      for (std::size_t w = v; w != join; w = parent_[w]) {
        const std::size_t e = parent_arc_[w];
        flow_[e] += src_[e] == w ? delta : -delta;
      }
    }
    flow_[leaving] = 0.0;

    const std::size_t s = slot_[leaving];
    tree_[s] = entering;
    slot_[entering] = s;
    slot_[leaving] = SIZE_MAX;
    in_tree_[leaving] = 0;
    in_tree_[entering] = 1;
    rebuild_tree();
  }

  std::size_t m_, k_, nodes_, root_, arcs_ = 0;
  std::vector<std::size_t> src_, dst_;
  std::vector<double> cost_, flow_;
  std::vector<char> in_tree_;
  std::vector<std::size_t> tree_, slot_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> parent_, parent_arc_, depth_;
  std::vector<double> pi_;
  double epsilon_ = 0.0;
  std::size_t block_ = 10;
  std::size_t next_ = 0;
};

}  // namespace

TransportSolution solve_transport(std::span<const double> supply, std::span<const double> demand,
                                  std::span<const double> cost) {
  if (supply.empty() || demand.empty()) {
    throw Error(Errc::empty_distribution, "transport needs at least one row and one column");
  }
  if (cost.size() != supply.size() * demand.size()) {
    throw Error(Errc::dimension_mismatch, "cost matrix does not match rows x columns");
  }
  auto check = [](std::span<const double> values, const char* what) {
    for (double v : values) {
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(Errc::invalid_parameter, std::string(what) + " must be finite and nonnegative");
      }
    }
  };
  check(supply, "supplies");
  check(demand, "demands");
  check(cost, "costs");
  NetworkSimplex solver(supply, demand, cost);
  return solver.solve();
}

}  // namespace localgsp
