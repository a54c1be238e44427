#include "localgsp/canon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>

#include "localgsp/error.hpp"

namespace localgsp {
namespace {

// color[v] is the index of the first slot of v's cell in the cell ordering,
// so a singleton cell keeps its color for good and a discrete coloring is a
// permutation.
using Coloring = std::vector<std::uint32_t>;

std::uint64_t weight_bits(const Graph& g, EdgeId e) {
  return g.is_weighted() ? std::bit_cast<std::uint64_t>(g.weight(e)) : 0;
}

// Order-preserving key for a signal value; -0.0 and +0.0 coincide.
std::uint64_t value_key(double x) {
  const auto bits = std::bit_cast<std::uint64_t>(x + 0.0);
  return (bits >> 63) ? ~bits : bits | (1ULL << 63);
}

struct Partition {
  Coloring color;
  std::size_t cells = 0;
};

// Colors from per-vertex keys: sorted by key, equal keys share a cell.
template <class Less, class Equal>
Partition partition_by(std::size_t n, Less less, Equal equal) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), less);
  Partition p;
  p.color.assign(n, 0);
  std::uint32_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || !equal(order[i - 1], order[i])) {
      start = static_cast<std::uint32_t>(i);
      ++p.cells;
    }
    p.color[order[i]] = start;
  }
  return p;
}

Partition initial_partition(const Graph& g, NodeId root, std::span<const double> signal) {
  const std::size_t n = g.num_nodes();
  const std::vector<std::size_t> dist = bfs_distances(g, root);
  struct Key {
    std::size_t dist, degree;
    std::uint64_t value;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> keys(n);
  for (NodeId v = 0; v < n; ++v) {
    keys[v] = {dist[v], g.degree(v), signal.empty() ? 0 : value_key(signal[v])};
  }
  return partition_by(
      n, [&](NodeId a, NodeId b) { return keys[a] < keys[b]; },
      [&](NodeId a, NodeId b) { return keys[a] == keys[b]; });
}

// Refines to the coarsest equitable partition below p. Each round splits
// cells by the sorted multiset of (neighbor color, edge weight).
void refine(const Graph& g, Partition& p) {
  const std::size_t n = g.num_nodes();
  std::vector<std::uint64_t> sig;
  std::vector<std::size_t> off(n + 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> scratch;
  while (p.cells < n) {
    sig.clear();
    for (NodeId v = 0; v < n; ++v) {
      off[v] = sig.size();
      sig.push_back(p.color[v]);
      scratch.clear();
      auto nbrs = g.neighbors(v);
      auto ids = g.incident_edges(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        scratch.emplace_back(p.color[nbrs[k]], weight_bits(g, ids[k]));
      }
      std::sort(scratch.begin(), scratch.end());
      for (const auto& [c, w] : scratch) {
        sig.push_back(c);
        sig.push_back(w);
      }
    }
    off[n] = sig.size();
    auto view = [&](NodeId v) {
      return std::span<const std::uint64_t>(sig.data() + off[v], off[v + 1] - off[v]);
    };
    Partition next = partition_by(
        n,
        [&](NodeId a, NodeId b) {
          auto x = view(a);
          auto y = view(b);
          return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
        },
        [&](NodeId a, NodeId b) {
          auto x = view(a);
          auto y = view(b);
          return std::equal(x.begin(), x.end(), y.begin(), y.end());
        });
    const bool stable = next.cells == p.cells;
    p = std::move(next);
    if (stable) break;
  }
}

void individualize(Partition& p, NodeId v) {
  const std::uint32_t c = p.color[v];
  for (std::size_t u = 0; u < p.color.size(); ++u) {
    if (u != v && p.color[u] == c) p.color[u] = c + 1;
  }
  ++p.cells;
}

// Sorted canonical edge pairs packed as (a << 32 | b), then weight bits.
std::vector<std::uint64_t> leaf_key(const Graph& g, const Coloring& pos) {
  const std::size_t m = g.num_edges();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> items(m);
  for (EdgeId e = 0; e < m; ++e) {
    std::uint64_t a = pos[g.edges()[e].u];
    std::uint64_t b = pos[g.edges()[e].v];
    if (a > b) std::swap(a, b);
    items[e] = {(a << 32) | b, weight_bits(g, e)};
  }
  std::sort(items.begin(), items.end());
  std::vector<std::uint64_t> key(g.is_weighted() ? 2 * m : m);
  for (std::size_t i = 0; i < m; ++i) {
    key[i] = items[i].first;
    if (g.is_weighted()) key[m + i] = items[i].second;
  }
  return key;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Individualization-refinement search for the lexicographically least leaf.
// Automorphisms discovered by equal leaves prune sibling branches in the same
// orbit, and a leaf equivalent to the first leaf sends the search straight
// back to the level where it left the first path.
class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g) {}

  Coloring run(Partition start) {
    std::vector<NodeId> path;
    dfs(std::move(start), path);
    return best_pos_;
  }

 private:
  static constexpr std::size_t kNoJump = SIZE_MAX;

  std::size_t dfs(Partition p, std::vector<NodeId>& path) {
    refine(g_, p);
    const std::size_t n = g_.num_nodes();
    if (p.cells == n) return leaf(p.color, path);

    std::vector<std::uint32_t> size(n, 0);
    for (auto c : p.color) ++size[c];
    std::uint32_t target = 0;
    while (size[target] < 2) ++target;
    std::vector<NodeId> cell;
    for (NodeId v = 0; v < n; ++v) {
      if (p.color[v] == target) cell.push_back(v);
    }

    const std::size_t level = path.size();
    std::vector<NodeId> tried;
    for (NodeId w : cell) {
      if (!tried.empty() && in_tried_orbit(w, tried, path)) continue;
      Partition child = p;
      individualize(child, w);
      path.push_back(w);
      const std::size_t jump = dfs(std::move(child), path);
      path.pop_back();
      tried.push_back(w);
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  bool in_tried_orbit(NodeId w, const std::vector<NodeId>& tried,
                      const std::vector<NodeId>& path) const {
    UnionFind orbits(g_.num_nodes());
    for (const auto& gen : generators_) {
      bool fixes_path = true;
      for (NodeId v : path) {
        if (gen[v] != v) {
          fixes_path = false;
          break;
        }
      }
      if (!fixes_path) continue;
      for (std::size_t v = 0; v < gen.size(); ++v) orbits.unite(v, gen[v]);
    }
    const std::size_t root = orbits.find(w);
    for (NodeId t : tried) {
      if (orbits.find(t) == root) return true;
    }
    return false;
  }

  // Automorphism sending the vertex at each position of `from` to the vertex
  // at the same position of `to`.
  std::vector<NodeId> map_between(const Coloring& from, const Coloring& to) const {
    const std::size_t n = from.size();
    std::vector<NodeId> inv_to(n);
    for (NodeId v = 0; v < n; ++v) inv_to[to[v]] = v;
    std::vector<NodeId> gamma(n);
    for (NodeId v = 0; v < n; ++v) gamma[v] = inv_to[from[v]];
    return gamma;
  }

  std::size_t leaf(const Coloring& pos, const std::vector<NodeId>& path) {
    std::vector<std::uint64_t> key = leaf_key(g_, pos);
    if (!have_first_) {
      have_first_ = true;
      first_pos_ = best_pos_ = pos;
      first_key_ = best_key_ = std::move(key);
      first_path_ = path;
      return kNoJump;
    }
    if (key == first_key_) {
      generators_.push_back(map_between(first_pos_, pos));
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() &&
             path[common] == first_path_[common]) {
        ++common;
      }
      return common;
    }
    if (key == best_key_) {
      generators_.push_back(map_between(best_pos_, pos));
    } else if (key < best_key_) {
      best_pos_ = pos;
      best_key_ = std::move(key);
    }
    return kNoJump;
  }

  const Graph& g_;
  bool have_first_ = false;
  Coloring first_pos_, best_pos_;
  std::vector<std::uint64_t> first_key_, best_key_;
  std::vector<NodeId> first_path_;
  std::vector<std::vector<NodeId>> generators_;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::vector<std::uint8_t> encode(const Graph& g, const Coloring& pos, NodeId root) {
  const std::size_t m = g.num_edges();
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> items(m);
  for (EdgeId e = 0; e < m; ++e) {
    std::uint32_t a = pos[g.edges()[e].u];
    std::uint32_t b = pos[g.edges()[e].v];
    if (a > b) std::swap(a, b);
    items[e] = {a, b, weight_bits(g, e)};
  }
  std::sort(items.begin(), items.end());
  std::vector<std::uint8_t> out{kCodeMagic, kCodeVersion};
  put_u32(out, static_cast<std::uint32_t>(g.num_nodes()));
  put_u32(out, pos[root]);
  put_u32(out, static_cast<std::uint32_t>(m));
  for (const auto& [a, b, w] : items) {
    put_u32(out, a);
    put_u32(out, b);
  }
  out.push_back(g.is_weighted() ? 1 : 0);
  if (g.is_weighted()) {
    for (const auto& item : items) put_u64(out, std::get<2>(item));
  }
  return out;
}

Coloring canonical_positions(const Graph& g, NodeId root, std::span<const double> signal) {
  if (root >= g.num_nodes()) throw Error(Errc::node_out_of_range, "ball root");
  CanonSearch search(g);
  return search.run(initial_partition(g, root, signal));
}

}  // namespace

CanonicalCode canonical_form(const Graph& g, NodeId root) {
  Coloring pos = canonical_positions(g, root, {});
  CanonicalCode code;
  code.bytes = encode(g, pos, root);
  code.relabeling.assign(pos.begin(), pos.end());
  return code;
}

CanonicalCode canonical_form(const SignalizedBall& ball) {
  return canonical_form(ball.graph, ball.root);
}

CanonicalPoint canonical_point(const SignalizedBall& ball) {
  const Graph& g = ball.graph;
  const std::vector<double> x = g.signal_or_zero();
  // Canonical labeling of the signal-colored ball, then the structural
  // canonical labeling of that labeled copy. The composite is determined by
  // the signalized isomorphism class alone.
  Coloring colored = canonical_positions(g, ball.root, x);
  const std::vector<NodeId> lambda(colored.begin(), colored.end());
  const Graph colored_graph = relabel(g.without_signal(), lambda);
  const NodeId colored_root = lambda[ball.root];
  Coloring structural = canonical_positions(colored_graph, colored_root, {});

  CanonicalPoint point;
  point.code.bytes = encode(colored_graph, structural, colored_root);
  point.code.relabeling.resize(g.num_nodes());
  point.signal.assign(g.num_nodes(), 0.0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const NodeId p = structural[lambda[v]];
    point.code.relabeling[v] = p;
    point.signal[p] = x[v] + 0.0;
  }
  return point;
}

DecodedCode decode_code(std::span<const std::uint8_t> bytes) {
  std::size_t at = 0;
  auto need = [&](std::size_t k) {
    if (at + k > bytes.size()) throw Error(Errc::parse_error, "truncated canonical code");
  };
  auto u32 = [&]() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[at++]) << (8 * i);
    return v;
  };
  auto u64 = [&]() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[at++]) << (8 * i);
    return v;
  };
  need(2);
  if (bytes[0] != kCodeMagic) throw Error(Errc::parse_error, "bad canonical code magic");
  if (bytes[1] != kCodeVersion) {
    throw Error(Errc::parse_error, "unsupported canonical code version " +
                                       std::to_string(bytes[1]));
  }
  at = 2;
  const std::uint32_t n = u32();
  const std::uint32_t root = u32();
  const std::uint32_t m = u32();
  if (root >= n) throw Error(Errc::parse_error, "canonical code root out of range");
  std::vector<Edge> edges(m);
  for (auto& e : edges) {
    e.u = u32();
    e.v = u32();
  }
  need(1);
  const bool weighted = bytes[at++] != 0;
  std::optional<std::vector<double>> weights;
  if (weighted) {
    weights.emplace(m);
    for (auto& w : *weights) w = std::bit_cast<double>(u64());
  }
  if (at != bytes.size()) throw Error(Errc::parse_error, "trailing bytes in canonical code");
  DecodedCode out;
  out.graph = build_graph(n, std::move(edges), std::move(weights));
  out.root = root;
  return out;
}

SignalizedBall apply_relabeling(const SignalizedBall& ball, std::span<const NodeId> relabeling) {
  const Graph& g = ball.graph;
  const std::size_t m = g.num_edges();
  std::vector<std::tuple<NodeId, NodeId, double>> items(m);
  for (EdgeId e = 0; e < m; ++e) {
    NodeId a = relabeling[g.edges()[e].u];
    NodeId b = relabeling[g.edges()[e].v];
    if (a > b) std::swap(a, b);
    items[e] = {a, b, g.weight(e)};
  }
  std::sort(items.begin(), items.end());
  std::vector<Edge> edges(m);
  std::vector<double> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    edges[i] = {std::get<0>(items[i]), std::get<1>(items[i])};
    weights[i] = std::get<2>(items[i]);
  }
  std::vector<double> signal(g.num_nodes(), 0.0);
  const std::vector<double> x = g.signal_or_zero();
  for (NodeId v = 0; v < g.num_nodes(); ++v) signal[relabeling[v]] = x[v];
  std::optional<std::vector<double>> maybe_weights;
  if (g.is_weighted()) maybe_weights = std::move(weights);

  SignalizedBall out;
  out.graph = build_graph(g.num_nodes(), std::move(edges), std::move(maybe_weights),
                          std::move(signal));
  out.root = relabeling[ball.root];
  out.depth = ball.depth;
  return out;
}

namespace {

// Backtracking over root-fixing automorphisms. Vertices are assigned in cell
// order of the equitable partition; a candidate image must share the cell
// and reproduce adjacency and weights towards every assigned vertex.
class AutomorphismWalker {
 public:
  AutomorphismWalker(const Graph& g, NodeId root) : g_(g), n_(g.num_nodes()) {
    Partition p = initial_partition(g, root, {});
    refine(g, p);
    color_ = std::move(p.color);
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](NodeId a, NodeId b) { return color_[a] < color_[b]; });
    cell_members_.resize(n_);
    for (NodeId v : order_) cell_members_[color_[v]].push_back(v);
    image_.assign(n_, 0);
    used_.assign(n_, 0);
    assigned_.assign(n_, 0);
  }

  std::size_t size() const { return n_; }

  void candidates(std::size_t step, std::vector<NodeId>& out) const {
    out.clear();
    const NodeId p = order_[step];
    std::size_t assigned_nbrs = 0;
    for (NodeId q : g_.neighbors(p)) assigned_nbrs += assigned_[q];
    for (NodeId c : cell_members_[color_[p]]) {
      if (used_[c]) continue;
      std::size_t used_nbrs = 0;
      for (NodeId u : g_.neighbors(c)) used_nbrs += used_[u];
      if (used_nbrs != assigned_nbrs) continue;
      bool ok = true;
      auto nbrs = g_.neighbors(p);
      auto ids = g_.incident_edges(p);
      for (std::size_t k = 0; k < nbrs.size() && ok; ++k) {
        const NodeId q = nbrs[k];
        if (!assigned_[q]) continue;
        auto e = g_.find_edge(c, image_[q]);
        ok = e.has_value() && weight_bits(g_, *e) == weight_bits(g_, ids[k]);
      }
      if (ok) out.push_back(c);
    }
  }

  void assign(std::size_t step, NodeId c) {
    const NodeId p = order_[step];
    image_[p] = c;
    assigned_[p] = 1;
    used_[c] = 1;
  }

  void unassign(std::size_t step) {
    const NodeId p = order_[step];
    used_[image_[p]] = 0;
    assigned_[p] = 0;
  }

  NodeId vertex(std::size_t step) const { return order_[step]; }
  const std::vector<NodeId>& image() const { return image_; }

 private:
  const Graph& g_;
  std::size_t n_;
  Coloring color_;
  std::vector<NodeId> order_;
  std::vector<std::vector<NodeId>> cell_members_;
  std::vector<NodeId> image_;
  std::vector<char> used_;
  std::vector<char> assigned_;
};

void enumerate(AutomorphismWalker& walker, std::size_t step,
               std::vector<std::vector<NodeId>>& out) {
  if (step == walker.size()) {
    out.push_back(walker.image());
    return;
  }
  std::vector<NodeId> cands;
  walker.candidates(step, cands);
  for (NodeId c : cands) {
    walker.assign(step, c);
    enumerate(walker, step + 1, out);
    walker.unassign(step);
  }
}

struct BranchAndBound {
  AutomorphismWalker& walker;
  std::span<const double> x;
  std::span<const double> y;
  double best;

  void run(std::size_t step, double partial) {
    if (step == walker.size()) {
      best = std::min(best, partial);
      return;
    }
    const NodeId p = walker.vertex(step);
    std::vector<NodeId> cands;
    walker.candidates(step, cands);
    std::vector<std::pair<double, NodeId>> scored;
    scored.reserve(cands.size());
    for (NodeId c : cands) {
      const double d = x[c] - y[p];
      scored.emplace_back(d * d, c);
    }
    std::sort(scored.begin(), scored.end());
    for (const auto& [cost, c] : scored) {
      if (partial + cost >= best) break;
      walker.assign(step, c);
      run(step + 1, partial + cost);
      walker.unassign(step);
    }
  }
};

}  // namespace

std::vector<std::vector<NodeId>> automorphisms(const Graph& g, NodeId root, std::size_t cap) {
  if (root >= g.num_nodes()) throw Error(Errc::node_out_of_range, "ball root");
  if (g.num_nodes() > cap) {
    throw Error(Errc::size_cap_exceeded, "automorphism enumeration limited to " +
                                             std::to_string(cap) + " nodes, ball has " +
                                             std::to_string(g.num_nodes()));
  }
  AutomorphismWalker walker(g, root);
  std::vector<std::vector<NodeId>> out;
  enumerate(walker, 0, out);
  std::vector<NodeId> identity(g.num_nodes());
  std::iota(identity.begin(), identity.end(), 0);
  auto it = std::find(out.begin(), out.end(), identity);
  if (it != out.end()) std::iter_swap(out.begin(), it);
  return out;
}

std::vector<std::vector<NodeId>> automorphisms(const SignalizedBall& ball, std::size_t cap) {
  return automorphisms(ball.graph, ball.root, cap);
}

double quotient_distance(const Graph& g, NodeId root, std::span<const double> x,
                         std::span<const double> y, double cap) {
  const std::size_t n = g.num_nodes();
  if (x.size() != n || y.size() != n) {
    throw Error(Errc::dimension_mismatch, "signals of length " + std::to_string(x.size()) +
                                              " and " + std::to_string(y.size()) +
                                              " on a ball of " + std::to_string(n) + " nodes");
  }
  if (root >= n) throw Error(Errc::node_out_of_range, "ball root");
  double identity = 0.0;
  for (std::size_t i = 0; i < n; ++i) identity += (x[i] - y[i]) * (x[i] - y[i]);
  if (identity == 0.0) return 0.0;
  const double cap_sq = std::isinf(cap) ? cap : cap * cap;
  AutomorphismWalker walker(g, root);
  BranchAndBound search{walker, x, y, std::min(identity, cap_sq)};
  search.run(0, 0.0);
  if (search.best >= cap_sq) return cap;
  return std::sqrt(search.best);
}

}  // namespace localgsp
