#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "localgsp/ball.hpp"
#include "localgsp/graph.hpp"

namespace localgsp {

// Canonical code byte layout (all integers little endian):
//   u8  magic 'K' (0x4B)
//   u8  format version (1)
//   u32 node count n
//   u32 root position (always 0)
//   u32 edge count m
//   m x (u32 a, u32 b) canonical edges, a < b, sorted ascending
//   u8  weighted flag
//   m x u64 IEEE-754 weight bits in edge order (only when weighted)
inline constexpr std::uint8_t kCodeMagic = 0x4B;
inline constexpr std::uint8_t kCodeVersion = 1;

inline constexpr std::size_t kDefaultAutomorphismCap = 16;

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;
  // relabeling[v] = canonical position of input node v. The root maps to 0.
  std::vector<NodeId> relabeling;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes == b.bytes;
  }
};

// Canonical form of the rooted graph (g, root). Signals are ignored; weights
// take part bitwise when present.
CanonicalCode canonical_form(const Graph& g, NodeId root);
CanonicalCode canonical_form(const SignalizedBall& ball);

// Canonical code together with a canonical representative of the signal's
// orbit under the ball's automorphism group, in canonical node order. Two
// signalized balls give equal (bytes, signal) iff they are isomorphic
// including signals. `code.relabeling` maps the input ball onto that
// representative.
struct CanonicalPoint {
  CanonicalCode code;
  std::vector<double> signal;
};
CanonicalPoint canonical_point(const SignalizedBall& ball);

struct DecodedCode {
  Graph graph;  // no signal; edges in canonical order
  NodeId root = 0;
};
DecodedCode decode_code(std::span<const std::uint8_t> bytes);

// Ball relabeled into canonical order (graph equals decode_code(code.bytes)
// plus the permuted signal).
SignalizedBall apply_relabeling(const SignalizedBall& ball, std::span<const NodeId> relabeling);

// All root-fixing automorphisms; perm[v] is the image of v. The identity
// comes first. Throws Error{size_cap_exceeded} above `cap` nodes.
std::vector<std::vector<NodeId>> automorphisms(const Graph& g, NodeId root,
                                               std::size_t cap = kDefaultAutomorphismCap);
std::vector<std::vector<NodeId>> automorphisms(const SignalizedBall& ball,
                                               std::size_t cap = kDefaultAutomorphismCap);

// min over automorphisms phi of ||x o phi - y||_2, clipped to `cap`: the
// search stops early once the value is known to be at least `cap`, in which
// case `cap` is returned.
double quotient_distance(const Graph& g, NodeId root, std::span<const double> x,
                         std::span<const double> y,
                         double cap = std::numeric_limits<double>::infinity());

}  // namespace localgsp
