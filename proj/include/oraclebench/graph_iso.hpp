#pragma once

// Isomorphism of asymmetric graphs through superpositions of relabelings.
// For a graph G with trivial automorphism group, rho -> rho(G) is injective,
// so sum_rho |rho(G)> / sqrt(V!) is a normalized state. Two such states are
// equal when the graphs are isomorphic and orthogonal otherwise.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oraclebench/promise.hpp"
#include "oraclebench/statevector.hpp"

namespace oraclebench {

inline constexpr unsigned kAutomorphismCap = 8;
inline constexpr unsigned kSuperpositionCap = 7;

using Edge = std::pair<unsigned, unsigned>;

class Graph {
 public:
  // Edges are stored with u < v, sorted. Throws DomainError on self-loops,
  // out-of-range or duplicate edges.
  Graph(unsigned vertex_count, std::vector<Edge> edges);

  unsigned vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Vertex v becomes relabeling[v].
  Graph relabeled(const std::vector<unsigned>& relabeling) const;

  // Upper-triangular adjacency bits in row-major order: pair (u, v), u < v,
  // is bit number k(u, v) counted from the most significant position.
  std::uint64_t encode() const;
  std::string encode_bits() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  unsigned vertex_count_;
  std::vector<Edge> edges_;
};

// Text format: "V E" then E lines "u v", 0-indexed.
Graph read_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);

// Exhaustive over all V! relabelings. Throws DomainError for V > 8.
bool check_non_automorphic(const Graph& g);

using SparseState = std::map<std::uint64_t, Amplitude>;

// Throws AutomorphicGraph when g has a non-trivial automorphism, DomainError
// for V > 7.
SparseState build_permuted_superposition(const Graph& g);

Amplitude sparse_inner_product(const SparseState& a, const SparseState& b);

struct GraphComparison {
  double overlap = 0.0;  // |<psi_1|psi_2>|
  AncillaProbabilities probabilities;
  TrialSummary summary;  // Disjoint verdict means non-isomorphic
};

// Swap test applied analytically to the two superpositions, then K Bernoulli
// trials on the ancilla outcome; trial t draws with seed + t.
GraphComparison compare_graphs(const Graph& g1, const Graph& g2, std::uint64_t trials,
                               std::uint64_t seed);

}  // namespace oraclebench
