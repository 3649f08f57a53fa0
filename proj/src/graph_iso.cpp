#include "oraclebench/graph_iso.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "oraclebench/errors.hpp"

namespace oraclebench {

namespace {

unsigned pair_count(unsigned v) { return v * (v - 1) / 2; }

// Position of pair (u, v), u < v, in row-major upper-triangular order.
unsigned pair_rank(unsigned u, unsigned v, unsigned vertex_count) {
  return u * vertex_count - u * (u + 1) / 2 + (v - u - 1);
}

std::vector<unsigned> identity_labels(unsigned v) {
  std::vector<unsigned> p(v);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

}  // namespace

Graph::Graph(unsigned vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw DomainError("graph needs at least one vertex");
  // 64-bit encoding holds up to 11 vertices
  if (vertex_count_ > 11) throw DomainError("graphs are limited to 11 vertices");
  for (auto& [u, v] : edges_) {
    if (u >= vertex_count_ || v >= vertex_count_)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") references a missing vertex");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw DomainError("duplicate edge");
}

Graph Graph::relabeled(const std::vector<unsigned>& relabeling) const {
  if (relabeling.size() != vertex_count_)
    throw DomainError("relabeling has the wrong length");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_) out.emplace_back(relabeling[u], relabeling[v]);
  return Graph(vertex_count_, std::move(out));
}

std::uint64_t Graph::encode() const {
  const unsigned bits = pair_count(vertex_count_);
  std::uint64_t key = 0;
  for (const auto& [u, v] : edges_)
    key |= std::uint64_t{1} << (bits - 1 - pair_rank(u, v, vertex_count_));
  return key;
}

std::string Graph::encode_bits() const {
  const unsigned bits = pair_count(vertex_count_);
  const std::uint64_t key = encode();
  std::string s(bits, '0');
  for (unsigned i = 0; i < bits; ++i)
    if (key >> (bits - 1 - i) & 1) s[i] = '1';
  return s;
}

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("graph file is empty");
  std::istringstream header(line);
  long long v = 0, e = 0;
  if (!(header >> v >> e)) throw ParseError("graph header must be 'V E'");
  if (v < 1 || v > 11) throw ParseError("vertex count " + std::to_string(v) + " outside 1..11");
  if (e < 0 || e > static_cast<long long>(pair_count(static_cast<unsigned>(v))))
    throw ParseError("edge count " + std::to_string(e) + " impossible for " +
                     std::to_string(v) + " vertices");
  std::vector<Edge> edges;
  for (long long i = 0; i < e; ++i) {
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(e) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra))
      throw ParseError("edge line " + std::to_string(i + 1) + " must be 'u v'");
    if (a < 0 || b < 0 || a >= v || b >= v)
      throw ParseError("edge line " + std::to_string(i + 1) + " is out of range");
    edges.emplace_back(static_cast<unsigned>(a), static_cast<unsigned>(b));
  }
  try {
    return Graph(static_cast<unsigned>(v), std::move(edges));
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  return read_graph(in);
}

bool check_non_automorphic(const Graph& g) {
  const unsigned v = g.vertex_count();
  if (v > kAutomorphismCap)
    throw DomainError("automorphism search is capped at " +
                      std::to_string(kAutomorphismCap) + " vertices");
  const std::uint64_t key = g.encode();
  auto rho = identity_labels(v);
  // skip the identity itself
  while (std::next_permutation(rho.begin(), rho.end()))
    if (g.relabeled(rho).encode() == key) return false;
  return true;
}

SparseState build_permuted_superposition(const Graph& g) {
  const unsigned v = g.vertex_count();
  if (v > kSuperpositionCap)
    throw DomainError("superpositions are capped at " + std::to_string(kSuperpositionCap) +
                      " vertices");
  if (!check_non_automorphic(g))
    throw AutomorphicGraph("graph has a non-trivial automorphism; relabelings collide");
  std::size_t count = 1;
  for (unsigned i = 2; i <= v; ++i) count *= i;
  const Amplitude amp = 1.0 / std::sqrt(static_cast<double>(count));

  SparseState state;
  auto rho = identity_labels(v);
  do {
    state.emplace(g.relabeled(rho).encode(), amp);
  } while (std::next_permutation(rho.begin(), rho.end()));
  return state;
}

Amplitude sparse_inner_product(const SparseState& a, const SparseState& b) {
  Amplitude sum{};
  for (const auto& [key, amp] : a) {
    const auto it = b.find(key);
    if (it != b.end()) sum += std::conj(amp) * it->second;
  }
  return sum;
}

GraphComparison compare_graphs(const Graph& g1, const Graph& g2, std::uint64_t trials,
                               std::uint64_t seed) {
  if (g1.vertex_count() != g2.vertex_count())
    throw DomainError("graphs have different vertex counts");
  if (trials < 1) throw DomainError("need at least one trial");
  const SparseState psi1 = build_permuted_superposition(g1);
  const SparseState psi2 = build_permuted_superposition(g2);

  GraphComparison out;
  out.overlap = std::abs(sparse_inner_product(psi1, psi2));
  out.probabilities = swap_test_probabilities(out.overlap);
  std::uint64_t zeros = 0;
  for (std::uint64_t t = 0; t < trials; ++t)
    if (uniform_unit(seed + t) < out.probabilities.p_zero) ++zeros;
  out.summary = summarize_trials(trials, zeros);
  return out;
}

}  // namespace oraclebench
