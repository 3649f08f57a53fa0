#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "oraclebench/errors.hpp"
#include "oraclebench/graph_iso.hpp"

using namespace oraclebench;

namespace {

const std::string kData = ORACLEBENCH_DATA_DIR;

// Count of vertex relabelings that fix the edge set, found by comparing edge
// sets directly rather than through the bit encoding.
std::size_t automorphism_count(const Graph& g) {
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<unsigned> p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0u);
  std::size_t count = 0;
  do {
    std::set<Edge> mapped;
    for (auto [u, v] : g.edges()) mapped.insert({std::min(p[u], p[v]), std::max(p[u], p[v])});
    if (mapped == edges) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace

TEST_CASE("graph construction and encoding") {
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.encode() == 0b111);
  CHECK(Graph(3, {{1, 0}}).encode() == 0b100);
  CHECK(Graph(3, {{2, 1}}).encode() == 0b001);
  CHECK(Graph(4, {{0, 3}, {1, 2}}).encode_bits() == "001100");
  CHECK(Graph(3, {{2, 0}}).edges() == std::vector<Edge>{{0, 2}});
  CHECK(Graph(1, {}).encode() == 0);

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(0, {}), DomainError);
  CHECK_THROWS_AS(Graph(12, {}), DomainError);
}

TEST_CASE("graph files") {
  const Graph g = load_graph(kData + "/asym6.txt");
  CHECK(g.vertex_count() == 6);
  CHECK(g.edges().size() == 6);
  CHECK(parse("3 1\n0 2\n") == Graph(3, {{0, 2}}));

  const char* bad[] = {"",          "3\n",          "x y\n",       "3 2\n0 1\n",
                       "3 1\n0\n",  "3 1\n0 1 2\n", "3 1\n0 3\n",  "3 1\n1 1\n",
                       "3 2\n0 1\n1 0\n", "0 0\n",  "12 0\n",      "3 4\n"};
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse(text), ParseError);
  }
  CHECK_THROWS_AS(load_graph(kData + "/missing.txt"), ParseError);
}

TEST_CASE("automorphism checks agree with brute force") {
  CHECK_FALSE(check_non_automorphic(load_graph(kData + "/k3.txt")));
  CHECK(check_non_automorphic(Graph(1, {})));
  CHECK_FALSE(check_non_automorphic(Graph(2, {})));
  for (const char* name : {"asym6.txt", "asym6_relabeled.txt", "asym7a.txt", "asym7b.txt"}) {
    CAPTURE(name);
    const Graph g = load_graph(kData + "/" + name);
    CHECK(automorphism_count(g) == 1);
    CHECK(check_non_automorphic(g));
  }
  // path on four vertices has the reversal
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(automorphism_count(path) == 2);
  CHECK_FALSE(check_non_automorphic(path));
  CHECK_THROWS_AS(check_non_automorphic(Graph(9, {})), DomainError);
}

TEST_CASE("permuted superposition") {
  const Graph g = load_graph(kData + "/asym6.txt");
  const SparseState psi = build_permuted_superposition(g);
  REQUIRE(psi.size() == 720);
  double norm = 0.0;
  for (const auto& [key, amp] : psi) {
    CHECK(std::abs(amp - 1.0 / std::sqrt(720.0)) < 1e-15);
    norm += std::norm(amp);
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(psi.count(g.encode()) == 1);

  // relabeling the input gives the same state
  CHECK(build_permuted_superposition(g.relabeled({5, 4, 3, 2, 1, 0})) == psi);
  CHECK(build_permuted_superposition(load_graph(kData + "/asym6_relabeled.txt")) == psi);

  CHECK_THROWS_AS(build_permuted_superposition(load_graph(kData + "/k3.txt")),
                  AutomorphicGraph);
  CHECK_THROWS_AS(build_permuted_superposition(Graph(8, {})), DomainError);
  CHECK(build_permuted_superposition(Graph(1, {})).size() == 1);
}

TEST_CASE("isomorphic graphs give overlap one") {
  const Graph g = load_graph(kData + "/asym6.txt");
  const Graph h = load_graph(kData + "/asym6_relabeled.txt");
  const GraphComparison c = compare_graphs(g, h, 20, 1729);
  CHECK(c.overlap == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.probabilities.p_zero <= 1e-12);
  CHECK(c.summary.zero_count == 0);
  CHECK(c.summary.verdict == Verdict::IdenticalWithConfidence);
  CHECK(c.summary.error_probability_bound == 9.5367431640625e-07);
}

TEST_CASE("non-isomorphic graphs give overlap zero") {
  const Graph a = load_graph(kData + "/asym7a.txt");
  const Graph b = load_graph(kData + "/asym7b.txt");
  CHECK(a.edges().size() == b.edges().size());
  const GraphComparison c = compare_graphs(a, b, 200, 1729);
  CHECK(c.overlap == 0.0);
  CHECK(c.probabilities.p_zero == 0.5);
  CHECK(c.summary.verdict == Verdict::Disjoint);
  // 200 fair coin flips, sigma about 7
  CHECK(c.summary.zero_count >= 70);
  CHECK(c.summary.zero_count <= 130);

  CHECK(compare_graphs(a, b, 200, 1729).summary.zero_count == c.summary.zero_count);
  CHECK_THROWS_AS(compare_graphs(a, Graph(1, {}), 1, 0), DomainError);
  CHECK_THROWS_AS(compare_graphs(a, b, 0, 0), DomainError);
}
