#pragma once

// The identical-or-disjoint images promise problem, decided with one query to
// each of two minimal oracles followed by a swap test.

#include <cstdint>
#include <string_view>
#include <vector>

#include "oraclebench/permutation.hpp"
#include "oraclebench/statevector.hpp"

namespace oraclebench {

enum class ImageRelation { Identical, Disjoint };

std::string_view to_string(ImageRelation relation);

class PromiseInstance {
 public:
  // Throws PromiseViolation unless alpha(subset) and beta(subset) are equal
  // or disjoint, DomainError on an empty or out-of-range subset.
  PromiseInstance(Permutation alpha, Permutation beta, std::vector<BasisIndex> subset);

  unsigned bits() const { return alpha_.bits(); }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& beta() const { return beta_; }
  const std::vector<BasisIndex>& subset() const { return subset_; }  // sorted
  ImageRelation relation() const { return relation_; }

 private:
  Permutation alpha_;
  Permutation beta_;
  std::vector<BasisIndex> subset_;
  ImageRelation relation_;
};

// beta = alpha o sigma with sigma a seeded permutation of the subset (fixed
// point free when the subset has two or more elements), identity elsewhere.
PromiseInstance make_identical_instance(unsigned n, std::size_t subset_size,
                                        std::uint64_t seed);
// beta = tau o alpha with tau exchanging alpha(S) with a seeded set of
// |S| values outside alpha(S). Requires subset_size <= N / 2.
PromiseInstance make_disjoint_instance(unsigned n, std::size_t subset_size,
                                       std::uint64_t seed);

struct AncillaProbabilities {
  double p_zero = 0.0;
  double p_one = 0.0;
};

// Ancilla starts in |1>: H, controlled swap, H. An outcome of 0 witnesses
// antisymmetry; p_zero = (1 - |<A|B>|^2) / 2.
AncillaProbabilities swap_test_probabilities(double overlap_abs);

struct Figure1Outcome {
  AncillaProbabilities probabilities;
  std::uint64_t queries_alpha = 0;
  std::uint64_t queries_beta = 0;
};

Figure1Outcome run_figure1_exact(const PromiseInstance& instance);

enum class Verdict { Disjoint, IdenticalWithConfidence };

std::string_view to_string(Verdict verdict);

struct TrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t zero_count = 0;
  Verdict verdict = Verdict::IdenticalWithConfidence;
  double error_probability_bound = 0.0;  // 2^-K, or 0 for a certain verdict
  std::uint64_t queries_alpha = 0;
  std::uint64_t queries_beta = 0;
};

TrialSummary summarize_trials(std::uint64_t trials, std::uint64_t zero_count);

// K full circuit runs; trial t measures the ancilla with seed + t.
TrialSummary run_figure1_sampled(const PromiseInstance& instance, std::uint64_t trials,
                                 std::uint64_t seed);

// |<S_alpha(S,0)|S_beta(S,0)>| for the normalized |S>|0> input.
double naive_standard_overlap(const PromiseInstance& instance);

// The comparison subcircuit on arbitrary normalized register states of equal
// width, simulated gate by gate.
AncillaProbabilities run_figure1_swaptest_on_states(const StateVector& a,
                                                    const StateVector& b);

// Normalized uniform superposition over `support` in a single register.
StateVector subset_state(std::string name, unsigned n,
                         const std::vector<BasisIndex>& support);

}  // namespace oraclebench
