#include "oraclebench/promise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "oraclebench/errors.hpp"
#include "oraclebench/oracles.hpp"

namespace oraclebench {

namespace {

constexpr const char* kAlphaReg = "alpha";
constexpr const char* kBetaReg = "beta";
constexpr const char* kAncilla = "ancilla";

std::vector<BasisIndex> image_set(const Permutation& p,
                                  const std::vector<BasisIndex>& subset) {
  std::vector<BasisIndex> out;
  out.reserve(subset.size());
  for (auto x : subset) out.push_back(p(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisIndex> seeded_subset(unsigned n, std::size_t size, std::mt19937_64& rng) {
  const BasisIndex N = BasisIndex{1} << n;
  if (size < 1 || size > N)
    throw DomainError("subset size " + std::to_string(size) + " outside 1.." +
                      std::to_string(N));
  std::vector<BasisIndex> all(N);
  std::iota(all.begin(), all.end(), BasisIndex{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::string_view to_string(ImageRelation relation) {
  return relation == ImageRelation::Identical ? "identical" : "disjoint";
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Disjoint ? "disjoint" : "identical-with-confidence";
}

PromiseInstance::PromiseInstance(Permutation alpha, Permutation beta,
                                 std::vector<BasisIndex> subset)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), subset_(std::move(subset)) {
  if (alpha_.bits() != beta_.bits())
    throw DomainError("alpha and beta act on different sizes");
  if (subset_.empty()) throw DomainError("subset must be non-empty");
  std::sort(subset_.begin(), subset_.end());
  if (std::adjacent_find(subset_.begin(), subset_.end()) != subset_.end())
    throw DomainError("subset has repeated elements");
  if (subset_.back() >= alpha_.domain_size())
    throw DomainError("subset element outside Z_" + std::to_string(alpha_.domain_size()));

  const auto a = image_set(alpha_, subset_);
  const auto b = image_set(beta_, subset_);
  if (a == b) {
    relation_ = ImageRelation::Identical;
    return;
  }
  std::vector<BasisIndex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  if (!common.empty())
    throw PromiseViolation("images share " + std::to_string(common.size()) + " of " +
                           std::to_string(a.size()) +
                           " elements: neither identical nor disjoint");
  relation_ = ImageRelation::Disjoint;
}

PromiseInstance make_identical_instance(unsigned n, std::size_t subset_size,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Permutation alpha = Permutation::random(n, rng());
  const auto subset = seeded_subset(n, subset_size, rng);

  // sigma: a random cyclic rotation of a shuffled subset, so no fixed points
  std::vector<BasisIndex> order = subset;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<BasisIndex> sigma(alpha.domain_size());
  std::iota(sigma.begin(), sigma.end(), BasisIndex{0});
  for (std::size_t i = 0; i < order.size(); ++i)
    sigma[order[i]] = order[(i + 1) % order.size()];
  const Permutation beta = alpha.after(Permutation(n, std::move(sigma)));
  return PromiseInstance(alpha, beta, subset);
}

PromiseInstance make_disjoint_instance(unsigned n, std::size_t subset_size,
                                       std::uint64_t seed) {
  const BasisIndex N = BasisIndex{1} << n;
  if (subset_size < 1 || subset_size > N / 2)
    throw DomainError("disjoint images need 1 <= subset size <= " + std::to_string(N / 2));
  std::mt19937_64 rng(seed);
  const Permutation alpha = Permutation::random(n, rng());
  const auto subset = seeded_subset(n, subset_size, rng);

  const auto image = image_set(alpha, subset);
  std::vector<BasisIndex> outside;
  for (BasisIndex v = 0; v < N; ++v)
    if (!std::binary_search(image.begin(), image.end(), v)) outside.push_back(v);
  std::shuffle(outside.begin(), outside.end(), rng);

  std::vector<BasisIndex> tau(N);
  std::iota(tau.begin(), tau.end(), BasisIndex{0});
  for (std::size_t i = 0; i < image.size(); ++i) {
    tau[image[i]] = outside[i];
    tau[outside[i]] = image[i];
  }
  const Permutation beta = Permutation(n, std::move(tau)).after(alpha);
  return PromiseInstance(alpha, beta, subset);
}

AncillaProbabilities swap_test_probabilities(double overlap_abs) {
  const double c = std::clamp(overlap_abs, 0.0, 1.0);
  const double p_zero = (1.0 - c * c) / 2.0;
  return {p_zero, 1.0 - p_zero};
}

StateVector subset_state(std::string name, unsigned n,
                         const std::vector<BasisIndex>& support) {
  RegisterLayout layout{{std::move(name), n}};
  if (support.empty()) throw DomainError("empty support");
  std::vector<Amplitude> amps(layout.dimension());
  const double a = 1.0 / std::sqrt(static_cast<double>(support.size()));
  for (auto x : support) {
    if (x >= amps.size()) throw DomainError("support element out of range");
    amps[x] = a;
  }
  return StateVector::from_amplitudes(std::move(layout), std::move(amps));
}

namespace {

// |S>|S>|1> with H on the ancilla, then both oracles, controlled swap, H.
StateVector figure1_state(const PromiseInstance& instance, CountedOracle& alpha,
                          CountedOracle& beta) {
  const unsigned n = instance.bits();
  StateVector state =
      tensor_product(tensor_product(subset_state(kAlphaReg, n, instance.subset()),
                                    subset_state(kBetaReg, n, instance.subset())),
                     prepare_basis(RegisterLayout{{kAncilla, 1}}, {{kAncilla, 1}}));
  apply_hadamard(state, kAncilla, 0);
  apply_minimal(alpha, state, kAlphaReg);
  apply_minimal(beta, state, kBetaReg);
  apply_controlled_swap(state, QubitRef{kAncilla, 0}, kAlphaReg, kBetaReg);
  apply_hadamard(state, kAncilla, 0);
  return state;
}

}  // namespace

Figure1Outcome run_figure1_exact(const PromiseInstance& instance) {
  CountedOracle alpha(OracleKind::Minimal, instance.alpha());
  CountedOracle beta(OracleKind::Minimal, instance.beta());
  const StateVector state = figure1_state(instance, alpha, beta);
  Figure1Outcome out;
  out.probabilities.p_zero = measure_probability(state, kAncilla, 0);
  out.probabilities.p_one = measure_probability(state, kAncilla, 1);
  out.queries_alpha = alpha.query_count();
  out.queries_beta = beta.query_count();
  return out;
}

TrialSummary summarize_trials(std::uint64_t trials, std::uint64_t zero_count) {
  if (trials < 1) throw DomainError("need at least one trial");
  if (zero_count > trials) throw DomainError("more zero outcomes than trials");
  TrialSummary s;
  s.trials = trials;
  s.zero_count = zero_count;
  if (zero_count > 0) {
    s.verdict = Verdict::Disjoint;
    s.error_probability_bound = 0.0;
  } else {
    s.verdict = Verdict::IdenticalWithConfidence;
    s.error_probability_bound = std::ldexp(1.0, -static_cast<int>(trials));
  }
  return s;
}

TrialSummary run_figure1_sampled(const PromiseInstance& instance, std::uint64_t trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw DomainError("need at least one trial");
  CountedOracle alpha(OracleKind::Minimal, instance.alpha());
  CountedOracle beta(OracleKind::Minimal, instance.beta());
  std::uint64_t zeros = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const StateVector state = figure1_state(instance, alpha, beta);
    if (sample_measurement(state, kAncilla, seed + t).value == 0) ++zeros;
  }
  TrialSummary s = summarize_trials(trials, zeros);
  s.queries_alpha = alpha.query_count();
  s.queries_beta = beta.query_count();
  return s;
}

double naive_standard_overlap(const PromiseInstance& instance) {
  const unsigned n = instance.bits();
  const StateVector input = tensor_product(subset_state("x", n, instance.subset()),
                                           prepare_basis(RegisterLayout{{"b", n}}, {}));
  StateVector out_alpha = input;
  StateVector out_beta = input;
  CountedOracle s_alpha(OracleKind::Standard, instance.alpha());
  CountedOracle s_beta(OracleKind::Standard, instance.beta());
  apply_standard(s_alpha, out_alpha, "x", "b");
  apply_standard(s_beta, out_beta, "x", "b");
  return std::abs(inner_product(out_alpha, out_beta));
}

AncillaProbabilities run_figure1_swaptest_on_states(const StateVector& a,
                                                    const StateVector& b) {
  if (a.layout().total_qubits() != b.layout().total_qubits())
    throw LayoutError("swap test on states of different width");
  const unsigned w = a.layout().total_qubits();
  const StateVector lhs =
      StateVector::from_amplitudes(RegisterLayout{{"lhs", w}},
                                   {a.amplitudes().begin(), a.amplitudes().end()});
  const StateVector rhs =
      StateVector::from_amplitudes(RegisterLayout{{"rhs", w}},
                                   {b.amplitudes().begin(), b.amplitudes().end()});
  StateVector state = tensor_product(
      tensor_product(lhs, rhs), prepare_basis(RegisterLayout{{kAncilla, 1}}, {{kAncilla, 1}}));
  apply_hadamard(state, kAncilla, 0);
  apply_controlled_swap(state, QubitRef{kAncilla, 0}, "lhs", "rhs");
  apply_hadamard(state, kAncilla, 0);
  return {measure_probability(state, kAncilla, 0), measure_probability(state, kAncilla, 1)};
}

}  // namespace oraclebench
