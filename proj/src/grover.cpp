#include "oraclebench/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "oraclebench/errors.hpp"

namespace oraclebench {

RegisterLayout grover_layout(unsigned n, const MarkingRegisters& regs) {
  return RegisterLayout{{regs.target, n}, {regs.candidate, n}, {regs.scratch, n},
                        {regs.flag, 1}};
}

void apply_marking_oracle(CountedOracle& standard, StateVector& state,
                          const MarkingRegisters& regs) {
  const Register& scratch = state.layout().at(regs.scratch);
  const auto amps = state.amplitudes();
  double leaked = 0.0;
  for (BasisIndex i = 0; i < amps.size(); ++i)
    if (i & scratch.mask()) leaked += std::norm(amps[i]);
  if (leaked > 1e-12)
    throw ContractViolation("marking oracle needs the scratch register in |0>; "
                            "found weight " + std::to_string(leaked) + " elsewhere");
  if (state.layout().at(regs.flag).width != 1)
    throw LayoutError("flag register must be a single qubit");

  standard.apply(state, regs.candidate, regs.scratch, Direction::Forward);
  apply_equality_comparator(state, regs.target, regs.scratch, QubitRef{regs.flag, 0});
  standard.apply(state, regs.candidate, regs.scratch, Direction::Inverse);
}

void apply_diffusion(StateVector& state, std::string_view reg) {
  const std::string_view regs[] = {reg};
  transform_register_blocks(state, regs, [](std::span<Amplitude> block) {
    Amplitude mean{};
    for (const auto& a : block) mean += a;
    mean /= static_cast<double>(block.size());
    for (auto& a : block) a = 2.0 * mean - a;
  });
}

unsigned grover_iterations(unsigned n) {
  const double root = std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
  return std::max(1u, static_cast<unsigned>(std::floor(std::numbers::pi / 4.0 * root)));
}

std::uint64_t scaling_query_bound(unsigned n) {
  const double root = std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
  return 2 * static_cast<std::uint64_t>(std::ceil(std::numbers::pi / 4.0 * root));
}

InversionRun grover_invert(const Permutation& perm, BasisIndex y, InversionMode mode,
                           std::uint64_t seed, const IterationObserver& observer) {
  const unsigned n = perm.bits();
  if (y >= perm.domain_size())
    throw DomainError("target " + std::to_string(y) + " outside Z_" +
                      std::to_string(perm.domain_size()));

  const MarkingRegisters regs;
  StateVector state = prepare_basis(grover_layout(n, regs), {{regs.target, y},
                                                             {regs.flag, 1}});
  apply_hadamard_layer(state, regs.candidate);
  apply_hadamard(state, regs.flag, 0);  // |1> -> |->, phase kickback

  CountedOracle standard(OracleKind::Standard, perm);
  const unsigned k = grover_iterations(n);
  for (unsigned it = 1; it <= k; ++it) {
    apply_marking_oracle(standard, state, regs);
    apply_diffusion(state, regs.candidate);
    if (observer) observer(it, state);
  }

  InversionRun run;
  run.n = n;
  run.y = y;
  run.iterations = k;
  run.sf_queries = standard.query_count();
  run.success_probability = measure_probability(state, regs.candidate, perm.preimage(y));
  if (mode == InversionMode::Sampled) {
    run.measured_x = sample_measurement(state, regs.candidate, seed).value;
    run.seed = seed;
  }
  return run;
}

std::vector<ScalingRow> query_scaling_table(unsigned n_min, unsigned n_max,
                                            unsigned permutations_per_n,
                                            std::uint64_t seed) {
  if (n_min < kScalingMinN || n_max > kScalingMaxN || n_min > n_max)
    throw DomainError("scaling range must lie within " + std::to_string(kScalingMinN) +
                      ".." + std::to_string(kScalingMaxN));
  if (permutations_per_n < 1) throw DomainError("need at least one permutation per n");

  std::vector<ScalingRow> rows;
  for (unsigned n = n_min; n <= n_max; ++n) {
    ScalingRow row;
    row.n = n;
    row.N = BasisIndex{1} << n;
    row.iterations = grover_iterations(n);
    double total = 0.0;
    for (unsigned j = 0; j < permutations_per_n; ++j) {
      const std::uint64_t s = seed + 1000ull * n + j;
      const Permutation perm = Permutation::random(n, s);
      std::mt19937_64 rng(s);
      std::uniform_int_distribution<BasisIndex> pick(0, row.N - 1);
      const BasisIndex y = pick(rng);
      const InversionRun run = grover_invert(perm, y, InversionMode::ExactProbability);
      if (j == 0) row.sf_queries = run.sf_queries;
      total += run.success_probability;
    }
    row.mean_success_probability = total / permutations_per_n;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace oraclebench
