#pragma once

// Inverting a permutation with Grover search over a standard oracle.
//
// Four registers: target |y> (n qubits), candidate |x> (n), scratch (n, kept
// at |0>) and a one-qubit flag. The marking oracle computes f(x) into scratch,
// flips the flag where scratch equals the target, then uncomputes scratch.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oraclebench/oracles.hpp"
#include "oraclebench/permutation.hpp"
#include "oraclebench/statevector.hpp"

namespace oraclebench {

struct MarkingRegisters {
  std::string target = "target";
  std::string candidate = "candidate";
  std::string scratch = "scratch";
  std::string flag = "flag";
};

RegisterLayout grover_layout(unsigned n, const MarkingRegisters& regs = {});

// S_f(candidate, scratch); compare(target, scratch -> flag); S_f^-1(candidate,
// scratch). Exactly two queries to `standard`. Throws ContractViolation when
// the scratch register carries amplitude outside |0>.
void apply_marking_oracle(CountedOracle& standard, StateVector& state,
                          const MarkingRegisters& regs = {});

// 2|u><u| - I on one register, u the uniform superposition.
void apply_diffusion(StateVector& state, std::string_view reg);

// floor(pi/4 * sqrt(N)), at least 1.
unsigned grover_iterations(unsigned n);

enum class InversionMode { ExactProbability, Sampled };

struct InversionRun {
  unsigned n = 0;
  BasisIndex y = 0;
  unsigned iterations = 0;
  std::uint64_t sf_queries = 0;
  double success_probability = 0.0;
  std::optional<BasisIndex> measured_x;
  std::optional<std::uint64_t> seed;
};

// Called after every Grover iteration with the iteration number (1-based).
using IterationObserver = std::function<void(unsigned, const StateVector&)>;

InversionRun grover_invert(const Permutation& perm, BasisIndex y, InversionMode mode,
                           std::uint64_t seed = 0,
                           const IterationObserver& observer = {});

struct ScalingRow {
  unsigned n = 0;
  BasisIndex N = 0;
  unsigned iterations = 0;
  std::uint64_t sf_queries = 0;
  double mean_success_probability = 0.0;
};

inline constexpr unsigned kScalingMinN = 2;
inline constexpr unsigned kScalingMaxN = 8;

// One row per n in [n_min, n_max]; permutation j at size n uses seed
// seed + 1000 * n + j and its target y is drawn from the same stream.
std::vector<ScalingRow> query_scaling_table(unsigned n_min, unsigned n_max,
                                            unsigned permutations_per_n,
                                            std::uint64_t seed);

// 2 * ceil(pi/4 * sqrt(N))
std::uint64_t scaling_query_bound(unsigned n);

}  // namespace oraclebench
