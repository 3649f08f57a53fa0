#pragma once

// Oracle conversions as f-independent circuits around a single oracle box,
// plus a verifier comparing each composed circuit to the oracle it builds.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oraclebench/oracles.hpp"
#include "oraclebench/permutation.hpp"
#include "oraclebench/statevector.hpp"

namespace oraclebench {

// A sequence of reversible steps. Each step knows its own inverse, so the
// whole circuit can be run backwards gate by gate.
class Circuit {
 public:
  using Step = std::function<void(StateVector&)>;

  Circuit& then(Step forward, Step inverse);
  void apply(StateVector& state) const;
  Circuit reversed() const;
  std::size_t size() const { return steps_.size(); }

 private:
  struct Gate {
    Step forward;
    Step inverse;
  };
  std::vector<Gate> steps_;
};

// (I (x) F) o S_f o (I (x) F^-1) = P_f. `standard` must be a Standard oracle.
Circuit phase_from_standard_circuit(CountedOracle& standard, std::string x_reg,
                                    std::string b_reg);
// (I (x) F^-1) o P_f o (I (x) F) = S_f. `phase` must be a FourierPhase oracle.
Circuit standard_from_phase_circuit(CountedOracle& phase, std::string x_reg,
                                    std::string b_reg);
// (I (x) R) o O o (I (x) R) = O^-1 for O a Standard or FourierPhase oracle.
Circuit inverse_by_reflection_circuit(CountedOracle& oracle, std::string x_reg,
                                      std::string b_reg);
// S_f = (M_{f^-1} (x) I) o A o (M_f (x) I). `minimal` must be a Minimal oracle;
// its inverse direction supplies M_{f^-1}.
Circuit standard_from_minimal_circuit(CountedOracle& minimal, std::string x_reg,
                                      std::string b_reg);
// M_f (x) I = (S_{f^-1})^-1 o X o S_f on inputs whose b register is |0>.
Circuit minimal_from_standard_pair_circuit(CountedOracle& standard_f,
                                           CountedOracle& standard_f_inverse,
                                           std::string x_reg, std::string b_reg);

enum class BitwiseDirection { ToPhase, ToStandard };

// ToPhase:    (I (x) H^n) o S^bit_f o (I (x) H^n) = P^bit_f
// ToStandard: (I (x) H^n) o P^bit_f o (I (x) H^n) = S^bit_f
Circuit bitwise_equivalence_circuit(CountedOracle& bit_oracle, std::string x_reg,
                                    std::string b_reg, BitwiseDirection direction);

void build_phase_from_standard(CountedOracle& standard, StateVector& state,
                               std::string_view x_reg, std::string_view b_reg);
void build_standard_from_phase(CountedOracle& phase, StateVector& state,
                               std::string_view x_reg, std::string_view b_reg);
void build_inverse_by_reflection(CountedOracle& oracle, StateVector& state,
                                 std::string_view x_reg, std::string_view b_reg);
void build_standard_from_minimal(CountedOracle& minimal, StateVector& state,
                                 std::string_view x_reg, std::string_view b_reg);
void build_minimal_from_standard_pair(CountedOracle& standard_f,
                                      CountedOracle& standard_f_inverse,
                                      StateVector& state, std::string_view x_reg,
                                      std::string_view b_reg);
void build_bitwise_equivalences(CountedOracle& bit_oracle, StateVector& state,
                                std::string_view x_reg, std::string_view b_reg,
                                BitwiseDirection direction);

// Verification

enum class VerifyMode { ExhaustiveBasis, RandomState };

std::string_view to_string(VerifyMode mode);

struct IdentityCheckResult {
  std::string identity_name;
  unsigned n = 0;
  VerifyMode mode = VerifyMode::ExhaustiveBasis;
  std::size_t inputs_checked = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  // Queries consumed by one application of the composed circuit, per oracle.
  std::map<std::string, std::uint64_t> queries_used;
  bool passed = false;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::ExhaustiveBasis;
  std::uint64_t seed = 0;           // random-state inputs
  std::size_t random_states = 100;
  // Test hook: the direct (reference) side uses a deliberately wrong function.
  bool inject_fault = false;
};

// The identity names accepted by verify_identity, in reporting order.
const std::vector<std::string>& identity_names();

// Tolerance applied to an identity: 1e-10 where QFT roots of unity are
// involved, 1e-12 otherwise.
double identity_tolerance(std::string_view name);

// Exhaustive mode is limited to n <= 3 (two registers of n qubits); random
// mode to n <= 6. Throws DomainError above the cap and std::invalid_argument
// for unknown names.
IdentityCheckResult verify_identity(std::string_view name, const Permutation& perm,
                                    const VerifyOptions& options = {});

inline constexpr unsigned kExhaustiveCap = 3;
inline constexpr unsigned kRandomStateCap = 6;

}  // namespace oraclebench
