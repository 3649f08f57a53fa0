#pragma once

// Dense statevector simulation over a layout of named registers.
//
// Basis encoding is big-endian throughout: the register listed first in a
// layout occupies the most significant bits of the basis index, and inside a
// register qubit 0 is the most significant bit. A layout [(x,n),(b,n)] thus
// stores |x>|b> at index x * 2^n + b.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oraclebench {

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;

inline constexpr unsigned kMaxQubits = 28;

struct Tolerance {
  double abs_eps = 1e-10;    // anything involving QFT roots of unity
  double exact_eps = 1e-12;  // pure basis permutations, Hadamards

  // Throws DomainError unless 0 < exact_eps <= abs_eps < 1e-3.
  void validate() const;
};

struct Register {
  std::string name;
  unsigned width = 0;
  unsigned shift = 0;  // bit position of the register's least significant bit

  BasisIndex dimension() const { return BasisIndex{1} << width; }
  BasisIndex mask() const { return (dimension() - 1) << shift; }
};

class RegisterLayout {
 public:
  RegisterLayout() = default;
  RegisterLayout(std::initializer_list<std::pair<std::string, unsigned>> regs);
  explicit RegisterLayout(std::vector<std::pair<std::string, unsigned>> regs);

  const Register& at(std::string_view name) const;
  bool contains(std::string_view name) const;
  unsigned total_qubits() const { return total_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << total_qubits_; }
  std::span<const Register> registers() const { return registers_; }

  // Registers absent from `values` encode as 0.
  BasisIndex encode(const std::map<std::string, BasisIndex>& values) const;
  BasisIndex extract(BasisIndex index, std::string_view name) const;

  // Concatenation; register names must stay unique.
  RegisterLayout concat(const RegisterLayout& other) const;

  friend bool operator==(const RegisterLayout& a, const RegisterLayout& b);

 private:
  std::vector<Register> registers_;
  unsigned total_qubits_ = 0;
};

// A single qubit addressed as (register, qubit index within the register).
struct QubitRef {
  std::string reg;
  unsigned qubit = 0;
};

class StateVector {
 public:
  // |0...0>
  explicit StateVector(RegisterLayout layout);
  static StateVector from_amplitudes(RegisterLayout layout,
                                     std::vector<Amplitude> amplitudes);

  const RegisterLayout& layout() const { return layout_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<Amplitude> amplitudes() { return amplitudes_; }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude& operator[](BasisIndex i) { return amplitudes_[i]; }
  const Amplitude& operator[](BasisIndex i) const { return amplitudes_[i]; }

  double norm_squared() const;

 private:
  StateVector(RegisterLayout layout, std::vector<Amplitude> amplitudes);

  RegisterLayout layout_;
  std::vector<Amplitude> amplitudes_;
};

StateVector prepare_basis(const RegisterLayout& layout,
                          const std::map<std::string, BasisIndex>& values);

// |a> (x) |b> over the concatenated layout.
StateVector tensor_product(const StateVector& a, const StateVector& b);

// <a|b>; layouts must have equal dimension.
Amplitude inner_product(const StateVector& a, const StateVector& b);
double max_abs_difference(const StateVector& a, const StateVector& b);

// Enumerates the basis-index blocks spanned by a list of registers. Each
// block fixes every qubit outside the registers (the "context"); inside a
// block the local index orders the listed registers big-endian, first listed
// most significant.
class RegisterBlocks {
 public:
  RegisterBlocks(const RegisterLayout& layout,
                 std::span<const std::string_view> registers);

  std::size_t block_size() const { return offsets_.size(); }
  std::size_t block_count() const { return std::size_t{1} << context_bits_; }
  BasisIndex offset(BasisIndex local) const { return offsets_[local]; }
  BasisIndex base(std::size_t context) const;

 private:
  struct Run {
    unsigned position;
    unsigned length;
  };
  std::vector<BasisIndex> offsets_;
  std::vector<Run> context_runs_;
  unsigned context_bits_ = 0;
};

// Gathers each block into a scratch buffer, hands it to `fn`, scatters back.
void transform_register_blocks(StateVector& state,
                               std::span<const std::string_view> registers,
                               const std::function<void(std::span<Amplitude>)>& fn);

// Basis permutation local -> destination[local] within every block.
// Throws DomainError if destination is not a bijection of the block.
void permute_register_blocks(StateVector& state,
                             std::span<const std::string_view> registers,
                             std::span<const BasisIndex> destination);

// Multiplies local basis state l of every block by phases[l].
void apply_register_diagonal(StateVector& state,
                             std::span<const std::string_view> registers,
                             std::span<const Amplitude> phases);

void apply_hadamard(StateVector& state, std::string_view reg, unsigned qubit);

// The tensor product H (x) ... (x) H over every qubit of `reg`.
void apply_hadamard_layer(StateVector& state, std::string_view reg);

// Dense DFT |j> -> N^{-1/2} sum_k exp(2 pi i jk/N) |k>; `inverse` conjugates.
void apply_qft(StateVector& state, std::string_view reg, bool inverse = false);

// |j> -> |(N - j) mod N>
void apply_parity_reflection(StateVector& state, std::string_view reg);

void apply_controlled_swap(StateVector& state, const QubitRef& control,
                           std::string_view reg_a, std::string_view reg_b);

// Flips `flag` exactly on basis states where reg_a and reg_b hold equal values.
void apply_equality_comparator(StateVector& state, std::string_view reg_a,
                               std::string_view reg_b, const QubitRef& flag);

// |a>|b> -> |a>|(a + b) mod N>
void apply_adder(StateVector& state, std::string_view src, std::string_view dst);

void apply_swap(StateVector& state, std::string_view reg_a, std::string_view reg_b);

// Probability that `reg` holds `value`. Throws ContractViolation when the
// state is not normalized within 1e-10.
double measure_probability(const StateVector& state, std::string_view reg,
                           BasisIndex value);
std::vector<double> register_distribution(const StateVector& state,
                                          std::string_view reg);

struct MeasurementResult {
  BasisIndex value;
  StateVector collapsed;
};

// Deterministic in `seed`.
MeasurementResult sample_measurement(const StateVector& state, std::string_view reg,
                                     std::uint64_t seed);

// Uniform draw in [0, 1) with 53 random bits; independent of the standard
// library's distribution implementations.
double uniform_unit(std::uint64_t seed);

}  // namespace oraclebench
