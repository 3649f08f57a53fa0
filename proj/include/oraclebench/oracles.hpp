#pragma once

// Black-box oracles over a function table, each counting its invocations.
//
// Two different additions appear here and are never interchangeable:
//   mod-add  b + f(x) mod 2^n   (Standard, FourierPhase)
//   xor      b ^ f(x) bitwise   (BitStandard, BitPhase)

#include <cstdint>
#include <optional>
#include <string_view>

#include "oraclebench/permutation.hpp"
#include "oraclebench/statevector.hpp"

namespace oraclebench {

enum class OracleKind {
  Standard,      // |x>|b> -> |x>|b + f(x) mod N>
  FourierPhase,  // |x>|b> -> exp(2 pi i f(x) b / N) |x>|b>
  Minimal,       // |x> -> |f(x)>, f a bijection
  BitStandard,   // |x>|b> -> |x>|b xor f(x)>
  BitPhase,      // |x>|b> -> (-1)^{popcount(f(x) & b)} |x>|b>
};

enum class Direction { Forward, Inverse };

std::string_view to_string(OracleKind kind);

// An oracle box for one function. Every forward or inverse application counts
// as one query; the counter only moves forward (or back to zero on reset).
class CountedOracle {
 public:
  // Throws NotAPermutation for OracleKind::Minimal over a non-bijection.
  CountedOracle(OracleKind kind, FunctionTable f);
  CountedOracle(OracleKind kind, const Permutation& f);

  OracleKind kind() const { return kind_; }
  const FunctionTable& function() const { return f_; }
  unsigned bits() const { return f_.bits(); }

  std::uint64_t query_count() const { return forward_queries_ + inverse_queries_; }
  std::uint64_t forward_queries() const { return forward_queries_; }
  std::uint64_t inverse_queries() const { return inverse_queries_; }
  void reset_count() { forward_queries_ = inverse_queries_ = 0; }

  // Two-register kinds. Both registers must have width n.
  void apply(StateVector& state, std::string_view x_reg, std::string_view b_reg,
             Direction dir = Direction::Forward);
  // Minimal kind. The register must have width n.
  void apply(StateVector& state, std::string_view x_reg,
             Direction dir = Direction::Forward);

 private:
  void check_width(const StateVector& state, std::string_view reg) const;
  void count(Direction dir);

  OracleKind kind_;
  FunctionTable f_;
  std::optional<Permutation> perm_;

  std::uint64_t forward_queries_ = 0;
  std::uint64_t inverse_queries_ = 0;
};

// Kind-checked entry points; each throws WrongOracleKind on mismatch.
void apply_standard(CountedOracle& oracle, StateVector& state, std::string_view x_reg,
                    std::string_view b_reg);
void apply_standard_inverse(CountedOracle& oracle, StateVector& state,
                            std::string_view x_reg, std::string_view b_reg);
void apply_phase(CountedOracle& oracle, StateVector& state, std::string_view x_reg,
                 std::string_view b_reg);
void apply_phase_inverse(CountedOracle& oracle, StateVector& state,
                         std::string_view x_reg, std::string_view b_reg);
void apply_minimal(CountedOracle& oracle, StateVector& state, std::string_view x_reg);
void apply_minimal_inverse(CountedOracle& oracle, StateVector& state,
                           std::string_view x_reg);
void apply_bit_standard(CountedOracle& oracle, StateVector& state,
                        std::string_view x_reg, std::string_view b_reg);
void apply_bit_phase(CountedOracle& oracle, StateVector& state, std::string_view x_reg,
                     std::string_view b_reg);

inline std::uint64_t query_count(const CountedOracle& oracle) {
  return oracle.query_count();
}

}  // namespace oraclebench
