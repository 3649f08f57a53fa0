#include "oraclebench/oracles.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "oraclebench/errors.hpp"

namespace oraclebench {

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::Standard:
      return "standard";
    case OracleKind::FourierPhase:
      return "fourier_phase";
    case OracleKind::Minimal:
      return "minimal";
    case OracleKind::BitStandard:
      return "bit_standard";
    case OracleKind::BitPhase:
      return "bit_phase";
  }
  return "unknown";
}

CountedOracle::CountedOracle(OracleKind kind, FunctionTable f)
    : kind_(kind), f_(std::move(f)) {
  if (kind_ == OracleKind::Minimal) perm_.emplace(f_);
}

CountedOracle::CountedOracle(OracleKind kind, const Permutation& f)
    : kind_(kind), f_(f.table()) {
  if (kind_ == OracleKind::Minimal) perm_.emplace(f);
}

void CountedOracle::check_width(const StateVector& state, std::string_view reg) const {
  const Register& r = state.layout().at(reg);
  if (r.width != bits())
    throw LayoutError("register '" + r.name + "' has width " + std::to_string(r.width) +
                      " but the oracle acts on " + std::to_string(bits()) + " qubits");
}

void CountedOracle::apply(StateVector& state, std::string_view x_reg,
                          std::string_view b_reg, Direction dir) {
  if (kind_ == OracleKind::Minimal)
    throw WrongOracleKind("minimal oracle acts on a single register");
  check_width(state, x_reg);
  check_width(state, b_reg);
  if (x_reg == b_reg) throw LayoutError("oracle input and output registers coincide");

  const BasisIndex dim = f_.domain_size();
  const BasisIndex mask = dim - 1;
  const std::string_view regs[] = {x_reg, b_reg};
  const bool inverse = dir == Direction::Inverse;

  switch (kind_) {
    case OracleKind::Standard:
    case OracleKind::BitStandard: {
      std::vector<BasisIndex> dest(dim * dim);
      for (BasisIndex x = 0; x < dim; ++x) {
        const BasisIndex fx = f_(x);
        for (BasisIndex b = 0; b < dim; ++b) {
          BasisIndex out;
          if (kind_ == OracleKind::BitStandard)
            out = b ^ fx;
          else
            out = inverse ? (b - fx) & mask : (b + fx) & mask;
          dest[x * dim + b] = x * dim + out;
        }
      }
      permute_register_blocks(state, regs, dest);
      break;
    }
    case OracleKind::FourierPhase: {
      // exponent f(x) * b reduced mod N before conversion keeps the angle exact
      const double sign = inverse ? -1.0 : 1.0;
      std::vector<Amplitude> roots(dim);
      for (BasisIndex m = 0; m < dim; ++m)
        roots[m] = std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                       static_cast<double>(m) /
                                       static_cast<double>(dim));
      std::vector<Amplitude> phases(dim * dim);
      for (BasisIndex x = 0; x < dim; ++x)
        for (BasisIndex b = 0; b < dim; ++b)
          phases[x * dim + b] = roots[(f_(x) * b) & mask];
      apply_register_diagonal(state, regs, phases);
      break;
    }
    case OracleKind::BitPhase: {
      std::vector<Amplitude> phases(dim * dim);
      for (BasisIndex x = 0; x < dim; ++x)
        for (BasisIndex b = 0; b < dim; ++b)
          phases[x * dim + b] = (std::popcount(f_(x) & b) & 1) ? -1.0 : 1.0;
      apply_register_diagonal(state, regs, phases);
      break;
    }
    case OracleKind::Minimal:
      break;
  }
  count(dir);
}

void CountedOracle::apply(StateVector& state, std::string_view x_reg, Direction dir) {
  if (kind_ != OracleKind::Minimal)
    throw WrongOracleKind(std::string(to_string(kind_)) +
                          " oracle needs an input and an output register");
  check_width(state, x_reg);
  const std::string_view regs[] = {x_reg};
  if (dir == Direction::Forward) {
    permute_register_blocks(state, regs, perm_->images());
  } else {
    const Permutation inv = perm_->inverse();
    permute_register_blocks(state, regs, inv.images());
  }
  count(dir);
}

void CountedOracle::count(Direction dir) {
  if (dir == Direction::Forward)
    ++forward_queries_;
  else
    ++inverse_queries_;
}

namespace {

void require_kind(const CountedOracle& oracle, OracleKind kind) {
  if (oracle.kind() != kind)
    throw WrongOracleKind("expected a " + std::string(to_string(kind)) +
                          " oracle, got " + std::string(to_string(oracle.kind())));
}

}  // namespace

void apply_standard(CountedOracle& oracle, StateVector& state, std::string_view x_reg,
                    std::string_view b_reg) {
  require_kind(oracle, OracleKind::Standard);
  oracle.apply(state, x_reg, b_reg, Direction::Forward);
}

void apply_standard_inverse(CountedOracle& oracle, StateVector& state,
                            std::string_view x_reg, std::string_view b_reg) {
  require_kind(oracle, OracleKind::Standard);
  oracle.apply(state, x_reg, b_reg, Direction::Inverse);
}

void apply_phase(CountedOracle& oracle, StateVector& state, std::string_view x_reg,
                 std::string_view b_reg) {
  require_kind(oracle, OracleKind::FourierPhase);
  oracle.apply(state, x_reg, b_reg, Direction::Forward);
}

void apply_phase_inverse(CountedOracle& oracle, StateVector& state,
                         std::string_view x_reg, std::string_view b_reg) {
  require_kind(oracle, OracleKind::FourierPhase);
  oracle.apply(state, x_reg, b_reg, Direction::Inverse);
}

void apply_minimal(CountedOracle& oracle, StateVector& state, std::string_view x_reg) {
  require_kind(oracle, OracleKind::Minimal);
  oracle.apply(state, x_reg, Direction::Forward);
}

void apply_minimal_inverse(CountedOracle& oracle, StateVector& state,
                           std::string_view x_reg) {
  require_kind(oracle, OracleKind::Minimal);
  oracle.apply(state, x_reg, Direction::Inverse);
}

void apply_bit_standard(CountedOracle& oracle, StateVector& state,
                        std::string_view x_reg, std::string_view b_reg) {
  require_kind(oracle, OracleKind::BitStandard);
  oracle.apply(state, x_reg, b_reg, Direction::Forward);
}

void apply_bit_phase(CountedOracle& oracle, StateVector& state, std::string_view x_reg,
                     std::string_view b_reg) {
  require_kind(oracle, OracleKind::BitPhase);
  oracle.apply(state, x_reg, b_reg, Direction::Forward);
}

}  // namespace oraclebench
