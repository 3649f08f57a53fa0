#include "oraclebench/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "oraclebench/errors.hpp"

namespace oraclebench {

Circuit& Circuit::then(Step forward, Step inverse) {
  steps_.push_back(Gate{std::move(forward), std::move(inverse)});
  return *this;
}

void Circuit::apply(StateVector& state) const {
  for (const auto& g : steps_) g.forward(state);
}

Circuit Circuit::reversed() const {
  Circuit r;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
    r.then(it->inverse, it->forward);
  return r;
}

namespace {

Circuit::Step qft(std::string reg, bool inverse) {
  return [reg = std::move(reg), inverse](StateVector& s) { apply_qft(s, reg, inverse); };
}

Circuit::Step reflection(std::string reg) {
  return [reg = std::move(reg)](StateVector& s) { apply_parity_reflection(s, reg); };
}

Circuit::Step hadamards(std::string reg) {
  return [reg = std::move(reg)](StateVector& s) { apply_hadamard_layer(s, reg); };
}

Circuit::Step two_register_query(CountedOracle& oracle, std::string x, std::string b,
                                 Direction dir) {
  return [&oracle, x = std::move(x), b = std::move(b), dir](StateVector& s) {
    oracle.apply(s, x, b, dir);
  };
}

Circuit::Step minimal_query(CountedOracle& oracle, std::string x, Direction dir) {
  return [&oracle, x = std::move(x), dir](StateVector& s) { oracle.apply(s, x, dir); };
}

void require_kind(const CountedOracle& oracle, OracleKind kind) {
  if (oracle.kind() != kind)
    throw WrongOracleKind("circuit needs a " + std::string(to_string(kind)) +
                          " oracle, got " + std::string(to_string(oracle.kind())));
}

}  // namespace

Circuit phase_from_standard_circuit(CountedOracle& standard, std::string x_reg,
                                    std::string b_reg) {
  require_kind(standard, OracleKind::Standard);
  Circuit c;
  c.then(qft(b_reg, true), qft(b_reg, false));
  c.then(two_register_query(standard, x_reg, b_reg, Direction::Forward),
         two_register_query(standard, x_reg, b_reg, Direction::Inverse));
  c.then(qft(b_reg, false), qft(b_reg, true));
  return c;
}

Circuit standard_from_phase_circuit(CountedOracle& phase, std::string x_reg,
                                    std::string b_reg) {
  require_kind(phase, OracleKind::FourierPhase);
  Circuit c;
  c.then(qft(b_reg, false), qft(b_reg, true));
  c.then(two_register_query(phase, x_reg, b_reg, Direction::Forward),
         two_register_query(phase, x_reg, b_reg, Direction::Inverse));
  c.then(qft(b_reg, true), qft(b_reg, false));
  return c;
}

Circuit inverse_by_reflection_circuit(CountedOracle& oracle, std::string x_reg,
                                      std::string b_reg) {
  if (oracle.kind() != OracleKind::Standard && oracle.kind() != OracleKind::FourierPhase)
    throw WrongOracleKind("reflection conjugation needs a standard or phase oracle");
  Circuit c;
  c.then(reflection(b_reg), reflection(b_reg));
  c.then(two_register_query(oracle, x_reg, b_reg, Direction::Forward),
         two_register_query(oracle, x_reg, b_reg, Direction::Inverse));
  c.then(reflection(b_reg), reflection(b_reg));
  return c;
}

Circuit standard_from_minimal_circuit(CountedOracle& minimal, std::string x_reg,
                                      std::string b_reg) {
  require_kind(minimal, OracleKind::Minimal);
  Circuit c;
  c.then(minimal_query(minimal, x_reg, Direction::Forward),
         minimal_query(minimal, x_reg, Direction::Inverse));
  // subtracting adder undoes A
  c.then(
      [x_reg, b_reg](StateVector& s) { apply_adder(s, x_reg, b_reg); },
      [x_reg, b_reg](StateVector& s) {
        apply_parity_reflection(s, b_reg);
        apply_adder(s, x_reg, b_reg);
        apply_parity_reflection(s, b_reg);
      });
  c.then(minimal_query(minimal, x_reg, Direction::Inverse),
         minimal_query(minimal, x_reg, Direction::Forward));
  return c;
}

Circuit minimal_from_standard_pair_circuit(CountedOracle& standard_f,
                                           CountedOracle& standard_f_inverse,
                                           std::string x_reg, std::string b_reg) {
  require_kind(standard_f, OracleKind::Standard);
  require_kind(standard_f_inverse, OracleKind::Standard);
  Circuit c;
  c.then(two_register_query(standard_f, x_reg, b_reg, Direction::Forward),
         two_register_query(standard_f, x_reg, b_reg, Direction::Inverse));
  c.then([x_reg, b_reg](StateVector& s) { apply_swap(s, x_reg, b_reg); },
         [x_reg, b_reg](StateVector& s) { apply_swap(s, x_reg, b_reg); });
  c.then(two_register_query(standard_f_inverse, x_reg, b_reg, Direction::Inverse),
         two_register_query(standard_f_inverse, x_reg, b_reg, Direction::Forward));
  return c;
}

Circuit bitwise_equivalence_circuit(CountedOracle& bit_oracle, std::string x_reg,
                                    std::string b_reg, BitwiseDirection direction) {
  require_kind(bit_oracle, direction == BitwiseDirection::ToPhase
                               ? OracleKind::BitStandard
                               : OracleKind::BitPhase);
  Circuit c;
  c.then(hadamards(b_reg), hadamards(b_reg));
  c.then(two_register_query(bit_oracle, x_reg, b_reg, Direction::Forward),
         two_register_query(bit_oracle, x_reg, b_reg, Direction::Inverse));
  c.then(hadamards(b_reg), hadamards(b_reg));
  return c;
}

void build_phase_from_standard(CountedOracle& standard, StateVector& state,
                               std::string_view x_reg, std::string_view b_reg) {
  phase_from_standard_circuit(standard, std::string(x_reg), std::string(b_reg))
      .apply(state);
}

void build_standard_from_phase(CountedOracle& phase, StateVector& state,
                               std::string_view x_reg, std::string_view b_reg) {
  standard_from_phase_circuit(phase, std::string(x_reg), std::string(b_reg))
      .apply(state);
}

void build_inverse_by_reflection(CountedOracle& oracle, StateVector& state,
                                 std::string_view x_reg, std::string_view b_reg) {
  inverse_by_reflection_circuit(oracle, std::string(x_reg), std::string(b_reg))
      .apply(state);
}

void build_standard_from_minimal(CountedOracle& minimal, StateVector& state,
                                 std::string_view x_reg, std::string_view b_reg) {
  standard_from_minimal_circuit(minimal, std::string(x_reg), std::string(b_reg))
      .apply(state);
}

void build_minimal_from_standard_pair(CountedOracle& standard_f,
                                      CountedOracle& standard_f_inverse,
                                      StateVector& state, std::string_view x_reg,
                                      std::string_view b_reg) {
  minimal_from_standard_pair_circuit(standard_f, standard_f_inverse,
                                     std::string(x_reg), std::string(b_reg))
      .apply(state);
}

void build_bitwise_equivalences(CountedOracle& bit_oracle, StateVector& state,
                                std::string_view x_reg, std::string_view b_reg,
                                BitwiseDirection direction) {
  bitwise_equivalence_circuit(bit_oracle, std::string(x_reg), std::string(b_reg),
                              direction)
      .apply(state);
}

std::string_view to_string(VerifyMode mode) {
  return mode == VerifyMode::ExhaustiveBasis ? "exhaustive" : "random";
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "phase_from_standard",          "standard_from_phase",
      "standard_inverse_by_reflection", "phase_inverse_by_reflection",
      "standard_from_minimal",        "minimal_from_standard_pair",
      "bit_phase_from_bit_standard",  "bit_standard_from_bit_phase",
  };
  return names;
}

double identity_tolerance(std::string_view name) {
  if (name == "phase_from_standard" || name == "standard_from_phase" ||
      name == "phase_inverse_by_reflection")
    return 1e-10;
  return 1e-12;
}

namespace {

constexpr const char* kX = "x";
constexpr const char* kB = "b";

// One identity under test: a composed circuit built from fresh oracles, and
// the oracle it is supposed to equal.
struct IdentityCase {
  // Runs composed circuit on `state`, returns queries used keyed by oracle.
  std::function<std::map<std::string, std::uint64_t>(StateVector&)> composed;
  std::function<void(StateVector&)> direct;
  // Inputs restricted to b = |0> (the ancilla reading of M_f (x) I).
  bool ancilla_zero_inputs = false;
};

std::map<std::string, std::uint64_t> direction_counts(const std::string& label,
                                                      const CountedOracle& o) {
  std::map<std::string, std::uint64_t> out;
  if (o.forward_queries()) out[label] = o.forward_queries();
  if (o.inverse_queries()) out[label + "^-1"] = o.inverse_queries();
  return out;
}

Permutation faulty(const Permutation& perm) {
  std::vector<BasisIndex> images(perm.images().begin(), perm.images().end());
  std::swap(images[0], images[1]);
  return Permutation(perm.bits(), std::move(images));
}

IdentityCase make_case(std::string_view name, const Permutation& perm,
                       const Permutation& reference) {
  IdentityCase c;
  const auto single = [](OracleKind kind, const Permutation& p, const char* label,
                         auto make_circuit) {
    return [kind, p, label, make_circuit](StateVector& s) {
      CountedOracle o(kind, p);
      make_circuit(o).apply(s);
      return direction_counts(label, o);
    };
  };
  const auto direct_two = [](OracleKind kind, const Permutation& p, Direction dir) {
    return [kind, p, dir](StateVector& s) {
      CountedOracle o(kind, p);
      o.apply(s, kX, kB, dir);
    };
  };

  if (name == "phase_from_standard") {
    c.composed = single(OracleKind::Standard, perm, "S_f", [](CountedOracle& o) {
      return phase_from_standard_circuit(o, kX, kB);
    });
    c.direct = direct_two(OracleKind::FourierPhase, reference, Direction::Forward);
  } else if (name == "standard_from_phase") {
    c.composed = single(OracleKind::FourierPhase, perm, "P_f", [](CountedOracle& o) {
      return standard_from_phase_circuit(o, kX, kB);
    });
    c.direct = direct_two(OracleKind::Standard, reference, Direction::Forward);
  } else if (name == "standard_inverse_by_reflection") {
    c.composed = single(OracleKind::Standard, perm, "S_f", [](CountedOracle& o) {
      return inverse_by_reflection_circuit(o, kX, kB);
    });
    c.direct = direct_two(OracleKind::Standard, reference, Direction::Inverse);
  } else if (name == "phase_inverse_by_reflection") {
    c.composed = single(OracleKind::FourierPhase, perm, "P_f", [](CountedOracle& o) {
      return inverse_by_reflection_circuit(o, kX, kB);
    });
    c.direct = direct_two(OracleKind::FourierPhase, reference, Direction::Inverse);
  } else if (name == "standard_from_minimal") {
    c.composed = single(OracleKind::Minimal, perm, "M_f", [](CountedOracle& o) {
      return standard_from_minimal_circuit(o, kX, kB);
    });
    c.direct = direct_two(OracleKind::Standard, reference, Direction::Forward);
  } else if (name == "minimal_from_standard_pair") {
    const Permutation inv = perm.inverse();
    c.composed = [perm, inv](StateVector& s) {
      CountedOracle sf(OracleKind::Standard, perm);
      CountedOracle sfinv(OracleKind::Standard, inv);
      minimal_from_standard_pair_circuit(sf, sfinv, kX, kB).apply(s);
      auto counts = direction_counts("S_f", sf);
      counts.merge(direction_counts("S_finv", sfinv));
      return counts;
    };
    c.direct = [reference](StateVector& s) {
      CountedOracle m(OracleKind::Minimal, reference);
      m.apply(s, kX);
    };
    c.ancilla_zero_inputs = true;
  } else if (name == "bit_phase_from_bit_standard") {
    c.composed = single(OracleKind::BitStandard, perm, "Sbit_f", [](CountedOracle& o) {
      return bitwise_equivalence_circuit(o, kX, kB, BitwiseDirection::ToPhase);
    });
    c.direct = direct_two(OracleKind::BitPhase, reference, Direction::Forward);
  } else if (name == "bit_standard_from_bit_phase") {
    c.composed = single(OracleKind::BitPhase, perm, "Pbit_f", [](CountedOracle& o) {
      return bitwise_equivalence_circuit(o, kX, kB, BitwiseDirection::ToStandard);
    });
    c.direct = direct_two(OracleKind::BitStandard, reference, Direction::Forward);
  } else {
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  }
  return c;
}

StateVector random_input(const RegisterLayout& layout, std::uint64_t seed,
                         bool ancilla_zero) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> amps(layout.dimension());
  const Register& b = layout.at(kB);
  double norm = 0.0;
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (ancilla_zero && (i & b.mask())) continue;
    amps[i] = {gauss(rng), gauss(rng)};
    norm += std::norm(amps[i]);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amps) a *= scale;
  return StateVector::from_amplitudes(layout, std::move(amps));
}

}  // namespace

IdentityCheckResult verify_identity(std::string_view name, const Permutation& perm,
                                    const VerifyOptions& options) {
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  const unsigned n = perm.bits();
  const unsigned cap =
      options.mode == VerifyMode::ExhaustiveBasis ? kExhaustiveCap : kRandomStateCap;
  if (n > cap)
    throw DomainError(std::string(to_string(options.mode)) +
                      " verification is capped at n=" + std::to_string(cap));

  const Permutation reference = options.inject_fault ? faulty(perm) : perm;
  const IdentityCase c = make_case(name, perm, reference);
  const RegisterLayout layout{{kX, n}, {kB, n}};

  IdentityCheckResult result;
  result.identity_name = std::string(name);
  result.n = n;
  result.mode = options.mode;
  result.tolerance = identity_tolerance(name);

  const auto check = [&](const StateVector& input) {
    StateVector composed = input;
    StateVector direct = input;
    auto counts = c.composed(composed);
    c.direct(direct);
    if (result.inputs_checked == 0)
      result.queries_used = counts;
    else if (counts != result.queries_used)
      throw std::logic_error("query usage of '" + result.identity_name +
                             "' varies between inputs");
    result.max_deviation = std::max(result.max_deviation, max_abs_difference(composed, direct));
    ++result.inputs_checked;
  };

  if (options.mode == VerifyMode::ExhaustiveBasis) {
    const BasisIndex dim = BasisIndex{1} << n;
    for (BasisIndex x = 0; x < dim; ++x) {
      const BasisIndex b_max = c.ancilla_zero_inputs ? 1 : dim;
      for (BasisIndex b = 0; b < b_max; ++b)
        check(prepare_basis(layout, {{kX, x}, {kB, b}}));
    }
  } else {
    for (std::size_t i = 0; i < options.random_states; ++i)
      check(random_input(layout, options.seed + i, c.ancilla_zero_inputs));
  }

  result.passed = result.max_deviation <= result.tolerance;
  return result;
}

}  // namespace oraclebench
