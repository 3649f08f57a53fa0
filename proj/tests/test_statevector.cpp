#include <doctest.h>

#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oraclebench/errors.hpp"
#include "oraclebench/statevector.hpp"
#include "test_support.hpp"

using namespace oraclebench;
using oraclebench::testing::basis_image;
using oraclebench::testing::basis_state;
using oraclebench::testing::combine;
using oraclebench::testing::random_state;

namespace {

constexpr double kExact = 1e-12;
constexpr double kAbs = 1e-10;

struct NamedGate {
  std::string name;
  std::function<void(StateVector&)> apply;
};

// Every gate acting on layout [a(n), b(n), c(1)].
std::vector<NamedGate> gate_catalogue(unsigned n) {
  std::vector<NamedGate> gates = {
      {"hadamard", [](StateVector& s) { apply_hadamard(s, "a", 0); }},
      {"hadamard_layer", [](StateVector& s) { apply_hadamard_layer(s, "b"); }},
      {"qft", [](StateVector& s) { apply_qft(s, "a"); }},
      {"qft_inverse", [](StateVector& s) { apply_qft(s, "b", true); }},
      {"parity_reflection", [](StateVector& s) { apply_parity_reflection(s, "a"); }},
      {"controlled_swap",
       [](StateVector& s) { apply_controlled_swap(s, QubitRef{"c", 0}, "a", "b"); }},
      {"equality_comparator",
       [](StateVector& s) { apply_equality_comparator(s, "a", "b", QubitRef{"c", 0}); }},
      {"adder", [](StateVector& s) { apply_adder(s, "a", "b"); }},
      {"swap", [](StateVector& s) { apply_swap(s, "a", "b"); }},
  };
  if (n > 1)
    gates.push_back({"hadamard_last", [n](StateVector& s) { apply_hadamard(s, "b", n - 1); }});
  return gates;
}

}  // namespace

TEST_CASE("layout validation and big-endian encoding") {
  const RegisterLayout layout{{"a", 2}, {"b", 2}};
  CHECK(layout.total_qubits() == 4);
  CHECK(layout.at("a").shift == 2);
  CHECK(layout.at("b").shift == 0);
  CHECK(layout.encode({{"a", 1}, {"b", 0}}) == 4);
  CHECK(layout.extract(0b1110, "a") == 3);
  CHECK(layout.extract(0b1110, "b") == 2);

  CHECK_THROWS_AS((RegisterLayout{{"a", 1}, {"a", 2}}), LayoutError);
  CHECK_THROWS_AS((RegisterLayout{{"a", 0}}), LayoutError);
  CHECK_THROWS_AS(layout.at("zz"), LayoutError);
}

TEST_CASE("tolerance invariants") {
  CHECK_NOTHROW(Tolerance{}.validate());
  CHECK_THROWS_AS((Tolerance{1e-12, 1e-10}.validate()), DomainError);
  CHECK_THROWS_AS((Tolerance{1e-2, 1e-12}.validate()), DomainError);
  CHECK_THROWS_AS((Tolerance{1e-10, 0.0}.validate()), DomainError);
}

TEST_CASE("prepare_basis") {
  const RegisterLayout ab{{"a", 2}, {"b", 2}};
  const StateVector s = prepare_basis(ab, {{"a", 1}, {"b", 0}});
  for (BasisIndex i = 0; i < s.size(); ++i) CHECK(s[i] == Amplitude(i == 4 ? 1.0 : 0.0));

  const StateVector zero = prepare_basis(RegisterLayout{{"a", 1}}, {{"a", 0}});
  CHECK(zero[0] == Amplitude(1.0));
  CHECK(zero[1] == Amplitude(0.0));

  CHECK_THROWS_AS(prepare_basis(RegisterLayout{{"a", 3}}, {{"a", 8}}), DomainError);
}

TEST_CASE("single-qubit hadamard") {
  const RegisterLayout one{{"q", 1}};
  StateVector s = prepare_basis(one, {});
  apply_hadamard(s, "q", 0);
  CHECK(std::abs(s[0] - (1.0 / std::numbers::sqrt2)) < kExact);
  CHECK(std::abs(s[1] - (1.0 / std::numbers::sqrt2)) < kExact);

  StateVector minus = StateVector::from_amplitudes(
      one, {(1.0 / std::numbers::sqrt2), -(1.0 / std::numbers::sqrt2)});
  apply_hadamard(minus, "q", 0);
  CHECK(std::abs(minus[0]) < kExact);
  CHECK(std::abs(minus[1] - 1.0) < kExact);

  const RegisterLayout l{{"a", 3}, {"b", 2}};
  const StateVector r = random_state(l, 11);
  StateVector twice = r;
  apply_hadamard(twice, "a", 1);
  apply_hadamard(twice, "a", 1);
  CHECK(max_abs_difference(r, twice) < kExact);

  CHECK_THROWS_AS(apply_hadamard(twice, "a", 3), DomainError);
  CHECK_THROWS_AS(apply_hadamard(twice, "nope", 0), LayoutError);
}

TEST_CASE("qubit 0 is the most significant bit of its register") {
  const RegisterLayout l{{"a", 3}};
  StateVector s = prepare_basis(l, {});
  apply_hadamard(s, "a", 0);
  CHECK(std::abs(s[0b100] - (1.0 / std::numbers::sqrt2)) < kExact);
  CHECK(std::abs(s[0b001]) < kExact);
}

TEST_CASE("hadamard layer") {
  const RegisterLayout l{{"x", 3}};
  StateVector s = prepare_basis(l, {});
  apply_hadamard_layer(s, "x");
  for (BasisIndex i = 0; i < 8; ++i) CHECK(std::abs(s[i] - 1.0 / std::sqrt(8.0)) < kExact);

  // |x> -> sum_b (-1)^{x.b} |b> / sqrt(N)
  for (BasisIndex x = 0; x < 8; ++x) {
    StateVector t = prepare_basis(l, {{"x", x}});
    apply_hadamard_layer(t, "x");
    for (BasisIndex b = 0; b < 8; ++b) {
      const double expected = (std::popcount(x & b) % 2 ? -1.0 : 1.0) / std::sqrt(8.0);
      CHECK(std::abs(t[b] - expected) < kExact);
    }
  }

  const RegisterLayout two{{"x", 3}, {"y", 2}};
  const StateVector r = random_state(two, 5);
  StateVector twice = r;
  apply_hadamard_layer(twice, "x");
  apply_hadamard_layer(twice, "x");
  CHECK(max_abs_difference(r, twice) < kExact);
  CHECK_THROWS_AS(apply_hadamard_layer(twice, "z"), LayoutError);
}

TEST_CASE("qft examples") {
  SUBCASE("n=1 equals hadamard") {
    const RegisterLayout l{{"q", 1}};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      StateVector a = random_state(l, seed);
      StateVector b = a;
      apply_qft(a, "q");
      apply_hadamard(b, "q", 0);
      CHECK(max_abs_difference(a, b) < kExact);
    }
  }
  SUBCASE("|0> on n=2") {
    StateVector s = prepare_basis(RegisterLayout{{"q", 2}}, {});
    apply_qft(s, "q");
    for (BasisIndex k = 0; k < 4; ++k) CHECK(std::abs(s[k] - 0.5) < kExact);
  }
  SUBCASE("F then F^-1") {
    const RegisterLayout l{{"a", 2}, {"q", 4}};
    const StateVector r = random_state(l, 3);
    StateVector s = r;
    apply_qft(s, "q");
    apply_qft(s, "q", true);
    CHECK(max_abs_difference(r, s) < kAbs);
  }
}

TEST_CASE("qft matrix matches the DFT formula entrywise") {
  for (unsigned n = 1; n <= 3; ++n) {
    const RegisterLayout l{{"q", n}};
    const BasisIndex N = BasisIndex{1} << n;
    for (BasisIndex j = 0; j < N; ++j) {
      StateVector col = prepare_basis(l, {{"q", j}});
      apply_qft(col, "q");
      StateVector inv = prepare_basis(l, {{"q", j}});
      apply_qft(inv, "q", true);
      for (BasisIndex k = 0; k < N; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                             static_cast<double>(N);
        const Amplitude expected = std::exp(Amplitude(0.0, angle)) / std::sqrt(double(N));
        CHECK(std::abs(col[k] - expected) < kExact);
        CHECK(std::abs(inv[k] - std::conj(expected)) < kExact);
      }
    }
  }
}

TEST_CASE("qft acts on the named register only") {
  const RegisterLayout l{{"a", 2}, {"q", 2}, {"c", 1}};
  StateVector s = prepare_basis(l, {{"a", 3}, {"q", 1}, {"c", 1}});
  apply_qft(s, "q");
  for (BasisIndex k = 0; k < 4; ++k) {
    const BasisIndex idx = l.encode({{"a", 3}, {"q", k}, {"c", 1}});
    const Amplitude expected =
        std::exp(Amplitude(0.0, 2.0 * std::numbers::pi * double(k) / 4.0)) / 2.0;
    CHECK(std::abs(s[idx] - expected) < kExact);
  }
}

TEST_CASE("parity reflection") {
  StateVector s = prepare_basis(RegisterLayout{{"q", 2}}, {});
  apply_parity_reflection(s, "q");
  CHECK(s[0] == Amplitude(1.0));

  const RegisterLayout l{{"q", 2}};
  CHECK(basis_image(l, 3, [](StateVector& t) { apply_parity_reflection(t, "q"); }) == 1);

  for (unsigned n = 1; n <= 4; ++n) {
    const RegisterLayout ln{{"p", 1}, {"q", n}};
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const StateVector r = random_state(ln, seed);
      StateVector via_r = r;
      StateVector via_ff = r;
      apply_parity_reflection(via_r, "q");
      apply_qft(via_ff, "q");
      apply_qft(via_ff, "q");
      CHECK(max_abs_difference(via_r, via_ff) < kAbs);
    }
  }
}

TEST_CASE("controlled swap") {
  const RegisterLayout l{{"c", 1}, {"a", 3}, {"b", 3}};
  const auto op = [](StateVector& s) { apply_controlled_swap(s, QubitRef{"c", 0}, "a", "b"); };
  CHECK(basis_image(l, l.encode({{"c", 0}, {"a", 5}, {"b", 2}}), op) ==
        static_cast<long long>(l.encode({{"c", 0}, {"a", 5}, {"b", 2}})));
  CHECK(basis_image(l, l.encode({{"c", 1}, {"a", 5}, {"b", 2}}), op) ==
        static_cast<long long>(l.encode({{"c", 1}, {"a", 2}, {"b", 5}})));

  StateVector s = prepare_basis(l, {{"c", 1}, {"a", 5}, {"b", 2}});
  op(s);
  op(s);
  CHECK(s[l.encode({{"c", 1}, {"a", 5}, {"b", 2}})] == Amplitude(1.0));

  const RegisterLayout bad{{"c", 1}, {"a", 2}, {"b", 3}};
  StateVector t(bad);
  CHECK_THROWS_AS(apply_controlled_swap(t, QubitRef{"c", 0}, "a", "b"), LayoutError);
  StateVector u(l);
  CHECK_THROWS_AS(apply_controlled_swap(u, QubitRef{"a", 0}, "a", "b"), LayoutError);
  CHECK_THROWS_AS(apply_controlled_swap(u, QubitRef{"c", 0}, "a", "a"), LayoutError);
}

TEST_CASE("equality comparator") {
  const RegisterLayout l{{"a", 2}, {"b", 2}, {"f", 1}};
  const auto op = [](StateVector& s) { apply_equality_comparator(s, "a", "b", QubitRef{"f", 0}); };
  CHECK(basis_image(l, l.encode({{"a", 3}, {"b", 3}, {"f", 0}}), op) ==
        static_cast<long long>(l.encode({{"a", 3}, {"b", 3}, {"f", 1}})));
  CHECK(basis_image(l, l.encode({{"a", 3}, {"b", 2}, {"f", 0}}), op) ==
        static_cast<long long>(l.encode({{"a", 3}, {"b", 2}, {"f", 0}})));

  const RegisterLayout bad{{"a", 2}, {"b", 1}, {"f", 1}};
  StateVector t(bad);
  CHECK_THROWS_AS(apply_equality_comparator(t, "a", "b", QubitRef{"f", 0}), LayoutError);
  StateVector u(l);
  CHECK_THROWS_AS(apply_equality_comparator(u, "a", "b", QubitRef{"a", 1}), LayoutError);
}

TEST_CASE("comparator and controlled swap are involutions on every basis state") {
  for (unsigned n = 1; n <= 3; ++n) {
    const RegisterLayout l{{"a", n}, {"b", n}, {"c", 1}};
    for (BasisIndex i = 0; i < l.dimension(); ++i) {
      const auto cmp2 = [](StateVector& s) {
        apply_equality_comparator(s, "a", "b", QubitRef{"c", 0});
        apply_equality_comparator(s, "a", "b", QubitRef{"c", 0});
      };
      const auto cswap2 = [](StateVector& s) {
        apply_controlled_swap(s, QubitRef{"c", 0}, "a", "b");
        apply_controlled_swap(s, QubitRef{"c", 0}, "a", "b");
      };
      CHECK(basis_image(l, i, cmp2) == static_cast<long long>(i));
      CHECK(basis_image(l, i, cswap2) == static_cast<long long>(i));
    }
  }
}

TEST_CASE("adder") {
  const RegisterLayout l{{"a", 2}, {"b", 2}};
  const auto add = [](StateVector& s) { apply_adder(s, "a", "b"); };
  CHECK(basis_image(l, l.encode({{"a", 3}, {"b", 2}}), add) ==
        static_cast<long long>(l.encode({{"a", 3}, {"b", 1}})));
  for (BasisIndex b = 0; b < 4; ++b)
    CHECK(basis_image(l, l.encode({{"b", b}}), add) == static_cast<long long>(b));

  // brute force: A^N = I on all 16 basis states
  for (BasisIndex i = 0; i < 16; ++i) {
    const auto add_n = [](StateVector& s) {
      for (int k = 0; k < 4; ++k) apply_adder(s, "a", "b");
    };
    CHECK(basis_image(l, i, add_n) == static_cast<long long>(i));
  }

  StateVector t(RegisterLayout{{"a", 2}, {"b", 3}});
  CHECK_THROWS_AS(apply_adder(t, "a", "b"), LayoutError);
}

TEST_CASE("swap") {
  const RegisterLayout l{{"a", 3}, {"b", 3}};
  const auto swap = [](StateVector& s) { apply_swap(s, "a", "b"); };
  CHECK(basis_image(l, l.encode({{"a", 5}, {"b", 2}}), swap) ==
        static_cast<long long>(l.encode({{"a", 2}, {"b", 5}})));
  CHECK(basis_image(l, l.encode({{"a", 4}, {"b", 4}}), swap) ==
        static_cast<long long>(l.encode({{"a", 4}, {"b", 4}})));
  const StateVector r = random_state(l, 9);
  StateVector s = r;
  swap(s);
  swap(s);
  CHECK(max_abs_difference(r, s) < kExact);
}

TEST_CASE("measure_probability") {
  const RegisterLayout l{{"x", 3}, {"y", 1}};
  const StateVector three = prepare_basis(l, {{"x", 3}});
  CHECK(measure_probability(three, "x", 3) == 1.0);

  StateVector uniform = prepare_basis(l, {});
  apply_hadamard_layer(uniform, "x");
  for (BasisIndex v = 0; v < 8; ++v)
    CHECK(std::abs(measure_probability(uniform, "x", v) - 0.125) < kExact);

  const StateVector r = random_state(l, 21);
  double total = 0.0;
  for (BasisIndex v = 0; v < 8; ++v) total += measure_probability(r, "x", v);
  CHECK(std::abs(total - 1.0) < kAbs);

  CHECK_THROWS_AS(measure_probability(r, "x", 8), DomainError);
  const StateVector unnormalized =
      StateVector::from_amplitudes(RegisterLayout{{"x", 1}}, {1.0, 1.0});
  CHECK_THROWS_AS(measure_probability(unnormalized, "x", 0), ContractViolation);
}

TEST_CASE("sample_measurement") {
  const RegisterLayout l{{"x", 2}, {"y", 1}};
  const StateVector one = prepare_basis(l, {{"x", 1}});
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    CHECK(sample_measurement(one, "x", seed).value == 1);

  StateVector half = prepare_basis(RegisterLayout{{"q", 1}}, {});
  apply_hadamard(half, "q", 0);
  const double p = measure_probability(half, "q", 1);
  std::uint64_t ones = 0;
  constexpr std::uint64_t samples = 100000;
  for (std::uint64_t seed = 0; seed < samples; ++seed)
    ones += sample_measurement(half, "q", seed).value;
  CHECK(std::abs(static_cast<double>(ones) / samples - p) < 0.01);

  const StateVector r = random_state(l, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = sample_measurement(r, "x", seed);
    const auto b = sample_measurement(r, "x", seed);
    CHECK(a.value == b.value);
    CHECK(max_abs_difference(a.collapsed, b.collapsed) == 0.0);
    CHECK(std::abs(a.collapsed.norm_squared() - 1.0) < kAbs);
    CHECK(std::abs(measure_probability(a.collapsed, "x", a.value) - 1.0) < kAbs);
  }

  const StateVector zero =
      StateVector::from_amplitudes(RegisterLayout{{"q", 1}}, {0.0, 0.0});
  CHECK_THROWS_AS(sample_measurement(zero, "q", 1), ContractViolation);
}

TEST_CASE("every gate preserves the norm on random states") {
  for (unsigned n = 1; n <= 4; ++n) {
    const RegisterLayout l{{"a", n}, {"b", n}, {"c", 1}};
    for (const auto& gate : gate_catalogue(n)) {
      CAPTURE(gate.name);
      CAPTURE(n);
      double worst = 0.0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        StateVector s = random_state(l, 1000 * n + seed);
        gate.apply(s);
        worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
      }
      CHECK(worst < kExact);
    }
  }
}

TEST_CASE("every gate is linear") {
  const Amplitude alpha(0.6, -0.3);
  const Amplitude beta(-0.2, 0.7);
  for (unsigned n = 1; n <= 3; ++n) {
    const RegisterLayout l{{"a", n}, {"b", n}, {"c", 1}};
    for (const auto& gate : gate_catalogue(n)) {
      CAPTURE(gate.name);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        StateVector psi = random_state(l, 2 * seed);
        StateVector phi = random_state(l, 2 * seed + 1);
        StateVector mixed = combine(psi, alpha, phi, beta);
        gate.apply(psi);
        gate.apply(phi);
        gate.apply(mixed);
        CHECK(max_abs_difference(mixed, combine(psi, alpha, phi, beta)) < kExact);
      }
    }
  }
}

TEST_CASE("register blocks enumerate every index exactly once") {
  const RegisterLayout l{{"a", 2}, {"b", 1}, {"c", 3}, {"d", 2}};
  const std::string_view regs[] = {"c", "a"};
  const RegisterBlocks blocks(l, regs);
  CHECK(blocks.block_size() == 32);
  CHECK(blocks.block_count() == 8);
  std::vector<int> hits(l.dimension(), 0);
  for (std::size_t c = 0; c < blocks.block_count(); ++c)
    for (BasisIndex local = 0; local < blocks.block_size(); ++local)
      ++hits[blocks.base(c) + blocks.offset(local)];
  for (int h : hits) CHECK(h == 1);
  // local index orders c before a
  CHECK(blocks.offset(1) == (BasisIndex{1} << l.at("a").shift));
  CHECK(blocks.offset(4) == (BasisIndex{1} << l.at("c").shift));
}

TEST_CASE("tensor product and inner product") {
  const StateVector a = random_state(RegisterLayout{{"a", 2}}, 1);
  const StateVector b = random_state(RegisterLayout{{"b", 1}}, 2);
  const StateVector ab = tensor_product(a, b);
  CHECK(ab.layout().at("a").shift == 1);
  CHECK(std::abs(ab[0b101] - a[0b10] * b[1]) < kExact);
  CHECK(std::abs(inner_product(ab, ab) - 1.0) < kAbs);
  CHECK_THROWS_AS(tensor_product(a, a), LayoutError);
}
