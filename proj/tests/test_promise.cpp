#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "oraclebench/errors.hpp"
#include "oraclebench/promise.hpp"

using namespace oraclebench;

namespace {

std::set<BasisIndex> image(const Permutation& p, const std::vector<BasisIndex>& s) {
  std::set<BasisIndex> out;
  for (BasisIndex x : s) out.insert(p(x));
  return out;
}

}  // namespace

TEST_CASE("swap test probability formula") {
  CHECK(swap_test_probabilities(1.0).p_zero == 0.0);
  CHECK(swap_test_probabilities(1.0).p_one == 1.0);
  CHECK(swap_test_probabilities(0.0).p_zero == 0.5);
  CHECK(swap_test_probabilities(0.0).p_one == 0.5);
}

TEST_CASE("swap test subcircuit on prepared states") {
  const RegisterLayout l{{"r", 1}};
  const double h = 1.0 / std::numbers::sqrt2;
  const StateVector zero = prepare_basis(l, {});
  const StateVector one = prepare_basis(l, {{"r", 1}});
  const StateVector plus = StateVector::from_amplitudes(l, {h, h});
  const StateVector mixed =
      StateVector::from_amplitudes(l, {std::sqrt(0.5 + 0.5 * h), std::sqrt(0.5 - 0.5 * h)});
  // overlaps 0, 1/sqrt(2) and 1/sqrt(2) (mixed is cos(pi/8)|0> + sin(pi/8)|1>)
  struct Case {
    const StateVector& a;
    const StateVector& b;
    double c;
  };
  const Case cases[] = {{zero, one, 0.0},
                        {zero, plus, h},
                        {zero, zero, 1.0},
                        {plus, zero, h},
                        {mixed, zero, std::cos(std::numbers::pi / 8)}};
  for (const Case& c : cases) {
    const AncillaProbabilities p = run_figure1_swaptest_on_states(c.a, c.b);
    CHECK(p.p_zero == doctest::Approx((1.0 - c.c * c.c) / 2.0).epsilon(1e-12));
    CHECK(p.p_zero + p.p_one == doctest::Approx(1.0).epsilon(1e-12));
  }
  const StateVector half = StateVector::from_amplitudes(
      l, {std::sqrt(0.5 + 0.5 * std::sqrt(0.75)), std::sqrt(0.5 - 0.5 * std::sqrt(0.75))});
  // <0|half> = cos(pi/12); squared overlap 0.5 + sqrt(3)/4
  CHECK(run_figure1_swaptest_on_states(zero, half).p_zero ==
        doctest::Approx((0.5 - std::sqrt(0.75) / 2.0) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(run_figure1_swaptest_on_states(zero, StateVector(RegisterLayout{{"r", 2}})),
                  LayoutError);
}

TEST_CASE("subset state") {
  const StateVector s = subset_state("r", 3, {1, 4, 6});
  for (BasisIndex i = 0; i < 8; ++i) {
    const double expected = (i == 1 || i == 4 || i == 6) ? 1.0 / std::sqrt(3.0) : 0.0;
    CHECK(std::abs(s[i] - expected) < 1e-15);
  }
  CHECK_THROWS_AS(subset_state("r", 2, {}), DomainError);
  CHECK_THROWS_AS(subset_state("r", 2, {4}), DomainError);
}

TEST_CASE("instance generators respect the promise") {
  for (unsigned n = 1; n <= 6; ++n) {
    const std::size_t N = std::size_t{1} << n;
    for (std::size_t size : {std::size_t{1}, N / 2}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const PromiseInstance same = make_identical_instance(n, size, seed);
        CHECK(same.relation() == ImageRelation::Identical);
        CHECK(same.subset().size() == size);
        CHECK(std::is_sorted(same.subset().begin(), same.subset().end()));
        CHECK(image(same.alpha(), same.subset()) == image(same.beta(), same.subset()));
        if (size >= 2)
          for (BasisIndex x : same.subset()) CHECK(same.alpha()(x) != same.beta()(x));

        const PromiseInstance apart = make_disjoint_instance(n, size, seed);
        CHECK(apart.relation() == ImageRelation::Disjoint);
        const auto ia = image(apart.alpha(), apart.subset());
        const auto ib = image(apart.beta(), apart.subset());
        std::vector<BasisIndex> common;
        std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                              std::back_inserter(common));
        CHECK(common.empty());
      }
    }
  }
  CHECK_THROWS_AS(make_disjoint_instance(3, 5, 0), DomainError);
  CHECK_THROWS_AS(make_identical_instance(3, 0, 0), DomainError);
  CHECK_THROWS_AS(make_identical_instance(3, 9, 0), DomainError);
}

TEST_CASE("promise violations are rejected") {
  const Permutation id = Permutation::identity(2);
  // images {0,1} and {1,2}: overlapping but not equal
  CHECK_THROWS_AS(PromiseInstance(id, Permutation(2, {1, 2, 0, 3}), {0, 1}),
                  PromiseViolation);
  CHECK_THROWS_AS(PromiseInstance(id, id, {}), DomainError);
  CHECK_THROWS_AS(PromiseInstance(id, id, {1, 1}), DomainError);
  CHECK_THROWS_AS(PromiseInstance(id, id, {7}), DomainError);
  CHECK_THROWS_AS(PromiseInstance(id, Permutation::identity(3), {0}), DomainError);
  CHECK(PromiseInstance(id, id, {2, 0}).subset() == std::vector<BasisIndex>{0, 2});
}

TEST_CASE("exact outcome distribution splits on the promise") {
  for (unsigned n = 1; n <= 6; ++n) {
    const std::size_t N = std::size_t{1} << n;
    for (std::size_t size : {std::size_t{1}, std::max<std::size_t>(1, N / 4), N / 2}) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        CAPTURE(n);
        CAPTURE(size);
        const Figure1Outcome same = run_figure1_exact(make_identical_instance(n, size, seed));
        CHECK(std::abs(same.probabilities.p_zero) <= 1e-10);
        CHECK(std::abs(same.probabilities.p_one - 1.0) <= 1e-10);
        CHECK(same.queries_alpha == 1);
        CHECK(same.queries_beta == 1);

        const Figure1Outcome apart = run_figure1_exact(make_disjoint_instance(n, size, seed));
        CHECK(std::abs(apart.probabilities.p_zero - 0.5) <= 1e-10);
        CHECK(std::abs(apart.probabilities.p_one - 0.5) <= 1e-10);
        CHECK(apart.queries_alpha == 1);
        CHECK(apart.queries_beta == 1);
      }
    }
  }
}

TEST_CASE("worked example with n = 2") {
  const Permutation alpha = Permutation::identity(2);
  const PromiseInstance same(alpha, Permutation(2, {1, 0, 2, 3}), {0, 1});
  CHECK(run_figure1_exact(same).probabilities.p_one == doctest::Approx(1.0).epsilon(1e-12));
  const PromiseInstance apart(alpha, Permutation(2, {2, 3, 0, 1}), {0, 1});
  CHECK(run_figure1_exact(apart).probabilities.p_zero == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("trial summaries") {
  const TrialSummary none = summarize_trials(20, 0);
  CHECK(none.verdict == Verdict::IdenticalWithConfidence);
  CHECK(none.error_probability_bound == 9.5367431640625e-07);
  const TrialSummary some = summarize_trials(20, 3);
  CHECK(some.verdict == Verdict::Disjoint);
  CHECK(some.error_probability_bound == 0.0);
  CHECK(to_string(Verdict::Disjoint) == "disjoint");
  CHECK(to_string(Verdict::IdenticalWithConfidence) == "identical-with-confidence");
  CHECK_THROWS_AS(summarize_trials(0, 0), DomainError);
  CHECK_THROWS_AS(summarize_trials(2, 3), DomainError);
}

TEST_CASE("sampled trials") {
  const PromiseInstance same = make_identical_instance(4, 4, 2);
  const TrialSummary s = run_figure1_sampled(same, 20, 1729);
  CHECK(s.zero_count == 0);
  CHECK(s.verdict == Verdict::IdenticalWithConfidence);
  CHECK(s.error_probability_bound == 9.5367431640625e-07);
  CHECK(s.queries_alpha == 20);
  CHECK(s.queries_beta == 20);

  const PromiseInstance apart = make_disjoint_instance(4, 4, 2);
  const TrialSummary d = run_figure1_sampled(apart, 400, 1729);
  CHECK(d.verdict == Verdict::Disjoint);
  // 400 fair coin flips: mean 200, sigma 10
  CHECK(d.zero_count >= 160);
  CHECK(d.zero_count <= 240);
  const TrialSummary again = run_figure1_sampled(apart, 400, 1729);
  CHECK(again.zero_count == d.zero_count);
}

TEST_CASE("standard oracles leave an overlap that the swap test cannot read") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      for (const PromiseInstance& inst : {make_identical_instance(n, 2, seed),
                                          make_disjoint_instance(n, 2, seed)}) {
        std::size_t agree = 0;
        for (BasisIndex x : inst.subset()) agree += inst.alpha()(x) == inst.beta()(x);
        CHECK(naive_standard_overlap(inst) ==
              doctest::Approx(double(agree) / inst.subset().size()).epsilon(1e-12));
      }
    }
  }
  // identical images, every point moved: the overlap is zero, as for disjoint
  const PromiseInstance same = make_identical_instance(3, 4, 1);
  CHECK(naive_standard_overlap(same) < 1e-12);
  CHECK(naive_standard_overlap(make_disjoint_instance(3, 4, 1)) < 1e-12);
}
