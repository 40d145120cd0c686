#include <doctest.h>

#include <random>

#include "tri/distribution.hpp"
#include "tri/effect.hpp"
#include "support.hpp"
#include "tri/error.hpp"
#include "tri/literal.hpp"

using namespace tri;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("rationals parse and print exactly") {
  CHECK(parse_rat("2/4") == Rat(1, 2));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(rat_json(Rat(1)) == "1/1");
  CHECK(rat_string(Rat(2, 6)) == "1/3");
  CHECK(kind_of([] { (void)parse_rat("1/0"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { (void)parse_rat("x"); }) == ErrorKind::SyntaxError);
  // Farey sequence lengths: 1 + sum of Euler phi.
  CHECK(unit_grid(1).size() == 2);
  CHECK(unit_grid(4).size() == 7);
  CHECK(unit_grid(6).size() == 13);
}

TEST_CASE("effect algebra axioms hold for powersets and the unit interval") {
  for (std::size_t n = 0; n <= 3; ++n) CHECK(validate_effect_algebra(powerset_effect_algebra(n)).all_passed());
  for (int d = 1; d <= 6; ++d) CHECK(validate_effect_algebra(unit_interval_effect_algebra(d)).all_passed());
  CHECK(validate_effect_algebra(fuzzy_predicate_module(FinSet::range(2), 3, 3)).all_passed());
}

TEST_CASE("the truncated sum is not an effect algebra") {
  const EffectReport r = validate_effect_algebra(truncated_unit_interval(4));
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(r.find("orthosupplement-unique").passed);
}

TEST_CASE("MV identities on the grid") {
  const EffectReport r = check_mv_identities(6);
  CHECK(r.all_passed());
  for (const Rat& a : unit_grid(5))
    for (const Rat& b : unit_grid(5)) {
      const MvResult m = mv_ops(a, b);
      CHECK(m.truncated_plus == std::min(Rat(1), a + b));
      CHECK(m.truncated_minus == std::max(Rat(0), a - b));
      CHECK(m.join == std::max(a, b));
      CHECK(mv_ops_from_partial_sum(a, b).truncated_plus == m.truncated_plus);
    }
  CHECK(kind_of([] { (void)mv_ops(Rat(3, 2), Rat(0)); }) == ErrorKind::ScalarOutOfRange);
}

TEST_CASE("fuzzy predicates") {
  const FinSet x = FinSet::range(2);
  const FuzzyPredicate p(x, {Rat(1, 3), Rat(1, 2)});
  const FuzzyPredicate q(x, {Rat(2, 3), Rat(1, 3)});
  REQUIRE(pred_ovee(p, q).has_value());
  CHECK(pred_ovee(p, q)->values() == std::vector<Rat>{Rat(1), Rat(5, 6)});
  CHECK_FALSE(pred_ovee(q, pred_orth(p)).has_value());
  CHECK(pred_orth(p).values() == std::vector<Rat>{Rat(2, 3), Rat(1, 2)});
  CHECK(pred_scalar(Rat(1, 2), p).values() == std::vector<Rat>{Rat(1, 6), Rat(1, 4)});
  CHECK(pred_leq(pred_scalar(Rat(1, 2), p), p));
  CHECK(kind_of([&] { (void)FuzzyPredicate(x, {Rat(2), Rat(0)}); }) == ErrorKind::ScalarOutOfRange);
  CHECK(kind_of([&] { (void)pred_ovee(p, FuzzyPredicate::constant(FinSet::range(3), 0)); }) ==
        ErrorKind::CarrierMismatch);
  CHECK(parse_predicate(x, "p = {0: 1/3, 1: 1/2}") == p);
}

TEST_CASE("distributions are normalized and sparse") {
  const FinSet x = FinSet::range(3);
  const Distribution d(x, {Rat(1, 2), Rat(0), Rat(1, 2)});
  CHECK(d.support().size() == 2);
  CHECK(d(1) == 0);
  CHECK(kind_of([&] { (void)Distribution(x, {Rat(1, 2), Rat(0), Rat(1, 3)}); }) == ErrorKind::NotNormalized);
  CHECK(kind_of([&] { (void)Distribution(x, {Rat(3, 2), Rat(-1, 2), Rat(0)}); }) == ErrorKind::NotNormalized);
  CHECK(dist_mix(Rat(1, 3), Distribution::unit(x, 0), Distribution::unit(x, 1)).dense() ==
        std::vector<Rat>{Rat(1, 3), Rat(2, 3), Rat(0)});
  CHECK(parse_distribution(x, "{0: 1/2, 2: 1/2}") == d);
  CHECK(kind_of([&] { (void)parse_distribution(x, "{0: 1/2, 7: 1/2}"); }) == ErrorKind::UnknownElement);
  CHECK(kind_of([&] { (void)parse_weights("{0 1/2}"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("grid distributions are counted by stars and bars") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (int den = 1; den <= 4; ++den)
      CHECK(grid_distributions(FinSet::range(n), den).size() == binomial(den + n - 1, n - 1));
}

TEST_CASE("bind is the matrix-vector product") {
  std::mt19937_64 rng(7);
  const FinSet x = FinSet::range(3);
  const FinSet y = FinSet::range(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Distribution> rows;
    for (std::size_t i = 0; i < x.size(); ++i) rows.push_back(random_distribution(y, 6, rng));
    const DistArrow f(x, y, rows);
    const Distribution omega = random_distribution(x, 4, rng);
    std::vector<Rat> expected(y.size(), Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) expected[j] += omega(i) * f(i)(j);
    CHECK(dist_bind(f, omega).dense() == expected);
    CHECK(dist_bind(DistArrow::unit(x), omega) == omega);
  }
}

TEST_CASE("expectation embedding") {
  const FinSet x = FinSet::range(3);
  const Distribution omega(x, {Rat(1, 6), Rat(1, 3), Rat(1, 2)});
  const ExpectationFunctional e = expectation_embed(omega);
  const FuzzyPredicate p(x, {Rat(1), Rat(1, 2), Rat(0)});
  CHECK(e(p) == Rat(1, 6) + Rat(1, 6));
  CHECK(expectation_weights(e) == omega);
  CHECK(expectation_unit(x, 2)(p) == 0);
  const ExpectationFunctional bad{x, [](const FuzzyPredicate&) { return Rat(1, 2); }};
  CHECK(kind_of([&] { (void)expectation_weights(bad); }) == ErrorKind::NotNormalized);
}

TEST_CASE("finite Giry: measures and integrals correspond") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const FinSet atoms = FinSet::range(n);
    for (const auto& omega : grid_distributions(atoms, 6)) {
      const Measure phi = Measure::from_distribution(omega);
      CHECK(functional_to_measure(measure_to_functional(phi)) == phi);
      CHECK(phi.to_distribution() == omega);
    }
  }
  const FinSet two = FinSet::range(2);
  CHECK(kind_of([&] { (void)Measure(two, {Rat(0), Rat(1, 2), Rat(1, 4), Rat(1)}); }) == ErrorKind::NotNormalized);
  const Measure m = Measure::dirac(two, 1);
  CHECK(m(Subset(2, {1})) == 1);
  CHECK(integrate(FuzzyPredicate(two, {Rat(0), Rat(1, 3)}), m) == Rat(1, 3));
}
