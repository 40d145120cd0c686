#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tri/effect.hpp"
#include "tri/order.hpp"
#include "tri/rational.hpp"

namespace tri {

/// Finitely supported probability distribution with exact weights. Only
/// nonzero weights are stored.
class Distribution {
 public:
  /// Throws NotNormalized unless weights are nonnegative and sum to 1.
  Distribution(FinSet carrier, const std::vector<Rat>& weights);
  Distribution(FinSet carrier, const std::map<std::size_t, Rat>& weights);

  static Distribution unit(const FinSet& carrier, std::size_t x);

  const FinSet& carrier() const { return carrier_; }
  /// Support points with their (nonzero) weights, ascending.
  const std::map<std::size_t, Rat>& support() const { return weights_; }
  Rat operator()(std::size_t x) const;
  std::vector<Rat> dense() const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.carrier_ == b.carrier_ && a.weights_ == b.weights_;
  }

 private:
  FinSet carrier_;
  std::map<std::size_t, Rat> weights_;
};

Distribution dist_make(const FinSet& carrier, const std::vector<Rat>& weights);
/// r·a + (1−r)·b. Throws ScalarOutOfRange, CarrierMismatch.
Distribution dist_mix(const Rat& r, const Distribution& a, const Distribution& b);

/// Kleisli arrow for the distribution monad: a stochastic matrix in sparse form.
struct DistArrow {
  FinSet dom;
  FinSet cod;
  std::vector<Distribution> images;

  /// Throws CarrierMismatch if an image lives on another carrier.
  DistArrow(FinSet dom, FinSet cod, std::vector<Distribution> images);
  static DistArrow unit(const FinSet& carrier);
  const Distribution& operator()(std::size_t x) const { return images.at(x); }

  friend bool operator==(const DistArrow& a, const DistArrow& b) {
    return a.dom == b.dom && a.cod == b.cod && a.images == b.images;
  }
};

/// bind(f, ω)(y) = Σ_x f(x)(y)·ω(x). Throws CarrierMismatch.
Distribution dist_bind(const DistArrow& f, const Distribution& omega);
/// x ↦ bind(g, f(x)).
DistArrow dist_compose(const DistArrow& g, const DistArrow& f);

/// Probe distributions: every distribution on the carrier whose weights are
/// multiples of 1/den.
std::vector<Distribution> grid_distributions(const FinSet& carrier, int den);
/// A reproducible random distribution with denominators dividing `den`.
template <class Rng>
Distribution random_distribution(const FinSet& carrier, int den, Rng& rng);

// ---------------------------------------------------------------- expectation

/// An element of the expectation monad on a finite carrier, held
/// intensionally as a functional on fuzzy predicates.
struct ExpectationFunctional {
  FinSet carrier;
  std::function<Rat(const FuzzyPredicate&)> apply;

  Rat operator()(const FuzzyPredicate& p) const;
};

/// σ(ω)(p) = Σ_x p(x)·ω(x).
ExpectationFunctional expectation_embed(const Distribution& omega);
/// Expectation-monad unit: p ↦ p(x).
ExpectationFunctional expectation_unit(const FinSet& carrier, std::size_t x);
/// Expectation-monad bind: q ↦ Φ(x ↦ h(x)(q)).
ExpectationFunctional expectation_bind(const FinSet& cod, const std::vector<ExpectationFunctional>& h,
                                       const ExpectationFunctional& phi);
/// Reads back weights via indicators of points: ω(x) = Φ(1_{x}).
/// Throws NotNormalized if the recovered weights do not form a distribution.
Distribution expectation_weights(const ExpectationFunctional& phi);

// ---------------------------------------------------------------- finite Giry

/// Probability measure on a finite set with its full powerset as the
/// sigma-algebra: one value per event, event i being the subset with mask i.
class Measure {
 public:
  /// Throws NotNormalized unless the values form a probability measure
  /// (nonnegative, empty event 0, whole space 1, finitely additive).
  Measure(FinSet atoms, std::vector<Rat> event_values);

  static Measure from_distribution(const Distribution& omega);
  /// Dirac measure.
  static Measure dirac(const FinSet& atoms, std::size_t x);

  const FinSet& atoms() const { return atoms_; }
  const Rat& operator()(const Subset& event) const;
  const std::vector<Rat>& events() const { return values_; }
  Distribution to_distribution() const;

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.atoms_ == b.atoms_ && a.values_ == b.values_;
  }

 private:
  FinSet atoms_;
  std::vector<Rat> values_;
};

/// ∫ p dφ = Σ_a p(a)·φ({a}).
Rat integrate(const FuzzyPredicate& p, const Measure& phi);
/// φ ↦ (p ↦ ∫ p dφ).
ExpectationFunctional measure_to_functional(const Measure& phi);
/// I ↦ (M ↦ I(1_M)).
Measure functional_to_measure(const ExpectationFunctional& integral);
/// (f, φ)(M) = Σ_a φ({a})·f(a)(M).
Measure giry_bind(const std::vector<Measure>& f, const Measure& phi);

}  // namespace tri

#include "tri/distribution_impl.hpp"
