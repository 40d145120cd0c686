#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tri/order.hpp"
#include "tri/rational.hpp"

namespace tri {

/// A map from a finite carrier into [0,1] with exact values.
class FuzzyPredicate {
 public:
  /// Throws ScalarOutOfRange if a value leaves [0,1].
  FuzzyPredicate(FinSet carrier, std::vector<Rat> values);

  static FuzzyPredicate constant(const FinSet& carrier, const Rat& value);
  /// 1_U: 1 on members of the subset, 0 elsewhere.
  static FuzzyPredicate indicator(const FinSet& carrier, const Subset& members);

  const FinSet& carrier() const { return carrier_; }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator()(std::size_t x) const { return values_.at(x); }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const FuzzyPredicate& a, const FuzzyPredicate& b) {
    return a.carrier_ == b.carrier_ && a.values_ == b.values_;
  }

 private:
  FinSet carrier_;
  std::vector<Rat> values_;
};

/// Partial sum: defined iff p(x) + q(x) <= 1 everywhere; nullopt otherwise.
/// Throws CarrierMismatch.
std::optional<FuzzyPredicate> pred_ovee(const FuzzyPredicate& p, const FuzzyPredicate& q);
FuzzyPredicate pred_orth(const FuzzyPredicate& p);
/// Throws ScalarOutOfRange unless r is in [0,1].
FuzzyPredicate pred_scalar(const Rat& r, const FuzzyPredicate& p);
/// Pointwise order.
bool pred_leq(const FuzzyPredicate& p, const FuzzyPredicate& q);

/// Total lattice-ordered operations on [0,1].
struct MvResult {
  Rat truncated_plus;
  Rat truncated_minus;
  Rat join;
  Rat meet;
};

/// Direct truncated arithmetic. Throws ScalarOutOfRange outside [0,1].
MvResult mv_ops(const Rat& a, const Rat& b);
/// The same operations built from the partial sum and orthosupplement:
/// a + b = a ⊕ (a⊥ ∧ b) and a − b = (a⊥ + b)⊥.
MvResult mv_ops_from_partial_sum(const Rat& a, const Rat& b);

/// Partial sum on [0,1]: defined iff a + b <= 1.
std::optional<Rat> unit_ovee(const Rat& a, const Rat& b);

/// One axiom of the validation report.
struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

struct EffectReport {
  std::string instance;
  std::size_t probes = 0;
  std::vector<AxiomResult> axioms;

  bool all_passed() const;
  const AxiomResult& find(const std::string& axiom) const;
};

/// A candidate effect algebra presented by its operations and a finite probe
/// set. A scalar action, when present, is validated as an effect-module action
/// over the scalar probes.
template <class T>
struct EffectAlgebra {
  std::string name;
  std::vector<T> probes;
  std::function<std::optional<T>(const T&, const T&)> ovee;
  std::function<T(const T&)> orth;
  T zero;
  std::function<std::string(const T&)> show;
  std::function<std::optional<T>(const Rat&, const T&)> scalar;
  std::vector<Rat> scalar_probes;
};

/// Axioms checked: commutativity, associativity, zero, orthosupplement,
/// uniqueness of the orthosupplement, zero-one law, and for modules the
/// four action laws. Failures are reported, never thrown.
template <class T>
EffectReport validate_effect_algebra(const EffectAlgebra<T>& inst);

EffectAlgebra<Subset> powerset_effect_algebra(std::size_t n);
EffectAlgebra<Rat> unit_interval_effect_algebra(int max_den);
/// [0,1] with the total truncated sum: a deliberately wrong instance.
EffectAlgebra<Rat> truncated_unit_interval(int max_den);
/// [0,1]^X with pointwise operations and scalar action; probes are all
/// functions into the grid with the given denominator bound.
EffectAlgebra<FuzzyPredicate> fuzzy_predicate_module(const FinSet& carrier, int max_den, int scalar_den);

/// Result of checking the MV identities and the agreement of both
/// presentations of the truncated operations on a grid.
EffectReport check_mv_identities(int max_den);

}  // namespace tri
