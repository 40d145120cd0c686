#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tri/distribution.hpp"
#include "tri/effect.hpp"
#include "tri/monads.hpp"
#include "tri/transformers.hpp"

namespace tri {

/// x ↦ bind(g)(f(x)). Throws MonadMismatch, CarrierMismatch.
KleisliArrow kleisli_compose(const KleisliArrow& g, const KleisliArrow& f);
/// Kleisli extension of f as a map T(X) -> T(Y).
MonotoneMap stat_functor(const KleisliArrow& f);

/// Per-law results of a check; reuses the axiom record of the effect checks.
struct LawReport {
  std::string subject;
  std::vector<AxiomResult> laws;
  /// Number of object combinations visited and of those checked by sampling.
  std::size_t cases = 0;
  std::size_t sampled_cases = 0;

  bool all_passed() const;
  const AxiomResult& find(const std::string& law) const;
};

/// A structure map α: T(A) -> A, indexed by the elements of T(A).
struct EMAlgebraCandidate {
  MonadRef monad;
  ObjectRef tx;  // T(A); its base is the carrier A
  std::vector<std::size_t> structure;
};

/// Laws checked: unit (α∘η = id), multiplication (α∘T(α) = α∘μ) and
/// monotonicity of α for poset monads. Never throws for law failures.
LawReport check_em_algebra(const EMAlgebraCandidate& c);
/// (T(A), μ) as a candidate over the carrier T(A).
EMAlgebraCandidate free_algebra(const MonadRef& monad, const PosetRef& base);

/// A reproducible Kleisli arrow drawn by randomized backtracking along a
/// linear extension of the domain.
KleisliArrow random_kleisli(const MonadRef& monad, const ObjectRef& tx, const ObjectRef& ty, std::mt19937_64& rng);

struct LawOptions {
  std::size_t max_size = 2;
  /// Bind evaluations allowed for an exhaustive check of one object triple.
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 22;
  /// Arrow pairs drawn per object triple when the exhaustive check is over budget.
  std::size_t samples = 64;
  std::uint64_t seed = 1;
};

/// Left unit, right unit and associativity of the Kleisli extension over
/// every object with at most max_size points (discrete for set monads, all
/// posets up to isomorphism otherwise).
LawReport check_monad_laws(const MonadRef& monad, const LawOptions& opts);

/// The same laws for the distribution monad. Probe states are all grid
/// distributions with denominators up to max_den; arrows are drawn at random
/// from the same grid.
LawReport check_distribution_laws(std::size_t max_size, int max_den, std::size_t samples, std::uint64_t seed);
/// The same laws for probability measures on finite powerset sigma-algebras.
LawReport check_giry_laws(std::size_t max_size, int max_den, std::size_t samples, std::uint64_t seed);

/// Outcome of matching Kleisli arrows against structure-preserving transformers.
struct CertifyReport {
  std::string correspondence;
  std::string objects;
  std::uint64_t kleisli_count = 0;
  std::uint64_t transformer_count = 0;
  bool injective = false;
  bool surjective = false;
  bool roundtrip = false;
  bool bijection = false;
  std::optional<std::string> counterexample;
  std::vector<CertifyReport> cases;
};

/// Ids: the transformer correspondences plus "three" (Plotkin monad against
/// Plotkin-algebra maps of lens algebras). Throws TooLarge past the budget.
CertifyReport certify_full_faithful(const std::string& id, const PosetRef& x, const PosetRef& y,
                                    std::uint64_t budget = kDefaultSearchBudget);
/// Every pair of objects with exactly n and m points (antichains for set
/// monads, all posets otherwise), merged with summed counts.
CertifyReport certify_full_faithful(const std::string& id, std::size_t n, std::size_t m,
                                    std::uint64_t budget = kDefaultSearchBudget);
std::vector<std::string> certify_ids();

/// Both composites of a correspondence checked on one pair of objects:
/// every Kleisli arrow and every transformer in the structure class.
struct RoundTripReport {
  std::string correspondence;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> counterexample;
  bool passed() const { return mismatches == 0; }
};

RoundTripReport roundtrip_correspondence(const std::string& id, const PosetRef& x, const PosetRef& y,
                                         std::uint64_t budget = kDefaultSearchBudget);
/// Objects used by the suites: discrete sets for set monads, all posets otherwise.
std::vector<PosetRef> suite_objects(bool poset_based, std::size_t n);

}  // namespace tri
