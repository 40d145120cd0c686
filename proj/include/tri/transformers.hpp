#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tri/distribution.hpp"
#include "tri/effect.hpp"
#include "tri/monads.hpp"
#include "tri/order.hpp"
#include "tri/structure.hpp"

namespace tri {

using LatticeRef = std::shared_ptr<const SetLattice>;

/// A map Pred(Y) -> Pred(X) between two subset lattices, running backwards
/// against a computation X -> T(Y). The graph holds lattice indices.
struct PredTransformer {
  LatticeRef source;  // Pred(Y)
  LatticeRef target;  // Pred(X)
  std::vector<std::size_t> graph;

  /// Throws UnknownElement if the argument is not in the source lattice.
  const Subset& operator()(const Subset& pred) const;
  /// Throws NotMonotone for non-monotone transformers (possible for the
  /// neighbourhood monad).
  MonotoneMap as_map() const;

  friend bool operator==(const PredTransformer& a, const PredTransformer& b) {
    return a.graph == b.graph && a.source->members == b.source->members && a.target->members == b.target->members;
  }
};

/// The predicate lattice used for a base: all subsets of a discrete base,
/// upsets otherwise.
LatticeRef open_lattice(const PosetRef& base);

/// One side of a correspondence fixed at a pair of bases: T(X), T(Y) and the
/// predicate lattices on both.
struct Homset {
  MonadRef monad;
  ObjectRef source;  // T(X)
  ObjectRef target;  // T(Y)
  LatticeRef pred_source;  // Pred(X)
  LatticeRef pred_target;  // Pred(Y)
};

/// A bijection between Kleisli arrows X -> T(Y) and structure-preserving
/// transformers Pred(Y) -> Pred(X). `cls` names the transformer structure; an
/// empty class means every function qualifies.
struct Correspondence {
  std::string id;
  MonadRef monad;
  std::optional<MapClass> cls;
  std::function<Homset(const PosetRef&, const PosetRef&)> homset;
  std::function<PredTransformer(const Homset&, const KleisliArrow&)> forward;
  /// Verifies the side condition on the transformer before transposing.
  std::function<KleisliArrow(const Homset&, const PredTransformer&)> backward;
};

/// Ids: box, diamond, hoare, smyth, neighbourhood, monotone-neighbourhood,
/// filter, ultrafilter, smyth-filter. Throws InvalidArgument otherwise.
Correspondence correspondence(const std::string& id);
std::vector<std::string> correspondence_ids();

/// Whether a transformer graph lies in the structure class (or is any function).
bool transformer_in_class(const PredTransformer& f, const std::optional<MapClass>& cls);

// ---------------------------------------------------------------- convenience wrappers

/// A ↦ {x | g(x) ⊆ A} for g into the powerset monad.
PredTransformer box_forward(const KleisliArrow& g);
/// x ↦ ⋂{B | x ∈ f(B)}. Throws NotMeetPreserving.
KleisliArrow box_backward(const Homset& h, const PredTransformer& f);
/// V ↦ {x | g(x) ∩ V ≠ ∅} for g into the powerset, downset or Hoare monad.
PredTransformer diamond_forward(const KleisliArrow& g);
/// x ↦ ⋂{U downset | x ∉ f(¬U)}. Throws NotJoinPreserving.
KleisliArrow diamond_backward(const Homset& h, const PredTransformer& f);
/// Hoare predicate transformer (unions and the top open preserved).
PredTransformer hoare_pred(const KleisliArrow& g);
/// Smyth predicate transformer V ↦ {x | g(x) ⊆ V}.
PredTransformer smyth_pred(const KleisliArrow& g);

/// Lattice form of the box correspondence for any finite lattice L:
/// g: X -> L gives a ↦ {x | g(x) <= a}; a meet-preserving f: L -> P(X) gives
/// x ↦ ⋀{a | x ∈ f(a)}. Throws NotMeetPreserving.
std::vector<Subset> box_lattice_forward(const FinPoset& lattice, const std::vector<std::size_t>& g);
std::vector<std::size_t> box_lattice_backward(const FinPoset& lattice, std::size_t points,
                                              const std::vector<Subset>& f);

// ---------------------------------------------------------------- sets and posets

/// A function from a poset into subsets of another base.
struct SubsetValuedMap {
  PosetRef dom;
  PosetRef cod;
  std::vector<Subset> images;

  friend bool operator==(const SubsetValuedMap& a, const SubsetValuedMap& b) {
    return a.images == b.images && *a.dom == *b.dom && *a.cod == *b.cod;
  }
};

/// From g: X -> Up(Y) (X a set) to f: Y -> P(X), f(y) = {x | y ∈ g(x)}.
/// Throws SideConditionViolated if an image of g is not an upset.
SubsetValuedMap monotone_nbhd_forward(const SubsetValuedMap& g);
/// From a monotone f: Y -> P(X) to g: X -> Up(Y), g(x) = {y | x ∈ f(y)}.
/// Throws SideConditionViolated if f is not monotone.
SubsetValuedMap monotone_nbhd_backward(const SubsetValuedMap& f);

// ---------------------------------------------------------------- three and lenses

/// Opens outer ⊇ inner of a finite poset.
struct LensPair {
  PosetRef base;
  Subset outer;
  Subset inner;

  /// Throws LensViolation unless both are upsets with outer ⊇ inner.
  static LensPair make(PosetRef base, Subset outer, Subset inner);

  friend bool operator==(const LensPair& a, const LensPair& b) {
    return a.outer == b.outer && a.inner == b.inner && *a.base == *b.base;
  }
};

/// Monotone f: X -> 3 ↦ ({f ≠ 0}, {f = 1}). Throws NotMonotone.
LensPair three_to_lens(const PosetRef& base, const std::vector<std::size_t>& values);
std::vector<std::size_t> lens_to_three(const LensPair& lens);
/// Lens-side amalgamation (∪, ∩) and ⋈ = (X, ∅).
LensPair lens_amalg(const LensPair& a, const LensPair& b);
LensPair lens_bowtie(const PosetRef& base);

/// A Plotkin-algebra map between lens algebras split into its two
/// restrictions (g1 = π1∘f∘in1, g2 = π2∘f∘in2).
struct LensHomPair {
  MonotoneMap first;   // join- and top-preserving
  MonotoneMap second;  // preframe, bottom-preserving
};

/// Throws StructureNotPreserved if f is not a Plotkin homomorphism or if the
/// split equations fail for some lens pair.
LensHomPair plotkin_hom_split(const LensAlgebra& dom, const LensAlgebra& cod, const MonotoneMap& f);
/// (x, x') ↦ (g1(x), g2(x')). Throws StructureNotPreserved for the wrong
/// classes and Incomparable unless g1 >= g2 pointwise.
MonotoneMap plotkin_hom_join(const LensAlgebra& dom, const LensAlgebra& cod, const LensHomPair& pair);

/// Lens algebra of the upsets of a base, cached per call site by the caller.
struct PlotkinPreds {
  SetLattice opens;
  LensAlgebra lens;
};
PlotkinPreds plotkin_preds(const PosetRef& base);

/// Pred of g: X -> Plotkin(Y) as a map lens(Up Y) -> lens(Up X).
MonotoneMap plotkin_pred(const KleisliArrow& g, const PlotkinPreds& preds_x, const PlotkinPreds& preds_y);
/// The Kleisli arrow with the given predicate transformer. Throws
/// StructureNotPreserved if none exists.
KleisliArrow plotkin_from_pred(const MonadRef& monad, const ObjectRef& tx, const ObjectRef& ty,
                               const PlotkinPreds& preds_x, const PlotkinPreds& preds_y, const MonotoneMap& h);

// ---------------------------------------------------------------- expectation

/// A map of fuzzy predicates [0,1]^Y -> [0,1]^X.
struct EffectTransformer {
  FinSet source;
  FinSet target;
  std::function<FuzzyPredicate(const FuzzyPredicate&)> apply;

  /// Throws CarrierMismatch.
  FuzzyPredicate operator()(const FuzzyPredicate& q) const;
};

/// f*(q)(x) = Σ_y q(y)·f(x)(y).
EffectTransformer expectation_pred(const DistArrow& f);
/// f(x)(y) = t(1_{y})(x). Throws NotNormalized if the result is not stochastic.
DistArrow expectation_state(const EffectTransformer& t);

/// Module-map laws of a transformer on probe predicates and scalars:
/// additivity where defined, unit, scalar homogeneity.
EffectReport check_effect_module_map(const EffectTransformer& t, const std::vector<FuzzyPredicate>& probes,
                                     const std::vector<Rat>& scalars);

}  // namespace tri
