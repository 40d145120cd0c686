#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tri/order.hpp"
#include "tri/structure.hpp"

namespace tri {

/// T(X) for one monad and one finite base: the enumerated elements (each a
/// subset of some index set, see the monad for its meaning), their order,
/// and, for monads built by dualizing, the predicate lattice of X.
struct MonadObject {
  std::string monad;
  PosetRef base;
  PosetRef carrier;
  std::vector<Subset> elems;
  std::map<Subset, std::size_t> index;
  std::optional<SetLattice> preds;

  std::size_t size() const { return elems.size(); }
  const Subset& element(std::size_t i) const { return elems.at(i); }
  /// Throws UnknownElement.
  std::size_t index_of(const Subset& repr) const;
  const std::string& label(std::size_t i) const { return carrier->name(i); }
};

using ObjectRef = std::shared_ptr<const MonadObject>;

/// A monad on finite sets or finite posets with an enumerable T(X). The
/// multiplication is not a separate operation: it is bind applied to the
/// identity arrow on T(X).
class FiniteMonad {
 public:
  explicit FiniteMonad(std::size_t cap) : cap_(cap) {}
  virtual ~FiniteMonad() = default;
  FiniteMonad(const FiniteMonad&) = delete;
  FiniteMonad& operator=(const FiniteMonad&) = delete;

  virtual std::string name() const = 0;
  /// Set monads see every base as a discrete poset.
  virtual bool poset_based() const = 0;
  std::size_t cap() const { return cap_; }

  /// T(base). Throws TooLarge when the base exceeds the cap.
  ObjectRef object(const PosetRef& base) const;
  ObjectRef object(std::size_t n) const { return object(share(FinPoset::antichain(n))); }

  virtual std::size_t unit(const MonadObject& tx, std::size_t x) const = 0;
  /// Kleisli extension of f: X -> T(Y) (given by image indices) applied to m ∈ T(X).
  virtual std::size_t bind(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f,
                           std::size_t m) const = 0;
  virtual nlohmann::json element_json(const MonadObject& tx, std::size_t i) const;

 protected:
  virtual MonadObject build(const PosetRef& base) const = 0;
  void check_object(const MonadObject& t) const;

 private:
  std::size_t cap_;
};

using MonadRef = std::shared_ptr<const FiniteMonad>;

/// Known identifiers: powerset, neighbourhood, monotone-neighbourhood, filter,
/// ultrafilter, downset, hoare, smyth, smyth-filter, plotkin. A cap of 0
/// keeps the monad's default. Throws InvalidArgument for unknown names.
MonadRef make_monad(const std::string& id, std::size_t cap = 0);
std::vector<std::string> monad_ids();

// Individual constructors; default caps in parentheses.
MonadRef powerset_monad(std::size_t cap = 8);
MonadRef neighbourhood_monad(std::size_t cap = 3);
MonadRef monotone_neighbourhood_monad(std::size_t cap = 3);
MonadRef filter_monad(std::size_t cap = 3);
MonadRef ultrafilter_monad(std::size_t cap = 4);
MonadRef downset_monad(std::size_t cap = 5);
MonadRef hoare_monad(std::size_t cap = 5);
MonadRef smyth_monad(std::size_t cap = 5);
/// Smyth monad as proper (Scott-open) filters of the upset lattice.
MonadRef smyth_filter_monad(std::size_t cap = 5);
MonadRef plotkin_monad(std::size_t cap = 4);

/// A map X -> T(Y), monotone for poset monads.
struct KleisliArrow {
  MonadRef monad;
  ObjectRef source;  // T(X)
  ObjectRef target;  // T(Y)
  std::vector<std::size_t> images;

  /// Throws MonadMismatch, CarrierMismatch or NotMonotone.
  KleisliArrow(MonadRef monad, ObjectRef source, ObjectRef target, std::vector<std::size_t> images);
  static KleisliArrow unit(const MonadRef& monad, const ObjectRef& tx);

  const PosetRef& dom() const { return source->base; }
  const PosetRef& cod() const { return target->base; }
  std::size_t operator()(std::size_t x) const { return images.at(x); }

  friend bool operator==(const KleisliArrow& a, const KleisliArrow& b) {
    return a.monad == b.monad && a.source == b.source && a.target == b.target && a.images == b.images;
  }
};

/// Every Kleisli arrow X -> T(Y). Throws TooLarge past the search budget.
std::vector<KleisliArrow> enumerate_kleisli(const MonadRef& monad, const ObjectRef& tx, const ObjectRef& ty,
                                            std::uint64_t budget = kDefaultSearchBudget);
/// Number of Kleisli arrows without materializing them, saturating at UINT64_MAX.
std::uint64_t count_kleisli_upper_bound(const ObjectRef& tx, const ObjectRef& ty);

// ---------------------------------------------------------------- checks on the zoo

/// Complete-Boolean maps P(X) -> 2, found by testing every function P(X) -> 2
/// for preservation of complement and of all unions.
struct CollapseReport {
  std::size_t points = 0;
  std::size_t maps = 0;
  bool every_map_is_a_unit = false;
  bool passed() const { return maps == points && every_map_is_a_unit; }
};
CollapseReport cba_collapse_check(std::size_t n);

/// For the filter-based monads: every filter is principal.
bool all_filters_principal(const MonadObject& tx);

/// Plotkin elements as functionals on monotone maps X -> 3: value at each
/// three-valued map (indexed as in three_valued_maps(X)).
std::vector<std::size_t> plotkin_functional(const MonadObject& tx, std::size_t elem, const ThreeValuedMaps& maps);

/// Plotkin element encoding: lower set C in bits [0, n), upper set K in [n, 2n).
Subset plotkin_pack(const Subset& lower, const Subset& upper);
std::pair<Subset, Subset> plotkin_unpack(const Subset& elem, std::size_t n);
/// Value in 3 of a Plotkin element at the lens pair (outer ⊇ inner).
std::size_t plotkin_evaluate(const MonadObject& tx, std::size_t elem, const Subset& outer, const Subset& inner);
/// Reads back the element whose functional is `value` (a function of lens pairs over the base).
/// The caller must check that the functional is realised.
Subset plotkin_decode(const MonadObject& tx, const std::function<std::size_t(const Subset&, const Subset&)>& value);

/// Bind computed through the functional on lens pairs instead of by unions;
/// returns the encoded element. Throws NotMonotone for non-monotone arrows.
Subset plotkin_bind_by_duality(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f,
                               std::size_t m);

/// Bijection between the two Smyth presentations: nonempty upset K ↦ the
/// filter of upsets containing K. Returns for each upset-element its filter index.
std::vector<std::size_t> smyth_upsets_to_filters(const MonadObject& upsets, const MonadObject& filters);

}  // namespace tri
