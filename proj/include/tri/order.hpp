#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tri/subset.hpp"

namespace tri {

/// Finite set of named atoms. Element order is fixed at construction and is
/// the iteration/serialization order everywhere; `canonical` sorts names
/// naturally (digit runs compare numerically).
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<std::string> elements);

  static FinSet canonical(std::vector<std::string> elements);
  /// Elements "<prefix>0", ..., "<prefix>n-1".
  static FinSet range(std::size_t n, const std::string& prefix = "");

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::string& name(std::size_t i) const { return elements_.at(i); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws UnknownElement.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t> index_;
};

using FinSetRef = std::shared_ptr<const FinSet>;

bool natural_less(const std::string& a, const std::string& b);

/// Finite partial order. Every finite poset is directed complete (a directed
/// subset contains its own maximum), so these double as finite dcpos, and
/// Scott-open/closed subsets are exactly upsets/downsets.
/// Largest poset whose order relation is materialized (n² bits).
constexpr std::size_t kMaxPosetSize = 4096;

class FinPoset {
 public:
  FinPoset() = default;

  /// Validates reflexivity, antisymmetry and transitivity. Throws TooLarge
  /// past kMaxPosetSize points.
  static FinPoset from_leq(FinSet carrier, const std::function<bool(std::size_t, std::size_t)>& leq,
                           std::string label = "");
  static FinPoset discrete(FinSet carrier, std::string label = "");
  static FinPoset chain(std::size_t n);
  static FinPoset antichain(std::size_t n);

  const std::string& label() const { return label_; }
  const FinSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  const std::string& name(std::size_t i) const { return carrier_.name(i); }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  /// ↑a and ↓a.
  const Subset& up(std::size_t a) const { return up_[a]; }
  const Subset& down(std::size_t a) const { return down_[a]; }
  bool is_discrete() const;

  FinPoset opposite() const;
  FinPoset with_label(std::string label) const;

  bool is_upset(const Subset& s) const;
  bool is_downset(const Subset& s) const;
  Subset up_closure(const Subset& s) const;
  Subset down_closure(const Subset& s) const;
  Subset minimal(const Subset& s) const;
  Subset maximal(const Subset& s) const;

  /// Least upper bound / greatest lower bound of a subset, when it exists.
  /// The join of the empty set is the bottom element.
  std::optional<std::size_t> join(const Subset& s) const;
  std::optional<std::size_t> meet(const Subset& s) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  /// Complete lattice test: for finite posets, a bottom plus binary joins.
  bool is_lattice() const;

  /// Elements sorted so that a < b in the order implies a comes first.
  std::vector<std::size_t> linear_extension() const;
  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.carrier_ == b.carrier_ && a.up_ == b.up_;
  }

 private:
  std::string label_;
  FinSet carrier_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

using PosetRef = std::shared_ptr<const FinPoset>;

inline PosetRef share(FinPoset p) { return std::make_shared<const FinPoset>(std::move(p)); }

/// Builds a poset from cover pairs given by element names, taking the
/// reflexive-transitive closure. Element order is canonicalized.
/// Throws CycleError if the closure is not antisymmetric, UnknownElement if a
/// cover mentions an undeclared name.
FinPoset make_poset(std::vector<std::string> elements,
                    const std::vector<std::pair<std::string, std::string>>& covers, std::string label = "");

/// Total function between posets, checked to be monotone on construction.
class MonotoneMap {
 public:
  MonotoneMap(PosetRef dom, PosetRef cod, std::vector<std::size_t> graph);

  static MonotoneMap identity(const PosetRef& p);
  static MonotoneMap constant(const PosetRef& dom, const PosetRef& cod, std::size_t value);

  const PosetRef& dom() const { return dom_; }
  const PosetRef& cod() const { return cod_; }
  const std::vector<std::size_t>& graph() const { return graph_; }
  std::size_t operator()(std::size_t x) const { return graph_[x]; }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.graph_ == b.graph_ && *a.dom_ == *b.dom_ && *a.cod_ == *b.cod_;
  }

 private:
  PosetRef dom_;
  PosetRef cod_;
  std::vector<std::size_t> graph_;
};

/// g ∘ f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);
/// Pointwise f <= g.
bool pointwise_leq(const MonotoneMap& f, const MonotoneMap& g);

/// A family of subsets of a base poset, ordered by inclusion, together with
/// the translation between subsets and lattice elements.
struct SetLattice {
  PosetRef base;
  PosetRef lattice;
  std::vector<Subset> members;
  std::map<Subset, std::size_t> index;

  std::size_t size() const { return members.size(); }
  const Subset& member(std::size_t i) const { return members.at(i); }
  std::size_t index_of(const Subset& s) const;
  bool contains(const Subset& s) const { return index.count(s) != 0; }
};

/// Renders {a,b} using the base element names.
std::string render_subset(const FinPoset& base, const Subset& s);
std::string render_subset(const FinSet& base, const Subset& s);

/// All subsets of the carrier; element i of the lattice is the subset with mask i.
SetLattice powerset_lattice(const PosetRef& base);
SetLattice upset_lattice(const PosetRef& base);
SetLattice downset_lattice(const PosetRef& base);
/// Any family of subsets, ordered by inclusion, in the given order.
SetLattice subset_family(const PosetRef& base, std::vector<Subset> members);

/// Poset of upsets of p ordered by inclusion (equivalently monotone maps p -> 2).
FinPoset upsets(const FinPoset& p);
/// Poset of downsets of p ordered by inclusion.
FinPoset downsets(const FinPoset& p);

enum class SubsetKind { Plain, Upset, Downset };

/// A subset tagged with the closure property it is known to have. The
/// factory checks the tag against the ambient poset.
class SubsetOf {
 public:
  static SubsetOf make(const PosetRef& ambient, Subset members, SubsetKind kind);

  const PosetRef& ambient() const { return ambient_; }
  const Subset& members() const { return members_; }
  SubsetKind kind() const { return kind_; }

 private:
  SubsetOf(PosetRef ambient, Subset members, SubsetKind kind)
      : ambient_(std::move(ambient)), members_(std::move(members)), kind_(kind) {}

  PosetRef ambient_;
  Subset members_;
  SubsetKind kind_;
};

/// Least downset containing s.
SubsetOf down_closure(const PosetRef& p, const Subset& s);
/// Least upset containing s.
SubsetOf up_closure(const PosetRef& p, const Subset& s);

/// Right adjoint f#(b) = ⋁{x | f(x) <= b} of a join-preserving map between
/// finite lattices. Throws NotJoinPreserving (or InvalidArgument when either
/// side is not a lattice). The Galois property is checked exhaustively on the
/// result before it is returned.
MonotoneMap right_adjoint(const MonotoneMap& f);

/// The four ways a two-valued map on a complete lattice L is an element of L.
enum class TwoValuedVariant {
  JoinsToTwo,     // φ: L -> 2 preserving joins;       φ ↦ ⋁{x | φ(x) = 0}
  JoinsToOpTwo,   // φ: L -> op 2 preserving joins;    φ ↦ ⋁{x | φ(x) = 1}
  MeetsToTwo,     // φ: L -> 2 preserving meets;       φ ↦ ⋀{x | φ(x) = 1}
  MeetsToOpTwo,   // φ: L -> op 2 preserving meets;    φ ↦ ⋀{x | φ(x) = 0}
};

/// A two-valued map on a lattice, stored as the set of points sent to 1.
using TwoValuedMap = Subset;

/// Checks that φ preserves the structure named by the variant.
bool preserves_two_valued(const FinPoset& lattice, const TwoValuedMap& phi, TwoValuedVariant variant);
/// φ ↦ lattice element. Throws StructureNotPreserved.
std::size_t two_valued_to_element(const FinPoset& lattice, const TwoValuedMap& phi, TwoValuedVariant variant);
/// Lattice element ↦ φ.
TwoValuedMap element_to_two_valued(const FinPoset& lattice, std::size_t a, TwoValuedVariant variant);

/// All posets with n elements up to isomorphism, in a deterministic order.
/// Element names are "0", "1", ...; labels encode the size and position.
std::vector<FinPoset> all_posets(std::size_t n);
/// All finite lattices with n elements up to isomorphism.
std::vector<FinPoset> all_lattices(std::size_t n);

/// The powerset of an n-element set as a lattice poset (element i = mask i).
FinPoset boolean_lattice(std::size_t n);

}  // namespace tri
