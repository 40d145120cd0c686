#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tri/order.hpp"

namespace tri {

/// Which structure a map between finite lattices must preserve. All classes
/// imply monotonicity; on finite posets directed joins are maxima, so
/// "continuous" and "monotone" coincide.
enum class MapClass {
  Monotone,
  JoinPreserving,  // binary joins and bottom, hence all joins
  MeetPreserving,  // binary meets and top, hence all meets
  JoinTop,         // all joins plus top
  MeetTop,         // binary meets plus top; equal to MeetPreserving on finite lattices
  Frame,           // all joins and finite meets
  Preframe0,       // finite meets, directed joins and bottom
  Boolean,         // bottom, top, binary joins and meets
};

std::string_view to_string(MapClass cls);
MapClass map_class_from_string(std::string_view name);

constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

/// Every map P -> Q in the class, each exactly once, in lexicographic order of
/// graphs along a linear extension of P. Search nodes are counted against the
/// budget; exceeding it throws TooLarge instead of returning a partial list.
std::vector<MonotoneMap> enumerate_structure_maps(const PosetRef& dom, const PosetRef& cod, MapClass cls,
                                                  std::uint64_t budget = kDefaultSearchBudget);

/// Checks membership of a single map in a class.
bool preserves(const MonotoneMap& f, MapClass cls);

/// A finite (hence directed complete) Plotkin algebra: bounded poset with an
/// idempotent, commutative, associative, monotone binary operation `amalg`
/// and an element `bowtie` absorbing for it.
struct PlotkinAlgebra {
  PosetRef poset;
  std::vector<std::vector<std::size_t>> amalg;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::size_t bowtie = 0;

  std::size_t size() const { return poset->size(); }
  /// Throws StructureNotPreserved naming the failing law.
  void validate() const;
};

/// The three-element algebra 0 < ⋈ < 1 (indices 0, 1, 2).
namespace three {
constexpr std::size_t Zero = 0;
constexpr std::size_t Bowtie = 1;
constexpr std::size_t One = 2;
std::size_t amalg(std::size_t a, std::size_t b);
/// Embedding into 2⋉2 as (j1, j2).
std::pair<bool, bool> split(std::size_t v);
std::size_t join_pair(bool first, bool second);
}  // namespace three

PlotkinAlgebra three_algebra();

/// L⋉L for a finite frame L: pairs (a, b) with a >= b, product order,
/// (a,b)⨿(a',b') = (a∨a', b∧b'), ⋈ = (⊤, ⊥).
struct LensAlgebra {
  PosetRef frame;
  PlotkinAlgebra algebra;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;

  std::size_t index_of(std::size_t a, std::size_t b) const;
  std::size_t in1(std::size_t a) const;
  std::size_t in2(std::size_t b) const;
  std::size_t pi1(std::size_t e) const { return pairs.at(e).first; }
  std::size_t pi2(std::size_t e) const { return pairs.at(e).second; }
};

/// Throws InvalidArgument unless the lattice is distributive (finite frame).
LensAlgebra lens_algebra(const PosetRef& frame);

/// Monotone maps base -> 3 with the pointwise Plotkin structure.
struct ThreeValuedMaps {
  PosetRef base;
  PlotkinAlgebra algebra;
  std::vector<std::vector<std::size_t>> maps;
  std::map<std::vector<std::size_t>, std::size_t> index;

  std::size_t index_of(const std::vector<std::size_t>& values) const;
};

ThreeValuedMaps three_valued_maps(const PosetRef& base);

/// Plotkin-algebra homomorphisms A -> B (monotone, preserving 0, 1, ⋈, ⨿).
std::vector<MonotoneMap> enumerate_plotkin_homs(const PlotkinAlgebra& dom, const PlotkinAlgebra& cod,
                                                std::uint64_t budget = kDefaultSearchBudget);
bool is_plotkin_hom(const MonotoneMap& f, const PlotkinAlgebra& dom, const PlotkinAlgebra& cod);

/// The two-element chain {0 < 1} used as the dualizing object.
PosetRef two_chain();

}  // namespace tri
