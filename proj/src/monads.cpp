#include "tri/monads.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "tri/error.hpp"

namespace tri {

std::size_t MonadObject::index_of(const Subset& repr) const {
  auto it = index.find(repr);
  if (it == index.end()) fail(ErrorKind::UnknownElement, "not an element of " + monad + "(" + base->label() + ")");
  return it->second;
}

ObjectRef FiniteMonad::object(const PosetRef& base) const {
  if (base->size() > cap_) {
    fail(ErrorKind::TooLarge, name() + " is capped at " + std::to_string(cap_) + " points, got " +
                                  std::to_string(base->size()));
  }
  PosetRef b = base;
  if (!poset_based() && !base->is_discrete()) b = share(FinPoset::discrete(base->carrier(), base->label()));
  auto t = std::make_shared<MonadObject>(build(b));
  check_object(*t);
  return t;
}

void FiniteMonad::check_object(const MonadObject& t) const {
  if (t.carrier->size() != t.elems.size() || t.index.size() != t.elems.size()) {
    fail(ErrorKind::InvalidArgument, "inconsistent object for " + name());
  }
}

nlohmann::json FiniteMonad::element_json(const MonadObject& tx, std::size_t i) const {
  nlohmann::json names = nlohmann::json::array();
  tx.element(i).for_each([&](std::size_t x) { names.push_back(tx.base->name(x)); });
  return names;
}

namespace {

using LeqFn = std::function<bool(const Subset&, const Subset&)>;
using NameFn = std::function<std::string(const Subset&)>;

MonadObject make_object(std::string monad, const PosetRef& base, std::vector<Subset> elems, const LeqFn& leq,
                        const NameFn& namer) {
  MonadObject t;
  t.monad = std::move(monad);
  t.base = base;
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    t.index.emplace(elems[i], i);
    names.push_back(namer(elems[i]));
  }
  t.carrier = share(FinPoset::from_leq(
      FinSet(std::move(names)), [&](std::size_t a, std::size_t b) { return leq(elems[a], elems[b]); },
      t.monad + "(" + base->label() + ")"));
  t.elems = std::move(elems);
  return t;
}

bool inclusion(const Subset& a, const Subset& b) { return a.is_subset_of(b); }
bool reverse_inclusion(const Subset& a, const Subset& b) { return b.is_subset_of(a); }

Subset union_bind(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f, std::size_t m) {
  Subset out(ty.base->size());
  tx.element(m).for_each([&](std::size_t x) { out |= ty.element(f[x]); });
  return out;
}

void check_arrow_shape(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f) {
  if (f.size() != tx.base->size()) fail(ErrorKind::CarrierMismatch, "Kleisli arrow does not cover its domain");
  for (std::size_t v : f)
    if (v >= ty.size()) fail(ErrorKind::UnknownElement, "Kleisli arrow image outside T(Y)");
}

// ---------------------------------------------------------------- subset monads

enum class SubsetFamily { All, Downsets, NonemptyDownsets, NonemptyUpsets };

// Monads whose elements are subsets of the base: unit is a principal set,
// bind is union of images.
class SubsetMonad final : public FiniteMonad {
 public:
  SubsetMonad(std::string name, bool poset, SubsetFamily family, std::size_t cap)
      : FiniteMonad(cap), name_(std::move(name)), poset_(poset), family_(family) {}

  std::string name() const override { return name_; }
  bool poset_based() const override { return poset_; }

  std::size_t unit(const MonadObject& tx, std::size_t x) const override {
    switch (family_) {
      case SubsetFamily::All: return tx.index_of(Subset(tx.base->size(), {x}));
      case SubsetFamily::Downsets:
      case SubsetFamily::NonemptyDownsets: return tx.index_of(tx.base->down(x));
      case SubsetFamily::NonemptyUpsets: return tx.index_of(tx.base->up(x));
    }
    return 0;
  }

  std::size_t bind(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f,
                   std::size_t m) const override {
    check_arrow_shape(tx, ty, f);
    return ty.index_of(union_bind(tx, ty, f, m));
  }

 protected:
  MonadObject build(const PosetRef& base) const override {
    std::vector<Subset> elems;
    switch (family_) {
      case SubsetFamily::All: elems = powerset_lattice(base).members; break;
      case SubsetFamily::Downsets: elems = downset_lattice(base).members; break;
      case SubsetFamily::NonemptyDownsets:
        for (auto& d : downset_lattice(base).members)
          if (!d.empty()) elems.push_back(d);
        break;
      case SubsetFamily::NonemptyUpsets:
        for (auto& u : upset_lattice(base).members)
          if (!u.empty()) elems.push_back(u);
        break;
    }
    const LeqFn leq = family_ == SubsetFamily::NonemptyUpsets ? LeqFn(reverse_inclusion) : LeqFn(inclusion);
    return make_object(name_, base, std::move(elems), leq,
                       [&](const Subset& s) { return render_subset(*base, s); });
  }

 private:
  std::string name_;
  bool poset_;
  SubsetFamily family_;
};

// ---------------------------------------------------------------- double-dual monads

// T(X) = structure-preserving maps Pred(X) -> 2, stored as the set of
// predicates sent to 1. Unit evaluates, bind pulls predicates back.
class DoubleDualMonad final : public FiniteMonad {
 public:
  DoubleDualMonad(std::string name, bool poset, std::optional<MapClass> cls, std::size_t cap)
      : FiniteMonad(cap), name_(std::move(name)), poset_(poset), cls_(cls) {}

  std::string name() const override { return name_; }
  bool poset_based() const override { return poset_; }

  std::size_t unit(const MonadObject& tx, std::size_t x) const override {
    const SetLattice& preds = *tx.preds;
    Subset phi(preds.size());
    for (std::size_t k = 0; k < preds.size(); ++k)
      if (preds.member(k).contains(x)) phi.insert(k);
    return tx.index_of(phi);
  }

  std::size_t bind(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f,
                   std::size_t m) const override {
    check_arrow_shape(tx, ty, f);
    const SetLattice& px = *tx.preds;
    const SetLattice& py = *ty.preds;
    const Subset& phi = tx.element(m);
    Subset out(py.size());
    for (std::size_t k = 0; k < py.size(); ++k) {
      Subset pulled(tx.base->size());
      for (std::size_t x = 0; x < pulled.universe(); ++x)
        if (ty.element(f[x]).contains(k)) pulled.insert(x);
      if (phi.contains(px.index_of(pulled))) out.insert(k);
    }
    return ty.index_of(out);
  }

  nlohmann::json element_json(const MonadObject& tx, std::size_t i) const override {
    nlohmann::json family = nlohmann::json::array();
    tx.element(i).for_each([&](std::size_t k) {
      nlohmann::json names = nlohmann::json::array();
      tx.preds->member(k).for_each([&](std::size_t x) { names.push_back(tx.base->name(x)); });
      family.push_back(names);
    });
    return family;
  }

 protected:
  MonadObject build(const PosetRef& base) const override {
    SetLattice preds = poset_ ? upset_lattice(base) : powerset_lattice(base);
    std::vector<Subset> elems;
    if (!cls_) {
      if (preds.size() > 16) fail(ErrorKind::TooLarge, "too many predicates to enumerate all families");
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << preds.size()); ++m)
        elems.push_back(Subset::from_mask(preds.size(), m));
    } else {
      for (const auto& map : enumerate_structure_maps(preds.lattice, two_chain(), *cls_)) {
        Subset phi(preds.size());
        for (std::size_t k = 0; k < preds.size(); ++k)
          if (map(k) == 1) phi.insert(k);
        elems.push_back(phi);
      }
      std::sort(elems.begin(), elems.end());
    }
    auto obj = make_object(name_, base, std::move(elems), inclusion, [&](const Subset& phi) {
      std::string out = "{";
      bool first = true;
      phi.for_each([&](std::size_t k) {
        if (!first) out += ",";
        out += render_subset(*base, preds.member(k));
        first = false;
      });
      return out + "}";
    });
    obj.preds = std::move(preds);
    return obj;
  }

 private:
  std::string name_;
  bool poset_;
  std::optional<MapClass> cls_;
};

// ---------------------------------------------------------------- Plotkin

// Elements are pairs (C, K): C a nonempty downset, K a nonempty upset, with
// K ∩ C nonempty. Stored as one subset of 2n bits, C first. As a functional
// on lens pairs (U1 ⊇ U2): (U1, U2) ↦ j⁻¹([U1 ∩ C ≠ ∅], [K ⊆ U2]).
class PlotkinMonad final : public FiniteMonad {
 public:
  explicit PlotkinMonad(std::size_t cap) : FiniteMonad(cap) {}

  std::string name() const override { return "plotkin"; }
  bool poset_based() const override { return true; }

  static Subset lower(const Subset& e, std::size_t n) {
    Subset c(n);
    for (std::size_t x = 0; x < n; ++x) c.set(x, e.contains(x));
    return c;
  }
  static Subset upper(const Subset& e, std::size_t n) {
    Subset k(n);
    for (std::size_t x = 0; x < n; ++x) k.set(x, e.contains(n + x));
    return k;
  }
  static Subset pack(const Subset& c, const Subset& k) {
    const std::size_t n = c.universe();
    Subset e(2 * n);
    c.for_each([&](std::size_t x) { e.insert(x); });
    k.for_each([&](std::size_t x) { e.insert(n + x); });
    return e;
  }

  static std::size_t evaluate(const MonadObject& t, std::size_t elem, const Subset& u1, const Subset& u2) {
    const std::size_t n = t.base->size();
    const Subset& e = t.element(elem);
    return three::join_pair(u1.intersects(lower(e, n)), upper(e, n).is_subset_of(u2));
  }

  std::size_t unit(const MonadObject& tx, std::size_t x) const override {
    return tx.index_of(pack(tx.base->down(x), tx.base->up(x)));
  }

  // Unfolding the dual description below: lower sets and upper sets are
  // pushed forward separately, each by union.
  std::size_t bind(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f,
                   std::size_t m) const override {
    check_arrow_shape(tx, ty, f);
    const std::size_t nx = tx.base->size();
    const std::size_t ny = ty.base->size();
    const Subset& e = tx.element(m);
    Subset c(ny);
    Subset k(ny);
    for (std::size_t x = 0; x < nx; ++x) {
      const Subset& image = ty.element(f[x]);
      if (e.contains(x)) c |= lower(image, ny);
      if (e.contains(nx + x)) k |= upper(image, ny);
    }
    return ty.index_of(pack(c, k));
  }

  // Ψ(U1, U2) = Φ(x ↦ f(x)(U1, U2)), the pulled-back map read as a lens on X.
  static Subset bind_by_duality(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f,
                                std::size_t m) {
    check_arrow_shape(tx, ty, f);
    const std::size_t nx = tx.base->size();
    auto psi = [&](const Subset& u1, const Subset& u2) {
      Subset v1(nx);
      Subset v2(nx);
      for (std::size_t x = 0; x < nx; ++x) {
        const std::size_t v = evaluate(ty, f[x], u1, u2);
        v1.set(x, v != three::Zero);
        v2.set(x, v == three::One);
      }
      if (!tx.base->is_upset(v1) || !tx.base->is_upset(v2)) {
        fail(ErrorKind::NotMonotone, "Kleisli arrow into the Plotkin monad is not monotone");
      }
      return evaluate(tx, m, v1, v2);
    };
    return decode(ty, psi);
  }

  // y ∈ C iff value(↑y, ∅) ≠ 0; K is the least upset U with value(Y, U) = 1.
  static Subset decode(const MonadObject& t, const std::function<std::size_t(const Subset&, const Subset&)>& value) {
    const std::size_t n = t.base->size();
    Subset c(n);
    for (std::size_t y = 0; y < n; ++y) c.set(y, value(t.base->up(y), Subset(n)) != three::Zero);
    Subset k = Subset::full(n);
    for (const Subset& u : t.preds->members)
      if (value(Subset::full(n), u) == three::One) k &= u;
    return pack(c, k);
  }

  nlohmann::json element_json(const MonadObject& tx, std::size_t i) const override {
    const std::size_t n = tx.base->size();
    nlohmann::json lo = nlohmann::json::array();
    nlohmann::json hi = nlohmann::json::array();
    lower(tx.element(i), n).for_each([&](std::size_t x) { lo.push_back(tx.base->name(x)); });
    upper(tx.element(i), n).for_each([&](std::size_t x) { hi.push_back(tx.base->name(x)); });
    return {{"lower", lo}, {"upper", hi}};
  }

 protected:
  MonadObject build(const PosetRef& base) const override {
    const std::size_t n = base->size();
    SetLattice opens = upset_lattice(base);
    std::vector<Subset> elems;
    for (const Subset& c : downset_lattice(base).members) {
      if (c.empty()) continue;
      for (const Subset& k : opens.members)
        if (!k.empty() && k.intersects(c)) elems.push_back(pack(c, k));
    }
    std::sort(elems.begin(), elems.end());
    auto obj = make_object(
        name(), base, std::move(elems),
        [n](const Subset& a, const Subset& b) {
          return lower(a, n).is_subset_of(lower(b, n)) && upper(b, n).is_subset_of(upper(a, n));
        },
        [&](const Subset& e) {
          return "<" + render_subset(*base, lower(e, n)) + ";" + render_subset(*base, upper(e, n)) + ">";
        });
    obj.preds = std::move(opens);
    return obj;
  }
};

}  // namespace

MonadRef powerset_monad(std::size_t cap) {
  return std::make_shared<SubsetMonad>("powerset", false, SubsetFamily::All, cap);
}
MonadRef neighbourhood_monad(std::size_t cap) {
  return std::make_shared<DoubleDualMonad>("neighbourhood", false, std::nullopt, cap);
}
MonadRef monotone_neighbourhood_monad(std::size_t cap) {
  return std::make_shared<DoubleDualMonad>("monotone-neighbourhood", false, MapClass::Monotone, cap);
}
MonadRef filter_monad(std::size_t cap) {
  return std::make_shared<DoubleDualMonad>("filter", false, MapClass::MeetTop, cap);
}
MonadRef ultrafilter_monad(std::size_t cap) {
  return std::make_shared<DoubleDualMonad>("ultrafilter", false, MapClass::Boolean, cap);
}
MonadRef downset_monad(std::size_t cap) {
  return std::make_shared<SubsetMonad>("downset", true, SubsetFamily::Downsets, cap);
}
MonadRef hoare_monad(std::size_t cap) {
  return std::make_shared<SubsetMonad>("hoare", true, SubsetFamily::NonemptyDownsets, cap);
}
MonadRef smyth_monad(std::size_t cap) {
  return std::make_shared<SubsetMonad>("smyth", true, SubsetFamily::NonemptyUpsets, cap);
}
MonadRef smyth_filter_monad(std::size_t cap) {
  return std::make_shared<DoubleDualMonad>("smyth-filter", true, MapClass::Preframe0, cap);
}
MonadRef plotkin_monad(std::size_t cap) { return std::make_shared<PlotkinMonad>(cap); }

std::vector<std::string> monad_ids() {
  return {"powerset", "neighbourhood", "monotone-neighbourhood", "filter", "ultrafilter",
          "downset",  "hoare",         "smyth",                  "smyth-filter", "plotkin"};
}

MonadRef make_monad(const std::string& id, std::size_t cap) {
  auto pick = [&](std::size_t dflt) { return cap == 0 ? dflt : cap; };
  if (id == "powerset") return powerset_monad(pick(8));
  if (id == "neighbourhood") return neighbourhood_monad(pick(3));
  if (id == "monotone-neighbourhood") return monotone_neighbourhood_monad(pick(3));
  if (id == "filter") return filter_monad(pick(3));
  if (id == "ultrafilter") return ultrafilter_monad(pick(4));
  if (id == "downset") return downset_monad(pick(5));
  if (id == "hoare") return hoare_monad(pick(5));
  if (id == "smyth") return smyth_monad(pick(5));
  if (id == "smyth-filter") return smyth_filter_monad(pick(5));
  if (id == "plotkin") return plotkin_monad(pick(4));
  fail(ErrorKind::InvalidArgument, "unknown monad '" + id + "'");
}

// ---------------------------------------------------------------- Kleisli arrows

KleisliArrow::KleisliArrow(MonadRef monad_, ObjectRef source_, ObjectRef target_, std::vector<std::size_t> images_)
    : monad(std::move(monad_)), source(std::move(source_)), target(std::move(target_)), images(std::move(images_)) {
  if (source->monad != monad->name() || target->monad != monad->name()) {
    fail(ErrorKind::MonadMismatch, "arrow objects belong to another monad than " + monad->name());
  }
  if (images.size() != source->base->size()) fail(ErrorKind::CarrierMismatch, "arrow does not cover its domain");
  for (std::size_t v : images)
    if (v >= target->size()) fail(ErrorKind::UnknownElement, "arrow image outside T(Y)");
  for (auto [a, b] : source->base->covers())
    if (!target->carrier->leq(images[a], images[b])) {
      fail(ErrorKind::NotMonotone, "Kleisli arrow is not monotone at " + source->base->name(a));
    }
}

KleisliArrow KleisliArrow::unit(const MonadRef& monad, const ObjectRef& tx) {
  std::vector<std::size_t> images(tx->base->size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = monad->unit(*tx, x);
  return KleisliArrow(monad, tx, tx, std::move(images));
}

std::vector<KleisliArrow> enumerate_kleisli(const MonadRef& monad, const ObjectRef& tx, const ObjectRef& ty,
                                            std::uint64_t budget) {
  std::vector<KleisliArrow> out;
  for (const auto& m : enumerate_structure_maps(tx->base, ty->carrier, MapClass::Monotone, budget))
    out.emplace_back(monad, tx, ty, m.graph());
  return out;
}

std::uint64_t count_kleisli_upper_bound(const ObjectRef& tx, const ObjectRef& ty) {
  std::uint64_t total = 1;
  for (std::size_t x = 0; x < tx->base->size(); ++x) {
    if (ty->size() != 0 && total > std::numeric_limits<std::uint64_t>::max() / ty->size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= ty->size();
  }
  return total;
}

// ---------------------------------------------------------------- checks

CollapseReport cba_collapse_check(std::size_t n) {
  if (n > 3) fail(ErrorKind::TooLarge, "complete-Boolean collapse check is exhaustive only up to 3 points");
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  CollapseReport report;
  report.points = n;
  std::vector<std::uint64_t> found;
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << subsets); ++h) {
    auto val = [&](std::size_t a) { return ((h >> a) & 1U) != 0; };
    bool ok = true;
    for (std::size_t a = 0; a < subsets && ok; ++a) ok = val((subsets - 1) & ~a) == !val(a);
    for (std::uint64_t fam = 0; fam < families && ok; ++fam) {
      std::size_t join = 0;
      bool any = false;
      for (std::size_t a = 0; a < subsets; ++a)
        if ((fam >> a) & 1U) {
          join |= a;
          any = any || val(a);
        }
      ok = val(join) == any;
    }
    if (ok) found.push_back(h);
  }
  report.maps = found.size();
  std::vector<bool> matched(n, false);
  report.every_map_is_a_unit = true;
  for (std::uint64_t h : found) {
    bool is_unit = false;
    for (std::size_t x = 0; x < n && !is_unit; ++x) {
      bool eq = true;
      for (std::size_t a = 0; a < subsets && eq; ++a) eq = (((h >> a) & 1U) != 0) == (((a >> x) & 1U) != 0);
      if (eq && !matched[x]) matched[x] = is_unit = true;
    }
    report.every_map_is_a_unit = report.every_map_is_a_unit && is_unit;
  }
  return report;
}

bool all_filters_principal(const MonadObject& tx) {
  if (!tx.preds) fail(ErrorKind::InvalidArgument, tx.monad + " has no predicate lattice");
  const SetLattice& preds = *tx.preds;
  for (const Subset& phi : tx.elems) {
    if (phi.empty()) return false;
    Subset generator = Subset::full(tx.base->size());
    phi.for_each([&](std::size_t k) { generator &= preds.member(k); });
    Subset principal(preds.size());
    for (std::size_t k = 0; k < preds.size(); ++k)
      if (generator.is_subset_of(preds.member(k))) principal.insert(k);
    if (principal != phi) return false;
  }
  return true;
}

std::vector<std::size_t> plotkin_functional(const MonadObject& tx, std::size_t elem, const ThreeValuedMaps& maps) {
  if (tx.monad != "plotkin") fail(ErrorKind::MonadMismatch, "expected a Plotkin object");
  if (!(*maps.base == *tx.base)) fail(ErrorKind::CarrierMismatch, "three-valued maps over another poset");
  std::vector<std::size_t> out;
  const std::size_t n = tx.base->size();
  for (const auto& v : maps.maps) {
    Subset u1(n);
    Subset u2(n);
    for (std::size_t x = 0; x < n; ++x) {
      u1.set(x, v[x] != three::Zero);
      u2.set(x, v[x] == three::One);
    }
    out.push_back(PlotkinMonad::evaluate(tx, elem, u1, u2));
  }
  return out;
}

Subset plotkin_pack(const Subset& lower, const Subset& upper) {
  if (lower.universe() != upper.universe())
    fail(ErrorKind::CarrierMismatch, "lower and upper sets over different carriers");
  return PlotkinMonad::pack(lower, upper);
}

std::pair<Subset, Subset> plotkin_unpack(const Subset& elem, std::size_t n) {
  if (elem.universe() != 2 * n) fail(ErrorKind::CarrierMismatch, "not a Plotkin element over this carrier");
  return {PlotkinMonad::lower(elem, n), PlotkinMonad::upper(elem, n)};
}

std::size_t plotkin_evaluate(const MonadObject& tx, std::size_t elem, const Subset& outer, const Subset& inner) {
  if (tx.monad != "plotkin") fail(ErrorKind::MonadMismatch, "expected a Plotkin object");
  return PlotkinMonad::evaluate(tx, elem, outer, inner);
}

Subset plotkin_bind_by_duality(const MonadObject& tx, const MonadObject& ty, std::span<const std::size_t> f,
                               std::size_t m) {
  if (tx.monad != "plotkin" || ty.monad != "plotkin") fail(ErrorKind::MonadMismatch, "expected Plotkin objects");
  return PlotkinMonad::bind_by_duality(tx, ty, f, m);
}

Subset plotkin_decode(const MonadObject& tx, const std::function<std::size_t(const Subset&, const Subset&)>& value) {
  if (tx.monad != "plotkin") fail(ErrorKind::MonadMismatch, "expected a Plotkin object");
  return PlotkinMonad::decode(tx, value);
}

std::vector<std::size_t> smyth_upsets_to_filters(const MonadObject& upsets, const MonadObject& filters) {
  if (upsets.monad != "smyth" || filters.monad != "smyth-filter") {
    fail(ErrorKind::MonadMismatch, "expected the two Smyth presentations");
  }
  if (!(*upsets.base == *filters.base)) fail(ErrorKind::CarrierMismatch, "Smyth objects over different posets");
  const SetLattice& preds = *filters.preds;
  std::vector<std::size_t> out;
  for (const Subset& k : upsets.elems) {
    Subset phi(preds.size());
    for (std::size_t v = 0; v < preds.size(); ++v)
      if (k.is_subset_of(preds.member(v))) phi.insert(v);
    out.push_back(filters.index_of(phi));
  }
  return out;
}

}  // namespace tri
