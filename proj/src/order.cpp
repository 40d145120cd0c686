#include "tri/order.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "tri/error.hpp"

namespace tri {

// ---------------------------------------------------------------- FinSet

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      // Compare digit runs numerically without overflow: strip leading zeros, then length, then text.
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      if (int c = a.compare(is, ie - is, b, js, je - js); c != 0) return c < 0;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

FinSet::FinSet(std::vector<std::string> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      fail(ErrorKind::InvalidArgument, "duplicate element '" + elements_[i] + "'");
    }
  }
}

FinSet FinSet::canonical(std::vector<std::string> elements) {
  std::stable_sort(elements.begin(), elements.end(), natural_less);
  return FinSet(std::move(elements));
}

FinSet FinSet::range(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return FinSet(std::move(names));
}

std::optional<std::size_t> FinSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail(ErrorKind::UnknownElement, "no element named '" + name + "'");
  return it->second;
}

// ---------------------------------------------------------------- FinPoset

FinPoset FinPoset::from_leq(FinSet carrier, const std::function<bool(std::size_t, std::size_t)>& leq,
                            std::string label) {
  const std::size_t n = carrier.size();
  if (n > kMaxPosetSize) {
    fail(ErrorKind::TooLarge, "poset of " + std::to_string(n) + " points exceeds " + std::to_string(kMaxPosetSize));
  }
  FinPoset p;
  p.label_ = std::move(label);
  p.up_.assign(n, Subset(n));
  p.down_.assign(n, Subset(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(a, b)) {
        p.up_[a].insert(b);
        p.down_[b].insert(a);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.up_[a].contains(a)) fail(ErrorKind::InvalidArgument, "order is not reflexive at " + carrier.name(a));
    for (std::size_t b : p.up_[a].elements()) {
      if (b != a && p.up_[b].contains(a)) {
        fail(ErrorKind::CycleError, "order is not antisymmetric: " + carrier.name(a) + ", " + carrier.name(b));
      }
      if (!p.up_[b].is_subset_of(p.up_[a])) {
        fail(ErrorKind::InvalidArgument, "order is not transitive through " + carrier.name(b));
      }
    }
  }
  p.carrier_ = std::move(carrier);
  return p;
}

FinPoset FinPoset::discrete(FinSet carrier, std::string label) {
  return from_leq(std::move(carrier), [](std::size_t a, std::size_t b) { return a == b; }, std::move(label));
}

FinPoset FinPoset::chain(std::size_t n) {
  return from_leq(FinSet::range(n), [](std::size_t a, std::size_t b) { return a <= b; },
                  "chain" + std::to_string(n));
}

FinPoset FinPoset::antichain(std::size_t n) { return discrete(FinSet::range(n), "antichain" + std::to_string(n)); }

bool FinPoset::is_discrete() const {
  for (const auto& u : up_)
    if (u.count() != 1) return false;
  return true;
}

FinPoset FinPoset::opposite() const {
  FinPoset p = *this;
  std::swap(p.up_, p.down_);
  p.label_ = label_.empty() ? "" : "op(" + label_ + ")";
  return p;
}

FinPoset FinPoset::with_label(std::string label) const {
  FinPoset p = *this;
  p.label_ = std::move(label);
  return p;
}

bool FinPoset::is_upset(const Subset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && up_[x].is_subset_of(s); });
  return ok;
}

bool FinPoset::is_downset(const Subset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && down_[x].is_subset_of(s); });
  return ok;
}

Subset FinPoset::up_closure(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) { out |= up_[x]; });
  return out;
}

Subset FinPoset::down_closure(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) { out |= down_[x]; });
  return out;
}

Subset FinPoset::minimal(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) {
    if ((down_[x] & s).count() == 1) out.insert(x);
  });
  return out;
}

Subset FinPoset::maximal(const Subset& s) const {
  Subset out(size());
  s.for_each([&](std::size_t x) {
    if ((up_[x] & s).count() == 1) out.insert(x);
  });
  return out;
}

std::optional<std::size_t> FinPoset::join(const Subset& s) const {
  Subset bounds = Subset::full(size());
  s.for_each([&](std::size_t x) { bounds &= up_[x]; });
  std::optional<std::size_t> least;
  bounds.for_each([&](std::size_t u) {
    if (!least && bounds.is_subset_of(up_[u])) least = u;
  });
  return least;
}

std::optional<std::size_t> FinPoset::meet(const Subset& s) const {
  Subset bounds = Subset::full(size());
  s.for_each([&](std::size_t x) { bounds &= down_[x]; });
  std::optional<std::size_t> greatest;
  bounds.for_each([&](std::size_t u) {
    if (!greatest && bounds.is_subset_of(down_[u])) greatest = u;
  });
  return greatest;
}

std::optional<std::size_t> FinPoset::join(std::size_t a, std::size_t b) const {
  Subset s(size());
  s.insert(a);
  s.insert(b);
  return join(s);
}

std::optional<std::size_t> FinPoset::meet(std::size_t a, std::size_t b) const {
  Subset s(size());
  s.insert(a);
  s.insert(b);
  return meet(s);
}

std::optional<std::size_t> FinPoset::bottom() const { return join(Subset(size())); }
std::optional<std::size_t> FinPoset::top() const { return meet(Subset(size())); }

bool FinPoset::is_lattice() const {
  if (!bottom()) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!join(a, b)) return false;
  return true;
}

std::vector<std::size_t> FinPoset::linear_extension() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
  return order;
}

std::vector<std::pair<std::size_t, std::size_t>> FinPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : up_[a].elements()) {
      if (b != a && (up_[a] & down_[b]).count() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

FinPoset make_poset(std::vector<std::string> elements,
                    const std::vector<std::pair<std::string, std::string>>& covers, std::string label) {
  FinSet carrier = FinSet::canonical(std::move(elements));
  const std::size_t n = carrier.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
  for (const auto& [lo, hi] : covers) up[carrier.index_of(lo)].insert(carrier.index_of(hi));
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (up[a].contains(b) && up[b].contains(a)) {
        fail(ErrorKind::CycleError, "covers form a cycle through " + carrier.name(a) + " and " + carrier.name(b));
      }
  return FinPoset::from_leq(std::move(carrier), [&](std::size_t a, std::size_t b) { return up[a].contains(b); },
                            std::move(label));
}

// ---------------------------------------------------------------- MonotoneMap

MonotoneMap::MonotoneMap(PosetRef dom, PosetRef cod, std::vector<std::size_t> graph)
    : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {
  if (graph_.size() != dom_->size()) fail(ErrorKind::InvalidArgument, "map graph does not cover the domain");
  for (std::size_t v : graph_)
    if (v >= cod_->size()) fail(ErrorKind::UnknownElement, "map value outside the codomain");
  for (std::size_t a = 0; a < dom_->size(); ++a) {
    for (std::size_t b : dom_->up(a).elements()) {
      if (!cod_->leq(graph_[a], graph_[b])) {
        fail(ErrorKind::NotMonotone, dom_->name(a) + " <= " + dom_->name(b) + " but images are not ordered");
      }
    }
  }
}

MonotoneMap MonotoneMap::identity(const PosetRef& p) {
  std::vector<std::size_t> g(p->size());
  std::iota(g.begin(), g.end(), 0);
  return MonotoneMap(p, p, std::move(g));
}

MonotoneMap MonotoneMap::constant(const PosetRef& dom, const PosetRef& cod, std::size_t value) {
  return MonotoneMap(dom, cod, std::vector<std::size_t>(dom->size(), value));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(*f.cod() == *g.dom())) fail(ErrorKind::CarrierMismatch, "composite of maps with mismatched carriers");
  std::vector<std::size_t> out(f.dom()->size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = g(f(x));
  return MonotoneMap(f.dom(), g.cod(), std::move(out));
}

bool pointwise_leq(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(*f.dom() == *g.dom()) || !(*f.cod() == *g.cod())) {
    fail(ErrorKind::CarrierMismatch, "pointwise comparison of maps with different carriers");
  }
  for (std::size_t x = 0; x < f.dom()->size(); ++x)
    if (!f.cod()->leq(f(x), g(x))) return false;
  return true;
}

// ---------------------------------------------------------------- set lattices

std::size_t SetLattice::index_of(const Subset& s) const {
  auto it = index.find(s);
  if (it == index.end()) fail(ErrorKind::UnknownElement, "subset is not a member of this family");
  return it->second;
}

std::string render_subset(const FinSet& base, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t x) {
    if (!first) out += ",";
    out += base.name(x);
    first = false;
  });
  return out + "}";
}

std::string render_subset(const FinPoset& base, const Subset& s) { return render_subset(base.carrier(), s); }

SetLattice subset_family(const PosetRef& base, std::vector<Subset> members) {
  SetLattice out;
  out.base = base;
  std::vector<std::string> names;
  names.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].universe() != base->size()) fail(ErrorKind::CarrierMismatch, "family member over wrong universe");
    if (!out.index.emplace(members[i], i).second) fail(ErrorKind::InvalidArgument, "duplicate family member");
    names.push_back(render_subset(*base, members[i]));
  }
  out.lattice = share(FinPoset::from_leq(
      FinSet(std::move(names)), [&](std::size_t a, std::size_t b) { return members[a].is_subset_of(members[b]); }));
  out.members = std::move(members);
  return out;
}

SetLattice powerset_lattice(const PosetRef& base) {
  const std::size_t n = base->size();
  if (n > 16) fail(ErrorKind::TooLarge, "powerset of more than 16 points");
  std::vector<Subset> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) members.push_back(Subset::from_mask(n, m));
  return subset_family(base, std::move(members));
}

namespace {

// Downsets of p, generated along a linear extension: a point may join the set
// only once everything strictly below it has.
std::vector<Subset> enumerate_downsets(const FinPoset& p) {
  const auto order = p.linear_extension();
  std::vector<Subset> out;
  Subset current(p.size());
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(current);
      return;
    }
    const std::size_t x = order[k];
    go(k + 1);
    Subset below = p.down(x);
    below.erase(x);
    if (below.is_subset_of(current)) {
      current.insert(x);
      go(k + 1);
      current.erase(x);
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> enumerate_upsets(const FinPoset& p) {
  std::vector<Subset> out;
  for (const auto& d : enumerate_downsets(p)) out.push_back(d.complement());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SetLattice upset_lattice(const PosetRef& base) { return subset_family(base, enumerate_upsets(*base)); }
SetLattice downset_lattice(const PosetRef& base) { return subset_family(base, enumerate_downsets(*base)); }

FinPoset upsets(const FinPoset& p) {
  auto lat = upset_lattice(share(p));
  return lat.lattice->with_label(p.label().empty() ? "" : "Up(" + p.label() + ")");
}

FinPoset downsets(const FinPoset& p) {
  auto lat = downset_lattice(share(p));
  return lat.lattice->with_label(p.label().empty() ? "" : "Dwn(" + p.label() + ")");
}

SubsetOf SubsetOf::make(const PosetRef& ambient, Subset members, SubsetKind kind) {
  if (members.universe() != ambient->size()) fail(ErrorKind::CarrierMismatch, "subset over a different carrier");
  if (kind == SubsetKind::Upset && !ambient->is_upset(members)) {
    fail(ErrorKind::InvalidArgument, "subset is not an upset");
  }
  if (kind == SubsetKind::Downset && !ambient->is_downset(members)) {
    fail(ErrorKind::InvalidArgument, "subset is not a downset");
  }
  return SubsetOf(ambient, std::move(members), kind);
}

SubsetOf down_closure(const PosetRef& p, const Subset& s) {
  if (s.universe() != p->size()) fail(ErrorKind::CarrierMismatch, "subset over a different carrier");
  return SubsetOf::make(p, p->down_closure(s), SubsetKind::Downset);
}

SubsetOf up_closure(const PosetRef& p, const Subset& s) {
  if (s.universe() != p->size()) fail(ErrorKind::CarrierMismatch, "subset over a different carrier");
  return SubsetOf::make(p, p->up_closure(s), SubsetKind::Upset);
}

// ---------------------------------------------------------------- adjoints

MonotoneMap right_adjoint(const MonotoneMap& f) {
  const FinPoset& dom = *f.dom();
  const FinPoset& cod = *f.cod();
  if (!dom.is_lattice() || !cod.is_lattice()) fail(ErrorKind::InvalidArgument, "right adjoint needs lattices");
  if (f(*dom.bottom()) != *cod.bottom()) fail(ErrorKind::NotJoinPreserving, "bottom is not preserved");
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = a + 1; b < dom.size(); ++b)
      if (f(*dom.join(a, b)) != *cod.join(f(a), f(b))) {
        fail(ErrorKind::NotJoinPreserving, "join of " + dom.name(a) + " and " + dom.name(b) + " is not preserved");
      }
  std::vector<std::size_t> graph(cod.size());
  for (std::size_t b = 0; b < cod.size(); ++b) {
    Subset below(dom.size());
    for (std::size_t x = 0; x < dom.size(); ++x)
      if (cod.leq(f(x), b)) below.insert(x);
    graph[b] = *dom.join(below);
  }
  MonotoneMap adj(f.cod(), f.dom(), std::move(graph));
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = 0; b < cod.size(); ++b)
      if (cod.leq(f(a), b) != dom.leq(a, adj(b))) {
        fail(ErrorKind::NotJoinPreserving, "Galois condition fails at " + dom.name(a) + ", " + cod.name(b));
      }
  return adj;
}

// ---------------------------------------------------------------- two-valued maps

bool preserves_two_valued(const FinPoset& lattice, const TwoValuedMap& phi, TwoValuedVariant variant) {
  if (phi.universe() != lattice.size()) fail(ErrorKind::CarrierMismatch, "two-valued map over a different lattice");
  if (!lattice.is_lattice()) fail(ErrorKind::InvalidArgument, "not a lattice");
  const std::size_t bot = *lattice.bottom();
  const std::size_t top = *lattice.top();
  const std::size_t n = lattice.size();
  switch (variant) {
    case TwoValuedVariant::JoinsToTwo:
      if (phi.contains(bot)) return false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (phi.contains(*lattice.join(a, b)) != (phi.contains(a) || phi.contains(b))) return false;
      return true;
    case TwoValuedVariant::JoinsToOpTwo:
      if (!phi.contains(bot)) return false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (phi.contains(*lattice.join(a, b)) != (phi.contains(a) && phi.contains(b))) return false;
      return true;
    case TwoValuedVariant::MeetsToTwo:
      if (!phi.contains(top)) return false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (phi.contains(*lattice.meet(a, b)) != (phi.contains(a) && phi.contains(b))) return false;
      return true;
    case TwoValuedVariant::MeetsToOpTwo:
      if (phi.contains(top)) return false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (phi.contains(*lattice.meet(a, b)) != (phi.contains(a) || phi.contains(b))) return false;
      return true;
  }
  return false;
}

std::size_t two_valued_to_element(const FinPoset& lattice, const TwoValuedMap& phi, TwoValuedVariant variant) {
  if (!preserves_two_valued(lattice, phi, variant)) {
    fail(ErrorKind::StructureNotPreserved, "two-valued map does not preserve the selected structure");
  }
  const Subset zeros = phi.complement();
  switch (variant) {
    case TwoValuedVariant::JoinsToTwo: return *lattice.join(zeros);
    case TwoValuedVariant::JoinsToOpTwo: return *lattice.join(phi);
    case TwoValuedVariant::MeetsToTwo: return *lattice.meet(phi);
    case TwoValuedVariant::MeetsToOpTwo: return *lattice.meet(zeros);
  }
  return 0;
}

TwoValuedMap element_to_two_valued(const FinPoset& lattice, std::size_t a, TwoValuedVariant variant) {
  if (a >= lattice.size()) fail(ErrorKind::UnknownElement, "lattice element out of range");
  switch (variant) {
    case TwoValuedVariant::JoinsToTwo: return lattice.down(a).complement();
    case TwoValuedVariant::JoinsToOpTwo: return lattice.down(a);
    case TwoValuedVariant::MeetsToTwo: return lattice.up(a);
    case TwoValuedVariant::MeetsToOpTwo: return lattice.up(a).complement();
  }
  return Subset(lattice.size());
}

// ---------------------------------------------------------------- poset enumeration

namespace {

// Strict order on {0..n-1} as an n*n bit code (bit i*n+j set iff i < j).
using Code = std::uint64_t;

Code relabel(const std::vector<Subset>& strict_up, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  Code c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : strict_up[i].elements()) c |= Code{1} << (perm[i] * n + perm[j]);
  return c;
}

Code canonical_code(const std::vector<Subset>& strict_up) {
  std::vector<std::size_t> perm(strict_up.size());
  std::iota(perm.begin(), perm.end(), 0);
  Code best = ~Code{0};
  do {
    best = std::min(best, relabel(strict_up, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FinPoset> all_posets(std::size_t n) {
  if (n > 6) fail(ErrorKind::TooLarge, "poset enumeration is limited to 6 points");
  std::set<Code> codes;
  // Naturally labelled generation: point k sits above a downset of {0..k-1}.
  std::vector<Subset> down(n, Subset(n));
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      std::vector<Subset> strict_up(n, Subset(n));
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a : down[b].elements())
          if (a != b) strict_up[a].insert(b);
      codes.insert(canonical_code(strict_up));
      return;
    }
    Subset prefix(n);
    for (std::size_t i = 0; i < k; ++i) prefix.insert(i);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      Subset below = Subset::from_mask(n, m);
      bool closed = true;
      below.for_each([&](std::size_t x) { closed = closed && down[x].is_subset_of(below); });
      if (!closed) continue;
      down[k] = below;
      down[k].insert(k);
      go(k + 1);
    }
  };
  go(0);
  std::vector<FinPoset> out;
  std::size_t idx = 0;
  for (Code c : codes) {
    out.push_back(FinPoset::from_leq(
        FinSet::range(n), [&](std::size_t a, std::size_t b) { return a == b || ((c >> (a * n + b)) & 1U); },
        "P" + std::to_string(n) + "_" + std::to_string(idx++)));
  }
  return out;
}

std::vector<FinPoset> all_lattices(std::size_t n) {
  std::vector<FinPoset> out;
  for (auto& p : all_posets(n))
    if (p.is_lattice()) out.push_back(std::move(p));
  return out;
}

FinPoset boolean_lattice(std::size_t n) {
  return powerset_lattice(share(FinPoset::antichain(n))).lattice->with_label("B" + std::to_string(n));
}

}  // namespace tri
