#include "tri/structure.hpp"

#include <algorithm>

#include "tri/error.hpp"

namespace tri {

std::string_view to_string(MapClass cls) {
  switch (cls) {
    case MapClass::Monotone: return "monotone";
    case MapClass::JoinPreserving: return "join-preserving";
    case MapClass::MeetPreserving: return "meet-preserving";
    case MapClass::JoinTop: return "join+top";
    case MapClass::MeetTop: return "meet+top";
    case MapClass::Frame: return "frame";
    case MapClass::Preframe0: return "preframe+0";
    case MapClass::Boolean: return "boolean";
  }
  return "?";
}

MapClass map_class_from_string(std::string_view name) {
  for (auto cls : {MapClass::Monotone, MapClass::JoinPreserving, MapClass::MeetPreserving, MapClass::JoinTop,
                   MapClass::MeetTop, MapClass::Frame, MapClass::Preframe0, MapClass::Boolean}) {
    if (to_string(cls) == name) return cls;
  }
  fail(ErrorKind::InvalidArgument, "unknown structure selector '" + std::string(name) + "'");
}

namespace {

using Table = std::vector<std::vector<std::size_t>>;

struct Constraint {
  enum class Kind { Leq, Const, Op } kind;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t r = 0;
  const Table* cod_table = nullptr;
};

Table binary_table(const FinPoset& p, bool join) {
  Table t(p.size(), std::vector<std::size_t>(p.size()));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      auto v = join ? p.join(a, b) : p.meet(a, b);
      if (!v) fail(ErrorKind::InvalidArgument, "poset '" + p.label() + "' is not a lattice");
      t[a][b] = *v;
    }
  return t;
}

// Backtracking over graphs along a linear extension of the domain; each
// constraint is checked at the position of its last-assigned element.
class MapSearch {
 public:
  MapSearch(const FinPoset& dom, std::size_t cod_size, std::vector<Constraint> constraints, std::uint64_t budget)
      : dom_(dom), cod_size_(cod_size), budget_(budget), order_(dom.linear_extension()), pos_(dom.size()) {
    for (std::size_t k = 0; k < order_.size(); ++k) pos_[order_[k]] = k;
    attached_.resize(order_.size());
    for (auto& c : constraints) {
      std::size_t last = pos_[c.a];
      if (c.kind != Constraint::Kind::Const) last = std::max(last, pos_[c.b]);
      if (c.kind == Constraint::Kind::Op) last = std::max(last, pos_[c.r]);
      attached_[last].push_back(c);
    }
  }

  template <class Emit>
  void run(Emit&& emit) {
    graph_.assign(dom_.size(), 0);
    go(0, emit);
  }

  void set_cod_leq(std::function<bool(std::size_t, std::size_t)> leq) { cod_leq_ = std::move(leq); }

 private:
  template <class Emit>
  void go(std::size_t k, Emit& emit) {
    if (k == order_.size()) {
      emit(graph_);
      return;
    }
    const std::size_t x = order_[k];
    for (std::size_t v = 0; v < cod_size_; ++v) {
      if (++nodes_ > budget_) fail(ErrorKind::TooLarge, "structure-map search exceeded its budget");
      graph_[x] = v;
      if (satisfied(k)) go(k + 1, emit);
    }
  }

  bool satisfied(std::size_t k) const {
    for (const auto& c : attached_[k]) {
      switch (c.kind) {
        case Constraint::Kind::Leq:
          if (!cod_leq_(graph_[c.a], graph_[c.b])) return false;
          break;
        case Constraint::Kind::Const:
          if (graph_[c.a] != c.b) return false;
          break;
        case Constraint::Kind::Op:
          if (graph_[c.r] != (*c.cod_table)[graph_[c.a]][graph_[c.b]]) return false;
          break;
      }
    }
    return true;
  }

  const FinPoset& dom_;
  std::size_t cod_size_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<Constraint>> attached_;
  std::vector<std::size_t> graph_;
  std::function<bool(std::size_t, std::size_t)> cod_leq_;
};

void add_monotone(const FinPoset& dom, std::vector<Constraint>& cs) {
  for (auto [a, b] : dom.covers()) cs.push_back({Constraint::Kind::Leq, a, b, 0, nullptr});
}

void add_op(const FinPoset& dom, const Table& dom_table, const Table& cod_table, std::vector<Constraint>& cs) {
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = a + 1; b < dom.size(); ++b)
      if (!dom.leq(a, b) && !dom.leq(b, a)) cs.push_back({Constraint::Kind::Op, a, b, dom_table[a][b], &cod_table});
}

struct ClassNeeds {
  bool joins = false;
  bool meets = false;
  bool bottom = false;
  bool top = false;
};

ClassNeeds needs_of(MapClass cls) {
  switch (cls) {
    case MapClass::Monotone: return {};
    case MapClass::JoinPreserving: return {true, false, true, false};
    case MapClass::MeetPreserving:
    case MapClass::MeetTop: return {false, true, false, true};
    case MapClass::JoinTop: return {true, false, true, true};
    case MapClass::Frame:
    case MapClass::Boolean: return {true, true, true, true};
    case MapClass::Preframe0: return {false, true, true, true};
  }
  return {};
}

}  // namespace

std::vector<MonotoneMap> enumerate_structure_maps(const PosetRef& dom, const PosetRef& cod, MapClass cls,
                                                  std::uint64_t budget) {
  const ClassNeeds needs = needs_of(cls);
  const bool lattice_ops = needs.joins || needs.meets || needs.bottom || needs.top;
  if (lattice_ops && (!dom->is_lattice() || !cod->is_lattice())) {
    fail(ErrorKind::InvalidArgument, "structure selector '" + std::string(to_string(cls)) + "' needs lattices");
  }
  std::vector<Constraint> cs;
  add_monotone(*dom, cs);
  Table dom_join;
  Table cod_join;
  Table dom_meet;
  Table cod_meet;
  if (needs.joins) {
    dom_join = binary_table(*dom, true);
    cod_join = binary_table(*cod, true);
    add_op(*dom, dom_join, cod_join, cs);
  }
  if (needs.meets) {
    dom_meet = binary_table(*dom, false);
    cod_meet = binary_table(*cod, false);
    add_op(*dom, dom_meet, cod_meet, cs);
  }
  if (needs.bottom) cs.push_back({Constraint::Kind::Const, *dom->bottom(), *cod->bottom(), 0, nullptr});
  if (needs.top) cs.push_back({Constraint::Kind::Const, *dom->top(), *cod->top(), 0, nullptr});

  MapSearch search(*dom, cod->size(), std::move(cs), budget);
  search.set_cod_leq([&](std::size_t a, std::size_t b) { return cod->leq(a, b); });
  std::vector<MonotoneMap> out;
  search.run([&](const std::vector<std::size_t>& g) { out.emplace_back(dom, cod, g); });
  return out;
}

bool preserves(const MonotoneMap& f, MapClass cls) {
  const FinPoset& dom = *f.dom();
  const FinPoset& cod = *f.cod();
  const ClassNeeds needs = needs_of(cls);
  if (needs.bottom && (!dom.bottom() || !cod.bottom() || f(*dom.bottom()) != *cod.bottom())) return false;
  if (needs.top && (!dom.top() || !cod.top() || f(*dom.top()) != *cod.top())) return false;
  for (std::size_t a = 0; a < dom.size(); ++a) {
    for (std::size_t b = a + 1; b < dom.size(); ++b) {
      if (needs.joins) {
        auto j = dom.join(a, b);
        auto k = cod.join(f(a), f(b));
        if (!j || !k || f(*j) != *k) return false;
      }
      if (needs.meets) {
        auto m = dom.meet(a, b);
        auto k = cod.meet(f(a), f(b));
        if (!m || !k || f(*m) != *k) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- Plotkin algebras

void PlotkinAlgebra::validate() const {
  const std::size_t n = size();
  auto bad = [](const std::string& what) { fail(ErrorKind::StructureNotPreserved, "Plotkin algebra: " + what); };
  if (amalg.size() != n) bad("operation table has the wrong size");
  if (!poset->bottom() || *poset->bottom() != zero) bad("0 is not the least element");
  if (!poset->top() || *poset->top() != one) bad("1 is not the greatest element");
  for (std::size_t a = 0; a < n; ++a) {
    if (amalg[a].size() != n) bad("operation table has the wrong size");
    if (amalg[a][a] != a) bad("operation is not idempotent at " + poset->name(a));
    if (amalg[a][bowtie] != bowtie || amalg[bowtie][a] != bowtie) bad("bowtie is not absorbing");
    for (std::size_t b = 0; b < n; ++b) {
      if (amalg[a][b] != amalg[b][a]) bad("operation is not commutative");
      for (std::size_t c = 0; c < n; ++c)
        if (amalg[amalg[a][b]][c] != amalg[a][amalg[b][c]]) bad("operation is not associative");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t a2 : poset->up(a).elements())
      for (std::size_t b = 0; b < n; ++b)
        if (!poset->leq(amalg[a][b], amalg[a2][b])) bad("operation is not monotone");
}

namespace three {

std::size_t amalg(std::size_t a, std::size_t b) {
  if (a == b) return a;
  return Bowtie;
}

std::pair<bool, bool> split(std::size_t v) { return {v != Zero, v == One}; }

std::size_t join_pair(bool first, bool second) {
  if (second && !first) fail(ErrorKind::LensViolation, "pair (0,1) is not below the diagonal");
  if (second) return One;
  return first ? Bowtie : Zero;
}

}  // namespace three

PlotkinAlgebra three_algebra() {
  PlotkinAlgebra alg;
  alg.poset = share(FinPoset::from_leq(FinSet({"0", "b", "1"}), [](std::size_t a, std::size_t b) { return a <= b; },
                                       "3"));
  alg.amalg.assign(3, std::vector<std::size_t>(3));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) alg.amalg[a][b] = three::amalg(a, b);
  alg.zero = three::Zero;
  alg.one = three::One;
  alg.bowtie = three::Bowtie;
  return alg;
}

std::size_t LensAlgebra::index_of(std::size_t a, std::size_t b) const {
  auto it = index.find({a, b});
  if (it == index.end()) fail(ErrorKind::LensViolation, "pair is not ordered first >= second");
  return it->second;
}

std::size_t LensAlgebra::in1(std::size_t a) const { return index_of(a, *frame->bottom()); }
std::size_t LensAlgebra::in2(std::size_t b) const { return index_of(*frame->top(), b); }

LensAlgebra lens_algebra(const PosetRef& frame) {
  const FinPoset& l = *frame;
  if (!l.is_lattice()) fail(ErrorKind::InvalidArgument, "lens algebra needs a lattice");
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      for (std::size_t c = 0; c < l.size(); ++c)
        if (*l.meet(a, *l.join(b, c)) != *l.join(*l.meet(a, b), *l.meet(a, c))) {
          fail(ErrorKind::InvalidArgument, "lens algebra needs a distributive lattice");
        }
  LensAlgebra out;
  out.frame = frame;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(b, a)) {
        out.index.emplace(std::make_pair(a, b), out.pairs.size());
        out.pairs.emplace_back(a, b);
        names.push_back("(" + l.name(a) + "|" + l.name(b) + ")");
      }
  const auto& pairs = out.pairs;
  out.algebra.poset = share(FinPoset::from_leq(FinSet(std::move(names)), [&](std::size_t e, std::size_t f) {
    return l.leq(pairs[e].first, pairs[f].first) && l.leq(pairs[e].second, pairs[f].second);
  }));
  const std::size_t n = pairs.size();
  out.algebra.amalg.assign(n, std::vector<std::size_t>(n));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = 0; f < n; ++f)
      out.algebra.amalg[e][f] =
          out.index_of(*l.join(pairs[e].first, pairs[f].first), *l.meet(pairs[e].second, pairs[f].second));
  out.algebra.zero = out.index_of(*l.bottom(), *l.bottom());
  out.algebra.one = out.index_of(*l.top(), *l.top());
  out.algebra.bowtie = out.index_of(*l.top(), *l.bottom());
  out.algebra.validate();
  return out;
}

std::size_t ThreeValuedMaps::index_of(const std::vector<std::size_t>& values) const {
  auto it = index.find(values);
  if (it == index.end()) fail(ErrorKind::NotMonotone, "values do not form a monotone map into 3");
  return it->second;
}

ThreeValuedMaps three_valued_maps(const PosetRef& base) {
  const PlotkinAlgebra three = three_algebra();
  ThreeValuedMaps out;
  out.base = base;
  std::vector<std::string> names;
  for (const auto& m : enumerate_structure_maps(base, three.poset, MapClass::Monotone)) {
    std::string name = "[";
    for (std::size_t x = 0; x < base->size(); ++x) {
      if (x != 0) name += ",";
      name += three.poset->name(m(x));
    }
    names.push_back(name + "]");
    out.index.emplace(m.graph(), out.maps.size());
    out.maps.push_back(m.graph());
  }
  const auto& maps = out.maps;
  out.algebra.poset = share(FinPoset::from_leq(FinSet(std::move(names)), [&](std::size_t f, std::size_t g) {
    for (std::size_t x = 0; x < maps[f].size(); ++x)
      if (maps[f][x] > maps[g][x]) return false;
    return true;
  }));
  const std::size_t n = maps.size();
  out.algebra.amalg.assign(n, std::vector<std::size_t>(n));
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::size_t> v(base->size());
      for (std::size_t x = 0; x < v.size(); ++x) v[x] = three::amalg(maps[f][x], maps[g][x]);
      out.algebra.amalg[f][g] = out.index_of(v);
    }
  out.algebra.zero = out.index_of(std::vector<std::size_t>(base->size(), three::Zero));
  out.algebra.one = out.index_of(std::vector<std::size_t>(base->size(), three::One));
  out.algebra.bowtie = out.index_of(std::vector<std::size_t>(base->size(), three::Bowtie));
  out.algebra.validate();
  return out;
}

std::vector<MonotoneMap> enumerate_plotkin_homs(const PlotkinAlgebra& dom, const PlotkinAlgebra& cod,
                                                std::uint64_t budget) {
  std::vector<Constraint> cs;
  add_monotone(*dom.poset, cs);
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = a + 1; b < dom.size(); ++b)
      cs.push_back({Constraint::Kind::Op, a, b, dom.amalg[a][b], &cod.amalg});
  cs.push_back({Constraint::Kind::Const, dom.zero, cod.zero, 0, nullptr});
  cs.push_back({Constraint::Kind::Const, dom.one, cod.one, 0, nullptr});
  cs.push_back({Constraint::Kind::Const, dom.bowtie, cod.bowtie, 0, nullptr});
  MapSearch search(*dom.poset, cod.size(), std::move(cs), budget);
  search.set_cod_leq([&](std::size_t a, std::size_t b) { return cod.poset->leq(a, b); });
  std::vector<MonotoneMap> out;
  search.run([&](const std::vector<std::size_t>& g) { out.emplace_back(dom.poset, cod.poset, g); });
  return out;
}

bool is_plotkin_hom(const MonotoneMap& f, const PlotkinAlgebra& dom, const PlotkinAlgebra& cod) {
  if (f(dom.zero) != cod.zero || f(dom.one) != cod.one || f(dom.bowtie) != cod.bowtie) return false;
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = 0; b < dom.size(); ++b)
      if (f(dom.amalg[a][b]) != cod.amalg[f(a)][f(b)]) return false;
  return true;
}

PosetRef two_chain() {
  static const PosetRef two =
      share(FinPoset::from_leq(FinSet({"0", "1"}), [](std::size_t a, std::size_t b) { return a <= b; }, "2"));
  return two;
}

}  // namespace tri
