#include "tri/transformers.hpp"

#include <algorithm>

#include "tri/error.hpp"

namespace tri {

const Subset& PredTransformer::operator()(const Subset& pred) const {
  return target->member(graph.at(source->index_of(pred)));
}

MonotoneMap PredTransformer::as_map() const { return MonotoneMap(source->lattice, target->lattice, graph); }

LatticeRef open_lattice(const PosetRef& base) {
  return std::make_shared<const SetLattice>(base->is_discrete() ? powerset_lattice(base) : upset_lattice(base));
}

bool transformer_in_class(const PredTransformer& f, const std::optional<MapClass>& cls) {
  if (!cls) return true;
  try {
    return preserves(f.as_map(), *cls);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotMonotone) return false;
    throw;
  }
}

namespace {

void check_arrow_in(const Homset& h, const KleisliArrow& g) {
  if (g.monad->name() != h.monad->name()) fail(ErrorKind::MonadMismatch, "arrow is not in this homset");
  if (!(*g.dom() == *h.source->base) || !(*g.cod() == *h.target->base)) {
    fail(ErrorKind::CarrierMismatch, "arrow carriers differ from the homset");
  }
}

void check_transformer_in(const Homset& h, const PredTransformer& f) {
  if (f.source->members != h.pred_target->members || f.target->members != h.pred_source->members ||
      f.graph.size() != f.source->size()) {
    fail(ErrorKind::CarrierMismatch, "transformer lattices differ from the homset");
  }
}

// Builds the transformer whose value at each predicate is `rule(pred)`.
template <class Rule>
PredTransformer tabulate(const Homset& h, Rule&& rule) {
  PredTransformer out{h.pred_target, h.pred_source, {}};
  out.graph.reserve(h.pred_target->size());
  for (const Subset& pred : h.pred_target->members) out.graph.push_back(h.pred_source->index_of(rule(pred)));
  return out;
}

template <class Test>
Subset points_where(std::size_t n, Test&& test) {
  Subset out(n);
  for (std::size_t x = 0; x < n; ++x) out.set(x, test(x));
  return out;
}

Homset subset_homset(const MonadRef& monad, const PosetRef& x, const PosetRef& y) {
  ObjectRef tx = monad->object(x);
  ObjectRef ty = monad->object(y);
  return Homset{monad, tx, ty, open_lattice(tx->base), open_lattice(ty->base)};
}

Homset homset_of(const KleisliArrow& g) {
  if (g.source->preds) {
    return Homset{g.monad, g.source, g.target, std::make_shared<const SetLattice>(*g.source->preds),
                  std::make_shared<const SetLattice>(*g.target->preds)};
  }
  return Homset{g.monad, g.source, g.target, open_lattice(g.dom()), open_lattice(g.cod())};
}

void verify_output(const Correspondence& c, const PredTransformer& t) {
  if (!transformer_in_class(t, c.cls)) {
    fail(ErrorKind::StructureNotPreserved, "forward transpose of " + c.id + " left its structure class");
  }
}

PredTransformer box_rule(const Homset& h, const KleisliArrow& g) {
  const std::size_t nx = h.source->base->size();
  return tabulate(h, [&](const Subset& a) {
    return points_where(nx, [&](std::size_t x) { return h.target->element(g(x)).is_subset_of(a); });
  });
}

PredTransformer diamond_rule(const Homset& h, const KleisliArrow& g) {
  const std::size_t nx = h.source->base->size();
  return tabulate(h, [&](const Subset& v) {
    return points_where(nx, [&](std::size_t x) { return h.target->element(g(x)).intersects(v); });
  });
}

KleisliArrow box_rule_back(const Homset& h, const PredTransformer& f) {
  const std::size_t nx = h.source->base->size();
  const std::size_t ny = h.target->base->size();
  std::vector<std::size_t> images(nx);
  for (std::size_t x = 0; x < nx; ++x) {
    Subset meet = Subset::full(ny);
    for (std::size_t k = 0; k < f.source->size(); ++k)
      if (f.target->member(f.graph[k]).contains(x)) meet &= f.source->member(k);
    images[x] = h.target->index_of(meet);
  }
  return KleisliArrow(h.monad, h.source, h.target, std::move(images));
}

// Downsets U of Y are exactly complements of upsets, so ranging over the
// upset lattice visits each U once.
KleisliArrow diamond_rule_back(const Homset& h, const PredTransformer& f) {
  const std::size_t nx = h.source->base->size();
  const std::size_t ny = h.target->base->size();
  std::vector<std::size_t> images(nx);
  for (std::size_t x = 0; x < nx; ++x) {
    Subset meet = Subset::full(ny);
    for (std::size_t k = 0; k < f.source->size(); ++k)
      if (!f.target->member(f.graph[k]).contains(x)) meet &= f.source->member(k).complement();
    images[x] = h.target->index_of(meet);
  }
  return KleisliArrow(h.monad, h.source, h.target, std::move(images));
}

Correspondence subset_correspondence(const std::string& id, MonadRef monad, MapClass cls, bool box_like,
                                     ErrorKind violation) {
  Correspondence c;
  c.id = id;
  c.monad = monad;
  c.cls = cls;
  c.homset = [monad](const PosetRef& x, const PosetRef& y) { return subset_homset(monad, x, y); };
  c.forward = [c, box_like](const Homset& h, const KleisliArrow& g) {
    check_arrow_in(h, g);
    PredTransformer t = box_like ? box_rule(h, g) : diamond_rule(h, g);
    verify_output(c, t);
    return t;
  };
  c.backward = [id, cls, box_like, violation](const Homset& h, const PredTransformer& f) {
    check_transformer_in(h, f);
    if (!transformer_in_class(f, cls)) {
      fail(violation, id + " transformer is not " + std::string(to_string(cls)));
    }
    return box_like ? box_rule_back(h, f) : diamond_rule_back(h, f);
  };
  return c;
}

Correspondence double_dual_correspondence(const std::string& id, MonadRef monad, std::optional<MapClass> cls) {
  Correspondence c;
  c.id = id;
  c.monad = monad;
  c.cls = cls;
  c.homset = [monad](const PosetRef& x, const PosetRef& y) {
    ObjectRef tx = monad->object(x);
    ObjectRef ty = monad->object(y);
    return Homset{monad, tx, ty, std::make_shared<const SetLattice>(*tx->preds),
                  std::make_shared<const SetLattice>(*ty->preds)};
  };
  c.forward = [c](const Homset& h, const KleisliArrow& g) {
    check_arrow_in(h, g);
    const std::size_t nx = h.source->base->size();
    PredTransformer t{h.pred_target, h.pred_source, {}};
    for (std::size_t k = 0; k < h.pred_target->size(); ++k) {
      t.graph.push_back(h.pred_source->index_of(
          points_where(nx, [&](std::size_t x) { return h.target->element(g(x)).contains(k); })));
    }
    verify_output(c, t);
    return t;
  };
  c.backward = [id, cls](const Homset& h, const PredTransformer& f) {
    check_transformer_in(h, f);
    if (!transformer_in_class(f, cls)) {
      fail(ErrorKind::StructureNotPreserved, id + " transformer is outside its structure class");
    }
    const std::size_t nx = h.source->base->size();
    std::vector<std::size_t> images(nx);
    for (std::size_t x = 0; x < nx; ++x) {
      Subset family(f.source->size());
      for (std::size_t k = 0; k < f.source->size(); ++k) family.set(k, f.target->member(f.graph[k]).contains(x));
      auto it = h.target->index.find(family);
      if (it == h.target->index.end()) {
        fail(ErrorKind::StructureNotPreserved, "transposed family is not an element of " + h.target->monad);
      }
      images[x] = it->second;
    }
    return KleisliArrow(h.monad, h.source, h.target, std::move(images));
  };
  return c;
}

}  // namespace

std::vector<std::string> correspondence_ids() {
  return {"box",    "diamond",     "hoare",       "smyth",       "neighbourhood", "monotone-neighbourhood",
          "filter", "ultrafilter", "smyth-filter"};
}

Correspondence correspondence(const std::string& id) {
  if (id == "box") return subset_correspondence(id, powerset_monad(), MapClass::MeetPreserving, true,
                                                ErrorKind::NotMeetPreserving);
  if (id == "diamond") return subset_correspondence(id, downset_monad(), MapClass::JoinPreserving, false,
                                                    ErrorKind::NotJoinPreserving);
  if (id == "hoare") return subset_correspondence(id, hoare_monad(), MapClass::JoinTop, false,
                                                  ErrorKind::NotJoinPreserving);
  if (id == "smyth") return subset_correspondence(id, smyth_monad(), MapClass::Preframe0, true,
                                                  ErrorKind::StructureNotPreserved);
  if (id == "neighbourhood") return double_dual_correspondence(id, neighbourhood_monad(), std::nullopt);
  if (id == "monotone-neighbourhood") {
    return double_dual_correspondence(id, monotone_neighbourhood_monad(), MapClass::Monotone);
  }
  if (id == "filter") return double_dual_correspondence(id, filter_monad(), MapClass::MeetTop);
  if (id == "ultrafilter") return double_dual_correspondence(id, ultrafilter_monad(), MapClass::Boolean);
  if (id == "smyth-filter") return double_dual_correspondence(id, smyth_filter_monad(), MapClass::Preframe0);
  fail(ErrorKind::InvalidArgument, "unknown correspondence '" + id + "'");
}

PredTransformer box_forward(const KleisliArrow& g) {
  if (g.monad->name() != "powerset") fail(ErrorKind::MonadMismatch, "box transpose needs the powerset monad");
  return correspondence("box").forward(homset_of(g), g);
}

KleisliArrow box_backward(const Homset& h, const PredTransformer& f) { return correspondence("box").backward(h, f); }

PredTransformer diamond_forward(const KleisliArrow& g) {
  const std::string name = g.monad->name();
  if (name != "powerset" && name != "downset" && name != "hoare") {
    fail(ErrorKind::MonadMismatch, "diamond transpose needs a monad of downsets");
  }
  const Homset h = homset_of(g);
  PredTransformer t = diamond_rule(h, g);
  if (!transformer_in_class(t, MapClass::JoinPreserving)) {
    fail(ErrorKind::NotJoinPreserving, "diamond transformer lost joins");
  }
  return t;
}

KleisliArrow diamond_backward(const Homset& h, const PredTransformer& f) {
  return correspondence("diamond").backward(h, f);
}

PredTransformer hoare_pred(const KleisliArrow& g) {
  if (g.monad->name() != "hoare") fail(ErrorKind::MonadMismatch, "expected the Hoare monad");
  return correspondence("hoare").forward(homset_of(g), g);
}

PredTransformer smyth_pred(const KleisliArrow& g) {
  if (g.monad->name() != "smyth") fail(ErrorKind::MonadMismatch, "expected the Smyth monad");
  return correspondence("smyth").forward(homset_of(g), g);
}

std::vector<Subset> box_lattice_forward(const FinPoset& lattice, const std::vector<std::size_t>& g) {
  std::vector<Subset> out;
  for (std::size_t a = 0; a < lattice.size(); ++a)
    out.push_back(points_where(g.size(), [&](std::size_t x) { return lattice.leq(g.at(x), a); }));
  return out;
}

std::vector<std::size_t> box_lattice_backward(const FinPoset& lattice, std::size_t points,
                                              const std::vector<Subset>& f) {
  if (f.size() != lattice.size()) fail(ErrorKind::CarrierMismatch, "transformer does not cover the lattice");
  auto top = lattice.top();
  if (!top) fail(ErrorKind::InvalidArgument, "box transpose needs a lattice");
  if (!f[*top].is_full()) fail(ErrorKind::NotMeetPreserving, "top is not sent to the whole space");
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = 0; b < lattice.size(); ++b) {
      auto m = lattice.meet(a, b);
      if (!m) fail(ErrorKind::InvalidArgument, "box transpose needs a lattice");
      if (f[*m] != (f[a] & f[b])) fail(ErrorKind::NotMeetPreserving, "binary meet not preserved");
    }
  std::vector<std::size_t> g(points);
  for (std::size_t x = 0; x < points; ++x) {
    Subset holders(lattice.size());
    for (std::size_t a = 0; a < lattice.size(); ++a) holders.set(a, f[a].contains(x));
    g[x] = *lattice.meet(holders);
  }
  return g;
}

// ---------------------------------------------------------------- sets and posets

SubsetValuedMap monotone_nbhd_forward(const SubsetValuedMap& g) {
  if (g.images.size() != g.dom->size()) fail(ErrorKind::CarrierMismatch, "map does not cover its domain");
  for (std::size_t x = 0; x < g.images.size(); ++x)
    if (!g.cod->is_upset(g.images[x])) {
      fail(ErrorKind::SideConditionViolated, "image of " + g.dom->name(x) + " is not an upset");
    }
  const std::size_t ny = g.cod->size();
  SubsetValuedMap f{g.cod, g.dom, std::vector<Subset>(ny)};
  for (std::size_t y = 0; y < ny; ++y)
    f.images[y] = points_where(g.dom->size(), [&](std::size_t x) { return g.images[x].contains(y); });
  return f;
}

SubsetValuedMap monotone_nbhd_backward(const SubsetValuedMap& f) {
  if (f.images.size() != f.dom->size()) fail(ErrorKind::CarrierMismatch, "map does not cover its domain");
  for (auto [a, b] : f.dom->covers())
    if (!f.images[a].is_subset_of(f.images[b])) {
      fail(ErrorKind::SideConditionViolated, "map is not monotone at " + f.dom->name(a));
    }
  const std::size_t nx = f.cod->size();
  SubsetValuedMap g{f.cod, f.dom, std::vector<Subset>(nx)};
  for (std::size_t x = 0; x < nx; ++x)
    g.images[x] = points_where(f.dom->size(), [&](std::size_t y) { return f.images[y].contains(x); });
  return g;
}

// ---------------------------------------------------------------- three and lenses

LensPair LensPair::make(PosetRef base, Subset outer, Subset inner) {
  if (outer.universe() != base->size() || inner.universe() != base->size()) {
    fail(ErrorKind::CarrierMismatch, "lens pair over another carrier");
  }
  if (!base->is_upset(outer) || !base->is_upset(inner)) fail(ErrorKind::LensViolation, "lens components must be opens");
  if (!inner.is_subset_of(outer)) fail(ErrorKind::LensViolation, "inner open is not contained in the outer one");
  return LensPair{std::move(base), std::move(outer), std::move(inner)};
}

LensPair three_to_lens(const PosetRef& base, const std::vector<std::size_t>& values) {
  if (values.size() != base->size()) fail(ErrorKind::CarrierMismatch, "map does not cover its domain");
  for (std::size_t v : values)
    if (v > three::One) fail(ErrorKind::UnknownElement, "value outside 3");
  for (auto [a, b] : base->covers())
    if (values[a] > values[b]) fail(ErrorKind::NotMonotone, "map into 3 is not monotone at " + base->name(a));
  const std::size_t n = base->size();
  return LensPair::make(base, points_where(n, [&](std::size_t x) { return values[x] != three::Zero; }),
                        points_where(n, [&](std::size_t x) { return values[x] == three::One; }));
}

std::vector<std::size_t> lens_to_three(const LensPair& lens) {
  const LensPair checked = LensPair::make(lens.base, lens.outer, lens.inner);
  std::vector<std::size_t> values(checked.base->size());
  for (std::size_t x = 0; x < values.size(); ++x)
    values[x] = three::join_pair(checked.outer.contains(x), checked.inner.contains(x));
  return values;
}

LensPair lens_amalg(const LensPair& a, const LensPair& b) {
  if (!(*a.base == *b.base)) fail(ErrorKind::CarrierMismatch, "lens pairs over different bases");
  return LensPair::make(a.base, a.outer | b.outer, a.inner & b.inner);
}

LensPair lens_bowtie(const PosetRef& base) {
  return LensPair::make(base, Subset::full(base->size()), Subset(base->size()));
}

LensHomPair plotkin_hom_split(const LensAlgebra& dom, const LensAlgebra& cod, const MonotoneMap& f) {
  if (!is_plotkin_hom(f, dom.algebra, cod.algebra)) {
    fail(ErrorKind::StructureNotPreserved, "map is not a Plotkin-algebra homomorphism");
  }
  const std::size_t n = dom.frame->size();
  std::vector<std::size_t> g1(n);
  std::vector<std::size_t> g2(n);
  for (std::size_t a = 0; a < n; ++a) {
    g1[a] = cod.pi1(f(dom.in1(a)));
    g2[a] = cod.pi2(f(dom.in2(a)));
  }
  for (std::size_t e = 0; e < dom.pairs.size(); ++e) {
    auto [a, b] = dom.pairs[e];
    if (cod.pi1(f(e)) != g1[a] || cod.pi2(f(e)) != g2[b]) {
      fail(ErrorKind::StructureNotPreserved, "split equations fail at " + dom.algebra.poset->name(e));
    }
  }
  return LensHomPair{MonotoneMap(dom.frame, cod.frame, std::move(g1)),
                     MonotoneMap(dom.frame, cod.frame, std::move(g2))};
}

MonotoneMap plotkin_hom_join(const LensAlgebra& dom, const LensAlgebra& cod, const LensHomPair& pair) {
  if (!(*pair.first.dom() == *dom.frame) || !(*pair.first.cod() == *cod.frame) ||
      !(*pair.second.dom() == *dom.frame) || !(*pair.second.cod() == *cod.frame)) {
    fail(ErrorKind::CarrierMismatch, "component maps are not between the given frames");
  }
  if (!preserves(pair.first, MapClass::JoinTop)) {
    fail(ErrorKind::StructureNotPreserved, "first component must preserve joins and top");
  }
  if (!preserves(pair.second, MapClass::Preframe0)) {
    fail(ErrorKind::StructureNotPreserved, "second component must preserve meets, directed joins and bottom");
  }
  if (!pointwise_leq(pair.second, pair.first)) fail(ErrorKind::Incomparable, "first component is not above the second");
  std::vector<std::size_t> graph(dom.pairs.size());
  for (std::size_t e = 0; e < graph.size(); ++e)
    graph[e] = cod.index_of(pair.first(dom.pairs[e].first), pair.second(dom.pairs[e].second));
  MonotoneMap out(dom.algebra.poset, cod.algebra.poset, std::move(graph));
  if (!is_plotkin_hom(out, dom.algebra, cod.algebra)) {
    fail(ErrorKind::StructureNotPreserved, "joined map is not a Plotkin-algebra homomorphism");
  }
  return out;
}

PlotkinPreds plotkin_preds(const PosetRef& base) {
  SetLattice opens = upset_lattice(base);
  LensAlgebra lens = lens_algebra(opens.lattice);
  return PlotkinPreds{std::move(opens), std::move(lens)};
}

MonotoneMap plotkin_pred(const KleisliArrow& g, const PlotkinPreds& preds_x, const PlotkinPreds& preds_y) {
  if (g.monad->name() != "plotkin") fail(ErrorKind::MonadMismatch, "expected the Plotkin monad");
  const std::size_t nx = g.dom()->size();
  std::vector<std::size_t> graph(preds_y.lens.pairs.size());
  for (std::size_t e = 0; e < graph.size(); ++e) {
    const Subset& outer = preds_y.opens.member(preds_y.lens.pairs[e].first);
    const Subset& inner = preds_y.opens.member(preds_y.lens.pairs[e].second);
    Subset v1(nx);
    Subset v2(nx);
    for (std::size_t x = 0; x < nx; ++x) {
      const std::size_t v = plotkin_evaluate(*g.target, g(x), outer, inner);
      v1.set(x, v != three::Zero);
      v2.set(x, v == three::One);
    }
    graph[e] = preds_x.lens.index_of(preds_x.opens.index_of(v1), preds_x.opens.index_of(v2));
  }
  return MonotoneMap(preds_y.lens.algebra.poset, preds_x.lens.algebra.poset, std::move(graph));
}

KleisliArrow plotkin_from_pred(const MonadRef& monad, const ObjectRef& tx, const ObjectRef& ty,
                               const PlotkinPreds& preds_x, const PlotkinPreds& preds_y, const MonotoneMap& h) {
  if (!is_plotkin_hom(h, preds_y.lens.algebra, preds_x.lens.algebra)) {
    fail(ErrorKind::StructureNotPreserved, "transformer is not a Plotkin-algebra homomorphism");
  }
  const std::size_t nx = tx->base->size();
  std::vector<std::size_t> images(nx);
  for (std::size_t x = 0; x < nx; ++x) {
    auto value = [&](const Subset& outer, const Subset& inner) {
      const std::size_t e = h(preds_y.lens.index_of(preds_y.opens.index_of(outer), preds_y.opens.index_of(inner)));
      const auto [a, b] = preds_x.lens.pairs[e];
      return three::join_pair(preds_x.opens.member(a).contains(x), preds_x.opens.member(b).contains(x));
    };
    auto it = ty->index.find(plotkin_decode(*ty, value));
    if (it == ty->index.end()) fail(ErrorKind::StructureNotPreserved, "decoded pair is not a Plotkin element");
    images[x] = it->second;
  }
  KleisliArrow g = [&] {
    try {
      return KleisliArrow(monad, tx, ty, images);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotMonotone) fail(ErrorKind::StructureNotPreserved, e.what());
      throw;
    }
  }();
  if (!(plotkin_pred(g, preds_x, preds_y) == h)) {
    fail(ErrorKind::StructureNotPreserved, "transformer is not realised by any Plotkin computation");
  }
  return g;
}

// ---------------------------------------------------------------- expectation

FuzzyPredicate EffectTransformer::operator()(const FuzzyPredicate& q) const {
  if (!(q.carrier() == source)) fail(ErrorKind::CarrierMismatch, "predicate on the wrong carrier");
  FuzzyPredicate out = apply(q);
  if (!(out.carrier() == target))
    fail(ErrorKind::CarrierMismatch, "transformer returned a predicate on the wrong carrier");
  return out;
}

EffectTransformer expectation_pred(const DistArrow& f) {
  return EffectTransformer{f.cod, f.dom, [f](const FuzzyPredicate& q) {
                             if (!(q.carrier() == f.cod)) {
                               fail(ErrorKind::CarrierMismatch, "predicate on the wrong carrier");
                             }
                             std::vector<Rat> values(f.dom.size());
                             for (std::size_t x = 0; x < values.size(); ++x)
                               for (const auto& [y, w] : f(x).support()) values[x] += q(y) * w;
                             return FuzzyPredicate(f.dom, std::move(values));
                           }};
}

DistArrow expectation_state(const EffectTransformer& t) {
  std::vector<FuzzyPredicate> columns;
  for (std::size_t y = 0; y < t.source.size(); ++y)
    columns.push_back(t(FuzzyPredicate::indicator(t.source, Subset(t.source.size(), {y}))));
  std::vector<Distribution> images;
  for (std::size_t x = 0; x < t.target.size(); ++x) {
    std::vector<Rat> weights(t.source.size());
    for (std::size_t y = 0; y < weights.size(); ++y) weights[y] = columns[y](x);
    images.emplace_back(t.source, weights);
  }
  return DistArrow(t.target, t.source, std::move(images));
}

EffectReport check_effect_module_map(const EffectTransformer& t, const std::vector<FuzzyPredicate>& probes,
                                     const std::vector<Rat>& scalars) {
  auto show = [](const FuzzyPredicate& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + rat_string(p(i));
    return s + "]";
  };
  EffectReport report{"effect-module map", probes.size(), {}};
  AxiomResult unit{"unit", true, 1, ""};
  if (!(t(FuzzyPredicate::constant(t.source, 1)) == FuzzyPredicate::constant(t.target, 1))) {
    unit.passed = false;
    unit.counterexample = "top predicate not preserved";
  }
  AxiomResult additive{"additivity", true, 0, ""};
  AxiomResult orth{"orthosupplement", true, 0, ""};
  AxiomResult homogeneous{"scalar-homogeneity", true, 0, ""};
  std::vector<FuzzyPredicate> images;
  for (const auto& p : probes) images.push_back(t(p));
  for (std::size_t i = 0; i < probes.size(); ++i) {
    ++orth.checked;
    if (orth.passed && !(t(pred_orth(probes[i])) == pred_orth(images[i]))) {
      orth.passed = false;
      orth.counterexample = show(probes[i]);
    }
    for (const Rat& r : scalars) {
      ++homogeneous.checked;
      if (homogeneous.passed && !(t(pred_scalar(r, probes[i])) == pred_scalar(r, images[i]))) {
        homogeneous.passed = false;
        homogeneous.counterexample = rat_string(r) + " * " + show(probes[i]);
      }
    }
    for (std::size_t j = 0; j < probes.size(); ++j) {
      auto sum = pred_ovee(probes[i], probes[j]);
      if (!sum) continue;
      ++additive.checked;
      auto image_sum = pred_ovee(images[i], images[j]);
      if (additive.passed && (!image_sum || !(t(*sum) == *image_sum))) {
        additive.passed = false;
        additive.counterexample = show(probes[i]) + " + " + show(probes[j]);
      }
    }
  }
  report.axioms = {unit, additive, orth, homogeneous};
  return report;
}

}  // namespace tri
