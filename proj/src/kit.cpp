#include "tri/kit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tri/error.hpp"

namespace tri {

KleisliArrow kleisli_compose(const KleisliArrow& g, const KleisliArrow& f) {
  if (g.monad->name() != f.monad->name()) fail(ErrorKind::MonadMismatch, "composing arrows of different monads");
  if (!(*f.cod() == *g.dom())) fail(ErrorKind::CarrierMismatch, "codomain of f is not the domain of g");
  std::vector<std::size_t> images(f.images.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = g.monad->bind(*g.source, *g.target, g.images, f(x));
  return KleisliArrow(f.monad, f.source, g.target, std::move(images));
}

MonotoneMap stat_functor(const KleisliArrow& f) {
  std::vector<std::size_t> graph(f.source->size());
  for (std::size_t m = 0; m < graph.size(); ++m) graph[m] = f.monad->bind(*f.source, *f.target, f.images, m);
  return MonotoneMap(f.source->carrier, f.target->carrier, std::move(graph));
}

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& LawReport::find(const std::string& law) const {
  for (const auto& r : laws)
    if (r.axiom == law) return r;
  fail(ErrorKind::InvalidArgument, "no law named '" + law + "'");
}

namespace {

void record(AxiomResult& law, bool ok, const std::function<std::string()>& witness) {
  ++law.checked;
  if (!ok && law.passed) {
    law.passed = false;
    law.counterexample = witness();
  }
}

std::string arrow_string(const KleisliArrow& f) {
  std::string s = "{";
  for (std::size_t x = 0; x < f.images.size(); ++x) {
    if (x) s += ", ";
    s += f.dom()->name(x) + "->" + f.target->label(f.images[x]);
  }
  return s + "}";
}

// Object cache keyed by the base, so arrows between the same objects share pointers.
class ObjectPool {
 public:
  explicit ObjectPool(MonadRef monad) : monad_(std::move(monad)) {}
  ObjectRef get(const PosetRef& base) {
    auto it = cache_.find(base.get());
    if (it != cache_.end()) return it->second;
    return cache_[base.get()] = monad_->object(base);
  }

 private:
  MonadRef monad_;
  std::map<const FinPoset*, ObjectRef> cache_;
};

std::vector<std::vector<std::size_t>> stat_tables(const FiniteMonad& monad, const MonadObject& tx,
                                                  const MonadObject& ty, const std::vector<KleisliArrow>& arrows) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(arrows.size());
  for (const auto& f : arrows) {
    std::vector<std::size_t> t(tx.size());
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = monad.bind(tx, ty, f.images, m);
    out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

// ---------------------------------------------------------------- EM algebras

EMAlgebraCandidate free_algebra(const MonadRef& monad, const PosetRef& base) {
  ObjectRef tx = monad->object(base);
  MonadRef wide = make_monad(monad->name(), std::max(monad->cap(), tx->size()));
  ObjectRef ttx = wide->object(tx->carrier);
  std::vector<std::size_t> identity(tx->size());
  for (std::size_t m = 0; m < identity.size(); ++m) identity[m] = m;
  std::vector<std::size_t> mu(ttx->size());
  for (std::size_t p = 0; p < mu.size(); ++p) mu[p] = wide->bind(*ttx, *tx, identity, p);
  return EMAlgebraCandidate{wide, ttx, std::move(mu)};
}

LawReport check_em_algebra(const EMAlgebraCandidate& c) {
  const MonadObject& tx = *c.tx;
  const FinPoset& carrier = *tx.base;
  LawReport report{"algebra of " + c.monad->name() + " on " + carrier.label(), {}, 1, 0};
  AxiomResult shape{"structure-map", true, 1, ""};
  if (c.structure.size() != tx.size() ||
      std::any_of(c.structure.begin(), c.structure.end(), [&](std::size_t a) { return a >= carrier.size(); })) {
    shape.passed = false;
    shape.counterexample = "structure map is not a function T(A) -> A";
    report.laws = {shape};
    return report;
  }
  const auto& alpha = c.structure;
  AxiomResult unit{"unit", true, 0, ""};
  for (std::size_t a = 0; a < carrier.size(); ++a) {
    const std::size_t eta = c.monad->unit(tx, a);
    record(unit, alpha[eta] == a, [&] { return carrier.name(a) + " maps to " + carrier.name(alpha[eta]); });
  }
  // Set monads discretize their base, so only poset monads carry an order to keep.
  AxiomResult mono{"monotone", true, 0, ""};
  if (c.monad->poset_based())
    for (auto [m, n] : tx.carrier->covers())
      record(mono, carrier.leq(alpha[m], alpha[n]), [&] { return tx.label(m) + " <= " + tx.label(n); });

  AxiomResult mult{"multiplication", true, 0, ""};
  MonadRef wide = make_monad(c.monad->name(), std::max(c.monad->cap(), tx.size()));
  ObjectRef ttx = wide->object(tx.carrier);
  std::vector<std::size_t> eta_alpha(tx.size());
  std::vector<std::size_t> identity(tx.size());
  for (std::size_t m = 0; m < tx.size(); ++m) {
    eta_alpha[m] = c.monad->unit(tx, alpha[m]);
    identity[m] = m;
  }
  for (std::size_t p = 0; p < ttx->size(); ++p) {
    const std::size_t lhs = alpha[wide->bind(*ttx, tx, eta_alpha, p)];
    const std::size_t rhs = alpha[wide->bind(*ttx, tx, identity, p)];
    record(mult, lhs == rhs, [&] { return "at " + ttx->label(p); });
  }
  report.laws = {shape, unit, mult, mono};
  return report;
}

// ---------------------------------------------------------------- random arrows

KleisliArrow random_kleisli(const MonadRef& monad, const ObjectRef& tx, const ObjectRef& ty, std::mt19937_64& rng) {
  const FinPoset& dom = *tx->base;
  const FinPoset& cod = *ty->carrier;
  const auto order = dom.linear_extension();
  std::vector<std::size_t> images(dom.size());
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) return true;
    const std::size_t x = order[k];
    std::vector<std::size_t> candidates;
    for (std::size_t t = 0; t < cod.size(); ++t) {
      bool ok = true;
      dom.down(x).for_each([&](std::size_t a) {
        if (a != x && !cod.leq(images[a], t)) ok = false;
      });
      if (ok) candidates.push_back(t);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (std::size_t t : candidates) {
      images[x] = t;
      if (go(k + 1)) return true;
    }
    return false;
  };
  if (!go(0)) fail(ErrorKind::InvalidArgument, "no Kleisli arrow between these objects");
  return KleisliArrow(monad, tx, ty, std::move(images));
}

// ---------------------------------------------------------------- monad laws

std::vector<PosetRef> suite_objects(bool poset_based, std::size_t n) {
  std::vector<PosetRef> out;
  if (!poset_based) {
    out.push_back(share(FinPoset::antichain(n)));
    return out;
  }
  for (auto& p : all_posets(n)) out.push_back(share(std::move(p)));
  return out;
}

LawReport check_monad_laws(const MonadRef& monad, const LawOptions& opts) {
  ObjectPool pool(monad);
  std::vector<ObjectRef> objects;
  for (std::size_t n = 0; n <= opts.max_size; ++n)
    for (const auto& base : suite_objects(monad->poset_based(), n)) objects.push_back(pool.get(base));

  std::mt19937_64 rng(opts.seed);
  LawReport report{monad->name() + " up to " + std::to_string(opts.max_size) + " points", {}, 0, 0};
  AxiomResult left{"left-unit", true, 0, ""};
  AxiomResult right{"right-unit", true, 0, ""};
  AxiomResult assoc{"associativity", true, 0, ""};

  for (const auto& tx : objects) {
    const KleisliArrow eta = KleisliArrow::unit(monad, tx);
    for (std::size_t m = 0; m < tx->size(); ++m)
      record(left, monad->bind(*tx, *tx, eta.images, m) == m, [&] { return tx->label(m); });
  }

  // Arrows X -> T(Y), exhaustive when cheap enough, otherwise sampled.
  std::map<std::pair<const MonadObject*, const MonadObject*>, std::vector<KleisliArrow>> arrow_cache;
  auto arrows = [&](const ObjectRef& tx, const ObjectRef& ty, std::uint64_t limit, bool& sampled) {
    sampled = count_kleisli_upper_bound(tx, ty) > limit;
    if (sampled) {
      std::vector<KleisliArrow> drawn;
      for (std::size_t i = 0; i < opts.samples; ++i) drawn.push_back(random_kleisli(monad, tx, ty, rng));
      return drawn;
    }
    const auto key = std::make_pair(tx.get(), ty.get());
    auto it = arrow_cache.find(key);
    if (it == arrow_cache.end()) it = arrow_cache.emplace(key, enumerate_kleisli(monad, tx, ty)).first;
    return it->second;
  };

  for (const auto& tx : objects)
    for (const auto& ty : objects) {
      ++report.cases;
      if (tx->base->size() > 0 && ty->size() == 0) continue;  // no arrows
      bool sampled = false;
      const auto fs = arrows(tx, ty, opts.exhaustive_budget, sampled);
      if (sampled) ++report.sampled_cases;
      for (const auto& f : fs)
        for (std::size_t x = 0; x < tx->base->size(); ++x) {
          const std::size_t lhs = monad->bind(*tx, *ty, f.images, monad->unit(*tx, x));
          record(right, lhs == f(x), [&] { return arrow_string(f) + " at " + tx->base->name(x); });
        }
    }

  for (const auto& tx : objects)
    for (const auto& ty : objects)
      for (const auto& tz : objects) {
        ++report.cases;
        if ((tx->base->size() > 0 && ty->size() == 0) || (ty->base->size() > 0 && tz->size() == 0)) continue;
        const std::uint64_t nf = count_kleisli_upper_bound(tx, ty);
        const std::uint64_t ng = count_kleisli_upper_bound(ty, tz);
        const std::uint64_t cost = saturating_mul(saturating_mul(nf, ng), tx->size() + 1);
        const bool exhaustive = cost <= opts.exhaustive_budget;
        std::vector<KleisliArrow> fs;
        std::vector<KleisliArrow> gs;
        if (exhaustive) {
          bool s = false;
          fs = arrows(tx, ty, UINT64_MAX, s);
          gs = arrows(ty, tz, UINT64_MAX, s);
        } else {
          ++report.sampled_cases;
          for (std::size_t i = 0; i < opts.samples; ++i) {
            fs.push_back(random_kleisli(monad, tx, ty, rng));
            gs.push_back(random_kleisli(monad, ty, tz, rng));
          }
        }
        const auto stat_f = stat_tables(*monad, *tx, *ty, fs);
        const auto stat_g = stat_tables(*monad, *ty, *tz, gs);
        auto check_pair = [&](std::size_t i, std::size_t j) {
          std::vector<std::size_t> h(tx->base->size());
          for (std::size_t x = 0; x < h.size(); ++x) h[x] = stat_g[j][fs[i](x)];
          for (std::size_t m = 0; m < tx->size(); ++m) {
            const std::size_t lhs = stat_g[j][stat_f[i][m]];
            const std::size_t rhs = monad->bind(*tx, *tz, h, m);
            record(assoc, lhs == rhs,
                   [&] { return arrow_string(fs[i]) + " then " + arrow_string(gs[j]) + " at " + tx->label(m); });
          }
        };
        if (exhaustive) {
          for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < gs.size(); ++j) check_pair(i, j);
        } else {
          for (std::size_t i = 0; i < fs.size(); ++i) check_pair(i, i);
        }
      }

  report.laws = {left, right, assoc};
  return report;
}

namespace {

std::vector<Distribution> grid_probes(const FinSet& carrier, int max_den) {
  std::vector<Distribution> out;
  for (int den = 1; den <= max_den; ++den)
    for (auto& d : grid_distributions(carrier, den))
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  return out;
}

std::string dist_string(const Distribution& d) {
  std::string s = "{";
  bool first = true;
  for (const auto& [x, w] : d.support()) {
    if (!first) s += ", ";
    s += d.carrier().name(x) + ":" + rat_string(w);
    first = false;
  }
  return s + "}";
}

template <class Rng>
DistArrow random_dist_arrow(const FinSet& dom, const FinSet& cod, int max_den, Rng& rng) {
  std::uniform_int_distribution<int> den(1, max_den);
  std::vector<Distribution> images;
  for (std::size_t x = 0; x < dom.size(); ++x) images.push_back(random_distribution(cod, den(rng), rng));
  return DistArrow(dom, cod, std::move(images));
}

}  // namespace

LawReport check_distribution_laws(std::size_t max_size, int max_den, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report{"distribution up to " + std::to_string(max_size) + " points", {}, 0, 0};
  AxiomResult left{"left-unit", true, 0, ""};
  AxiomResult right{"right-unit", true, 0, ""};
  AxiomResult assoc{"associativity", true, 0, ""};
  std::vector<FinSet> carriers;
  std::vector<std::vector<Distribution>> probes;
  for (std::size_t n = 1; n <= max_size; ++n) {
    carriers.push_back(FinSet::range(n, "x"));
    probes.push_back(grid_probes(carriers.back(), max_den));
  }
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    const DistArrow eta = DistArrow::unit(carriers[i]);
    for (const auto& w : probes[i]) record(left, dist_bind(eta, w) == w, [&] { return dist_string(w); });
  }
  for (std::size_t i = 0; i < carriers.size(); ++i)
    for (std::size_t j = 0; j < carriers.size(); ++j) {
      ++report.cases;
      ++report.sampled_cases;
      for (std::size_t s = 0; s < samples; ++s) {
        const DistArrow f = random_dist_arrow(carriers[i], carriers[j], max_den, rng);
        for (std::size_t x = 0; x < carriers[i].size(); ++x) {
          record(right, dist_bind(f, Distribution::unit(carriers[i], x)) == f(x),
                 [&] { return "at " + carriers[i].name(x); });
        }
      }
      for (std::size_t k = 0; k < carriers.size(); ++k) {
        ++report.cases;
        ++report.sampled_cases;
        for (std::size_t s = 0; s < samples; ++s) {
          const DistArrow f = random_dist_arrow(carriers[i], carriers[j], max_den, rng);
          const DistArrow g = random_dist_arrow(carriers[j], carriers[k], max_den, rng);
          const DistArrow h = dist_compose(g, f);
          for (const auto& w : probes[i])
            record(assoc, dist_bind(g, dist_bind(f, w)) == dist_bind(h, w), [&] { return dist_string(w); });
        }
      }
    }
  report.laws = {left, right, assoc};
  return report;
}

LawReport check_giry_laws(std::size_t max_size, int max_den, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report{"finite Giry up to " + std::to_string(max_size) + " atoms", {}, 0, 0};
  AxiomResult left{"left-unit", true, 0, ""};
  AxiomResult right{"right-unit", true, 0, ""};
  AxiomResult assoc{"associativity", true, 0, ""};
  auto random_kernel = [&](const FinSet& dom, const FinSet& cod) {
    const DistArrow f = random_dist_arrow(dom, cod, max_den, rng);
    std::vector<Measure> out;
    for (const auto& d : f.images) out.push_back(Measure::from_distribution(d));
    return out;
  };
  std::vector<FinSet> atoms;
  std::vector<std::vector<Measure>> probes;
  for (std::size_t n = 1; n <= max_size; ++n) {
    atoms.push_back(FinSet::range(n, "a"));
    probes.emplace_back();
    for (const auto& d : grid_probes(atoms.back(), max_den)) probes.back().push_back(Measure::from_distribution(d));
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::vector<Measure> eta;
    for (std::size_t a = 0; a < atoms[i].size(); ++a) eta.push_back(Measure::dirac(atoms[i], a));
    for (const auto& phi : probes[i])
      record(left, giry_bind(eta, phi) == phi, [&] { return dist_string(phi.to_distribution()); });
  }
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      ++report.cases;
      ++report.sampled_cases;
      for (std::size_t s = 0; s < samples; ++s) {
        const auto f = random_kernel(atoms[i], atoms[j]);
        for (std::size_t a = 0; a < atoms[i].size(); ++a)
          record(right, giry_bind(f, Measure::dirac(atoms[i], a)) == f[a], [&] { return "at " + atoms[i].name(a); });
      }
      for (std::size_t k = 0; k < atoms.size(); ++k) {
        ++report.cases;
        ++report.sampled_cases;
        for (std::size_t s = 0; s < samples; ++s) {
          const auto f = random_kernel(atoms[i], atoms[j]);
          const auto g = random_kernel(atoms[j], atoms[k]);
          std::vector<Measure> h;
          for (const auto& fa : f) h.push_back(giry_bind(g, fa));
          for (const auto& phi : probes[i])
            record(assoc, giry_bind(g, giry_bind(f, phi)) == giry_bind(h, phi),
                   [&] { return dist_string(phi.to_distribution()); });
        }
      }
    }
  report.laws = {left, right, assoc};
  return report;
}

// ---------------------------------------------------------------- certification

namespace {

using Graph = std::vector<std::size_t>;

// Forward/backward pair on one homset, with every transformer in the class.
struct Matching {
  std::string id;
  std::vector<KleisliArrow> arrows;
  std::vector<Graph> transformers;
  std::function<Graph(const KleisliArrow&)> forward;
  std::function<KleisliArrow(const Graph&)> backward;
  std::function<std::string(const Graph&)> show;
};

std::vector<Graph> all_functions(std::size_t dom, std::size_t cod, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dom; ++i) total = saturating_mul(total, cod);
  if (total > budget) fail(ErrorKind::TooLarge, "too many functions to enumerate");
  std::vector<Graph> out;
  if (cod == 0 && dom > 0) return out;
  Graph g(dom, 0);
  while (true) {
    out.push_back(g);
    std::size_t i = 0;
    while (i < dom && ++g[i] == cod) g[i++] = 0;
    if (i == dom) break;
  }
  return out;
}

Matching make_matching(const std::string& id, const PosetRef& x, const PosetRef& y, std::uint64_t budget) {
  Matching m;
  m.id = id;
  if (id == "three" || id == "plotkin") {
    const MonadRef monad = plotkin_monad(std::max<std::size_t>({4, x->size(), y->size()}));
    const ObjectRef tx = monad->object(x);
    const ObjectRef ty = monad->object(y);
    if (count_kleisli_upper_bound(tx, ty) > budget) fail(ErrorKind::TooLarge, "too many Kleisli arrows");
    auto px = std::make_shared<const PlotkinPreds>(plotkin_preds(x));
    auto py = std::make_shared<const PlotkinPreds>(plotkin_preds(y));
    m.arrows = enumerate_kleisli(monad, tx, ty, budget);
    for (const auto& h : enumerate_plotkin_homs(py->lens.algebra, px->lens.algebra, budget))
      m.transformers.push_back(h.graph());
    m.forward = [px, py](const KleisliArrow& g) { return plotkin_pred(g, *px, *py).graph(); };
    m.backward = [monad, tx, ty, px, py](const Graph& h) {
      return plotkin_from_pred(monad, tx, ty, *px, *py,
                               MonotoneMap(py->lens.algebra.poset, px->lens.algebra.poset, h));
    };
    m.show = [py](const Graph& h) {
      std::string s = "{";
      for (std::size_t e = 0; e < h.size(); ++e)
        s += (e ? ", " : "") + py->lens.algebra.poset->name(e) + "->" + std::to_string(h[e]);
      return s + "}";
    };
    return m;
  }
  const Correspondence c = correspondence(id);
  auto h = std::make_shared<const Homset>(c.homset(x, y));
  if (count_kleisli_upper_bound(h->source, h->target) > budget) fail(ErrorKind::TooLarge, "too many Kleisli arrows");
  m.arrows = enumerate_kleisli(h->monad, h->source, h->target, budget);
  if (c.cls) {
    for (const auto& f : enumerate_structure_maps(h->pred_target->lattice, h->pred_source->lattice, *c.cls, budget))
      m.transformers.push_back(f.graph());
  } else {
    m.transformers = all_functions(h->pred_target->size(), h->pred_source->size(), budget);
  }
  m.forward = [c, h](const KleisliArrow& g) { return c.forward(*h, g).graph; };
  m.backward = [c, h](const Graph& f) { return c.backward(*h, PredTransformer{h->pred_target, h->pred_source, f}); };
  m.show = [h](const Graph& f) {
    std::string s = "{";
    for (std::size_t k = 0; k < f.size(); ++k) {
      s += (k ? ", " : "") + render_subset(*h->pred_target->base, h->pred_target->member(k)) + "->" +
           render_subset(*h->pred_source->base, h->pred_source->member(f[k]));
    }
    return s + "}";
  };
  return m;
}

std::string objects_label(const PosetRef& x, const PosetRef& y) {
  return (x->label().empty() ? "X" : x->label()) + " -> " + (y->label().empty() ? "Y" : y->label());
}

}  // namespace

std::vector<std::string> certify_ids() {
  auto ids = correspondence_ids();
  ids.push_back("three");
  return ids;
}

CertifyReport certify_full_faithful(const std::string& id, const PosetRef& x, const PosetRef& y,
                                    std::uint64_t budget) {
  const Matching m = make_matching(id, x, y, budget);
  CertifyReport r;
  r.correspondence = id;
  r.objects = objects_label(x, y);
  r.kleisli_count = m.arrows.size();
  r.transformer_count = m.transformers.size();
  std::map<Graph, std::size_t> image;
  r.injective = true;
  r.roundtrip = true;
  for (std::size_t i = 0; i < m.arrows.size(); ++i) {
    const Graph t = m.forward(m.arrows[i]);
    auto [it, fresh] = image.emplace(t, i);
    if (!fresh) {
      r.injective = false;
      if (!r.counterexample) {
        r.counterexample = "arrows " + arrow_string(m.arrows[it->second]) + " and " + arrow_string(m.arrows[i]) +
                           " share the transformer " + m.show(t);
      }
    }
    bool back_ok = false;
    try {
      back_ok = m.backward(t) == m.arrows[i];
    } catch (const Error&) {
      back_ok = false;
    }
    if (!back_ok) {
      r.roundtrip = false;
      if (!r.counterexample) r.counterexample = "round trip fails at " + arrow_string(m.arrows[i]);
    }
  }
  const std::set<Graph> transformers(m.transformers.begin(), m.transformers.end());
  r.surjective = true;
  for (const auto& t : m.transformers)
    if (!image.count(t)) {
      r.surjective = false;
      if (!r.counterexample) r.counterexample = "transformer " + m.show(t) + " has no Kleisli arrow";
      break;
    }
  bool images_in_class = true;
  for (const auto& [t, i] : image)
    if (!transformers.count(t)) {
      images_in_class = false;
      if (!r.counterexample) r.counterexample = "transform of " + arrow_string(m.arrows[i]) + " is outside the class";
      break;
    }
  r.bijection = r.injective && r.surjective && r.roundtrip && images_in_class &&
                r.kleisli_count == r.transformer_count && transformers.size() == m.transformers.size();
  return r;
}

CertifyReport certify_full_faithful(const std::string& id, std::size_t n, std::size_t m, std::uint64_t budget) {
  const bool poset = id == "three" || id == "plotkin" || correspondence(id).monad->poset_based();
  CertifyReport total;
  total.correspondence = id;
  total.objects = std::to_string(n) + "," + std::to_string(m);
  total.injective = total.surjective = total.roundtrip = total.bijection = true;
  for (const auto& x : suite_objects(poset, n))
    for (const auto& y : suite_objects(poset, m)) {
      CertifyReport r = certify_full_faithful(id, x, y, budget);
      total.kleisli_count += r.kleisli_count;
      total.transformer_count += r.transformer_count;
      total.injective = total.injective && r.injective;
      total.surjective = total.surjective && r.surjective;
      total.roundtrip = total.roundtrip && r.roundtrip;
      total.bijection = total.bijection && r.bijection;
      if (!total.counterexample && r.counterexample) total.counterexample = r.objects + ": " + *r.counterexample;
      total.cases.push_back(std::move(r));
    }
  return total;
}

RoundTripReport roundtrip_correspondence(const std::string& id, const PosetRef& x, const PosetRef& y,
                                         std::uint64_t budget) {
  const Matching m = make_matching(id, x, y, budget);
  RoundTripReport r;
  r.correspondence = id;
  auto miss = [&](const std::string& what) {
    ++r.mismatches;
    if (!r.counterexample) r.counterexample = what;
  };
  for (const auto& g : m.arrows) {
    ++r.checked;
    try {
      if (!(m.backward(m.forward(g)) == g)) miss("arrow " + arrow_string(g));
    } catch (const Error& e) {
      miss("arrow " + arrow_string(g) + ": " + e.what());
    }
  }
  for (const auto& t : m.transformers) {
    ++r.checked;
    try {
      if (m.forward(m.backward(t)) != t) miss("transformer " + m.show(t));
    } catch (const Error& e) {
      miss("transformer " + m.show(t) + ": " + e.what());
    }
  }
  return r;
}

}  // namespace tri
