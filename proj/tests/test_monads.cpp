#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "tri/kit.hpp"
#include "tri/monads.hpp"

using namespace tri;

namespace {

using Family = std::set<std::uint64_t>;

/// Elements of a double-dual monad object as families of predicate masks.
Family family_of(const MonadObject& t, std::size_t i) {
  Family out;
  t.element(i).for_each([&](std::size_t k) { out.insert(t.preds->member(k).mask()); });
  return out;
}

/// bind(f)(Φ) = {V | {x | V ∈ f(x)} ∈ Φ}, read off the predicate masks directly.
Family double_dual_bind(const MonadObject& tx, const MonadObject& ty, const std::vector<std::size_t>& f,
                        std::size_t m) {
  const Family phi = family_of(tx, m);
  Family out;
  for (const Subset& v : ty.preds->members) {
    std::uint64_t pulled = 0;
    for (std::size_t x = 0; x < f.size(); ++x)
      if (family_of(ty, f[x]).count(v.mask())) pulled |= std::uint64_t{1} << x;
    if (phi.count(pulled)) out.insert(v.mask());
  }
  return out;
}

std::uint64_t union_bind(const MonadObject& tx, const MonadObject& ty, const std::vector<std::size_t>& f,
                         std::size_t m) {
  std::uint64_t out = 0;
  tx.element(m).for_each([&](std::size_t x) { out |= ty.element(f[x]).mask(); });
  return out;
}

std::size_t count_plotkin(const FinPoset& p) {
  std::size_t n = 0;
  for (std::uint64_t c : oracle::downset_masks(p))
    for (std::uint64_t k : oracle::upset_masks(p))
      if (c != 0 && k != 0 && (c & k) != 0) ++n;
  return n;
}

std::size_t nonempty(const std::vector<std::uint64_t>& masks) {
  return static_cast<std::size_t>(std::count_if(masks.begin(), masks.end(), [](std::uint64_t m) { return m != 0; }));
}

}  // namespace

TEST_CASE("carrier sizes on discrete sets") {
  const std::size_t dedekind[] = {2, 3, 6, 20};
  for (std::size_t n = 0; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(make_monad("powerset")->object(n)->size() == (std::size_t{1} << n));
    CHECK(make_monad("monotone-neighbourhood")->object(n)->size() == dedekind[n]);
    CHECK(make_monad("filter")->object(n)->size() == (std::size_t{1} << n));
    CHECK(make_monad("ultrafilter")->object(n)->size() == n);
  }
  for (std::size_t n = 0; n <= 2; ++n)
    CHECK(make_monad("neighbourhood")->object(n)->size() == (std::size_t{1} << (std::size_t{1} << n)));
  CHECK(make_monad("monotone-neighbourhood")->object(2)->size() == 6);
  CHECK(make_monad("filter")->object(2)->size() == 4);
}

TEST_CASE("carrier sizes on posets match subset counts") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const FinPoset& p : all_posets(n)) {
      const PosetRef base = share(p);
      CAPTURE(p.label());
      const auto downs = oracle::downset_masks(p);
      const auto ups = oracle::upset_masks(p);
      CHECK(make_monad("downset")->object(base)->size() == downs.size());
      CHECK(make_monad("hoare")->object(base)->size() == nonempty(downs));
      CHECK(make_monad("smyth")->object(base)->size() == nonempty(ups));
      CHECK(make_monad("smyth-filter")->object(base)->size() == nonempty(ups));
      CHECK(make_monad("plotkin")->object(base)->size() == count_plotkin(p));
    }
  }
}

TEST_CASE("ultrafilters and Boolean maps collapse to points") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const CollapseReport r = cba_collapse_check(n);
    CHECK(r.points == n);
    CHECK(r.maps == n);
    CHECK(r.passed());
  }
  for (const char* id : {"filter", "ultrafilter", "smyth-filter"})
    for (std::size_t n = 1; n <= 3; ++n) CHECK(all_filters_principal(*make_monad(id)->object(n)));
}

TEST_CASE("units") {
  const MonadRef p = make_monad("powerset");
  const ObjectRef t = p->object(3);
  for (std::size_t x = 0; x < 3; ++x) CHECK(t->element(p->unit(*t, x)) == Subset(3, {x}));
  const MonadRef nb = make_monad("neighbourhood");
  const ObjectRef tn = nb->object(2);
  for (std::size_t x = 0; x < 2; ++x) {
    Family expected;
    for (std::uint64_t v = 0; v < 4; ++v)
      if (oracle::in_mask(v, x)) expected.insert(v);
    CHECK(family_of(*tn, nb->unit(*tn, x)) == expected);
  }
}

TEST_CASE("double-dual binds agree with the pullback formula") {
  for (const char* id : {"neighbourhood", "monotone-neighbourhood", "filter", "ultrafilter", "smyth-filter"}) {
    const MonadRef monad = make_monad(id);
    CAPTURE(id);
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t m = 1; m <= 2; ++m) {
        const ObjectRef tx = monad->object(n);
        const ObjectRef ty = monad->object(m);
        for (const auto& f : enumerate_kleisli(monad, tx, ty))
          for (std::size_t e = 0; e < tx->size(); ++e)
            CHECK(family_of(*ty, monad->bind(*tx, *ty, f.images, e)) == double_dual_bind(*tx, *ty, f.images, e));
      }
  }
}

TEST_CASE("subset-monad binds are unions") {
  for (const char* id : {"powerset", "downset", "hoare", "smyth"}) {
    const MonadRef monad = make_monad(id);
    CAPTURE(id);
    for (const FinPoset& px : all_posets(2))
      for (const FinPoset& py : all_posets(2)) {
        const ObjectRef tx = monad->object(share(px));
        const ObjectRef ty = monad->object(share(py));
        for (const auto& f : enumerate_kleisli(monad, tx, ty))
          for (std::size_t e = 0; e < tx->size(); ++e)
            CHECK(ty->element(monad->bind(*tx, *ty, f.images, e)).mask() == union_bind(*tx, *ty, f.images, e));
      }
  }
}

TEST_CASE("Plotkin bind by unions agrees with bind through the dual") {
  const MonadRef monad = make_monad("plotkin");
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m)
      for (const FinPoset& px : all_posets(n))
        for (const FinPoset& py : all_posets(m)) {
          const ObjectRef tx = monad->object(share(px));
          const ObjectRef ty = monad->object(share(py));
          for (int trial = 0; trial < 6; ++trial) {
            const KleisliArrow f = random_kleisli(monad, tx, ty, rng);
            for (std::size_t e = 0; e < tx->size(); ++e)
              CHECK(ty->element(monad->bind(*tx, *ty, f.images, e)) ==
                    plotkin_bind_by_duality(*tx, *ty, f.images, e));
          }
        }
}

TEST_CASE("Plotkin elements read back from their functionals") {
  const PosetRef base = share(FinPoset::chain(2));
  const ObjectRef t = make_monad("plotkin")->object(base);
  const auto [lower, upper] = plotkin_unpack(t->element(0), 2);
  CHECK(plotkin_pack(lower, upper) == t->element(0));
  for (std::size_t e = 0; e < t->size(); ++e) {
    const Subset back =
        plotkin_decode(*t, [&](const Subset& outer, const Subset& inner) {
          return plotkin_evaluate(*t, e, outer, inner);
        });
    CHECK(back == t->element(e));
  }
}

TEST_CASE("the two Smyth presentations correspond and commute with unit and bind") {
  const MonadRef up = make_monad("smyth");
  const MonadRef fil = make_monad("smyth-filter");
  for (const FinPoset& px : all_posets(2))
    for (const FinPoset& py : all_posets(2)) {
      const ObjectRef ux = up->object(share(px));
      const ObjectRef fx = fil->object(share(px));
      const ObjectRef uy = up->object(share(py));
      const ObjectRef fy = fil->object(share(py));
      const auto to_fx = smyth_upsets_to_filters(*ux, *fx);
      const auto to_fy = smyth_upsets_to_filters(*uy, *fy);
      CHECK(std::set<std::size_t>(to_fx.begin(), to_fx.end()).size() == fx->size());
      for (std::size_t x = 0; x < px.size(); ++x) CHECK(to_fx[up->unit(*ux, x)] == fil->unit(*fx, x));
      for (const auto& f : enumerate_kleisli(up, ux, uy)) {
        std::vector<std::size_t> g;
        for (std::size_t v : f.images) g.push_back(to_fy[v]);
        for (std::size_t e = 0; e < ux->size(); ++e)
          CHECK(to_fy[up->bind(*ux, *uy, f.images, e)] == fil->bind(*fx, *fy, g, to_fx[e]));
      }
    }
}

TEST_CASE("Kleisli arrows are validated") {
  const MonadRef smyth = make_monad("smyth");
  const PosetRef c2 = share(FinPoset::chain(2));
  const ObjectRef t = smyth->object(c2);
  // Images must be monotone in the Smyth order (reverse inclusion).
  std::size_t whole = 0;
  std::size_t top_only = 0;
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (t->element(i).count() == 2) whole = i;
    if (t->element(i) == Subset(2, {1})) top_only = i;
  }
  CHECK_NOTHROW(KleisliArrow(smyth, t, t, {whole, top_only}));
  CHECK(kind_of([&] { KleisliArrow(smyth, t, t, {top_only, whole}); }) == ErrorKind::NotMonotone);
  CHECK(kind_of([&] { KleisliArrow(smyth, t, make_monad("hoare")->object(c2), {0, 0}); }) == ErrorKind::MonadMismatch);
  CHECK(kind_of([] { (void)make_monad("neighbourhood")->object(4); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { (void)make_monad("nope"); }) == ErrorKind::InvalidArgument);
  CHECK(enumerate_kleisli(make_monad("powerset"), make_monad("powerset")->object(2), make_monad("powerset")->object(2))
            .size() == 16);
}

TEST_CASE("monad laws at small sizes") {
  for (const auto& id : monad_ids()) {
    CAPTURE(id);
    LawOptions opts;
    opts.max_size = 2;
    const LawReport r = check_monad_laws(make_monad(id), opts);
    CHECK(r.all_passed());
    CHECK(r.find("associativity").checked > 0);
  }
}
