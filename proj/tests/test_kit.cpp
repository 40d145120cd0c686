#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "tri/kit.hpp"

using namespace tri;

TEST_CASE("Kleisli composition of relations is relational composition") {
  const MonadRef p = make_monad("powerset");
  const ObjectRef t2 = p->object(2);
  const ObjectRef t3 = p->object(3);
  const auto fs = enumerate_kleisli(p, t2, t3);
  const auto gs = enumerate_kleisli(p, t3, t2);
  for (std::size_t i = 0; i < fs.size(); i += 7)
    for (const KleisliArrow& g : gs) {
      const KleisliArrow& f = fs[i];
      const KleisliArrow gf = kleisli_compose(g, f);
      for (std::size_t x = 0; x < 2; ++x) {
        std::uint64_t expected = 0;
        t3->element(f(x)).for_each([&](std::size_t y) { expected |= t2->element(g(y)).mask(); });
        CHECK(t2->element(gf(x)).mask() == expected);
      }
    }
  CHECK(kind_of([&] { (void)kleisli_compose(fs.front(), fs.front()); }) == ErrorKind::CarrierMismatch);
  const ObjectRef h2 = make_monad("hoare")->object(share(FinPoset::antichain(2)));
  const auto hs = enumerate_kleisli(make_monad("hoare"), h2, h2);
  CHECK(kind_of([&] { (void)kleisli_compose(hs.front(), fs.front()); }) == ErrorKind::MonadMismatch);
}

TEST_CASE("the Kleisli extension is a monotone map of T-objects") {
  const MonadRef smyth = make_monad("smyth");
  const ObjectRef t = smyth->object(share(FinPoset::chain(2)));
  for (const KleisliArrow& f : enumerate_kleisli(smyth, t, t)) {
    const MonotoneMap ext = stat_functor(f);
    for (std::size_t x = 0; x < 2; ++x) CHECK(ext(smyth->unit(*t, x)) == f(x));
  }
}

TEST_CASE("free algebras satisfy the algebra laws") {
  for (const auto& id : monad_ids()) {
    CAPTURE(id);
    const MonadRef monad = make_monad(id);
    const PosetRef base = share(monad->poset_based() ? FinPoset::chain(2) : FinPoset::antichain(1));
    auto check = [&] { return check_em_algebra(free_algebra(monad, base)); };
    // The multiplication law needs T(T(T(X))), which is out of reach here.
    if (id == "neighbourhood" || id == "monotone-neighbourhood") {
      CHECK(kind_of([&] { (void)check(); }) == ErrorKind::TooLarge);
      continue;
    }
    const LawReport r = check();
    CHECK(r.all_passed());
    CHECK(r.find("multiplication").checked > 0);
  }
  CHECK(kind_of([] { (void)check_em_algebra(free_algebra(make_monad("powerset"), share(FinPoset::antichain(2)))); }) ==
        ErrorKind::TooLarge);
}

TEST_CASE("joins make a lattice a Hoare algebra; a constant does not") {
  const MonadRef hoare = make_monad("hoare");
  const PosetRef c3 = share(FinPoset::chain(3));
  const ObjectRef t = hoare->object(c3);
  EMAlgebraCandidate joins{hoare, t, {}};
  for (std::size_t i = 0; i < t->size(); ++i) joins.structure.push_back(*oracle::join(*c3, t->element(i).mask()));
  CHECK(check_em_algebra(joins).all_passed());
  EMAlgebraCandidate constant{hoare, t, std::vector<std::size_t>(t->size(), 0)};
  const LawReport r = check_em_algebra(constant);
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(r.find("unit").passed);
}

TEST_CASE("random Kleisli arrows are valid and reproducible") {
  for (const auto& id : monad_ids()) {
    CAPTURE(id);
    const MonadRef monad = make_monad(id);
    const PosetRef base = share(monad->poset_based() ? FinPoset::chain(2) : FinPoset::antichain(2));
    const ObjectRef t = monad->object(base);
    std::mt19937_64 a(3);
    std::mt19937_64 b(3);
    for (int i = 0; i < 10; ++i) {
      const KleisliArrow f = random_kleisli(monad, t, t, a);
      CHECK(f == random_kleisli(monad, t, t, b));
      CHECK_NOTHROW(KleisliArrow(monad, t, t, f.images));
    }
  }
}

TEST_CASE("certification counts match brute force") {
  const CertifyReport box = certify_full_faithful("box", 2, 2);
  CHECK(box.kleisli_count == 16);
  CHECK(box.transformer_count == 16);
  CHECK(box.bijection);
  for (const auto& id : certify_ids()) {
    CAPTURE(id);
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t m = 1; m <= 2; ++m) {
        const CertifyReport r = certify_full_faithful(id, n, m);
        CHECK(r.bijection);
        CHECK(r.injective);
        CHECK(r.surjective);
        CHECK(r.roundtrip);
        CHECK(r.kleisli_count == r.transformer_count);
        CHECK_FALSE(r.counterexample.has_value());
        if (id == "three") continue;
        const Correspondence c = correspondence(id);
        std::uint64_t brute = 0;
        for (const PosetRef& x : suite_objects(c.monad->poset_based(), n))
          for (const PosetRef& y : suite_objects(c.monad->poset_based(), m)) {
            const Homset h = c.homset(x, y);
            const FinPoset& src = *h.pred_target->lattice;
            const FinPoset& dst = *h.pred_source->lattice;
            for (const auto& f : oracle::all_functions(src.size(), dst.size()))
              if (!c.cls || oracle::in_class(src, dst, f, *c.cls)) ++brute;
          }
        CHECK(r.transformer_count == brute);
      }
  }
  CHECK(kind_of([] { (void)certify_full_faithful("box", 3, 3, 10); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { (void)certify_full_faithful("nope", 1, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("round trips on single object pairs") {
  for (const auto& id : correspondence_ids()) {
    CAPTURE(id);
    const bool posets = correspondence(id).monad->poset_based();
    for (const PosetRef& x : suite_objects(posets, 2)) {
      const RoundTripReport r = roundtrip_correspondence(id, x, x);
      CHECK(r.passed());
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("distribution and measure laws at small sizes") {
  const LawReport d = check_distribution_laws(2, 3, 16, 1);
  CHECK(d.all_passed());
  CHECK(d.find("associativity").checked > 0);
  const LawReport g = check_giry_laws(2, 3, 16, 1);
  CHECK(g.all_passed());
  CHECK(g.find("associativity").checked > 0);
}
