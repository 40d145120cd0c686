#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "tri/error.hpp"
#include "tri/literal.hpp"
#include "tri/order.hpp"
#include "tri/structure.hpp"

using namespace tri;

namespace {

PosetRef diamond4() {
  return share(make_poset({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}}));
}

PosetRef vee() { return share(make_poset({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}})); }

}  // namespace

TEST_CASE("finite sets keep a natural canonical order") {
  const FinSet s = FinSet::canonical({"x10", "x2", "b", "a"});
  CHECK(s.elements() == std::vector<std::string>{"a", "b", "x2", "x10"});
  CHECK(s.index_of("x10") == 3);
  CHECK_FALSE(s.find("zz").has_value());
  CHECK(kind_of([&] { (void)s.index_of("zz"); }) == ErrorKind::UnknownElement);
  CHECK(FinSet::range(3, "s").elements() == std::vector<std::string>{"s0", "s1", "s2"});
}

TEST_CASE("make_poset closes covers and rejects cycles") {
  const FinPoset p = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(p.carrier().index_of("a"), p.carrier().index_of("c")));
  CHECK_FALSE(p.leq(p.carrier().index_of("c"), p.carrier().index_of("a")));
  CHECK(kind_of([] { (void)make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::CycleError);
  CHECK(kind_of([] { (void)make_poset({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownElement);
}

TEST_CASE("joins and meets agree with brute force") {
  for (const PosetRef& p : {diamond4(), vee(), share(FinPoset::chain(3)), share(boolean_lattice(2))}) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p->size()); ++m) {
      const Subset s = Subset::from_mask(p->size(), m);
      CHECK(p->join(s) == oracle::join(*p, m));
      CHECK(p->meet(s) == oracle::meet(*p, m));
    }
  }
  CHECK(diamond4()->is_lattice());
  CHECK_FALSE(vee()->is_lattice());
}

TEST_CASE("closures, upsets and downsets match brute force") {
  for (const FinPoset& p : all_posets(4)) {
    const auto ups = oracle::upset_masks(p);
    const SetLattice lat = upset_lattice(share(p));
    REQUIRE(lat.size() == ups.size());
    for (std::uint64_t m : ups) CHECK(lat.contains(Subset::from_mask(p.size(), m)));
    CHECK(downset_lattice(share(p)).size() == oracle::downset_masks(p).size());
    // Upsets correspond to monotone maps into 2.
    CHECK(ups.size() == oracle::count_class(p, *two_chain(), MapClass::Monotone));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      const Subset s = Subset::from_mask(p.size(), m);
      CHECK(p.is_upset(s) == oracle::is_upset(p, m));
      CHECK(p.is_upset(p.up_closure(s)));
      CHECK(s.is_subset_of(p.up_closure(s)));
      CHECK(p.is_downset(s.complement()) == p.is_upset(s));
    }
  }
}

TEST_CASE("complement reverses the order between upsets and downsets") {
  const PosetRef p = diamond4();
  const SetLattice ups = upset_lattice(p);
  const SetLattice downs = downset_lattice(p);
  for (std::size_t i = 0; i < ups.size(); ++i) {
    CHECK(downs.contains(ups.member(i).complement()));
    for (std::size_t j = 0; j < ups.size(); ++j) {
      const bool le = ups.member(i).is_subset_of(ups.member(j));
      CHECK(le == ups.member(j).complement().is_subset_of(ups.member(i).complement()));
    }
  }
}

TEST_CASE("poset enumeration counts") {
  const std::size_t posets[] = {1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(all_posets(n).size() == posets[n]);
  const std::size_t lattices[] = {1, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(all_lattices(n).size() == lattices[n - 1]);
  CHECK(kind_of([] { (void)all_posets(7); }) == ErrorKind::TooLarge);
}

TEST_CASE("structure-map enumeration matches double enumeration") {
  const PosetRef two = share(FinPoset::chain(2));
  CHECK(enumerate_structure_maps(two, two_chain(), MapClass::Monotone).size() == 3);
  const PosetRef b2 = share(boolean_lattice(2));
  const PosetRef b1 = share(boolean_lattice(1));
  // Join-preserving maps P(2) -> P(2) are the relations on 2 x 2.
  CHECK(enumerate_structure_maps(b2, b2, MapClass::JoinPreserving).size() == 16);
  const PosetRef lattices[] = {b1, b2, share(FinPoset::chain(3)), diamond4()};
  const MapClass classes[] = {MapClass::Monotone, MapClass::JoinPreserving, MapClass::MeetPreserving,
                              MapClass::JoinTop,  MapClass::MeetTop,        MapClass::Frame,
                              MapClass::Preframe0, MapClass::Boolean};
  for (const auto& p : lattices)
    for (const auto& q : lattices)
      for (MapClass cls : classes) {
        CAPTURE(to_string(cls));
        const auto maps = enumerate_structure_maps(p, q, cls);
        CHECK(maps.size() == oracle::count_class(*p, *q, cls));
        for (const auto& f : maps) CHECK(oracle::in_class(*p, *q, f.graph(), cls));
      }
}

TEST_CASE("enumeration budget is enforced") {
  const PosetRef b3 = share(boolean_lattice(3));
  CHECK(kind_of([&] { (void)enumerate_structure_maps(b3, b3, MapClass::Monotone, 10); }) == ErrorKind::TooLarge);
}

TEST_CASE("right adjoints satisfy the Galois condition") {
  const PosetRef lattices[] = {share(boolean_lattice(2)), share(FinPoset::chain(3)), diamond4()};
  for (const auto& p : lattices)
    for (const auto& q : lattices)
      for (const auto& f : enumerate_structure_maps(p, q, MapClass::JoinPreserving)) {
        const MonotoneMap g = right_adjoint(f);
        for (std::size_t a = 0; a < p->size(); ++a)
          for (std::size_t b = 0; b < q->size(); ++b) CHECK(q->leq(f(a), b) == p->leq(a, g(b)));
      }
  const PosetRef c3 = share(FinPoset::chain(3));
  const MonotoneMap not_join(c3, c3, {1, 1, 2});  // misses the bottom
  CHECK(kind_of([&] { (void)right_adjoint(not_join); }) == ErrorKind::NotJoinPreserving);
}

TEST_CASE("two-valued maps and lattice elements correspond") {
  const TwoValuedVariant variants[] = {TwoValuedVariant::JoinsToTwo, TwoValuedVariant::JoinsToOpTwo,
                                       TwoValuedVariant::MeetsToTwo, TwoValuedVariant::MeetsToOpTwo};
  for (const PosetRef& l : {diamond4(), share(boolean_lattice(2)), share(FinPoset::chain(4))}) {
    for (TwoValuedVariant v : variants) {
      std::size_t preserving = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << l->size()); ++m) {
        const TwoValuedMap phi = Subset::from_mask(l->size(), m);
        if (!preserves_two_valued(*l, phi, v)) continue;
        ++preserving;
        CHECK(element_to_two_valued(*l, two_valued_to_element(*l, phi, v), v) == phi);
      }
      CHECK(preserving == l->size());
      for (std::size_t a = 0; a < l->size(); ++a)
        CHECK(two_valued_to_element(*l, element_to_two_valued(*l, a, v), v) == a);
    }
  }
}

TEST_CASE("monotone maps are checked on construction") {
  const PosetRef c2 = share(FinPoset::chain(2));
  CHECK(kind_of([&] { MonotoneMap(c2, c2, {1, 0}); }) == ErrorKind::NotMonotone);
  const MonotoneMap f(c2, c2, {0, 0});
  const MonotoneMap id = MonotoneMap::identity(c2);
  CHECK(compose(id, f) == f);
  CHECK(pointwise_leq(f, id));
  CHECK_FALSE(pointwise_leq(id, f));
}

TEST_CASE("poset literals") {
  const FinPoset p = parse_poset("poset D { elems a b c; covers a<b a<c; }");
  CHECK(p.label() == "D");
  CHECK(p.size() == 3);
  CHECK(p.leq(0, 1));
  CHECK_FALSE(p.leq(1, 2));
  CHECK(parse_poset("{a, b, c | a<b<c}") == make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  CHECK(parse_poset("{a,b}").is_discrete());
  CHECK(parse_poset("{}").size() == 0);
  CHECK(parse_poset("chain:3").size() == 3);
  CHECK(parse_poset("antichain:2").is_discrete());
  CHECK(kind_of([] { (void)parse_poset("poset { elems a a; }"); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { (void)parse_poset("{a, b | a<c}"); }) == ErrorKind::UnknownElement);
  CHECK(kind_of([] { (void)parse_poset("{a, b | a<b<a}"); }) == ErrorKind::CycleError);
  CHECK(kind_of([] { (void)parse_poset("poset P { elems a; } extra"); }) == ErrorKind::SyntaxError);
  const auto j = poset_json(p);
  CHECK(j.dump() == R"({"covers":[["a","b"],["a","c"]],"elements":["a","b","c"],"name":"D"})");
}
