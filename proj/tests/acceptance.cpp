// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check is exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tri/distribution.hpp"
#include "tri/effect.hpp"
#include "tri/error.hpp"
#include "tri/gcl.hpp"
#include "tri/kit.hpp"
#include "tri/monads.hpp"
#include "tri/structure.hpp"
#include "tri/transformers.hpp"

using namespace tri;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool passed() const { return failed_ == 0 && checks_ > 0; }

  void report(int number, double seconds) const {
    std::cout << (passed() ? "PASS" : "FAIL") << " criterion " << number << ": " << title_ << " (" << checks_
              << " checks, " << failed_ << " failed, " << seconds << " s)\n";
    for (const auto& n : notes_) std::cout << "    " << n << "\n";
    for (const auto& f : failures_) std::cout << "    failed: " << f << "\n";
  }

 private:
  std::string title_;
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string counts(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + " vs " + std::to_string(b); }

void expect_laws(Criterion& c, const LawReport& r) {
  for (const auto& law : r.laws)
    c.expect(law.passed && law.checked > 0, r.subject + ": " + law.axiom + " " + law.counterexample);
}

/// Fuzzy predicates on the carrier with values in {0, 1/2, 1}.
std::vector<FuzzyPredicate> probe_predicates(const FinSet& carrier) {
  std::vector<FuzzyPredicate> out;
  const std::vector<Rat> levels{Rat(0), Rat(1, 2), Rat(1)};
  std::size_t total = 1;
  for (std::size_t i = 0; i < carrier.size(); ++i) total *= levels.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Rat> v;
    for (std::size_t i = 0, c = code; i < carrier.size(); ++i, c /= levels.size())
      v.push_back(levels[c % levels.size()]);
    out.emplace_back(carrier, v);
  }
  return out;
}

bool same_functional(const ExpectationFunctional& a, const ExpectationFunctional& b,
                     const std::vector<FuzzyPredicate>& probes) {
  for (const auto& p : probes)
    if (a(p) != b(p)) return false;
  return true;
}

// ---------------------------------------------------------------- 1

void monad_laws(Criterion& c) {
  for (const auto& id : monad_ids()) {
    const bool double_exp = id == "neighbourhood" || id == "monotone-neighbourhood";
    LawOptions opts;
    opts.max_size = double_exp ? 2 : 3;
    const auto start = std::chrono::steady_clock::now();
    const LawReport r = check_monad_laws(make_monad(id), opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect_laws(c, r);
    c.expect(secs < 60, id + " took " + std::to_string(secs) + " s");
    if (double_exp) c.expect(r.sampled_cases == 0, id + " was not exhaustive");
    std::ostringstream line;
    line << r.subject << ": " << r.cases << " object combinations, " << r.sampled_cases << " sampled (seed "
         << opts.seed << "), " << secs << " s";
    c.note(line.str());
  }
  expect_laws(c, check_distribution_laws(3, 4, 64, 1));
  expect_laws(c, check_giry_laws(3, 6, 64, 1));
  c.note("distribution and finite Giry: carriers up to 3, 64 seeded kernels per pair (seed 1)");
}

// ---------------------------------------------------------------- 2

void cardinalities(Criterion& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    c.expect(make_monad("ultrafilter")->object(n)->size() == n, "ultrafilters on " + std::to_string(n));
    const CollapseReport r = cba_collapse_check(n);
    c.expect(r.maps == n && r.points == n && r.passed(), "Boolean maps P(X) -> 2 at " + std::to_string(n));
  }
  const PosetRef two_points = share(FinPoset::antichain(2));
  c.expect(make_monad("monotone-neighbourhood")->object(two_points)->size() == 6, "monotone neighbourhoods on 2");
  c.expect(make_monad("filter")->object(two_points)->size() == 4, "filters on 2");
  const PosetRef chain2 = share(FinPoset::chain(2));
  const ThreeValuedMaps maps = three_valued_maps(chain2);
  const std::size_t monotone = enumerate_structure_maps(chain2, three_algebra().poset, MapClass::Monotone).size();
  const std::size_t lens = lens_algebra(share(upsets(*chain2))).pairs.size();
  c.expect(maps.maps.size() == 6 && monotone == 6 && lens == 6,
           "maps from the 2-chain into 3: " + std::to_string(monotone) + ", lens pairs " + std::to_string(lens));
}

// ---------------------------------------------------------------- 3

std::vector<PosetRef> posets_up_to(std::size_t n, bool poset_based) {
  std::vector<PosetRef> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (const PosetRef& p : suite_objects(poset_based, k)) out.push_back(p);
  return out;
}

void roundtrip_all(Criterion& c, const std::string& id, std::size_t max_size) {
  const bool poset_based = correspondence(id).monad->poset_based();
  std::uint64_t checked = 0;
  for (const PosetRef& x : posets_up_to(max_size, poset_based))
    for (const PosetRef& y : posets_up_to(max_size, poset_based)) {
      const RoundTripReport r = roundtrip_correspondence(id, x, y);
      checked += r.checked;
      c.expect(r.passed(), id + " " + x->label() + " -> " + y->label() + ": " + r.counterexample.value_or(""));
    }
  c.note(id + ": " + std::to_string(checked) + " composites, objects up to " + std::to_string(max_size));
}

// Meet-preserving maps P(Y) -> P(X) are fixed by the images of the coatoms.
PredTransformer random_meet_preserving(const Homset& h, std::mt19937_64& rng) {
  const std::size_t ny = h.pred_target->base->size();
  const std::size_t nx = h.pred_source->base->size();
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << nx) - 1);
  std::vector<std::uint64_t> coatom(ny);
  for (auto& v : coatom) v = pick(rng);
  PredTransformer f{h.pred_target, h.pred_source, {}};
  for (std::size_t k = 0; k < h.pred_target->size(); ++k) {
    std::uint64_t image = (std::uint64_t{1} << nx) - 1;
    for (std::size_t y = 0; y < ny; ++y)
      if (!h.pred_target->member(k).contains(y)) image &= coatom[y];
    f.graph.push_back(h.pred_source->index_of(Subset::from_mask(nx, image)));
  }
  return f;
}

void box_sampled(Criterion& c, std::uint64_t seed) {
  const Correspondence box = correspondence("box");
  std::mt19937_64 rng(seed);
  std::size_t samples = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      if (n < 3 && m < 3) continue;
      const Homset h = box.homset(share(FinPoset::antichain(n)), share(FinPoset::antichain(m)));
      for (int i = 0; i < 100; ++i, ++samples) {
        const KleisliArrow g = random_kleisli(box.monad, h.source, h.target, rng);
        c.expect(box.backward(h, box.forward(h, g)) == g, "sampled box arrow");
        const PredTransformer f = random_meet_preserving(h, rng);
        c.expect(box.forward(h, box.backward(h, f)) == f, "sampled box transformer");
      }
    }
  c.note("box: " + std::to_string(2 * samples) + " seeded samples at size 3 (seed " + std::to_string(seed) + ")");
}

void monotone_nbhd_maps(Criterion& c) {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m)
      for (const FinPoset& py : all_posets(m)) {
        const PosetRef x = share(FinPoset::antichain(n));
        const PosetRef y = share(py);
        const SetLattice ups = upset_lattice(y);
        std::vector<std::size_t> pick(n, 0);
        while (true) {
          SubsetValuedMap g{x, y, {}};
          for (std::size_t i = 0; i < n; ++i) g.images.push_back(ups.member(pick[i]));
          c.expect(monotone_nbhd_backward(monotone_nbhd_forward(g)) == g, "upset-valued map round trip");
          ++checked;
          std::size_t i = 0;
          while (i < n && ++pick[i] == ups.size()) pick[i++] = 0;
          if (i == n) break;
        }
        // Monotone maps Y -> P(X) in the other direction.
        const PosetRef px = share(boolean_lattice(n));
        for (const MonotoneMap& f : enumerate_structure_maps(y, px, MapClass::Monotone)) {
          SubsetValuedMap fm{y, x, {}};
          for (std::size_t j = 0; j < m; ++j) fm.images.push_back(Subset::from_mask(n, f(j)));
          c.expect(monotone_nbhd_forward(monotone_nbhd_backward(fm)) == fm, "monotone map round trip");
          ++checked;
        }
      }
  c.note("monotone-nbhd maps: " + std::to_string(checked) + " composites up to 2 points");
}

void three_lenses(Criterion& c) {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 4; ++n)
    for (const FinPoset& p : all_posets(n)) {
      const PosetRef base = share(p);
      for (const auto& values : three_valued_maps(base).maps) {
        c.expect(lens_to_three(three_to_lens(base, values)) == values, "3-valued map round trip on " + p.label());
        ++checked;
      }
      const SetLattice opens = upset_lattice(base);
      for (const Subset& outer : opens.members)
        for (const Subset& inner : opens.members) {
          if (!inner.is_subset_of(outer)) continue;
          const LensPair lens = LensPair::make(base, outer, inner);
          c.expect(three_to_lens(base, lens_to_three(lens)) == lens, "lens round trip on " + p.label());
          ++checked;
        }
    }
  c.note("three/lens: " + std::to_string(checked) + " composites on posets up to 4 points");
}

void plotkin_homs(Criterion& c) {
  std::vector<PosetRef> frames;
  for (std::size_t n = 0; n <= 2; ++n)
    for (const FinPoset& p : all_posets(n)) frames.push_back(share(upsets(p)));
  std::size_t checked = 0;
  for (const PosetRef& fa : frames)
    for (const PosetRef& fb : frames) {
      const LensAlgebra a = lens_algebra(fa);
      const LensAlgebra b = lens_algebra(fb);
      for (const MonotoneMap& f : enumerate_plotkin_homs(a.algebra, b.algebra)) {
        c.expect(plotkin_hom_join(a, b, plotkin_hom_split(a, b, f)) == f, "hom -> pair -> hom");
        ++checked;
      }
      const auto firsts = enumerate_structure_maps(fa, fb, MapClass::JoinTop);
      const auto seconds = enumerate_structure_maps(fa, fb, MapClass::Preframe0);
      for (const MonotoneMap& g1 : firsts)
        for (const MonotoneMap& g2 : seconds) {
          if (!pointwise_leq(g2, g1)) continue;
          const LensHomPair back = plotkin_hom_split(a, b, plotkin_hom_join(a, b, {g1, g2}));
          c.expect(back.first == g1 && back.second == g2, "pair -> hom -> pair");
          ++checked;
        }
    }
  c.note("plotkin homs: " + std::to_string(checked) + " composites over frames of posets up to 2 points");
}

void expectation_instances(Criterion& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<int> den(1, 6);
  for (int i = 0; i < 200; ++i) {
    const FinSet x = FinSet::range(size(rng));
    const FinSet y = FinSet::range(size(rng));
    std::vector<Distribution> rows;
    for (std::size_t k = 0; k < x.size(); ++k) rows.push_back(random_distribution(y, den(rng), rng));
    const DistArrow f(x, y, rows);
    c.expect(expectation_state(expectation_pred(f)) == f, "stochastic map round trip");
    // A linear transformer given by its matrix alone.
    const EffectTransformer t{y, x, [rows, x](const FuzzyPredicate& q) {
                                std::vector<Rat> v(x.size(), Rat(0));
                                for (std::size_t k = 0; k < x.size(); ++k)
                                  for (std::size_t j = 0; j < q.size(); ++j) v[k] += rows[k](j) * q(j);
                                return FuzzyPredicate(x, v);
                              }};
    const EffectTransformer back = expectation_pred(expectation_state(t));
    bool same = true;
    for (const auto& q : probe_predicates(y)) same = same && back(q) == t(q);
    c.expect(same, "linear transformer round trip");
  }
  c.note("expectation: 200 seeded instances (seed " + std::to_string(seed) + "), carriers up to 4");
}

void roundtrips(Criterion& c) {
  roundtrip_all(c, "box", 3);
  box_sampled(c, 1);
  roundtrip_all(c, "diamond", 3);
  roundtrip_all(c, "monotone-neighbourhood", 2);
  monotone_nbhd_maps(c);
  roundtrip_all(c, "hoare", 3);
  roundtrip_all(c, "smyth", 3);
  three_lenses(c);
  plotkin_homs(c);
  expectation_instances(c, 1);
}

// ---------------------------------------------------------------- 4

void certification(Criterion& c) {
  const CertifyReport box = certify_full_faithful("box", 2, 2);
  c.expect(box.bijection && box.kleisli_count == 16 && box.transformer_count == 16,
           "box (2,2): " + counts(box.kleisli_count, box.transformer_count));
  c.note("box (2,2): " + counts(box.kleisli_count, box.transformer_count));
  for (const char* id : {"hoare", "smyth", "three"}) {
    std::uint64_t arrows = 0;
    std::uint64_t maps = 0;
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t m = 0; m <= 2; ++m) {
        const CertifyReport r = certify_full_faithful(id, n, m);
        arrows += r.kleisli_count;
        maps += r.transformer_count;
        c.expect(r.bijection && r.kleisli_count == r.transformer_count,
                 std::string(id) + " (" + std::to_string(n) + "," + std::to_string(m) + "): " +
                     counts(r.kleisli_count, r.transformer_count));
      }
    c.note(std::string(id) + " up to 2 points: " + counts(arrows, maps));
  }
}

// ---------------------------------------------------------------- 5

void monad_morphism(Criterion& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<int> den(1, 6);
  for (int i = 0; i < 500; ++i) {
    const FinSet x = FinSet::range(size(rng));
    const FinSet y = FinSet::range(size(rng));
    const auto probes_x = probe_predicates(x);
    const auto probes_y = probe_predicates(y);
    const std::size_t point = std::uniform_int_distribution<std::size_t>(0, x.size() - 1)(rng);
    c.expect(same_functional(expectation_embed(Distribution::unit(x, point)), expectation_unit(x, point), probes_x),
             "unit");

    const Distribution omega = random_distribution(x, den(rng), rng);
    std::vector<Distribution> rows;
    std::vector<ExpectationFunctional> lifted;
    for (std::size_t k = 0; k < x.size(); ++k) {
      rows.push_back(random_distribution(y, den(rng), rng));
      lifted.push_back(expectation_embed(rows.back()));
    }
    const DistArrow f(x, y, rows);
    c.expect(same_functional(expectation_embed(dist_bind(f, omega)),
                             expectation_bind(y, lifted, expectation_embed(omega)), probes_y),
             "bind");

    const Distribution other = random_distribution(x, den(rng), rng);
    const bool equal_images = same_functional(expectation_embed(omega), expectation_embed(other), probes_x);
    c.expect(equal_images == (omega == other), "injectivity");
    c.expect(expectation_weights(expectation_embed(omega)) == omega, "weights read back");
  }
  c.note("500 seeded instances (seed " + std::to_string(seed) + "), carriers up to 4; surjectivity not checked");
}

// ---------------------------------------------------------------- 6

void giry(Criterion& c) {
  std::size_t measures = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const FinSet atoms = FinSet::range(n);
    const auto probes = probe_predicates(atoms);
    std::set<std::vector<Rat>> seen;
    for (int d = 1; d <= 6; ++d)
      for (const Distribution& omega : grid_distributions(atoms, d)) {
        if (!seen.insert(omega.dense()).second) continue;
        const Measure phi = Measure::from_distribution(omega);
        c.expect(functional_to_measure(measure_to_functional(phi)) == phi, "measure round trip");
        // The integral written out directly, independent of the library.
        const ExpectationFunctional integral{atoms, [omega](const FuzzyPredicate& p) {
                                               Rat sum(0);
                                               for (std::size_t a = 0; a < p.size(); ++a) sum += p(a) * omega(a);
                                               return sum;
                                             }};
        c.expect(same_functional(measure_to_functional(functional_to_measure(integral)), integral, probes),
                 "integral round trip");
        ++measures;
      }
  }
  c.note(std::to_string(measures) + " distinct measures with denominators up to 6 on up to 3 atoms");
}

// ---------------------------------------------------------------- 7

void wp_corpus(Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  const LawReport r = gcl::check_wp_corpus(200, 1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect_laws(c, r);
  c.expect(secs < 120, "corpus took " + std::to_string(secs) + " s");
  for (const char* law : {"pow/demonic roundtrip", "pow/angelic roundtrip", "pow/demonic duality",
                          "pow/angelic duality", "pow/demonic meets", "pow/angelic joins",
                          "dist/expectation roundtrip"}) {
    bool present = false;
    for (const auto& l : r.laws) present = present || l.axiom == law;
    c.expect(present, std::string("law not run: ") + law);
  }
  c.note(r.subject + ": 200 programs per mode, " + std::to_string(secs) + " s");
}

// ---------------------------------------------------------------- 8

void effects(Criterion& c) {
  auto expect_report = [&](const EffectReport& r) {
    for (const auto& a : r.axioms) c.expect(a.passed && a.checked > 0, r.instance + ": " + a.axiom);
  };
  for (std::size_t n = 0; n <= 3; ++n) expect_report(validate_effect_algebra(powerset_effect_algebra(n)));
  for (int d = 1; d <= 6; ++d) expect_report(validate_effect_algebra(unit_interval_effect_algebra(d)));
  expect_report(check_mv_identities(6));
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries = {
      {"monad laws", monad_laws},
      {"cardinalities", cardinalities},
      {"correspondence round trips", roundtrips},
      {"full and faithful certification", certification},
      {"distributions into expectations", [](Criterion& c) { monad_morphism(c, 1); }},
      {"finite Giry measures and integrals", giry},
      {"wp healthiness corpus", wp_corpus},
      {"effect structure axioms", effects},
  };
  bool all = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Criterion c(entries[i].title);
    const auto start = std::chrono::steady_clock::now();
    try {
      entries[i].run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    c.report(static_cast<int>(i + 1), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    all = all && c.passed();
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
