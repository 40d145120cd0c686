#include "tri/distribution.hpp"

#include "tri/error.hpp"

namespace tri {

namespace {

void check_normalized(const FinSet& carrier, const std::map<std::size_t, Rat>& weights) {
  Rat total = 0;
  for (const auto& [x, w] : weights) {
    if (x >= carrier.size()) fail(ErrorKind::UnknownElement, "weight on a point outside the carrier");
    if (w < 0) fail(ErrorKind::NotNormalized, "negative weight at " + carrier.name(x));
    total += w;
  }
  if (total != 1) fail(ErrorKind::NotNormalized, "weights sum to " + rat_string(total) + ", not 1");
}

}  // namespace

Distribution::Distribution(FinSet carrier, const std::vector<Rat>& weights) : carrier_(std::move(carrier)) {
  if (weights.size() != carrier_.size()) fail(ErrorKind::CarrierMismatch, "weights do not cover the carrier");
  for (std::size_t x = 0; x < weights.size(); ++x) {
    if (weights[x] < 0) fail(ErrorKind::NotNormalized, "negative weight at " + carrier_.name(x));
    if (weights[x] != 0) weights_.emplace(x, weights[x]);
  }
  check_normalized(carrier_, weights_);
}

Distribution::Distribution(FinSet carrier, const std::map<std::size_t, Rat>& weights) : carrier_(std::move(carrier)) {
  for (const auto& [x, w] : weights)
    if (w != 0) weights_.emplace(x, w);
  check_normalized(carrier_, weights);
}

Distribution Distribution::unit(const FinSet& carrier, std::size_t x) {
  if (x >= carrier.size()) fail(ErrorKind::UnknownElement, "unit at a point outside the carrier");
  return Distribution(carrier, std::map<std::size_t, Rat>{{x, Rat(1)}});
}

Rat Distribution::operator()(std::size_t x) const {
  auto it = weights_.find(x);
  return it == weights_.end() ? Rat(0) : it->second;
}

std::vector<Rat> Distribution::dense() const {
  std::vector<Rat> out(carrier_.size());
  for (const auto& [x, w] : weights_) out[x] = w;
  return out;
}

Distribution dist_make(const FinSet& carrier, const std::vector<Rat>& weights) {
  return Distribution(carrier, weights);
}

Distribution dist_mix(const Rat& r, const Distribution& a, const Distribution& b) {
  if (!in_unit_interval(r)) fail(ErrorKind::ScalarOutOfRange, "mixing weight outside [0,1]");
  if (!(a.carrier() == b.carrier())) fail(ErrorKind::CarrierMismatch, "mixing distributions on different carriers");
  std::map<std::size_t, Rat> w;
  for (const auto& [x, v] : a.support()) w[x] += r * v;
  for (const auto& [x, v] : b.support()) w[x] += (1 - r) * v;
  return Distribution(a.carrier(), w);
}

DistArrow::DistArrow(FinSet dom_, FinSet cod_, std::vector<Distribution> images_)
    : dom(std::move(dom_)), cod(std::move(cod_)), images(std::move(images_)) {
  if (images.size() != dom.size()) fail(ErrorKind::CarrierMismatch, "arrow does not cover its domain");
  for (const auto& d : images)
    if (!(d.carrier() == cod)) fail(ErrorKind::CarrierMismatch, "arrow image on the wrong carrier");
}

DistArrow DistArrow::unit(const FinSet& carrier) {
  std::vector<Distribution> images;
  for (std::size_t x = 0; x < carrier.size(); ++x) images.push_back(Distribution::unit(carrier, x));
  return DistArrow(carrier, carrier, std::move(images));
}

Distribution dist_bind(const DistArrow& f, const Distribution& omega) {
  if (!(omega.carrier() == f.dom)) fail(ErrorKind::CarrierMismatch, "bind of a distribution on the wrong carrier");
  std::map<std::size_t, Rat> w;
  for (const auto& [x, px] : omega.support())
    for (const auto& [y, py] : f(x).support()) w[y] += px * py;
  return Distribution(f.cod, w);
}

DistArrow dist_compose(const DistArrow& g, const DistArrow& f) {
  if (!(f.cod == g.dom)) fail(ErrorKind::CarrierMismatch, "composite of arrows with mismatched carriers");
  std::vector<Distribution> images;
  images.reserve(f.dom.size());
  for (const auto& d : f.images) images.push_back(dist_bind(g, d));
  return DistArrow(f.dom, g.cod, std::move(images));
}

std::vector<Distribution> grid_distributions(const FinSet& carrier, int den) {
  std::vector<Distribution> out;
  if (carrier.empty()) return out;
  std::vector<int> parts(carrier.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i + 1 == parts.size()) {
      parts[i] = left;
      std::vector<Rat> w(parts.size());
      for (std::size_t k = 0; k < parts.size(); ++k) w[k] = Rat(parts[k], den);
      out.emplace_back(carrier, w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[i] = v;
      go(i + 1, left - v);
    }
  };
  go(0, den);
  return out;
}

// ---------------------------------------------------------------- expectation

Rat ExpectationFunctional::operator()(const FuzzyPredicate& p) const {
  if (!(p.carrier() == carrier))
    fail(ErrorKind::CarrierMismatch, "functional applied to a predicate on another carrier");
  return apply(p);
}

ExpectationFunctional expectation_embed(const Distribution& omega) {
  return {omega.carrier(), [omega](const FuzzyPredicate& p) {
            Rat total = 0;
            for (const auto& [x, w] : omega.support()) total += p(x) * w;
            return total;
          }};
}

ExpectationFunctional expectation_unit(const FinSet& carrier, std::size_t x) {
  if (x >= carrier.size()) fail(ErrorKind::UnknownElement, "unit at a point outside the carrier");
  return {carrier, [x](const FuzzyPredicate& p) { return p(x); }};
}

ExpectationFunctional expectation_bind(const FinSet& cod, const std::vector<ExpectationFunctional>& h,
                                       const ExpectationFunctional& phi) {
  if (h.size() != phi.carrier.size()) fail(ErrorKind::CarrierMismatch, "bind arrow does not cover the carrier");
  for (const auto& hx : h)
    if (!(hx.carrier == cod)) fail(ErrorKind::CarrierMismatch, "bind arrow image on the wrong carrier");
  return {cod, [h, phi](const FuzzyPredicate& q) {
            std::vector<Rat> pulled(h.size());
            for (std::size_t x = 0; x < h.size(); ++x) pulled[x] = h[x](q);
            return phi(FuzzyPredicate(phi.carrier, std::move(pulled)));
          }};
}

Distribution expectation_weights(const ExpectationFunctional& phi) {
  std::vector<Rat> w(phi.carrier.size());
  for (std::size_t x = 0; x < w.size(); ++x) {
    Subset point(w.size());
    point.insert(x);
    w[x] = phi(FuzzyPredicate::indicator(phi.carrier, point));
  }
  return Distribution(phi.carrier, w);
}

// ---------------------------------------------------------------- finite Giry

Measure::Measure(FinSet atoms, std::vector<Rat> event_values)
    : atoms_(std::move(atoms)), values_(std::move(event_values)) {
  const std::size_t n = atoms_.size();
  if (n > 16) fail(ErrorKind::TooLarge, "measures are tabulated on at most 16 atoms");
  if (values_.size() != (std::size_t{1} << n)) fail(ErrorKind::CarrierMismatch, "one value per event is required");
  if (values_[0] != 0) fail(ErrorKind::NotNormalized, "empty event has nonzero measure");
  if (values_.back() != 1) fail(ErrorKind::NotNormalized, "whole space has measure " + rat_string(values_.back()));
  for (std::size_t m = 0; m < values_.size(); ++m) {
    if (values_[m] < 0) fail(ErrorKind::NotNormalized, "negative measure");
    Rat atoms_sum = 0;
    for (std::size_t a = 0; a < n; ++a)
      if ((m >> a) & 1U) atoms_sum += values_[std::size_t{1} << a];
    if (atoms_sum != values_[m]) fail(ErrorKind::NotNormalized, "measure is not additive");
  }
}

Measure Measure::from_distribution(const Distribution& omega) {
  const std::size_t n = omega.carrier().size();
  if (n > 16) fail(ErrorKind::TooLarge, "measures are tabulated on at most 16 atoms");
  std::vector<Rat> v(std::size_t{1} << n);
  for (std::size_t m = 0; m < v.size(); ++m)
    for (const auto& [x, w] : omega.support())
      if ((m >> x) & 1U) v[m] += w;
  return Measure(omega.carrier(), std::move(v));
}

Measure Measure::dirac(const FinSet& atoms, std::size_t x) { return from_distribution(Distribution::unit(atoms, x)); }

const Rat& Measure::operator()(const Subset& event) const {
  if (event.universe() != atoms_.size()) fail(ErrorKind::CarrierMismatch, "event over a different atom set");
  return values_[event.mask()];
}

Distribution Measure::to_distribution() const {
  std::vector<Rat> w(atoms_.size());
  for (std::size_t a = 0; a < w.size(); ++a) w[a] = values_[std::size_t{1} << a];
  return Distribution(atoms_, w);
}

Rat integrate(const FuzzyPredicate& p, const Measure& phi) {
  if (!(p.carrier() == phi.atoms())) fail(ErrorKind::CarrierMismatch, "integrand on a different atom set");
  Rat total = 0;
  for (std::size_t a = 0; a < p.size(); ++a) total += p(a) * phi.events()[std::size_t{1} << a];
  return total;
}

ExpectationFunctional measure_to_functional(const Measure& phi) {
  return {phi.atoms(), [phi](const FuzzyPredicate& p) { return integrate(p, phi); }};
}

Measure functional_to_measure(const ExpectationFunctional& integral) {
  const std::size_t n = integral.carrier.size();
  if (n > 16) fail(ErrorKind::TooLarge, "measures are tabulated on at most 16 atoms");
  std::vector<Rat> v(std::size_t{1} << n);
  for (std::size_t m = 0; m < v.size(); ++m)
    v[m] = integral(FuzzyPredicate::indicator(integral.carrier, Subset::from_mask(n, m)));
  return Measure(integral.carrier, std::move(v));
}

Measure giry_bind(const std::vector<Measure>& f, const Measure& phi) {
  if (f.size() != phi.atoms().size()) fail(ErrorKind::CarrierMismatch, "bind arrow does not cover the atoms");
  if (f.empty()) fail(ErrorKind::CarrierMismatch, "no probability measures on an empty space");
  const FinSet& cod = f.front().atoms();
  std::vector<Rat> v(std::size_t{1} << cod.size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (!(f[a].atoms() == cod)) fail(ErrorKind::CarrierMismatch, "bind arrow images on different atom sets");
    const Rat& weight = phi.events()[std::size_t{1} << a];
    if (weight == 0) continue;
    for (std::size_t m = 0; m < v.size(); ++m) v[m] += weight * f[a].events()[m];
  }
  return Measure(cod, std::move(v));
}

}  // namespace tri
