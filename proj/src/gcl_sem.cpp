#include <algorithm>
#include <functional>
#include <sstream>

#include "tri/error.hpp"
#include "tri/gcl.hpp"
#include "tri/transformers.hpp"

namespace tri::gcl {

// ---------------------------------------------------------------- state space

StateSpace::StateSpace(std::vector<VarDecl> vars, std::size_t cap) : vars_(std::move(vars)) {
  std::size_t total = 1;
  for (const auto& d : vars_) {
    if (d.range() > cap || total > cap / d.range()) {
      fail(ErrorKind::TooLarge, "state space exceeds " + std::to_string(cap) + " states");
    }
    total *= d.range();
  }
  stride_.assign(vars_.size(), 1);
  for (std::size_t v = vars_.size(); v-- > 1;) stride_[v - 1] = stride_[v] * vars_[v].range();
  std::vector<std::string> names(total);
  for (std::size_t s = 0; s < total; ++s) {
    std::string name;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (v) name += " ";
      name += vars_[v].name + "=" + std::to_string(value(s, v));
    }
    names[s] = name;
  }
  states_ = FinSet(std::move(names));
}

std::int64_t StateSpace::value(std::size_t s, std::size_t v) const {
  return vars_[v].lo + static_cast<std::int64_t>((s / stride_[v]) % vars_[v].range());
}

std::size_t StateSpace::assign(std::size_t s, std::size_t v, const Rat& value) const {
  if (!is_integer(value)) fail(ErrorKind::EvalError, "assigned value " + rat_string(value) + " is not an integer");
  const BigInt range = static_cast<std::int64_t>(vars_[v].range());
  BigInt offset = (numerator(value) - vars_[v].lo) % range;
  if (offset < 0) offset += range;
  const auto wrapped = static_cast<std::size_t>(offset);
  const std::size_t current = static_cast<std::size_t>(this->value(s, v) - vars_[v].lo);
  return s - current * stride_[v] + wrapped * stride_[v];
}

std::size_t StateSpace::parse_state(const std::string& text) const {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<std::optional<std::int64_t>> values(vars_.size());
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorKind::UnknownElement, "expected name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    std::size_t v = 0;
    while (v < vars_.size() && vars_[v].name != name) ++v;
    if (v == vars_.size()) fail(ErrorKind::UnknownElement, "no variable '" + name + "'");
    try {
      values[v] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorKind::UnknownElement, "bad value in '" + item + "'");
    }
    if (*values[v] < vars_[v].lo || *values[v] > vars_[v].hi) {
      fail(ErrorKind::UnknownElement, "value of '" + name + "' outside its range");
    }
  }
  std::size_t s = 0;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (!values[v]) fail(ErrorKind::UnknownElement, "no value given for '" + vars_[v].name + "'");
    s += static_cast<std::size_t>(*values[v] - vars_[v].lo) * stride_[v];
  }
  return s;
}

// ---------------------------------------------------------------- expressions

namespace {

bool truth(const Rat& v, const char* context) {
  if (v == 0) return false;
  if (v == 1) return true;
  fail(ErrorKind::EvalError, std::string(context) + " expects a boolean, got " + rat_string(v));
}

Rat from_bool(bool b) { return b ? Rat(1) : Rat(0); }

}  // namespace

Rat eval(const Expr& e, const StateSpace& space, std::size_t state) {
  using Op = Expr::Op;
  auto arg = [&](std::size_t i) { return eval(e.args.at(i), space, state); };
  switch (e.op) {
    case Op::Const: return e.value;
    case Op::Var: return Rat(space.value(state, e.var));
    case Op::Neg: return -arg(0);
    case Op::Not: return from_bool(!truth(arg(0), "'!'"));
    case Op::Iverson: return from_bool(truth(arg(0), "'[...]'"));
    case Op::Add: return arg(0) + arg(1);
    case Op::Sub: return arg(0) - arg(1);
    case Op::Mul: return arg(0) * arg(1);
    case Op::Div: {
      const Rat d = arg(1);
      if (d == 0) fail(ErrorKind::EvalError, "division by zero");
      return arg(0) / d;
    }
    case Op::Mod: {
      const Rat a = arg(0);
      const Rat b = arg(1);
      if (!is_integer(a) || !is_integer(b) || b == 0)
        fail(ErrorKind::EvalError, "'%' needs integers and a nonzero divisor");
      BigInt r = numerator(a) % numerator(b);
      if (r < 0) r += abs(numerator(b));
      return Rat(r);
    }
    case Op::Eq: return from_bool(arg(0) == arg(1));
    case Op::Ne: return from_bool(arg(0) != arg(1));
    case Op::Lt: return from_bool(arg(0) < arg(1));
    case Op::Le: return from_bool(arg(0) <= arg(1));
    case Op::Gt: return from_bool(arg(0) > arg(1));
    case Op::Ge: return from_bool(arg(0) >= arg(1));
    case Op::And: return from_bool(truth(arg(0), "'&&'") && truth(arg(1), "'&&'"));
    case Op::Or: return from_bool(truth(arg(0), "'||'") || truth(arg(1), "'||'"));
  }
  return 0;
}

// ---------------------------------------------------------------- denotations

StateRelation relation_compose(const StateRelation& g, const StateRelation& f) {
  if (f.states != g.states) fail(ErrorKind::CarrierMismatch, "relations over different state spaces");
  StateRelation out{f.states, std::vector<Subset>(f.states, Subset(f.states))};
  for (std::size_t s = 0; s < f.states; ++s) f.images[s].for_each([&](std::size_t t) { out.images[s] |= g.images[t]; });
  return out;
}

namespace {

StateRelation denote_pow(const Stmt& st, const StateSpace& space) {
  const std::size_t n = space.size();
  StateRelation out{n, std::vector<Subset>(n, Subset(n))};
  switch (st.kind) {
    case Stmt::Kind::Skip:
      for (std::size_t s = 0; s < n; ++s) out.images[s].insert(s);
      return out;
    case Stmt::Kind::Abort: return out;
    case Stmt::Kind::Assign:
      for (std::size_t s = 0; s < n; ++s) out.images[s].insert(space.assign(s, st.var, eval(st.expr, space, s)));
      return out;
    case Stmt::Kind::Seq: {
      StateRelation acc = denote_pow(st.body.front(), space);
      for (std::size_t i = 1; i < st.body.size(); ++i) acc = relation_compose(denote_pow(st.body[i], space), acc);
      return acc;
    }
    case Stmt::Kind::If: {
      const StateRelation a = denote_pow(st.body[0], space);
      const StateRelation b = denote_pow(st.body[1], space);
      for (std::size_t s = 0; s < n; ++s)
        out.images[s] = truth(eval(st.expr, space, s), "'if'") ? a.images[s] : b.images[s];
      return out;
    }
    case Stmt::Kind::Choose:
    case Stmt::Kind::Prob: {
      const bool keep_first = st.kind == Stmt::Kind::Choose || st.weight != 0;
      const bool keep_second = st.kind == Stmt::Kind::Choose || st.weight != 1;
      const StateRelation a = denote_pow(st.body[0], space);
      const StateRelation b = denote_pow(st.body[1], space);
      for (std::size_t s = 0; s < n; ++s) {
        if (keep_first) out.images[s] |= a.images[s];
        if (keep_second) out.images[s] |= b.images[s];
      }
      return out;
    }
  }
  return out;
}

DistArrow denote_dist(const Stmt& st, const StateSpace& space) {
  const FinSet& states = space.states();
  const std::size_t n = space.size();
  switch (st.kind) {
    case Stmt::Kind::Skip: return DistArrow::unit(states);
    case Stmt::Kind::Abort: fail(ErrorKind::ModeMismatch, "abort has no meaning in dist mode");
    case Stmt::Kind::Choose: fail(ErrorKind::ModeMismatch, "choose has no meaning in dist mode");
    case Stmt::Kind::Assign: {
      std::vector<Distribution> images;
      for (std::size_t s = 0; s < n; ++s)
        images.push_back(Distribution::unit(states, space.assign(s, st.var, eval(st.expr, space, s))));
      return DistArrow(states, states, std::move(images));
    }
    case Stmt::Kind::Seq: {
      DistArrow acc = denote_dist(st.body.front(), space);
      for (std::size_t i = 1; i < st.body.size(); ++i) acc = dist_compose(denote_dist(st.body[i], space), acc);
      return acc;
    }
    case Stmt::Kind::If: {
      const DistArrow a = denote_dist(st.body[0], space);
      const DistArrow b = denote_dist(st.body[1], space);
      std::vector<Distribution> images;
      for (std::size_t s = 0; s < n; ++s) images.push_back(truth(eval(st.expr, space, s), "'if'") ? a(s) : b(s));
      return DistArrow(states, states, std::move(images));
    }
    case Stmt::Kind::Prob: {
      const DistArrow a = denote_dist(st.body[0], space);
      const DistArrow b = denote_dist(st.body[1], space);
      std::vector<Distribution> images;
      for (std::size_t s = 0; s < n; ++s) images.push_back(dist_mix(st.weight, a(s), b(s)));
      return DistArrow(states, states, std::move(images));
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown statement");
}

Subset wp_sets(const Stmt& st, const StateSpace& space, Flavor flavor, const Subset& post) {
  const std::size_t n = space.size();
  const bool demonic = flavor == Flavor::Demonic;
  switch (st.kind) {
    case Stmt::Kind::Skip: return post;
    case Stmt::Kind::Abort: return demonic ? Subset::full(n) : Subset(n);
    case Stmt::Kind::Assign: {
      Subset out(n);
      for (std::size_t s = 0; s < n; ++s) out.set(s, post.contains(space.assign(s, st.var, eval(st.expr, space, s))));
      return out;
    }
    case Stmt::Kind::Seq: {
      Subset acc = post;
      for (std::size_t i = st.body.size(); i-- > 0;) acc = wp_sets(st.body[i], space, flavor, acc);
      return acc;
    }
    case Stmt::Kind::If: {
      const Subset a = wp_sets(st.body[0], space, flavor, post);
      const Subset b = wp_sets(st.body[1], space, flavor, post);
      Subset out(n);
      for (std::size_t s = 0; s < n; ++s)
        out.set(s, truth(eval(st.expr, space, s), "'if'") ? a.contains(s) : b.contains(s));
      return out;
    }
    case Stmt::Kind::Choose:
    case Stmt::Kind::Prob: {
      if (st.kind == Stmt::Kind::Prob && st.weight == 1) return wp_sets(st.body[0], space, flavor, post);
      if (st.kind == Stmt::Kind::Prob && st.weight == 0) return wp_sets(st.body[1], space, flavor, post);
      const Subset a = wp_sets(st.body[0], space, flavor, post);
      const Subset b = wp_sets(st.body[1], space, flavor, post);
      return demonic ? (a & b) : (a | b);
    }
  }
  return post;
}

FuzzyPredicate wp_expectation(const Stmt& st, const StateSpace& space, const FuzzyPredicate& post) {
  const std::size_t n = space.size();
  switch (st.kind) {
    case Stmt::Kind::Skip: return post;
    case Stmt::Kind::Abort: fail(ErrorKind::ModeMismatch, "abort has no expectation transformer");
    case Stmt::Kind::Choose: fail(ErrorKind::ModeMismatch, "choose has no expectation transformer");
    case Stmt::Kind::Assign: {
      std::vector<Rat> v(n);
      for (std::size_t s = 0; s < n; ++s) v[s] = post(space.assign(s, st.var, eval(st.expr, space, s)));
      return FuzzyPredicate(space.states(), std::move(v));
    }
    case Stmt::Kind::Seq: {
      FuzzyPredicate acc = post;
      for (std::size_t i = st.body.size(); i-- > 0;) acc = wp_expectation(st.body[i], space, acc);
      return acc;
    }
    case Stmt::Kind::If: {
      const FuzzyPredicate a = wp_expectation(st.body[0], space, post);
      const FuzzyPredicate b = wp_expectation(st.body[1], space, post);
      std::vector<Rat> v(n);
      for (std::size_t s = 0; s < n; ++s) v[s] = truth(eval(st.expr, space, s), "'if'") ? a(s) : b(s);
      return FuzzyPredicate(space.states(), std::move(v));
    }
    case Stmt::Kind::Prob: {
      const FuzzyPredicate a = wp_expectation(st.body[0], space, post);
      const FuzzyPredicate b = wp_expectation(st.body[1], space, post);
      std::vector<Rat> v(n);
      for (std::size_t s = 0; s < n; ++s) v[s] = st.weight * a(s) + (1 - st.weight) * b(s);
      return FuzzyPredicate(space.states(), std::move(v));
    }
  }
  return post;
}

}  // namespace

StateRelation denote_pow(const Program& program, const StateSpace& space) { return denote_pow(program.body, space); }

DistArrow denote_dist(const Program& program, const StateSpace& space) { return denote_dist(program.body, space); }

Subset post_set(const Expr& post, const StateSpace& space) {
  Subset out(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    const Rat v = eval(post, space, s);
    if (v != 0 && v != 1) {
      fail(ErrorKind::RangeError, "postcondition is " + rat_string(v) + " at " + space.states().name(s) +
                                      "; pow mode needs a boolean");
    }
    out.set(s, v == 1);
  }
  return out;
}

FuzzyPredicate post_fuzzy(const Expr& post, const StateSpace& space) {
  std::vector<Rat> values(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) {
    values[s] = eval(post, space, s);
    if (!in_unit_interval(values[s])) {
      fail(ErrorKind::RangeError, "postcondition is " + rat_string(values[s]) + " at " + space.states().name(s) +
                                      "; dist mode needs a value in [0,1]");
    }
  }
  return FuzzyPredicate(space.states(), std::move(values));
}

Subset wp_sets(const Program& program, const StateSpace& space, Flavor flavor, const Subset& post) {
  if (flavor == Flavor::Expectation) fail(ErrorKind::ModeMismatch, "expectation wp needs a fuzzy postcondition");
  if (post.universe() != space.size()) fail(ErrorKind::CarrierMismatch, "postcondition over another state space");
  return wp_sets(program.body, space, flavor, post);
}

FuzzyPredicate wp_expectation(const Program& program, const StateSpace& space, const FuzzyPredicate& post) {
  if (!(post.carrier() == space.states())) fail(ErrorKind::CarrierMismatch, "postcondition over another state space");
  return wp_expectation(program.body, space, post);
}

Subset box_apply(const StateRelation& g, const Subset& post) {
  Subset out(g.states);
  for (std::size_t s = 0; s < g.states; ++s) out.set(s, g.images[s].is_subset_of(post));
  return out;
}

Subset diamond_apply(const StateRelation& g, const Subset& post) {
  Subset out(g.states);
  for (std::size_t s = 0; s < g.states; ++s) out.set(s, g.images[s].intersects(post));
  return out;
}

std::vector<Rat> wp_table(const Program& program, Flavor flavor, const Expr& post) {
  const StateSpace space(program.vars);
  if (flavor == Flavor::Expectation) return wp_expectation(program, space, post_fuzzy(post, space)).values();
  const Subset w = wp_sets(program, space, flavor, post_set(post, space));
  std::vector<Rat> out(space.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = w.contains(s) ? 1 : 0;
  return out;
}

// ---------------------------------------------------------------- checks

namespace {

std::vector<Subset> set_probes(std::size_t n, std::mt19937_64& rng, std::size_t random_probes) {
  std::vector<Subset> out;
  if (n <= 8) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(Subset::from_mask(n, m));
    return out;
  }
  out.push_back(Subset(n));
  out.push_back(Subset::full(n));
  for (std::size_t s = 0; s < n; ++s) {
    out.push_back(Subset(n, {s}));
    out.push_back(Subset(n, {s}).complement());
  }
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < random_probes; ++i) {
    Subset p(n);
    for (std::size_t s = 0; s < n; ++s) p.set(s, coin(rng));
    out.push_back(p);
  }
  return out;
}

std::vector<FuzzyPredicate> fuzzy_probes(const FinSet& states, std::mt19937_64& rng, std::size_t random_probes) {
  std::vector<FuzzyPredicate> out;
  for (const Rat& c : {Rat(0), Rat(1), Rat(1, 2)}) out.push_back(FuzzyPredicate::constant(states, c));
  for (std::size_t s = 0; s < states.size(); ++s)
    out.push_back(FuzzyPredicate::indicator(states, Subset(states.size(), {s})));
  std::uniform_int_distribution<int> den(1, 6);
  for (std::size_t i = 0; i < random_probes; ++i) {
    std::vector<Rat> v(states.size());
    for (auto& x : v) {
      const int d = den(rng);
      x = Rat(std::uniform_int_distribution<int>(0, d)(rng), d);
    }
    out.push_back(FuzzyPredicate(states, std::move(v)));
  }
  return out;
}

std::string show_fuzzy(const FuzzyPredicate& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + rat_string(p(i));
  return s + "]";
}

void record(AxiomResult& law, bool ok, const std::function<std::string()>& witness) {
  ++law.checked;
  if (!ok && law.passed) {
    law.passed = false;
    law.counterexample = witness();
  }
}

// Pairwise laws use a bounded prefix of the probe list.
void merge(AxiomResult& law, bool ok, std::size_t checked, const std::function<std::string()>& witness) {
  law.checked += checked;
  if (!ok && law.passed) {
    law.passed = false;
    law.counterexample = witness();
  }
}

constexpr std::size_t kPairProbes = 24;

}  // namespace

RoundTripResult check_roundtrip(const Program& program, Flavor flavor, std::uint64_t seed, std::size_t random_probes) {
  const StateSpace space(program.vars);
  std::mt19937_64 rng(seed);
  RoundTripResult r;
  auto miss = [&](const std::string& what) {
    ++r.mismatches;
    if (!r.witness) r.witness = what;
  };
  if (flavor == Flavor::Expectation) {
    const EffectTransformer whole = expectation_pred(denote_dist(program, space));
    for (const auto& q : fuzzy_probes(space.states(), rng, random_probes)) {
      ++r.probes;
      const FuzzyPredicate lhs = wp_expectation(program, space, q);
      const FuzzyPredicate rhs = whole(q);
      if (!(lhs == rhs))
        miss("post " + show_fuzzy(q) + ": recursive " + show_fuzzy(lhs) + ", whole " + show_fuzzy(rhs));
    }
    return r;
  }
  const StateRelation g = denote_pow(program, space);
  for (const auto& q : set_probes(space.size(), rng, random_probes)) {
    ++r.probes;
    const Subset lhs = wp_sets(program, space, flavor, q);
    const Subset rhs = flavor == Flavor::Demonic ? box_apply(g, q) : diamond_apply(g, q);
    if (lhs != rhs) {
      miss("post " + render_subset(space.states(), q) + ": recursive " + render_subset(space.states(), lhs) +
           ", whole " + render_subset(space.states(), rhs));
    }
  }
  return r;
}

LawReport check_healthiness(const Program& program, Flavor flavor, std::uint64_t seed, std::size_t random_probes) {
  const StateSpace space(program.vars);
  const std::size_t n = space.size();
  const FinSet& states = space.states();
  std::mt19937_64 rng(seed);
  LawReport report{std::string(to_string(flavor)) + " wp", {}, 1, 0};

  if (flavor == Flavor::Expectation) {
    auto probes = fuzzy_probes(states, rng, random_probes);
    if (probes.size() > kPairProbes) probes.erase(probes.begin() + kPairProbes, probes.end());
    auto wp = [&](const FuzzyPredicate& q) { return wp_expectation(program, space, q); };
    AxiomResult additive{"additivity", true, 0, ""};
    AxiomResult homogeneous{"homogeneity", true, 0, ""};
    AxiomResult normal{"normalization", true, 0, ""};
    AxiomResult mono{"monotone", true, 0, ""};
    record(normal, wp(FuzzyPredicate::constant(states, 1)) == FuzzyPredicate::constant(states, 1),
           [] { return std::string("wp(1) differs from 1"); });
    std::vector<FuzzyPredicate> images;
    for (const auto& p : probes) images.push_back(wp(p));
    for (std::size_t i = 0; i < probes.size(); ++i) {
      for (const Rat& r : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)}) {
        record(homogeneous, wp(pred_scalar(r, probes[i])) == pred_scalar(r, images[i]),
               [&] { return rat_string(r) + " * " + show_fuzzy(probes[i]); });
      }
      for (std::size_t j = i; j < probes.size(); ++j) {
        if (auto sum = pred_ovee(probes[i], probes[j])) {
          auto image_sum = pred_ovee(images[i], images[j]);
          record(additive, image_sum && wp(*sum) == *image_sum,
                 [&] { return show_fuzzy(probes[i]) + " + " + show_fuzzy(probes[j]); });
        }
        std::vector<Rat> lo(n);
        for (std::size_t s = 0; s < n; ++s) lo[s] = std::min(probes[i](s), probes[j](s));
        const FuzzyPredicate below = wp(FuzzyPredicate(states, lo));
        record(mono, pred_leq(below, images[i]) && pred_leq(below, images[j]),
               [&] { return "meet of " + show_fuzzy(probes[i]) + " and " + show_fuzzy(probes[j]); });
      }
    }
    report.laws = {additive, homogeneous, normal, mono};
    return report;
  }

  const bool demonic = flavor == Flavor::Demonic;
  auto probes = set_probes(n, rng, random_probes);
  if (probes.size() > kPairProbes) {
    std::shuffle(probes.begin(), probes.end(), rng);
    probes.resize(kPairProbes);
  }
  auto wp = [&](Flavor f, const Subset& q) { return wp_sets(program, space, f, q); };
  const Flavor dual = demonic ? Flavor::Angelic : Flavor::Demonic;
  AxiomResult lattice{demonic ? "meets" : "joins", true, 0, ""};
  AxiomResult extreme{demonic ? "top" : "bottom", true, 0, ""};
  AxiomResult duality{"duality", true, 0, ""};
  AxiomResult mono{"monotone", true, 0, ""};
  const Subset unit = demonic ? Subset::full(n) : Subset(n);
  record(extreme, wp(flavor, unit) == unit, [&] { return std::string("extreme postcondition not preserved"); });
  auto show = [&](const Subset& q) { return render_subset(states, q); };
  std::vector<Subset> images;
  for (const auto& q : probes) images.push_back(wp(flavor, q));
  for (std::size_t i = 0; i < probes.size(); ++i) {
    record(duality, images[i] == wp(dual, probes[i].complement()).complement(), [&] { return show(probes[i]); });
    for (std::size_t j = i; j < probes.size(); ++j) {
      const Subset combined = demonic ? (probes[i] & probes[j]) : (probes[i] | probes[j]);
      const Subset expected = demonic ? (images[i] & images[j]) : (images[i] | images[j]);
      const Subset image = wp(flavor, combined);
      record(lattice, image == expected, [&] { return show(probes[i]) + ", " + show(probes[j]); });
      // Q∩Q' ⊆ Q and Q ⊆ Q∪Q', so the combined image bounds both single images.
      const bool ordered = demonic ? image.is_subset_of(images[i]) && image.is_subset_of(images[j])
                                   : images[i].is_subset_of(image) && images[j].is_subset_of(image);
      record(mono, ordered, [&] { return show(probes[i]) + ", " + show(probes[j]); });
    }
  }
  report.laws = {lattice, extreme, duality, mono};
  return report;
}

LawReport check_wp_corpus(std::size_t programs, std::uint64_t seed, const RandomOptions& opts) {
  LawReport report{"wp corpus (seed " + std::to_string(seed) + ")", {}, 0, 0};
  auto law = [&](const std::string& name) -> AxiomResult& {
    for (auto& l : report.laws)
      if (l.axiom == name) return l;
    return report.laws.emplace_back(AxiomResult{name, true, 0, ""});
  };
  std::mt19937_64 rng(seed);
  const std::pair<Mode, std::vector<Flavor>> plan[] = {
      {Mode::Pow, {Flavor::Demonic, Flavor::Angelic}},
      {Mode::Dist, {Flavor::Expectation}},
  };
  for (std::size_t i = 0; i < programs; ++i) {
    for (const auto& [mode, flavors] : plan) {
      const Program program = random_program(rng, mode, opts);
      const std::uint64_t probe_seed = rng();
      const std::string prefix = std::string(to_string(mode)) + "/";
      ++report.cases;
      auto source = [&] { return "program " + std::to_string(i) + ": " + to_source(program); };
      record(law(prefix + "reparse"), parse(to_source(program)) == program, source);
      for (Flavor flavor : flavors) {
        const std::string tag = prefix + std::string(to_string(flavor)) + " ";
        try {
          const RoundTripResult rt = check_roundtrip(program, flavor, probe_seed);
          merge(law(tag + "roundtrip"), rt.passed(), rt.probes,
                [&] { return source() + " at " + rt.witness.value_or(""); });
          for (const AxiomResult& h : check_healthiness(program, flavor, probe_seed).laws) {
            merge(law(tag + h.axiom), h.passed, h.checked, [&] { return source() + " at " + h.counterexample; });
          }
        } catch (const Error& e) {
          record(law(tag + "evaluation"), false, [&] { return source() + ": " + e.what(); });
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- random programs

namespace {

class Generator {
 public:
  Generator(std::mt19937_64& rng, Mode mode, const Program& p) : rng_(rng), mode_(mode), p_(p) {}

  Stmt statement(std::size_t depth) {
    const int pick = roll(depth == 0 ? 3 : 8);
    Stmt s;
    switch (pick) {
      case 0: return s;  // skip
      case 1:
        if (mode_ == Mode::Pow && roll(3) == 0) {
          s.kind = Stmt::Kind::Abort;
          return s;
        }
        [[fallthrough]];
      case 2:
        s.kind = Stmt::Kind::Assign;
        s.var = static_cast<std::size_t>(roll(static_cast<int>(p_.vars.size())));
        s.expr = arith(2);
        return s;
      case 3:
      case 4:
        s.kind = Stmt::Kind::Seq;
        s.body = {statement(depth - 1), statement(depth - 1)};
        return s;
      case 5:
        s.kind = Stmt::Kind::If;
        s.expr = condition(1);
        s.body = {statement(depth - 1), statement(depth - 1)};
        return s;
      case 6:
        if (mode_ == Mode::Pow) {
          s.kind = Stmt::Kind::Choose;
          s.body = {statement(depth - 1), statement(depth - 1)};
          return s;
        }
        [[fallthrough]];
      default: {
        static const Rat weights[] = {Rat(0), Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(3, 4), Rat(1)};
        s.kind = Stmt::Kind::Prob;
        s.weight = weights[roll(7)];
        s.body = {statement(depth - 1), statement(depth - 1)};
        return s;
      }
    }
  }

  Expr condition(std::size_t depth) {
    using Op = Expr::Op;
    const int pick = roll(depth == 0 ? 1 : 4);
    if (pick == 1) return binary(Op::And, condition(depth - 1), condition(depth - 1));
    if (pick == 2) return binary(Op::Or, condition(depth - 1), condition(depth - 1));
    if (pick == 3) {
      Expr e;
      e.op = Op::Not;
      e.args = {condition(depth - 1)};
      return e;
    }
    static const Op rel[] = {Op::Eq, Op::Ne, Op::Lt, Op::Le, Op::Gt, Op::Ge};
    return binary(rel[roll(6)], arith(1), arith(0));
  }

  Expr arith(std::size_t depth) {
    using Op = Expr::Op;
    const int pick = roll(depth == 0 ? 2 : 5);
    if (pick == 0) {
      Expr e;
      e.value = roll(4);
      return e;
    }
    if (pick == 1) {
      Expr e;
      e.op = Op::Var;
      e.var = static_cast<std::size_t>(roll(static_cast<int>(p_.vars.size())));
      return e;
    }
    static const Op ops[] = {Op::Add, Op::Sub, Op::Mul};
    return binary(ops[roll(3)], arith(depth - 1), arith(depth - 1));
  }

 private:
  int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  static Expr binary(Expr::Op op, Expr a, Expr b) {
    Expr e;
    e.op = op;
    e.args = {std::move(a), std::move(b)};
    return e;
  }

  std::mt19937_64& rng_;
  Mode mode_;
  const Program& p_;
};

}  // namespace

Program random_program(std::mt19937_64& rng, Mode mode, const RandomOptions& opts) {
  static const char* const names[] = {"x", "y", "z", "u", "v", "w"};
  if (opts.vars == 0 || opts.vars > 6 || opts.max_range < 2) fail(ErrorKind::InvalidArgument, "bad generator options");
  Program p;
  for (std::size_t v = 0; v < opts.vars; ++v) {
    const auto hi = std::uniform_int_distribution<std::int64_t>(1, static_cast<std::int64_t>(opts.max_range) - 1)(rng);
    p.vars.push_back(VarDecl{names[v], 0, hi});
  }
  Generator gen(rng, mode, p);
  p.body = gen.statement(opts.depth);
  Expr post = gen.condition(1);
  if (mode == Mode::Dist) {
    Expr bracket;
    bracket.op = Expr::Op::Iverson;
    bracket.args = {std::move(post)};
    post = std::move(bracket);
  }
  p.post = std::move(post);
  return p;
}

}  // namespace tri::gcl
