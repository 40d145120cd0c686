#include "tri/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tri/error.hpp"
#include "tri/gcl.hpp"
#include "tri/kit.hpp"
#include "tri/literal.hpp"

namespace tri {

namespace {

using nlohmann::json;

/// What a subcommand produced: a JSON document, its plain-text rendering and
/// whether every check it ran passed.
struct Outcome {
  json doc;
  std::string table;
  bool verified = true;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Inline text, or the contents of a file when prefixed with '@'.
std::string inline_or_file(const std::string& text) {
  return text.starts_with("@") ? read_source(text.substr(1)) : text;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + "  " : s + std::string(width - s.size() + 2, ' ');
}

std::size_t column_width(const std::vector<std::string>& names, std::size_t minimum) {
  std::size_t w = minimum;
  for (const auto& s : names) w = std::max(w, s.size());
  return w;
}

// ---------------------------------------------------------------- law reports

json axiom_json(const AxiomResult& a) {
  json j{{"law", a.axiom}, {"passed", a.passed}, {"checked", a.checked}};
  if (!a.passed) j["counterexample"] = a.counterexample;
  return j;
}

Outcome law_outcome(const std::string& subject, const std::vector<AxiomResult>& laws, json extra = json::object()) {
  Outcome o;
  o.verified = std::all_of(laws.begin(), laws.end(), [](const AxiomResult& a) { return a.passed; });
  o.doc = std::move(extra);
  o.doc["subject"] = subject;
  o.doc["passed"] = o.verified;
  o.doc["laws"] = json::array();
  for (const auto& a : laws) o.doc["laws"].push_back(axiom_json(a));

  std::ostringstream t;
  t << subject << "\n";
  if (o.doc.contains("seed")) t << "seed: " << o.doc["seed"].get<std::uint64_t>() << "\n";
  std::vector<std::string> names;
  for (const auto& a : laws) names.push_back(a.axiom);
  const std::size_t w = column_width(names, 4);
  for (const auto& a : laws) {
    t << pad(a.axiom, w) << (a.passed ? "PASS" : "FAIL") << "  " << a.checked << " checked";
    if (!a.passed) t << "  counterexample: " << a.counterexample;
    t << "\n";
  }
  t << (o.verified ? "all laws hold" : "law violated") << "\n";
  o.table = t.str();
  return o;
}

// ---------------------------------------------------------------- wp and run

gcl::Mode parse_mode(const std::string& s) { return gcl::mode_from_string(s); }

gcl::Flavor default_flavor(gcl::Mode mode) {
  return mode == gcl::Mode::Dist ? gcl::Flavor::Expectation : gcl::Flavor::Demonic;
}

void check_mode_flavor(gcl::Mode mode, gcl::Flavor flavor) {
  const bool dist = mode == gcl::Mode::Dist;
  if (dist != (flavor == gcl::Flavor::Expectation)) {
    fail(ErrorKind::ModeMismatch, "flavor " + std::string(gcl::to_string(flavor)) + " does not apply in " +
                                      std::string(gcl::to_string(mode)) + " mode");
  }
}

struct WpArgs {
  std::string file;
  std::string mode = "pow";
  std::string flavor;
  std::string post;
  bool check = false;
  std::uint64_t seed = 1;
};

Outcome run_wp(const WpArgs& a) {
  const gcl::Program program = gcl::parse(read_source(a.file));
  const gcl::Mode mode = parse_mode(a.mode);
  const gcl::Flavor flavor = a.flavor.empty() ? default_flavor(mode) : gcl::flavor_from_string(a.flavor);
  check_mode_flavor(mode, flavor);
  if (mode == gcl::Mode::Dist) {
    const gcl::StateSpace space(program.vars);
    (void)gcl::denote_dist(program, space);  // rejects abort and choose
  }
  gcl::Expr post;
  if (!a.post.empty()) {
    post = gcl::parse_expr(program, a.post);
  } else if (program.post) {
    post = *program.post;
  } else {
    fail(ErrorKind::InvalidArgument, "no postcondition: give --post or a post: clause");
  }

  const gcl::StateSpace space(program.vars);
  const std::vector<Rat> table = gcl::wp_table(program, flavor, post);
  Outcome o;
  o.doc["states"] = space.states().elements();
  o.doc["wp"] = json::object();
  for (std::size_t s = 0; s < table.size(); ++s) o.doc["wp"][space.states().name(s)] = rat_json(table[s]);

  std::ostringstream t;
  const std::size_t w = column_width(space.states().elements(), 5);
  t << pad("state", w) << "wp " << gcl::to_string(flavor) << " of " << gcl::to_source(program, post) << "\n";
  for (std::size_t s = 0; s < table.size(); ++s) t << pad(space.states().name(s), w) << rat_string(table[s]) << "\n";

  if (a.check) {
    const gcl::RoundTripResult rt = gcl::check_roundtrip(program, flavor, a.seed);
    o.verified = rt.passed();
    o.doc["roundtrip"] = {{"probes", rt.probes}, {"mismatches", rt.mismatches}, {"passed", rt.passed()}};
    if (rt.witness) o.doc["roundtrip"]["witness"] = *rt.witness;
    t << "round trip against the whole denotation: " << (rt.passed() ? "PASS" : "FAIL") << " (" << rt.probes
      << " probes";
    if (rt.witness) t << ", witness " << *rt.witness;
    t << ")\n";
  }
  o.table = t.str();
  return o;
}

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// A single state, or a braced comma-separated list of states.
Subset parse_state_set(const gcl::StateSpace& space, const std::string& text) {
  std::string_view body = trim_view(text);
  Subset out(space.size());
  if (!body.starts_with("{")) {
    out.insert(space.parse_state(std::string(body)));
    return out;
  }
  if (!body.ends_with("}")) fail(ErrorKind::SyntaxError, "unterminated state set");
  body = trim_view(body.substr(1, body.size() - 2));
  while (!body.empty()) {
    const auto comma = body.find(',');
    out.insert(space.parse_state(std::string(trim_view(body.substr(0, comma)))));
    body = comma == std::string_view::npos ? std::string_view{} : trim_view(body.substr(comma + 1));
  }
  return out;
}

/// A single state, or a weighted literal {state: weight, ...}.
Distribution parse_initial_distribution(const gcl::StateSpace& space, const std::string& text) {
  const FinSet& states = space.states();
  if (text.find(':') == std::string::npos) return Distribution::unit(states, space.parse_state(text));
  std::vector<Rat> weights(states.size(), Rat(0));
  for (const auto& [key, value] : parse_weights(text)) weights[space.parse_state(key)] = value;
  return Distribution(states, weights);
}

struct RunArgs {
  std::string file;
  std::string mode = "pow";
  std::string init;
};

Outcome run_run(const RunArgs& a) {
  const gcl::Program program = gcl::parse(read_source(a.file));
  const gcl::StateSpace space(program.vars);
  const FinSet& states = space.states();
  Outcome o;
  std::ostringstream t;
  o.doc["mode"] = a.mode;
  if (parse_mode(a.mode) == gcl::Mode::Pow) {
    const gcl::StateRelation rel = gcl::denote_pow(program, space);
    const Subset start = parse_state_set(space, a.init);
    Subset reached(space.size());
    start.for_each([&](std::size_t s) { reached |= rel.images[s]; });
    o.doc["states"] = json::array();
    reached.for_each([&](std::size_t s) { o.doc["states"].push_back(states.name(s)); });
    t << "final states from " << render_subset(states, start) << "\n";
    if (reached.empty()) t << "(none)\n";
    reached.for_each([&](std::size_t s) { t << states.name(s) << "\n"; });
  } else {
    const DistArrow arrow = gcl::denote_dist(program, space);
    const Distribution start = parse_initial_distribution(space, a.init);
    const Distribution result = dist_bind(arrow, start);
    o.doc["distribution"] = json::object();
    std::vector<std::string> names;
    for (const auto& [s, w] : result.support()) {
      o.doc["distribution"][states.name(s)] = rat_json(w);
      names.push_back(states.name(s));
    }
    const std::size_t w = column_width(names, 5);
    t << pad("state", w) << "probability\n";
    for (const auto& [s, p] : result.support()) t << pad(states.name(s), w) << rat_string(p) << "\n";
  }
  o.table = t.str();
  return o;
}

// ---------------------------------------------------------------- laws

struct LawsArgs {
  std::string monad;
  std::string effect;
  bool wp = false;
  std::size_t max_size = 0;
  int max_den = 0;
  std::size_t samples = 64;
  std::size_t programs = 200;
  std::uint64_t seed = 1;
};

Outcome run_laws(const LawsArgs& a) {
  const int chosen = int(!a.monad.empty()) + int(!a.effect.empty()) + int(a.wp);
  if (chosen != 1) fail(ErrorKind::InvalidArgument, "choose exactly one of --monad, --effect, --wp");

  if (a.wp) {
    const LawReport r = gcl::check_wp_corpus(a.programs, a.seed);
    return law_outcome(r.subject, r.laws, {{"seed", a.seed}, {"programs", a.programs}});
  }
  if (!a.effect.empty()) {
    const std::size_t n = a.max_size ? a.max_size : 3;
    const int den = a.max_den ? a.max_den : 6;
    EffectReport r;
    if (a.effect == "powerset") {
      r = validate_effect_algebra(powerset_effect_algebra(n));
    } else if (a.effect == "unit") {
      r = validate_effect_algebra(unit_interval_effect_algebra(den));
    } else if (a.effect == "fuzzy") {
      r = validate_effect_algebra(fuzzy_predicate_module(FinSet::range(a.max_size ? a.max_size : 2), den, den));
    } else if (a.effect == "mv") {
      r = check_mv_identities(den);
    } else {
      fail(ErrorKind::InvalidArgument, "unknown effect structure " + a.effect);
    }
    return law_outcome(r.instance, r.axioms, {{"probes", r.probes}});
  }

  LawReport r;
  if (a.monad == "distribution") {
    r = check_distribution_laws(a.max_size ? a.max_size : 3, a.max_den ? a.max_den : 4, a.samples, a.seed);
  } else if (a.monad == "giry") {
    r = check_giry_laws(a.max_size ? a.max_size : 3, a.max_den ? a.max_den : 6, a.samples, a.seed);
  } else {
    const MonadRef monad = make_monad(a.monad);
    LawOptions opts;
    opts.max_size = a.max_size ? a.max_size : std::min<std::size_t>(monad->cap(), 3);
    opts.samples = a.samples;
    opts.seed = a.seed;
    r = check_monad_laws(monad, opts);
  }
  return law_outcome(r.subject, r.laws,
                     {{"seed", a.seed}, {"cases", r.cases}, {"sampled_cases", r.sampled_cases}});
}

// ---------------------------------------------------------------- enumerate

Outcome run_enumerate(const std::string& monad_id, const std::string& object) {
  const MonadRef monad = make_monad(monad_id);
  const PosetRef base = share(parse_poset(object));
  const ObjectRef tx = monad->object(base);
  Outcome o;
  o.doc["monad"] = monad->name();
  o.doc["object"] = poset_json(*tx->base);
  o.doc["cardinality"] = tx->size();
  o.doc["elements"] = json::array();
  for (std::size_t i = 0; i < tx->size(); ++i) o.doc["elements"].push_back(monad->element_json(*tx, i));
  json order = json::array();
  for (const auto& [lo, hi] : tx->carrier->covers()) order.push_back(json::array({lo, hi}));
  o.doc["covers"] = order;

  std::ostringstream t;
  t << monad->name() << " of " << render_subset(*tx->base, Subset::full(tx->base->size())) << ": " << tx->size()
    << " elements\n";
  for (std::size_t i = 0; i < tx->size(); ++i) t << "  " << tx->label(i) << "\n";
  o.table = t.str();
  return o;
}

// ---------------------------------------------------------------- transpose

/// Sorts every list of names (and lists of such lists) so that input order
/// does not matter when matching against enumerated elements.
json canonical(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = canonical(it.value());
    return out;
  }
  if (j.is_array()) {
    std::vector<json> items;
    for (const auto& v : j) items.push_back(canonical(v));
    std::sort(items.begin(), items.end(), [](const json& x, const json& y) { return x.dump() < y.dump(); });
    return json(items);
  }
  return j;
}

Subset names_to_subset(const FinPoset& base, const json& names) {
  if (!names.is_array()) fail(ErrorKind::InvalidArgument, "a predicate must be a list of element names");
  Subset s(base.size());
  for (const auto& n : names) s.insert(base.carrier().index_of(n.get<std::string>()));
  return s;
}

json subset_to_names(const FinPoset& base, const Subset& s) {
  json out = json::array();
  s.for_each([&](std::size_t x) { out.push_back(base.name(x)); });
  return out;
}

PosetRef object_field(const json& input, const char* key) {
  if (!input.contains(key) || !input[key].is_string())
    fail(ErrorKind::InvalidArgument, std::string("input needs \"") + key + "\" as an object literal string");
  return share(parse_poset(input[key].get<std::string>()));
}

json kleisli_json(const KleisliArrow& g) {
  json out = json::object();
  for (std::size_t x = 0; x < g.dom()->size(); ++x)
    out[g.dom()->name(x)] = g.monad->element_json(*g.target, g(x));
  return out;
}

json transformer_json(const PredTransformer& f) {
  json out = json::array();
  for (std::size_t k = 0; k < f.graph.size(); ++k) {
    out.push_back(json::array({subset_to_names(*f.source->base, f.source->member(k)),
                               subset_to_names(*f.target->base, f.target->member(f.graph[k]))}));
  }
  return out;
}

KleisliArrow read_kleisli(const Homset& h, const json& given) {
  std::map<std::string, std::size_t> by_form;
  for (std::size_t i = 0; i < h.target->size(); ++i)
    by_form.emplace(canonical(h.monad->element_json(*h.target, i)).dump(), i);
  const FinPoset& x = *h.source->base;
  std::vector<std::size_t> images(x.size());
  if (!given.is_object() || given.size() != x.size())
    fail(ErrorKind::InvalidArgument, "\"kleisli\" must map every element of x");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!given.contains(x.name(i))) fail(ErrorKind::InvalidArgument, "\"kleisli\" misses " + x.name(i));
    const auto it = by_form.find(canonical(given[x.name(i)]).dump());
    if (it == by_form.end())
      fail(ErrorKind::UnknownElement, "image of " + x.name(i) + " is not an element of " + h.monad->name());
    images[i] = it->second;
  }
  return KleisliArrow(h.monad, h.source, h.target, std::move(images));
}

PredTransformer read_transformer(const Homset& h, const json& given) {
  if (!given.is_array()) fail(ErrorKind::InvalidArgument, "\"transformer\" must be a list of [input, output] pairs");
  std::vector<std::optional<std::size_t>> graph(h.pred_target->size());
  for (const auto& pair : given) {
    if (!pair.is_array() || pair.size() != 2) fail(ErrorKind::InvalidArgument, "transformer entries are pairs");
    const std::size_t k = h.pred_target->index_of(names_to_subset(*h.pred_target->base, pair[0]));
    const std::size_t v = h.pred_source->index_of(names_to_subset(*h.pred_source->base, pair[1]));
    if (graph[k] && *graph[k] != v) fail(ErrorKind::InvalidArgument, "transformer lists a predicate twice");
    graph[k] = v;
  }
  PredTransformer f{h.pred_target, h.pred_source, {}};
  for (std::size_t k = 0; k < graph.size(); ++k) {
    if (!graph[k]) {
      fail(ErrorKind::InvalidArgument,
           "transformer misses predicate " + render_subset(*h.pred_target->base, h.pred_target->member(k)));
    }
    f.graph.push_back(*graph[k]);
  }
  return f;
}

Outcome transpose_expectation(const json& input) {
  const FinSet x = parse_poset(input.value("x", std::string())).carrier();
  const FinSet y = parse_poset(input.value("y", std::string())).carrier();
  auto weights_of = [](const FinSet& carrier, const json& obj) {
    std::vector<Rat> w(carrier.size(), Rat(0));
    if (!obj.is_object()) fail(ErrorKind::InvalidArgument, "expected an object of \"n/d\" weights");
    for (auto it = obj.begin(); it != obj.end(); ++it)
      w[carrier.index_of(it.key())] = parse_rat(it.value().get<std::string>());
    return w;
  };
  auto arrow_json = [&](const DistArrow& f) {
    json out = json::object();
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[x.name(i)] = json::object();
      for (const auto& [s, w] : f(i).support()) out[x.name(i)][y.name(s)] = rat_json(w);
    }
    return out;
  };
  // The transformer is linear, so its values on point indicators determine it.
  auto transformer_table = [&](const EffectTransformer& t) {
    json out = json::object();
    for (std::size_t j = 0; j < y.size(); ++j) {
      Subset point(y.size());
      point.insert(j);
      const FuzzyPredicate image = t(FuzzyPredicate::indicator(y, point));
      out[y.name(j)] = json::object();
      for (std::size_t i = 0; i < x.size(); ++i) out[y.name(j)][x.name(i)] = rat_json(image(i));
    }
    return out;
  };

  Outcome o;
  o.doc["correspondence"] = "expectation";
  if (input.contains("kleisli")) {
    std::vector<Distribution> images;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!input["kleisli"].contains(x.name(i))) fail(ErrorKind::InvalidArgument, "\"kleisli\" misses " + x.name(i));
      images.emplace_back(y, weights_of(y, input["kleisli"][x.name(i)]));
    }
    const DistArrow f(x, y, std::move(images));
    const EffectTransformer t = expectation_pred(f);
    o.verified = expectation_state(t) == f;
    o.doc["direction"] = "forward";
    o.doc["transformer"] = transformer_table(t);
  } else if (input.contains("transformer")) {
    // Rows give t(1_y) for each point y of the codomain; extend linearly.
    std::vector<std::vector<Rat>> rows;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!input["transformer"].contains(y.name(j)))
        fail(ErrorKind::InvalidArgument, "\"transformer\" misses " + y.name(j));
      rows.push_back(weights_of(x, input["transformer"][y.name(j)]));
    }
    const EffectTransformer t{y, x, [rows, x](const FuzzyPredicate& q) {
                                std::vector<Rat> v(x.size(), Rat(0));
                                for (std::size_t j = 0; j < rows.size(); ++j)
                                  for (std::size_t i = 0; i < x.size(); ++i) v[i] += q(j) * rows[j][i];
                                return FuzzyPredicate(x, std::move(v));
                              }};
    const DistArrow f = expectation_state(t);
    const EffectTransformer back = expectation_pred(f);
    o.verified = true;
    for (std::size_t j = 0; j < y.size(); ++j) {
      Subset point(y.size());
      point.insert(j);
      o.verified = o.verified && back(FuzzyPredicate::indicator(y, point)).values() == rows[j];
    }
    o.doc["direction"] = "backward";
    o.doc["kleisli"] = arrow_json(f);
  } else {
    fail(ErrorKind::InvalidArgument, "input needs \"kleisli\" or \"transformer\"");
  }
  o.doc["roundtrip"] = o.verified;
  o.table = o.doc.dump(2) + "\n";
  return o;
}

Outcome run_transpose(const std::string& id, const std::string& input_text) {
  const json input = json::parse(inline_or_file(input_text));
  if (id == "expectation") return transpose_expectation(input);
  const Correspondence c = correspondence(id);
  const Homset h = c.homset(object_field(input, "x"), object_field(input, "y"));
  Outcome o;
  o.doc["correspondence"] = id;
  o.doc["x"] = poset_json(*h.source->base);
  o.doc["y"] = poset_json(*h.target->base);
  if (input.contains("kleisli")) {
    const KleisliArrow g = read_kleisli(h, input["kleisli"]);
    const PredTransformer f = c.forward(h, g);
    o.verified = c.backward(h, f) == g;
    o.doc["direction"] = "forward";
    o.doc["transformer"] = transformer_json(f);
  } else if (input.contains("transformer")) {
    const PredTransformer f = read_transformer(h, input["transformer"]);
    const KleisliArrow g = c.backward(h, f);
    o.verified = c.forward(h, g) == f;
    o.doc["direction"] = "backward";
    o.doc["kleisli"] = kleisli_json(g);
  } else {
    fail(ErrorKind::InvalidArgument, "input needs \"kleisli\" or \"transformer\"");
  }
  o.doc["roundtrip"] = o.verified;
  o.table = o.doc.dump(2) + "\n";
  return o;
}

// ---------------------------------------------------------------- certify

json certify_json(const CertifyReport& r) {
  json j{{"correspondence", r.correspondence}, {"objects", r.objects},     {"kleisli_count", r.kleisli_count},
         {"transformer_count", r.transformer_count}, {"injective", r.injective}, {"surjective", r.surjective},
         {"roundtrip", r.roundtrip},                 {"bijection", r.bijection}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

Outcome run_certify(const std::string& id, const std::string& sizes, std::uint64_t budget) {
  std::size_t n = 0;
  std::size_t m = 0;
  char comma = 0;
  std::istringstream in(sizes);
  if (!(in >> n >> comma >> m) || comma != ',' || !in.eof())
    fail(ErrorKind::InvalidArgument, "--sizes expects n,m");
  const CertifyReport r = certify_full_faithful(id, n, m, budget);
  Outcome o;
  o.verified = r.bijection;
  o.doc = certify_json(r);
  o.doc["cases"] = json::array();
  for (const auto& c : r.cases) o.doc["cases"].push_back(certify_json(c));

  std::ostringstream t;
  t << "correspondence     " << r.correspondence << "\n"
    << "objects            " << r.objects << "\n"
    << "kleisli arrows     " << r.kleisli_count << "\n"
    << "transformers       " << r.transformer_count << "\n"
    << "injective          " << (r.injective ? "yes" : "no") << "\n"
    << "surjective         " << (r.surjective ? "yes" : "no") << "\n"
    << "round trip         " << (r.roundtrip ? "yes" : "no") << "\n"
    << "bijection          " << (r.bijection ? "yes" : "no") << "\n";
  if (r.counterexample) t << "counterexample     " << *r.counterexample << "\n";
  o.table = t.str();
  return o;
}

std::vector<std::string> with(std::vector<std::string> ids, std::initializer_list<const char*> extra) {
  for (const char* e : extra) ids.emplace_back(e);
  return ids;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite state-and-effect triangles: monads, predicate transformers and a wp engine", "tri"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  WpArgs wp_args;
  auto* wp = app.add_subcommand("wp", "Weakest-precondition table of a guarded-command program");
  wp->add_option("file", wp_args.file, "Program file, or - for stdin")->required();
  wp->add_option("--mode", wp_args.mode, "pow or dist")->check(CLI::IsMember({"pow", "dist"}));
  wp->add_option("--flavor", wp_args.flavor, "demonic, angelic or expectation")
      ->check(CLI::IsMember({"demonic", "angelic", "expectation"}));
  wp->add_option("--post", wp_args.post, "Postcondition; defaults to the program's post: clause");
  wp->add_flag("--check", wp_args.check, "Compare against the transformer of the whole denotation");
  wp->add_option("--seed", wp_args.seed, "Seed for the random probe posts of --check");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a program from an initial state, set of states or distribution");
  run->add_option("file", run_args.file, "Program file, or - for stdin")->required();
  run->add_option("--mode", run_args.mode, "pow or dist")->check(CLI::IsMember({"pow", "dist"}));
  run->add_option("--init", run_args.init, "\"x=0,y=1\", \"{x=0 y=0, x=1 y=0}\" or \"{x=0 y=0: 1/2, ...}\"")
      ->required();

  LawsArgs laws_args;
  auto* laws = app.add_subcommand("laws", "Monad, effect-algebra or wp law suites");
  laws->add_option("--monad", laws_args.monad, "Monad id")
      ->check(CLI::IsMember(with(monad_ids(), {"distribution", "giry"})));
  laws->add_option("--effect", laws_args.effect, "powerset, unit, fuzzy or mv")
      ->check(CLI::IsMember({"powerset", "unit", "fuzzy", "mv"}));
  laws->add_flag("--wp", laws_args.wp, "wp round trip and healthiness on random programs");
  laws->add_option("--max-size", laws_args.max_size, "Largest object (points)");
  laws->add_option("--max-den", laws_args.max_den, "Largest probe denominator");
  laws->add_option("--samples", laws_args.samples, "Random cases when a check is not exhaustive");
  laws->add_option("--programs", laws_args.programs, "Random programs per mode (with --wp)");
  laws->add_option("--seed", laws_args.seed, "Random seed");

  std::string enum_monad;
  std::string enum_object;
  auto* enumerate = app.add_subcommand("enumerate", "List T(X) for a monad and a finite set or poset");
  enumerate->add_option("--monad", enum_monad, "Monad id")->required()->check(CLI::IsMember(monad_ids()));
  enumerate->add_option("--object", enum_object, "{a,b}, {a,b | a<b}, chain:N, antichain:N or poset N {...}")
      ->required();

  std::string tr_id;
  std::string tr_input;
  auto* transpose = app.add_subcommand("transpose", "Transpose a Kleisli arrow or a predicate transformer");
  transpose->add_option("--correspondence", tr_id, "Correspondence id")
      ->required()
      ->check(CLI::IsMember(with(correspondence_ids(), {"expectation"})));
  transpose->add_option("--input", tr_input, "JSON text, or @file")->required();

  std::string cert_id;
  std::string cert_sizes = "2,2";
  std::uint64_t cert_budget = kDefaultSearchBudget;
  auto* certify = app.add_subcommand("certify", "Match Kleisli arrows against structure-preserving transformers");
  certify->add_option("--correspondence", cert_id, "Correspondence id")
      ->required()
      ->check(CLI::IsMember(certify_ids()));
  certify->add_option("--sizes", cert_sizes, "Point counts n,m of the two objects");
  certify->add_option("--budget", cert_budget, "Search budget for enumeration");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "usage: see tri " << sub->get_name() << " --help\n";
    } else {
      err << "usage: see tri --help\n";
    }
    return kExitUsage;
  }

  try {
    Outcome o;
    if (*wp) {
      o = run_wp(wp_args);
    } else if (*run) {
      o = run_run(run_args);
    } else if (*laws) {
      o = run_laws(laws_args);
    } else if (*enumerate) {
      o = run_enumerate(enum_monad, enum_object);
    } else if (*transpose) {
      o = run_transpose(tr_id, tr_input);
    } else {
      o = run_certify(cert_id, cert_sizes, cert_budget);
    }
    if (format == "json") {
      out << o.doc.dump(2) << "\n";
    } else {
      out << o.table;
    }
    return o.verified ? kExitOk : kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace tri
