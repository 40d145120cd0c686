#include "tri/effect.hpp"

#include <algorithm>

#include "tri/error.hpp"

namespace tri {

FuzzyPredicate::FuzzyPredicate(FinSet carrier, std::vector<Rat> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (values_.size() != carrier_.size()) fail(ErrorKind::CarrierMismatch, "predicate values do not cover the carrier");
  for (std::size_t x = 0; x < values_.size(); ++x)
    if (!in_unit_interval(values_[x])) {
      fail(ErrorKind::ScalarOutOfRange, "predicate value " + rat_string(values_[x]) + " at " + carrier_.name(x));
    }
}

FuzzyPredicate FuzzyPredicate::constant(const FinSet& carrier, const Rat& value) {
  return FuzzyPredicate(carrier, std::vector<Rat>(carrier.size(), value));
}

FuzzyPredicate FuzzyPredicate::indicator(const FinSet& carrier, const Subset& members) {
  if (members.universe() != carrier.size()) fail(ErrorKind::CarrierMismatch, "indicator over a different carrier");
  std::vector<Rat> v(carrier.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = members.contains(x) ? 1 : 0;
  return FuzzyPredicate(carrier, std::move(v));
}

namespace {
void same_carrier(const FuzzyPredicate& p, const FuzzyPredicate& q) {
  if (!(p.carrier() == q.carrier())) fail(ErrorKind::CarrierMismatch, "predicates over different carriers");
}
}  // namespace

std::optional<FuzzyPredicate> pred_ovee(const FuzzyPredicate& p, const FuzzyPredicate& q) {
  same_carrier(p, q);
  std::vector<Rat> v(p.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    v[x] = p(x) + q(x);
    if (v[x] > 1) return std::nullopt;
  }
  return FuzzyPredicate(p.carrier(), std::move(v));
}

FuzzyPredicate pred_orth(const FuzzyPredicate& p) {
  std::vector<Rat> v(p.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = 1 - p(x);
  return FuzzyPredicate(p.carrier(), std::move(v));
}

FuzzyPredicate pred_scalar(const Rat& r, const FuzzyPredicate& p) {
  if (!in_unit_interval(r)) fail(ErrorKind::ScalarOutOfRange, "scalar " + rat_string(r) + " outside [0,1]");
  std::vector<Rat> v(p.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = r * p(x);
  return FuzzyPredicate(p.carrier(), std::move(v));
}

bool pred_leq(const FuzzyPredicate& p, const FuzzyPredicate& q) {
  same_carrier(p, q);
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p(x) > q(x)) return false;
  return true;
}

// ---------------------------------------------------------------- MV operations

MvResult mv_ops(const Rat& a, const Rat& b) {
  if (!in_unit_interval(a) || !in_unit_interval(b)) fail(ErrorKind::ScalarOutOfRange, "MV operands must lie in [0,1]");
  return {std::min(Rat(1), a + b), std::max(Rat(0), a - b), std::max(a, b), std::min(a, b)};
}

std::optional<Rat> unit_ovee(const Rat& a, const Rat& b) {
  Rat s = a + b;
  if (s > 1) return std::nullopt;
  return s;
}

namespace {
Rat plus_via_ovee(const Rat& a, const Rat& b) {
  // a⊥ ∧ b is always orthogonal to a, so the partial sum is defined.
  return *unit_ovee(a, std::min(1 - a, b));
}
}  // namespace

MvResult mv_ops_from_partial_sum(const Rat& a, const Rat& b) {
  if (!in_unit_interval(a) || !in_unit_interval(b)) fail(ErrorKind::ScalarOutOfRange, "MV operands must lie in [0,1]");
  return {plus_via_ovee(a, b), 1 - plus_via_ovee(1 - a, b), std::max(a, b), std::min(a, b)};
}

// ---------------------------------------------------------------- validation

bool EffectReport::all_passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

const AxiomResult& EffectReport::find(const std::string& axiom) const {
  for (const auto& a : axioms)
    if (a.axiom == axiom) return a;
  fail(ErrorKind::InvalidArgument, "report has no axiom '" + axiom + "'");
}

namespace {

class AxiomTally {
 public:
  explicit AxiomTally(std::string name) { result_.axiom = std::move(name); }
  void check(bool ok, const std::function<std::string()>& witness) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = witness();
    }
  }
  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
};

}  // namespace

template <class T>
EffectReport validate_effect_algebra(const EffectAlgebra<T>& inst) {
  EffectReport report;
  report.instance = inst.name;
  report.probes = inst.probes.size();
  const auto& ps = inst.probes;
  const auto& sum = inst.ovee;
  const auto& show = inst.show;
  const T one = inst.orth(inst.zero);

  AxiomTally comm("commutativity");
  AxiomTally assoc("associativity");
  AxiomTally zero("zero");
  AxiomTally orth("orthosupplement");
  AxiomTally unique("orthosupplement-unique");
  AxiomTally zero_one("zero-one");

  for (const T& x : ps) {
    auto x0 = sum(x, inst.zero);
    zero.check(x0 && *x0 == x, [&] { return "x=" + show(x); });
    auto xo = sum(x, inst.orth(x));
    orth.check(xo && *xo == one, [&] { return "x=" + show(x); });
    zero_one.check(!sum(x, one) || x == inst.zero, [&] { return "x=" + show(x) + " is orthogonal to 1"; });
    for (const T& y : ps) {
      auto xy = sum(x, y);
      auto yx = sum(y, x);
      comm.check(xy.has_value() == yx.has_value() && (!xy || *xy == *yx),
                 [&] { return "x=" + show(x) + ", y=" + show(y); });
      if (xy && *xy == one) {
        unique.check(y == inst.orth(x), [&] { return "x=" + show(x) + ", y=" + show(y) + " sum to 1"; });
      }
      for (const T& z : ps) {
        std::optional<T> left;
        if (xy) left = sum(*xy, z);
        std::optional<T> right;
        if (auto yz = sum(y, z)) right = sum(x, *yz);
        assoc.check(left.has_value() == right.has_value() && (!left || *left == *right),
                    [&] { return "x=" + show(x) + ", y=" + show(y) + ", z=" + show(z); });
      }
    }
  }
  for (auto* t : {&comm, &assoc, &zero, &orth, &unique, &zero_one}) report.axioms.push_back(t->take());

  if (inst.scalar) {
    AxiomTally dist_scalar("scalar-distributivity");
    AxiomTally dist_sum("sum-distributivity");
    AxiomTally unit("unit-action");
    AxiomTally mult("mixed-associativity");
    const auto& act = inst.scalar;
    for (const T& x : ps) {
      auto one_x = act(Rat(1), x);
      unit.check(one_x && *one_x == x, [&] { return "x=" + show(x); });
      for (const Rat& r : inst.scalar_probes) {
        for (const Rat& s : inst.scalar_probes) {
          auto rs_x = act(r * s, x);
          auto s_x = act(s, x);
          auto r_sx = s_x ? act(r, *s_x) : std::nullopt;
          mult.check(rs_x && r_sx && *rs_x == *r_sx,
                     [&] { return "r=" + rat_string(r) + ", s=" + rat_string(s) + ", x=" + show(x); });
          if (r + s <= 1) {
            auto lhs = act(r + s, x);
            auto r_x = act(r, x);
            std::optional<T> rhs;
            if (r_x && s_x) rhs = sum(*r_x, *s_x);
            dist_scalar.check(lhs && rhs && *lhs == *rhs,
                              [&] { return "r=" + rat_string(r) + ", s=" + rat_string(s) + ", x=" + show(x); });
          }
        }
        for (const T& y : ps) {
          auto xy = sum(x, y);
          if (!xy) continue;
          auto lhs = act(r, *xy);
          auto r_x = act(r, x);
          auto r_y = act(r, y);
          std::optional<T> rhs;
          if (r_x && r_y) rhs = sum(*r_x, *r_y);
          dist_sum.check(lhs && rhs && *lhs == *rhs,
                         [&] { return "r=" + rat_string(r) + ", x=" + show(x) + ", y=" + show(y); });
        }
      }
    }
    for (auto* t : {&dist_scalar, &dist_sum, &unit, &mult}) report.axioms.push_back(t->take());
  }
  return report;
}

template EffectReport validate_effect_algebra<Subset>(const EffectAlgebra<Subset>&);
template EffectReport validate_effect_algebra<Rat>(const EffectAlgebra<Rat>&);
template EffectReport validate_effect_algebra<FuzzyPredicate>(const EffectAlgebra<FuzzyPredicate>&);

// ---------------------------------------------------------------- instances

EffectAlgebra<Subset> powerset_effect_algebra(std::size_t n) {
  if (n > 6) fail(ErrorKind::TooLarge, "powerset effect algebra is probed exhaustively up to 6 points");
  const FinSet carrier = FinSet::range(n, "x");
  EffectAlgebra<Subset> inst;
  inst.name = "P(" + std::to_string(n) + ")";
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) inst.probes.push_back(Subset::from_mask(n, m));
  inst.ovee = [](const Subset& a, const Subset& b) -> std::optional<Subset> {
    if (a.intersects(b)) return std::nullopt;
    return a | b;
  };
  inst.orth = [](const Subset& a) { return a.complement(); };
  inst.zero = Subset(n);
  inst.show = [carrier](const Subset& a) { return render_subset(carrier, a); };
  return inst;
}

EffectAlgebra<Rat> unit_interval_effect_algebra(int max_den) {
  EffectAlgebra<Rat> inst;
  inst.name = "[0,1] grid d<=" + std::to_string(max_den);
  inst.probes = unit_grid(max_den);
  inst.ovee = unit_ovee;
  inst.orth = [](const Rat& a) { return Rat(1 - a); };
  inst.zero = 0;
  inst.show = rat_string;
  inst.scalar = [](const Rat& r, const Rat& a) -> std::optional<Rat> {
    if (!in_unit_interval(r)) return std::nullopt;
    return r * a;
  };
  inst.scalar_probes = unit_grid(max_den);
  return inst;
}

EffectAlgebra<Rat> truncated_unit_interval(int max_den) {
  EffectAlgebra<Rat> inst = unit_interval_effect_algebra(max_den);
  inst.name = "[0,1] truncated sum d<=" + std::to_string(max_den);
  inst.ovee = [](const Rat& a, const Rat& b) -> std::optional<Rat> { return std::min(Rat(1), a + b); };
  inst.scalar = nullptr;
  inst.scalar_probes.clear();
  return inst;
}

EffectAlgebra<FuzzyPredicate> fuzzy_predicate_module(const FinSet& carrier, int max_den, int scalar_den) {
  const auto grid = unit_grid(max_den);
  EffectAlgebra<FuzzyPredicate> inst{
      "[0,1]^" + std::to_string(carrier.size()) + " grid d<=" + std::to_string(max_den),
      {},
      pred_ovee,
      pred_orth,
      FuzzyPredicate::constant(carrier, 0),
      nullptr,
      nullptr,
      unit_grid(scalar_den)};
  // Every function carrier -> grid, odometer order.
  std::vector<std::size_t> digits(carrier.size(), 0);
  while (true) {
    std::vector<Rat> v(carrier.size());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = grid[digits[x]];
    inst.probes.emplace_back(carrier, std::move(v));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == grid.size()) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  inst.show = [](const FuzzyPredicate& p) {
    std::string out = "{";
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (x != 0) out += ", ";
      out += p.carrier().name(x) + ": " + rat_string(p(x));
    }
    return out + "}";
  };
  inst.scalar = [](const Rat& r, const FuzzyPredicate& p) -> std::optional<FuzzyPredicate> {
    if (!in_unit_interval(r)) return std::nullopt;
    return pred_scalar(r, p);
  };
  return inst;
}

EffectReport check_mv_identities(int max_den) {
  EffectReport report;
  report.instance = "MV identities on [0,1] grid d<=" + std::to_string(max_den);
  const auto grid = unit_grid(max_den);
  report.probes = grid.size();
  AxiomTally agree("plus-minus-agreement");
  AxiomTally join_law("join-as-minus-plus");
  AxiomTally orth_law("orth-join-meet");
  AxiomTally unit_law("plus-zero");
  for (const Rat& a : grid) {
    unit_law.check(mv_ops(a, 0).truncated_plus == a, [&] { return "a=" + rat_string(a); });
    for (const Rat& b : grid) {
      const MvResult direct = mv_ops(a, b);
      const MvResult derived = mv_ops_from_partial_sum(a, b);
      auto w = [&] { return "a=" + rat_string(a) + ", b=" + rat_string(b); };
      agree.check(direct.truncated_plus == derived.truncated_plus && direct.truncated_minus == derived.truncated_minus,
                  w);
      join_law.check(direct.join == mv_ops(direct.truncated_minus, b).truncated_plus, w);
      auto lhs = unit_ovee(1 - direct.join, a);
      auto rhs = unit_ovee(1 - b, direct.meet);
      orth_law.check(lhs && rhs && *lhs == *rhs, w);
    }
  }
  for (auto* t : {&agree, &join_law, &orth_law, &unit_law}) report.axioms.push_back(t->take());
  return report;
}

}  // namespace tri
