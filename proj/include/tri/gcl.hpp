#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tri/distribution.hpp"
#include "tri/effect.hpp"
#include "tri/kit.hpp"
#include "tri/rational.hpp"
#include "tri/subset.hpp"

namespace tri::gcl {

/// Expressions evaluate to exact rationals; booleans are 0 and 1.
struct Expr {
  enum class Op { Const, Var, Neg, Not, Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or, Iverson };
  Op op = Op::Const;
  Rat value;            // Const
  std::size_t var = 0;  // Var
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct Stmt {
  enum class Kind { Skip, Abort, Assign, Seq, If, Choose, Prob };
  Kind kind = Kind::Skip;
  std::size_t var = 0;  // Assign
  Expr expr;            // Assign value or If condition
  Rat weight;           // Prob: weight of the first branch
  std::vector<Stmt> body;  // Seq: the parts; If/Choose/Prob: two branches

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct VarDecl {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::size_t range() const { return static_cast<std::size_t>(hi - lo + 1); }
  friend bool operator==(const VarDecl&, const VarDecl&) = default;
};

struct Program {
  std::vector<VarDecl> vars;
  Stmt body;
  std::optional<Expr> post;

  friend bool operator==(const Program&, const Program&) = default;
};

enum class Mode { Pow, Dist };
enum class Flavor { Demonic, Angelic, Expectation };

std::string_view to_string(Mode mode);
std::string_view to_string(Flavor flavor);
Mode mode_from_string(std::string_view name);
Flavor flavor_from_string(std::string_view name);

/// Throws SyntaxError (with line and column), UndeclaredVariable, RangeError.
Program parse(const std::string& source);
/// Parses a standalone expression over the program's variables.
Expr parse_expr(const Program& program, const std::string& source);
/// Source text that parses back to the same program.
std::string to_source(const Program& program);
std::string to_source(const Program& program, const Expr& e);

constexpr std::size_t kMaxStates = 512;

/// Every assignment of values to the declared variables; the first variable
/// is the most significant digit of the state index.
class StateSpace {
 public:
  /// Throws TooLarge past `cap` states.
  explicit StateSpace(std::vector<VarDecl> vars, std::size_t cap = kMaxStates);

  std::size_t size() const { return states_.size(); }
  const FinSet& states() const { return states_; }
  const std::vector<VarDecl>& vars() const { return vars_; }
  /// Value of variable v in state s.
  std::int64_t value(std::size_t s, std::size_t v) const;
  /// State s with variable v set to `value` wrapped into its range.
  std::size_t assign(std::size_t s, std::size_t v, const Rat& value) const;
  /// Throws UnknownElement.
  std::size_t parse_state(const std::string& text) const;

 private:
  std::vector<VarDecl> vars_;
  std::vector<std::size_t> stride_;
  FinSet states_;
};

/// Throws EvalError (division by zero, non-integer modulus, ...).
Rat eval(const Expr& e, const StateSpace& space, std::size_t state);

/// Kleisli arrow of the powerset monad on the state space.
struct StateRelation {
  std::size_t states = 0;
  std::vector<Subset> images;

  friend bool operator==(const StateRelation&, const StateRelation&) = default;
};

/// g ⊙ f by unions of images.
StateRelation relation_compose(const StateRelation& g, const StateRelation& f);

/// Whole-program denotations. Throws ModeMismatch for abort or choose in dist
/// mode. In pow mode a prob statement keeps every branch of nonzero weight.
StateRelation denote_pow(const Program& program, const StateSpace& space);
DistArrow denote_dist(const Program& program, const StateSpace& space);

/// Evaluates a postcondition: 0/1 in pow mode, [0,1] in dist mode.
/// Throws RangeError otherwise.
Subset post_set(const Expr& post, const StateSpace& space);
FuzzyPredicate post_fuzzy(const Expr& post, const StateSpace& space);

/// wp by structural recursion on the statement.
Subset wp_sets(const Program& program, const StateSpace& space, Flavor flavor, const Subset& post);
FuzzyPredicate wp_expectation(const Program& program, const StateSpace& space, const FuzzyPredicate& post);

/// □ and ◇ applied to a whole denotation.
Subset box_apply(const StateRelation& g, const Subset& post);
Subset diamond_apply(const StateRelation& g, const Subset& post);

/// Table of wp values per state (0/1 for the set flavors).
std::vector<Rat> wp_table(const Program& program, Flavor flavor, const Expr& post);

struct RoundTripResult {
  std::size_t probes = 0;
  std::size_t mismatches = 0;
  std::optional<std::string> witness;
  bool passed() const { return mismatches == 0; }
};

/// Compares wp by recursion with the transformer of the whole denotation on
/// probe posts: all point predicates, their complements, the extremes, and
/// `random_probes` seeded random predicates (all subsets when few states).
RoundTripResult check_roundtrip(const Program& program, Flavor flavor, std::uint64_t seed,
                                std::size_t random_probes = 16);

/// Structural properties of wp on the same probes: meets/top (demonic),
/// joins/bottom (angelic), duality for both set flavors, monotonicity, and
/// additivity/homogeneity/normalization (expectation).
LawReport check_healthiness(const Program& program, Flavor flavor, std::uint64_t seed,
                            std::size_t random_probes = 16);

struct RandomOptions {
  std::size_t depth = 5;
  std::size_t vars = 2;
  std::size_t max_range = 4;
};

/// A reproducible program. Dist-mode programs never contain abort or choose.
Program random_program(std::mt19937_64& rng, Mode mode, const RandomOptions& opts = {});

/// Seeded corpus: each round draws a pow-mode program, checked under the
/// demonic and angelic flavors, and a dist-mode program, checked under
/// expectation. Laws are named "<mode>/<flavor> <law>"; every program must
/// also print and reparse to itself.
LawReport check_wp_corpus(std::size_t programs, std::uint64_t seed, const RandomOptions& opts = {});

}  // namespace tri::gcl
