#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tri/distribution.hpp"
#include "tri/effect.hpp"
#include "tri/order.hpp"
#include "tri/rational.hpp"

namespace tri {

/// Reads a finite poset written in any of these forms:
///   poset NAME { elems a b c; covers a<b b<c; }
///   {a, b, c}            discrete set
///   {a, b, c | a<b<c}    set with covers (chains allowed)
///   chain:N  antichain:N
/// Throws SyntaxError, UnknownElement, CycleError.
FinPoset parse_poset(std::string_view text);

/// {"name", "elements", "covers"} with covers as [lower, upper] name pairs.
nlohmann::json poset_json(const FinPoset& p);

/// Weighted literal `{s0: 1/3, s1: 2/3}`, optionally prefixed by `name =`.
/// Keys are trimmed and may contain spaces. Throws SyntaxError.
std::vector<std::pair<std::string, Rat>> parse_weights(std::string_view text);

/// Missing points weigh 0. Throws UnknownElement, NotNormalized.
Distribution parse_distribution(const FinSet& carrier, std::string_view text);
/// Missing points map to 0. Throws UnknownElement, ScalarOutOfRange.
FuzzyPredicate parse_predicate(const FinSet& carrier, std::string_view text);

}  // namespace tri
