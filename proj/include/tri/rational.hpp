#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tri {

/// Exact rational with arbitrary-precision numerator and denominator, always
/// normalized (gcd 1, positive denominator).
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

/// Accepts "n", "-n", "n/d" (d != 0). Throws SyntaxError.
Rat parse_rat(std::string_view text);
/// "n" for integers, otherwise "n/d".
std::string rat_string(const Rat& r);
/// Always "n/d"; the serialized form used in JSON.
std::string rat_json(const Rat& r);

bool in_unit_interval(const Rat& r);
bool is_integer(const Rat& r);

/// All rationals k/d in [0,1] with 1 <= d <= max_den, ascending, without repeats.
std::vector<Rat> unit_grid(int max_den);

}  // namespace tri
