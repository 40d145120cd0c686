#include "tri/rational.hpp"

#include <algorithm>
#include <cctype>

#include "tri/error.hpp"

namespace tri {

namespace {

BigInt parse_int(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  if (i == text.size()) fail(ErrorKind::SyntaxError, "malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail(ErrorKind::SyntaxError, "malformed rational '" + std::string(whole) + "'");
    }
    v = v * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(t, text));
  const BigInt num = parse_int(trim(t.substr(0, slash)), text);
  const BigInt den = parse_int(trim(t.substr(slash + 1)), text);
  if (den == 0) fail(ErrorKind::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

std::string rat_string(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rat_json(const Rat& r) { return numerator(r).str() + "/" + denominator(r).str(); }

bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }
bool is_integer(const Rat& r) { return denominator(r) == 1; }

std::vector<Rat> unit_grid(int max_den) {
  if (max_den < 1) fail(ErrorKind::InvalidArgument, "grid denominator must be positive");
  std::vector<Rat> out;
  for (int d = 1; d <= max_den; ++d)
    for (int k = 0; k <= d; ++k) out.emplace_back(k, d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tri
