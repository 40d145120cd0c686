#pragma once

// Brute-force reference computations for the tests. They only use the order
// relation of a poset and plain loops over all functions or all subsets, so
// they share no code paths with the library's closure and search routines.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tri/order.hpp"
#include "tri/structure.hpp"

namespace oracle {

using tri::FinPoset;
using Fn = std::vector<std::size_t>;

inline bool in_mask(std::uint64_t mask, std::size_t i) { return ((mask >> i) & 1U) != 0; }

inline std::optional<std::size_t> join(const FinPoset& p, std::uint64_t mask) {
  std::optional<std::size_t> best;
  for (std::size_t u = 0; u < p.size(); ++u) {
    bool upper = true;
    for (std::size_t s = 0; s < p.size(); ++s)
      if (in_mask(mask, s) && !p.leq(s, u)) upper = false;
    if (!upper) continue;
    bool least = true;
    for (std::size_t v = 0; v < p.size(); ++v) {
      bool v_upper = true;
      for (std::size_t s = 0; s < p.size(); ++s)
        if (in_mask(mask, s) && !p.leq(s, v)) v_upper = false;
      if (v_upper && !p.leq(u, v)) least = false;
    }
    if (least) best = u;
  }
  return best;
}

inline std::optional<std::size_t> meet(const FinPoset& p, std::uint64_t mask) {
  return join(p.opposite(), mask);
}

/// Every function {0..n-1} -> {0..m-1}, as value vectors.
inline std::vector<Fn> all_functions(std::size_t n, std::size_t m) {
  std::vector<Fn> out;
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  Fn f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool monotone(const FinPoset& p, const FinPoset& q, const Fn& f) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) && !q.leq(f[a], f[b])) return false;
  return true;
}

inline std::uint64_t image_mask(const Fn& f, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (in_mask(mask, i)) out |= std::uint64_t{1} << f[i];
  return out;
}

/// Preservation of the joins (or meets) of the subsets accepted by `which`.
inline bool preserves_bounds(const FinPoset& p, const FinPoset& q, const Fn& f, bool joins,
                             const std::function<bool(std::uint64_t)>& which) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
    if (!which(mask)) continue;
    const auto src = joins ? join(p, mask) : meet(p, mask);
    if (!src) continue;
    const auto dst = joins ? join(q, image_mask(f, mask)) : meet(q, image_mask(f, mask));
    if (!dst || *dst != f[*src]) return false;
  }
  return true;
}

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

inline bool in_class(const FinPoset& p, const FinPoset& q, const Fn& f, tri::MapClass cls) {
  using tri::MapClass;
  if (!monotone(p, q, f)) return false;
  auto any = [](std::uint64_t) { return true; };
  auto empty = [](std::uint64_t m) { return m == 0; };
  switch (cls) {
    case MapClass::Monotone:
      return true;
    case MapClass::JoinPreserving:
      return preserves_bounds(p, q, f, true, any);
    case MapClass::MeetPreserving:
    case MapClass::MeetTop:
      return preserves_bounds(p, q, f, false, any);
    case MapClass::JoinTop:
      return preserves_bounds(p, q, f, true, any) && preserves_bounds(p, q, f, false, empty);
    case MapClass::Frame:
      return preserves_bounds(p, q, f, true, any) && preserves_bounds(p, q, f, false, any);
    case MapClass::Preframe0:
      // Directed joins of a finite poset are maxima, already kept by monotone maps.
      return preserves_bounds(p, q, f, false, any) && preserves_bounds(p, q, f, true, empty);
    case MapClass::Boolean: {
      auto small = [](std::uint64_t m) { return popcount(m) <= 2; };
      return preserves_bounds(p, q, f, true, small) && preserves_bounds(p, q, f, false, small);
    }
  }
  return false;
}

inline std::size_t count_class(const FinPoset& p, const FinPoset& q, tri::MapClass cls) {
  std::size_t n = 0;
  for (const auto& f : all_functions(p.size(), q.size()))
    if (in_class(p, q, f, cls)) ++n;
  return n;
}

inline bool is_upset(const FinPoset& p, std::uint64_t mask) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (in_mask(mask, a) && p.leq(a, b) && !in_mask(mask, b)) return false;
  return true;
}

inline bool is_downset(const FinPoset& p, std::uint64_t mask) { return is_upset(p.opposite(), mask); }

inline std::vector<std::uint64_t> upset_masks(const FinPoset& p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m)
    if (is_upset(p, m)) out.push_back(m);
  return out;
}

inline std::vector<std::uint64_t> downset_masks(const FinPoset& p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m)
    if (is_downset(p, m)) out.push_back(m);
  return out;
}

}  // namespace oracle
