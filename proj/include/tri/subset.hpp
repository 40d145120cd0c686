#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tri {

/// A subset of {0, ..., universe-1}, stored as a packed bitset.
///
/// Ordering compares the universe size first and then the bit pattern read as
/// a binary number (element 0 least significant), so for small universes the
/// order is the numeric order of the membership mask.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe);
  Subset(std::size_t universe, std::initializer_list<std::size_t> members);

  static Subset full(std::size_t universe);
  static Subset from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);
  void set(std::size_t i, bool value) { value ? insert(i) : erase(i); }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == universe_; }
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset complement() const;
  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t mask() const;
  std::vector<std::size_t> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const Subset& a, const Subset& b) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  void check_same_universe(const Subset& other) const;

  std::size_t universe_ = 0;
  // Universes up to 128 points stay off the heap.
  boost::container::small_vector<std::uint64_t, 2> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace tri

template <>
struct std::hash<tri::Subset> {
  std::size_t operator()(const tri::Subset& s) const { return s.hash(); }
};
