#include "tri/subset.hpp"

#include "tri/error.hpp"

namespace tri {

namespace {
constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

Subset::Subset(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

Subset::Subset(std::size_t universe, std::initializer_list<std::size_t> members) : Subset(universe) {
  for (std::size_t m : members) insert(m);
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

Subset Subset::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) fail(ErrorKind::InvalidArgument, "from_mask needs a universe of at most 64");
  Subset s(universe);
  if (universe == 0) return s;
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  s.words_[0] = mask;
  return s;
}

bool Subset::contains(std::size_t i) const {
  if (i >= universe_) return false;
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void Subset::insert(std::size_t i) {
  if (i >= universe_) fail(ErrorKind::InvalidArgument, "subset member out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void Subset::erase(std::size_t i) {
  if (i >= universe_) return;
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool Subset::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

void Subset::check_same_universe(const Subset& other) const {
  if (universe_ != other.universe_) fail(ErrorKind::CarrierMismatch, "subsets of different universes");
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

Subset Subset::complement() const { return full(universe_) - *this; }

Subset& Subset::operator|=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::uint64_t Subset::mask() const { return words_.empty() ? 0 : words_[0]; }

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Subset::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace tri
