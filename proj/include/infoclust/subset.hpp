#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace infoclust {

/// A finite subset of {0, ..., m-1} stored as a packed bitset.
///
/// Trailing zero words are never stored, so two subsets compare equal iff
/// they contain the same elements, independent of the universe they were
/// built for. Ground sets of up to 64 elements occupy a single word.
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<std::size_t> elements);

  static Subset from_mask(std::uint64_t mask);
  static Subset full(std::size_t m);
  static Subset singleton(std::size_t i);
  template <typename Range>
  static Subset from_elements(const Range& range) {
    Subset s;
    for (auto e : range) s.insert(static_cast<std::size_t>(e));
    return s;
  }

  bool contains(std::size_t i) const {
    const std::size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  bool empty() const { return words_.empty(); }
  std::size_t count() const;
  /// Smallest element; undefined for the empty set.
  std::size_t min_element() const;
  /// One past the largest element (0 for the empty set).
  std::size_t bound() const;

  /// Low 64 bits. Exact only when bound() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  bool intersects(const Subset& other) const;
  bool is_subset_of(const Subset& other) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Orders by smallest element first, then lexicographically by sorted
  /// element list. Gives the deterministic block order used for output.
  friend bool operator<(const Subset& a, const Subset& b);

  std::vector<std::size_t> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;
  /// "{1,2,3}" with 1-based element labels.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

using SetFamily = std::vector<Subset>;

}  // namespace infoclust

template <>
struct std::hash<infoclust::Subset> {
  std::size_t operator()(const infoclust::Subset& s) const noexcept { return s.hash(); }
};
