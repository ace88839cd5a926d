#include "infoclust/subset.hpp"

#include <algorithm>
#include <sstream>

namespace infoclust {

Subset::Subset(std::initializer_list<std::size_t> elements) {
  for (auto e : elements) insert(e);
}

Subset Subset::from_mask(std::uint64_t mask) {
  Subset s;
  if (mask) s.words_.push_back(mask);
  return s;
}

Subset Subset::full(std::size_t m) {
  Subset s;
  s.words_.assign((m + 63) / 64, ~std::uint64_t{0});
  if (m % 64) s.words_.back() = (std::uint64_t{1} << (m % 64)) - 1;
  s.trim();
  return s;
}

Subset Subset::singleton(std::size_t i) {
  Subset s;
  s.insert(i);
  return s;
}

void Subset::insert(std::size_t i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (i % 64);
}

void Subset::erase(std::size_t i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (i % 64));
  trim();
}

std::size_t Subset::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t Subset::min_element() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return 0;
}

std::size_t Subset::bound() const {
  if (words_.empty()) return 0;
  return (words_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(words_.back())));
}

bool Subset::intersects(const Subset& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool Subset::is_subset_of(const Subset& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  trim();
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  trim();
  return *this;
}

bool operator<(const Subset& a, const Subset& b) {
  if (a.empty() || b.empty()) return !a.empty() ? false : !b.empty();
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Subset::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) os << ',';
    os << i + 1;
    first = false;
  });
  os << '}';
  return os.str();
}

void Subset::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace infoclust
