#include "argdlpa/valuation.hpp"

#include <algorithm>
#include <bit>

namespace argdlpa {

void Valuation::insert(std::size_t index) {
  std::size_t w = index / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (index % 64);
}

void Valuation::erase(std::size_t index) {
  std::size_t w = index / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (index % 64));
  trim();
}

void Valuation::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::size_t Valuation::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> Valuation::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t b = words_[w]; b != 0; b &= b - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    }
  }
  return out;
}

bool Valuation::is_subset_of(const Valuation& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t Valuation::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Valuation Valuation::prefix(std::size_t n) {
  Valuation v;
  v.words_.assign(n / 64, ~std::uint64_t{0});
  if (n % 64 != 0) v.words_.push_back((std::uint64_t{1} << (n % 64)) - 1);
  return v;
}

Valuation operator|(const Valuation& a, const Valuation& b) {
  const Valuation& big = a.words_.size() >= b.words_.size() ? a : b;
  const Valuation& small = a.words_.size() >= b.words_.size() ? b : a;
  Valuation out = big;
  for (std::size_t i = 0; i < small.words_.size(); ++i) out.words_[i] |= small.words_[i];
  return out;
}

Valuation operator&(const Valuation& a, const Valuation& b) {
  Valuation out;
  std::size_t n = std::min(a.words_.size(), b.words_.size());
  out.words_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.words_[i] = a.words_[i] & b.words_[i];
  out.trim();
  return out;
}

Valuation operator-(const Valuation& a, const Valuation& b) {
  Valuation out = a;
  std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) out.words_[i] &= ~b.words_[i];
  out.trim();
  return out;
}

bool operator<(const Valuation& a, const Valuation& b) {
  std::size_t ca = a.count();
  std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal sizes: the set owning the lowest differing index sorts first.
  std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t wa = i < a.words_.size() ? a.words_[i] : 0;
    std::uint64_t wb = i < b.words_.size() ? b.words_[i] : 0;
    std::uint64_t diff = wa ^ wb;
    if (diff != 0) return (wa & (diff & (~diff + 1))) != 0;
  }
  return false;
}

void sort_unique(std::vector<Valuation>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace argdlpa
