#pragma once

#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace argdlpa {

// Finite set of true variables, addressed by dense index.
// Trailing zero words are trimmed so equal sets compare equal.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
  }

  [[nodiscard]] bool contains(std::size_t index) const {
    std::size_t w = index / 64;
    return w < words_.size() && ((words_[w] >> (index % 64)) & 1U);
  }
  void insert(std::size_t index);
  void erase(std::size_t index);
  [[nodiscard]] Valuation with(std::size_t index) const {
    Valuation v = *this;
    v.insert(index);
    return v;
  }
  [[nodiscard]] Valuation without(std::size_t index) const {
    Valuation v = *this;
    v.erase(index);
    return v;
  }

  [[nodiscard]] bool empty() const { return words_.empty(); }
  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] std::vector<std::size_t> indices() const;
  [[nodiscard]] bool is_subset_of(const Valuation& other) const;
  [[nodiscard]] std::size_t hash() const;

  // Set of indices [0, n).
  [[nodiscard]] static Valuation prefix(std::size_t n);

  friend Valuation operator|(const Valuation& a, const Valuation& b);
  friend Valuation operator&(const Valuation& a, const Valuation& b);
  friend Valuation operator-(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) { return a.words_ == b.words_; }
  // Canonical order: fewer true variables first, then lexicographic on ascending indices.
  friend bool operator<(const Valuation& a, const Valuation& b);

 private:
  void trim();
  boost::container::small_vector<std::uint64_t, 2> words_;
};

struct ValuationHash {
  std::size_t operator()(const Valuation& v) const { return v.hash(); }
};

void sort_unique(std::vector<Valuation>& vs);

}  // namespace argdlpa
