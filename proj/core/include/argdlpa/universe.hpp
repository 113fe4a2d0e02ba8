#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argdlpa {

using ArgId = std::uint32_t;

inline constexpr std::size_t kMaxUniverse = 64;

// Set of arguments as a bitmask over universe indices.
class ArgSet {
 public:
  constexpr ArgSet() = default;
  constexpr explicit ArgSet(std::uint64_t bits) : bits_(bits) {}
  ArgSet(std::initializer_list<ArgId> ids) {
    for (ArgId id : ids) insert(id);
  }

  [[nodiscard]] static constexpr ArgSet first_n(std::size_t n) {
    return ArgSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool contains(ArgId id) const { return (bits_ >> id) & 1U; }
  constexpr void insert(ArgId id) { bits_ |= std::uint64_t{1} << id; }
  constexpr void erase(ArgId id) { bits_ &= ~(std::uint64_t{1} << id); }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr bool is_subset_of(ArgSet other) const { return (bits_ & ~other.bits_) == 0; }

  [[nodiscard]] std::vector<ArgId> members() const {
    std::vector<ArgId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<ArgId>(std::countr_zero(b)));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<ArgId>(std::countr_zero(b)));
  }

  friend constexpr ArgSet operator|(ArgSet a, ArgSet b) { return ArgSet(a.bits_ | b.bits_); }
  friend constexpr ArgSet operator&(ArgSet a, ArgSet b) { return ArgSet(a.bits_ & b.bits_); }
  friend constexpr ArgSet operator-(ArgSet a, ArgSet b) { return ArgSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ArgSet a, ArgSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Size first, then lexicographic on ascending member lists.
[[nodiscard]] bool canonical_less(ArgSet a, ArgSet b);

struct ArgSetCanonicalLess {
  bool operator()(ArgSet a, ArgSet b) const { return canonical_less(a, b); }
};

using Attack = std::pair<ArgId, ArgId>;
using AttackSet = std::set<Attack>;

[[nodiscard]] AttackSet restrict_attacks(const AttackSet& attacks, ArgSet args);

enum class VarKind : std::uint8_t { aw, in, in_prime, att, aux };

struct Var {
  VarKind kind = VarKind::aw;
  std::uint32_t first = 0;
  std::uint32_t second = 0;

  [[nodiscard]] static constexpr Var aw(ArgId x) { return {VarKind::aw, x, 0}; }
  [[nodiscard]] static constexpr Var in(ArgId x) { return {VarKind::in, x, 0}; }
  [[nodiscard]] static constexpr Var in_prime(ArgId x) { return {VarKind::in_prime, x, 0}; }
  [[nodiscard]] static constexpr Var att(ArgId x, ArgId y) { return {VarKind::att, x, y}; }
  [[nodiscard]] static constexpr Var aux(std::uint32_t n) { return {VarKind::aux, n, 0}; }

  friend constexpr auto operator<=>(const Var&, const Var&) = default;
};

// Dense layout for a universe of n arguments:
// aw [0,n) in [n,2n) in' [2n,3n) att 3n + x*n + y, aux after that.
[[nodiscard]] constexpr std::size_t dense_index(const Var& v, std::size_t n) {
  switch (v.kind) {
    case VarKind::aw: return v.first;
    case VarKind::in: return n + v.first;
    case VarKind::in_prime: return 2 * n + v.first;
    case VarKind::att: return 3 * n + static_cast<std::size_t>(v.first) * n + v.second;
    case VarKind::aux: return 3 * n + n * n + v.first;
  }
  return 0;
}

[[nodiscard]] Var var_from_index(std::size_t index, std::size_t n);

[[nodiscard]] std::vector<Var> aw_vars(ArgSet args);
[[nodiscard]] std::vector<Var> in_vars(ArgSet args);
[[nodiscard]] std::vector<Var> in_prime_vars(ArgSet args);
[[nodiscard]] std::vector<Var> att_vars(const AttackSet& attacks);
[[nodiscard]] std::vector<Var> att_vars(ArgSet sources, ArgSet targets);

// Ordered, finite set of argument names. Names are interned in order of first appearance.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] bool empty() const { return names_.empty(); }
  [[nodiscard]] const std::string& name(ArgId id) const { return names_.at(id); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::optional<ArgId> find(std::string_view name) const;
  [[nodiscard]] ArgId at(std::string_view name) const;
  ArgId intern(std::string_view name);
  [[nodiscard]] ArgSet all() const { return ArgSet::first_n(names_.size()); }

  [[nodiscard]] std::string var_name(const Var& v) const;
  [[nodiscard]] std::string set_string(ArgSet s) const;
  [[nodiscard]] ArgSet parse_set(std::string_view comma_separated) const;

  [[nodiscard]] static bool valid_name(std::string_view name);
  // a, b, ..., z, a1, b1, ...
  [[nodiscard]] static Universe letters(std::size_t n);

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgId> index_;
};

}  // namespace argdlpa
