#include "argdlpa/universe.hpp"

#include <cctype>

#include "argdlpa/errors.hpp"

namespace argdlpa {

bool canonical_less(ArgSet a, ArgSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int ix = std::countr_zero(x);
    int iy = std::countr_zero(y);
    if (ix != iy) return ix < iy;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

AttackSet restrict_attacks(const AttackSet& attacks, ArgSet args) {
  AttackSet out;
  for (const auto& [x, y] : attacks) {
    if (args.contains(x) && args.contains(y)) out.emplace_hint(out.end(), x, y);
  }
  return out;
}

Var var_from_index(std::size_t index, std::size_t n) {
  if (index < n) return Var::aw(static_cast<ArgId>(index));
  if (index < 2 * n) return Var::in(static_cast<ArgId>(index - n));
  if (index < 3 * n) return Var::in_prime(static_cast<ArgId>(index - 2 * n));
  if (index < 3 * n + n * n) {
    std::size_t k = index - 3 * n;
    return Var::att(static_cast<ArgId>(k / n), static_cast<ArgId>(k % n));
  }
  return Var::aux(static_cast<std::uint32_t>(index - 3 * n - n * n));
}

std::vector<Var> aw_vars(ArgSet args) {
  std::vector<Var> out;
  args.for_each([&](ArgId x) { out.push_back(Var::aw(x)); });
  return out;
}

std::vector<Var> in_vars(ArgSet args) {
  std::vector<Var> out;
  args.for_each([&](ArgId x) { out.push_back(Var::in(x)); });
  return out;
}

std::vector<Var> in_prime_vars(ArgSet args) {
  std::vector<Var> out;
  args.for_each([&](ArgId x) { out.push_back(Var::in_prime(x)); });
  return out;
}

std::vector<Var> att_vars(const AttackSet& attacks) {
  std::vector<Var> out;
  out.reserve(attacks.size());
  for (const auto& [x, y] : attacks) out.push_back(Var::att(x, y));
  return out;
}

std::vector<Var> att_vars(ArgSet sources, ArgSet targets) {
  std::vector<Var> out;
  sources.for_each([&](ArgId x) { targets.for_each([&](ArgId y) { out.push_back(Var::att(x, y)); }); });
  return out;
}

Universe::Universe(std::vector<std::string> names) {
  if (names.empty()) throw InvariantError("universe must not be empty");
  for (auto& n : names) {
    if (!valid_name(n)) throw InvariantError("invalid argument name '" + n + "'");
    if (index_.count(n) != 0) throw InvariantError("duplicate argument name '" + n + "'");
    intern(n);
  }
}

std::optional<ArgId> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgId Universe::at(std::string_view name) const {
  auto id = find(name);
  if (!id) throw InvariantError("unknown argument '" + std::string(name) + "'");
  return *id;
}

ArgId Universe::intern(std::string_view name) {
  if (auto id = find(name)) return *id;
  if (names_.size() >= kMaxUniverse) {
    throw ResourceError("universe exceeds " + std::to_string(kMaxUniverse) + " arguments");
  }
  auto id = static_cast<ArgId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(std::string(name), id);
  return id;
}

std::string Universe::var_name(const Var& v) const {
  switch (v.kind) {
    case VarKind::aw: return "aw(" + name(v.first) + ")";
    case VarKind::in: return "in(" + name(v.first) + ")";
    case VarKind::in_prime: return "in'(" + name(v.first) + ")";
    case VarKind::att: return "att(" + name(v.first) + "," + name(v.second) + ")";
    case VarKind::aux: return "aux(" + std::to_string(v.first) + ")";
  }
  return {};
}

std::string Universe::set_string(ArgSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ArgId x) {
    if (!first) out += ",";
    first = false;
    out += name(x);
  });
  return out + "}";
}

ArgSet Universe::parse_set(std::string_view text) const {
  ArgSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) out.insert(at(item));
    pos = comma + 1;
  }
  return out;
}

bool Universe::valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto c0 = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(c0) || c0 == '_')) return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

Universe Universe::letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    names.push_back(s);
  }
  return Universe(std::move(names));
}

}  // namespace argdlpa
