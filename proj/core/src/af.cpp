#include "argdlpa/af.hpp"

#include <algorithm>
#include <functional>

#include "argdlpa/errors.hpp"

namespace argdlpa {

ArgFramework::ArgFramework(ArgSet args, const AttackSet& attacks)
    : args_(args), attacks_(restrict_attacks(attacks, args)) {
  for (const auto& [x, y] : attacks_) {
    attackers_[y] |= std::uint64_t{1} << x;
    attacked_[x] |= std::uint64_t{1} << y;
  }
}

bool operator<(const ArgFramework& a, const ArgFramework& b) {
  if (a.args_ != b.args_) return canonical_less(a.args_, b.args_);
  if (a.attacks_.size() != b.attacks_.size()) return a.attacks_.size() < b.attacks_.size();
  return a.attacks_ < b.attacks_;
}

std::string to_string(const ArgFramework& af, const Universe& u) {
  std::string out = "(" + u.set_string(af.args()) + ",{";
  bool first = true;
  for (const auto& [x, y] : af.attacks()) {
    if (!first) out += ",";
    first = false;
    out += "(" + u.name(x) + "," + u.name(y) + ")";
  }
  return out + "})";
}

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::stable: return "st";
    case Semantics::complete: return "co";
    case Semantics::grounded: return "gr";
    case Semantics::preferred: return "pr";
    case Semantics::semi_stable: return "se";
    case Semantics::ideal: return "id";
    case Semantics::eager: return "ea";
    case Semantics::naive: return "na";
    case Semantics::stage: return "stg";
  }
  return "";
}

std::optional<Semantics> parse_semantics(std::string_view s) {
  for (Semantics sem : kAllSemantics) {
    if (to_string(sem) == s) return sem;
  }
  return std::nullopt;
}

namespace {

void require_subset(const ArgFramework& af, ArgSet e) {
  if (!e.is_subset_of(af.args())) throw DomainError("set is not a subset of the framework's arguments");
}

ArgSet attacked_unchecked(const ArgFramework& af, ArgSet e) {
  ArgSet out;
  e.for_each([&](ArgId x) { out = out | af.attacked(x); });
  return out;
}

bool conflict_free_unchecked(const ArgFramework& af, ArgSet e) {
  bool ok = true;
  e.for_each([&](ArgId x) { ok = ok && (af.attackers(x) & e).empty(); });
  return ok;
}

ArgSet defended_unchecked(const ArgFramework& af, ArgSet e) {
  ArgSet plus = attacked_unchecked(af, e);
  ArgSet out;
  af.args().for_each([&](ArgId a) {
    if (af.attackers(a).is_subset_of(plus)) out.insert(a);
  });
  return out;
}

std::vector<ArgSet> subsets_where(ArgSet base, const std::function<bool(ArgSet)>& pred) {
  std::vector<ArgSet> out;
  std::uint64_t all = base.bits();
  std::uint64_t s = 0;
  while (true) {
    if (pred(ArgSet(s))) out.push_back(ArgSet(s));
    if (s == all) break;
    s = (s - all) & all;
  }
  return out;
}

std::vector<ArgSet> maximal(const std::vector<ArgSet>& pool) {
  std::vector<ArgSet> out;
  for (ArgSet e : pool) {
    bool dominated = std::any_of(pool.begin(), pool.end(), [&](ArgSet f) { return f != e && e.is_subset_of(f); });
    if (!dominated) out.push_back(e);
  }
  return out;
}

std::vector<ArgSet> minimal(const std::vector<ArgSet>& pool) {
  std::vector<ArgSet> out;
  for (ArgSet e : pool) {
    bool dominated = std::any_of(pool.begin(), pool.end(), [&](ArgSet f) { return f != e && f.is_subset_of(e); });
    if (!dominated) out.push_back(e);
  }
  return out;
}

std::vector<ArgSet> range_maximal(const ArgFramework& af, const std::vector<ArgSet>& pool) {
  std::vector<ArgSet> out;
  for (ArgSet e : pool) {
    ArgSet re = e | attacked_unchecked(af, e);
    bool dominated = std::any_of(pool.begin(), pool.end(), [&](ArgSet f) {
      ArgSet rf = f | attacked_unchecked(af, f);
      return rf != re && re.is_subset_of(rf);
    });
    if (!dominated) out.push_back(e);
  }
  return out;
}

// Maximal admissible sets contained in every member of the given family.
std::vector<ArgSet> maximal_contained_admissible(const ArgFramework& af, const std::vector<ArgSet>& family) {
  ArgSet common = af.args();
  for (ArgSet e : family) common = common & e;
  auto pool = subsets_where(common, [&](ArgSet e) { return is_admissible(af, e); });
  return maximal(pool);
}

}  // namespace

ArgSet attacked_by(const ArgFramework& af, ArgSet e) {
  require_subset(af, e);
  return attacked_unchecked(af, e);
}

ArgSet range(const ArgFramework& af, ArgSet e) { return e | attacked_by(af, e); }

bool is_conflict_free(const ArgFramework& af, ArgSet e) {
  require_subset(af, e);
  return conflict_free_unchecked(af, e);
}

bool defends(const ArgFramework& af, ArgSet e, ArgId a) {
  require_subset(af, e);
  if (!af.args().contains(a)) throw DomainError("argument is not in the framework");
  return af.attackers(a).is_subset_of(attacked_unchecked(af, e));
}

bool is_admissible(const ArgFramework& af, ArgSet e) {
  require_subset(af, e);
  return conflict_free_unchecked(af, e) && e.is_subset_of(defended_unchecked(af, e));
}

std::vector<ArgSet> extensions(const ArgFramework& af, Semantics s, std::size_t max_args) {
  if (af.args().size() > max_args) {
    throw ResourceError("framework has " + std::to_string(af.args().size()) + " arguments; oracle bound is " +
                        std::to_string(max_args));
  }
  const ArgSet args = af.args();
  auto complete = [&] {
    return subsets_where(args, [&](ArgSet e) { return conflict_free_unchecked(af, e) && defended_unchecked(af, e) == e; });
  };
  auto conflict_free = [&] { return subsets_where(args, [&](ArgSet e) { return conflict_free_unchecked(af, e); }); };

  std::vector<ArgSet> out;
  switch (s) {
    case Semantics::stable:
      out = subsets_where(args, [&](ArgSet e) {
        return conflict_free_unchecked(af, e) && (args - e).is_subset_of(attacked_unchecked(af, e));
      });
      break;
    case Semantics::complete: out = complete(); break;
    case Semantics::grounded: out = minimal(complete()); break;
    case Semantics::preferred: out = maximal(complete()); break;
    case Semantics::semi_stable: out = range_maximal(af, complete()); break;
    case Semantics::ideal: out = maximal_contained_admissible(af, maximal(complete())); break;
    case Semantics::eager: out = maximal_contained_admissible(af, range_maximal(af, complete())); break;
    case Semantics::naive: out = maximal(conflict_free()); break;
    case Semantics::stage: out = range_maximal(af, conflict_free()); break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool credulously_accepted(const ArgFramework& af, Semantics s, ArgId a) {
  auto exts = extensions(af, s);
  return std::any_of(exts.begin(), exts.end(), [&](ArgSet e) { return e.contains(a); });
}

bool sceptically_accepted(const ArgFramework& af, Semantics s, ArgId a) {
  auto exts = extensions(af, s);
  return std::all_of(exts.begin(), exts.end(), [&](ArgSet e) { return e.contains(a); });
}

}  // namespace argdlpa
