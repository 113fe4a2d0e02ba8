#include "argdlpa/query.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "argdlpa/errors.hpp"
#include "argdlpa/programs.hpp"

namespace argdlpa {

std::string_view to_string(AcceptanceMode m) {
  switch (m) {
    case AcceptanceMode::nca: return "nca";
    case AcceptanceMode::nsa: return "nsa";
    case AcceptanceMode::pca: return "pca";
    case AcceptanceMode::psa: return "psa";
  }
  return "";
}

std::string_view to_string(ControllabilityMode m) {
  switch (m) {
    case ControllabilityMode::nscon: return "nscon";
    case ControllabilityMode::nccon: return "nccon";
    case ControllabilityMode::pccon: return "pccon";
    case ControllabilityMode::pscon: return "pscon";
  }
  return "";
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::direct: return "direct";
    case Engine::dlpa: return "dlpa";
    case Engine::both: return "both";
  }
  return "";
}

std::optional<AcceptanceMode> parse_acceptance_mode(std::string_view s) {
  for (auto m : kAllAcceptanceModes) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::optional<ControllabilityMode> parse_controllability_mode(std::string_view s) {
  for (auto m : kAllControllabilityModes) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::optional<Engine> parse_engine(std::string_view s) {
  for (auto e : {Engine::direct, Engine::dlpa, Engine::both}) {
    if (to_string(e) == s) return e;
  }
  return std::nullopt;
}

AcceptanceMode inner_mode(ControllabilityMode m) {
  switch (m) {
    case ControllabilityMode::nscon: return AcceptanceMode::nsa;
    case ControllabilityMode::nccon: return AcceptanceMode::nca;
    case ControllabilityMode::pccon: return AcceptanceMode::pca;
    case ControllabilityMode::pscon: return AcceptanceMode::psa;
  }
  return AcceptanceMode::nca;
}

namespace {

void require_in_universe(const Universe& u, ArgId a) {
  if (a >= u.size()) throw DomainError("argument index outside the universe");
}

void require_in_every_completion(const CompletionSet& comps, const Universe& u, ArgId a) {
  for (const auto& c : comps) {
    if (!c.args().contains(a)) {
      throw DomainError("argument " + u.name(a) + " is missing from completion " + to_string(c, u));
    }
  }
}

bool is_existential(AcceptanceMode m) { return m == AcceptanceMode::pca || m == AcceptanceMode::psa; }

// Two-level quantification over completions and their extensions.
QueryResult decide(const CompletionSet& comps, Semantics sem, ArgId a, AcceptanceMode mode) {
  QueryResult r;
  r.engine = Engine::direct;
  switch (mode) {
    case AcceptanceMode::nca:
      r.answer = true;
      for (const auto& c : comps) {
        auto exts = extensions(c, sem);
        if (std::none_of(exts.begin(), exts.end(), [&](ArgSet e) { return e.contains(a); })) {
          r.answer = false;
          r.witness = Witness{c, std::nullopt, std::nullopt};
          break;
        }
      }
      break;
    case AcceptanceMode::nsa:
      r.answer = true;
      for (const auto& c : comps) {
        for (ArgSet e : extensions(c, sem)) {
          if (!e.contains(a)) {
            r.answer = false;
            r.witness = Witness{c, e, std::nullopt};
            break;
          }
        }
        if (!r.answer) break;
      }
      break;
    case AcceptanceMode::pca:
      for (const auto& c : comps) {
        for (ArgSet e : extensions(c, sem)) {
          if (e.contains(a)) {
            r.answer = true;
            r.witness = Witness{c, e, std::nullopt};
            break;
          }
        }
        if (r.answer) break;
      }
      break;
    case AcceptanceMode::psa:
      for (const auto& c : comps) {
        auto exts = extensions(c, sem);
        if (std::all_of(exts.begin(), exts.end(), [&](ArgSet e) { return e.contains(a); })) {
          r.answer = true;
          r.witness = Witness{c, std::nullopt, std::nullopt};
          break;
        }
      }
      break;
  }
  return r;
}

bool verify_inner(const CompletionSet& comps, Semantics sem, ArgId a, AcceptanceMode mode, bool answer,
                  const std::optional<Witness>& w) {
  bool wants_witness = is_existential(mode) == answer;
  if (!wants_witness) return !w.has_value() || (!w->completion && !w->extension);
  if (!w || !w->completion) return false;
  if (std::find(comps.begin(), comps.end(), *w->completion) == comps.end()) return false;
  auto exts = extensions(*w->completion, sem);
  auto has = [&](ArgSet e) { return std::find(exts.begin(), exts.end(), e) != exts.end(); };
  switch (mode) {
    case AcceptanceMode::pca: return w->extension && has(*w->extension) && w->extension->contains(a);
    case AcceptanceMode::nsa: return w->extension && has(*w->extension) && !w->extension->contains(a);
    case AcceptanceMode::psa:
      return std::all_of(exts.begin(), exts.end(), [&](ArgSet e) { return e.contains(a); });
    case AcceptanceMode::nca:
      return std::none_of(exts.begin(), exts.end(), [&](ArgSet e) { return e.contains(a); });
  }
  return false;
}

Formula in_atom(ArgId a) { return Formula::atom(Var::in(a)); }

ArgSet aware_among(const Valuation& v, ArgSet args, std::size_t n) {
  ArgSet out;
  args.for_each([&](ArgId x) {
    if (v.contains(dense_index(Var::aw(x), n))) out.insert(x);
  });
  return out;
}

}  // namespace

void check_acceptance_precondition(const Structure& s, const Universe& u, ArgId a) {
  require_in_universe(u, a);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Iaf> || std::is_same_v<T, Riaf>) {
          if (!x.fixed_args.contains(a)) throw DomainError("argument " + u.name(a) + " is not a fixed argument");
        } else {
          require_in_every_completion(completions_direct(x), u, a);
        }
      },
      s);
}

void check_controllability_precondition(const Control& c, const Universe& u, ArgId a) {
  require_in_universe(u, a);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Caf>) {
          if (!x.fixed_args.contains(a)) throw DomainError("argument " + u.name(a) + " is not a fixed argument");
        } else {
          if (!x.static_args.contains(a)) throw DomainError("argument " + u.name(a) + " is not a static argument");
          require_in_every_completion(completions_direct(Ciaf{x.static_args, x.constraint}), u, a);
        }
      },
      c);
}

QueryResult acceptance_direct(const Structure& s, const Universe& u, Semantics sem, ArgId a, AcceptanceMode mode) {
  check_acceptance_precondition(s, u, a);
  return decide(completions_direct(s), sem, a, mode);
}

QueryResult controllability_direct(const Control& c, const Universe& u, Semantics sem, ArgId a,
                                   ControllabilityMode mode) {
  check_controllability_precondition(c, u, a);
  for (const auto& cfg : configurations(c)) {
    QueryResult inner = decide(completions_direct(under_configuration(c, cfg)), sem, a, inner_mode(mode));
    if (inner.answer) {
      QueryResult r;
      r.answer = true;
      r.engine = Engine::direct;
      Witness w = inner.witness.value_or(Witness{});
      w.configuration = cfg;
      r.witness = w;
      return r;
    }
  }
  return {false, std::nullopt, Engine::direct};
}

Formula acceptance_formula(const Program& comp, const Program& ext, ArgId a, AcceptanceMode mode) {
  switch (mode) {
    case AcceptanceMode::nsa: return Formula::box(Program::sequence(comp, ext), in_atom(a));
    case AcceptanceMode::nca: return Formula::box(comp, Formula::diamond(ext, in_atom(a)));
    case AcceptanceMode::pca: return Formula::diamond(Program::sequence(comp, ext), in_atom(a));
    case AcceptanceMode::psa: return Formula::diamond(comp, Formula::box(ext, in_atom(a)));
  }
  return Formula::bottom();
}

Formula controllability_formula(const Program& control, const Program& comp, const Program& ext, ArgId a,
                                ControllabilityMode mode) {
  switch (mode) {
    case ControllabilityMode::nscon:
      return Formula::diamond(control, Formula::box(Program::sequence(comp, ext), in_atom(a)));
    case ControllabilityMode::nccon:
      return Formula::diamond(control, Formula::box(comp, Formula::diamond(ext, in_atom(a))));
    case ControllabilityMode::pccon:
      return Formula::diamond(Program::sequence(Program::sequence(control, comp), ext), in_atom(a));
    case ControllabilityMode::pscon:
      return Formula::diamond(Program::sequence(control, comp), Formula::box(ext, in_atom(a)));
  }
  return Formula::bottom();
}

DlpaEngine::DlpaEngine(std::size_t n)
    : n_(n), ctx_(std::make_shared<const EncodingContext>(n)), evaluator_(n) {}

bool DlpaEngine::inner_answer(const Valuation& v, const Program& comp, Semantics sem, ArgId a, AcceptanceMode mode) {
  return evaluator_.eval(v, acceptance_formula(comp, ctx_->make_ext(sem), a, mode));
}

std::optional<Witness> DlpaEngine::inner_witness(const Valuation& v, const Program& comp, Semantics sem, ArgId a,
                                                 AcceptanceMode mode, bool answer) {
  if (is_existential(mode) != answer) return std::nullopt;
  const Program& ext = ctx_->make_ext(sem);
  const std::size_t in_a = dense_index(Var::in(a), n_);
  for (const auto& s : evaluator_.successors(v, comp)) {
    switch (mode) {
      case AcceptanceMode::pca:
      case AcceptanceMode::nsa: {
        bool want_in = mode == AcceptanceMode::pca;
        for (const auto& e : evaluator_.successors(s, ext)) {
          if (e.contains(in_a) == want_in) {
            return Witness{af_of_valuation(s, n_), ext_of_valuation(e, n_), std::nullopt};
          }
        }
        break;
      }
      case AcceptanceMode::psa:
        if (evaluator_.eval(s, Formula::box(ext, in_atom(a)))) return Witness{af_of_valuation(s, n_), {}, {}};
        break;
      case AcceptanceMode::nca:
        if (!evaluator_.eval(s, Formula::diamond(ext, in_atom(a)))) return Witness{af_of_valuation(s, n_), {}, {}};
        break;
    }
  }
  return std::nullopt;
}

QueryResult DlpaEngine::acceptance(const Structure& s, const Universe& u, Semantics sem, ArgId a,
                                   AcceptanceMode mode) {
  check_acceptance_precondition(s, u, a);
  Valuation start = valuation_of(s, n_);
  Program comp = make_comp(s);
  QueryResult r;
  r.engine = Engine::dlpa;
  r.answer = inner_answer(start, comp, sem, a, mode);
  r.witness = inner_witness(start, comp, sem, a, mode, r.answer);
  return r;
}

QueryResult DlpaEngine::controllability(const Control& c, const Universe& u, Semantics sem, ArgId a,
                                        ControllabilityMode mode) {
  check_controllability_precondition(c, u, a);
  Valuation start = valuation_of(c, n_);
  Program control = control_program(c);
  Program comp = make_comp(c);
  QueryResult r;
  r.engine = Engine::dlpa;
  r.answer = evaluator_.eval(start, controllability_formula(control, comp, ctx_->make_ext(sem), a, mode));
  if (!r.answer) return r;
  AcceptanceMode im = inner_mode(mode);
  for (const auto& v : evaluator_.successors(start, control)) {
    if (!inner_answer(v, comp, sem, a, im)) continue;
    Witness w = inner_witness(v, comp, sem, a, im, true).value_or(Witness{});
    w.configuration = ControlConfiguration{aware_among(v, control_args(c), n_)};
    r.witness = w;
    break;
  }
  return r;
}

QueryResult acceptance_dlpa(const Structure& s, const Universe& u, Semantics sem, ArgId a, AcceptanceMode mode) {
  DlpaEngine engine(u.size());
  return engine.acceptance(s, u, sem, a, mode);
}

QueryResult controllability_dlpa(const Control& c, const Universe& u, Semantics sem, ArgId a,
                                 ControllabilityMode mode) {
  DlpaEngine engine(u.size());
  return engine.controllability(c, u, sem, a, mode);
}

namespace {

template <typename F>
std::pair<QueryResult, double> timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  QueryResult r = f();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return {r, dt.count()};
}

template <typename D, typename L>
CrossCheckReport run_both(D&& direct, L&& dlpa, const Universe& u) {
  auto fd = std::async(std::launch::async, [&] { return timed(direct); });
  auto fl = std::async(std::launch::async, [&] { return timed(dlpa); });
  auto [rd, td] = fd.get();
  auto [rl, tl] = fl.get();
  if (rd.answer != rl.answer) {
    throw EngineDisagreement("engines disagree: direct says " + describe(rd, u) + "; dlpa says " + describe(rl, u));
  }
  return {rd, rl, td, tl};
}

}  // namespace

CrossCheckReport cross_check(const Structure& s, const Universe& u, Semantics sem, ArgId a, AcceptanceMode mode) {
  check_acceptance_precondition(s, u, a);
  return run_both([&] { return acceptance_direct(s, u, sem, a, mode); },
                  [&] { return acceptance_dlpa(s, u, sem, a, mode); }, u);
}

CrossCheckReport cross_check(const Control& c, const Universe& u, Semantics sem, ArgId a, ControllabilityMode mode) {
  check_controllability_precondition(c, u, a);
  return run_both([&] { return controllability_direct(c, u, sem, a, mode); },
                  [&] { return controllability_dlpa(c, u, sem, a, mode); }, u);
}

bool verify_witness(const Structure& s, Semantics sem, ArgId a, AcceptanceMode mode, const QueryResult& r) {
  if (r.witness && r.witness->configuration) return false;
  return verify_inner(completions_direct(s), sem, a, mode, r.answer, r.witness);
}

bool verify_witness(const Control& c, Semantics sem, ArgId a, ControllabilityMode mode, const QueryResult& r) {
  if (!r.answer) return !r.witness.has_value();
  if (!r.witness || !r.witness->configuration) return false;
  const auto& cfg = *r.witness->configuration;
  if (!cfg.chosen.is_subset_of(control_args(c))) return false;
  CompletionSet comps = completions_direct(under_configuration(c, cfg));
  AcceptanceMode im = inner_mode(mode);
  if (!decide(comps, sem, a, im).answer) return false;
  Witness inner = *r.witness;
  inner.configuration.reset();
  std::optional<Witness> w;
  if (inner.completion || inner.extension) w = inner;
  return verify_inner(comps, sem, a, im, true, w);
}

std::string describe(const QueryResult& r, const Universe& u) {
  std::string out = r.answer ? "yes" : "no";
  if (r.witness) {
    if (r.witness->configuration) out += "; configuration " + u.set_string(r.witness->configuration->chosen);
    if (r.witness->completion) out += "; completion " + to_string(*r.witness->completion, u);
    if (r.witness->extension) out += "; extension " + u.set_string(*r.witness->extension);
  }
  return out;
}

}  // namespace argdlpa
