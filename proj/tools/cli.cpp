#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "argdlpa/encodings.hpp"
#include "argdlpa/errors.hpp"
#include "argdlpa/framework_file.hpp"
#include "argdlpa/parser.hpp"
#include "argdlpa/random.hpp"
#include "argdlpa/result_document.hpp"

namespace argdlpa::cli {

namespace {

struct Options {
  std::string format = "text";
  bool timings = false;

  std::string file;
  std::string sem;
  std::string arg;
  std::string mode;
  std::string engine;
  std::string cfg;
  std::string formula;
  std::string program;
  std::string valuation;
  std::string universe;
  std::string enforce;
  bool count_only = false;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t universe_size = 0;
  EncodingBounds bounds;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Semantics semantics_of(const std::string& s) {
  if (auto v = parse_semantics(s)) return *v;
  throw CLI::ValidationError("--sem", "unknown semantics '" + s + "'");
}

std::string file_label(const std::string& path) { return std::filesystem::path(path).filename().string(); }

std::optional<ControlConfiguration> cfg_of(const Options& o, const Universe& u) {
  if (o.cfg.empty()) return std::nullopt;
  if (o.cfg == "{}" || o.cfg == "-") return ControlConfiguration{};
  std::string_view body = o.cfg;
  if (body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  return ControlConfiguration{u.parse_set(body)};
}

// Splits a comma list at depth zero, so att(a,b) stays whole.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' && depth == 0) || c == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<Var> parse_vars(std::string_view text, Universe& u, NamePolicy policy) {
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  std::vector<Var> vars;
  for (const auto& item : split_top(text)) {
    Formula f = parse_formula(item, u, policy);
    if (f.kind() != FormulaKind::atom) throw InvariantError("'" + item + "' is not a propositional variable");
    vars.push_back(f.var());
  }
  return vars;
}

std::string valuation_string(const Valuation& v, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (auto i : v.indices()) {
    out += (first ? "" : ",") + u.var_name(var_from_index(i, u.size()));
    first = false;
  }
  return out + "}";
}

FrameworkFile load(const Options& o) { return load_framework(o.file); }

Engine engine_of(const std::string& s, const char* flag) {
  if (auto e = parse_engine(s)) return *e;
  throw CLI::ValidationError(flag, "unknown engine '" + s + "'");
}

void put_query_result(ResultDocument& doc, const QueryResult& r, const Universe& u) {
  doc.set_answer(r.answer);
  if (r.witness) doc.set("witness", witness_json(*r.witness, u));
}

int cmd_extensions(const Options& o, ResultDocument& doc) {
  FrameworkFile f = load(o);
  const auto* af = std::get_if<ArgFramework>(&f.structure);
  if (!af) throw DomainError("extensions needs a plain AF file, got kind " + std::string(to_string(f.kind)));
  Semantics s = semantics_of(o.sem);
  std::string engine = o.engine.empty() ? "oracle" : o.engine;
  if (engine != "oracle" && engine != "dlpa" && engine != "both") {
    throw CLI::ValidationError("--engine", "unknown engine '" + engine + "'");
  }
  doc.echo("engine", engine);
  doc.echo("file", file_label(o.file));
  doc.echo("sem", std::string(to_string(s)));

  std::optional<std::vector<ArgSet>> oracle, dlpa;
  if (engine != "dlpa") {
    Timer t;
    oracle = extensions(*af, s);
    if (o.timings) doc.set_timing("oracle", t.seconds());
  }
  if (engine != "oracle") {
    std::size_t n = f.universe.size();
    std::size_t bound = o.bounds.for_semantics(s);
    if (n > bound) {
      throw ResourceError("universe of " + std::to_string(n) + " arguments exceeds the " + std::string(to_string(s)) +
                          " encoding bound of " + std::to_string(bound));
    }
    Timer t;
    EncodingContext ctx(n);
    Evaluator ev(n);
    dlpa = encoded_extensions(*af, s, ctx, ev);
    if (o.timings) doc.set_timing("dlpa", t.seconds());
  }
  if (oracle && dlpa && *oracle != *dlpa) {
    throw EngineDisagreement("oracle gives " + sets_json(*oracle, f.universe).dump() + ", DL-PA gives " +
                             sets_json(*dlpa, f.universe).dump());
  }
  doc.set("extensions", sets_json(oracle ? *oracle : *dlpa, f.universe));
  return kYes;
}

int cmd_completions(const Options& o, ResultDocument& doc) {
  FrameworkFile f = load(o);
  Engine engine = o.engine.empty() ? Engine::direct : engine_of(o.engine, "--engine");
  auto cfg = cfg_of(o, f.universe);
  ConstraintTarget target = as_constraint_target(f, cfg);
  doc.echo("engine", std::string(to_string(engine)));
  doc.echo("file", file_label(o.file));
  if (cfg) doc.echo("cfg", f.universe.set_string(cfg->chosen));

  std::optional<CompletionSet> direct, dlpa;
  if (engine != Engine::dlpa) {
    Timer t;
    direct = completions_direct(target);
    if (o.timings) doc.set_timing("direct", t.seconds());
  }
  if (engine != Engine::direct) {
    Timer t;
    std::size_t n = f.universe.size();
    Evaluator ev(n);
    auto cp = completion_program(target, n);
    dlpa = afs_of_successors(cp.start, cp.program, ev);
    if (o.timings) doc.set_timing("dlpa", t.seconds());
  }
  if (direct && dlpa && *direct != *dlpa) {
    throw EngineDisagreement("direct enumeration finds " + std::to_string(direct->size()) +
                             " completions, DL-PA finds " + std::to_string(dlpa->size()));
  }
  const CompletionSet& comps = direct ? *direct : *dlpa;
  doc.set("count", comps.size());
  if (!o.count_only) doc.set("completions", afs_json(comps, f.universe), TextStyle::lines);
  return kYes;
}

AcceptanceMode acceptance_mode_of(const std::string& s) {
  if (auto m = parse_acceptance_mode(s)) return *m;
  throw CLI::ValidationError("--mode", "unknown mode '" + s + "'");
}

ControllabilityMode controllability_mode_of(const std::string& s) {
  if (auto m = parse_controllability_mode(s)) return *m;
  throw CLI::ValidationError("--mode", "unknown mode '" + s + "'");
}

int cmd_query(const Options& o, ResultDocument& doc) {
  FrameworkFile f = load(o);
  Semantics s = semantics_of(o.sem);
  AcceptanceMode mode = acceptance_mode_of(o.mode);
  Engine engine = o.engine.empty() ? Engine::direct : engine_of(o.engine, "--engine");
  doc.echo("arg", o.arg);
  doc.echo("engine", std::string(to_string(engine)));
  doc.echo("file", file_label(o.file));
  doc.echo("mode", std::string(to_string(mode)));
  doc.echo("sem", std::string(to_string(s)));
  Structure st = as_structure(f);
  ArgId a = f.universe.at(o.arg);
  QueryResult r;
  if (engine == Engine::both) {
    auto rep = cross_check(st, f.universe, s, a, mode);
    r = rep.direct;
    if (o.timings) {
      doc.set_timing("direct", rep.direct_seconds);
      doc.set_timing("dlpa", rep.dlpa_seconds);
    }
  } else {
    Timer t;
    r = engine == Engine::direct ? acceptance_direct(st, f.universe, s, a, mode)
                                 : acceptance_dlpa(st, f.universe, s, a, mode);
    if (o.timings) doc.set_timing(std::string(to_string(engine)), t.seconds());
  }
  put_query_result(doc, r, f.universe);
  return r.answer ? kYes : kNo;
}

int cmd_control(const Options& o, ResultDocument& doc) {
  FrameworkFile f = load(o);
  Semantics s = semantics_of(o.sem);
  ControllabilityMode mode = controllability_mode_of(o.mode);
  Engine engine = o.engine.empty() ? Engine::direct : engine_of(o.engine, "--engine");
  doc.echo("arg", o.arg);
  doc.echo("engine", std::string(to_string(engine)));
  doc.echo("file", file_label(o.file));
  doc.echo("mode", std::string(to_string(mode)));
  doc.echo("sem", std::string(to_string(s)));
  Control c = as_control(f);
  ArgId a = f.universe.at(o.arg);
  QueryResult r;
  if (engine == Engine::both) {
    auto rep = cross_check(c, f.universe, s, a, mode);
    r = rep.direct;
    if (o.timings) {
      doc.set_timing("direct", rep.direct_seconds);
      doc.set_timing("dlpa", rep.dlpa_seconds);
    }
  } else {
    Timer t;
    r = engine == Engine::direct ? controllability_direct(c, f.universe, s, a, mode)
                                 : controllability_dlpa(c, f.universe, s, a, mode);
    if (o.timings) doc.set_timing(std::string(to_string(engine)), t.seconds());
  }
  put_query_result(doc, r, f.universe);
  return r.answer ? kYes : kNo;
}

int cmd_settle(const Options& o, std::ostream& out, OutputFormat format) {
  FrameworkFile f = load(o);
  const auto* iaf = std::get_if<Iaf>(&f.structure);
  if (!iaf) throw DomainError("settle needs an iaf file, got kind " + std::string(to_string(f.kind)));
  FrameworkFile settled{FrameworkKind::iaf, f.universe, settle(*iaf, f.universe.at(o.arg))};
  std::string text = write_framework(settled);
  if (format == OutputFormat::json) {
    ResultDocument doc("settle");
    doc.echo("arg", o.arg);
    doc.echo("file", file_label(o.file));
    doc.set("framework", text);
    out << doc.to_json();
  } else {
    out << text;
  }
  return kYes;
}

int cmd_constraint(const Options& o, ResultDocument& doc) {
  FrameworkFile f = load(o);
  Universe u = f.universe;
  Formula phi = parse_formula(o.formula, u, NamePolicy::strict);
  ConstraintMode mode;
  if (o.mode == "possible") {
    mode = ConstraintMode::possible;
  } else if (o.mode == "necessary") {
    mode = ConstraintMode::necessary;
  } else {
    throw CLI::ValidationError("--mode", "expected possible or necessary");
  }
  Engine engine = o.engine.empty() ? Engine::dlpa : engine_of(o.engine, "--engine");
  doc.echo("engine", std::string(to_string(engine)));
  doc.echo("file", file_label(o.file));
  doc.echo("formula", print(phi, u));
  doc.echo("mode", o.mode);
  std::size_t n = u.size();

  auto run = [&](bool use_dlpa) {
    if (!o.enforce.empty()) {
      const auto* iaf = std::get_if<Iaf>(&f.structure);
      if (!iaf) throw DomainError("--enforce-aw needs an iaf file");
      ArgId a = u.at(o.enforce);
      return use_dlpa ? check_enforcement(*iaf, a, phi, mode, n) : check_enforcement_direct(*iaf, a, phi, mode, n);
    }
    ConstraintTarget t = as_constraint_target(f, cfg_of(o, u));
    return use_dlpa ? check_structural_constraint(t, phi, mode, n)
                    : check_structural_constraint_direct(t, phi, mode, n);
  };
  if (!o.enforce.empty()) doc.echo("enforce_aw", o.enforce);
  if (!o.cfg.empty()) doc.echo("cfg", o.cfg);

  std::optional<bool> direct, dlpa;
  if (engine != Engine::dlpa) direct = run(false);
  if (engine != Engine::direct) dlpa = run(true);
  if (direct && dlpa && *direct != *dlpa) {
    throw EngineDisagreement(std::string("direct filtering says ") + (*direct ? "yes" : "no") + ", DL-PA says " +
                             (*dlpa ? "yes" : "no"));
  }
  bool answer = direct ? *direct : *dlpa;
  doc.set_answer(answer);
  return answer ? kYes : kNo;
}

Universe universe_of(const Options& o) {
  if (o.universe.empty()) return {};
  std::vector<std::string> names;
  for (const auto& s : split_top(o.universe)) names.push_back(s);
  return Universe(std::move(names));
}

NamePolicy policy_of(const Options& o) { return o.universe.empty() ? NamePolicy::intern : NamePolicy::strict; }

int cmd_mc(const Options& o, ResultDocument& doc) {
  Universe u = universe_of(o);
  auto vars = parse_vars(o.valuation, u, policy_of(o));
  Formula phi = parse_formula(o.formula, u, policy_of(o));
  std::size_t n = u.size();
  Valuation v = valuation_of_vars(vars, n);
  Evaluator ev(n);
  bool answer = ev.eval(v, phi);
  doc.echo("formula", print(phi, u));
  doc.echo("valuation", valuation_string(v, u));
  doc.set_answer(answer);
  return answer ? kYes : kNo;
}

int cmd_mc_successors(const Options& o, ResultDocument& doc) {
  Universe u = universe_of(o);
  auto vars = parse_vars(o.valuation, u, policy_of(o));
  Program p = parse_program(o.program, u, policy_of(o));
  std::size_t n = u.size();
  Valuation v = valuation_of_vars(vars, n);
  Evaluator ev(n);
  nlohmann::json succ = nlohmann::json::array();
  auto all = ev.successors(v, p);
  for (const auto& s : all) succ.push_back(valuation_string(s, u));
  doc.echo("program", print(p, u));
  doc.echo("valuation", valuation_string(v, u));
  doc.set("count", all.size());
  doc.set("successors", succ, TextStyle::lines);
  return kYes;
}

int cmd_check_encoding(const Options& o, ResultDocument& doc) {
  Semantics s = semantics_of(o.sem);
  std::size_t n = o.universe_size;
  std::size_t bound = o.bounds.for_semantics(s);
  if (n == 0) throw CLI::ValidationError("--universe-size", "must be positive");
  if (n > bound) {
    throw ResourceError("universe of " + std::to_string(n) + " arguments exceeds the " + std::string(to_string(s)) +
                        " encoding bound of " + std::to_string(bound));
  }
  bool exhaustive = o.exhaustive || o.samples == 0;
  doc.echo("sem", std::string(to_string(s)));
  doc.echo("universe_size", n);
  Universe u = Universe::letters(n);
  EncodingContext ctx(n);
  Evaluator ev(n);
  ArgSet all = ArgSet::first_n(n);
  std::size_t checked = 0;
  std::optional<std::pair<ArgFramework, EncodingReport>> mismatch;
  auto check = [&](const ArgFramework& af) {
    ++checked;
    EncodingReport rep{false, extensions(af, s), encoded_extensions(af, s, ctx, ev)};
    rep.agrees = rep.oracle == rep.encoding;
    if (!rep.agrees && !mismatch) mismatch.emplace(af, std::move(rep));
  };
  Timer t;
  if (exhaustive) {
    if (n * n > 20) throw ResourceError("exhaustive check over " + std::to_string(n) + " arguments is too large");
    doc.echo("exhaustive", true);
    std::vector<Attack> pairs;
    for (ArgId x = 0; x < n; ++x) {
      for (ArgId y = 0; y < n; ++y) pairs.emplace_back(x, y);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      AttackSet atts;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) atts.insert(pairs[i]);
      }
      check(ArgFramework(all, atts));
    }
  } else {
    doc.echo("samples", o.samples);
    doc.set_seed(o.seed);
    Random rng(o.seed);
    for (std::size_t i = 0; i < o.samples; ++i) check(random_af(all, rng));
  }
  if (o.timings) doc.set_timing("check", t.seconds());
  doc.set("checked", checked);
  if (mismatch) {
    doc.set("mismatch", to_string(mismatch->first, u));
    doc.set("mismatch_oracle", sets_json(mismatch->second.oracle, u));
    doc.set("mismatch_encoding", sets_json(mismatch->second.encoding, u));
  }
  doc.set_answer(!mismatch);
  return mismatch ? kNo : kYes;
}

int cmd_expressivity(ResultDocument& doc) {
  Ciaf target = one_way_attack_ciaf();
  CompletionSet comps = completions_direct(target);
  Ciaf rebuilt = ciaf_from_completion_set(comps, 2);
  bool reproduced = completions_direct(rebuilt) == comps;
  bool inexpressible = riaf_inexpressibility_check();
  Universe u = Universe::letters(2);
  doc.set("target", afs_json(comps, u));
  doc.set("riaf_found", !inexpressible);
  doc.set("ciaf_reproduces", reproduced);
  doc.set_answer(inexpressible && reproduced);
  return inexpressible && reproduced ? kYes : kNo;
}

void add_file(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "Framework file")->required()->check(CLI::ExistingFile);
}

void add_sem(CLI::App* sub, Options& o) {
  sub->add_option("--sem", o.sem, "Semantics: st co gr pr se id ea na stg")->required();
}

void add_bounds(CLI::App* sub, Options& o) {
  sub->add_option("--bound-basic", o.bounds.basic, "Largest universe for st/co/gr/pr/na encodings")
      ->capture_default_str();
  sub->add_option("--bound-range", o.bounds.range_based, "Largest universe for se/stg encodings")
      ->capture_default_str();
  sub->add_option("--bound-nested", o.bounds.nested, "Largest universe for id/ea encodings")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reasoning about argumentation frameworks under uncertainty with DL-PA", "argdlpa"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--timings", o.timings, "Include engine timings in the output");
  app.set_version_flag("--version", std::string(version()));

  auto* ext = app.add_subcommand("extensions", "Extensions of a plain AF");
  add_file(ext, o);
  add_sem(ext, o);
  ext->add_option("--engine", o.engine, "oracle, dlpa or both")->check(CLI::IsMember({"oracle", "dlpa", "both"}));
  add_bounds(ext, o);

  auto* comp = app.add_subcommand("completions", "Completions of an uncertain framework");
  add_file(comp, o);
  comp->add_option("--engine", o.engine, "direct, dlpa or both")->check(CLI::IsMember({"direct", "dlpa", "both"}));
  comp->add_flag("--count-only", o.count_only, "Print only the number of completions");
  comp->add_option("--cfg", o.cfg, "Control configuration, e.g. b,d");

  auto* query = app.add_subcommand("query", "Acceptance query");
  add_file(query, o);
  add_sem(query, o);
  query->add_option("--arg", o.arg, "Queried argument")->required();
  query->add_option("--mode", o.mode, "nca, nsa, pca or psa")->required();
  query->add_option("--engine", o.engine, "direct, dlpa or both")->check(CLI::IsMember({"direct", "dlpa", "both"}));

  auto* control = app.add_subcommand("control", "Controllability query");
  add_file(control, o);
  add_sem(control, o);
  control->add_option("--arg", o.arg, "Queried argument")->required();
  control->add_option("--mode", o.mode, "nscon, nccon, pccon or pscon")->required();
  control->add_option("--engine", o.engine, "direct, dlpa or both")->check(CLI::IsMember({"direct", "dlpa", "both"}));

  auto* settle_cmd = app.add_subcommand("settle", "Make an uncertain argument fixed");
  add_file(settle_cmd, o);
  settle_cmd->add_option("--arg", o.arg, "Uncertain argument")->required();

  auto* cc = app.add_subcommand("constraint-check", "Possible or necessary structural constraint");
  add_file(cc, o);
  cc->add_option("--formula", o.formula, "Boolean formula over aw/att")->required();
  cc->add_option("--mode", o.mode, "possible or necessary")->required();
  cc->add_option("--enforce-aw", o.enforce, "Check after making this argument fixed");
  cc->add_option("--cfg", o.cfg, "Control configuration for caf/cciaf files");
  cc->add_option("--engine", o.engine, "direct, dlpa or both")->check(CLI::IsMember({"direct", "dlpa", "both"}));

  auto* mc = app.add_subcommand("mc", "Evaluate a formula at a valuation");
  mc->add_option("--valuation", o.valuation, "True variables, e.g. aw(a),att(a,b)")->required();
  mc->add_option("--formula", o.formula, "Formula")->required();
  mc->add_option("--universe", o.universe, "Argument names in index order");

  auto* mcs = app.add_subcommand("mc-successors", "Successor valuations of a program");
  mcs->add_option("--valuation", o.valuation, "True variables")->required();
  mcs->add_option("--program", o.program, "Program")->required();
  mcs->add_option("--universe", o.universe, "Argument names in index order");

  auto* ce = app.add_subcommand("check-encoding", "Compare encoded extensions with the oracle");
  ce->add_option("--universe-size", o.universe_size, "Number of arguments")->required();
  add_sem(ce, o);
  auto* exh = ce->add_flag("--exhaustive", o.exhaustive, "Every attack relation over the universe");
  ce->add_option("--samples", o.samples, "Number of random frameworks")->excludes(exh);
  ce->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  add_bounds(ce, o);

  auto* expr = app.add_subcommand("expressivity-check", "rIAFs cannot express the one-way-attack cIAF");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  OutputFormat format = o.format == "json" ? OutputFormat::json : OutputFormat::text;
  try {
    if (settle_cmd->parsed()) return cmd_settle(o, out, format);
    CLI::App* sub = app.get_subcommands().front();
    ResultDocument doc(sub->get_name());
    int code = kYes;
    if (sub == ext) code = cmd_extensions(o, doc);
    if (sub == comp) code = cmd_completions(o, doc);
    if (sub == query) code = cmd_query(o, doc);
    if (sub == control) code = cmd_control(o, doc);
    if (sub == cc) code = cmd_constraint(o, doc);
    if (sub == mc) code = cmd_mc(o, doc);
    if (sub == mcs) code = cmd_mc_successors(o, doc);
    if (sub == ce) code = cmd_check_encoding(o, doc);
    if (sub == expr) code = cmd_expressivity(doc);
    out << doc.render(format);
    return code;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EngineDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kDisagreement;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << '\n';
    return kInvariant;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvariant;
  }
}

}  // namespace argdlpa::cli
