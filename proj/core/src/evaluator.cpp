#include "argdlpa/evaluator.hpp"

#include <algorithm>

namespace argdlpa {

Evaluator::Evaluator(std::size_t universe_size, EvaluatorOptions options) : n_(universe_size), options_(options) {}

void Evaluator::clear_cache() {
  formula_reads_.clear();
  footprints_[0].clear();
  footprints_[1].clear();
  memo_.clear();
  pinned_.clear();
}

// Cache entries are keyed by node address, so every tree seen must stay alive.
void Evaluator::pin(std::shared_ptr<const void> root) {
  if (!pinned_.empty() && pinned_.back() == root) return;
  if (pinned_.size() > 4096) clear_cache();
  pinned_.push_back(std::move(root));
}

bool Evaluator::eval(const Valuation& v, const Formula& f) {
  pin(f.shared());
  return eval_node(v, f);
}

std::vector<Valuation> Evaluator::successors(const Valuation& v, const Program& p) {
  pin(p.shared());
  return materialize(v, p, false);
}

bool Evaluator::visit_successors(const Valuation& v, const Program& p, const Callback& cb) {
  pin(p.shared());
  return visit(v, p, false, cb);
}

bool Evaluator::eval_node(const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::atom: return v.contains(index(f.var()));
    case FormulaKind::top: return true;
    case FormulaKind::bottom: return false;
    case FormulaKind::negation: return !eval_node(v, f.operands()[0]);
    case FormulaKind::conjunction:
      for (const auto& g : f.operands()) {
        if (!eval_node(v, g)) return false;
      }
      return true;
    case FormulaKind::disjunction:
      for (const auto& g : f.operands()) {
        if (eval_node(v, g)) return true;
      }
      return false;
    case FormulaKind::implication: return !eval_node(v, f.operands()[0]) || eval_node(v, f.operands()[1]);
    case FormulaKind::equivalence: return eval_node(v, f.operands()[0]) == eval_node(v, f.operands()[1]);
    case FormulaKind::box:
    case FormulaKind::diamond: break;
  }

  const bool is_box = f.kind() == FormulaKind::box;
  MemoKey key{f.node(), {}};
  if (options_.memoize) {
    key.masked = v & formula_reads(f);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
  }
  ++stats_.modal_evaluations;
  const Formula& body = f.operands()[0];
  bool found = false;
  visit(v, f.program(), false, [&](const Valuation& s) {
    if (eval_node(s, body) != is_box) {
      found = true;
      return false;
    }
    return true;
  });
  // Box holds iff no successor falsifies the body; diamond iff some successor satisfies it.
  bool result = is_box ? !found : found;
  if (options_.memoize) memo_.emplace(std::move(key), result);
  return result;
}

bool Evaluator::visit(const Valuation& v, const Program& p, bool inverted, const Callback& cb) {
  switch (p.kind()) {
    case ProgramKind::assign_true: {
      std::size_t i = index(p.var());
      if (!inverted) return cb(v.with(i));
      if (!v.contains(i)) return true;
      return cb(v) && cb(v.without(i));
    }
    case ProgramKind::assign_false: {
      std::size_t i = index(p.var());
      if (!inverted) return cb(v.without(i));
      if (v.contains(i)) return true;
      return cb(v) && cb(v.with(i));
    }
    case ProgramKind::test:
      if (eval_node(v, p.formula())) return cb(v);
      return true;
    case ProgramKind::sequence: {
      const Program& first = p.operands()[inverted ? 1 : 0];
      const Program& second = p.operands()[inverted ? 0 : 1];
      for (const auto& mid : materialize(v, first, inverted)) {
        if (!visit(mid, second, inverted, cb)) return false;
      }
      return true;
    }
    case ProgramKind::choice:
      return visit(v, p.operands()[0], inverted, cb) && visit(v, p.operands()[1], inverted, cb);
    case ProgramKind::converse: return visit(v, p.operands()[0], !inverted, cb);
  }
  return true;
}

std::vector<Valuation> Evaluator::materialize(const Valuation& v, const Program& p, bool inverted) {
  std::vector<Valuation> out;
  visit(v, p, inverted, [&](const Valuation& s) {
    out.push_back(s);
    return true;
  });
  sort_unique(out);
  return out;
}

const Valuation& Evaluator::formula_reads(const Formula& f) {
  auto it = formula_reads_.find(f.node());
  if (it != formula_reads_.end()) return it->second;
  Valuation reads;
  switch (f.kind()) {
    case FormulaKind::atom: reads.insert(index(f.var())); break;
    case FormulaKind::top:
    case FormulaKind::bottom: break;
    case FormulaKind::box:
    case FormulaKind::diamond: {
      const Footprint& fp = program_footprint(f.program(), false);
      reads = fp.reads | (formula_reads(f.operands()[0]) - fp.writes);
      break;
    }
    default:
      for (const auto& g : f.operands()) reads = reads | formula_reads(g);
  }
  return formula_reads_.emplace(f.node(), std::move(reads)).first->second;
}

// reads: variables whose input value can influence the outcome; always includes writes \ must.
// writes: variables that may change; must: variables every successor overwrites.
const Evaluator::Footprint& Evaluator::program_footprint(const Program& p, bool inverted) {
  auto& cache = footprints_[inverted ? 1 : 0];
  auto it = cache.find(p.node());
  if (it != cache.end()) return it->second;
  Footprint fp;
  switch (p.kind()) {
    case ProgramKind::assign_true:
    case ProgramKind::assign_false: {
      std::size_t i = index(p.var());
      fp.writes.insert(i);
      if (inverted) {
        fp.reads.insert(i);
      } else {
        fp.must.insert(i);
      }
      break;
    }
    case ProgramKind::test: fp.reads = formula_reads(p.formula()); break;
    case ProgramKind::sequence: {
      Footprint a = program_footprint(p.operands()[inverted ? 1 : 0], inverted);
      const Footprint& b = program_footprint(p.operands()[inverted ? 0 : 1], inverted);
      fp.reads = a.reads | (b.reads - a.writes);
      fp.writes = a.writes | b.writes;
      fp.must = a.must | b.must;
      break;
    }
    case ProgramKind::choice: {
      Footprint a = program_footprint(p.operands()[0], inverted);
      const Footprint& b = program_footprint(p.operands()[1], inverted);
      fp.writes = a.writes | b.writes;
      fp.must = a.must & b.must;
      fp.reads = a.reads | b.reads | (fp.writes - fp.must);
      break;
    }
    case ProgramKind::converse: fp = program_footprint(p.operands()[0], !inverted); break;
  }
  return cache.emplace(p.node(), std::move(fp)).first->second;
}

}  // namespace argdlpa
