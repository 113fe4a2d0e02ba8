#pragma once

// Relational DL-PA semantics over an explicit, small variable set.
// Programs are materialized as full relations and formulas as truth tables, so
// nothing here shares code paths with the streaming evaluator.

#include <bitset>
#include <map>
#include <stdexcept>
#include <vector>

#include "argdlpa/syntax.hpp"
#include "argdlpa/universe.hpp"
#include "argdlpa/valuation.hpp"

namespace argdlpa::testing {

class ReferenceDlpa {
 public:
  static constexpr std::size_t kMaxVars = 8;
  static constexpr std::size_t kMaxWorlds = std::size_t{1} << kMaxVars;
  using Set = std::bitset<kMaxWorlds>;
  using Relation = std::vector<Set>;

  ReferenceDlpa(std::vector<Var> vars, std::size_t universe_size) : vars_(std::move(vars)), n_(universe_size) {
    if (vars_.size() > kMaxVars) throw std::invalid_argument("too many variables for the reference model");
    for (std::size_t i = 0; i < vars_.size(); ++i) bit_[vars_[i]] = i;
    worlds_ = std::size_t{1} << vars_.size();
  }

  [[nodiscard]] std::size_t worlds() const { return worlds_; }

  [[nodiscard]] Valuation valuation(std::size_t world) const {
    Valuation v;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if ((world >> i) & 1U) v.insert(dense_index(vars_[i], n_));
    }
    return v;
  }

  [[nodiscard]] Set truth(const Formula& f) const {
    Set out;
    switch (f.kind()) {
      case FormulaKind::atom: {
        std::size_t b = bit(f.var());
        for (std::size_t w = 0; w < worlds_; ++w) out[w] = (w >> b) & 1U;
        return out;
      }
      case FormulaKind::top: return all();
      case FormulaKind::bottom: return out;
      case FormulaKind::negation: return all() & ~truth(f.operands()[0]);
      case FormulaKind::conjunction:
        out = all();
        for (const auto& g : f.operands()) out &= truth(g);
        return out;
      case FormulaKind::disjunction:
        for (const auto& g : f.operands()) out |= truth(g);
        return out;
      case FormulaKind::implication:
        return (all() & ~truth(f.operands()[0])) | truth(f.operands()[1]);
      case FormulaKind::equivalence: {
        Set a = truth(f.operands()[0]);
        Set b = truth(f.operands()[1]);
        return all() & ~(a ^ b);
      }
      case FormulaKind::box:
      case FormulaKind::diamond: {
        Relation r = relation(f.program());
        Set t = truth(f.operands()[0]);
        bool is_box = f.kind() == FormulaKind::box;
        for (std::size_t w = 0; w < worlds_; ++w) {
          out[w] = is_box ? (r[w] & ~t).none() : (r[w] & t).any();
        }
        return out;
      }
    }
    return out;
  }

  [[nodiscard]] Relation relation(const Program& p) const {
    Relation r(worlds_);
    switch (p.kind()) {
      case ProgramKind::assign_true:
      case ProgramKind::assign_false: {
        std::size_t b = bit(p.var());
        for (std::size_t w = 0; w < worlds_; ++w) {
          std::size_t to = p.kind() == ProgramKind::assign_true ? (w | (std::size_t{1} << b))
                                                               : (w & ~(std::size_t{1} << b));
          r[w][to] = true;
        }
        return r;
      }
      case ProgramKind::test: {
        Set t = truth(p.formula());
        for (std::size_t w = 0; w < worlds_; ++w) r[w][w] = t[w];
        return r;
      }
      case ProgramKind::sequence: {
        Relation a = relation(p.operands()[0]);
        Relation b = relation(p.operands()[1]);
        for (std::size_t w = 0; w < worlds_; ++w) {
          for (std::size_t m = 0; m < worlds_; ++m) {
            if (a[w][m]) r[w] |= b[m];
          }
        }
        return r;
      }
      case ProgramKind::choice: {
        Relation a = relation(p.operands()[0]);
        Relation b = relation(p.operands()[1]);
        for (std::size_t w = 0; w < worlds_; ++w) r[w] = a[w] | b[w];
        return r;
      }
      case ProgramKind::converse: {
        Relation a = relation(p.operands()[0]);
        for (std::size_t w = 0; w < worlds_; ++w) {
          for (std::size_t m = 0; m < worlds_; ++m) {
            if (a[w][m]) r[m][w] = true;
          }
        }
        return r;
      }
    }
    return r;
  }

  // Successor valuations of a world, sorted canonically.
  [[nodiscard]] std::vector<Valuation> successors(std::size_t world, const Program& p) const {
    Relation r = relation(p);
    std::vector<Valuation> out;
    for (std::size_t m = 0; m < worlds_; ++m) {
      if (r[world][m]) out.push_back(valuation(m));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  [[nodiscard]] Set all() const {
    Set s;
    for (std::size_t w = 0; w < worlds_; ++w) s[w] = true;
    return s;
  }
  [[nodiscard]] std::size_t bit(const Var& v) const {
    auto it = bit_.find(v);
    if (it == bit_.end()) throw std::invalid_argument("variable outside the reference model");
    return it->second;
  }

  std::vector<Var> vars_;
  std::size_t n_;
  std::size_t worlds_;
  std::map<Var, std::size_t> bit_;
};

}  // namespace argdlpa::testing
