#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "argdlpa/syntax.hpp"
#include "argdlpa/valuation.hpp"

namespace argdlpa {

struct EvaluatorOptions {
  // Cache results of modal subformulas keyed on the variables they can observe.
  bool memoize = true;
};

struct EvaluatorStats {
  std::size_t modal_evaluations = 0;
  std::size_t memo_hits = 0;
};

// Model checker for star-free DL-PA with converse over a universe of the given size.
// Not thread-safe; use one instance per thread.
class Evaluator {
 public:
  explicit Evaluator(std::size_t universe_size, EvaluatorOptions options = {});

  [[nodiscard]] bool eval(const Valuation& v, const Formula& f);
  // Successor valuations in canonical order, without duplicates.
  [[nodiscard]] std::vector<Valuation> successors(const Valuation& v, const Program& p);
  // Visits successors (possibly with repeats); stops when the callback returns false.
  bool visit_successors(const Valuation& v, const Program& p, const std::function<bool(const Valuation&)>& cb);

  [[nodiscard]] std::size_t universe_size() const { return n_; }
  [[nodiscard]] const EvaluatorStats& stats() const { return stats_; }
  void clear_cache();

 private:
  struct Footprint {
    Valuation reads;
    Valuation writes;
    Valuation must;
  };
  struct MemoKey {
    const void* node;
    Valuation masked;
    friend bool operator==(const MemoKey& a, const MemoKey& b) { return a.node == b.node && a.masked == b.masked; }
  };
  struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
      return k.masked.hash() ^ (std::hash<const void*>{}(k.node) * 0x9e3779b97f4a7c15ULL);
    }
  };
  using Callback = std::function<bool(const Valuation&)>;

  bool eval_node(const Valuation& v, const Formula& f);
  bool visit(const Valuation& v, const Program& p, bool inverted, const Callback& cb);
  std::vector<Valuation> materialize(const Valuation& v, const Program& p, bool inverted);
  const Valuation& formula_reads(const Formula& f);
  const Footprint& program_footprint(const Program& p, bool inverted);
  std::size_t index(const Var& v) const { return dense_index(v, n_); }
  void pin(std::shared_ptr<const void> root);

  std::size_t n_;
  EvaluatorOptions options_;
  EvaluatorStats stats_;
  std::unordered_map<const void*, Valuation> formula_reads_;
  std::unordered_map<const void*, Footprint> footprints_[2];
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
  std::vector<std::shared_ptr<const void>> pinned_;
};

}  // namespace argdlpa
