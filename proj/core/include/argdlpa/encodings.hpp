#pragma once

#include <array>
#include <vector>

#include "argdlpa/af.hpp"
#include "argdlpa/syntax.hpp"
#include "argdlpa/valuation.hpp"

namespace argdlpa {

[[nodiscard]] Valuation valuation_of_af(const ArgFramework& af, std::size_t universe_size);
[[nodiscard]] ArgFramework af_of_valuation(const Valuation& v, std::size_t universe_size);
[[nodiscard]] ArgSet ext_of_valuation(const Valuation& v, std::size_t universe_size);
// {x | in'(x) in v}
[[nodiscard]] ArgSet primed_ext_of_valuation(const Valuation& v, std::size_t universe_size);
[[nodiscard]] Valuation valuation_of_vars(const std::vector<Var>& vars, std::size_t universe_size);

// Semantics formulas and extension-building programs over a fixed universe size.
// All formulas are built once at construction and shared.
class EncodingContext {
 public:
  explicit EncodingContext(std::size_t universe_size);

  [[nodiscard]] std::size_t universe_size() const { return n_; }

  [[nodiscard]] const Formula& well() const { return well_; }
  [[nodiscard]] const Formula& conflict_free() const { return conflict_free_; }
  [[nodiscard]] const Formula& admissible() const { return admissible_; }
  [[nodiscard]] const Formula& stable() const { return stable_; }
  [[nodiscard]] const Formula& complete() const { return complete_; }
  [[nodiscard]] const Formula& grounded() const { return grounded_; }
  [[nodiscard]] const Formula& preferred() const { return preferred_; }
  [[nodiscard]] const Formula& naive() const { return naive_; }
  [[nodiscard]] const Formula& semi_stable() const { return semi_stable_; }
  [[nodiscard]] const Formula& stage() const { return stage_; }
  [[nodiscard]] const Formula& ideal_set() const { return ideal_set_; }
  [[nodiscard]] const Formula& ideal() const { return ideal_; }
  [[nodiscard]] const Formula& eager_set() const { return eager_set_; }
  [[nodiscard]] const Formula& eager() const { return eager_; }
  [[nodiscard]] const Formula& included_in_cp() const { return included_in_cp_; }
  [[nodiscard]] const Formula& includes_cp() const { return includes_cp_; }
  [[nodiscard]] const Program& copy() const { return copy_; }

  [[nodiscard]] const Formula& formula(Semantics s) const;
  // vary(IN_U); phi_s?
  [[nodiscard]] const Program& make_ext(Semantics s) const;

 private:
  std::size_t n_;
  Formula well_, conflict_free_, admissible_, stable_, complete_, grounded_, preferred_, naive_, semi_stable_,
      stage_, ideal_set_, ideal_, eager_set_, eager_, included_in_cp_, includes_cp_;
  Program copy_;
  std::array<Program, kAllSemantics.size()> make_ext_;
};

struct EncodingBounds {
  std::size_t basic = 6;        // st co gr pr na
  std::size_t range_based = 5;  // se stg
  std::size_t nested = 5;       // id ea

  [[nodiscard]] std::size_t for_semantics(Semantics s) const;
};

struct EncodingReport {
  bool agrees = false;
  std::vector<ArgSet> oracle;
  std::vector<ArgSet> encoding;
};

class Evaluator;

// Extensions of af computed by running make_ext from valuation_of_af.
[[nodiscard]] std::vector<ArgSet> encoded_extensions(const ArgFramework& af, Semantics s,
                                                     const EncodingContext& ctx, Evaluator& evaluator);
// Throws ResourceError when the universe exceeds the bound for s.
[[nodiscard]] EncodingReport check_encoding(const ArgFramework& af, Semantics s, std::size_t universe_size,
                                            const EncodingBounds& bounds = {});

}  // namespace argdlpa
