#pragma once

#include <cstdint>
#include <random>

#include "argdlpa/control.hpp"

namespace argdlpa {

// Seeded instance generators. Draws are mapped from raw mt19937_64 output so that
// sequences are identical across standard libraries.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, k).
  std::uint64_t below(std::uint64_t k) { return engine_() % k; }
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  ArgSet subset(ArgSet of, std::uint64_t num = 1, std::uint64_t den = 2);
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Attack density drawn per framework from {1/6,...,3/6}.
[[nodiscard]] ArgFramework random_af(ArgSet args, Random& rng);
[[nodiscard]] Iaf random_iaf(std::size_t n, Random& rng);
[[nodiscard]] Riaf random_riaf(std::size_t n, Random& rng);
[[nodiscard]] Formula random_boolean_formula(const std::vector<Var>& vars, std::size_t depth, Random& rng);
[[nodiscard]] Ciaf random_ciaf(std::size_t n, Random& rng);
[[nodiscard]] CiafJm random_ciafjm(std::size_t n, Random& rng);
[[nodiscard]] DArgIaf random_dargiaf(std::size_t n, Random& rng);
[[nodiscard]] Structure random_structure(std::size_t kind_index, std::size_t n, Random& rng);
[[nodiscard]] Caf random_caf(std::size_t n, Random& rng);
[[nodiscard]] Cciaf random_cciaf(std::size_t n, Random& rng);

// Any formula / program over the given variables; used by the logic property tests.
[[nodiscard]] Formula random_formula(const std::vector<Var>& vars, std::size_t depth, Random& rng);
[[nodiscard]] Program random_program(const std::vector<Var>& vars, std::size_t depth, Random& rng);

}  // namespace argdlpa
