#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "argdlpa/control.hpp"
#include "argdlpa/encodings.hpp"
#include "argdlpa/evaluator.hpp"

namespace argdlpa {

enum class AcceptanceMode : std::uint8_t { nca, nsa, pca, psa };
enum class ControllabilityMode : std::uint8_t { nscon, nccon, pccon, pscon };
enum class Engine : std::uint8_t { direct, dlpa, both };

inline constexpr std::array<AcceptanceMode, 4> kAllAcceptanceModes = {AcceptanceMode::nca, AcceptanceMode::nsa,
                                                                      AcceptanceMode::pca, AcceptanceMode::psa};
inline constexpr std::array<ControllabilityMode, 4> kAllControllabilityModes = {
    ControllabilityMode::nscon, ControllabilityMode::nccon, ControllabilityMode::pccon, ControllabilityMode::pscon};

[[nodiscard]] std::string_view to_string(AcceptanceMode m);
[[nodiscard]] std::string_view to_string(ControllabilityMode m);
[[nodiscard]] std::string_view to_string(Engine e);
[[nodiscard]] std::optional<AcceptanceMode> parse_acceptance_mode(std::string_view s);
[[nodiscard]] std::optional<ControllabilityMode> parse_controllability_mode(std::string_view s);
[[nodiscard]] std::optional<Engine> parse_engine(std::string_view s);

// Acceptance mode asked inside each configuration of a controllability query.
[[nodiscard]] AcceptanceMode inner_mode(ControllabilityMode m);

struct Witness {
  std::optional<ArgFramework> completion;
  std::optional<ArgSet> extension;
  std::optional<ControlConfiguration> configuration;
};

struct QueryResult {
  bool answer = false;
  std::optional<Witness> witness;
  Engine engine = Engine::direct;
};

// Throws DomainError naming the offending completion.
void check_acceptance_precondition(const Structure& s, const Universe& u, ArgId a);
void check_controllability_precondition(const Control& c, const Universe& u, ArgId a);

[[nodiscard]] QueryResult acceptance_direct(const Structure& s, const Universe& u, Semantics sem, ArgId a,
                                            AcceptanceMode mode);
[[nodiscard]] QueryResult controllability_direct(const Control& c, const Universe& u, Semantics sem, ArgId a,
                                                 ControllabilityMode mode);

// Query formulas.
[[nodiscard]] Formula acceptance_formula(const Program& make_comp, const Program& make_ext, ArgId a,
                                         AcceptanceMode mode);
[[nodiscard]] Formula controllability_formula(const Program& control, const Program& make_comp,
                                              const Program& make_ext, ArgId a, ControllabilityMode mode);

// Model-checking engine; keeps its encodings and evaluator cache across queries over one universe.
class DlpaEngine {
 public:
  explicit DlpaEngine(std::size_t universe_size);

  [[nodiscard]] QueryResult acceptance(const Structure& s, const Universe& u, Semantics sem, ArgId a,
                                       AcceptanceMode mode);
  [[nodiscard]] QueryResult controllability(const Control& c, const Universe& u, Semantics sem, ArgId a,
                                            ControllabilityMode mode);

  [[nodiscard]] Evaluator& evaluator() { return evaluator_; }
  [[nodiscard]] const EncodingContext& encodings() const { return *ctx_; }

 private:
  bool inner_answer(const Valuation& v, const Program& comp, Semantics sem, ArgId a, AcceptanceMode mode);
  std::optional<Witness> inner_witness(const Valuation& v, const Program& comp, Semantics sem, ArgId a,
                                       AcceptanceMode mode, bool answer);

  std::size_t n_;
  std::shared_ptr<const EncodingContext> ctx_;
  Evaluator evaluator_;
};

[[nodiscard]] QueryResult acceptance_dlpa(const Structure& s, const Universe& u, Semantics sem, ArgId a,
                                          AcceptanceMode mode);
[[nodiscard]] QueryResult controllability_dlpa(const Control& c, const Universe& u, Semantics sem, ArgId a,
                                               ControllabilityMode mode);

struct CrossCheckReport {
  QueryResult direct;
  QueryResult dlpa;
  double direct_seconds = 0;
  double dlpa_seconds = 0;
};

// Runs both engines concurrently. Throws EngineDisagreement when their answers differ.
[[nodiscard]] CrossCheckReport cross_check(const Structure& s, const Universe& u, Semantics sem, ArgId a,
                                           AcceptanceMode mode);
[[nodiscard]] CrossCheckReport cross_check(const Control& c, const Universe& u, Semantics sem, ArgId a,
                                           ControllabilityMode mode);

// Re-checks a witness against the direct completion enumerators and the oracle.
[[nodiscard]] bool verify_witness(const Structure& s, Semantics sem, ArgId a, AcceptanceMode mode,
                                  const QueryResult& r);
[[nodiscard]] bool verify_witness(const Control& c, Semantics sem, ArgId a, ControllabilityMode mode,
                                  const QueryResult& r);

[[nodiscard]] std::string describe(const QueryResult& r, const Universe& u);

}  // namespace argdlpa
