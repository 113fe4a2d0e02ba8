#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "argdlpa/query.hpp"

namespace argdlpa {

[[nodiscard]] std::string_view version();

enum class OutputFormat : std::uint8_t { text, json };

// How an array field is rendered in text mode.
enum class TextStyle : std::uint8_t {
  set,    // {x,y}
  lines,  // one element per line
};

// Output of one CLI command. Keys are kept sorted so both renderings are byte-stable.
class ResultDocument {
 public:
  explicit ResultDocument(std::string command);

  void echo(const std::string& key, nlohmann::json value);
  void set_answer(bool answer);
  void set(const std::string& key, nlohmann::json value, TextStyle style = TextStyle::set);
  void set_seed(std::uint64_t seed);
  void set_timing(const std::string& key, double seconds);

  [[nodiscard]] const nlohmann::json& json() const { return doc_; }
  [[nodiscard]] std::optional<bool> answer() const;

  [[nodiscard]] std::string render(OutputFormat format) const;
  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string to_text() const;

 private:
  nlohmann::json doc_;
  std::map<std::string, TextStyle> styles_;
};

[[nodiscard]] nlohmann::json witness_json(const Witness& w, const Universe& u);
[[nodiscard]] nlohmann::json sets_json(const std::vector<ArgSet>& sets, const Universe& u);
[[nodiscard]] nlohmann::json afs_json(const std::vector<ArgFramework>& afs, const Universe& u);

}  // namespace argdlpa
