#include "argdlpa/result_document.hpp"

#include <sstream>

namespace argdlpa {

std::string_view version() { return ARGDLPA_VERSION; }

namespace {

std::string text_of(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + text_of(v[i]);
    return out + "}";
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : " ") + k + "=" + text_of(x);
    return out;
  }
  if (v.is_number_float()) {
    std::ostringstream os;
    os << v.get<double>();
    return os.str();
  }
  return v.dump();
}

}  // namespace

ResultDocument::ResultDocument(std::string command) {
  doc_["command"] = std::move(command);
  doc_["query"] = nlohmann::json::object();
  doc_["result"] = nlohmann::json::object();
  doc_["version"] = std::string(version());
}

void ResultDocument::echo(const std::string& key, nlohmann::json value) { doc_["query"][key] = std::move(value); }

void ResultDocument::set_answer(bool answer) { doc_["answer"] = answer; }

void ResultDocument::set(const std::string& key, nlohmann::json value, TextStyle style) {
  doc_["result"][key] = std::move(value);
  styles_[key] = style;
}

void ResultDocument::set_seed(std::uint64_t seed) { doc_["seed"] = seed; }

void ResultDocument::set_timing(const std::string& key, double seconds) { doc_["timings"][key] = seconds; }

std::optional<bool> ResultDocument::answer() const {
  if (auto it = doc_.find("answer"); it != doc_.end()) return it->get<bool>();
  return std::nullopt;
}

std::string ResultDocument::render(OutputFormat format) const {
  return format == OutputFormat::json ? to_json() : to_text();
}

std::string ResultDocument::to_json() const { return doc_.dump(2) + "\n"; }

std::string ResultDocument::to_text() const {
  std::ostringstream os;
  if (!doc_["query"].empty()) os << doc_["command"].get<std::string>() << ": " << text_of(doc_["query"]) << '\n';
  if (auto a = answer()) os << "answer: " << (*a ? "yes" : "no") << '\n';
  for (const auto& [key, value] : doc_["result"].items()) {
    auto st = styles_.find(key);
    if (value.is_array() && st != styles_.end() && st->second == TextStyle::lines) {
      os << key << ":\n";
      for (const auto& v : value) os << "  " << text_of(v) << '\n';
    } else {
      os << key << ": " << text_of(value) << '\n';
    }
  }
  if (doc_.contains("seed")) os << "seed: " << doc_["seed"].get<std::uint64_t>() << '\n';
  if (doc_.contains("timings")) {
    for (const auto& [key, value] : doc_["timings"].items()) {
      os << "time." << key << ": " << value.get<double>() << "s\n";
    }
  }
  return os.str();
}

nlohmann::json witness_json(const Witness& w, const Universe& u) {
  nlohmann::json j = nlohmann::json::object();
  if (w.configuration) j["configuration"] = u.set_string(w.configuration->chosen);
  if (w.completion) j["completion"] = to_string(*w.completion, u);
  if (w.extension) j["extension"] = u.set_string(*w.extension);
  return j;
}

nlohmann::json sets_json(const std::vector<ArgSet>& sets, const Universe& u) {
  nlohmann::json j = nlohmann::json::array();
  for (ArgSet s : sets) j.push_back(u.set_string(s));
  return j;
}

nlohmann::json afs_json(const std::vector<ArgFramework>& afs, const Universe& u) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& af : afs) j.push_back(to_string(af, u));
  return j;
}

}  // namespace argdlpa
