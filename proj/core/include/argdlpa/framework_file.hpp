#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "argdlpa/control.hpp"

namespace argdlpa {

enum class FrameworkKind : std::uint8_t { af, iaf, riaf, ciaf, ciafjm, dargiaf, caf, cciaf };

[[nodiscard]] std::string_view to_string(FrameworkKind k);
[[nodiscard]] std::optional<FrameworkKind> parse_framework_kind(std::string_view s);

using LoadedStructure = std::variant<ArgFramework, Iaf, Riaf, Ciaf, CiafJm, DArgIaf, Caf, Cciaf>;

struct FrameworkFile {
  FrameworkKind kind = FrameworkKind::af;
  Universe universe;
  LoadedStructure structure;
};

// Line-oriented format:
//   kind: af|iaf|riaf|ciaf|ciafjm|dargiaf|caf|cciaf
//   universe: a, b, c          (optional; defaults to names in order of appearance)
//   arg(x).  ?arg(x).  carg(x).
//   att(x,y).  ?att(x,y).  <->att(x,y).  catt(x,y).
//   constraint: <formula>      (conjoined when repeated)
//   dep: implies({..},{..}) | or({..}) | nand({..}) | choice({..})
// Several arg/att facts may share a line. Lines starting with % or # are comments.
// Syntax errors throw ParseError; invariant violations throw InvariantError prefixed with "line N: ".
[[nodiscard]] FrameworkFile parse_framework(std::string_view text);
[[nodiscard]] FrameworkFile load_framework(const std::filesystem::path& path);

[[nodiscard]] std::string write_framework(const FrameworkFile& file);

// Structure views; throw DomainError for kinds that do not convert.
[[nodiscard]] Structure as_structure(const FrameworkFile& file);
[[nodiscard]] Control as_control(const FrameworkFile& file);
// Control kinds are taken under cfg, defaulting to every control argument.
[[nodiscard]] ConstraintTarget as_constraint_target(const FrameworkFile& file,
                                                    std::optional<ControlConfiguration> cfg = std::nullopt);
[[nodiscard]] bool is_control(const FrameworkFile& file);

}  // namespace argdlpa
