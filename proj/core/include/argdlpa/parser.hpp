#pragma once

#include <string>
#include <string_view>

#include "argdlpa/errors.hpp"
#include "argdlpa/syntax.hpp"

namespace argdlpa {

enum class NamePolicy {
  intern,  // unknown argument names are appended to the universe
  strict,  // unknown argument names raise InvariantError
};

// Throws ParseError on malformed input.
[[nodiscard]] Formula parse_formula(std::string_view text, Universe& universe,
                                    NamePolicy policy = NamePolicy::intern);
[[nodiscard]] Program parse_program(std::string_view text, Universe& universe,
                                    NamePolicy policy = NamePolicy::intern);

// Minimal parenthesisation; parse(print(t)) == t.
[[nodiscard]] std::string print(const Formula& f, const Universe& universe);
[[nodiscard]] std::string print(const Program& p, const Universe& universe);

}  // namespace argdlpa
