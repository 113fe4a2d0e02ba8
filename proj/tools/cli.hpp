#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace argdlpa::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInvariant = 3;
inline constexpr int kResource = 4;
inline constexpr int kDisagreement = 5;

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace argdlpa::cli
