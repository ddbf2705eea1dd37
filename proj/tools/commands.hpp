#pragma once

#include <ostream>
#include <string_view>

#include "lissajous/lissajous.hpp"

namespace lissajous::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCollision = 2,
  kVerifyFailed = 3,
};

// Parses "m,n"; throws lissajous::Error(ParseError).
LissajousType parse_type(std::string_view text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lissajous::cli
