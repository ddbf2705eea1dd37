#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace lissajous::cli {

struct VerifyOptions {
  std::string suite;
  std::int64_t max_m = 0;  // 0 picks the suite's default bound
  std::uint64_t seed = 0;
  bool quiet = false;
};

struct VerifySummary {
  std::size_t cases = 0;
  std::size_t failures = 0;
};

const std::vector<std::string>& verify_suite_names();

// Runs one suite, printing a PASS/FAIL line per case plus a summary line.
// Throws std::invalid_argument for an unknown suite name.
VerifySummary run_verify(const VerifyOptions& options, std::ostream& out);

}  // namespace lissajous::cli
