#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "apnforge/compatibility.hpp"
#include "apnforge/diffspec.hpp"

namespace apnforge::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // a mathematical check failed
  kUsage = 2,        // usage or configuration error
  kIo = 3,
};

struct Range {
  unsigned lo = 1;
  unsigned hi = 1;
};

/// "A..B" or a single integer "A"; requires 1 <= A <= B.
Range parse_range(const std::string& text);

enum class Format { kJson, kCsv };

struct RunConfig {
  Range m_range{1, 6};
  Range n_range{1, 12};
  ModulusTable moduli;
  unsigned field_cap = kDefaultMaxDegree;
  DiffLimits limits;
  Format format = Format::kJson;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apnforge::cli
