#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "liepf/config.hpp"

namespace liepf {

enum class OutputFormat { json, table };

struct CliConfig {
  OutputFormat output_format = OutputFormat::table;
  long precision_bits = 128;
  Limits limits;
};

/// Environment variable overriding the default Verlinde precision.
inline constexpr const char* kPrecisionEnv = "LIEPF_PRECISION_BITS";

/// Runs one subcommand; `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liepf
