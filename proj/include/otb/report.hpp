#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "otb/arrangement.hpp"

namespace otb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

struct CommandOptions {
  std::size_t max_circuit_size = 4;
  std::size_t upto = 5;
  bool verify_regularity = false;
  long m = 0;
  /// Comma-separated a_p in flat order, or one integer for every flat.
  std::string mults;
  std::size_t k = 3;
  long max_weight = 1;
  bool all = false;
};

std::vector<std::string> command_names();

/// Result of one subcommand wrapped with arrangement metadata, tool version
/// and seed. Line labels in the output are 1-based; rationals are "p/q".
/// Throws InputError or VerificationError.
Json run_command(const std::string& command, const Arrangement& a, const CommandOptions& options = {});

/// Plain-text rendering of a report produced by run_command.
std::string render_text(const Json& report);

/// Parses SPEC for `h0 --mults` against the number of flats.
std::vector<long> parse_mults(const std::string& spec, std::size_t flats);

}  // namespace otb
