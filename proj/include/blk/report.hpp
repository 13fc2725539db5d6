#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace blk {

enum class Command { Milnor, TMatrixJet, Saturate, VFilt, TMatrix, Spectrum, SpectralPairs, Monodromy, All };
enum class Format { Text, Json };

std::optional<Command> parse_command(std::string_view name);

struct JobConfig {
  Command command = Command::All;
  std::string poly;  // polynomial source text
  int jet_degree = 10;
  Format format = Format::Text;
  bool audit = false;
};

struct Report {
  int exit_code = 0;
  std::string out;  // stdout
  std::string err;  // stderr
};

// The machine-readable report of a command. Throws blk::Error.
nlohmann::ordered_json build_report(const JobConfig& cfg);

// Runs a command and renders it; errors become an exit code and a message
// naming the error kind.
Report run(const JobConfig& cfg);

}  // namespace blk
