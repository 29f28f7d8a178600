#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bbdec/decision.hpp"
#include "bbdec/machine.hpp"

namespace bbdec {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One pipeline entry such as "bouncers:steps=1000:macro=200".
struct DeciderSpec {
  std::string name;
  std::map<std::string, std::uint64_t> params;
};

// Known deciders with their parameters and defaults, in default pipeline order.
const std::vector<DeciderSpec>& DefaultDeciders();

// Comma separated entries; missing parameters take their defaults.
std::vector<DeciderSpec> ParsePipelineSpec(std::string_view spec);
std::string FormatPipelineSpec(const std::vector<DeciderSpec>& deciders);

struct PipelineConfig {
  std::vector<DeciderSpec> deciders = DefaultDeciders();
  std::uint64_t halt_steps = 10'000'000;
  int threads = 1;
  // Certificates are written here when non-empty.
  std::string out_dir;
  bool db_left_is_zero = false;
};

// key = value lines; '#' starts a comment. Keys: pipeline, halt_steps, threads,
// out, db_left_is_zero. Values are applied to config.
void ApplyConfigText(std::string_view text, PipelineConfig& config);

struct MachineInput {
  std::uint64_t index = 0;
  TransitionTable table{1};
};

struct MachineResult {
  std::uint64_t index = 0;
  std::string machine;
  Verdict verdict = Verdict::kUnknown;
  std::string decider;
  std::uint64_t halt_step = 0;
  std::string error;
  // One-line JSON object.
  std::string json;
};

MachineResult DecideMachine(const MachineInput& input, const PipelineConfig& config);

// Writes one JSON line per machine, in input order, and returns the results.
std::vector<MachineResult> RunPipeline(const std::vector<MachineInput>& machines,
                                       const PipelineConfig& config, std::ostream* out);

struct VerifyEntry {
  std::size_t index = 0;
  bool ok = false;
  std::string detail;
};

// kind is "far" or "bouncer".
std::vector<VerifyEntry> VerifyFile(const std::string& path, std::string_view kind);

}  // namespace bbdec
