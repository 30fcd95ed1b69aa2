#pragma once

// Command-line configuration for the `bounds` tool.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effbounds/magnitude.hpp"

namespace effbounds::cli {

enum class Format { Json, Csv, Text };
enum class TraceLevel { None, Top, Full };

struct Range {
  mpz_class lo, hi;  // inclusive
  bool single() const { return lo == hi; }
};

struct RunConfig {
  std::string command;  // shafarevich | mordell | geom-verify
  Range g{2, 2}, q{2, 2}, s{0, 0};
  std::uint64_t seed = 1;
  std::string seed_source = "default";  // flag | env | default
  Context ctx;
  Format format = Format::Json;
  TraceLevel trace = TraceLevel::Full;
  bool constants_only = false;
  std::map<std::string, mpz_class> inject;  // toy trace mode
  // geom-verify
  std::string suite = "all";
  std::optional<int> trials, degree;
  std::optional<std::pair<std::string, std::string>> curves;

  bool is_grid() const { return !g.single() || !q.single() || !s.single(); }
};

// "5" or "2..4"; throws invalid_params.
Range parse_range(const std::string& text, const std::string& name);
// "S=1,P=1,cover_sum=36"; throws invalid_params.
std::map<std::string, mpz_class> parse_inject(const std::string& text);
// "g=2..3,q=2,s=0..1" updates the matching ranges.
void apply_grid(RunConfig& cfg, const std::string& text);

struct ParseOutcome {
  std::optional<RunConfig> config;  // empty when the run should stop (help, parse error)
  int exit_code = 0;
  std::string message;  // help text or error
};

// env_seed is the value of BOUNDS_SEED, if set.
ParseOutcome parse_args(int argc, const char* const* argv, const char* env_seed);

const char* format_name(Format f);

}  // namespace effbounds::cli
