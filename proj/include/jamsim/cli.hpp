#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "jamsim/pipeline.hpp"
#include "jamsim/scenario_file.hpp"

namespace jamsim {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kSeedEnvVar = "JAMSIM_SEED";
inline constexpr std::string_view kReproducibleTimestamp = "1970-01-01T00:00:00Z";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitSimulation = 2 };

struct OutputOptions {
  bool reproducible = false;
  // Called before each file is written inside the staging directory.
  // Throwing from it aborts the run; used to inject I/O failures.
  std::function<void(const std::filesystem::path&)> before_write;
};

/// "band3: JAMMING, band40: idle"
std::string verdict_line(const ScenarioReport& report);

/// Writes every output file into a staging directory next to `out_dir`
/// and renames it into place only once all writes succeed. On failure the
/// staging directory is removed and any previous `out_dir` is untouched.
void write_run_directory(const std::filesystem::path& out_dir, const ResolvedScenario& resolved,
                         const ScenarioReport& report, const OutputOptions& options = {});

/// Entry point behind the jamsim executable; `args` excludes argv[0].
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace jamsim
