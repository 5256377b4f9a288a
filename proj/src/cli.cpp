#include "jamsim/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "jamsim/analysis.hpp"
#include "jamsim/csv_io.hpp"
#include "jamsim/error.hpp"
#include "jamsim/filterbank.hpp"

namespace jamsim {
namespace fs = std::filesystem;

namespace {

// Branches exported as time series, in manifest order.
constexpr std::string_view kExportedBranches[] = {
    "input", "filter1", "filter2", "filter3", "filter4",
    "trigger1", "trigger2", "jammer1", "jammer2",
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

fs::path strip_trailing_separators(const fs::path& p) {
  std::string s = p.string();
  while (s.size() > 1 && s.back() == '/') s.pop_back();
  return fs::path(s);
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint64_t fallback_seed() {
  const char* env = std::getenv(std::string(kSeedEnvVar).c_str());
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidValue, std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
  return seed;
}

std::string verdict_word(bool jamming) { return jamming ? "JAMMING" : "idle"; }

nlohmann::json manifest_json(const ResolvedScenario& resolved, const ScenarioReport& report,
                             const std::vector<std::pair<std::string, std::string>>& files,
                             bool reproducible) {
  nlohmann::json m;
  m["tool"] = "jamsim";
  m["version"] = kToolVersion;
  m["timestamp"] = reproducible ? std::string(kReproducibleTimestamp) : utc_now();
  m["scenario"] = resolved.scenario.name;
  m["seed"] = resolved.config.jammer3.noise.seed;
  m["config"] = render_scenario_file(resolved.scenario, resolved.config);
  for (const auto& [branch, file] : files) m["files"][branch] = file;
  m["verdicts"]["band3"] = verdict_word(report.band3_jamming);
  m["verdicts"]["band40"] = verdict_word(report.band40_jamming);
  m["trigger1"] = {{"level_v", report.trigger1.level}, {"stable", report.trigger1.stable}};
  m["trigger2"] = {{"level_v", report.trigger2.level}, {"stable", report.trigger2.stable}};
  m["jammer1_rms_v"] = report.jammer1_rms;
  m["jammer2_rms_v"] = report.jammer2_rms;
  return m;
}

void print_report(std::ostream& out, const ScenarioReport& report) {
  char line[128];
  out << "scenario: " << report.scenario << "\n";
  std::snprintf(line, sizeof line, "%-8s %-11s %-8s %-14s %s\n", "band", "trigger_v", "stable",
                "jammer_rms_v", "verdict");
  out << line;
  const auto row = [&](const char* band, const SettledLevel& trig, double jam_rms, bool jamming) {
    std::snprintf(line, sizeof line, "%-8s %-11g %-8s %-14.6g %s\n", band, trig.level,
                  trig.stable ? "yes" : "NO", jam_rms, verdict_word(jamming).c_str());
    out << line;
  };
  row("band3", report.trigger1, report.jammer1_rms, report.band3_jamming);
  row("band40", report.trigger2, report.jammer2_rms, report.band40_jamming);
  out << verdict_line(report) << "\n";
}

struct RunArgs {
  std::string file;
  std::optional<int> builtin;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> fs;
  std::optional<std::size_t> samples;
  bool reproducible = false;
};

struct ResponseArgs {
  int filter = 0;
  std::string out_file;
  double fs = kDefaultSampleRate;
  int order = kDefaultFilterOrder;
  std::size_t points = 2001;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int do_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  ScenarioFile file;
  if (args.builtin) {
    const auto builtins = builtin_scenarios();
    if (*args.builtin < 1 || *args.builtin > static_cast<int>(builtins.size())) {
      throw UsageError("--builtin must be between 1 and " + std::to_string(builtins.size()));
    }
    file.scenario = builtins[static_cast<std::size_t>(*args.builtin - 1)];
  } else {
    try {
      file = parse_scenario_text(read_text_file(args.file));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IoError) throw;
      throw UsageError(args.file + ": " + e.what());
    }
  }
  if (args.seed) file.seed = args.seed;
  if (args.fs) file.sample_rate_hz = args.fs;
  if (args.samples) file.n_samples = args.samples;

  const ResolvedScenario resolved = resolve(file, fallback_seed());
  const Pipeline pipeline = build_pipeline(resolved.config);
  const ScenarioReport report = run_scenario(pipeline, resolved.scenario);

  OutputOptions options;
  options.reproducible = args.reproducible;
  write_run_directory(args.out_dir, resolved, report, options);

  print_report(out, report);
  for (const auto* trig : {&report.trigger1, &report.trigger2}) {
    if (!trig->stable) {
      err << "warning: trigger " << (trig == &report.trigger1 ? 1 : 2)
          << " gate is not constant over the measurement region\n";
    }
  }
  return kExitOk;
}

int do_scenarios(std::ostream& out) {
  int index = 1;
  for (const auto& scenario : builtin_scenarios()) {
    out << index++ << "  " << scenario.name << "  tones_mhz:";
    for (const auto& tone : scenario.tones) out << ' ' << tone.frequency / 1e6;
    out << "\n";
  }
  return kExitOk;
}

int do_response(const ResponseArgs& args) {
  if (args.filter < 1 || args.filter > static_cast<int>(kDetectorFilters.size())) {
    throw UsageError("--filter must be between 1 and 4");
  }
  if (args.points < 2) throw UsageError("--points must be >= 2");
  const FilterStages stages =
      design_bandpass(kDetectorFilters[static_cast<std::size_t>(args.filter - 1)], args.fs, args.order);
  std::vector<double> freqs(args.points);
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    freqs[i] = args.fs / 2.0 * static_cast<double>(i) / static_cast<double>(freqs.size() - 1);
  }
  const auto response = frequency_response(stages, freqs);

  const fs::path target(args.out_file);
  fs::path staging = target;
  staging += ".tmp-" + std::to_string(::getpid());
  try {
    write_response_csv(freqs, response, staging);
    fs::rename(staging, target);
  } catch (...) {
    std::error_code ec;
    fs::remove(staging, ec);
    throw;
  }
  return kExitOk;
}

}  // namespace

std::string verdict_line(const ScenarioReport& report) {
  return "band3: " + verdict_word(report.band3_jamming) +
         ", band40: " + verdict_word(report.band40_jamming);
}

void write_run_directory(const fs::path& out_dir, const ResolvedScenario& resolved,
                         const ScenarioReport& report, const OutputOptions& options) {
  const fs::path target = strip_trailing_separators(out_dir);
  const fs::path parent = target.has_parent_path() ? target.parent_path() : fs::path(".");
  const std::string stem = target.filename().string();
  const std::string suffix = "-" + std::to_string(::getpid());
  const fs::path staging = parent / ("." + stem + ".staging" + suffix);
  const fs::path retired = parent / ("." + stem + ".old" + suffix);

  std::error_code ec;
  fs::remove_all(staging, ec);
  try {
    if (!fs::exists(parent)) fs::create_directories(parent);
    fs::create_directory(staging);
    const auto write = [&](const std::string& name, const auto& writer) {
      const fs::path path = staging / name;
      if (options.before_write) options.before_write(path);
      writer(path);
    };

    std::vector<std::pair<std::string, std::string>> files;
    for (const auto branch : kExportedBranches) {
      const std::string name = std::string(branch) + ".csv";
      write(name, [&](const fs::path& p) { write_timeseries_csv(report.branch(std::string(branch)), p); });
      files.emplace_back(branch, name);
    }
    write("input_spectrum.csv",
          [&](const fs::path& p) { write_spectrum_csv(power_spectrum(report.branch("input")), p); });
    files.emplace_back("input_spectrum", "input_spectrum.csv");

    const std::string manifest = manifest_json(resolved, report, files, options.reproducible).dump(2) + "\n";
    write("manifest.json", [&](const fs::path& p) {
      std::ofstream m(p, std::ios::binary | std::ios::trunc);
      m << manifest;
      m.flush();
      if (!m) throw Error(ErrorKind::IoError, "write to " + p.string() + " failed");
    });

    if (fs::exists(target)) {
      fs::rename(target, retired);
      fs::rename(staging, target);
      fs::remove_all(retired);
    } else {
      fs::rename(staging, target);
    }
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(staging, ec);
    throw Error(ErrorKind::IoError, e.what());
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual-band (LTE Band 3 / Band 40) trigger-gated jammer simulator", "jamsim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a scenario file or a built-in scenario");
  run->add_option("file", run_args.file, "Scenario file (.scn)");
  auto* builtin_opt = run->add_option("--builtin", run_args.builtin, "Built-in scenario number (1-4)");
  run->add_option("--out", run_args.out_dir, "Output directory")->required();
  run->add_option("--seed", run_args.seed, "Noise seed (overrides the file and JAMSIM_SEED)");
  run->add_option("--fs", run_args.fs, "Sample rate in Hz");
  run->add_option("--samples", run_args.samples, "Number of samples");
  run->add_flag("--reproducible", run_args.reproducible,
                "Write a fixed placeholder timestamp into the manifest");
  builtin_opt->excludes(run->get_option("file"));

  app.add_subcommand("scenarios", "List the built-in scenarios");

  ResponseArgs response_args;
  auto* response = app.add_subcommand("response", "Dump a detector filter's frequency response");
  response->add_option("--filter", response_args.filter, "Filter number (1-4)")->required();
  response->add_option("--out", response_args.out_file, "Output CSV file")->required();
  response->add_option("--fs", response_args.fs, "Sample rate in Hz");
  response->add_option("--order", response_args.order, "Bandpass order (even)");
  response->add_option("--points", response_args.points, "Evaluation points over [0, fs/2]");

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (run->parsed()) {
      if (run_args.file.empty() && !run_args.builtin) {
        throw UsageError("run needs a scenario file or --builtin N");
      }
      return do_run(run_args, out, err);
    }
    if (response->parsed()) return do_response(response_args);
    return do_scenarios(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSimulation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSimulation;
  }
}

}  // namespace jamsim
