// risnoma: run parameter sweeps, compare simulation with closed forms, and
// list the built-in figure presets.
//
// Exit codes: 0 success, 1 engine error or failed validation, 2 bad command
// line or config, 3 file I/O failure.

#include "risnoma/bench/config.hpp"
#include "risnoma/bench/csv.hpp"
#include "risnoma/bench/sweep.hpp"
#include "risnoma/bench/validate.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace risnoma::bench;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct Common {
  std::string config;
  std::string preset;
  std::string out;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("config", c.config, "JSON config file (optional with --preset)");
  cmd->add_option("--preset", c.preset, "Start from a named preset; the config file is merged on top");
  cmd->add_option("--out", c.out, "Output directory");
  cmd->add_option("--trials", c.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--workers", c.workers, "Worker threads (default: RISNOMA_WORKERS or all cores)")
      ->check(CLI::NonNegativeNumber);
}

SweepSpec resolve(const Common& c) {
  if (c.config.empty() && c.preset.empty()) throw std::invalid_argument("give a config file or --preset");
  SweepSpec spec = load_config(c.config, c.preset.empty() ? std::nullopt : std::optional<std::string>(c.preset));
  if (c.trials) spec.trials = *c.trials;
  if (c.seed) spec.seed = *c.seed;
  if (c.workers) spec.workers = *c.workers;
  validate_spec(spec);
  return spec;
}

std::string stem(const SweepSpec& spec) { return spec.name.empty() ? "sweep" : spec.name; }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

int cmd_run(const Common& c, bool plotdata) {
  const SweepSpec spec = resolve(c);
  const auto rows = run_sweep(spec);
  if (c.out.empty()) {
    std::cout << to_csv(rows);
  } else {
    const fs::path dir(c.out);
    fs::create_directories(dir);
    const fs::path csv = dir / (stem(spec) + ".csv");
    emit_csv(rows, csv);
    write_text(dir / (stem(spec) + ".config.json"), spec_to_json(spec));
    std::cerr << "wrote " << rows.size() << " rows to " << csv.string() << '\n';
    if (plotdata) {
      const auto files = emit_plotdata(rows, dir / (stem(spec) + "_plotdata"));
      std::cerr << "wrote " << files.size() << " curve files\n";
    }
  }
  for (const SweepRow& r : rows) {
    if (r.meta.rfind("error=", 0) == 0) {
      std::cerr << "engine error: " << r.metric << ' ' << r.variant << ' ' << r.user << ' ' << r.engine << " at "
                << r.axis_value << ": " << r.meta.substr(6) << '\n';
    }
  }
  return has_errors(rows) ? kFailed : kOk;
}

int cmd_validate(const Common& c) {
  const SweepSpec spec = resolve(c);
  const ValidationReport report = validate(spec);
  const std::string text = format_report(report);
  std::cout << text;
  if (!c.out.empty()) {
    const fs::path dir(c.out);
    fs::create_directories(dir);
    emit_csv(report.rows, dir / (stem(spec) + ".csv"));
    write_text(dir / (stem(spec) + ".validation.txt"), text);
  }
  return report.pass() ? kOk : kFailed;
}

int cmd_presets() {
  for (const PresetInfo& p : list_presets()) std::cout << p.name << "\t" << p.description << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double-RIS NOMA performance sweeps"};
  app.require_subcommand(1);

  Common run_opts;
  bool plotdata = false;
  auto* run = app.add_subcommand("run", "Evaluate a sweep and write CSV");
  add_common(run, run_opts);
  run->add_flag("--plotdata", plotdata, "Also write one data file per curve (needs --out)");

  Common val_opts;
  auto* val = app.add_subcommand("validate", "Compare simulation with closed forms and check slopes");
  add_common(val, val_opts);

  auto* show = app.add_subcommand("show-config", "Print the fully resolved config as JSON");
  Common show_opts;
  add_common(show, show_opts);

  app.add_subcommand("presets", "List the figure presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_opts, plotdata);
    if (val->parsed()) return cmd_validate(val_opts);
    if (show->parsed()) {
      std::cout << spec_to_json(resolve(show_opts));
      return kOk;
    }
    return cmd_presets();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
