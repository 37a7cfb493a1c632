// verify: command-line driver for the verification checks.
//
//   verify run [--checks id,id,...] [--seed N] [--tol X] [--format json|text] [--export-dir PATH]
//   verify list
//   verify tables export [--dir PATH]
//
// Exit status: 0 all selected checks pass, 1 some check failed or errored, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "picardcy/divisor_ledger.hpp"
#include "picardcy/hermitian.hpp"
#include "picardcy/resgroup.hpp"
#include "picardcy/variety.hpp"
#include "picardcy/verifier.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void export_artifacts(const fs::path& dir) {
  fs::create_directories(dir);
  write_file(dir / "gprime_mod3.txt", picardcy::format_group(picardcy::gprime_image()));
  std::string pts;
  for (const auto& p : picardcy::singular_points()) pts += p.to_line() + '\n';
  write_file(dir / "singular_points.txt", pts);
}

void export_tables(const fs::path& dir) {
  fs::create_directories(dir);
  write_file(dir / "mirrors.txt", picardcy::format_mirror_table(picardcy::mirror_table()));
  write_file(dir / "forms.txt", picardcy::format_form_tables(picardcy::form_tables()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the ball-quotient Calabi-Yau computations"};
  app.require_subcommand(1);

  picardcy::RunOptions opts;
  std::string format = "text";
  std::string export_dir;
  std::vector<std::string> checks;

  auto* run_cmd = app.add_subcommand("run", "Run checks and print a report");
  run_cmd->add_option("--checks", checks, "Comma-separated check ids (default: all)")->delimiter(',');
  run_cmd->add_option("--seed", opts.seed, "Seed for randomized checks");
  run_cmd->add_option("--tol", opts.tolerance, "Tolerance for numeric checks");
  run_cmd->add_option("--samples", opts.jacobian_samples, "Sample count for the Jacobian check");
  run_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  run_cmd->add_option("--export-dir", export_dir, "Also write the G' image mod 3 and the singular points here");

  auto* list_cmd = app.add_subcommand("list", "List check ids");

  auto* tables_cmd = app.add_subcommand("tables", "Data tables");
  tables_cmd->require_subcommand(1);
  std::string tables_dir = ".";
  auto* export_cmd = tables_cmd->add_subcommand("export", "Write mirrors.txt and forms.txt");
  export_cmd->add_option("--dir", tables_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*list_cmd) {
      for (const auto& id : picardcy::check_ids()) std::cout << id << "  " << picardcy::check_citation(id) << '\n';
      return 0;
    }
    if (*export_cmd) {
      export_tables(tables_dir);
      return 0;
    }
    opts.checks = checks;
    picardcy::Report report;
    try {
      report = picardcy::run(opts);
    } catch (const picardcy::UnknownCheckError& e) {
      std::cerr << "verify: " << e.what() << " (see 'verify list')\n";
      return kExitUsage;
    }
    if (format == "json")
      std::cout << picardcy::to_json(report).dump(2) << '\n';
    else
      std::cout << picardcy::to_text(report);
    if (!export_dir.empty()) export_artifacts(export_dir);
    return report.all_passed() ? 0 : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kExitFail;
  }
}
