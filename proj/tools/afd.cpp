#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "afd/report.hpp"

namespace {

int write_output(const afd::ReportDocument& report, const std::string& format, const std::string& out_path) {
  const std::string text = afd::emit_report(report, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "afd: cannot write '" << out_path << "'\n";
      return 1;
    }
    out << text;
  }
  if (report.document.contains("error")) {
    const auto& e = report.document["error"];
    std::cerr << "afd: " << e["code"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
  }
  return report.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact differential geometry over algebraifolds"};
  app.set_version_flag("--version", std::string(afd::kEngineVersion));

  std::string command, manifest, format = "json", out_path;
  std::vector<std::string> checks;
  app.add_option("command", command, "check, dim, christoffel, curvature, efe, geodesic, lie, bracket or pullback")
      ->required()
      ->check(CLI::IsMember(afd::command_names()));
  app.add_option("manifest", manifest, "Manifest JSON file")->required();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--check", checks, "Checks to run (check command only)")
      ->check(CLI::IsMember(afd::check_names()));
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (!checks.empty() && command != "check") {
    const afd::Error e(afd::ErrorCode::UsageError, "--check is only valid with the check command");
    return write_output(afd::error_report(command, manifest, e), format, out_path);
  }
  return write_output(afd::run_file(manifest, command, {checks}), format, out_path);
}
