#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "afd/error.hpp"
#include "afd/manifest.hpp"

namespace afd {

inline constexpr const char* kEngineName = "afd";
inline constexpr const char* kEngineVersion = "1.0.0";

/// The commands accepted by run_command.
const std::vector<std::string>& command_names();

struct RunOptions {
  /// Overrides the manifest's checks list for the "check" command.
  std::vector<std::string> checks;
};

/// A finished run. `document` uses nlohmann's ordered-by-key objects, so its
/// serialization is deterministic.
struct ReportDocument {
  nlohmann::json document;
  int exit_status = 0;  // 0 pass, 1 input or usage error, 2 mathematical failure
};

ReportDocument run_command(const Manifest& m, const std::string& command, const RunOptions& options = {});
/// Loads the manifest and runs the command; load failures become error reports.
ReportDocument run_file(const std::filesystem::path& manifest, const std::string& command,
                        const RunOptions& options = {});
/// An error report for failures that happen before a manifest is available.
ReportDocument error_report(const std::string& command, const std::string& source, const Error& e);

/// "json" (2-space indent, trailing newline) or "text" (one "path = value"
/// line per leaf). Throws UsageError for other formats.
std::string emit_report(const ReportDocument& r, const std::string& format);

/// {"rank": [r, s], "components": [{"index": [...], "value": "..."}]}, indices 1-based.
nlohmann::json tensor_json(const Tensor& t);

}  // namespace afd
