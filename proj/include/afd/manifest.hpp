#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "afd/maps.hpp"

namespace afd {

/// A fully parsed manifest. Expressions are parsed at load time; operations
/// that can fail mathematically (metric inversion, homomorphism validation)
/// are deferred to run_command.
struct Manifest {
  struct Curve {
    std::string name;
    Bindings images;
  };

  nlohmann::json document;
  std::string source;

  AlgebraifoldPtr algebra;
  std::optional<Tensor> metric;
  std::optional<ScalarValue> lambda;  // defaults 0 and 1 are filled in at load
  std::optional<ScalarValue> kappa;
  std::optional<Tensor> stress_energy;

  std::optional<FormalLine> line;
  std::vector<Curve> curves;
  std::set<std::string> non_geodesic_curves;
  std::vector<std::pair<std::string, Derivation>> vector_fields;

  std::vector<std::string> checks;
  std::vector<std::string> warnings;
};

/// Commands understood by run_command, other than "check".
const std::vector<std::string>& check_names();

/// Throws FileNotFound, ParseError (with line and column), ValidationError,
/// SyntaxError or UnknownIdentifier; context errors propagate unchanged.
Manifest load_manifest(const std::filesystem::path& path);
Manifest parse_manifest(const std::string& text, const std::string& source = "<manifest>");

}  // namespace afd
