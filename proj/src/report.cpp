#include "afd/report.hpp"

#include <algorithm>
#include <sstream>

#include "afd/error.hpp"
#include "afd/expression.hpp"

namespace afd {

using nlohmann::json;

namespace {

template <class V>
json components_json(const V& v) {
  json out = json::array();
  for (const auto& c : v.coeffs) out.push_back(render_scalar(c));
  return out;
}

const Tensor& require_metric(const Manifest& m, const std::string& command) {
  if (!m.metric) throw Error(ErrorCode::ValidationError, "command '" + command + "' requires a metric");
  return *m.metric;
}

/// Named derivations for lie and bracket: the manifest's vector_fields, or the
/// coordinate basis when none are declared.
std::vector<std::pair<std::string, Derivation>> fields_of(const Manifest& m) {
  if (!m.vector_fields.empty()) return m.vector_fields;
  std::vector<std::pair<std::string, Derivation>> out;
  const auto& names = m.algebra->context()->transcendentals();
  for (std::size_t i = 0; i < names.size(); ++i)
    out.emplace_back("d/d" + names[i], Derivation::basis(m.algebra, i));
  return out;
}

struct Outcome {
  json payload;
  bool pass = true;
};

Outcome run_dim(const Manifest& m) {
  return {json{{"dimension", render_scalar(dimension(m.algebra))}}, true};
}

Outcome run_christoffel(const Manifest& m) {
  const auto& A = m.algebra;
  const Metric g = metric_inverse(A, require_metric(m, "christoffel"));
  const ConnectionCoeffs c = levi_civita(A, g);
  const bool torsion_free = torsion(A, c).is_zero();
  const bool compatible = metric_compatibility(A, c, g.g).is_zero();
  return {json{{"inverse_metric", tensor_json(g.g_inv)},
               {"christoffel", tensor_json(c.gamma)},
               {"torsion_free", torsion_free},
               {"metric_compatible", compatible}},
          torsion_free && compatible};
}

bool is_symmetric(const Tensor& t) {
  for (const auto& [idx, v] : t.components())
    if (t.at({idx[1], idx[0]}) != v) return false;
  return true;
}

Outcome run_curvature(const Manifest& m) {
  const auto& A = m.algebra;
  const Metric g = metric_inverse(A, require_metric(m, "curvature"));
  const CurvatureReport r = curvature_report(A, g);
  const bool symmetric = is_symmetric(r.ricci);
  return {json{{"riemann", tensor_json(r.riemann)},
               {"ricci", tensor_json(r.ricci)},
               {"scalar_curvature", render_scalar(r.scalar)},
               {"einstein", tensor_json(r.einstein)},
               {"ricci_symmetric", symmetric}},
          symmetric};
}

Outcome run_efe(const Manifest& m) {
  const auto& A = m.algebra;
  const Metric g = metric_inverse(A, require_metric(m, "efe"));
  const Tensor T = m.stress_energy ? *m.stress_energy : Tensor(A, 0, 2);
  const Tensor G = einstein_tensor(A, g);
  const Tensor residual = efe_residual(A, g, G, *m.lambda, *m.kappa, T);
  return {json{{"lambda", render_scalar(*m.lambda)},
               {"kappa", render_scalar(*m.kappa)},
               {"stress_energy", tensor_json(T)},
               {"einstein", tensor_json(G)},
               {"residual", tensor_json(residual)},
               {"satisfied", residual.is_zero()}},
          residual.is_zero()};
}

void require_curves(const Manifest& m, const std::string& command) {
  if (m.curves.empty()) throw Error(ErrorCode::ValidationError, "command '" + command + "' requires curves");
}

json images_json(const Bindings& images) {
  json out = json::object();
  for (const auto& [name, value] : images) out[name] = render_scalar(value);
  return out;
}

Outcome run_geodesic(const Manifest& m) {
  require_curves(m, "geodesic");
  const auto& A = m.algebra;
  const ConnectionCoeffs c =
      m.metric ? levi_civita(A, metric_inverse(A, *m.metric)) : standard_connection(A);
  Outcome out{json{{"connection", m.metric ? "levi-civita" : "standard"}, {"curves", json::object()}}, true};
  for (const auto& curve : m.curves) {
    const AlgebraifoldHom phi = build_hom(A, m.line->algebra, curve.images);
    const PulledModuleElem r = geodesic_residual(phi, c);
    const bool expected = !m.non_geodesic_curves.contains(curve.name);
    out.pass = out.pass && r.is_zero() == expected;
    out.payload["curves"][curve.name] = json{{"images", images_json(curve.images)},
                                             {"residual", components_json(r)},
                                             {"is_geodesic", r.is_zero()},
                                             {"expected_geodesic", expected}};
  }
  return out;
}

Outcome run_pullback(const Manifest& m) {
  require_curves(m, "pullback");
  const auto& A = m.algebra;
  const FormalLine& line = *m.line;
  const auto& names = A->context()->transcendentals();
  std::optional<Tensor> g;
  if (m.metric) g = *m.metric;
  Outcome out{json{{"curves", json::object()}}, true};
  for (const auto& curve : m.curves) {
    const AlgebraifoldHom phi = build_hom(A, line.algebra, curve.images);
    const PulledModuleElem D = differential(phi, line.del);
    bool residuals_zero = true;
    for (const auto& r : pullback_residuals(phi)) residuals_zero = residuals_zero && r.is_zero();
    json pulled = json::object();
    bool adjoint = true;
    for (std::size_t i = 0; i < A->rank(); ++i) {
      const OneForm xi = OneForm::basis(A, i);
      const OneForm omega = pullback_one_form(phi, xi);
      pulled["d" + names[i]] = components_json(omega);
      adjoint = adjoint && pair(omega, line.del) == pair_pulled(phi, xi, D);
    }
    json entry{{"images", images_json(curve.images)},
               {"velocity", components_json(D)},
               {"pulled_differentials", pulled},
               {"pullback_verified", residuals_zero},
               {"adjointness", adjoint}};
    if (g) {
      ScalarValue speed = line.algebra->zero();
      for (const auto& [idx, v] : g->components()) speed += phi.apply(v) * D.coeffs[idx[0]] * D.coeffs[idx[1]];
      entry["metric_along_curve"] = render_scalar(speed);
    }
    out.pass = out.pass && residuals_zero && adjoint;
    out.payload["curves"][curve.name] = std::move(entry);
  }
  return out;
}

Outcome run_lie(const Manifest& m) {
  const auto& A = m.algebra;
  const auto fields = fields_of(m);
  const Tensor delta = kronecker(A);
  Outcome out{json{{"fields", json::object()}, {"pairs", json::array()}}, true};
  for (const auto& [name, u] : fields) {
    const bool kills_delta = lie_derivative(A, u, delta).is_zero();
    json entry{{"components", components_json(u)}, {"kronecker_preserved", kills_delta}};
    if (m.metric) {
      const Tensor Lg = lie_derivative(A, u, *m.metric);
      entry["metric_lie_derivative"] = tensor_json(Lg);
      entry["killing"] = Lg.is_zero();
    }
    out.pass = out.pass && kills_delta;
    out.payload["fields"][name] = std::move(entry);
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      const auto& [un, u] = fields[i];
      const auto& [vn, v] = fields[j];
      const Tensor Luv = lie_derivative(A, u, Tensor::from_derivation(v));
      const bool agrees = Luv == Tensor::from_derivation(lie_bracket(A, u, v));
      out.pass = out.pass && agrees;
      out.payload["pairs"].push_back(json{{"u", un}, {"v", vn}, {"lie_derivative", tensor_json(Luv)},
                                          {"equals_bracket", agrees}});
    }
  }
  return out;
}

Outcome run_bracket(const Manifest& m) {
  const auto& A = m.algebra;
  const auto fields = fields_of(m);
  Outcome out{json{{"brackets", json::array()}}, true};
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      const Derivation uv = lie_bracket(A, fields[i].second, fields[j].second);
      const bool antisymmetric = (uv + lie_bracket(A, fields[j].second, fields[i].second)).is_zero();
      out.pass = out.pass && antisymmetric;
      out.payload["brackets"].push_back(json{{"u", fields[i].first},
                                             {"v", fields[j].first},
                                             {"bracket", components_json(uv)},
                                             {"antisymmetric", antisymmetric}});
    }
  }
  bool jacobi = true;
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j)
      for (std::size_t k = j + 1; k < fields.size(); ++k) {
        const auto& u = fields[i].second;
        const auto& v = fields[j].second;
        const auto& w = fields[k].second;
        const Derivation sum = lie_bracket(A, u, lie_bracket(A, v, w)) + lie_bracket(A, v, lie_bracket(A, w, u)) +
                               lie_bracket(A, w, lie_bracket(A, u, v));
        jacobi = jacobi && sum.is_zero();
      }
  out.payload["jacobi"] = jacobi;
  out.pass = out.pass && jacobi;
  return out;
}

Outcome dispatch(const Manifest& m, const std::string& name) {
  if (name == "dim") return run_dim(m);
  if (name == "christoffel") return run_christoffel(m);
  if (name == "curvature") return run_curvature(m);
  if (name == "efe") return run_efe(m);
  if (name == "geodesic") return run_geodesic(m);
  if (name == "pullback") return run_pullback(m);
  if (name == "lie") return run_lie(m);
  if (name == "bracket") return run_bracket(m);
  throw Error(ErrorCode::UsageError, "unknown command '" + name + "'");
}

json engine_json() { return json{{"name", kEngineName}, {"version", kEngineVersion}}; }

json error_json(const Error& e) {
  return json{{"code", std::string(code_name(e.code()))}, {"message", e.what()}};
}

void flatten(const json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object() && node.contains("rank") && node.contains("components") && node["components"].is_array()) {
    out << path << ".rank = (" << node["rank"][0].get<int>() << "," << node["rank"][1].get<int>() << ")\n";
    if (node["components"].empty()) out << path << " = 0\n";
    for (const auto& c : node["components"]) {
      out << path << "[";
      for (std::size_t i = 0; i < c["index"].size(); ++i) out << (i ? "," : "") << c["index"][i].get<int>();
      out << "] = " << c["value"].get<std::string>() << "\n";
    }
    return;
  }
  if (node.is_object()) {
    if (node.empty()) out << path << " = {}\n";
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
    return;
  }
  if (node.is_array()) {
    if (node.empty()) out << path << " = []\n";
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << path << " = " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check",    "dim", "christoffel", "curvature", "efe",
                                              "geodesic", "lie", "bracket",     "pullback"};
  return names;
}

json tensor_json(const Tensor& t) {
  json comps = json::array();
  for (const auto& [idx, v] : t.components()) {
    json index = json::array();
    for (auto i : idx) index.push_back(i + 1);
    comps.push_back(json{{"index", index}, {"value", render_scalar(v)}});
  }
  return json{{"rank", {t.contravariant_rank(), t.covariant_rank()}}, {"components", comps}};
}

ReportDocument run_command(const Manifest& m, const std::string& command, const RunOptions& options) {
  std::vector<std::string> names;
  if (command == "check") {
    names = options.checks.empty() ? m.checks : options.checks;
    for (const auto& n : names)
      if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
        return error_report(command, m.source, Error(ErrorCode::UsageError, "unknown check '" + n + "'"));
    if (names.empty())
      return error_report(command, m.source,
                          Error(ErrorCode::ValidationError, "no checks requested: the manifest lists none"));
  } else if (std::find(command_names().begin(), command_names().end(), command) == command_names().end()) {
    return error_report(command, m.source, Error(ErrorCode::UsageError, "unknown command '" + command + "'"));
  } else {
    names = {command};
  }

  json checks = json::object(), results = json::object(), errors = json::object();
  bool any_fail = false, any_input_error = false, any_error = false;
  for (const auto& name : names) {
    try {
      Outcome o = dispatch(m, name);
      results[name] = std::move(o.payload);
      checks[name] = o.pass ? "pass" : "fail";
      any_fail = any_fail || !o.pass;
    } catch (const Error& e) {
      checks[name] = "error";
      errors[name] = error_json(e);
      any_error = true;
      any_input_error = any_input_error || is_input_error(e.code());
    }
  }

  ReportDocument r;
  json& d = r.document;
  d["command"] = command;
  d["engine"] = engine_json();
  d["manifest"] = json{{"source", m.source}, {"document", m.document}};
  d["checks"] = checks;
  d["results"] = results;
  if (!errors.empty()) d["errors"] = errors;
  d["warnings"] = m.warnings;
  d["status"] = any_error ? "error" : any_fail ? "fail" : "pass";
  r.exit_status = any_input_error ? 1 : (any_error || any_fail) ? 2 : 0;
  return r;
}

ReportDocument error_report(const std::string& command, const std::string& source, const Error& e) {
  ReportDocument r;
  json& d = r.document;
  d["command"] = command;
  d["engine"] = engine_json();
  d["manifest"] = json{{"source", source}};
  d["error"] = error_json(e);
  d["status"] = "error";
  d["warnings"] = json::array();
  r.exit_status = is_input_error(e.code()) ? 1 : 2;
  return r;
}

ReportDocument run_file(const std::filesystem::path& manifest, const std::string& command,
                        const RunOptions& options) {
  try {
    return run_command(load_manifest(manifest), command, options);
  } catch (const Error& e) {
    return error_report(command, manifest.filename().string(), e);
  }
}

std::string emit_report(const ReportDocument& r, const std::string& format) {
  if (format == "json") return r.document.dump(2) + "\n";
  if (format == "text") {
    std::ostringstream out;
    flatten(r.document, "", out);
    return out.str();
  }
  throw Error(ErrorCode::UsageError, "unknown format '" + format + "', expected json or text");
}

}  // namespace afd
