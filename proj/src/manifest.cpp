#include "afd/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "afd/error.hpp"

namespace afd {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevel{"base_constants", "algebra",     "metric",   "lambda",
                                      "kappa",          "stress_energy", "curves", "curve_parameter",
                                      "non_geodesic_curves", "vector_fields", "checks", "description",
                                      "notes"};
const std::set<std::string> kAlgebraFields{"kind", "generators", "transcendence_basis", "relations",
                                           "characteristic"};

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ValidationError, where + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where, "missing field '" + key + "'");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) invalid(where, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> as_strings(const json& v, const std::string& where) {
  if (!v.is_array()) invalid(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

ScalarValue parse_field(const AlgebraifoldPtr& A, const json& v, const std::string& where) {
  const std::string text = as_string(v, where);
  try {
    return A->parse(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::UnknownIdentifier)
      throw Error(e.code(), where + ": " + e.what());
    invalid(where, std::string("expression '") + text + "' is not an element of the algebra: " + e.what());
  }
}

Tensor parse_square(const AlgebraifoldPtr& A, const json& v, const std::string& where) {
  const std::size_t n = A->rank();
  if (!v.is_array() || v.size() != n)
    invalid(where, "expected " + std::to_string(n) + " rows of " + std::to_string(n) + " expressions");
  std::vector<std::vector<ScalarValue>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != n)
      invalid(row_where, "expected " + std::to_string(n) + " expressions, metric must be " + std::to_string(n) +
                             " x " + std::to_string(n));
    rows.emplace_back();
    for (std::size_t j = 0; j < n; ++j)
      rows.back().push_back(parse_field(A, v[i][j], row_where + "[" + std::to_string(j) + "]"));
  }
  return Tensor::from_matrix(A, rows);
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

AlgebraifoldPtr build_algebra(const json& doc, std::vector<std::string> constants) {
  const json& alg = require(doc, "algebra", "manifest");
  if (!alg.is_object()) invalid("algebra", "expected an object");
  for (const auto& [key, _] : alg.items())
    if (!kAlgebraFields.contains(key)) invalid("algebra", "unknown field '" + key + "'");

  const std::string kind_text = as_string(require(alg, "kind", "algebra"), "algebra.kind");
  AlgebraKind kind;
  if (kind_text == "polynomial")
    kind = AlgebraKind::polynomial;
  else if (kind_text == "field")
    kind = AlgebraKind::field;
  else
    invalid("algebra.kind", "expected \"polynomial\" or \"field\", found \"" + kind_text + "\"");

  std::vector<std::string> basis, generators;
  if (alg.contains("transcendence_basis")) basis = as_strings(alg["transcendence_basis"], "algebra.transcendence_basis");
  if (alg.contains("generators")) generators = as_strings(alg["generators"], "algebra.generators");
  if (basis.empty() && generators.empty()) invalid("algebra", "declare generators or transcendence_basis");
  if (basis.empty()) basis = generators;
  if (generators.empty()) generators = basis;
  for (const auto& b : basis)
    if (std::find(generators.begin(), generators.end(), b) == generators.end())
      invalid("algebra.transcendence_basis", "'" + b + "' is not listed among the generators");

  std::vector<std::string> algebraic;
  for (const auto& g : generators)
    if (std::find(basis.begin(), basis.end(), g) == basis.end()) algebraic.push_back(g);
  std::vector<std::string> relations;
  if (alg.contains("relations")) relations = as_strings(alg["relations"], "algebra.relations");
  if (relations.size() != algebraic.size())
    invalid("algebra.relations", std::to_string(algebraic.size()) + " algebraic generator(s) need exactly as many relations, found " +
                                     std::to_string(relations.size()));

  unsigned characteristic = 0;
  if (alg.contains("characteristic")) {
    if (!alg["characteristic"].is_number_unsigned()) invalid("algebra.characteristic", "expected a natural number");
    characteristic = alg["characteristic"].get<unsigned>();
  }

  std::vector<ExtensionDecl> decls;
  for (std::size_t i = 0; i < algebraic.size(); ++i) decls.push_back({algebraic[i], relations[i]});
  try {
    return build_algebraifold(ScalarContext::make(kind, std::move(constants), basis, decls, characteristic));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::UnknownIdentifier)
      throw Error(e.code(), std::string("algebra.relations: ") + e.what());
    throw;
  }
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"dim",      "christoffel", "curvature", "efe",
                                              "geodesic", "lie",         "bracket",   "pullback"};
  return names;
}

Manifest parse_manifest(const std::string& text, const std::string& source) {
  Manifest m;
  m.source = source;
  try {
    m.document = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    std::string detail = e.what();
    if (const auto p = detail.find("parse error"); p != std::string::npos) detail = detail.substr(p);
    throw Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + detail);
  }
  const json& doc = m.document;
  if (!doc.is_object()) invalid("manifest", "top level must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (!kTopLevel.contains(key)) invalid("manifest", "unknown field '" + key + "'");

  std::vector<std::string> constants;
  if (doc.contains("base_constants")) constants = as_strings(doc["base_constants"], "base_constants");
  m.algebra = build_algebra(doc, constants);
  const auto& A = m.algebra;
  m.warnings = A->context()->warnings();

  if (doc.contains("metric")) m.metric = parse_square(A, doc["metric"], "metric");
  m.lambda = doc.contains("lambda") ? parse_field(A, doc["lambda"], "lambda") : A->zero();
  m.kappa = doc.contains("kappa") ? parse_field(A, doc["kappa"], "kappa") : A->one();
  if (doc.contains("stress_energy")) m.stress_energy = parse_square(A, doc["stress_energy"], "stress_energy");

  const std::string param = doc.contains("curve_parameter") ? as_string(doc["curve_parameter"], "curve_parameter") : "t";
  try {
    m.line = A->context()->is_field() ? make_differential_line(constants, param) : make_formal_line(constants, param);
  } catch (const Error& e) {
    invalid("curve_parameter", e.what());
  }
  if (doc.contains("curves")) {
    const json& curves = doc["curves"];
    if (!curves.is_object()) invalid("curves", "expected an object of named curves");
    for (const auto& [name, table] : curves.items()) {
      const std::string where = "curves." + name;
      if (!table.is_object()) invalid(where, "expected an object mapping generators to expressions");
      Manifest::Curve c{name, {}};
      for (const auto& [gen, expr] : table.items()) c.images.emplace(gen, parse_field(m.line->algebra, expr, where + "." + gen));
      m.curves.push_back(std::move(c));
    }
    if (!m.curves.empty() && !m.line->is_formal_line)
      m.warnings.push_back("curves map into the differential line Q(" + param +
                           "), which is not a formal line; antiderivatives may not exist");
  }
  if (doc.contains("non_geodesic_curves")) {
    for (const auto& name : as_strings(doc["non_geodesic_curves"], "non_geodesic_curves")) {
      if (!doc.contains("curves") || !doc["curves"].contains(name))
        invalid("non_geodesic_curves", "unknown curve '" + name + "'");
      m.non_geodesic_curves.insert(name);
    }
  }
  if (doc.contains("vector_fields")) {
    const json& fields = doc["vector_fields"];
    if (!fields.is_object()) invalid("vector_fields", "expected an object of named component lists");
    for (const auto& [name, comps] : fields.items()) {
      const std::string where = "vector_fields." + name;
      if (!comps.is_array() || comps.size() != A->rank())
        invalid(where, "expected " + std::to_string(A->rank()) + " component expressions");
      Derivation v = Derivation::zero(A);
      for (std::size_t i = 0; i < comps.size(); ++i)
        v.coeffs[i] = parse_field(A, comps[i], where + "[" + std::to_string(i) + "]");
      m.vector_fields.emplace_back(name, std::move(v));
    }
  }
  if (doc.contains("checks")) {
    for (const auto& c : as_strings(doc["checks"], "checks")) {
      if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
        invalid("checks", "unknown check '" + c + "'");
      if (std::find(m.checks.begin(), m.checks.end(), c) == m.checks.end()) m.checks.push_back(c);
    }
  }
  if (doc.contains("description") && !doc["description"].is_string()) invalid("description", "expected a string");
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open manifest '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.filename().string());
}

}  // namespace afd
