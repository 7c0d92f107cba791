#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "afd/multipoly.hpp"
#include "afd/ratfunc.hpp"
#include "afd/unipoly.hpp"

namespace afd {

enum class AlgebraKind { polynomial, field };

/// The single algebraic generator y of a field context, with minimal
/// relation p(x, y) = 0 of degree d in y.
struct Extension {
  std::string generator;
  std::size_t generator_index = 0;  // position in the context variable list
  MultiPoly relation;               // p as written, over the context variables
  UniPoly<RatFunc> modulus;         // p made monic in y, coefficients free of y
  std::size_t degree = 0;
  bool irreducibility_verified = false;
  /// dy/dx_i for each transcendental x_i, as reduced coefficient sequences.
  std::vector<std::vector<RatFunc>> generator_partials;
};

struct ExtensionDecl {
  std::string generator;
  /// Polynomial text in the expression grammar; "lhs = rhs" is read as lhs - rhs.
  std::string relation;
};

class ScalarContext;
using ContextPtr = std::shared_ptr<const ScalarContext>;

/// Describes the coordinate algebra: Q(constants)[x_1..x_n] or
/// Q(constants)(x_1..x_n)[y]/(p). The variable list used by every polynomial
/// in the context is constants, then transcendentals, then the generator.
class ScalarContext {
 public:
  /// Validates identifiers and the extension. Throws InvalidContext,
  /// UnsupportedTower, NotSeparable or Reducible.
  static ContextPtr make(AlgebraKind kind, std::vector<std::string> constants,
                         std::vector<std::string> transcendentals,
                         std::vector<ExtensionDecl> extensions = {}, unsigned characteristic = 0);

  AlgebraKind kind() const { return kind_; }
  bool is_field() const { return kind_ == AlgebraKind::field; }
  const std::vector<std::string>& constants() const { return constants_; }
  const std::vector<std::string>& transcendentals() const { return transcendentals_; }
  const VariablesPtr& variables() const { return vars_; }
  const std::shared_ptr<const Extension>& extension() const { return extension_; }
  std::size_t dimension() const { return transcendentals_.size(); }

  std::optional<std::size_t> variable_index(const std::string& name) const;
  /// Position among the transcendentals, if name is one.
  std::optional<std::size_t> transcendental_position(const std::string& name) const;
  std::size_t transcendental_variable(std::size_t position) const {
    return constants_.size() + position;
  }
  bool is_constant_variable(std::size_t var) const { return var < constants_.size(); }

  /// The same presentation as a field (identity for field contexts).
  ContextPtr fraction_field() const;
  bool same_as(const ScalarContext& other) const;
  std::vector<std::string> warnings() const;

 private:
  ScalarContext() = default;

  AlgebraKind kind_ = AlgebraKind::polynomial;
  std::vector<std::string> constants_;
  std::vector<std::string> transcendentals_;
  std::vector<ExtensionDecl> extension_decls_;
  VariablesPtr vars_;
  std::shared_ptr<const Extension> extension_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace afd
