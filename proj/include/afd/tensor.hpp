#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "afd/algebraifold.hpp"

namespace afd {

/// Component position; 0-based, contravariant slots first.
using Index = std::vector<std::uint32_t>;

/// Rank-(r,s) tensor stored as its nonzero components in the dual basis.
class Tensor {
 public:
  Tensor(AlgebraifoldPtr algebra, std::size_t contravariant, std::size_t covariant);

  static Tensor scalar(const AlgebraifoldPtr& algebra, const ScalarValue& value);
  static Tensor from_derivation(const Derivation& v);
  static Tensor from_one_form(const OneForm& eta);
  /// Rank-(0,2) tensor from an n x n array.
  static Tensor from_matrix(const AlgebraifoldPtr& algebra, const std::vector<std::vector<ScalarValue>>& rows);

  const AlgebraifoldPtr& algebra() const { return algebra_; }
  std::size_t contravariant_rank() const { return r_; }
  std::size_t covariant_rank() const { return s_; }
  std::size_t order() const { return r_ + s_; }

  /// Zero when the component is not stored. Throws SlotOutOfRange.
  ScalarValue at(const Index& index) const;
  /// Stores value (erasing it when zero). Throws SlotOutOfRange.
  void set(const Index& index, const ScalarValue& value);
  void add_to(const Index& index, const ScalarValue& value);
  const std::map<Index, ScalarValue>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  ScalarValue as_scalar() const;
  Derivation as_derivation() const;
  OneForm as_one_form() const;

  Tensor operator-() const;
  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const ScalarValue& a, const Tensor& t);
  friend bool operator==(const Tensor& a, const Tensor& b);

 private:
  void check_index(const Index& index) const;

  AlgebraifoldPtr algebra_;
  std::size_t r_ = 0;
  std::size_t s_ = 0;
  std::map<Index, ScalarValue> components_;
};

/// Applies fn to every stored component.
Tensor map_components(const Tensor& t, const std::function<ScalarValue(const ScalarValue&)>& fn);

Tensor tensor_product(const Tensor& t, const Tensor& u);
/// Contracts the given contravariant and covariant slots (1-based within each group).
Tensor contract(const Tensor& t, std::size_t contra_slot, std::size_t cov_slot);
Tensor kronecker(const AlgebraifoldPtr& algebra);
ScalarValue evaluate_tensor(const Tensor& t, const std::vector<OneForm>& oneforms,
                            const std::vector<Derivation>& derivations);
Tensor lie_derivative(const AlgebraifoldPtr& algebra, const Derivation& u, const Tensor& t);

struct Metric {
  Tensor g;      // rank (0,2)
  Tensor g_inv;  // rank (2,0)
};

/// Throws NotSymmetric, Degenerate or NotInvertibleInAlgebra.
Metric metric_inverse(const AlgebraifoldPtr& algebra, const Tensor& g);
OneForm musical_flat(const AlgebraifoldPtr& algebra, const Metric& m, const Derivation& v);
Derivation musical_sharp(const AlgebraifoldPtr& algebra, const Metric& m, const OneForm& eta);

}  // namespace afd
