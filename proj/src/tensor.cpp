#include "afd/tensor.hpp"

#include "afd/error.hpp"

namespace afd {

namespace {

void require_rank(const Tensor& t, std::size_t r, std::size_t s, const char* what) {
  if (t.contravariant_rank() != r || t.covariant_rank() != s)
    throw Error(ErrorCode::ArityMismatch, std::string(what) + ": expected a rank-(" + std::to_string(r) + "," +
                                              std::to_string(s) + ") tensor");
}

std::vector<std::vector<ScalarValue>> dense_matrix(const Tensor& t) {
  const std::size_t n = t.algebra()->rank();
  std::vector<std::vector<ScalarValue>> m(n, std::vector<ScalarValue>(n, t.algebra()->zero()));
  for (const auto& [idx, v] : t.components()) m[idx[0]][idx[1]] = v;
  return m;
}

}  // namespace

Tensor::Tensor(AlgebraifoldPtr algebra, std::size_t contravariant, std::size_t covariant)
    : algebra_(std::move(algebra)), r_(contravariant), s_(covariant) {}

Tensor Tensor::scalar(const AlgebraifoldPtr& algebra, const ScalarValue& value) {
  Tensor t(algebra, 0, 0);
  t.set({}, value);
  return t;
}

Tensor Tensor::from_derivation(const Derivation& v) {
  Tensor t(v.algebra, 1, 0);
  for (std::uint32_t i = 0; i < v.coeffs.size(); ++i) t.set({i}, v.coeffs[i]);
  return t;
}

Tensor Tensor::from_one_form(const OneForm& eta) {
  Tensor t(eta.algebra, 0, 1);
  for (std::uint32_t i = 0; i < eta.coeffs.size(); ++i) t.set({i}, eta.coeffs[i]);
  return t;
}

Tensor Tensor::from_matrix(const AlgebraifoldPtr& algebra, const std::vector<std::vector<ScalarValue>>& rows) {
  const std::size_t n = algebra->rank();
  if (rows.size() != n) throw Error(ErrorCode::ArityMismatch, "matrix must be " + std::to_string(n) + " x " + std::to_string(n));
  Tensor t(algebra, 0, 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorCode::ArityMismatch, "matrix must be " + std::to_string(n) + " x " + std::to_string(n));
    for (std::uint32_t j = 0; j < n; ++j) t.set({i, j}, rows[i][j]);
  }
  return t;
}

void Tensor::check_index(const Index& index) const {
  if (index.size() != order())
    throw Error(ErrorCode::SlotOutOfRange, "index has " + std::to_string(index.size()) + " slots, tensor has " +
                                               std::to_string(order()));
  for (auto i : index)
    if (i >= algebra_->rank()) throw Error(ErrorCode::SlotOutOfRange, "index component out of range");
}

ScalarValue Tensor::at(const Index& index) const {
  check_index(index);
  const auto it = components_.find(index);
  return it == components_.end() ? algebra_->zero() : it->second;
}

void Tensor::set(const Index& index, const ScalarValue& value) {
  check_index(index);
  if (!same_context(value.context(), algebra_->context()))
    throw Error(ErrorCode::ContextMismatch, "component does not belong to the tensor's algebraifold");
  if (value.is_zero())
    components_.erase(index);
  else
    components_.insert_or_assign(index, value);
}

void Tensor::add_to(const Index& index, const ScalarValue& value) {
  if (value.is_zero()) return;
  const auto it = components_.find(index);
  if (it == components_.end()) {
    set(index, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) components_.erase(it);
}

ScalarValue Tensor::as_scalar() const {
  require_rank(*this, 0, 0, "as_scalar");
  return at({});
}

Derivation Tensor::as_derivation() const {
  require_rank(*this, 1, 0, "as_derivation");
  Derivation v = Derivation::zero(algebra_);
  for (const auto& [idx, c] : components_) v.coeffs[idx[0]] = c;
  return v;
}

OneForm Tensor::as_one_form() const {
  require_rank(*this, 0, 1, "as_one_form");
  OneForm f = OneForm::zero(algebra_);
  for (const auto& [idx, c] : components_) f.coeffs[idx[0]] = c;
  return f;
}

Tensor Tensor::operator-() const {
  Tensor out = *this;
  for (auto& [idx, c] : out.components_) c = -c;
  return out;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  require_rank(b, a.r_, a.s_, "tensor sum");
  Tensor out = a;
  for (const auto& [idx, c] : b.components_) out.add_to(idx, c);
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + (-b); }

Tensor operator*(const ScalarValue& a, const Tensor& t) {
  Tensor out(t.algebra_, t.r_, t.s_);
  if (a.is_zero()) return out;
  for (const auto& [idx, c] : t.components_) out.set(idx, a * c);
  return out;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.r_ == b.r_ && a.s_ == b.s_ && a.components_ == b.components_;
}

Tensor map_components(const Tensor& t, const std::function<ScalarValue(const ScalarValue&)>& fn) {
  Tensor out(t.algebra(), t.contravariant_rank(), t.covariant_rank());
  for (const auto& [idx, c] : t.components()) out.set(idx, fn(c));
  return out;
}

Tensor tensor_product(const Tensor& t, const Tensor& u) {
  require_same_algebra(t.algebra(), u.algebra());
  const std::size_t tr = t.contravariant_rank(), ur = u.contravariant_rank();
  Tensor out(t.algebra(), tr + ur, t.covariant_rank() + u.covariant_rank());
  for (const auto& [ti, tc] : t.components()) {
    for (const auto& [ui, uc] : u.components()) {
      Index idx;
      idx.reserve(ti.size() + ui.size());
      idx.insert(idx.end(), ti.begin(), ti.begin() + tr);
      idx.insert(idx.end(), ui.begin(), ui.begin() + ur);
      idx.insert(idx.end(), ti.begin() + tr, ti.end());
      idx.insert(idx.end(), ui.begin() + ur, ui.end());
      out.set(idx, tc * uc);
    }
  }
  return out;
}

Tensor contract(const Tensor& t, std::size_t contra_slot, std::size_t cov_slot) {
  const std::size_t r = t.contravariant_rank(), s = t.covariant_rank();
  if (contra_slot < 1 || contra_slot > r || cov_slot < 1 || cov_slot > s)
    throw Error(ErrorCode::SlotOutOfRange, "contraction slots (" + std::to_string(contra_slot) + ", " +
                                               std::to_string(cov_slot) + ") out of range for rank (" +
                                               std::to_string(r) + "," + std::to_string(s) + ")");
  const std::size_t a = contra_slot - 1, b = r + cov_slot - 1;
  Tensor out(t.algebra(), r - 1, s - 1);
  for (const auto& [idx, c] : t.components()) {
    if (idx[a] != idx[b]) continue;
    Index reduced;
    reduced.reserve(idx.size() - 2);
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (k != a && k != b) reduced.push_back(idx[k]);
    out.add_to(reduced, c);
  }
  return out;
}

Tensor kronecker(const AlgebraifoldPtr& algebra) {
  Tensor out(algebra, 1, 1);
  for (std::uint32_t i = 0; i < algebra->rank(); ++i) out.set({i, i}, algebra->one());
  return out;
}

ScalarValue evaluate_tensor(const Tensor& t, const std::vector<OneForm>& oneforms,
                            const std::vector<Derivation>& derivations) {
  const std::size_t r = t.contravariant_rank();
  if (oneforms.size() != r || derivations.size() != t.covariant_rank())
    throw Error(ErrorCode::ArityMismatch, "tensor of rank (" + std::to_string(r) + "," +
                                              std::to_string(t.covariant_rank()) + ") evaluated on " +
                                              std::to_string(oneforms.size()) + " one-forms and " +
                                              std::to_string(derivations.size()) + " derivations");
  for (const auto& f : oneforms) require_same_algebra(t.algebra(), f.algebra);
  for (const auto& v : derivations) require_same_algebra(t.algebra(), v.algebra);
  ScalarValue acc = t.algebra()->zero();
  for (const auto& [idx, c] : t.components()) {
    ScalarValue term = c;
    for (std::size_t k = 0; k < idx.size() && !term.is_zero(); ++k)
      term *= k < r ? oneforms[k].coeffs[idx[k]] : derivations[k - r].coeffs[idx[k]];
    acc += term;
  }
  return acc;
}

Tensor lie_derivative(const AlgebraifoldPtr& algebra, const Derivation& u, const Tensor& t) {
  require_same_algebra(algebra, u.algebra);
  require_same_algebra(algebra, t.algebra());
  const std::size_t n = algebra->rank(), r = t.contravariant_rank();
  // jac[m][a] = u_m(u^a)
  std::vector<std::vector<ScalarValue>> jac(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a) jac[m].push_back(algebra->apply_basis(m, u.coeffs[a]));

  Tensor out(algebra, r, t.covariant_rank());
  for (const auto& [idx, c] : t.components()) {
    out.add_to(idx, apply_derivation(algebra, u, c));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::uint32_t m = idx[k];
      Index moved = idx;
      for (std::uint32_t a = 0; a < n; ++a) {
        moved[k] = a;
        if (k < r) {
          if (!jac[m][a].is_zero()) out.add_to(moved, -(jac[m][a] * c));
        } else if (!jac[a][m].is_zero()) {
          out.add_to(moved, jac[a][m] * c);
        }
      }
    }
  }
  return out;
}

Metric metric_inverse(const AlgebraifoldPtr& algebra, const Tensor& g) {
  require_same_algebra(algebra, g.algebra());
  require_rank(g, 0, 2, "metric");
  const std::size_t n = algebra->rank();
  const auto m = dense_matrix(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(m[i][j] == m[j][i]))
        throw Error(ErrorCode::NotSymmetric,
                    "metric is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

  // Gauss-Jordan over the fraction field.
  const ContextPtr field = algebra->context()->fraction_field();
  std::vector<std::vector<ScalarValue>> a(n), inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i].push_back(m[i][j].rebased(field));
      inv[i].push_back(i == j ? ScalarValue::one(field) : ScalarValue::zero(field));
    }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Degenerate, "metric determinant is zero");
    std::swap(a[pivot], a[c]);
    std::swap(inv[pivot], inv[c]);
    const ScalarValue p = ScalarValue::one(field) / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= p;
      inv[c][k] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const ScalarValue f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }

  Metric out{g, Tensor(algebra, 2, 0)};
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      ScalarValue e = inv[i][j].rebased(algebra->context());
      if (!in_algebra(e))
        throw Error(ErrorCode::NotInvertibleInAlgebra, "inverse metric entry (" + std::to_string(i + 1) + "," +
                                                           std::to_string(j + 1) +
                                                           ") lies outside the coordinate algebra");
      out.g_inv.set({i, j}, e);
    }
  return out;
}

OneForm musical_flat(const AlgebraifoldPtr& algebra, const Metric& m, const Derivation& v) {
  require_same_algebra(algebra, v.algebra);
  OneForm out = OneForm::zero(algebra);
  for (const auto& [idx, c] : m.g.components()) out.coeffs[idx[0]] += c * v.coeffs[idx[1]];
  return out;
}

Derivation musical_sharp(const AlgebraifoldPtr& algebra, const Metric& m, const OneForm& eta) {
  require_same_algebra(algebra, eta.algebra);
  Derivation out = Derivation::zero(algebra);
  for (const auto& [idx, c] : m.g_inv.components()) out.coeffs[idx[0]] += c * eta.coeffs[idx[1]];
  return out;
}

}  // namespace afd
