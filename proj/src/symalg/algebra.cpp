#include <random>

#include "defzero/error.hpp"
#include "defzero/symalg.hpp"

namespace defzero::symalg {

namespace {

constexpr std::size_t kExhaustiveAssociativity = 64;
constexpr std::size_t kRandomTriples = 4096;

Vector product_of_basis(const MultiplicationTable& t, std::size_t i, std::size_t j) {
  Vector out(t.dim(), 0);
  for (const auto& e : t.product(i, j)) out[e.index] = t.field().add(out[e.index], e.coeff);
  return out;
}

}  // namespace

Algebra::Algebra(MultiplicationTable table, Vector unit) : table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t n = dim();
  if (unit_.size() != n) throw Error(ErrorCode::DimensionMismatch, "unit has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector b = basis(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) {
      throw Error(ErrorCode::InvalidArgument, "unit is not a two-sided identity on basis vector " + std::to_string(i));
    }
  }
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Vector left = multiply(product_of_basis(table_, i, j), basis(k));
    const Vector right = multiply(basis(i), product_of_basis(table_, j, k));
    if (left != right) {
      throw Error(ErrorCode::InvalidArgument, "multiplication is not associative on basis triple (" + std::to_string(i) +
                                                  ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
    }
  };
  if (n <= kExhaustiveAssociativity) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) check(i, j, k);
      }
    }
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < kRandomTriples; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

Vector Algebra::basis(std::size_t i) const {
  Vector v(dim(), 0);
  v.at(i) = 1;
  return v;
}

Matrix Algebra::left_multiplication(const Vector& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vector col = multiply(a, basis(j));
    for (std::size_t r = 0; r < dim(); ++r) m.at(r, j) = col[r];
  }
  return m;
}

Matrix Algebra::right_multiplication(const Vector& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vector col = multiply(basis(j), a);
    for (std::size_t r = 0; r < dim(); ++r) m.at(r, j) = col[r];
  }
  return m;
}

SymmetrizingForm::SymmetrizingForm(const Algebra& algebra, Vector coefficients)
    : field_(algebra.field()),
      coeffs_(std::move(coefficients)),
      gram_(algebra.field(), algebra.dim(), algebra.dim()),
      gram_inverse_(algebra.field(), algebra.dim(), algebra.dim()) {
  const std::size_t n = algebra.dim();
  if (coeffs_.size() != n) throw Error(ErrorCode::DimensionMismatch, "linear form has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = 0;
      for (const auto& e : algebra.table().product(i, j)) s = field_.add(s, field_.mul(e.coeff, coeffs_[e.index]));
      gram_.at(i, j) = s;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_.at(i, j) != gram_.at(j, i)) throw Error(ErrorCode::InvalidArgument, "linear form is not symmetric");
    }
  }
  auto inv = ffla::inverse(gram_);
  if (!inv) throw Error(ErrorCode::InvalidArgument, "linear form is degenerate");
  gram_inverse_ = std::move(*inv);
}

Scalar SymmetrizingForm::operator()(const Vector& a) const { return ffla::dot(field_, coeffs_, a); }

DualBases dual_bases(const Algebra& a, const SymmetrizingForm& lambda) {
  DualBases out;
  const std::size_t n = a.dim();
  const Matrix& x = lambda.gram_inverse();
  for (std::size_t j = 0; j < n; ++j) {
    out.basis.push_back(a.basis(j));
    Vector d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = x.at(k, j);
    out.dual.push_back(std::move(d));
  }
  return out;
}

Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Matrix stacked(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // column j of block i: b_i b_j - b_j b_i
      Vector col = ffla::sub(f, product_of_basis(a.table(), i, j), product_of_basis(a.table(), j, i));
      for (std::size_t r = 0; r < n; ++r) stacked.at(i * n + r, j) = col[r];
    }
  }
  return ffla::kernel(stacked);
}

Subspace left_ideal(const Algebra& a, const Vector& x) {
  Subspace out(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.insert(a.multiply(a.basis(i), x));
  return out;
}

Subspace left_annihilator(const Algebra& a, const Subspace& j) {
  const std::size_t n = a.dim();
  Matrix stacked(a.field(), std::max<std::size_t>(1, j.dim() * n), n);
  for (std::size_t t = 0; t < j.dim(); ++t) {
    const Matrix r = a.right_multiplication(j.basis()[t]);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t c = 0; c < n; ++c) stacked.at(t * n + row, c) = r.at(row, c);
    }
  }
  return ffla::kernel(stacked);
}

Subspace orthogonal_complement(const Algebra& a, const SymmetrizingForm& lambda, const Subspace& j) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), std::max<std::size_t>(1, j.dim()), n);
  for (std::size_t t = 0; t < j.dim(); ++t) {
    for (std::size_t k = 0; k < n; ++k) m.at(t, k) = lambda(a.multiply(a.basis(k), j.basis()[t]));
  }
  return ffla::kernel(m);
}

bool is_closed_under(const Algebra& a, const Subspace& l, const Subspace& multipliers) {
  for (const auto& m : multipliers.basis()) {
    for (const auto& v : l.basis()) {
      if (!l.contains(a.multiply(m, v)) || !l.contains(a.multiply(v, m))) return false;
    }
  }
  return true;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& i) {
  return is_closed_under(a, i, Subspace::whole(a.field(), a.dim()));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> complement_of(const Subspace& ideal) {
  std::vector<char> pivot(ideal.ambient(), 0);
  for (auto c : ideal.pivots()) pivot[c] = 1;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ideal.ambient(); ++c) {
    if (!pivot[c]) out.push_back(c);
  }
  return out;
}

Algebra build_quotient(const Algebra& a, const Subspace& ideal, const std::vector<std::size_t>& complement) {
  if (ideal.ambient() != a.dim() || !(ideal.field() == a.field())) {
    throw Error(ErrorCode::DimensionMismatch, "ideal lives in a different space");
  }
  if (!is_two_sided_ideal(a, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a two-sided ideal");
  const std::size_t k = complement.size();
  auto project = [&](const Vector& v) {
    const Vector r = ideal.reduce(v);
    Vector out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = r[complement[j]];
    return out;
  };
  MultiplicationTable t(a.field(), k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vector prod = project(product_of_basis(a.table(), complement[i], complement[j]));
      for (std::size_t l = 0; l < k; ++l) t.accumulate(i, j, l, prod[l]);
    }
  }
  return Algebra(std::move(t), project(a.unit()));
}

}  // namespace

QuotientAlgebra::QuotientAlgebra(const Algebra& a, Subspace ideal)
    : ideal_(std::move(ideal)), complement_(complement_of(ideal_)), quotient_(build_quotient(a, ideal_, complement_)) {}

Vector QuotientAlgebra::project(const Vector& a) const {
  const Vector r = ideal_.reduce(a);
  Vector out(complement_.size());
  for (std::size_t j = 0; j < complement_.size(); ++j) out[j] = r[complement_[j]];
  return out;
}

Vector QuotientAlgebra::lift(const Vector& x) const {
  if (x.size() != complement_.size()) throw Error(ErrorCode::DimensionMismatch, "lift: element has wrong length");
  Vector out(ideal_.ambient(), 0);
  for (std::size_t j = 0; j < complement_.size(); ++j) out[complement_[j]] = x[j];
  return out;
}

// --- builders ---------------------------------------------------------------

Algebra field_algebra(const Field& f) {
  MultiplicationTable t(f, 1);
  t.accumulate(0, 0, 0, 1);
  return Algebra(std::move(t), Vector{1});
}

Algebra matrix_algebra(const Field& f, std::size_t n) {
  MultiplicationTable t(f, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) t.accumulate(i * n + j, j * n + l, i * n + l, 1);
    }
  }
  Vector unit(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return Algebra(std::move(t), std::move(unit));
}

Vector matrix_trace_form(const Field& f, std::size_t n) {
  (void)f;
  Vector v(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1;
  return v;
}

Algebra truncated_polynomial(const Field& f, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "F[x]/(x^0) is the zero ring");
  MultiplicationTable t(f, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; i + j < k; ++j) t.accumulate(i, j, i + j, 1);
  }
  Vector unit(k, 0);
  unit[0] = 1;
  return Algebra(std::move(t), std::move(unit));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::InvalidArgument, "direct product over different fields");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  MultiplicationTable t(a.field(), na + nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (const auto& e : a.table().product(i, j)) t.accumulate(i, j, e.index, e.coeff);
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (const auto& e : b.table().product(i, j)) t.accumulate(na + i, na + j, na + e.index, e.coeff);
    }
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra(std::move(t), std::move(unit));
}

}  // namespace defzero::symalg
