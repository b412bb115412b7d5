#include "defzero/error.hpp"
#include "defzero/ffla.hpp"

namespace defzero::ffla {

MultiplicationTable::MultiplicationTable(Field field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), cells_(dim * dim) {}

void MultiplicationTable::accumulate(std::size_t i, std::size_t j, std::size_t k, Scalar coeff) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorCode::DimensionMismatch, "structure constant index out of range");
  if (coeff == 0) return;
  auto& cell = cells_[i * dim_ + j];
  for (auto& e : cell) {
    if (e.index == k) {
      e.coeff = field_.add(e.coeff, coeff);
      return;
    }
  }
  cell.push_back({static_cast<std::uint32_t>(k), coeff});
}

std::span<const MultiplicationTable::Entry> MultiplicationTable::product(std::size_t i, std::size_t j) const {
  return cells_[i * dim_ + j];
}

Vector MultiplicationTable::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "algebra element has wrong length");
  std::vector<std::uint32_t> sa, sb;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (a[i] != 0) sa.push_back(i);
    if (b[i] != 0) sb.push_back(i);
  }
  Vector out(dim_, 0);
  for (auto i : sa) {
    for (auto j : sb) {
      const Scalar ab = field_.mul(a[i], b[j]);
      for (const auto& e : cells_[std::size_t{i} * dim_ + j]) {
        out[e.index] = field_.add(out[e.index], field_.mul(ab, e.coeff));
      }
    }
  }
  return out;
}

bool MultiplicationTable::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vector x(dim_, 0), y(dim_, 0);
      for (const auto& e : product(i, j)) x[e.index] = field_.add(x[e.index], e.coeff);
      for (const auto& e : product(j, i)) y[e.index] = field_.add(y[e.index], e.coeff);
      if (x != y) return false;
    }
  }
  return true;
}

Subspace frobenius_iterate_kernel(const MultiplicationTable& algebra, unsigned iterations) {
  if (!algebra.is_commutative()) throw Error(ErrorCode::NotCommutative, "nilradical via Frobenius requires a commutative algebra");
  const Field& f = algebra.field();
  const std::size_t n = algebra.dim();
  const std::uint32_t p = f.characteristic();

  // Nilpotency index is at most n + 1.
  unsigned s = iterations;
  if (s == 0) {
    std::uint64_t ps = p;
    s = 1;
    while (ps < n + 1) {
      ps *= p;
      ++s;
    }
  }

  auto pth_power = [&](const Vector& x) {
    Vector y = x;
    for (std::uint32_t k = 1; k < p; ++k) y = algebra.multiply(y, x);
    return y;
  };

  Matrix images(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector x(n, 0);
    x[i] = 1;
    for (unsigned r = 0; r < s; ++r) x = pth_power(x);
    for (std::size_t k = 0; k < n; ++k) images.at(k, i) = x[k];
  }

  // x = sum c_i b_i maps to sum sigma(c_i) F(b_i) with sigma = Frobenius^s, so
  // the kernel is sigma^{-1} applied to the linear kernel.
  const Subspace linear = kernel(images);
  const unsigned m = f.degree();
  const unsigned undo = (m - s % m) % m;
  Subspace out(f, n);
  for (const auto& v : linear.basis()) {
    Vector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = f.frobenius(v[i], undo);
    out.insert(std::move(w));
  }
  return out;
}

}  // namespace defzero::ffla
