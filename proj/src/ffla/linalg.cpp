#include <algorithm>
#include <istream>
#include <ostream>

#include "defzero/error.hpp"
#include "defzero/ffla.hpp"

namespace defzero::ffla {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "matrix row has wrong length");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar b = rhs.at(k, j);
        if (b != 0) out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, b));
      }
    }
  }
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (x[c] != 0 && at(r, c) != 0) s = field_.add(s, field_.mul(at(r, c), x[c]));
    }
    out[r] = s;
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(Matrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m.at(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row) {
      auto a = m.row(r);
      auto b = m.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Scalar inv = f.inv(m.at(lead_row, c));
    auto pivot_row = m.row(lead_row);
    for (auto& x : pivot_row) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row) continue;
      const Scalar factor = m.at(i, c);
      if (factor == 0) continue;
      auto target = m.row(i);
      const Scalar neg = f.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (pivot_row[j] != 0) target[j] = f.add(target[j], f.mul(neg, pivot_row[j]));
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = e.reduced.at(r, n + c);
  }
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto e = row_reduce(std::move(aug));
  Vector x(m.cols(), 0);
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const auto c = e.pivots[r];
    if (c == m.cols()) return std::nullopt;
    x[c] = e.reduced.at(r, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(Field field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

Subspace Subspace::span(Field field, std::size_t ambient, std::span<const Vector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw Error(ErrorCode::DimensionMismatch, "span: vector length mismatch");
  }
  Subspace s(std::move(field), ambient);
  for (const auto& v : vectors) {
    if (s.dim() == ambient) break;
    s.insert(v);
  }
  return s;
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  Subspace s(std::move(field), ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient, 0);
    e[i] = 1;
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace: vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (c != 0) axpy(field_, v, field_.neg(c), rows_[r]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::insert(Vector v) {
  v = reduce(std::move(v));
  const auto it = std::find_if(v.begin(), v.end(), [](Scalar x) { return x != 0; });
  if (it == v.end()) return false;
  const auto col = static_cast<std::size_t>(it - v.begin());
  const Scalar inv = field_.inv(*it);
  for (auto& x : v) x = field_.mul(x, inv);
  for (auto& row : rows_) {
    const Scalar c = row[col];
    if (c != 0) axpy(field_, row, field_.neg(c), v);
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), col);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (ambient_ != other.ambient_ || !(field_ == other.field_)) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
}

bool Subspace::leq(const Subspace& other) const {
  check_compatible(other);
  if (dim() > other.dim()) return false;
  return std::all_of(rows_.begin(), rows_.end(), [&](const Vector& r) { return other.contains(r); });
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  Subspace out = *this;
  for (const auto& r : other.rows_) out.insert(r);
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  // Kernel of the map (a, b) -> sum a_i u_i + sum b_j v_j; the u-part of each
  // kernel vector lies in the intersection and these span it.
  const std::size_t du = dim();
  const std::size_t dv = other.dim();
  Matrix m(field_, ambient_, du + dv);
  for (std::size_t i = 0; i < du; ++i) {
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, i) = rows_[i][r];
  }
  for (std::size_t j = 0; j < dv; ++j) {
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, du + j) = other.rows_[j][r];
  }
  const Subspace k = kernel(m);
  Subspace out(field_, ambient_);
  for (const auto& coeffs : k.basis()) {
    Vector v(ambient_, 0);
    for (std::size_t i = 0; i < du; ++i) axpy(field_, v, coeffs[i], rows_[i]);
    out.insert(std::move(v));
  }
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

bool subspace_equal(const Subspace& u, const Subspace& v) { return u.dim() == v.dim() && u.leq(v); }

bool subspace_leq(const Subspace& u, const Subspace& v) { return u.leq(v); }

Subspace kernel(const Matrix& m) {
  const auto e = row_reduce(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Subspace out(f, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = f.neg(e.reduced.at(r, free));
    out.insert(std::move(x));
  }
  return out;
}

Subspace image(const Matrix& m) {
  Subspace out(m.field(), m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vector col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
    out.insert(std::move(col));
  }
  return out;
}

// ---------------------------------------------------------------------------

void write_matrix(std::ostream& out, const Matrix& m) {
  const Field& f = m.field();
  out << "matrix " << m.rows() << ' ' << m.cols() << ' ' << f.characteristic() << ' ' << f.degree();
  for (auto c : f.modulus()) out << ' ' << c;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c);
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in) {
  std::string tag;
  std::size_t rows = 0, cols = 0;
  std::uint32_t p = 0;
  unsigned deg = 0;
  if (!(in >> tag >> rows >> cols >> p >> deg) || tag != "matrix") {
    throw Error(ErrorCode::Parse, "matrix dump: bad header");
  }
  std::vector<std::uint32_t> modulus(deg + 1);
  for (auto& c : modulus) {
    if (!(in >> c)) throw Error(ErrorCode::Parse, "matrix dump: bad modulus");
  }
  Field f = deg == 1 ? Field::prime(p) : Field::with_modulus(p, modulus);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t x = 0;
      if (!(in >> x) || x >= f.size()) throw Error(ErrorCode::Parse, "matrix dump: bad entry");
      m.at(r, c) = static_cast<Scalar>(x);
    }
  }
  return m;
}

}  // namespace defzero::ffla
