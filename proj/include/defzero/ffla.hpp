#pragma once

// Exact arithmetic over GF(p^m) and dense linear algebra on top of it.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace defzero::ffla {

/// A field element, encoded as the integer sum c_0 + c_1 p + ... + c_{m-1} p^{m-1}
/// of its coefficients in the polynomial basis. Codes 0 and 1 are zero and one,
/// and codes below p form the prime subfield.
using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

class Field {
 public:
  /// GF(p). Throws InvalidArgument unless p is prime.
  static Field prime(std::uint32_t p);
  /// GF(p^m) over the first irreducible monic modulus in code order.
  static Field extension(std::uint32_t p, unsigned degree);
  /// GF(p^m) over an explicit monic modulus, coefficients low to high (size m+1).
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint64_t size() const noexcept;
  const std::vector<std::uint32_t>& modulus() const noexcept;

  Scalar add(Scalar a, Scalar b) const;
  Scalar sub(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// a^(p^k).
  Scalar frobenius(Scalar a, unsigned k) const;
  /// Image of an integer in the prime subfield.
  Scalar from_int(std::int64_t v) const;
  bool in_prime_field(Scalar a) const noexcept { return a < characteristic(); }

  std::vector<std::uint32_t> coefficients(Scalar a) const;
  Scalar from_coefficients(std::span<const std::uint32_t> coeffs) const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Is the monic polynomial (coefficients low to high, leading 1) irreducible over GF(p)?
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);
/// Multiplicative order of p modulo n (n coprime to p, n >= 1).
unsigned multiplicative_order(std::uint64_t p, std::uint64_t n);

// Vector helpers; all sizes must agree.
Vector add(const Field& f, const Vector& a, const Vector& b);
Vector sub(const Field& f, const Vector& a, const Vector& b);
Vector scale(const Field& f, Scalar c, const Vector& a);
/// a += c * b
void axpy(const Field& f, Vector& a, Scalar c, const Vector& b);
bool is_zero(const Vector& v) noexcept;
Scalar dot(const Field& f, const Vector& a, const Vector& b);

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vector apply(const Vector& x) const;  // M x

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Echelon data of a matrix after in-place reduction to reduced row echelon form.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// An echelonized basis of a subspace of F^n. Rows are kept in reduced row
/// echelon form: pivots strictly increase, pivot entries are 1 and every
/// pivot column is zero in all other rows. Equality is a row comparison.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, std::span<const Vector> vectors);
  static Subspace whole(Field field, std::size_t ambient);

  /// Adds v to the spanning set; returns whether the dimension grew.
  bool insert(Vector v);
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Vector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool leq(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  void check_compatible(const Subspace& other) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

bool subspace_equal(const Subspace& u, const Subspace& v);
bool subspace_leq(const Subspace& u, const Subspace& v);
/// Right kernel {x : m x = 0}.
Subspace kernel(const Matrix& m);
/// The image {m x}, i.e. the column space.
Subspace image(const Matrix& m);

/// Sparse structure constants of an n-dimensional algebra: the product of basis
/// vectors b_i b_j is sum_k c(i,j,k) b_k.
class MultiplicationTable {
 public:
  struct Entry {
    std::uint32_t index;
    Scalar coeff;
  };

  MultiplicationTable(Field field, std::size_t dim);

  /// Adds coeff to c(i,j,k). Must be called before any product is taken.
  void accumulate(std::size_t i, std::size_t j, std::size_t k, Scalar coeff);
  std::span<const Entry> product(std::size_t i, std::size_t j) const;
  Vector multiply(const Vector& a, const Vector& b) const;

  std::size_t dim() const noexcept { return dim_; }
  const Field& field() const noexcept { return field_; }
  bool is_commutative() const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<Entry>> cells_;
};

/// The nilradical of a commutative algebra over GF(p^m): the kernel of
/// x -> x^(p^s) with p^s >= dim. That map is semilinear, so its kernel is the
/// inverse Frobenius image of the kernel of the linear map with the same values
/// on the basis. `iterations` overrides s when nonzero.
Subspace frobenius_iterate_kernel(const MultiplicationTable& algebra, unsigned iterations = 0);

/// Plain-text matrix dump: "matrix R C p m" header, then R rows of field codes.
void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in);

}  // namespace defzero::ffla
