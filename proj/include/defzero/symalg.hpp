#pragma once

// Finite-dimensional algebras given by structure constants, symmetrizing forms,
// symmetric quotients A -> A/I with the adjoint map x -> lift(x) z, and the
// central ideals Z(A), H(A), R(A), Z0(A).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "defzero/ffla.hpp"

namespace defzero::symalg {

using ffla::Field;
using ffla::Matrix;
using ffla::MultiplicationTable;
using ffla::Scalar;
using ffla::Subspace;
using ffla::Vector;

/// Associative unital algebra. Construction checks the unit on the basis and
/// associativity on all basis triples (dimension <= 64) or on seeded random
/// triples above that.
class Algebra {
 public:
  Algebra(MultiplicationTable table, Vector unit);

  std::size_t dim() const noexcept { return table_.dim(); }
  const Field& field() const noexcept { return table_.field(); }
  const MultiplicationTable& table() const noexcept { return table_; }
  const Vector& unit() const noexcept { return unit_; }
  Vector zero() const { return Vector(dim(), 0); }
  Vector basis(std::size_t i) const;
  Vector multiply(const Vector& a, const Vector& b) const { return table_.multiply(a, b); }
  bool is_commutative() const { return table_.is_commutative(); }

  /// Matrix of x -> a x (columns are images of basis vectors).
  Matrix left_multiplication(const Vector& a) const;
  /// Matrix of x -> x a.
  Matrix right_multiplication(const Vector& a) const;

 private:
  MultiplicationTable table_;
  Vector unit_;
};

/// lambda with lambda(ab) = lambda(ba) and invertible Gram matrix lambda(b_i b_j).
class SymmetrizingForm {
 public:
  /// Throws InvalidArgument if the form is not symmetric or is degenerate.
  SymmetrizingForm(const Algebra& algebra, Vector coefficients);

  Scalar operator()(const Vector& a) const;
  const Vector& coefficients() const noexcept { return coeffs_; }
  const Matrix& gram() const noexcept { return gram_; }
  const Matrix& gram_inverse() const noexcept { return gram_inverse_; }

 private:
  Field field_;
  Vector coeffs_;
  Matrix gram_;
  Matrix gram_inverse_;
};

/// {b_i} (standard) and {b_i'} with lambda(b_i b_j') = delta_ij.
struct DualBases {
  std::vector<Vector> basis;
  std::vector<Vector> dual;
};
DualBases dual_bases(const Algebra& a, const SymmetrizingForm& lambda);

Subspace center(const Algebra& a);
/// A x (the left ideal generated by x).
Subspace left_ideal(const Algebra& a, const Vector& x);
/// {s : s j = 0 for all j in J}
Subspace left_annihilator(const Algebra& a, const Subspace& j);
/// {s : lambda(s j) = 0 for all j in J}
Subspace orthogonal_complement(const Algebra& a, const SymmetrizingForm& lambda, const Subspace& j);
bool is_two_sided_ideal(const Algebra& a, const Subspace& i);
/// Is L closed under multiplication by the given subspace's basis (both sides)?
bool is_closed_under(const Algebra& a, const Subspace& l, const Subspace& multipliers);

/// A/I on the complement basis: the basis vectors of A at the non-pivot
/// coordinates of I's echelon form.
class QuotientAlgebra {
 public:
  /// Throws NotAnIdeal unless I is a two-sided ideal.
  QuotientAlgebra(const Algebra& a, Subspace ideal);

  const Algebra& algebra() const noexcept { return quotient_; }
  const Subspace& ideal() const noexcept { return ideal_; }
  const std::vector<std::size_t>& complement() const noexcept { return complement_; }
  Vector project(const Vector& a) const;
  Vector lift(const Vector& x) const;

 private:
  Subspace ideal_;
  std::vector<std::size_t> complement_;
  Algebra quotient_;
};

/// The unique z with mu(a + I) = lambda(a z), where mu_on_a is the pullback of
/// mu to A. Throws NotSymmetricQuotient if no central solution exists.
Vector solve_z(const Algebra& a, const SymmetrizingForm& lambda, const Subspace& ideal, const Vector& mu_on_a);

class SymmetricQuotient {
 public:
  /// mu_on_a: the quotient form pulled back to A (must vanish on I). Verifies
  /// z central, I = Ann(z), adjointness on basis pairs and injectivity of nu*.
  SymmetricQuotient(const Algebra& a, const SymmetrizingForm& lambda, Subspace ideal, const Vector& mu_on_a);

  const Algebra& algebra() const noexcept { return algebra_; }
  const SymmetrizingForm& lambda() const noexcept { return lambda_; }
  const Subspace& ideal() const noexcept { return quotient_.ideal(); }
  const QuotientAlgebra& quotient() const noexcept { return quotient_; }
  const SymmetrizingForm& mu() const noexcept { return mu_; }
  const Vector& z() const noexcept { return z_; }

  Vector project(const Vector& a) const { return quotient_.project(a); }
  Vector lift(const Vector& x) const { return quotient_.lift(x); }
  Vector nu_star(const Vector& x) const;
  Subspace nu_star_image(const Subspace& l) const;

 private:
  Algebra algebra_;
  SymmetrizingForm lambda_;
  QuotientAlgebra quotient_;
  SymmetrizingForm mu_;
  Vector z_;
};

/// nu*(L) for an ideal L of Z(A/I), checked to be an ideal of Z(A). Throws
/// NotAnIdeal if L itself is not an ideal of Z(A/I).
Subspace image_ideal_check(const SymmetricQuotient& sq, const Subspace& l);

/// Image of a -> sum_i b_i a b_i' over dual bases.
Subspace higman_ideal(const Algebra& a, const SymmetrizingForm& lambda);
/// H(A)^2
Subspace z0(const Algebra& a, const SymmetrizingForm& lambda);
/// Z(A) ∩ S(A) with S(A) the lambda-orthogonal of the supplied radical.
/// Throws RadicalMismatch if that differs from the left annihilator of J.
Subspace reynolds_ideal(const Algebra& a, const SymmetrizingForm& lambda, const Subspace& radical);
/// dim nu*(Z0(A/I)).
std::size_t count_simple_blocks(const SymmetricQuotient& sq);

/// Primitive idempotents of a commutative algebra over a field that splits it.
/// Throws NotCommutative, FieldNotSplitting or SplitFailure.
std::vector<Vector> block_idempotents(const Algebra& commutative, std::uint64_t seed = 1);

// --- builders ---------------------------------------------------------------

Algebra field_algebra(const Field& f);
/// n x n matrices, basis E_{ij} at index i*n + j.
Algebra matrix_algebra(const Field& f, std::size_t n);
/// F[x]/(x^k), basis 1, x, ..., x^{k-1}.
Algebra truncated_polynomial(const Field& f, std::size_t k);
Algebra direct_product(const Algebra& a, const Algebra& b);
/// The trace form sum_i E_ii on a matrix algebra.
Vector matrix_trace_form(const Field& f, std::size_t n);

/// Text fixture: "dim n", "field p m [modulus...]", "unit ...", "lambda ...",
/// bare "i j k coeff" structure constants, optional "radical ...", "ideal ..."
/// and "mu ..." lines. Field elements are integer codes.
struct AlgebraFixture {
  std::string name;
  Algebra algebra;
  Vector lambda;
  std::optional<Subspace> radical;
  std::optional<Subspace> ideal;
  std::optional<Vector> mu;
};
AlgebraFixture parse_algebra(std::istream& in, std::string name = {});
AlgebraFixture load_algebra(const std::string& path);
void write_algebra(std::ostream& out, const Algebra& a, const Vector& lambda);

}  // namespace defzero::symalg
