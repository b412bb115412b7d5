#pragma once

// Group algebras FG over GF(p^m): elements are coefficient vectors indexed by
// group elements. Relative traces, the central ideals built from them, and the
// descent FG -> F[G/Q] along a normal p-subgroup Q.

#include <memory>
#include <span>
#include <vector>

#include "defzero/ffla.hpp"
#include "defzero/permgroup.hpp"

namespace defzero::grpalg {

using ffla::Field;
using ffla::Scalar;
using ffla::Subspace;
using ffla::Vector;
using groups::ElemId;
using groups::Group;
using groups::Subgroup;

class GroupAlgebra {
 public:
  GroupAlgebra(std::shared_ptr<const Group> group, Field field);

  const Group& group() const noexcept { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }
  const Field& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t dim() const noexcept { return group_->order(); }

  Vector zero() const { return Vector(dim(), 0); }
  Vector unit() const { return basis(0); }
  Vector basis(ElemId g) const;
  Vector class_sum(std::size_t class_index) const;

  Vector multiply(const Vector& a, const Vector& b) const;
  /// e_g * a
  Vector left_translate(ElemId g, const Vector& a) const;
  /// a * e_g
  Vector right_translate(const Vector& a, ElemId g) const;
  /// x a x^{-1}
  Vector conjugate(ElemId x, const Vector& a) const;

  /// The symmetrizing form: coefficient of the identity.
  Scalar lambda(const Vector& a) const { return a.at(0); }
  bool is_fixed_by(const Subgroup& x, const Vector& a) const;
  bool is_central(const Vector& a) const;

 private:
  std::shared_ptr<const Group> group_;
  Field field_;
};

/// X^+ for a subset X of G.
Vector subset_sum(const GroupAlgebra& fg, std::span<const ElemId> subset);
std::vector<ElemId> p_elements(const Group& g, std::uint32_t p);
std::vector<ElemId> p_prime_elements(const Group& g, std::uint32_t p);
/// Indices of the classes whose centralizer order is prime to p.
std::vector<std::size_t> defect_zero_classes(const Group& g, std::uint32_t p);

/// (FG)^X, with the X-conjugation orbit sums as spanning set.
Subspace fixed_points(const GroupAlgebra& fg, const Subgroup& x);
Subspace center(const GroupAlgebra& fg);

/// Left coset representatives of Y in X (smallest element of each coset xY).
std::vector<ElemId> coset_representatives(const Group& g, const Subgroup& x, const Subgroup& y);
/// Tr_Y^X(a) = sum over xY in X/Y of x a x^{-1}. Throws NotYFixed unless a is
/// Y-invariant and VerificationFailed if the result is not X-invariant.
Vector rel_trace(const GroupAlgebra& fg, const Subgroup& y, const Subgroup& x, const Vector& a);
/// As above with caller-chosen representatives (one per left coset, validated).
Vector rel_trace(const GroupAlgebra& fg, const Subgroup& y, const Subgroup& x, const Vector& a,
                 std::span<const ElemId> representatives);

Subspace left_ideal_span(const GroupAlgebra& fg, const Vector& a);
Subspace right_ideal_span(const GroupAlgebra& fg, const Vector& a);
Subspace two_sided_ideal_span(const GroupAlgebra& fg, const Vector& a);

/// Throws NotNormal unless Q is normal and NotNormalPSubgroup unless it is a p-group.
void require_normal_p_subgroup(const GroupAlgebra& fg, const Subgroup& q);

/// Tr_Q^G(FG * G_p^+), spanned by the traces of e_g G_p^+.
Subspace wq_ideal(const GroupAlgebra& fg, const Subgroup& q);
/// Tr_1^G(FG); cross-checked against the span of defect-zero class sums.
Subspace higman_ideal(const GroupAlgebra& fg);
/// H(FG) * G_p^+
Subspace z0_ideal(const GroupAlgebra& fg);
/// Tr_Q^G((FG)^Q); cross-checked against the class sums whose defect groups
/// are conjugate into Q.
Subspace class_sums_with_defect_in(const GroupAlgebra& fg, const Subgroup& q);
/// Center intersected with the socle, spanned by the p-section sums.
Subspace reynolds_ideal(const GroupAlgebra& fg);

/// FG -> F[G/Q] with the adjoint x -> lift(x) Q^+.
class QuotientAlgebraMap {
 public:
  QuotientAlgebraMap(GroupAlgebra source, groups::QuotientGroup quotient);

  const GroupAlgebra& source() const noexcept { return source_; }
  const GroupAlgebra& target() const noexcept { return target_; }
  const groups::QuotientGroup& quotient() const noexcept { return quotient_; }
  const Vector& z() const noexcept { return z_; }

  Vector project(const Vector& a) const;
  /// Section along coset representatives.
  Vector lift(const Vector& x) const;
  Vector nu_star(const Vector& x) const;
  Scalar mu(const Vector& x) const { return x.at(0); }
  Subspace nu_star_image(const Subspace& l) const;
  /// ker(projection), computed as the kernel of the coset-summing matrix.
  Subspace kernel() const;

 private:
  GroupAlgebra source_;
  groups::QuotientGroup quotient_;
  GroupAlgebra target_;
  Vector z_;
};

/// Builds the descent and verifies, exhaustively on basis elements: projection
/// is multiplicative; adjointness lambda(nu*(x) a) = mu(x nu(a)); nu*(gQ) = g Q^+;
/// ker = span{e_g (e_u - 1)}; ker = Ann(Q^+). Throws VerificationFailed naming
/// the identity that failed.
QuotientAlgebraMap quotient_descent(const GroupAlgebra& fg, const Subgroup& q);

struct SubspaceIdentityReport {
  bool representative_projection = false;  // nu(T^+) = (G/Q)_p^+
  bool coset_product = false;              // Q^+ T^+ = G_p^+
  bool subspace_equality = false;          // nu*(Z0(F[G/Q])) = W_Q(FG)
  std::size_t dim_wq = 0;
  std::size_t dim_quotient_z0 = 0;
  bool dimensions_match() const noexcept { return dim_wq == dim_quotient_z0; }
  bool ok() const noexcept { return representative_projection && coset_product && subspace_equality && dimensions_match(); }
};
SubspaceIdentityReport verify_subspace_identity(const GroupAlgebra& fg, const Subgroup& q);

struct TraceGenerator {
  Vector value;                    // Tr_Q^G(e_g G_p^+)
  bool centralizer_sylow = false;  // C_Q(g) is a Sylow p-subgroup of C_G(g)
};
TraceGenerator trace_generator(const GroupAlgebra& fg, const Subgroup& q, ElemId g);

/// Does some Sylow p-subgroup P satisfy P ∩ gPg^{-1} = Q?
bool sylow_intersection_condition(const Group& g, std::span<const Subgroup> sylows, ElemId x, const Subgroup& q);

struct SpanningCandidate {
  ElemId element = 0;
  bool centralizer_sylow = false;
  bool sylow_intersection = false;
  bool nonzero = false;
  bool qualifies() const noexcept { return centralizer_sylow && sylow_intersection; }
};

struct SpanningSet {
  /// One entry per p'-element of G.
  std::vector<SpanningCandidate> candidates;
  Subspace span;
  /// Qualifying elements whose trace generator is nevertheless zero.
  std::size_t qualifying_zero_generators = 0;
  std::vector<ElemId> qualifying() const;
};
/// Restricted spanning set; throws SpanMismatch if it fails to span W_Q.
SpanningSet spanning_set(const GroupAlgebra& fg, const Subgroup& q);

/// Structure constants of FG in the group basis.
ffla::MultiplicationTable structure_table(const GroupAlgebra& fg);
/// Structure constants of Z(FG) in the class-sum basis.
ffla::MultiplicationTable center_table(const GroupAlgebra& fg);

}  // namespace defzero::grpalg
