#include "defzero/error.hpp"
#include "defzero/symalg.hpp"

namespace defzero::symalg {

namespace {

bool is_central(const Algebra& a, const Vector& z) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector b = a.basis(i);
    if (a.multiply(b, z) != a.multiply(z, b)) return false;
  }
  return true;
}

Vector push_forward_form(const Algebra& a, const QuotientAlgebra& q, const Vector& mu_on_a) {
  if (mu_on_a.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "quotient form has wrong length");
  for (const auto& v : q.ideal().basis()) {
    if (ffla::dot(a.field(), mu_on_a, v) != 0) {
      throw Error(ErrorCode::NotSymmetricQuotient, "quotient form does not vanish on the ideal");
    }
  }
  Vector out(q.complement().size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = mu_on_a[q.complement()[j]];
  return out;
}

SymmetrizingForm quotient_form(const QuotientAlgebra& q, Vector coeffs) {
  try {
    return SymmetrizingForm(q.algebra(), std::move(coeffs));
  } catch (const Error& e) {
    throw Error(ErrorCode::NotSymmetricQuotient, std::string("quotient form: ") + e.what());
  }
}

}  // namespace

Vector solve_z(const Algebra& a, const SymmetrizingForm& lambda, const Subspace& ideal, const Vector& mu_on_a) {
  if (mu_on_a.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "quotient form has wrong length");
  for (const auto& v : ideal.basis()) {
    if (ffla::dot(a.field(), mu_on_a, v) != 0) {
      throw Error(ErrorCode::NotSymmetricQuotient, "quotient form does not vanish on the ideal");
    }
  }
  // (Gram z)_i = lambda(b_i z), so Gram z = mu~ determines z.
  Vector z = lambda.gram_inverse().apply(mu_on_a);
  if (!is_central(a, z)) throw Error(ErrorCode::NotSymmetricQuotient, "solution z is not central");
  return z;
}

SymmetricQuotient::SymmetricQuotient(const Algebra& a, const SymmetrizingForm& lambda, Subspace ideal,
                                     const Vector& mu_on_a)
    : algebra_(a),
      lambda_(lambda),
      quotient_(a, std::move(ideal)),
      mu_(quotient_form(quotient_, push_forward_form(a, quotient_, mu_on_a))),
      z_(solve_z(a, lambda, quotient_.ideal(), mu_on_a)) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::VerificationFailed, "symmetric quotient: " + what); };

  Subspace z_line(a.field(), a.dim());
  z_line.insert(z_);
  if (!(left_annihilator(a, z_line) == quotient_.ideal())) fail("ideal differs from Ann(z)");

  const Algebra& qa = quotient_.algebra();
  for (std::size_t c = 0; c < qa.dim(); ++c) {
    const Vector nsx = nu_star(qa.basis(c));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Scalar lhs = lambda_(a.multiply(nsx, a.basis(i)));
      const Scalar rhs = mu_(qa.multiply(qa.basis(c), project(a.basis(i))));
      if (lhs != rhs) fail("adjointness lambda(nu*(x) a) = mu(x nu(a))");
    }
  }

  if (nu_star_image(Subspace::whole(qa.field(), qa.dim())).dim() != qa.dim()) fail("nu* is not injective");
}

Vector SymmetricQuotient::nu_star(const Vector& x) const { return algebra_.multiply(lift(x), z_); }

Subspace SymmetricQuotient::nu_star_image(const Subspace& l) const {
  Subspace out(algebra_.field(), algebra_.dim());
  for (const auto& b : l.basis()) out.insert(nu_star(b));
  return out;
}

Subspace image_ideal_check(const SymmetricQuotient& sq, const Subspace& l) {
  const Algebra& qa = sq.quotient().algebra();
  const Subspace zq = center(qa);
  if (!l.leq(zq) || !is_closed_under(qa, l, zq)) throw Error(ErrorCode::NotAnIdeal, "subspace is not an ideal of Z(A/I)");
  const Subspace image = sq.nu_star_image(l);
  const Subspace za = center(sq.algebra());
  if (!image.leq(za) || !is_closed_under(sq.algebra(), image, za)) {
    throw Error(ErrorCode::VerificationFailed, "nu*(L) is not an ideal of Z(A)");
  }
  return image;
}

Subspace higman_ideal(const Algebra& a, const SymmetrizingForm& lambda) {
  const DualBases db = dual_bases(a, lambda);
  Subspace out(a.field(), a.dim());
  for (std::size_t m = 0; m < a.dim(); ++m) {
    Vector tau = a.zero();
    const Vector bm = a.basis(m);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      tau = ffla::add(a.field(), tau, a.multiply(a.multiply(db.basis[i], bm), db.dual[i]));
    }
    out.insert(std::move(tau));
  }
  return out;
}

Subspace z0(const Algebra& a, const SymmetrizingForm& lambda) {
  const Subspace h = higman_ideal(a, lambda);
  Subspace out(a.field(), a.dim());
  const auto& b = h.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) out.insert(a.multiply(b[i], b[j]));
  }
  return out;
}

Subspace reynolds_ideal(const Algebra& a, const SymmetrizingForm& lambda, const Subspace& radical) {
  const Subspace socle = orthogonal_complement(a, lambda, radical);
  if (!(socle == left_annihilator(a, radical))) {
    throw Error(ErrorCode::RadicalMismatch, "orthogonal of the radical differs from its annihilator");
  }
  return center(a).intersect(socle);
}

std::size_t count_simple_blocks(const SymmetricQuotient& sq) {
  const Subspace zq = z0(sq.quotient().algebra(), sq.mu());
  return sq.nu_star_image(zq).dim();
}

}  // namespace defzero::symalg
