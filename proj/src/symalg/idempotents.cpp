#include <algorithm>
#include <bit>
#include <random>

#include "defzero/error.hpp"
#include "defzero/symalg.hpp"

namespace defzero::symalg {

namespace {

constexpr int kMaxStalledRounds = 64;

Vector power(const Algebra& a, Vector x, std::uint64_t e) {
  Vector acc = a.unit();
  while (e > 0) {
    if (e & 1) acc = a.multiply(acc, x);
    e >>= 1;
    if (e > 0) x = a.multiply(x, x);
  }
  return acc;
}

// Monic minimal polynomial of x, coefficients low to high.
std::vector<Scalar> minimal_polynomial(const Algebra& a, const Vector& x) {
  const Field& f = a.field();
  std::vector<Vector> powers{a.unit()};
  Subspace seen(f, a.dim());
  seen.insert(a.unit());
  Vector next = x;
  while (seen.insert(next)) {
    powers.push_back(next);
    next = a.multiply(next, x);
  }
  const std::size_t d = powers.size();
  Matrix m(f, a.dim(), d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < a.dim(); ++r) m.at(r, c) = powers[c][r];
  }
  const auto coeffs = ffla::solve(m, next);
  if (!coeffs) throw Error(ErrorCode::VerificationFailed, "Krylov sequence is inconsistent");
  std::vector<Scalar> poly(d + 1);
  for (std::size_t i = 0; i < d; ++i) poly[i] = f.neg((*coeffs)[i]);
  poly[d] = 1;
  return poly;
}

Scalar evaluate(const Field& f, const std::vector<Scalar>& poly, Scalar r) {
  Scalar acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, r), poly[i]);
  return acc;
}

// Idempotents f_r = prod_{s != r} (x - s)/(r - s) over the roots of the
// minimal polynomial; they sum to 1 when x is semisimple and split.
std::vector<Vector> lagrange_idempotents(const Algebra& a, const Vector& x) {
  const Field& f = a.field();
  const auto poly = minimal_polynomial(a, x);
  std::vector<Scalar> roots;
  for (std::uint64_t r = 0; r < f.size(); ++r) {
    if (evaluate(f, poly, static_cast<Scalar>(r)) == 0) roots.push_back(static_cast<Scalar>(r));
  }
  if (roots.size() + 1 != poly.size()) {
    throw Error(ErrorCode::FieldNotSplitting, "minimal polynomial does not split into distinct linear factors");
  }
  std::vector<Vector> out;
  for (auto r : roots) {
    Vector e = a.unit();
    for (auto s : roots) {
      if (s == r) continue;
      Vector factor = ffla::sub(f, x, ffla::scale(f, s, a.unit()));
      e = ffla::scale(f, f.inv(f.sub(r, s)), a.multiply(e, factor));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<Vector> block_idempotents(const Algebra& commutative, std::uint64_t seed) {
  const Algebra& a = commutative;
  const Field& f = a.field();
  if (!a.is_commutative()) throw Error(ErrorCode::NotCommutative, "block idempotents need a commutative algebra");

  const Subspace nil = ffla::frobenius_iterate_kernel(a.table());
  const QuotientAlgebra q(a, nil);
  const Algebra& b = q.algebra();
  const std::size_t k = b.dim();
  for (std::size_t i = 0; i < k; ++i) {
    if (power(b, b.basis(i), f.size()) != b.basis(i)) {
      throw Error(ErrorCode::FieldNotSplitting, "semisimple quotient is not split over the coefficient field");
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.size() - 1);
  std::vector<Vector> idem{b.unit()};
  int stalled = 0;
  while (idem.size() < k) {
    Vector x(k);
    for (auto& c : x) c = static_cast<Scalar>(coeff(rng));
    std::vector<Vector> refined;
    for (const auto& fr : lagrange_idempotents(b, x)) {
      for (const auto& e : idem) {
        Vector ef = b.multiply(e, fr);
        if (!ffla::is_zero(ef)) refined.push_back(std::move(ef));
      }
    }
    if (refined.size() > idem.size()) {
      idem = std::move(refined);
      stalled = 0;
    } else if (++stalled >= kMaxStalledRounds) {
      throw Error(ErrorCode::SplitFailure, "random refinement did not separate the idempotents");
    }
  }

  // Lift through the nilradical with e <- 3e^2 - 2e^3; convergence is quadratic.
  const int max_rounds = 2 * static_cast<int>(std::bit_width(a.dim())) + 4;
  const Scalar three = f.from_int(3);
  const Scalar two = f.from_int(2);
  std::vector<Vector> out;
  for (const auto& eb : idem) {
    Vector e = q.lift(eb);
    int round = 0;
    for (;;) {
      const Vector e2 = a.multiply(e, e);
      if (e2 == e) break;
      if (++round > max_rounds) throw Error(ErrorCode::VerificationFailed, "idempotent lifting did not converge");
      const Vector e3 = a.multiply(e2, e);
      e = ffla::sub(f, ffla::scale(f, three, e2), ffla::scale(f, two, e3));
    }
    out.push_back(std::move(e));
  }

  Vector total = a.zero();
  for (const auto& e : out) total = ffla::add(f, total, e);
  if (total != a.unit()) throw Error(ErrorCode::VerificationFailed, "idempotents do not sum to 1");
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!ffla::is_zero(a.multiply(out[i], out[j]))) throw Error(ErrorCode::VerificationFailed, "idempotents are not orthogonal");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace defzero::symalg
