#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include "defzero/error.hpp"
#include "defzero/grpalg.hpp"
#include "defzero/symalg.hpp"
#include "support.hpp"

using namespace defzero::symalg;
using defzero::Error;
using defzero::ErrorCode;
namespace ffla = defzero::ffla;
namespace grpalg = defzero::grpalg;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

std::vector<std::string> fixture_paths() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(support::source_path("tests/fixtures")))
    if (e.path().extension() == ".sca") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

Vector coords(std::initializer_list<Scalar> v) { return Vector(v); }

// Primitive in a commutative algebra: e A modulo its nilpotent part is one-dimensional.
bool primitive(const Algebra& a, const Vector& e) {
  const Subspace ea = left_ideal(a, e);
  const Subspace nil = ffla::frobenius_iterate_kernel(a.table());
  return ea.dim() - ea.intersect(nil).dim() == 1;
}

}  // namespace

TEST_CASE("builders") {
  const Field f = Field::prime(3);
  CHECK(center(field_algebra(f)).dim() == 1);
  const Algebra m3 = matrix_algebra(f, 3);
  CHECK(m3.dim() == 9);
  CHECK(center(m3).dim() == 1);
  CHECK_FALSE(m3.is_commutative());
  const Algebra t = truncated_polynomial(f, 4);
  CHECK(center(t).dim() == 4);
  CHECK(t.multiply(t.basis(2), t.basis(2)) == t.zero());
  const Algebra p = direct_product(field_algebra(f), t);
  CHECK(p.dim() == 5);
  CHECK(p.unit() == coords({1, 1, 0, 0, 0}));
  CHECK(code_of([&] { (void)direct_product(field_algebra(f), field_algebra(Field::prime(2))); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("algebra construction rejects bad data") {
  MultiplicationTable t(Field::prime(2), 2);
  t.accumulate(0, 0, 0, 1);
  t.accumulate(0, 1, 1, 1);
  t.accumulate(1, 0, 1, 1);
  t.accumulate(1, 1, 1, 1);
  CHECK_NOTHROW(Algebra(t, coords({1, 0})));
  CHECK(code_of([&] { (void)Algebra(t, coords({0, 1})); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { (void)Algebra(t, coords({1})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("symmetrizing forms and dual bases") {
  const Field f = Field::prime(5);
  const Algebra m2 = matrix_algebra(f, 2);
  const SymmetrizingForm tr(m2, matrix_trace_form(f, 2));
  const DualBases d = dual_bases(m2, tr);
  for (std::size_t i = 0; i < m2.dim(); ++i)
    for (std::size_t j = 0; j < m2.dim(); ++j) REQUIRE(tr(m2.multiply(d.basis[i], d.dual[j])) == (i == j ? 1u : 0u));
  REQUIRE(tr.gram() * tr.gram_inverse() == Matrix::identity(f, 4));

  const Algebra x2 = truncated_polynomial(f, 2);
  CHECK(code_of([&] { (void)SymmetrizingForm(x2, coords({1, 0})); }) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(SymmetrizingForm(x2, coords({0, 1})));
  // E_11 is not symmetric on M2.
  CHECK(code_of([&] { (void)SymmetrizingForm(m2, coords({1, 0, 0, 0})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("ideals, annihilators and orthogonal complements") {
  const Field f = Field::prime(2);
  const Algebra t = truncated_polynomial(f, 3);
  const SymmetrizingForm lambda(t, coords({0, 0, 1}));
  const Subspace j = left_ideal(t, t.basis(1));
  CHECK(j.dim() == 2);
  CHECK(is_two_sided_ideal(t, j));
  CHECK(left_annihilator(t, j).dim() == 1);
  CHECK(orthogonal_complement(t, lambda, j) == left_annihilator(t, j));
  const Algebra m2 = matrix_algebra(f, 2);
  CHECK_FALSE(is_two_sided_ideal(m2, left_ideal(m2, m2.basis(0))));
  CHECK(code_of([&] { (void)QuotientAlgebra(m2, left_ideal(m2, m2.basis(0))); }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("quotient algebra on the complement basis") {
  const Field f = Field::prime(3);
  const Algebra t = truncated_polynomial(f, 3);
  const QuotientAlgebra q(t, left_ideal(t, t.basis(2)));
  CHECK(q.algebra().dim() == 2);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const Vector a = support::random_vector(f, 3, rng), b = support::random_vector(f, 3, rng);
    REQUIRE(q.project(t.multiply(a, b)) == q.algebra().multiply(q.project(a), q.project(b)));
    REQUIRE(q.project(q.lift(q.project(a))) == q.project(a));
  }
}

TEST_CASE("solve_z") {
  const Field f = Field::prime(3);
  const Algebra m3 = matrix_algebra(f, 3);
  const SymmetrizingForm tr(m3, matrix_trace_form(f, 3));
  CHECK(solve_z(m3, tr, Subspace(f, 9), tr.coefficients()) == m3.unit());

  const Algebra ff = direct_product(field_algebra(f), field_algebra(f));
  const SymmetrizingForm lambda(ff, coords({1, 1}));
  const Subspace second = Subspace::span(f, 2, std::vector<Vector>{coords({0, 1})});
  CHECK(solve_z(ff, lambda, second, coords({1, 0})) == coords({1, 0}));
  CHECK(code_of([&] { (void)solve_z(ff, lambda, second, coords({1, 1})); }) == ErrorCode::NotSymmetricQuotient);

  auto group = std::make_shared<const defzero::groups::Group>(defzero::groups::builtin_group("alternating 4"));
  const grpalg::GroupAlgebra fg(group, Field::prime(2));
  const auto q = defzero::groups::largest_normal_p_subgroup(*group, 2);
  const grpalg::QuotientAlgebraMap map = grpalg::quotient_descent(fg, q);
  const Algebra a(grpalg::structure_table(fg), fg.unit());
  const SymmetrizingForm lam(a, fg.unit());
  Vector mu = fg.zero();
  for (auto u : q.members()) mu[u] = 1;
  CHECK(solve_z(a, lam, map.kernel(), mu) == grpalg::subset_sum(fg, q.members()));
}

TEST_CASE("adjoint transfer") {
  const auto fx = load_algebra(support::source_path("tests/fixtures/truncated_cubic.sca"));
  const SymmetrizingForm lambda(fx.algebra, fx.lambda);
  const SymmetricQuotient sq(fx.algebra, lambda, *fx.ideal, *fx.mu);
  const Algebra& aq = sq.quotient().algebra();
  CHECK(sq.z() == coords({0, 1, 0}));
  CHECK(ffla::is_zero(sq.nu_star(aq.zero())));
  CHECK(sq.nu_star(aq.unit()) == sq.z());
  const Vector nz = sq.project(sq.z());
  for (std::size_t i = 0; i < aq.dim(); ++i) {
    const Vector x = aq.basis(i);
    REQUIRE(sq.project(sq.nu_star(x)) == aq.multiply(x, nz));
  }
  CHECK(image_ideal_check(sq, Subspace(aq.field(), aq.dim())).dim() == 0);
  CHECK(image_ideal_check(sq, center(aq)) == center(fx.algebra).intersect(left_ideal(fx.algebra, sq.z())));
}

TEST_CASE("generic Higman ideal and Z0") {
  const Field f = Field::prime(2);
  const Algebra k = field_algebra(f);
  const SymmetrizingForm one(k, coords({1}));
  CHECK(higman_ideal(k, one).dim() == 1);
  CHECK(z0(k, one).dim() == 1);

  auto make = [](const char* spec, std::uint32_t p) {
    auto g = std::make_shared<const defzero::groups::Group>(defzero::groups::builtin_group(spec));
    return grpalg::GroupAlgebra(g, Field::prime(p));
  };
  const auto d8 = make("dihedral 8", 2);
  const Algebra a8(grpalg::structure_table(d8), d8.unit());
  const SymmetrizingForm l8(a8, d8.unit());
  CHECK(higman_ideal(a8, l8).dim() == 0);
  CHECK(z0(a8, l8).dim() == 0);

  const auto s3 = make("symmetric 3", 3);
  const Algebra a3(grpalg::structure_table(s3), s3.unit());
  const SymmetrizingForm l3(a3, s3.unit());
  CHECK(higman_ideal(a3, l3).dim() == 1);
  CHECK(higman_ideal(a3, l3) == grpalg::higman_ideal(s3));
}

TEST_CASE("Reynolds ideal") {
  const Field f2 = Field::prime(2);
  const Algebra m2 = matrix_algebra(f2, 2);
  const SymmetrizingForm tr(m2, matrix_trace_form(f2, 2));
  CHECK(reynolds_ideal(m2, tr, Subspace(f2, 4)) == center(m2));

  const Algebra x2 = truncated_polynomial(f2, 2);
  const SymmetrizingForm lx(x2, coords({0, 1}));
  const Subspace r = reynolds_ideal(x2, lx, left_ideal(x2, x2.basis(1)));
  CHECK(r.dim() == 1);
  CHECK(r.contains(coords({0, 1})));

  // GF(2)C2 in the basis 1, g.
  MultiplicationTable t(f2, 2);
  t.accumulate(0, 0, 0, 1);
  t.accumulate(0, 1, 1, 1);
  t.accumulate(1, 0, 1, 1);
  t.accumulate(1, 1, 0, 1);
  const Algebra c2(t, coords({1, 0}));
  const SymmetrizingForm lc(c2, coords({1, 0}));
  const Subspace aug = Subspace::span(f2, 2, std::vector<Vector>{coords({1, 1})});
  CHECK(reynolds_ideal(c2, lc, aug) == aug);
  // A subspace that is not an ideal is caught: 1 + x is a unit.
  const Subspace not_ideal = Subspace::span(f2, 2, std::vector<Vector>{coords({1, 1})});
  CHECK(code_of([&] { (void)reynolds_ideal(x2, lx, not_ideal); }) == ErrorCode::RadicalMismatch);
}

TEST_CASE("count_simple_blocks") {
  const Field f = Field::prime(5);
  const Algebra fff = direct_product(direct_product(field_algebra(f), field_algebra(f)), field_algebra(f));
  const SymmetrizingForm l(fff, coords({1, 1, 1}));
  CHECK(count_simple_blocks(SymmetricQuotient(fff, l, Subspace(f, 3), l.coefficients())) == 3);
  const Subspace last_two = Subspace::span(f, 3, std::vector<Vector>{coords({0, 1, 0}), coords({0, 0, 1})});
  CHECK(count_simple_blocks(SymmetricQuotient(fff, l, last_two, coords({1, 0, 0}))) == 1);
}

TEST_CASE("block idempotents of small algebras") {
  const Field f = Field::prime(3);
  const Algebra ff = direct_product(field_algebra(f), field_algebra(f));
  CHECK(block_idempotents(ff) == std::vector<Vector>{coords({0, 1}), coords({1, 0})});
  CHECK(block_idempotents(truncated_polynomial(f, 2)) == std::vector<Vector>{coords({1, 0})});
  CHECK(code_of([&] { (void)block_idempotents(matrix_algebra(f, 2)); }) == ErrorCode::NotCommutative);

  // F[x]/(x^2 + 1) is GF(9), not split over GF(3).
  MultiplicationTable t(f, 2);
  t.accumulate(0, 0, 0, 1);
  t.accumulate(0, 1, 1, 1);
  t.accumulate(1, 0, 1, 1);
  t.accumulate(1, 1, 0, 2);
  CHECK(code_of([&] { (void)block_idempotents(Algebra(t, coords({1, 0}))); }) == ErrorCode::FieldNotSplitting);
}

TEST_CASE("block counts of group algebras over splitting fields") {
  // Block counts from the ordinary character tables.
  struct Case {
    const char* spec;
    std::uint32_t p;
    unsigned m;
    std::size_t blocks;
  };
  for (const Case c : {Case{"symmetric 3", 2, 2, 2}, {"symmetric 3", 3, 1, 1}, {"symmetric 4", 2, 2, 1},
                       {"symmetric 4", 3, 2, 3}, {"alternating 5", 2, 4, 2}, {"alternating 5", 5, 2, 2},
                       {"alternating 4", 2, 2, 1}, {"cyclic 6", 3, 1, 2}}) {
    CAPTURE(c.spec);
    CAPTURE(c.p);
    auto g = std::make_shared<const defzero::groups::Group>(defzero::groups::builtin_group(c.spec));
    const grpalg::GroupAlgebra fg(g, Field::extension(c.p, c.m));
    Vector unit(fg.group().classes().count(), 0);
    unit[0] = 1;
    const Algebra zc(grpalg::center_table(fg), unit);
    const auto es = block_idempotents(zc, 7);
    REQUIRE(es.size() == c.blocks);
    for (std::size_t i = 0; i < es.size(); ++i) {
      REQUIRE(zc.multiply(es[i], es[i]) == es[i]);
      REQUIRE(primitive(zc, es[i]));
      for (std::size_t j = i + 1; j < es.size(); ++j) REQUIRE(ffla::is_zero(zc.multiply(es[i], es[j])));
    }
  }
}

TEST_CASE("fixtures satisfy the symmetric quotient identities") {
  const auto paths = fixture_paths();
  REQUIRE(paths.size() >= 5);
  for (const auto& path : paths) {
    CAPTURE(path);
    const AlgebraFixture fx = load_algebra(path);
    REQUIRE(fx.ideal.has_value());
    REQUIRE(fx.mu.has_value());
    const Algebra& a = fx.algebra;
    const SymmetrizingForm lambda(a, fx.lambda);
    const SymmetricQuotient sq(a, lambda, *fx.ideal, *fx.mu);
    const Algebra& aq = sq.quotient().algebra();

    // Adjointness on basis pairs.
    for (std::size_t i = 0; i < aq.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        REQUIRE(lambda(a.multiply(sq.nu_star(aq.basis(i)), a.basis(j))) ==
                sq.mu()(aq.multiply(aq.basis(i), sq.project(a.basis(j)))));
    REQUIRE(left_annihilator(a, left_ideal(a, sq.z())) == *fx.ideal);
    REQUIRE(sq.nu_star_image(Subspace::whole(aq.field(), aq.dim())).dim() == aq.dim());
    REQUIRE(solve_z(a, lambda, *fx.ideal, *fx.mu) == sq.z());

    REQUIRE(sq.nu_star_image(center(aq)) == center(a).intersect(left_ideal(a, sq.z())));
    const Subspace hq = higman_ideal(aq, sq.mu());
    const Subspace z0q = z0(aq, sq.mu());
    REQUIRE(is_closed_under(a, image_ideal_check(sq, z0q), center(a)));
    REQUIRE(is_closed_under(a, image_ideal_check(sq, hq), center(a)));

    const Subspace h = higman_ideal(a, lambda);
    const Subspace z = z0(a, lambda);
    REQUIRE(z.leq(h));
    if (fx.radical) {
      const Subspace r = reynolds_ideal(a, lambda, *fx.radical);
      REQUIRE(h.leq(r));
      REQUIRE(r.leq(center(a)));
    }
    REQUIRE(count_simple_blocks(sq) == sq.nu_star_image(z0q).dim());
  }
}

TEST_CASE("fixture parsing") {
  std::istringstream bad("dim 2\nfield 2 1\nunit 1 0\nlambda 1 0\n0 0 9 1\n");
  CHECK(code_of([&] { (void)parse_algebra(bad); }) == ErrorCode::Parse);
  std::istringstream missing("dim 1\nfield 2 1\n");
  CHECK(code_of([&] { (void)parse_algebra(missing); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)load_algebra("/nonexistent.sca"); }) == ErrorCode::Io);

  const auto fx = load_algebra(support::source_path("tests/fixtures/gf4_pair.sca"));
  CHECK(fx.name == "gf4_pair");
  CHECK(fx.algebra.field().size() == 4);
  std::stringstream ss;
  write_algebra(ss, fx.algebra, fx.lambda);
  const auto back = parse_algebra(ss);
  CHECK(back.algebra.dim() == fx.algebra.dim());
  CHECK(back.lambda == fx.lambda);
  CHECK(back.algebra.unit() == fx.algebra.unit());
  for (std::size_t i = 0; i < fx.algebra.dim(); ++i)
    for (std::size_t j = 0; j < fx.algebra.dim(); ++j)
      REQUIRE(back.algebra.multiply(back.algebra.basis(i), back.algebra.basis(j)) ==
              fx.algebra.multiply(fx.algebra.basis(i), fx.algebra.basis(j)));
}
