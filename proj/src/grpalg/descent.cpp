#include <algorithm>

#include "defzero/error.hpp"
#include "defzero/grpalg.hpp"

namespace defzero::grpalg {

QuotientAlgebraMap::QuotientAlgebraMap(GroupAlgebra source, groups::QuotientGroup quotient)
    : source_(std::move(source)),
      quotient_(std::move(quotient)),
      target_(quotient_.group, source_.field()),
      z_(source_.zero()) {
  for (ElemId g = 0; g < source_.dim(); ++g) {
    if (quotient_.projection[g] == 0) z_[g] = 1;
  }
}

Vector QuotientAlgebraMap::project(const Vector& a) const {
  if (a.size() != source_.dim()) throw Error(ErrorCode::DimensionMismatch, "projection: element has wrong length");
  const Field& f = source_.field();
  Vector out = target_.zero();
  for (ElemId g = 0; g < source_.dim(); ++g) {
    if (a[g] != 0) out[quotient_.projection[g]] = f.add(out[quotient_.projection[g]], a[g]);
  }
  return out;
}

Vector QuotientAlgebraMap::lift(const Vector& x) const {
  if (x.size() != target_.dim()) throw Error(ErrorCode::DimensionMismatch, "lift: element has wrong length");
  Vector out = source_.zero();
  for (ElemId c = 0; c < target_.dim(); ++c) out[quotient_.representatives[c]] = x[c];
  return out;
}

Vector QuotientAlgebraMap::nu_star(const Vector& x) const { return source_.multiply(lift(x), z_); }

Subspace QuotientAlgebraMap::nu_star_image(const Subspace& l) const {
  Subspace out(source_.field(), source_.dim());
  for (const auto& b : l.basis()) out.insert(nu_star(b));
  return out;
}

Subspace QuotientAlgebraMap::kernel() const {
  ffla::Matrix m(source_.field(), target_.dim(), source_.dim());
  for (ElemId g = 0; g < source_.dim(); ++g) m.at(quotient_.projection[g], g) = 1;
  return ffla::kernel(m);
}

QuotientAlgebraMap quotient_descent(const GroupAlgebra& fg, const Subgroup& q) {
  require_normal_p_subgroup(fg, q);
  QuotientAlgebraMap map(fg, groups::quotient(fg.group(), q));
  const Group& g = fg.group();
  const GroupAlgebra& target = map.target();
  const Field& f = fg.field();
  auto fail = [](const std::string& what) { throw Error(ErrorCode::VerificationFailed, "quotient descent: " + what); };

  const auto& proj = map.quotient().projection;
  const Group& qg = target.group();
  for (ElemId a = 0; a < g.order(); ++a) {
    for (ElemId b = 0; b < g.order(); ++b) {
      if (proj[g.mul(a, b)] != qg.mul(proj[a], proj[b])) fail("projection is not multiplicative");
    }
  }

  for (ElemId c = 0; c < target.dim(); ++c) {
    const Vector nsx = map.nu_star(target.basis(c));
    for (ElemId a = 0; a < g.order(); ++a) {
      const Scalar lhs = fg.lambda(fg.right_translate(nsx, a));
      const Scalar rhs = map.mu(target.right_translate(target.basis(c), proj[a]));
      if (lhs != rhs) fail("adjointness lambda(nu*(x) a) = mu(x nu(a))");
    }
  }

  for (ElemId x = 0; x < g.order(); ++x) {
    const Vector lhs = map.nu_star(target.basis(map.quotient().projection[x]));
    if (lhs != fg.left_translate(x, map.z())) fail("nu*(gQ) = g Q^+");
  }

  const Subspace ker = map.kernel();
  Subspace augmentation_span(f, fg.dim());
  for (ElemId x = 0; x < g.order(); ++x) {
    for (auto u : q.members()) {
      if (u == 0) continue;
      Vector v = fg.zero();
      v[g.mul(x, u)] = f.add(v[g.mul(x, u)], 1);
      v[x] = f.sub(v[x], 1);
      augmentation_span.insert(std::move(v));
    }
  }
  if (!(ker == augmentation_span)) fail("kernel = FG J(FQ)");

  ffla::Matrix times_z(f, fg.dim(), fg.dim());
  for (ElemId x = 0; x < g.order(); ++x) {
    const Vector col = fg.left_translate(x, map.z());
    for (ElemId h = 0; h < g.order(); ++h) times_z.at(h, x) = col[h];
  }
  if (!(ker == ffla::kernel(times_z))) fail("kernel = Ann(Q^+)");
  return map;
}

SubspaceIdentityReport verify_subspace_identity(const GroupAlgebra& fg, const Subgroup& q) {
  const auto p = fg.characteristic();
  const QuotientAlgebraMap map = quotient_descent(fg, q);
  const Group& quotient = map.target().group();

  std::vector<ElemId> lifted;
  for (auto c : p_elements(quotient, p)) lifted.push_back(map.quotient().representatives[c]);
  const Vector t_plus = subset_sum(fg, lifted);

  SubspaceIdentityReport report;
  report.representative_projection = map.project(t_plus) == subset_sum(map.target(), p_elements(quotient, p));
  report.coset_product = fg.multiply(map.z(), t_plus) == subset_sum(fg, p_elements(fg.group(), p));

  const Subspace wq = wq_ideal(fg, q);
  const Subspace quotient_z0 = z0_ideal(map.target());
  report.subspace_equality = map.nu_star_image(quotient_z0) == wq;
  report.dim_wq = wq.dim();
  report.dim_quotient_z0 = quotient_z0.dim();
  return report;
}

TraceGenerator trace_generator(const GroupAlgebra& fg, const Subgroup& q, ElemId x) {
  require_normal_p_subgroup(fg, q);
  const Group& g = fg.group();
  const auto p = fg.characteristic();
  const Vector gp = subset_sum(fg, p_elements(g, p));
  TraceGenerator out;
  out.value = rel_trace(fg, q, Subgroup::whole(g), fg.left_translate(x, gp));
  const Subgroup cg = groups::centralizer(g, x);
  const Subgroup cq = groups::centralizer(g, q, x);
  out.centralizer_sylow = cq.order() == groups::p_part(cg.order(), p);
  return out;
}

bool sylow_intersection_condition(const Group& g, std::span<const Subgroup> sylows, ElemId x, const Subgroup& q) {
  return std::any_of(sylows.begin(), sylows.end(), [&](const Subgroup& s) {
    return groups::intersect(g, s, groups::conjugate(g, s, x)) == q;
  });
}

std::vector<ElemId> SpanningSet::qualifying() const {
  std::vector<ElemId> out;
  for (const auto& c : candidates) {
    if (c.qualifies()) out.push_back(c.element);
  }
  return out;
}

SpanningSet spanning_set(const GroupAlgebra& fg, const Subgroup& q) {
  require_normal_p_subgroup(fg, q);
  const Group& g = fg.group();
  const auto p = fg.characteristic();
  const auto sylows = groups::all_sylow_subgroups(g, p);
  SpanningSet out{{}, Subspace(fg.field(), fg.dim()), 0};
  for (auto x : p_prime_elements(g, p)) {
    const auto gen = trace_generator(fg, q, x);
    SpanningCandidate c;
    c.element = x;
    c.centralizer_sylow = gen.centralizer_sylow;
    c.sylow_intersection = sylow_intersection_condition(g, sylows, x, q);
    c.nonzero = !ffla::is_zero(gen.value);
    if (c.qualifies()) {
      out.span.insert(gen.value);
      if (!c.nonzero) ++out.qualifying_zero_generators;
    }
    out.candidates.push_back(c);
  }
  if (!(out.span == wq_ideal(fg, q))) {
    throw Error(ErrorCode::SpanMismatch, "restricted spanning set does not span the trace ideal");
  }
  return out;
}

}  // namespace defzero::grpalg
