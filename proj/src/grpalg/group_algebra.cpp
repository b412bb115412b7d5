#include <algorithm>

#include "defzero/error.hpp"
#include "defzero/grpalg.hpp"

namespace defzero::grpalg {

GroupAlgebra::GroupAlgebra(std::shared_ptr<const Group> group, Field field)
    : group_(std::move(group)), field_(std::move(field)) {
  if (!group_) throw Error(ErrorCode::InvalidArgument, "group algebra needs a group");
}

Vector GroupAlgebra::basis(ElemId g) const {
  Vector v(dim(), 0);
  v.at(g) = 1;
  return v;
}

Vector GroupAlgebra::class_sum(std::size_t class_index) const {
  const auto& members = group_->classes().classes.at(class_index);
  return subset_sum(*this, members);
}

Vector GroupAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "group algebra element has wrong length");
  std::vector<ElemId> support;
  for (ElemId h = 0; h < dim(); ++h) {
    if (b[h] != 0) support.push_back(h);
  }
  Vector out(dim(), 0);
  for (ElemId g = 0; g < dim(); ++g) {
    if (a[g] == 0) continue;
    for (auto h : support) {
      const ElemId gh = group_->mul(g, h);
      out[gh] = field_.add(out[gh], field_.mul(a[g], b[h]));
    }
  }
  return out;
}

Vector GroupAlgebra::left_translate(ElemId g, const Vector& a) const {
  Vector out(dim(), 0);
  for (ElemId h = 0; h < dim(); ++h) out[group_->mul(g, h)] = a[h];
  return out;
}

Vector GroupAlgebra::right_translate(const Vector& a, ElemId g) const {
  Vector out(dim(), 0);
  for (ElemId h = 0; h < dim(); ++h) out[group_->mul(h, g)] = a[h];
  return out;
}

Vector GroupAlgebra::conjugate(ElemId x, const Vector& a) const {
  Vector out(dim(), 0);
  for (ElemId h = 0; h < dim(); ++h) out[group_->conj(x, h)] = a[h];
  return out;
}

bool GroupAlgebra::is_fixed_by(const Subgroup& x, const Vector& a) const {
  for (auto u : x.members()) {
    for (ElemId h = 0; h < dim(); ++h) {
      if (a[group_->conj(u, h)] != a[h]) return false;
    }
  }
  return true;
}

bool GroupAlgebra::is_central(const Vector& a) const {
  for (auto s : group_->generators()) {
    for (ElemId h = 0; h < dim(); ++h) {
      if (a[group_->conj(s, h)] != a[h]) return false;
    }
  }
  return true;
}

Vector subset_sum(const GroupAlgebra& fg, std::span<const ElemId> subset) {
  Vector v = fg.zero();
  for (auto x : subset) {
    if (x >= fg.dim()) throw Error(ErrorCode::InvalidArgument, "subset element out of range");
    v[x] = 1;
  }
  return v;
}

std::vector<ElemId> p_elements(const Group& g, std::uint32_t p) {
  std::vector<ElemId> out;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (groups::is_p_power(g.element_order(x), p)) out.push_back(x);
  }
  return out;
}

std::vector<ElemId> p_prime_elements(const Group& g, std::uint32_t p) {
  std::vector<ElemId> out;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (g.element_order(x) % p != 0) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> defect_zero_classes(const Group& g, std::uint32_t p) {
  std::vector<std::size_t> out;
  const auto& cd = g.classes();
  for (std::size_t c = 0; c < cd.count(); ++c) {
    if (cd.centralizer_orders[c] % p != 0) out.push_back(c);
  }
  return out;
}

Subspace fixed_points(const GroupAlgebra& fg, const Subgroup& x) {
  const Group& g = fg.group();
  std::vector<char> seen(g.order(), 0);
  Subspace out(fg.field(), fg.dim());
  for (ElemId h = 0; h < g.order(); ++h) {
    if (seen[h]) continue;
    Vector orbit_sum = fg.zero();
    for (auto u : x.members()) {
      const ElemId y = g.conj(u, h);
      seen[y] = 1;
      orbit_sum[y] = 1;
    }
    out.insert(std::move(orbit_sum));
  }
  return out;
}

Subspace center(const GroupAlgebra& fg) { return fixed_points(fg, Subgroup::whole(fg.group())); }

std::vector<ElemId> coset_representatives(const Group& g, const Subgroup& x, const Subgroup& y) {
  if (!groups::is_subgroup_of(y, x)) throw Error(ErrorCode::InvalidArgument, "relative trace needs Y <= X");
  std::vector<char> covered(g.order(), 0);
  std::vector<ElemId> reps;
  for (auto a : x.members()) {
    if (covered[a]) continue;
    reps.push_back(a);
    for (auto u : y.members()) covered[g.mul(a, u)] = 1;
  }
  return reps;
}

namespace {

Vector trace_unchecked(const GroupAlgebra& fg, std::span<const ElemId> reps, const Vector& a) {
  const Field& f = fg.field();
  const Group& g = fg.group();
  Vector out = fg.zero();
  for (auto x : reps) {
    for (ElemId h = 0; h < fg.dim(); ++h) {
      if (a[h] == 0) continue;
      const ElemId y = g.conj(x, h);
      out[y] = f.add(out[y], a[h]);
    }
  }
  return out;
}

}  // namespace

Vector rel_trace(const GroupAlgebra& fg, const Subgroup& y, const Subgroup& x, const Vector& a) {
  const auto reps = coset_representatives(fg.group(), x, y);
  return rel_trace(fg, y, x, a, reps);
}

Vector rel_trace(const GroupAlgebra& fg, const Subgroup& y, const Subgroup& x, const Vector& a,
                 std::span<const ElemId> representatives) {
  const Group& g = fg.group();
  if (a.size() != fg.dim()) throw Error(ErrorCode::DimensionMismatch, "relative trace: element has wrong length");
  if (!groups::is_subgroup_of(y, x)) throw Error(ErrorCode::InvalidArgument, "relative trace needs Y <= X");
  if (representatives.size() * y.order() != x.order()) {
    throw Error(ErrorCode::InvalidArgument, "relative trace: wrong number of coset representatives");
  }
  std::vector<char> covered(g.order(), 0);
  for (auto r : representatives) {
    if (!x.contains(r)) throw Error(ErrorCode::InvalidArgument, "relative trace: representative outside X");
    for (auto u : y.members()) {
      const ElemId ru = g.mul(r, u);
      if (covered[ru]) throw Error(ErrorCode::InvalidArgument, "relative trace: two representatives share a coset");
      covered[ru] = 1;
    }
  }
  if (!fg.is_fixed_by(y, a)) throw Error(ErrorCode::NotYFixed, "relative trace: element is not fixed by Y");
  Vector out = trace_unchecked(fg, representatives, a);
  if (!fg.is_fixed_by(x, out)) throw Error(ErrorCode::VerificationFailed, "relative trace: result is not fixed by X");
  return out;
}

Subspace left_ideal_span(const GroupAlgebra& fg, const Vector& a) {
  Subspace out(fg.field(), fg.dim());
  for (ElemId g = 0; g < fg.dim() && out.dim() < fg.dim(); ++g) out.insert(fg.left_translate(g, a));
  return out;
}

Subspace right_ideal_span(const GroupAlgebra& fg, const Vector& a) {
  Subspace out(fg.field(), fg.dim());
  for (ElemId g = 0; g < fg.dim() && out.dim() < fg.dim(); ++g) out.insert(fg.right_translate(a, g));
  return out;
}

Subspace two_sided_ideal_span(const GroupAlgebra& fg, const Vector& a) {
  Subspace out(fg.field(), fg.dim());
  for (ElemId g = 0; g < fg.dim(); ++g) {
    const Vector ga = fg.left_translate(g, a);
    for (ElemId h = 0; h < fg.dim() && out.dim() < fg.dim(); ++h) out.insert(fg.right_translate(ga, h));
  }
  return out;
}

void require_normal_p_subgroup(const GroupAlgebra& fg, const Subgroup& q) {
  const auto p = fg.characteristic();
  if (!groups::is_normal(fg.group(), q)) {
    throw Error(ErrorCode::NotNormal, "subgroup of order " + std::to_string(q.order()) + " is not normal");
  }
  if (!groups::is_p_power(q.order(), p)) {
    throw Error(ErrorCode::NotNormalPSubgroup,
                "normal subgroup of order " + std::to_string(q.order()) + " is not a " + std::to_string(p) + "-group");
  }
}

Subspace wq_ideal(const GroupAlgebra& fg, const Subgroup& q) {
  require_normal_p_subgroup(fg, q);
  const Group& g = fg.group();
  const auto reps = coset_representatives(g, Subgroup::whole(g), q);
  const Vector gp = subset_sum(fg, p_elements(g, fg.characteristic()));
  Subspace out(fg.field(), fg.dim());
  for (ElemId x = 0; x < g.order(); ++x) {
    const Vector v = fg.left_translate(x, gp);
    if (!fg.is_fixed_by(q, v)) throw Error(ErrorCode::VerificationFailed, "e_g G_p^+ is not fixed by Q");
    out.insert(trace_unchecked(fg, reps, v));
  }
  for (const auto& b : out.basis()) {
    if (!fg.is_central(b)) throw Error(ErrorCode::VerificationFailed, "trace ideal basis vector is not central");
  }
  return out;
}

Subspace higman_ideal(const GroupAlgebra& fg) {
  const Group& g = fg.group();
  const auto all = Subgroup::whole(g);
  const auto reps = coset_representatives(g, all, Subgroup::trivial(g));
  Subspace by_trace(fg.field(), fg.dim());
  for (ElemId x = 0; x < g.order(); ++x) by_trace.insert(trace_unchecked(fg, reps, fg.basis(x)));

  Subspace by_classes(fg.field(), fg.dim());
  for (auto c : defect_zero_classes(g, fg.characteristic())) by_classes.insert(fg.class_sum(c));

  if (!(by_trace == by_classes)) {
    throw Error(ErrorCode::CrossCheckFailed, "trace image and defect-zero class sums span different subspaces");
  }
  return by_trace;
}

Subspace z0_ideal(const GroupAlgebra& fg) {
  const Vector gp = subset_sum(fg, p_elements(fg.group(), fg.characteristic()));
  Subspace out(fg.field(), fg.dim());
  const Subspace h = higman_ideal(fg);
  for (const auto& b : h.basis()) out.insert(fg.multiply(b, gp));
  return out;
}

Subspace class_sums_with_defect_in(const GroupAlgebra& fg, const Subgroup& q) {
  require_normal_p_subgroup(fg, q);
  const Group& g = fg.group();
  const auto reps = coset_representatives(g, Subgroup::whole(g), q);
  Subspace by_trace(fg.field(), fg.dim());
  const Subspace fixed = fixed_points(fg, q);
  for (const auto& orbit_sum : fixed.basis()) by_trace.insert(trace_unchecked(fg, reps, orbit_sum));

  Subspace by_classes(fg.field(), fg.dim());
  const auto p = fg.characteristic();
  for (std::size_t c = 0; c < g.classes().count(); ++c) {
    const Subgroup d = groups::class_defect_group(g, p, c);
    bool conjugate_into_q = false;
    for (ElemId x = 0; x < g.order() && !conjugate_into_q; ++x) {
      conjugate_into_q = std::all_of(d.members().begin(), d.members().end(),
                                     [&](ElemId y) { return q.contains(g.conj(x, y)); });
    }
    if (conjugate_into_q) by_classes.insert(fg.class_sum(c));
  }
  if (!(by_trace == by_classes)) {
    throw Error(ErrorCode::CrossCheckFailed, "relative trace image and defect-group class sums span different subspaces");
  }
  return by_trace;
}

Subspace reynolds_ideal(const GroupAlgebra& fg) {
  const Group& g = fg.group();
  const auto p = fg.characteristic();
  const auto& cd = g.classes();
  std::vector<Vector> sections(cd.count(), fg.zero());
  for (ElemId x = 0; x < g.order(); ++x) {
    const auto f = groups::p_factorization(g, x, p);
    sections[cd.class_of[f.p_prime_part]][x] = 1;
  }
  Subspace out(fg.field(), fg.dim());
  for (auto& s : sections) out.insert(std::move(s));
  return out;
}

ffla::MultiplicationTable structure_table(const GroupAlgebra& fg) {
  const Group& g = fg.group();
  ffla::MultiplicationTable t(fg.field(), fg.dim());
  for (ElemId a = 0; a < g.order(); ++a) {
    for (ElemId b = 0; b < g.order(); ++b) t.accumulate(a, b, g.mul(a, b), 1);
  }
  return t;
}

ffla::MultiplicationTable center_table(const GroupAlgebra& fg) {
  const auto& cd = fg.group().classes();
  const std::size_t k = cd.count();
  ffla::MultiplicationTable t(fg.field(), k);
  std::vector<Vector> sums;
  for (std::size_t c = 0; c < k; ++c) sums.push_back(fg.class_sum(c));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vector prod = fg.multiply(sums[i], sums[j]);
      for (std::size_t l = 0; l < k; ++l) t.accumulate(i, j, l, prod[cd.representatives[l]]);
    }
  }
  return t;
}

}  // namespace defzero::grpalg
