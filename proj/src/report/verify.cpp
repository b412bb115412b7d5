#include <chrono>
#include <filesystem>
#include <random>
#include <sstream>

#include <json.hpp>

#include "defzero/charoracle.hpp"
#include "defzero/error.hpp"
#include "defzero/grpalg.hpp"
#include "defzero/report.hpp"
#include "defzero/symalg.hpp"

namespace defzero::report {

using ffla::Field;
using ffla::Subspace;
using ffla::Vector;
using groups::ElemId;
using Json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ElemId find_in(const Group& g, const groups::Perm& perm) {
  if (!g.is_permutation_group()) throw Error(ErrorCode::InvalidArgument, "explicit Q generators need a permutation group");
  if (perm.degree() != g.degree()) throw Error(ErrorCode::InvalidArgument, "Q generator has the wrong degree");
  auto id = g.find(perm);
  if (!id) throw Error(ErrorCode::InvalidArgument, "Q generator " + perm.cycle_string() + " is not in G");
  return *id;
}

Subgroup from_perms(const Group& g, const std::vector<groups::Perm>& perms) {
  std::vector<ElemId> ids;
  for (const auto& p : perms) ids.push_back(find_in(g, p));
  return Subgroup::generated_by(g, ids);
}

// Greedy generating set in element order, for labelling Q in reports.
std::vector<ElemId> small_generating_set(const Group& g, const Subgroup& h) {
  std::vector<ElemId> gens;
  Subgroup current = Subgroup::trivial(g);
  for (auto x : h.members()) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = Subgroup::generated_by(g, gens);
  }
  return gens;
}

Json labels(const Group& g, const std::vector<ElemId>& elems) {
  Json out = Json::array();
  for (auto x : elems) out.push_back(g.label(x));
  return out;
}

Json basis_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) out.push_back(v);
  return out;
}

bool verification_code(ErrorCode c) {
  return c == ErrorCode::VerificationFailed || c == ErrorCode::CrossCheckFailed || c == ErrorCode::SpanMismatch ||
         c == ErrorCode::NotSymmetricQuotient || c == ErrorCode::NotAnIdeal;
}

// Collects named boolean verdicts; verification errors turn into false plus a note.
class PropertySheet {
 public:
  template <class Fn>
  void check(const std::string& name, Fn&& fn) {
    bool value = false;
    try {
      value = fn();
    } catch (const Error& e) {
      if (!verification_code(e.code())) throw;
      notes_.push_back({{"property", name}, {"code", error_code_name(e.code())}, {"message", e.what()}});
    }
    verdicts_[name] = value;
    all_ = all_ && value;
  }
  bool all() const noexcept { return all_; }
  const Json& verdicts() const noexcept { return verdicts_; }
  const Json& notes() const noexcept { return notes_; }

 private:
  Json verdicts_ = Json::object();
  Json notes_ = Json::array();
  bool all_ = true;
};

Subspace center_intersection(const grpalg::GroupAlgebra& fg, const Subspace& l) {
  return grpalg::center(fg).intersect(l);
}

bool closed_under_class_sums(const grpalg::GroupAlgebra& fg, const Subspace& l) {
  const std::size_t k = fg.group().classes().count();
  for (std::size_t c = 0; c < k; ++c) {
    const Vector cs = fg.class_sum(c);
    for (const auto& b : l.basis()) {
      if (!l.contains(fg.multiply(cs, b))) return false;
    }
  }
  return true;
}

bool is_ideal_of_center(const grpalg::GroupAlgebra& fg, const Subspace& l) {
  return l.leq(grpalg::center(fg)) && closed_under_class_sums(fg, l);
}

}  // namespace

GroupSource load_group(const std::string& spec, std::size_t max_order) {
  GroupSource out;
  out.name = spec;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    const auto file = groups::load_group_file(spec);
    out.group = std::make_shared<const Group>(Group::from_generators(file.generators, max_order));
    if (file.has_subgroup) out.file_subgroup = file.subgroup_generators;
  } else {
    out.group = std::make_shared<const Group>(groups::builtin_group(spec, max_order));
  }
  return out;
}

std::vector<Subgroup> resolve_q(const GroupSource& source, std::uint32_t p, const std::string& selector) {
  const Group& g = *source.group;
  if (selector == "auto") return groups::normal_p_subgroups(g, p);
  if (selector == "op") return {groups::largest_normal_p_subgroup(g, p)};
  if (selector == "trivial" || selector == "1") return {Subgroup::trivial(g)};
  if (selector == "whole") return {Subgroup::whole(g)};
  if (selector == "file") {
    if (!source.file_subgroup) throw Error(ErrorCode::InvalidArgument, "Q selector 'file' needs a group file with a subgroup section");
    return {from_perms(g, *source.file_subgroup)};
  }
  if (selector.rfind("gens:", 0) == 0) {
    std::vector<groups::Perm> perms;
    std::stringstream ss(selector.substr(5));
    std::string item;
    while (std::getline(ss, item, '|')) perms.push_back(groups::parse_cycles(item, g.degree()));
    return {from_perms(g, perms)};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(selector, ec)) return {from_perms(g, groups::load_group_file(selector).generators)};
  throw Error(ErrorCode::InvalidArgument, "unknown Q selector '" + selector + "'");
}

unsigned splitting_degree(const Group& g, std::uint32_t p) {
  std::uint64_t e = g.exponent();
  while (e % p == 0) e /= p;
  return e == 1 ? 1 : ffla::multiplicative_order(p, e);
}

TripleReport verify_triple(const GroupSource& source, const Subgroup& q, const Options& options) {
  const auto t_total = Clock::now();
  const Group& g = *source.group;
  const std::uint32_t p = options.prime;
  const grpalg::GroupAlgebra fg(source.group, Field::prime(p));
  Json timings = Json::object();

  Json out;
  out["name"] = source.name;
  out["group_order"] = g.order();
  out["p"] = p;
  out["q_order"] = q.order();
  out["q_generators"] = labels(g, small_generating_set(g, q));

  auto t0 = Clock::now();
  const Subspace wq = grpalg::wq_ideal(fg, q);
  const grpalg::QuotientAlgebraMap map(fg, groups::quotient(g, q));
  timings["wq"] = ms_since(t0);

  t0 = Clock::now();
  const Group& quotient = map.target().group();
  const auto oracle = charoracle::defect_zero_count(quotient, p, options.seed);
  timings["oracle"] = ms_since(t0);

  out["quotient_order"] = quotient.order();
  out["dim_wq"] = wq.dim();
  out["oracle"] = {{"defect_zero", oracle.defect_zero},
                   {"class_count", oracle.class_count},
                   {"aux_prime", oracle.ell},
                   {"degrees", oracle.degrees}};
  const bool match = wq.dim() == oracle.defect_zero;
  out["match"] = match;

  t0 = Clock::now();
  const auto ident = grpalg::verify_subspace_identity(fg, q);
  out["identities"] = {{"representative_projection", ident.representative_projection},
                       {"coset_product", ident.coset_product},
                       {"subspace_equality", ident.subspace_equality},
                       {"dim_quotient_z0", ident.dim_quotient_z0}};
  timings["identities"] = ms_since(t0);

  t0 = Clock::now();
  PropertySheet props;
  const Vector gp = grpalg::subset_sum(fg, grpalg::p_elements(g, p));
  Subspace h(fg.field(), fg.dim());
  props.check("higman_classes_vs_trace", [&] {
    h = grpalg::higman_ideal(fg);
    return h.leq(grpalg::center(fg));
  });
  const Subspace z0 = grpalg::z0_ideal(fg);

  props.check("wq_ideal_of_center", [&] { return is_ideal_of_center(fg, wq); });
  props.check("fg_gp_fixed_by_q", [&] { return grpalg::left_ideal_span(fg, gp).leq(grpalg::fixed_points(fg, q)); });
  props.check("left_right_span_equal",
              [&] { return grpalg::left_ideal_span(fg, gp) == grpalg::right_ideal_span(fg, gp); });
  props.check("wq_in_defect_class_sums", [&] { return wq.leq(grpalg::class_sums_with_defect_in(fg, q)); });

  {
    const auto sylows = groups::all_sylow_subgroups(g, p);
    bool vanishing = true, intersection = true, reduction = true;
    for (ElemId x = 0; x < g.order(); ++x) {
      const auto gen = grpalg::trace_generator(fg, q, x);
      const bool nonzero = !ffla::is_zero(gen.value);
      if (!gen.centralizer_sylow && nonzero) vanishing = false;
      if (nonzero && !grpalg::sylow_intersection_condition(g, sylows, x, q)) intersection = false;
      if (gen.centralizer_sylow) {
        const auto xp = groups::p_factorization(g, x, p).p_prime_part;
        if (grpalg::trace_generator(fg, q, xp).value != gen.value) reduction = false;
      }
    }
    props.check("vanishing_criterion", [&] { return vanishing; });
    props.check("sylow_intersection", [&] { return intersection; });
    props.check("p_prime_reduction", [&] { return reduction; });
  }
  std::size_t zero_generators = 0;
  props.check("spanning_set", [&] {
    const auto s = grpalg::spanning_set(fg, q);
    zero_generators = s.qualifying_zero_generators;
    return s.span == wq;
  });
  props.check("lambda_symmetric", [&] {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    for (int t = 0; t < 8; ++t) {
      Vector a(fg.dim()), b(fg.dim());
      for (auto& c : a) c = coeff(rng);
      for (auto& c : b) c = coeff(rng);
      if (fg.lambda(fg.multiply(a, b)) != fg.lambda(fg.multiply(b, a))) return false;
    }
    return true;
  });

  // Adjointness on all basis pairs, nu*(gQ) = gQ^+ and I = Ann(Q^+).
  const grpalg::GroupAlgebra& fgq = map.target();
  props.check("descent_identities", [&] {
    grpalg::quotient_descent(fg, q);
    return true;
  });
  props.check("nu_star_injective", [&] {
    return map.nu_star_image(Subspace::whole(fgq.field(), fgq.dim())).dim() == fgq.dim();
  });
  const Subspace quotient_z0 = grpalg::z0_ideal(fgq);
  props.check("image_ideal_closure", [&] {
    return is_ideal_of_center(fg, map.nu_star_image(quotient_z0)) &&
           is_ideal_of_center(fg, map.nu_star_image(grpalg::higman_ideal(fgq)));
  });
  props.check("center_image", [&] {
    return map.nu_star_image(grpalg::center(fgq)) == center_intersection(fg, grpalg::left_ideal_span(fg, map.z()));
  });
  props.check("inclusion_chain", [&] {
    const Subspace r = grpalg::reynolds_ideal(fg);
    const Subspace rq = grpalg::reynolds_ideal(fgq);
    return z0.leq(h) && h.leq(r) && map.nu_star_image(quotient_z0).leq(map.nu_star_image(rq)) &&
           map.nu_star_image(rq).leq(r);
  });

  symalg::Algebra generic(grpalg::structure_table(fg), fg.unit());
  const symalg::SymmetrizingForm lambda(generic, fg.unit());
  props.check("higman_generic_vs_trace", [&] { return symalg::higman_ideal(generic, lambda) == h; });
  props.check("z_recovered", [&] {
    Vector mu_on_a = fg.zero();
    for (auto u : q.members()) mu_on_a[u] = 1;
    return symalg::solve_z(generic, lambda, map.kernel(), mu_on_a) == map.z();
  });

  const auto self_oracle = charoracle::defect_zero_count(g, p, options.seed);
  props.check("oracle_self", [&] { return self_oracle.defect_zero == z0.dim(); });
  props.check("oracle_degree_sums", [&] {
    std::uint64_t sq = 0, sq_self = 0;
    for (auto d : oracle.degrees) sq += d * d;
    for (auto d : self_oracle.degrees) sq_self += d * d;
    return sq == quotient.order() && sq_self == g.order() && oracle.class_count == quotient.classes().count() &&
           self_oracle.class_count == g.classes().count();
  });

  const unsigned m = options.field_degree != 0 ? options.field_degree : splitting_degree(g, p);
  std::size_t dim_extended = wq.dim();
  if (m > 1) {
    const grpalg::GroupAlgebra fgm(source.group, Field::extension(p, m));
    dim_extended = grpalg::wq_ideal(fgm, q).dim();
  }
  props.check("field_invariance", [&] { return dim_extended == wq.dim(); });
  timings["properties"] = ms_since(t0);

  out["properties"] = props.verdicts();
  out["qualifying_zero_generators"] = zero_generators;
  out["self_oracle"] = {{"defect_zero", self_oracle.defect_zero}, {"dim_z0", z0.dim()}};
  out["extension"] = {{"degree", m}, {"dim_wq", dim_extended}};
  if (!props.notes().empty()) out["property_failures"] = props.notes();
  const bool all_properties = props.all() && ident.ok();
  out["all_properties"] = all_properties;
  out["seed"] = options.seed;
  if (options.dump_bases) {
    out["bases"] = {{"wq", basis_json(wq)}, {"nu_star_z0_quotient", basis_json(map.nu_star_image(quotient_z0))}};
  }
  if (options.timings) {
    timings["total"] = ms_since(t_total);
    out["timings_ms"] = timings;
  }
  return {out.dump(), {match, all_properties}};
}

std::vector<TripleReport> verify(const GroupSource& source, const Options& options) {
  std::vector<TripleReport> out;
  for (const auto& q : resolve_q(source, options.prime, options.q_selector)) out.push_back(verify_triple(source, q, options));
  return out;
}

std::vector<std::string> inspect(const GroupSource& source, const Options& options) {
  const Group& g = *source.group;
  const std::uint32_t p = options.prime;
  const grpalg::GroupAlgebra fg(source.group, Field::prime(p));
  std::vector<std::string> out;
  for (const auto& q : resolve_q(source, p, options.q_selector)) {
    grpalg::require_normal_p_subgroup(fg, q);
    Json j;
    j["name"] = source.name;
    j["group_order"] = g.order();
    j["p"] = p;
    j["q_order"] = q.order();
    j["q_generators"] = labels(g, small_generating_set(g, q));
    const Subspace wq = grpalg::wq_ideal(fg, q);
    j["dim_wq"] = wq.dim();

    const auto set = grpalg::spanning_set(fg, q);
    Json spanning = Json::array();
    for (const auto& c : set.candidates) {
      spanning.push_back({{"element", g.label(c.element)},
                          {"order", g.element_order(c.element)},
                          {"centralizer_sylow", c.centralizer_sylow},
                          {"sylow_intersection", c.sylow_intersection},
                          {"qualifies", c.qualifies()},
                          {"nonzero", c.nonzero}});
    }
    j["spanning_candidates"] = spanning;
    j["qualifying"] = labels(g, set.qualifying());
    j["restricted_span_dim"] = set.span.dim();

    const auto& cd = g.classes();
    Json dz = Json::array();
    for (auto c : grpalg::defect_zero_classes(g, p)) {
      dz.push_back({{"representative", g.label(cd.representatives[c])}, {"size", cd.classes[c].size()}});
    }
    j["defect_zero_classes"] = dz;

    Json relative = Json::array();
    for (std::size_t c = 0; c < cd.count(); ++c) {
      const Subgroup d = groups::class_defect_group(g, p, c);
      // Q is normal, so some conjugate of d lies in Q exactly when d does.
      if (!groups::is_subgroup_of(d, q)) continue;
      relative.push_back({{"representative", g.label(cd.representatives[c])},
                          {"size", cd.classes[c].size()},
                          {"defect_order", d.order()}});
    }
    j["defect_in_q_classes"] = relative;
    if (options.dump_bases) {
      j["bases"] = {{"wq", basis_json(wq)},
                    {"restricted_span", basis_json(set.span)},
                    {"defect_in_q_class_sums", basis_json(grpalg::class_sums_with_defect_in(fg, q))}};
    }
    out.push_back(j.dump());
  }
  return out;
}

}  // namespace defzero::report
