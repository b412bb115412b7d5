#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "defzero/error.hpp"
#include "defzero/permgroup.hpp"
#include "support.hpp"

using namespace defzero::groups;
using defzero::Error;
using defzero::ErrorCode;

namespace {

ElemId elem(const Group& g, std::vector<std::vector<std::uint32_t>> cycles) {
  auto id = g.find(Perm::from_cycles(g.degree(), cycles));
  REQUIRE(id.has_value());
  return *id;
}

std::vector<std::size_t> orders_of(const std::vector<Subgroup>& subs) {
  std::vector<std::size_t> out;
  for (const auto& s : subs) out.push_back(s.order());
  return out;
}

bool is_p_group_of_order(const Subgroup& s, std::size_t order) { return s.order() == order; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Perm a = Perm::from_cycles(4, {{0, 1, 2}});
  const Perm b = Perm::from_cycles(4, {{0, 1}});
  CHECK(a.cycle_string() == "(1 2 3)");
  CHECK(Perm::identity(3).cycle_string() == "()");
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0}), Error);
  CHECK(parse_cycles("(1 2)(3 4)", 4) == Perm::from_cycles(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("enumeration matches naive closure") {
  CHECK(Group::from_generators(std::vector<Perm>{Perm::from_cycles(2, {{0, 1}})}).order() == 2);
  CHECK(Group::from_generators(std::vector<Perm>{Perm::identity(3)}).order() == 1);
  for (const char* spec : {"symmetric 4", "alternating 5", "dihedral 10", "dicyclic 12", "sl23", "quaternion 8",
                           "cyclic 12", "symmetric 3 x cyclic 3"}) {
    CAPTURE(spec);
    const auto gens = builtin_generators(spec);
    const Group g = builtin_group(spec);
    const auto naive = support::closure(support::generator_images(gens), gens.front().degree());
    REQUIRE(g.order() == naive.size());
    CHECK(g.perm(g.identity()).is_identity());
    std::uint64_t exponent = 1;
    for (ElemId x = 0; x < g.order(); ++x) {
      const auto o = support::perm_order(g.perm(x).images());
      REQUIRE(g.element_order(x) == o);
      exponent = std::lcm(exponent, o);
      REQUIRE(g.mul(x, g.inv(x)) == g.identity());
    }
    CHECK(g.exponent() == exponent);
  }
  CHECK(builtin_group("symmetric 4").order() == 24);
  CHECK(builtin_group("sl23").order() == 24);
}

TEST_CASE("Cayley table is associative on a sample") {
  const Group g = builtin_group("symmetric 4");
  for (ElemId a = 0; a < g.order(); a += 5)
    for (ElemId b = 0; b < g.order(); b += 3)
      for (ElemId c = 0; c < g.order(); c += 7) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

TEST_CASE("conjugacy classes") {
  const Group s3 = builtin_group("symmetric 3");
  std::vector<std::size_t> sizes;
  for (const auto& c : s3.classes().classes) sizes.push_back(c.size());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 2});

  const Group s4 = builtin_group("symmetric 4");
  CHECK(s4.classes().count() == 5);
  std::vector<std::size_t> s4_sizes;
  for (const auto& c : s4.classes().classes) s4_sizes.push_back(c.size());
  std::sort(s4_sizes.begin(), s4_sizes.end());
  CHECK(s4_sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});

  for (const char* spec : {"alternating 5", "dihedral 16", "sl23", "dicyclic 12"}) {
    CAPTURE(spec);
    const auto gens = builtin_generators(spec);
    const Group g = builtin_group(spec);
    const auto naive = support::class_sizes(support::closure(support::generator_images(gens), gens.front().degree()));
    std::multiset<std::size_t> ours;
    const auto& cd = g.classes();
    for (std::size_t c = 0; c < cd.count(); ++c) {
      ours.insert(cd.classes[c].size());
      REQUIRE(cd.classes[c].size() * cd.centralizer_orders[c] == g.order());
      for (auto x : cd.classes[c]) REQUIRE(cd.class_of[x] == c);
    }
    CHECK(ours == naive);
  }
}

TEST_CASE("centralizers and center") {
  const Group s3 = builtin_group("symmetric 3");
  CHECK(centralizer(s3, elem(s3, {{0, 1}})).order() == 2);
  const Group s4 = builtin_group("symmetric 4");
  CHECK(centralizer(s4, elem(s4, {{0, 1, 2}})).order() == 3);
  CHECK(center(s4).order() == 1);
  CHECK(center(builtin_group("dihedral 8")).order() == 2);
  CHECK(center(builtin_group("sl23")).order() == 2);
}

TEST_CASE("Sylow subgroups") {
  CHECK(sylow_subgroup(builtin_group("symmetric 3"), 3).order() == 3);
  CHECK(sylow_subgroup(builtin_group("symmetric 4"), 2).order() == 8);
  CHECK(sylow_subgroup(builtin_group("cyclic 15"), 7).order() == 1);
  CHECK(all_sylow_subgroups(builtin_group("symmetric 3"), 2).size() == 3);
  CHECK(all_sylow_subgroups(builtin_group("symmetric 4"), 2).size() == 3);
  CHECK(all_sylow_subgroups(builtin_group("cyclic 12"), 2).size() == 1);

  // Every p-element lies in some Sylow subgroup and the count obeys Sylow's theorems.
  for (auto [spec, p] : {std::pair{"alternating 5", 2u}, {"alternating 5", 3u}, {"alternating 5", 5u},
                         {"symmetric 4", 3u}, {"sl23", 3u}, {"dihedral 10", 2u}}) {
    CAPTURE(spec);
    CAPTURE(p);
    const Group g = builtin_group(spec);
    const auto sylows = all_sylow_subgroups(g, p);
    const std::size_t n_p = sylows.size();
    CHECK(n_p % p == 1 % p);
    CHECK((g.order() / p_part(g.order(), p)) % n_p == 0);
    for (const auto& s : sylows) CHECK(is_p_group_of_order(s, p_part(g.order(), p)));
    for (ElemId x = 0; x < g.order(); ++x) {
      if (!is_p_power(g.element_order(x), p)) continue;
      CHECK(std::any_of(sylows.begin(), sylows.end(), [&](const Subgroup& s) { return s.contains(x); }));
    }
  }
  CHECK(all_sylow_subgroups(builtin_group("alternating 5"), 5).size() == 6);
  CHECK(all_sylow_subgroups(builtin_group("alternating 5"), 2).size() == 5);
}

TEST_CASE("largest normal p-subgroup and normal p-subgroups") {
  const Group s4 = builtin_group("symmetric 4");
  const Subgroup o2 = largest_normal_p_subgroup(s4, 2);
  CHECK(o2.order() == 4);
  CHECK(o2.contains(elem(s4, {{0, 1}, {2, 3}})));
  CHECK(largest_normal_p_subgroup(builtin_group("symmetric 3"), 2).order() == 1);
  CHECK(orders_of(normal_p_subgroups(s4, 2)) == std::vector<std::size_t>{1, 4});
  CHECK(orders_of(normal_p_subgroups(builtin_group("cyclic 4"), 2)) == std::vector<std::size_t>{1, 2, 4});
  CHECK(orders_of(normal_p_subgroups(builtin_group("symmetric 3"), 3)) == std::vector<std::size_t>{1, 3});
  // All normal subgroups of D8 and Q8 are 2-groups: 1, Z, three of order 4, whole.
  CHECK(orders_of(normal_p_subgroups(builtin_group("dihedral 8"), 2)) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  CHECK(orders_of(normal_p_subgroups(builtin_group("quaternion 8"), 2)) == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
  for (const auto& q : normal_p_subgroups(builtin_group("sl23"), 2)) CHECK(is_normal(builtin_group("sl23"), q));
}

TEST_CASE("p-factorization") {
  const Group c6 = builtin_group("cyclic 6");
  const ElemId g6 = c6.generators().front();
  const auto f6 = p_factorization(c6, g6, 2);
  CHECK(f6.p_part == c6.pow(g6, 3));
  CHECK(f6.p_prime_part == c6.pow(g6, 4));

  const Group c12 = builtin_group("cyclic 12");
  const ElemId g12 = c12.generators().front();
  const auto f12 = p_factorization(c12, g12, 3);
  CHECK(f12.p_part == c12.pow(g12, 4));
  CHECK(f12.p_prime_part == c12.pow(g12, 9));

  const Group s4 = builtin_group("symmetric 4");
  for (ElemId x = 0; x < s4.order(); ++x) {
    const auto f = p_factorization(s4, x, 2);
    REQUIRE(s4.mul(f.p_part, f.p_prime_part) == x);
    REQUIRE(s4.mul(f.p_part, f.p_prime_part) == s4.mul(f.p_prime_part, f.p_part));
    REQUIRE(is_p_power(s4.element_order(f.p_part), 2));
    REQUIRE(s4.element_order(f.p_prime_part) % 2 == 1);
  }
}

TEST_CASE("quotients") {
  const Group s4 = builtin_group("symmetric 4");
  const auto q = quotient(s4, largest_normal_p_subgroup(s4, 2));
  CHECK(q.group->order() == 6);
  CHECK(q.group->classes().count() == 3);
  for (ElemId a = 0; a < s4.order(); ++a)
    for (ElemId b = 0; b < s4.order(); b += 5)
      REQUIRE(q.projection[s4.mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
  const Subgroup not_normal = Subgroup::generated_by(s4, std::vector<ElemId>{elem(s4, {{0, 1}})});
  CHECK(code_of([&] { (void)quotient(s4, not_normal); }) == ErrorCode::NotNormal);
  CHECK(quotient(s4, Subgroup::whole(s4)).group->order() == 1);
}

TEST_CASE("defect groups of classes") {
  const Group s3 = builtin_group("symmetric 3");
  CHECK(class_defect_group(s3, 3, 0).order() == 3);
  const auto& cd = s3.classes();
  for (std::size_t c = 1; c < cd.count(); ++c) {
    const auto order = s3.element_order(cd.representatives[c]);
    CHECK(class_defect_group(s3, 3, c).order() == (order == 2 ? 1u : 3u));
  }
  const Group s4 = builtin_group("symmetric 4");
  CHECK(class_defect_group(s4, 2, 0).order() == 8);
}

TEST_CASE("subgroup helpers") {
  const Group d8 = builtin_group("dihedral 8");
  const Subgroup z = center(d8);
  CHECK(is_subgroup_of(z, Subgroup::whole(d8)));
  CHECK(is_normal(d8, z));
  CHECK(normalizer(d8, Subgroup::whole(d8), z).order() == 8);
  CHECK(intersect(d8, z, Subgroup::trivial(d8)).order() == 1);
  CHECK_THROWS_AS(Subgroup::from_members(d8, {0, elem(d8, {{0, 1, 2, 3}})}), Error);
  for (ElemId x = 0; x < d8.order(); ++x) CHECK(conjugate(d8, z, x) == z);
}

TEST_CASE("group files and builtin errors") {
  std::istringstream in("# dihedral of order 8\ndegree 4\ngen (1 2 3 4)\ngen (1 3)\nsubgroup\ngen (1 3)(2 4)\n");
  const GroupFile f = parse_group_file(in);
  CHECK(f.degree == 4);
  CHECK(f.generators.size() == 2);
  CHECK(f.has_subgroup);
  CHECK(f.subgroup_generators.size() == 1);
  CHECK(Group::from_generators(f.generators).order() == 8);

  std::istringstream bad("degree 3\ngen (1 4)\n");
  CHECK(code_of([&] { (void)parse_group_file(bad); }) == ErrorCode::Parse);
  std::istringstream unknown("degree 3\nfoo\n");
  CHECK(code_of([&] { (void)parse_group_file(unknown); }) == ErrorCode::Parse);
  CHECK(code_of([] { (void)load_group_file("/nonexistent/g.grp"); }) == ErrorCode::Io);
  CHECK(code_of([] { (void)builtin_group("symmetric 8"); }) == ErrorCode::DeskScaleExceeded);
  CHECK(code_of([] { (void)builtin_group("frobenius 20"); }) == ErrorCode::Parse);

  const auto loaded = load_group_file(support::source_path("corpus/groups/d8.grp"));
  CHECK(Group::from_generators(loaded.generators).order() == 8);
}
