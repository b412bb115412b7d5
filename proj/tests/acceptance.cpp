// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "defzero/charoracle.hpp"
#include "defzero/error.hpp"
#include "defzero/grpalg.hpp"
#include "defzero/report.hpp"
#include "defzero/symalg.hpp"

#ifndef DEFZERO_SOURCE_DIR
#define DEFZERO_SOURCE_DIR "."
#endif

namespace {

using namespace defzero;
using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Pinned tolerances. Arithmetic is exact, so every comparison is equality.
constexpr double kMaxTripleSeconds = 10.0;
constexpr double kMaxCorpusSeconds = 300.0;
constexpr std::size_t kMinCorpusTriples = 10;
constexpr std::size_t kMinFixtures = 5;
constexpr std::size_t kMinOracleGroups = 10;

struct Triple {
  std::string entry;
  std::string group;
  std::uint32_t p = 0;
  Json report;
  double seconds = 0;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

std::string source(const std::string& rel) { return std::string(DEFZERO_SOURCE_DIR) + "/" + rel; }

std::string label(const Triple& t) {
  return t.entry + " (p=" + std::to_string(t.p) + ", |Q|=" + std::to_string(t.report.value("q_order", 0)) + ")";
}

bool prop(const Triple& t, const char* name) { return t.report["properties"].value(name, false); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Runs one entry Q by Q so each triple gets its own time budget.
void run_entry(const std::string& name, const report::GroupSource& src, std::uint32_t p, const std::string& selector,
               std::vector<Triple>& out, Outcome& errors) {
  report::Options o;
  o.prime = p;
  o.q_selector = selector;
  try {
    for (const auto& q : report::resolve_q(src, p, selector)) {
      const auto t0 = Clock::now();
      auto r = report::verify_triple(src, q, o);
      out.push_back({name, src.name, p, Json::parse(r.json), seconds_since(t0)});
    }
  } catch (const Error& e) {
    errors.fail(name + ": " + std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

bool all_passed = true;

void print(int id, const char* title, const Outcome& o) {
  all_passed = all_passed && o.pass;
  std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, title);
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
}

const Triple* find(const std::vector<Triple>& ts, const std::string& entry, std::size_t q_order) {
  for (const auto& t : ts)
    if (t.entry == entry && t.report["q_order"] == q_order) return &t;
  return nullptr;
}

// Identity checks on a synthetic structure-constant fixture; returns a failure note or "".
std::string fixture_suite(const std::string& path) {
  using namespace symalg;
  const AlgebraFixture fx = load_algebra(path);
  if (!fx.ideal || !fx.mu) return "fixture lacks ideal or mu";
  const Algebra& a = fx.algebra;
  const SymmetrizingForm lambda(a, fx.lambda);
  const SymmetricQuotient sq(a, lambda, *fx.ideal, *fx.mu);
  const Algebra& aq = sq.quotient().algebra();
  for (std::size_t i = 0; i < aq.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (lambda(a.multiply(sq.nu_star(aq.basis(i)), a.basis(j))) !=
          sq.mu()(aq.multiply(aq.basis(i), sq.project(a.basis(j)))))
        return "adjointness";
  if (!(left_annihilator(a, left_ideal(a, sq.z())) == *fx.ideal)) return "I != Ann(z)";
  if (sq.nu_star_image(Subspace::whole(aq.field(), aq.dim())).dim() != aq.dim()) return "nu* not injective";
  const Subspace za = center(a);
  for (const Subspace& l : {z0(aq, sq.mu()), higman_ideal(aq, sq.mu()), center(aq)}) {
    const Subspace img = image_ideal_check(sq, l);
    if (!is_closed_under(a, img, za)) return "image not an ideal of Z(A)";
  }
  if (!(sq.nu_star_image(center(aq)) == za.intersect(left_ideal(a, sq.z())))) return "nu*(Z(A/I)) != Z(A) n Az";
  const Subspace h = higman_ideal(a, lambda);
  if (!z0(a, lambda).leq(h)) return "Z0 not in H";
  if (fx.radical && !h.leq(reynolds_ideal(a, lambda, *fx.radical))) return "H not in R";
  return "";
}

}  // namespace

int main() {
  const auto t_corpus = Clock::now();
  const auto entries = report::load_corpus(source("corpus/default.corpus"));
  std::vector<Triple> triples;
  Outcome load_errors;
  std::map<std::pair<std::string, std::uint32_t>, report::GroupSource> sources;
  for (const auto& e : entries) {
    try {
      report::GroupSource src = report::load_group(e.group);
      run_entry(e.name, src, e.prime, e.q_selector, triples, load_errors);
      sources.emplace(std::pair{e.group, e.prime}, std::move(src));
    } catch (const Error& err) {
      load_errors.fail(e.name + ": " + err.what());
    }
  }
  // Every corpus group also runs with Q = 1, and every p-group with Q = G.
  for (const auto& [key, src] : sources) {
    const std::string base = std::filesystem::path(key.first).filename().string();
    run_entry(base + "/trivial", src, key.second, "trivial", triples, load_errors);
    if (groups::is_p_power(src.group->order(), key.second))
      run_entry(base + "/whole", src, key.second, "whole", triples, load_errors);
  }
  const double corpus_seconds = seconds_since(t_corpus);

  // 1. dim W_Q equals the oracle count on every triple.
  {
    Outcome o = load_errors;
    if (triples.size() < kMinCorpusTriples) o.fail("only " + std::to_string(triples.size()) + " triples");
    double slowest = 0;
    for (const auto& t : triples) {
      slowest = std::max(slowest, t.seconds);
      if (t.report["dim_wq"] != t.report["oracle"]["defect_zero"] || !t.report.value("match", false))
        o.fail(label(t) + ": dim_wq " + t.report["dim_wq"].dump() + " vs oracle " + t.report["oracle"]["defect_zero"].dump());
      if (t.seconds > kMaxTripleSeconds) o.fail(label(t) + " took " + std::to_string(t.seconds) + " s");
    }
    if (corpus_seconds > kMaxCorpusSeconds) o.fail("corpus took " + std::to_string(corpus_seconds) + " s");
    const struct {
      const char* entry;
      std::size_t q_order;
      int expect;
    } pinned[] = {{"s4_p2", 4, 1}, {"a4_p2", 4, 3}, {"sl23_p2", 8, 3}, {"s3_p3", 3, 2}};
    for (const auto& pin : pinned) {
      const Triple* t = find(triples, pin.entry, pin.q_order);
      if (!t) {
        o.fail(std::string("missing triple ") + pin.entry);
      } else if (t->report["dim_wq"] != pin.expect) {
        o.fail(label(*t) + ": expected " + std::to_string(pin.expect));
      }
    }
    for (const auto& [entry, q_order] : {std::pair{"d8_center", 2}, {"d8_rotations", 4}, {"d8_whole", 8}})
      if (!find(triples, entry, q_order)) o.fail(std::string("missing triple ") + entry);
    o.notes.push_back(std::to_string(triples.size()) + " triples, slowest " + std::to_string(slowest) + " s, total " +
                      std::to_string(corpus_seconds) + " s");
    print(1, "dim W_Q equals the defect-zero block count of G/Q on the corpus", o);
  }

  // 2. Subspace and element identities of the descent.
  {
    Outcome o;
    for (const auto& t : triples) {
      const Json& id = t.report["identities"];
      if (!id.value("representative_projection", false)) o.fail(label(t) + ": nu(T+) != (G/Q)_p+");
      if (!id.value("coset_product", false)) o.fail(label(t) + ": Q+ T+ != G_p+");
      if (!id.value("subspace_equality", false)) o.fail(label(t) + ": nu*(Z0(F[G/Q])) != W_Q");
      if (id["dim_quotient_z0"] != t.report["dim_wq"]) o.fail(label(t) + ": dimension mismatch");
    }
    print(2, "nu*(Z0(F[G/Q])) = W_Q(FG) with nu(T+) = (G/Q)_p+ and Q+ T+ = G_p+", o);
  }

  // 3. Symmetric quotient identities on corpus quotients and synthetic fixtures.
  {
    Outcome o;
    for (const auto& t : triples)
      for (const char* name : {"descent_identities", "nu_star_injective", "image_ideal_closure", "center_image",
                               "inclusion_chain"})
        if (!prop(t, name)) o.fail(label(t) + ": " + name);
    std::vector<std::string> fixtures;
    for (const auto& e : std::filesystem::directory_iterator(source("tests/fixtures")))
      if (e.path().extension() == ".sca") fixtures.push_back(e.path().string());
    std::sort(fixtures.begin(), fixtures.end());
    if (fixtures.size() < kMinFixtures) o.fail("only " + std::to_string(fixtures.size()) + " fixtures");
    for (const auto& f : fixtures) {
      std::string why;
      try {
        why = fixture_suite(f);
      } catch (const Error& e) {
        why = std::string(error_code_name(e.code())) + ": " + e.what();
      }
      if (!why.empty()) o.fail(std::filesystem::path(f).filename().string() + ": " + why);
    }
    o.notes.push_back(std::to_string(fixtures.size()) + " fixtures");
    print(3, "adjointness, I = Ann(z), injectivity, ideal images and Z0 <= H <= R", o);
  }

  // 4. Trace generator properties, exhaustively over g.
  {
    Outcome o;
    for (const auto& t : triples)
      for (const char* name : {"vanishing_criterion", "sylow_intersection", "p_prime_reduction", "spanning_set",
                               "wq_in_defect_class_sums"})
        if (!prop(t, name)) o.fail(label(t) + ": " + name);
    print(4, "vanishing, Sylow intersection, p'-reduction, restricted spanning set, W_Q <= (FG)_Q^G", o);
  }

  // 5. Oracle self-consistency, including dim Z0(F_p H) on at least ten groups.
  {
    Outcome o;
    std::set<std::string> groups_checked;
    for (const auto& t : triples) {
      if (!prop(t, "oracle_degree_sums")) o.fail(label(t) + ": degree squares or class count");
      if (!prop(t, "oracle_self")) o.fail(label(t) + ": oracle on G differs from dim Z0(FG)");
      groups_checked.insert(t.group + "/" + std::to_string(t.p));
    }
    std::set<std::string> distinct_groups;
    for (const auto& t : triples) distinct_groups.insert(t.group);
    if (distinct_groups.size() < kMinOracleGroups)
      o.fail("oracle compared on only " + std::to_string(distinct_groups.size()) + " groups");
    o.notes.push_back(std::to_string(distinct_groups.size()) + " groups, " + std::to_string(groups_checked.size()) +
                      " (group, p) pairs");
    print(5, "sum of squared degrees, class count and defect_zero_count = dim Z0", o);
  }

  // 6. Higman ideal two ways and z recovered from the quotient form.
  {
    Outcome o;
    for (const auto& t : triples)
      for (const char* name : {"higman_classes_vs_trace", "higman_generic_vs_trace", "z_recovered"})
        if (!prop(t, name)) o.fail(label(t) + ": " + name);
    print(6, "Higman ideal by trace, class sums and dual bases; z = Q+ from solve_z", o);
  }

  // 7. Field invariance over a splitting extension.
  {
    Outcome o;
    std::size_t nontrivial = 0;
    for (const auto& t : triples) {
      if (!prop(t, "field_invariance")) o.fail(label(t) + ": dim W_Q changes over the extension");
      if (t.report["extension"]["degree"] > 1 && t.report["q_order"] > 1 && t.report["dim_wq"] > 0) ++nontrivial;
    }
    if (nontrivial == 0) o.fail("no nontrivial triple with splitting degree > 1");
    const Triple* a4 = find(triples, "a4_p2", 4);
    if (!a4 || a4->report["extension"]["degree"] != 2 || a4->report["extension"]["dim_wq"] != 3)
      o.fail("A4, p=2, Q=V4 over GF(4) should give dim W_Q = 3");
    o.notes.push_back(std::to_string(nontrivial) + " nontrivial triples over a proper extension");
    print(7, "dim W_Q is the same over GF(p) and GF(p^m)", o);
  }

  return all_passed ? 0 : 1;
}
