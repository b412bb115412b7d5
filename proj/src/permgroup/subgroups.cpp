#include <algorithm>
#include <numeric>
#include <set>

#include "defzero/error.hpp"
#include "defzero/permgroup.hpp"

namespace defzero::groups {

Subgroup::Subgroup(std::size_t parent_order, std::vector<ElemId> members)
    : members_(std::move(members)), mask_(parent_order, 0) {
  std::sort(members_.begin(), members_.end());
  for (auto x : members_) mask_[x] = 1;
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(g.order(), {0}); }

Subgroup Subgroup::whole(const Group& g) {
  std::vector<ElemId> all(g.order());
  std::iota(all.begin(), all.end(), ElemId{0});
  return Subgroup(g.order(), std::move(all));
}

Subgroup Subgroup::generated_by(const Group& g, std::span<const ElemId> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElemId> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : generators) {
      if (s >= g.order()) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
      const ElemId y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g.order(), std::move(members));
}

Subgroup Subgroup::from_members(const Group& g, std::vector<ElemId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw Error(ErrorCode::InvalidArgument, "subgroup must contain the identity");
  if (members.back() >= g.order()) throw Error(ErrorCode::InvalidArgument, "subgroup member out of range");
  Subgroup h(g.order(), std::move(members));
  for (auto a : h.members_) {
    if (!h.contains(g.inv(a))) throw Error(ErrorCode::InvalidArgument, "member set not closed under inverses");
    for (auto b : h.members_) {
      if (!h.contains(g.mul(a, b))) throw Error(ErrorCode::InvalidArgument, "member set not closed under multiplication");
    }
  }
  return h;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return n >= 1 && p_part(n, p) == n; }

Subgroup centralizer(const Group& g, ElemId x) { return centralizer(g, Subgroup::whole(g), x); }

Subgroup centralizer(const Group& g, const Subgroup& h, ElemId x) {
  std::vector<ElemId> out;
  for (auto y : h.members()) {
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  }
  return Subgroup::from_members(g, std::move(out));
}

Subgroup center(const Group& g) {
  std::vector<ElemId> out;
  for (std::size_t c = 0; c < g.classes().count(); ++c) {
    if (g.classes().classes[c].size() == 1) out.push_back(g.classes().representatives[c]);
  }
  return Subgroup::from_members(g, std::move(out));
}

Subgroup conjugate(const Group& g, const Subgroup& h, ElemId x) {
  std::vector<ElemId> out;
  out.reserve(h.order());
  for (auto y : h.members()) out.push_back(g.conj(x, y));
  return Subgroup::from_members(g, std::move(out));
}

Subgroup normalizer(const Group& g, const Subgroup& within, const Subgroup& h) {
  std::vector<ElemId> out;
  for (auto x : within.members()) {
    const bool fixes = std::all_of(h.members().begin(), h.members().end(),
                                   [&](ElemId y) { return h.contains(g.conj(x, y)); });
    if (fixes) out.push_back(x);
  }
  return Subgroup::from_members(g, std::move(out));
}

Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<ElemId> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup::from_members(g, std::move(out));
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (auto s : g.generators()) {
    for (auto y : h.members()) {
      if (!h.contains(g.conj(s, y))) return false;
    }
  }
  return true;
}

Subgroup sylow_subgroup(const Group& g, std::uint32_t p) { return sylow_subgroup(g, Subgroup::whole(g), p); }

Subgroup sylow_subgroup(const Group& g, const Subgroup& within, std::uint32_t p) {
  const std::uint64_t target = p_part(within.order(), p);
  if (target == 1) return Subgroup::trivial(g);

  std::vector<ElemId> p_elements;
  ElemId best = 0;
  for (auto x : within.members()) {
    if (!is_p_power(g.element_order(x), p)) continue;
    p_elements.push_back(x);
    if (g.element_order(x) > g.element_order(best)) best = x;
  }

  // Climb: a p-subgroup that is not Sylow is properly contained in its
  // normalizer's p-part, so some p-element outside it normalizes it.
  std::vector<ElemId> gens{best};
  Subgroup current = Subgroup::generated_by(g, gens);
  while (current.order() < target) {
    bool extended = false;
    for (auto x : p_elements) {
      if (current.contains(x)) continue;
      const bool normalizes = std::all_of(current.members().begin(), current.members().end(),
                                          [&](ElemId y) { return current.contains(g.conj(x, y)); });
      if (!normalizes) continue;
      gens.push_back(x);
      current = Subgroup::generated_by(g, gens);
      extended = true;
      break;
    }
    if (!extended) throw Error(ErrorCode::VerificationFailed, "Sylow climb stalled");  // impossible by Sylow theory
  }
  return current;
}

std::vector<Subgroup> all_sylow_subgroups(const Group& g, std::uint32_t p) {
  const Subgroup base = sylow_subgroup(g, p);
  std::set<Subgroup> found;
  for (ElemId x = 0; x < g.order(); ++x) found.insert(conjugate(g, base, x));
  return {found.begin(), found.end()};
}

Subgroup largest_normal_p_subgroup(const Group& g, std::uint32_t p) {
  const auto sylows = all_sylow_subgroups(g, p);
  Subgroup out = sylows.front();
  for (const auto& s : sylows) out = intersect(g, out, s);
  return out;
}

std::vector<Subgroup> normal_p_subgroups(const Group& g, std::uint32_t p, std::size_t max_search_order) {
  const Subgroup op = largest_normal_p_subgroup(g, p);
  if (op.order() > max_search_order) {
    throw Error(ErrorCode::DeskScaleExceeded, "O_p(G) has order " + std::to_string(op.order()) +
                                                  ", above the normal-subgroup search bound " +
                                                  std::to_string(max_search_order));
  }
  const auto& cd = g.classes();
  // Every normal subgroup inside O_p(G) is a union of classes, so it is reached
  // by repeatedly joining one more class.
  std::vector<std::size_t> candidate_classes;
  for (std::size_t c = 0; c < cd.count(); ++c) {
    if (cd.representatives[c] != 0 && op.contains(cd.representatives[c])) candidate_classes.push_back(c);
  }
  std::set<Subgroup> found{Subgroup::trivial(g)};
  std::vector<Subgroup> queue{Subgroup::trivial(g)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Subgroup n = queue[i];
    for (auto c : candidate_classes) {
      if (n.contains(cd.representatives[c])) continue;
      std::vector<ElemId> gens = n.members();
      gens.insert(gens.end(), cd.classes[c].begin(), cd.classes[c].end());
      Subgroup joined = Subgroup::generated_by(g, gens);
      if (found.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  return {found.begin(), found.end()};
}

PFactors p_factorization(const Group& g, ElemId x, std::uint32_t p) {
  const std::uint64_t n = g.element_order(x);
  const std::uint64_t pa = p_part(n, p);
  const std::uint64_t m = n / pa;
  if (pa == 1) return {0, x};
  if (m == 1) return {x, 0};
  // m * m' = 1 mod p^a
  std::uint64_t inv = 1;
  while ((m * inv) % pa != 1) ++inv;
  const ElemId xp = g.pow(x, m * inv);
  return {xp, g.mul(x, g.inv(xp))};
}

Subgroup class_defect_group(const Group& g, std::uint32_t p, std::size_t class_index) {
  const auto& cd = g.classes();
  if (class_index >= cd.count()) throw Error(ErrorCode::InvalidArgument, "class index out of range");
  return sylow_subgroup(g, centralizer(g, cd.representatives[class_index]), p);
}

QuotientGroup quotient(const Group& g, const Subgroup& q) {
  if (!is_normal(g, q)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  QuotientGroup out;
  out.projection.assign(g.order(), UINT32_MAX);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (out.projection[x] != UINT32_MAX) continue;
    const auto coset = static_cast<ElemId>(out.representatives.size());
    out.representatives.push_back(x);
    for (auto u : q.members()) out.projection[g.mul(x, u)] = coset;
  }
  const std::size_t k = out.representatives.size();
  std::vector<ElemId> table(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      table[a * k + b] = out.projection[g.mul(out.representatives[a], out.representatives[b])];
    }
  }
  out.group = std::make_shared<const Group>(Group::from_table(k, std::move(table)));
  return out;
}

}  // namespace defzero::groups
