#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "defzero/error.hpp"
#include "defzero/permgroup.hpp"

namespace defzero::groups {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidArgument, "permutation images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto a = cycle[i];
      if (a >= degree) throw Error(ErrorCode::InvalidArgument, "cycle point " + std::to_string(a + 1) + " exceeds degree");
      if (used[a]) throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(a + 1) + " repeated in cycles");
      used[a] = 1;
      im[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw Error(ErrorCode::InvalidArgument, "permutation degree mismatch");
  Perm out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<char> seen(degree(), 0);
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------

Group Group::from_generators(std::span<const Perm> generators, std::size_t max_order) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "a group needs at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& s : generators) {
    if (s.degree() != degree) throw Error(ErrorCode::InvalidArgument, "generators have different degrees");
  }

  // Orbit closure of the identity under left multiplication by generators.
  std::unordered_map<Perm, std::size_t, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(degree)};
  seen.emplace(elements.front(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : generators) {
      Perm y = s * elements[i];
      if (seen.contains(y)) continue;
      if (elements.size() >= max_order) {
        throw Error(ErrorCode::DeskScaleExceeded,
                    "group order exceeds the configured bound of " + std::to_string(max_order));
      }
      seen.emplace(y, elements.size());
      elements.push_back(std::move(y));
    }
  }
  std::sort(elements.begin(), elements.end());

  std::unordered_map<Perm, ElemId, PermHash> index;
  index.reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<ElemId>(i));

  Group g;
  g.order_ = elements.size();
  g.table_.resize(g.order_ * g.order_);
  for (std::size_t a = 0; a < g.order_; ++a) {
    for (std::size_t b = 0; b < g.order_; ++b) {
      g.table_[a * g.order_ + b] = index.at(elements[a] * elements[b]);
    }
  }
  std::set<ElemId> gens;
  for (const auto& s : generators) {
    const ElemId id = index.at(s);
    if (id != 0) gens.insert(id);
  }
  g.generators_.assign(gens.begin(), gens.end());
  g.perms_ = std::move(elements);
  g.finish();
  return g;
}

Group Group::from_table(std::size_t order, std::vector<ElemId> table) {
  if (order == 0 || table.size() != order * order) throw Error(ErrorCode::InvalidArgument, "Cayley table has wrong size");
  for (std::size_t x = 0; x < order; ++x) {
    if (table[x] != x || table[x * order] != x) throw Error(ErrorCode::InvalidArgument, "element 0 is not the identity");
  }
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<char> hit(order, 0);
    for (std::size_t b = 0; b < order; ++b) {
      const auto c = table[a * order + b];
      if (c >= order || hit[c]) throw Error(ErrorCode::InvalidArgument, "Cayley table row is not a permutation");
      hit[c] = 1;
    }
  }
  Group g;
  g.order_ = order;
  g.table_ = std::move(table);
  // Greedy generating set in index order.
  std::vector<ElemId> members{0};
  std::vector<char> in(order, 0);
  in[0] = 1;
  for (ElemId x = 1; x < order; ++x) {
    if (in[x]) continue;
    g.generators_.push_back(x);
    // Right-multiplication closure from the current members.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto s : g.generators_) {
        const ElemId y = g.table_[std::size_t{members[i]} * order + s];
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  g.finish();
  return g;
}

void Group::finish() {
  inverse_.assign(order_, 0);
  for (ElemId a = 0; a < order_; ++a) {
    for (ElemId b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  orders_.assign(order_, 1);
  exponent_ = 1;
  for (ElemId a = 0; a < order_; ++a) {
    std::uint64_t k = 1;
    for (ElemId x = a; x != 0; x = mul(x, a)) ++k;
    orders_[a] = a == 0 ? 1 : k;
    exponent_ = std::lcm(exponent_, orders_[a]);
  }
  classes_ = conjugacy_classes(*this);
}

ElemId Group::pow(ElemId g, std::uint64_t e) const {
  e %= orders_[g];
  ElemId result = 0;
  ElemId base = g;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<ElemId> Group::find(const Perm& p) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || *it != p) return std::nullopt;
  return static_cast<ElemId>(it - perms_.begin());
}

std::string Group::label(ElemId g) const {
  if (is_permutation_group()) return perms_.at(g).cycle_string();
  return "g" + std::to_string(g);
}

ClassData conjugacy_classes(const Group& g) {
  ClassData data;
  const std::size_t n = g.order();
  data.class_of.assign(n, UINT32_MAX);
  // Generators of a table-only group might be empty for the trivial group.
  std::vector<ElemId> gens = g.generators();
  for (ElemId x = 0; x < n; ++x) {
    if (data.class_of[x] != UINT32_MAX) continue;
    const auto idx = static_cast<std::uint32_t>(data.classes.size());
    std::vector<ElemId> cls{x};
    data.class_of[x] = idx;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (auto s : gens) {
        const ElemId y = g.conj(s, cls[i]);
        if (data.class_of[y] == UINT32_MAX) {
          data.class_of[y] = idx;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    data.representatives.push_back(cls.front());
    data.centralizer_orders.push_back(n / cls.size());
    data.classes.push_back(std::move(cls));
  }
  return data;
}

}  // namespace defzero::groups
