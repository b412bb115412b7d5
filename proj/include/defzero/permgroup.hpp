#pragma once

// Finite groups at desk scale: permutation groups enumerated into a Cayley
// table, plus subgroup machinery (centralizers, Sylow subgroups, normal
// p-subgroups, quotients).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace defzero::groups {

/// Index of a group element in the deterministic element order. Index 0 is
/// always the identity.
using ElemId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 4000;
inline constexpr std::size_t kMaxNormalSearchOrder = 256;

class Perm {
 public:
  Perm() = default;
  /// Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);
  /// Cycles use 0-based points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  /// (a * b)(i) = a(b(i)).
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  /// 1-based disjoint cycle notation; "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

struct ClassData {
  /// Classes ordered by smallest member; members sorted.
  std::vector<std::vector<ElemId>> classes;
  std::vector<ElemId> representatives;
  std::vector<std::size_t> centralizer_orders;
  std::vector<std::uint32_t> class_of;

  std::size_t count() const noexcept { return classes.size(); }
};

/// A finite group stored as a Cayley table over element indices.
class Group {
 public:
  /// Closure of permutation generators. Elements are sorted lexicographically
  /// by image sequence, so the identity comes first.
  static Group from_generators(std::span<const Perm> generators, std::size_t max_order = kDefaultMaxOrder);
  /// table[a * order + b] = a * b. Element 0 must be the identity.
  static Group from_table(std::size_t order, std::vector<ElemId> table);

  std::size_t order() const noexcept { return order_; }
  ElemId identity() const noexcept { return 0; }
  ElemId mul(ElemId a, ElemId b) const { return table_[std::size_t{a} * order_ + b]; }
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// x g x^{-1}
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(x, g), inverse_[x]); }
  ElemId pow(ElemId g, std::uint64_t e) const;
  std::uint64_t element_order(ElemId g) const { return orders_[g]; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  const std::vector<ElemId>& generators() const noexcept { return generators_; }
  const ClassData& classes() const noexcept { return classes_; }

  bool is_permutation_group() const noexcept { return !perms_.empty(); }
  std::size_t degree() const noexcept { return perms_.empty() ? 0 : perms_.front().degree(); }
  const Perm& perm(ElemId g) const { return perms_.at(g); }
  std::optional<ElemId> find(const Perm& p) const;
  /// Cycle notation for permutation groups, "g<index>" otherwise.
  std::string label(ElemId g) const;

 private:
  Group() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<ElemId> table_;
  std::vector<ElemId> inverse_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  std::vector<ElemId> generators_;
  std::vector<Perm> perms_;
  ClassData classes_;
};

/// A subgroup as a sorted member list of a parent group.
class Subgroup {
 public:
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);
  static Subgroup generated_by(const Group& g, std::span<const ElemId> generators);
  /// Throws InvalidArgument if the set is not a subgroup.
  static Subgroup from_members(const Group& g, std::vector<ElemId> members);

  std::size_t order() const noexcept { return members_.size(); }
  bool contains(ElemId x) const { return x < mask_.size() && mask_[x] != 0; }
  const std::vector<ElemId>& members() const noexcept { return members_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
    return a.members_ <=> b.members_;
  }

 private:
  Subgroup(std::size_t parent_order, std::vector<ElemId> members);
  std::vector<ElemId> members_;
  std::vector<char> mask_;
};

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_power(std::uint64_t n, std::uint64_t p);

ClassData conjugacy_classes(const Group& g);
Subgroup centralizer(const Group& g, ElemId x);
/// C_H(x) for a subgroup H.
Subgroup centralizer(const Group& g, const Subgroup& h, ElemId x);
Subgroup center(const Group& g);
Subgroup normalizer(const Group& g, const Subgroup& within, const Subgroup& h);
/// x H x^{-1}
Subgroup conjugate(const Group& g, const Subgroup& h, ElemId x);
Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);
bool is_normal(const Group& g, const Subgroup& h);

/// A Sylow p-subgroup of the whole group, or of a subgroup H.
Subgroup sylow_subgroup(const Group& g, std::uint32_t p);
Subgroup sylow_subgroup(const Group& g, const Subgroup& within, std::uint32_t p);
/// All Sylow p-subgroups, sorted.
std::vector<Subgroup> all_sylow_subgroups(const Group& g, std::uint32_t p);
/// O_p(G), the intersection of all Sylow p-subgroups.
Subgroup largest_normal_p_subgroup(const Group& g, std::uint32_t p);
/// All normal subgroups of G contained in O_p(G), sorted by order.
std::vector<Subgroup> normal_p_subgroups(const Group& g, std::uint32_t p,
                                         std::size_t max_search_order = kMaxNormalSearchOrder);

struct PFactors {
  ElemId p_part;
  ElemId p_prime_part;
};
PFactors p_factorization(const Group& g, ElemId x, std::uint32_t p);

/// Defect group of a conjugacy class: a Sylow p-subgroup of the centralizer
/// of its representative.
Subgroup class_defect_group(const Group& g, std::uint32_t p, std::size_t class_index);

struct QuotientGroup {
  std::shared_ptr<const Group> group;
  /// Element of G -> coset index (an element of the quotient).
  std::vector<ElemId> projection;
  /// Coset index -> smallest element of G in the coset.
  std::vector<ElemId> representatives;
};

/// G/Q. Throws NotNormal unless Q is normal.
QuotientGroup quotient(const Group& g, const Subgroup& q);

// --- construction -----------------------------------------------------------

/// Builtin constructors: "cyclic n", "dihedral n" (order n), "symmetric n",
/// "alternating n", "dicyclic n", "quaternion n", "sl23", and "A x B" products.
std::vector<Perm> builtin_generators(std::string_view spec);
Group builtin_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

struct GroupFile {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  bool has_subgroup = false;
  std::vector<Perm> subgroup_generators;
};

/// Line-based group file: "degree N", "gen (1 2 3)(4 5)" lines with 1-based
/// points, "#" comments, and an optional "subgroup" section of gen lines.
GroupFile parse_group_file(std::istream& in);
GroupFile load_group_file(const std::string& path);
/// Parses "(1 2 3)(4 5)" into a permutation of the given degree.
Perm parse_cycles(std::string_view text, std::size_t degree);

}  // namespace defzero::groups
