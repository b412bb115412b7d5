#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "defzero/error.hpp"
#include "defzero/permgroup.hpp"

namespace defzero::groups {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  s = strip(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "expected a number for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<Perm> cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  std::vector<std::uint32_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % n);
  return {Perm(std::move(im))};
}

std::vector<Perm> dihedral(std::size_t order) {
  if (order < 6 || order % 2 != 0) throw Error(ErrorCode::InvalidArgument, "dihedral order must be even and at least 6");
  const std::size_t k = order / 2;
  std::vector<std::uint32_t> rot(k), ref(k);
  for (std::size_t i = 0; i < k; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % k);
    ref[i] = static_cast<std::uint32_t>((k - i) % k);
  }
  return {Perm(std::move(rot)), Perm(std::move(ref))};
}

std::vector<Perm> symmetric(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "symmetric group degree must be positive");
  if (n == 1) return {Perm::identity(1)};
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<std::uint32_t> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>(i);
    gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return gens;
}

std::vector<Perm> alternating(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "alternating group degree must be positive");
  if (n < 3) return {Perm::identity(n)};
  std::vector<Perm> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(Perm::from_cycles(n, {{0, 1, k}}));
  return gens;
}

// Regular representation of <a, x | a^{2k}, x^2 = a^k, x a x^{-1} = a^{-1}>,
// element a^i x^j stored at point i + 2k j.
std::vector<Perm> dicyclic(std::size_t order) {
  if (order < 8 || order % 4 != 0) throw Error(ErrorCode::InvalidArgument, "dicyclic order must be a multiple of 4, at least 8");
  const std::size_t k = order / 4;
  const std::size_t n = 2 * k;
  std::vector<std::uint32_t> left_a(order), left_x(order);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t pt = i + n * j;
      left_a[pt] = static_cast<std::uint32_t>((i + 1) % n + n * j);
      const std::size_t neg = (n - i) % n;
      left_x[pt] = static_cast<std::uint32_t>(j == 0 ? neg + n : (neg + k) % n);
    }
  }
  return {Perm(std::move(left_a)), Perm(std::move(left_x))};
}

// SL(2,3) acting on the eight nonzero vectors of GF(3)^2.
std::vector<Perm> sl23() {
  std::vector<std::pair<int, int>> points;
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      if (u || v) points.emplace_back(u, v);
    }
  }
  auto index = [&](int u, int v) {
    u = ((u % 3) + 3) % 3;
    v = ((v % 3) + 3) % 3;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i] == std::pair{u, v}) return static_cast<std::uint32_t>(i);
    }
    throw Error(ErrorCode::InvalidArgument, "sl23: bad point");
  };
  auto matrix_perm = [&](int a, int b, int c, int d) {
    std::vector<std::uint32_t> im(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto [u, v] = points[i];
      im[i] = index(a * u + b * v, c * u + d * v);
    }
    return Perm(std::move(im));
  };
  return {matrix_perm(1, 1, 0, 1), matrix_perm(0, -1, 1, 0)};
}

std::vector<Perm> direct_product(const std::vector<Perm>& a, const std::vector<Perm>& b) {
  const std::size_t da = a.front().degree();
  const std::size_t db = b.front().degree();
  std::vector<Perm> out;
  for (const auto& s : a) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = s(static_cast<std::uint32_t>(i));
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<std::uint32_t>(da + i);
    out.emplace_back(std::move(im));
  }
  for (const auto& s : b) {
    std::vector<std::uint32_t> im(da + db);
    for (std::size_t i = 0; i < da; ++i) im[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<std::uint32_t>(da + s(static_cast<std::uint32_t>(i)));
    out.emplace_back(std::move(im));
  }
  return out;
}

std::vector<Perm> single_builtin(std::string_view spec) {
  spec = strip(spec);
  const auto space = spec.find_first_of(" \t");
  const std::string_view name = spec.substr(0, space);
  const std::string_view arg = space == std::string_view::npos ? std::string_view{} : strip(spec.substr(space));
  if (name == "sl23" && arg.empty()) return sl23();
  if (arg.empty()) throw Error(ErrorCode::Parse, "builtin '" + std::string(name) + "' needs a size argument");
  const std::size_t n = parse_size(arg, name);
  if (name == "cyclic") return cyclic(n);
  if (name == "dihedral") return dihedral(n);
  if (name == "symmetric") return symmetric(n);
  if (name == "alternating") return alternating(n);
  if (name == "dicyclic") return dicyclic(n);
  if (name == "quaternion") {
    if (!is_p_power(n, 2)) throw Error(ErrorCode::InvalidArgument, "quaternion order must be a power of 2");
    return dicyclic(n);
  }
  throw Error(ErrorCode::Parse, "unknown builtin group '" + std::string(name) + "'");
}

}  // namespace

std::vector<Perm> builtin_generators(std::string_view spec) {
  std::vector<Perm> gens;
  bool first = true;
  while (true) {
    const auto pos = spec.find(" x ");
    const std::string_view factor = spec.substr(0, pos);
    auto next = single_builtin(factor);
    gens = first ? std::move(next) : direct_product(gens, next);
    first = false;
    if (pos == std::string_view::npos) break;
    spec.remove_prefix(pos + 3);
  }
  return gens;
}

Group builtin_group(std::string_view spec, std::size_t max_order) {
  const auto gens = builtin_generators(spec);
  return Group::from_generators(gens, max_order);
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  text = strip(text);
  while (!text.empty()) {
    if (text.front() != '(') throw Error(ErrorCode::Parse, "expected '(' in cycle notation");
    const auto close = text.find(')');
    if (close == std::string_view::npos) throw Error(ErrorCode::Parse, "unterminated cycle");
    std::istringstream body{std::string(text.substr(1, close - 1))};
    std::vector<std::uint32_t> cycle;
    std::string tok;
    while (body >> tok) {
      const std::size_t pt = parse_size(tok, "cycle point");
      if (pt == 0 || pt > degree) throw Error(ErrorCode::Parse, "cycle point " + tok + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<std::uint32_t>(pt - 1));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    text = strip(text.substr(close + 1));
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

GroupFile parse_group_file(std::istream& in) {
  GroupFile out;
  std::string line;
  std::size_t lineno = 0;
  bool in_subgroup = false;
  auto fail = [&](const std::string& msg) { throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = strip(view);
    if (view.empty()) continue;
    const auto space = view.find_first_of(" \t");
    const std::string_view key = view.substr(0, space);
    const std::string_view rest = space == std::string_view::npos ? std::string_view{} : strip(view.substr(space));
    try {
      if (key == "degree") {
        if (out.degree != 0) fail("duplicate degree line");
        out.degree = parse_size(rest, "degree");
        if (out.degree == 0) fail("degree must be positive");
      } else if (key == "gen") {
        if (out.degree == 0) fail("gen before degree");
        auto p = parse_cycles(rest, out.degree);
        (in_subgroup ? out.subgroup_generators : out.generators).push_back(std::move(p));
      } else if (key == "subgroup") {
        if (in_subgroup) fail("duplicate subgroup section");
        in_subgroup = true;
        out.has_subgroup = true;
      } else {
        fail("unknown directive '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      fail(e.what());
    }
  }
  if (out.degree == 0) throw Error(ErrorCode::Parse, "missing degree line");
  if (out.generators.empty()) out.generators.push_back(Perm::identity(out.degree));
  if (out.has_subgroup && out.subgroup_generators.empty()) out.subgroup_generators.push_back(Perm::identity(out.degree));
  return out;
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open group file '" + path + "'");
  try {
    return parse_group_file(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace defzero::groups
