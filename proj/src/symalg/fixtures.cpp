#include <fstream>
#include <sstream>

#include "defzero/error.hpp"
#include "defzero/symalg.hpp"

namespace defzero::symalg {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::uint64_t> read_numbers(std::istringstream& in, std::size_t line) {
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-') parse_error(line, "expected a non-negative integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

AlgebraFixture parse_algebra(std::istream& in, std::string name) {
  std::optional<std::size_t> dim;
  std::optional<Field> field;
  std::optional<Vector> unit, lambda, mu;
  std::optional<std::vector<Vector>> radical, ideal;
  struct Constant {
    std::size_t line;
    std::uint64_t i, j, k, c;
  };
  std::vector<Constant> constants;

  auto to_vector = [&](const std::vector<std::uint64_t>& nums, std::size_t line, const char* what) {
    if (!dim || !field) parse_error(line, std::string(what) + " before dim and field");
    if (nums.size() != *dim) parse_error(line, std::string(what) + " needs " + std::to_string(*dim) + " entries");
    Vector v(*dim);
    for (std::size_t t = 0; t < nums.size(); ++t) {
      if (nums[t] >= field->size()) parse_error(line, "field element code out of range");
      v[t] = static_cast<Scalar>(nums[t]);
    }
    return v;
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "dim") {
      const auto nums = read_numbers(ls, line);
      if (nums.size() != 1 || nums[0] == 0) parse_error(line, "dim needs one positive integer");
      dim = nums[0];
    } else if (head == "field") {
      const auto nums = read_numbers(ls, line);
      if (nums.size() < 2) parse_error(line, "field needs p and m");
      try {
        if (nums.size() == 2) {
          field = Field::extension(static_cast<std::uint32_t>(nums[0]), static_cast<unsigned>(nums[1]));
        } else {
          if (nums.size() != nums[1] + 3) parse_error(line, "modulus needs m + 1 coefficients");
          std::vector<std::uint32_t> modulus(nums.begin() + 2, nums.end());
          field = Field::with_modulus(static_cast<std::uint32_t>(nums[0]), std::move(modulus));
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        parse_error(line, e.what());
      }
    } else if (head == "unit") {
      unit = to_vector(read_numbers(ls, line), line, "unit");
    } else if (head == "lambda") {
      lambda = to_vector(read_numbers(ls, line), line, "lambda");
    } else if (head == "mu") {
      mu = to_vector(read_numbers(ls, line), line, "mu");
    } else if (head == "radical" || head == "ideal") {
      auto& target = head == "radical" ? radical : ideal;
      if (!target) target.emplace();
      const auto nums = read_numbers(ls, line);
      if (!nums.empty()) target->push_back(to_vector(nums, line, head.c_str()));
    } else {
      std::istringstream all(raw);
      const auto nums = read_numbers(all, line);
      if (nums.size() != 4) parse_error(line, "structure constant needs i j k coeff");
      constants.push_back({line, nums[0], nums[1], nums[2], nums[3]});
    }
  }
  if (!dim) throw Error(ErrorCode::Parse, "missing dim");
  if (!field) throw Error(ErrorCode::Parse, "missing field");
  if (!unit) throw Error(ErrorCode::Parse, "missing unit");
  if (!lambda) throw Error(ErrorCode::Parse, "missing lambda");

  MultiplicationTable table(*field, *dim);
  for (const auto& c : constants) {
    if (c.i >= *dim || c.j >= *dim || c.k >= *dim) parse_error(c.line, "basis index out of range");
    if (c.c >= field->size()) parse_error(c.line, "field element code out of range");
    table.accumulate(c.i, c.j, c.k, static_cast<Scalar>(c.c));
  }
  AlgebraFixture out{std::move(name), Algebra(std::move(table), *unit), *lambda, std::nullopt, std::nullopt, mu};
  if (radical) out.radical = Subspace::span(*field, *dim, *radical);
  if (ideal) out.ideal = Subspace::span(*field, *dim, *ideal);
  return out;
}

AlgebraFixture load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  auto stem = path.substr(path.find_last_of('/') + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.erase(dot);
  return parse_algebra(in, stem);
}

void write_algebra(std::ostream& out, const Algebra& a, const Vector& lambda) {
  const Field& f = a.field();
  out << "dim " << a.dim() << "\nfield " << f.characteristic() << ' ' << f.degree();
  if (f.degree() > 1) {
    for (auto c : f.modulus()) out << ' ' << c;
  }
  auto line = [&](const char* head, const Vector& v) {
    out << head;
    for (auto c : v) out << ' ' << c;
    out << '\n';
  };
  out << '\n';
  line("unit", a.unit());
  line("lambda", lambda);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& e : a.table().product(i, j)) out << i << ' ' << j << ' ' << e.index << ' ' << e.coeff << '\n';
    }
  }
}

}  // namespace defzero::symalg
