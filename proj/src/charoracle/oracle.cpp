#include <algorithm>
#include <numeric>
#include <random>

#include "defzero/charoracle.hpp"
#include "defzero/error.hpp"

namespace defzero::charoracle {

namespace {

constexpr int kRetryBudget = 64;

// Arithmetic in GF(l). l stays below 2^32 at desk scale, so products fit.
struct Mod {
  std::uint64_t l;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % l; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + l - b) % l; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % l; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= l;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % l == 0) throw Error(ErrorCode::VerificationFailed, "inverse of zero mod " + std::to_string(l));
    return pow(a, l - 2);
  }
};

using Mat = std::vector<std::vector<std::uint64_t>>;

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Null space basis of an r x c matrix over GF(l).
std::vector<std::vector<std::uint64_t>> null_space(const Mod& f, Mat m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const std::uint64_t s = f.inv(m[row][c]);
    for (auto& v : m[row]) v = f.mul(v, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::uint64_t t = m[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] = f.sub(m[r][cc], f.mul(t, m[row][cc]));
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (low to high, monic) by Faddeev-LeVerrier; needs l > d.
std::vector<std::uint64_t> char_poly(const Mod& f, const Mat& a) {
  const std::size_t d = a.size();
  std::vector<std::uint64_t> c(d + 1, 0);
  c[d] = 1;
  Mat m(d, std::vector<std::uint64_t>(d, 0));
  for (std::size_t k = 1; k <= d; ++k) {
    // m <- a m + c_{d-k+1} I
    Mat next(d, std::vector<std::uint64_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t t = 0; t < d; ++t) {
        if (a[i][t] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) next[i][j] = f.add(next[i][j], f.mul(a[i][t], m[t][j]));
      }
      next[i][i] = f.add(next[i][i], c[d - k + 1]);
    }
    m = std::move(next);
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t t = 0; t < d; ++t) trace = f.add(trace, f.mul(a[i][t], m[t][i]));
    }
    c[d - k] = f.sub(0, f.mul(trace, f.inv(k)));
  }
  return c;
}

std::vector<std::uint64_t> roots(const Mod& f, const std::vector<std::uint64_t>& poly) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < f.l; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, r), poly[i]);
    if (acc == 0) out.push_back(r);
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

}  // namespace

std::uint64_t auxiliary_prime(std::uint64_t e, std::uint64_t bound) {
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  std::uint64_t l = (bound / e) * e + 1;
  if (l <= bound || l < 2) l += e;
  while (!trial_prime(l)) l += e;
  return l;
}

ClassMatrixSystem class_multiplication_coefficients(const Group& h) {
  const auto& cd = h.classes();
  ClassMatrixSystem sys;
  sys.order = h.order();
  sys.exponent = h.exponent();
  sys.k = cd.count();
  const std::size_t k = sys.k;
  for (const auto& c : cd.classes) sys.class_sizes.push_back(c.size());
  sys.a.assign(k * k * k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    const auto z = cd.representatives[l];
    for (groups::ElemId x = 0; x < h.order(); ++x) {
      const std::size_t i = cd.class_of[x];
      const std::size_t j = cd.class_of[h.mul(h.inv(x), z)];
      ++sys.a[(i * k + j) * k + l];
    }
  }
  for (std::size_t i = 0; i < k; ++i) sys.inverse_class.push_back(cd.class_of[h.inv(cd.representatives[i])]);
  sys.ell = auxiliary_prime(sys.exponent, sys.order);

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t total = 0;
      for (std::size_t l = 0; l < k; ++l) total += std::uint64_t{sys.coefficient(i, j, l)} * sys.class_sizes[l];
      if (total != sys.class_sizes[i] * sys.class_sizes[j]) {
        throw Error(ErrorCode::VerificationFailed, "class multiplication coefficients miscounted");
      }
    }
  }
  // M_i M_j = M_j M_i: exactly over the integers for small k, otherwise on a
  // seeded random vector mod l.
  constexpr std::size_t kExactCommuteLimit = 32;
  if (k <= kExactCommuteLimit) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) {
            std::uint64_t lhs = 0, rhs = 0;
            for (std::size_t t = 0; t < k; ++t) {
              lhs += std::uint64_t{sys.coefficient(i, r, t)} * sys.coefficient(j, t, c);
              rhs += std::uint64_t{sys.coefficient(j, r, t)} * sys.coefficient(i, t, c);
            }
            if (lhs != rhs) throw Error(ErrorCode::VerificationFailed, "class matrices do not commute");
          }
        }
      }
    }
  } else {
    const Mod f{sys.ell};
    std::mt19937_64 rng(k);
    std::vector<std::uint64_t> v(k);
    for (auto& x : v) x = rng() % f.l;
    auto apply = [&](std::size_t i, const std::vector<std::uint64_t>& x) {
      std::vector<std::uint64_t> y(k, 0);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) y[r] = f.add(y[r], f.mul(sys.coefficient(i, r, c), x[c]));
      }
      return y;
    };
    std::vector<std::vector<std::uint64_t>> once;
    for (std::size_t i = 0; i < k; ++i) once.push_back(apply(i, v));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (apply(i, once[j]) != apply(j, once[i])) throw Error(ErrorCode::VerificationFailed, "class matrices do not commute");
      }
    }
  }
  return sys;
}

std::vector<CentralCharacter> central_characters(const ClassMatrixSystem& sys, std::uint64_t seed) {
  const Mod f{sys.ell};
  const std::size_t k = sys.k;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, f.l - 1);

  // Each space is a list of basis vectors in reduced form: vector t has a 1 at
  // pivot t and 0 at the other pivots, so restrictions read off pivot rows.
  struct Space {
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
  };
  auto make_space = [&](std::vector<std::vector<std::uint64_t>> vectors) {
    // Row-reduce the vectors (as rows) to get pivots.
    Space s;
    Mat m = std::move(vectors);
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < m.size(); ++c) {
      std::size_t piv = row;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[row]);
      const std::uint64_t inv = f.inv(m[row][c]);
      for (auto& v : m[row]) v = f.mul(v, inv);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == row || m[r][c] == 0) continue;
        const std::uint64_t t = m[r][c];
        for (std::size_t cc = 0; cc < k; ++cc) m[r][cc] = f.sub(m[r][cc], f.mul(t, m[row][cc]));
      }
      s.pivots.push_back(c);
      ++row;
    }
    m.resize(row);
    s.basis = std::move(m);
    return s;
  };

  std::vector<std::vector<std::uint64_t>> whole;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint64_t> e(k, 0);
    e[i] = 1;
    whole.push_back(std::move(e));
  }
  std::vector<Space> spaces{make_space(std::move(whole))};

  int failures = 0;
  while (std::any_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() > 1; })) {
    // M = sum_i c_i A_i with (A_i)_{jl} = a_{ijl}
    std::vector<std::uint64_t> coeffs(k);
    for (auto& c : coeffs) c = pick(rng);
    Mat m(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) m[j][l] = f.add(m[j][l], f.mul(coeffs[i], sys.coefficient(i, j, l)));
      }
    }

    bool progress = false;
    std::vector<Space> next;
    for (auto& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Images M b_t, and the restriction R with M B = B R read at pivot rows.
      Mat images(d, std::vector<std::uint64_t>(k, 0));
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t r = 0; r < k; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < k; ++c) acc = f.add(acc, f.mul(m[r][c], s.basis[t][c]));
          images[t][r] = acc;
        }
      }
      Mat restriction(d, std::vector<std::uint64_t>(d));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t t = 0; t < d; ++t) restriction[r][t] = images[t][s.pivots[r]];
      }
      const auto eigen = roots(f, char_poly(f, restriction));
      if (eigen.size() < 2) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t covered = 0;
      std::vector<Space> pieces;
      for (auto lambda : eigen) {
        Mat shifted = restriction;
        for (std::size_t r = 0; r < d; ++r) shifted[r][r] = f.sub(shifted[r][r], lambda);
        std::vector<std::vector<std::uint64_t>> vecs;
        for (const auto& c : null_space(f, shifted, d)) {
          std::vector<std::uint64_t> v(k, 0);
          for (std::size_t t = 0; t < d; ++t) {
            for (std::size_t r = 0; r < k; ++r) v[r] = f.add(v[r], f.mul(c[t], s.basis[t][r]));
          }
          vecs.push_back(std::move(v));
        }
        covered += vecs.size();
        pieces.push_back(make_space(std::move(vecs)));
      }
      if (covered != d) throw Error(ErrorCode::VerificationFailed, "class matrix combination is not diagonalizable");
      progress = true;
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
    if (!progress && ++failures >= kRetryBudget) {
      throw Error(ErrorCode::SplitFailure, "random class-matrix combinations did not separate the central characters");
    }
  }

  std::vector<CentralCharacter> out;
  for (const auto& s : spaces) {
    auto w = s.basis.front();
    if (w[0] == 0) throw Error(ErrorCode::VerificationFailed, "central character vanishes on the identity class");
    const std::uint64_t inv = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, inv);
    out.push_back(std::move(w));
  }
  if (out.size() != k) throw Error(ErrorCode::VerificationFailed, "character count differs from class count");
  for (const auto& w : out) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t rhs = 0;
        for (std::size_t l = 0; l < k; ++l) rhs = f.add(rhs, f.mul(sys.coefficient(i, j, l), w[l]));
        if (f.mul(w[i], w[j]) != rhs) throw Error(ErrorCode::VerificationFailed, "central character is not multiplicative");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> degrees(const ClassMatrixSystem& sys, const std::vector<CentralCharacter>& chars) {
  const Mod f{sys.ell};
  auto fail = [](const std::string& what) { throw Error(ErrorCode::DegreeRecoveryFailed, what); };
  std::vector<std::uint64_t> out;
  std::uint64_t sum_squares = 0;
  for (const auto& w : chars) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < sys.k; ++i) {
      s = f.add(s, f.mul(f.mul(w[i], w[sys.inverse_class[i]]), f.inv(sys.class_sizes[i] % f.l)));
    }
    if (s == 0) fail("orthogonality denominator vanishes");
    const std::uint64_t square = f.mul(sys.order % f.l, f.inv(s));
    const std::uint64_t r = isqrt(square);
    if (r * r != square || square > sys.order || r == 0) fail("lifted degree square " + std::to_string(square) + " is not a square <= |H|");
    if (sys.order % r != 0) fail("degree " + std::to_string(r) + " does not divide |H|");
    sum_squares += square;
    out.push_back(r);
  }
  if (sum_squares != sys.order) fail("sum of squared degrees differs from |H|");
  return out;
}

OracleResult defect_zero_count(const Group& h, std::uint32_t p, std::uint64_t seed) {
  if (!trial_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  const auto sys = class_multiplication_coefficients(h);
  const auto chars = central_characters(sys, seed);
  OracleResult out;
  out.ell = sys.ell;
  out.class_count = sys.k;
  out.degrees = degrees(sys, chars);
  const std::uint64_t target = p_part(sys.order, p);
  out.defect_zero = static_cast<std::size_t>(
      std::count_if(out.degrees.begin(), out.degrees.end(), [&](std::uint64_t d) { return p_part(d, p) == target; }));
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

}  // namespace defzero::charoracle
