#include "defzero/ffla.hpp"

#include <algorithm>
#include <numeric>

#include "defzero/error.hpp"

namespace defzero::ffla {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 20;

using Poly = std::vector<std::uint32_t>;  // low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * m[i]) % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly decode(std::uint64_t code, std::uint32_t p, unsigned m) {
  Poly c(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    c[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return c;
}

std::uint64_t encode(const Poly& c, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

struct Field::Tables {
  std::uint32_t p = 0;
  unsigned m = 1;
  std::uint64_t q = 0;
  Poly modulus;
  // Extension fields only: discrete logarithms to a primitive element.
  std::vector<std::uint32_t> exp;  // size 2(q-1)
  std::vector<std::uint32_t> log;  // size q, log[0] unused
};

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly_in) {
  Poly poly(poly_in.begin(), poly_in.end());
  trim(poly);
  if (poly.size() < 2 || poly.back() != 1) return false;
  const unsigned deg = static_cast<unsigned>(poly.size() - 1);
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor = decode(code, p, d);
      divisor.push_back(1);
      if (poly_mod(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

unsigned multiplicative_order(std::uint64_t p, std::uint64_t n) {
  if (n <= 1) return 1;
  if (std::gcd(p, n) != 1) throw Error(ErrorCode::InvalidArgument, "multiplicative_order: p and n not coprime");
  std::uint64_t x = p % n;
  unsigned k = 1;
  while (x != 1) {
    x = (x * p) % n;
    ++k;
  }
  return k;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = 1;
  t->q = p;
  t->modulus = {0, 1};
  return Field(std::move(t));
}

Field Field::extension(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  if (degree == 1) return prime(p);
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) {
    count *= p;
    if (count > kMaxFieldSize) throw Error(ErrorCode::InvalidArgument, "field GF(p^m) too large");
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly candidate = decode(code, p, degree);
    candidate.push_back(1);
    if (is_irreducible(p, candidate)) return with_modulus(p, candidate);
  }
  throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");  // unreachable
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic of positive degree");
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  if (m == 1) return prime(p);
  if (!is_irreducible(p, modulus)) throw Error(ErrorCode::InvalidArgument, "modulus is reducible");

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->modulus = modulus;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  if (q > kMaxFieldSize) throw Error(ErrorCode::InvalidArgument, "field GF(p^m) too large");
  t->q = q;

  // Find a primitive element by testing orders against the prime factors of q-1.
  const auto factors = prime_factors(q - 1);
  auto power = [&](const Poly& base, std::uint64_t e) {
    Poly result{1};
    Poly b = base;
    while (e > 0) {
      if (e & 1) result = poly_mulmod(result, b, modulus, p);
      b = poly_mulmod(b, b, modulus, p);
      e >>= 1;
    }
    return result;
  };
  Poly generator;
  for (std::uint64_t code = 2; code < q; ++code) {
    Poly g = poly_mod(decode(code, p, m), modulus, p);
    bool primitive = true;
    for (auto r : factors) {
      Poly x = power(g, (q - 1) / r);
      if (x.size() == 1 && x[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }

  t->exp.assign(2 * (q - 1), 0);
  t->log.assign(q, 0);
  Poly x{1};
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    Poly padded = x;
    padded.resize(m, 0);
    const auto code = static_cast<std::uint32_t>(encode(padded, p));
    t->exp[i] = code;
    t->exp[i + q - 1] = code;
    t->log[code] = static_cast<std::uint32_t>(i);
    x = poly_mulmod(x, generator, modulus, p);
  }
  return Field(std::move(t));
}

std::uint32_t Field::characteristic() const noexcept { return t_->p; }
unsigned Field::degree() const noexcept { return t_->m; }
std::uint64_t Field::size() const noexcept { return t_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return t_->modulus; }

Scalar Field::add(Scalar a, Scalar b) const {
  const auto p = t_->p;
  if (t_->m == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  if (p == 2) return a ^ b;
  Scalar out = 0;
  Scalar place = 1;
  for (unsigned i = 0; i < t_->m; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

Scalar Field::neg(Scalar a) const {
  const auto p = t_->p;
  if (t_->m == 1) return a == 0 ? 0 : p - a;
  if (p == 2) return a;
  Scalar out = 0;
  Scalar place = 1;
  for (unsigned i = 0; i < t_->m; ++i) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
  if (a == 0 || b == 0) return 0;
  if (t_->m == 1) return static_cast<Scalar>((std::uint64_t{a} * b) % t_->p);
  return t_->exp[t_->log[a] + t_->log[b]];
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "division by zero in finite field");
  if (t_->m == 1) return pow(a, t_->p - 2);
  const auto order = t_->q - 1;
  return t_->exp[(order - t_->log[a]) % order];
}

Scalar Field::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Scalar Field::frobenius(Scalar a, unsigned k) const {
  k %= t_->m;
  for (unsigned i = 0; i < k; ++i) a = pow(a, t_->p);
  return a;
}

Scalar Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(t_->p);
  return static_cast<Scalar>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::coefficients(Scalar a) const { return decode(a, t_->p, t_->m); }

Scalar Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > t_->m) throw Error(ErrorCode::InvalidArgument, "too many coefficients for field element");
  Poly c(coeffs.begin(), coeffs.end());
  for (auto& x : c) x %= t_->p;
  return static_cast<Scalar>(encode(c, t_->p));
}

bool operator==(const Field& a, const Field& b) noexcept {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
}

// ---------------------------------------------------------------------------

Vector add(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vector sub(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vector scale(const Field& f, Scalar c, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

void axpy(const Field& f, Vector& a, Scalar c, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) a[i] = f.add(a[i], f.mul(c, b[i]));
  }
}

bool is_zero(const Vector& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

Scalar dot(const Field& f, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s = f.add(s, f.mul(a[i], b[i]));
  }
  return s;
}

}  // namespace defzero::ffla
