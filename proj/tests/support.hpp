#pragma once

// Naive reference computations shared by the unit tests. Everything here is
// deliberately slow and independent of the library's own algorithms.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "defzero/ffla.hpp"
#include "defzero/permgroup.hpp"

#ifndef DEFZERO_SOURCE_DIR
#define DEFZERO_SOURCE_DIR "."
#endif

namespace support {

using defzero::ffla::Field;
using defzero::ffla::Vector;

inline std::string source_path(const std::string& rel) { return std::string(DEFZERO_SOURCE_DIR) + "/" + rel; }

// Number of vectors in the span over GF(q), by closure. Only for tiny spaces.
inline std::size_t span_size(const Field& f, const std::vector<Vector>& gens, std::size_t n) {
  std::set<Vector> seen{Vector(n, 0)};
  std::vector<Vector> frontier{Vector(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        Vector w = defzero::ffla::add(f, v, g);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline std::size_t log_base(std::uint64_t q, std::size_t n) {
  std::size_t k = 0;
  while (n > 1) {
    n /= q;
    ++k;
  }
  return k;
}

inline Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.size() - 1);
  Vector v(n);
  for (auto& x : v) x = static_cast<defzero::ffla::Scalar>(d(rng));
  return v;
}

// Permutations as plain image vectors, composed right to left.
using Images = std::vector<std::uint32_t>;

inline Images compose(const Images& a, const Images& b) {
  Images out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

inline Images invert(const Images& a) {
  Images out(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) out[a[i]] = i;
  return out;
}

inline std::set<Images> closure(const std::vector<Images>& gens, std::size_t degree) {
  Images id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Images y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::uint64_t perm_order(const Images& a) {
  Images id(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) id[i] = i;
  Images x = a;
  std::uint64_t k = 1;
  while (x != id) {
    x = compose(x, a);
    ++k;
  }
  return k;
}

// Conjugacy class sizes of a permutation group, sorted ascending.
inline std::multiset<std::size_t> class_sizes(const std::set<Images>& g) {
  std::set<Images> done;
  std::multiset<std::size_t> out;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::set<Images> cls;
    for (const auto& y : g) cls.insert(compose(compose(y, x), invert(y)));
    done.insert(cls.begin(), cls.end());
    out.insert(cls.size());
  }
  return out;
}

inline std::vector<Images> generator_images(const std::vector<defzero::groups::Perm>& perms) {
  std::vector<Images> out;
  for (const auto& p : perms) out.push_back(p.images());
  return out;
}

}  // namespace support
